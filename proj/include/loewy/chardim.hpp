#pragma once

// Dimensions of block irreducibles and parabolic modules, and certificates
// for the Jantzen simplicity criterion applied to the Weyl modules V(lambda_i).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "loewy/block.hpp"

namespace loewy {

enum class ParabolicSide { I, J };

const char* to_string(ParabolicSide side);

/// Weyl's dimension formula.  Throws std::invalid_argument on non-dominant
/// input.
Integer weyl_dim(const Weight& lambda);

/// Dimension of the G_1-module M_I(lambda_i) (resp. M_J): p^n times the Levi
/// Weyl numerator of nu_i = lambda_i + rho over the Levi denominator.
Integer dim_M(const BlockContext& ctx, int i, ParabolicSide side);

/// dim M_I(lambda_i) == dim L(lambda_i) + dim L(lambda_{i+1}) for 0 <= i < n,
/// dim M_J(lambda_i) == dim L(lambda_i) + dim L(lambda_{i-1}) for 0 < i <= n.
/// Throws std::out_of_range for indices outside those ranges.
bool verify_dim_identity(const BlockContext& ctx, int i, ParabolicSide side);

/// m = a p^s + b p^{s+1} with 0 < a < p and s the p-adic valuation of m.
struct JantzenDecomposition {
  Integer m;
  int s = 0;
  Integer a;
  Integer b;
  friend bool operator==(const JantzenDecomposition&, const JantzenDecomposition&) = default;
};

JantzenDecomposition jantzen_decompose(const Integer& m, long p);

/// Positive root eps_k - eps_j, k < j.
struct RootPair {
  int k = 0;
  int j = 0;
  friend auto operator<=>(const RootPair&, const RootPair&) = default;
};

std::vector<RootPair> positive_roots(int rank);

struct WitnessCertificate {
  RootPair root;
  JantzenDecomposition decomposition;
  RootPair beta0;
  std::vector<RootPair> betas;
};

/// Searches for beta_0 with <nu, beta_0^vee> = a p^s and b further distinct
/// roots with pairing p^{s+1}.  The queried root is tried first for beta_0,
/// then all positive roots in lexicographic order; the betas are taken in
/// lexicographic order.
std::optional<WitnessCertificate> witness_search(const Weight& nu, RootPair root, long p);

/// Re-checks every pairing and distinctness condition of a certificate.
bool certificate_valid(const Weight& nu, const WitnessCertificate& cert, long p);

/// The explicit certificate constructions used to prove simplicity of the
/// V(lambda_i), one per sub-case ("1.1", ..., "3.5a", "3.5b").
struct CaseConstruction {
  std::string sub_case;
  WitnessCertificate certificate;
};

CaseConstruction explicit_witness(const BlockContext& ctx, int i, RootPair root);

struct SimplicityFailure {
  int index = 0;
  RootPair root;
  std::string reason;
};

struct CaseReplay {
  int index = 0;
  std::string sub_case;
  WitnessCertificate certificate;
  bool valid = false;
};

struct SimplicityReport {
  int n = 0;
  long p = 0;
  std::vector<WitnessCertificate> certificates;  // one per (i, root), sorted
  std::vector<int> certificate_index;            // block index of each certificate
  std::vector<SimplicityFailure> failures;
  std::vector<CaseReplay> replays;

  bool ok() const;
};

SimplicityReport check_block_simplicity(const BlockContext& ctx);

}  // namespace loewy
