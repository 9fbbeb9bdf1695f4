#pragma once

// The singular block of G_1 T-modules for SL(n+1) whose G_1-irreducibles are
// L(lambda_0), ..., L(lambda_n), together with the canonical naming of its
// G_1 T-irreducibles L^(lambda_i + p nu) by pairs (i, nu).

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "loewy/lattice.hpp"

namespace loewy {

// Raised when (n, p) violates a standing hypothesis.  The message names the
// hypothesis ("p > 2", "very good prime", ...).
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool is_prime(long p);

struct IrreducibleLabel {
  int index = 0;  // i in [0, n]
  Weight nu;      // translation; names L^(lambda_i + p nu)

  friend bool operator==(const IrreducibleLabel&, const IrreducibleLabel&) = default;
  friend std::strong_ordering operator<=>(const IrreducibleLabel& a, const IrreducibleLabel& b) {
    if (auto c = a.index <=> b.index; c != 0) return c;
    return a.nu <=> b.nu;
  }
  std::string to_string() const;
};

class BlockContext {
 public:
  // Throws HypothesisError unless n >= 1, p is an odd prime and p does not
  // divide n+1.
  BlockContext(int n, long p);

  int n() const { return n_; }
  long p() const { return p_; }
  const Weight& lambda(int i) const;
  const std::vector<Weight>& lambdas() const { return lambdas_; }
  const Weight& rho() const { return rho_; }

  // lambda_i + p nu.
  Weight weight_of(const IrreducibleLabel& label) const;
  IrreducibleLabel label(int i, Weight nu) const;
  IrreducibleLabel label(int i) const { return label(i, Weight::zero(n_)); }

 private:
  int n_;
  long p_;
  std::vector<Weight> lambdas_;
  Weight rho_;
};

BlockContext make_context(int n, long p);

// lambda_i^a for 1 <= a <= p-1; lambda_i^1 = lambda_i.
Weight lambda_a(const BlockContext& ctx, int i, int a);

// mu_i = eps_{i+1} - rho.
Weight mu_i(const BlockContext& ctx, int i);

std::optional<IrreducibleLabel> classify(const BlockContext& ctx, const Weight& w);

}  // namespace loewy
