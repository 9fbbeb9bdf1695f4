#pragma once

// Radical layers of the projective covers Q^(lambda_i + p nu), obtained by
// convolving baby Verma radical layers:
//
//   [rad_j Q^(L)] = sum_mu sum_{k<=j} [rad_k Z^(mu) : L] [rad_{j-k} Z^(mu)].
//
// The formula presumes that Q^(lambda_i + p nu) has Loewy length 2n+1, which
// is known only for very large p; every result carries that flag.

#include <vector>

#include "loewy/layers.hpp"

namespace loewy {

struct VermaSupportEntry {
  IrreducibleLabel verma;  // names Z^(lambda_t + p eta)
  int layer = 0;           // k with [rad_k Z^(lambda_t + p eta) : L] = mult
  Multiplicity mult = 0;
  friend bool operator==(const VermaSupportEntry&, const VermaSupportEntry&) = default;
};

/// Every baby Verma with L^(lambda_i + p nu) in some radical layer, sorted by
/// (verma, layer).  Finite: obtained by inverting the Verma layer formula.
std::vector<VermaSupportEntry> verma_support(const BlockContext& ctx, int i, const Weight& nu);

struct ProjectiveLayers {
  LayerDecomposition layers;
  bool conditional_on_loewy_length_conjecture = true;
};

ProjectiveLayers rad_layers_Qhat(const BlockContext& ctx, int i, const Weight& nu);

/// [Q^(q) : Z^(z)] = [Z^(z) : L^(q)] (BGG reciprocity).
Multiplicity bgg_multiplicity(const BlockContext& ctx, const IrreducibleLabel& q,
                              const IrreducibleLabel& z);

/// [Q(lambda_i) : L(lambda_j)] over G_1, i.e. (n+1) C(n,i) C(n,j).
Integer q_composition_mult_g1(const BlockContext& ctx, int i, int j);

}  // namespace loewy
