#pragma once

// First extension groups between block irreducibles.
//
// Over G_1, Ext^1(L(lambda_i), L(lambda_j)) is the Frobenius twist of the
// natural module V when i = j+1, of V* when i = j-1, and zero otherwise.  Over
// G_1 T the dimension of Ext^1(L^(lambda_i + p eta), L^(lambda_j + p eta')) is
// the multiplicity of eta - eta' as a weight of that G-module.

#include <vector>

#include "loewy/layers.hpp"

namespace loewy {

enum class ExtKind { Zero, StandardV, DualV };

const char* to_string(ExtKind kind);

struct ExtDescriptor {
  ExtKind kind = ExtKind::Zero;
  int rank = 0;

  // Weights of the module with multiplicity (each 1; V is minuscule).
  std::vector<Weight> weights() const;
  int weight_multiplicity(const Weight& w) const;
};

ExtDescriptor ext1_g1(const BlockContext& ctx, int i, int j);

int ext1_g1t_dim(const BlockContext& ctx, const IrreducibleLabel& a, const IrreducibleLabel& b);

/// First radical layer of the projective cover Q^(lambda_i + p nu):
///   L^(lambda_{i-1} - p w_k + p w_{k-1})          for k = 1..n+1 (if i > 0),
///   L^(lambda_{i+1} - p w_{n+1-k} + p w_{n+2-k})  for k = 1..n+1 (if i < n),
/// with w_0 = w_{n+1} = 0.
LabelMultiset rad1_Qhat(const BlockContext& ctx, int i, const Weight& nu);

}  // namespace loewy
