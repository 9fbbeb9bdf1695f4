#pragma once

// Closed-form radical and socle series of the baby Verma modules Z^(lambda_i + p nu),
// their duals Z'^, and the parabolic modules M^_I, M^_J of the block.

#include <vector>

#include "loewy/chardim.hpp"
#include "loewy/layers.hpp"

namespace loewy {

/// All k-element subsets of {lo, ..., hi}, each sorted, in lexicographic order.
std::vector<std::vector<int>> subsets_of_size(int lo, int hi, int k);

Integer binomial(int n, int k);

/// Radical layers of the G_1-module Z(lambda_i); labels carry nu = 0.
/// Layer j holds L(lambda_{i+j-2k}) with multiplicity C(i,k) C(n-i,j-k).
LayerDecomposition rad_layers_Z_g1(const BlockContext& ctx, int i);

/// Layer j of Z^(lambda_i + p nu): one factor
/// L^(lambda_{i+j-2k} + p nu - p eps_X + p eps_Y) for every X in [1,i] of
/// size k and Y in [i+2,n+1] of size j-k.
LabelMultiset rad_layer_Z_g1t(const BlockContext& ctx, int i, const Weight& nu, int j);

LayerDecomposition rad_layers_Z_g1t(const BlockContext& ctx, int i, const Weight& nu);

/// Layer 1 of Z^(lambda_i + p nu) written over fundamental weights:
///   L^(lambda_{i-1} - p w_k + p w_{k-1})          for k = 1..i,
///   L^(lambda_{i+1} - p w_{n+1-k} + p w_{n+2-k})  for k = 1..n-i,
/// with w_0 = w_{n+1} = 0.
LabelMultiset rad1_Z_formula(const BlockContext& ctx, int i, const Weight& nu);

/// Socle layers of Z^(lambda_i + p nu); entry j-1 of the result is soc_j,
/// which equals rad_{n+1-j}.
LayerDecomposition soc_layers_Z_g1t(const BlockContext& ctx, int i, const Weight& nu);

/// Radical layers of the dual baby Verma Z'^(lambda_i + p nu):
/// rad_j Z'^ = rad_{n-j} Z^.
LayerDecomposition rad_layers_Zprime_g1t(const BlockContext& ctx, int i, const Weight& nu);

/// Composition factors of Z^(lambda_i + p nu) with multiplicity.
ClassVector composition_class_Z(const BlockContext& ctx, int i, const Weight& nu);

/// M^_I(lambda_i + p nu) for i < n has head L^(lambda_i + p nu) and radical
/// L^(lambda_{i+1} + p nu - p w_n); M^_I(lambda_n + p nu) is the full baby
/// Verma.  Side J mirrors this with -p w_1 and i = 0 as the Verma case.
LayerDecomposition parabolic_M_structure(const BlockContext& ctx, int i, const Weight& nu,
                                         ParabolicSide side);

}  // namespace loewy
