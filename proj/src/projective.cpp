#include "loewy/projective.hpp"

#include <algorithm>
#include <stdexcept>

#include "loewy/loewy.hpp"
#include "loewy/parallel.hpp"

namespace loewy {

std::vector<VermaSupportEntry> verma_support(const BlockContext& ctx, int i, const Weight& nu) {
  const int n = ctx.n();
  if (i < 0 || i > n) throw std::out_of_range("verma_support: block index out of range");
  if (nu.rank() != n) throw std::invalid_argument("verma_support: translation has wrong rank");
  // L^(lambda_i + p nu) = L^(lambda_{t+k-2x} + p eta - p eps_X + p eps_Y) in layer k
  // of Z^(lambda_t + p eta) iff t + k - 2x = i, so eta = nu + eps_X - eps_Y.
  std::vector<VermaSupportEntry> out;
  for (int t = 0; t <= n; ++t) {
    for (int x = 0; x <= t; ++x) {
      const int k = i - t + 2 * x;
      const int y = k - x;
      if (k < 0 || y < 0 || y > n - t) continue;
      for (const auto& xs : subsets_of_size(1, t, x)) {
        const Weight plus = eps_subset(n, std::span<const int>(xs));
        for (const auto& ys : subsets_of_size(t + 2, n + 1, y)) {
          out.push_back({ctx.label(t, nu + plus - eps_subset(n, std::span<const int>(ys))), k, 1});
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const VermaSupportEntry& a, const VermaSupportEntry& b) {
    if (a.verma != b.verma) return a.verma < b.verma;
    return a.layer < b.layer;
  });
  return out;
}

ProjectiveLayers rad_layers_Qhat(const BlockContext& ctx, int i, const Weight& nu) {
  const auto support = verma_support(ctx, i, nu);
  const auto vermas = parallel_map<LayerDecomposition>(support.size(), [&](std::size_t idx) {
    return rad_layers_Z_g1t(ctx, support[idx].verma.index, support[idx].verma.nu);
  });
  ProjectiveLayers out;
  for (std::size_t idx = 0; idx < support.size(); ++idx) {
    const auto& entry = support[idx];
    const auto& verma = vermas[idx];
    for (std::size_t j = 0; j < verma.size(); ++j) {
      for (const auto& [label, mult] : verma.layer(j)) {
        out.layers.add(static_cast<std::size_t>(entry.layer) + j, label, entry.mult * mult);
      }
    }
  }
  return out;
}

Multiplicity bgg_multiplicity(const BlockContext& ctx, const IrreducibleLabel& q,
                              const IrreducibleLabel& z) {
  Multiplicity total = 0;
  for (const auto& entry : verma_support(ctx, q.index, q.nu)) {
    if (entry.verma == z) total += entry.mult;
  }
  return total;
}

Integer q_composition_mult_g1(const BlockContext& ctx, int i, int j) {
  const int n = ctx.n();
  if (i < 0 || i > n || j < 0 || j > n) {
    throw std::out_of_range("q_composition_mult_g1: block index out of range");
  }
  return Integer(n + 1) * binomial(n, i) * binomial(n, j);
}

}  // namespace loewy
