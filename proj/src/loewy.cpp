#include "loewy/loewy.hpp"

#include <stdexcept>

namespace loewy {

namespace {

void require_index(const BlockContext& ctx, int i) {
  if (i < 0 || i > ctx.n()) {
    throw std::out_of_range("block index " + std::to_string(i) + " out of range [0," +
                            std::to_string(ctx.n()) + "]");
  }
}

void require_rank(const BlockContext& ctx, const Weight& nu) {
  if (nu.rank() != ctx.n()) throw std::invalid_argument("translation weight has wrong rank");
}

void collect_subsets(int lo, int hi, int k, std::vector<int>& current,
                     std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == k) {
    out.push_back(current);
    return;
  }
  for (int v = lo; v <= hi; ++v) {
    current.push_back(v);
    collect_subsets(v + 1, hi, k, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> subsets_of_size(int lo, int hi, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > std::max(0, hi - lo + 1)) return out;
  std::vector<int> current;
  collect_subsets(lo, hi, k, current, out);
  return out;
}

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

LayerDecomposition rad_layers_Z_g1(const BlockContext& ctx, int i) {
  require_index(ctx, i);
  const int n = ctx.n();
  LayerDecomposition out;
  for (int j = 0; j <= n; ++j) {
    for (int k = 0; k <= i; ++k) {
      const Integer mult = binomial(i, k) * binomial(n - i, j - k);
      if (mult == 0) continue;
      out.add(static_cast<std::size_t>(j), ctx.label(i + j - 2 * k), mult.convert_to<Multiplicity>());
    }
  }
  return out;
}

LabelMultiset rad_layer_Z_g1t(const BlockContext& ctx, int i, const Weight& nu, int j) {
  require_index(ctx, i);
  require_rank(ctx, nu);
  const int n = ctx.n();
  const Integer p = ctx.p();
  LabelMultiset layer;
  for (int k = 0; k <= std::min(i, j); ++k) {
    const int target = i + j - 2 * k;
    if (target < 0 || target > n) continue;
    const auto xs = subsets_of_size(1, i, k);
    const auto ys = subsets_of_size(i + 2, n + 1, j - k);
    for (const auto& x : xs) {
      const Weight shift_x = eps_subset(n, std::span<const int>(x));
      for (const auto& y : ys) {
        const Weight w =
            ctx.lambda(target) + p * nu - p * shift_x + p * eps_subset(n, std::span<const int>(y));
        auto label = classify(ctx, w);
        if (!label || label->index != target) {
          throw std::logic_error("rad_layer_Z_g1t: factor " + w.to_string() + " left the block");
        }
        if (!layer.emplace(std::move(*label), 1).second) {
          throw std::logic_error("rad_layer_Z_g1t: repeated factor for distinct (X, Y)");
        }
      }
    }
  }
  return layer;
}

LayerDecomposition rad_layers_Z_g1t(const BlockContext& ctx, int i, const Weight& nu) {
  std::vector<LabelMultiset> layers;
  for (int j = 0; j <= ctx.n(); ++j) layers.push_back(rad_layer_Z_g1t(ctx, i, nu, j));
  return LayerDecomposition(std::move(layers));
}

LabelMultiset rad1_Z_formula(const BlockContext& ctx, int i, const Weight& nu) {
  require_index(ctx, i);
  require_rank(ctx, nu);
  const int n = ctx.n();
  auto w = [n](int k) { return Weight::fundamental(n, k); };
  LabelMultiset out;
  for (int k = 1; k <= i; ++k) out[ctx.label(i - 1, nu - w(k) + w(k - 1))] += 1;
  for (int k = 1; k <= n - i; ++k) out[ctx.label(i + 1, nu - w(n + 1 - k) + w(n + 2 - k))] += 1;
  return out;
}

LayerDecomposition soc_layers_Z_g1t(const BlockContext& ctx, int i, const Weight& nu) {
  const int n = ctx.n();
  std::vector<LabelMultiset> layers;
  for (int j = 1; j <= n + 1; ++j) layers.push_back(rad_layer_Z_g1t(ctx, i, nu, n + 1 - j));
  return LayerDecomposition(std::move(layers));
}

LayerDecomposition rad_layers_Zprime_g1t(const BlockContext& ctx, int i, const Weight& nu) {
  return rad_layers_Z_g1t(ctx, i, nu).reversed();
}

ClassVector composition_class_Z(const BlockContext& ctx, int i, const Weight& nu) {
  return class_of(rad_layers_Z_g1t(ctx, i, nu));
}

LayerDecomposition parabolic_M_structure(const BlockContext& ctx, int i, const Weight& nu,
                                         ParabolicSide side) {
  require_index(ctx, i);
  require_rank(ctx, nu);
  const int n = ctx.n();
  if (side == ParabolicSide::I && i == n) return rad_layers_Z_g1t(ctx, n, nu);
  if (side == ParabolicSide::J && i == 0) return rad_layers_Z_g1t(ctx, 0, nu);
  LayerDecomposition out;
  out.add(0, ctx.label(i, nu));
  if (side == ParabolicSide::I) {
    out.add(1, ctx.label(i + 1, nu - Weight::fundamental(n, n)));
  } else {
    out.add(1, ctx.label(i - 1, nu - Weight::fundamental(n, 1)));
  }
  return out;
}

}  // namespace loewy
