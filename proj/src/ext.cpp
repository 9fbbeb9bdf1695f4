#include "loewy/ext.hpp"

#include <algorithm>
#include <stdexcept>

namespace loewy {

const char* to_string(ExtKind kind) {
  switch (kind) {
    case ExtKind::StandardV: return "V";
    case ExtKind::DualV: return "V*";
    case ExtKind::Zero: break;
  }
  return "0";
}

std::vector<Weight> ExtDescriptor::weights() const {
  std::vector<Weight> out;
  if (kind == ExtKind::Zero) return out;
  for (int k = 1; k <= rank + 1; ++k) {
    Weight e = eps_subset(rank, {k});
    out.push_back(kind == ExtKind::StandardV ? e : -e);
  }
  return out;
}

int ExtDescriptor::weight_multiplicity(const Weight& w) const {
  const auto ws = weights();
  return static_cast<int>(std::count(ws.begin(), ws.end(), w));
}

ExtDescriptor ext1_g1(const BlockContext& ctx, int i, int j) {
  if (i < 0 || i > ctx.n() || j < 0 || j > ctx.n()) {
    throw std::out_of_range("ext1_g1: block index out of range");
  }
  ExtDescriptor d;
  d.rank = ctx.n();
  if (i == j + 1) {
    d.kind = ExtKind::StandardV;
  } else if (i + 1 == j) {
    d.kind = ExtKind::DualV;
  }
  return d;
}

int ext1_g1t_dim(const BlockContext& ctx, const IrreducibleLabel& a, const IrreducibleLabel& b) {
  return ext1_g1(ctx, a.index, b.index).weight_multiplicity(a.nu - b.nu);
}

LabelMultiset rad1_Qhat(const BlockContext& ctx, int i, const Weight& nu) {
  const int n = ctx.n();
  if (i < 0 || i > n) throw std::out_of_range("rad1_Qhat: block index out of range");
  auto w = [n](int k) { return Weight::fundamental(n, k); };
  LabelMultiset out;
  for (int k = 1; k <= n + 1; ++k) {
    if (i > 0) out[ctx.label(i - 1, nu - w(k) + w(k - 1))] += 1;
    if (i < n) out[ctx.label(i + 1, nu - w(n + 1 - k) + w(n + 2 - k))] += 1;
  }
  return out;
}

}  // namespace loewy
