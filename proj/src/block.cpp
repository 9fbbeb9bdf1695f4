#include "loewy/block.hpp"

namespace loewy {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::string IrreducibleLabel::to_string() const {
  return "(" + std::to_string(index) + ", " + nu.to_string() + ")";
}

BlockContext::BlockContext(int n, long p) : n_(n), p_(p) {
  if (n < 1) throw HypothesisError("rank n must be >= 1");
  if (p <= 2) throw HypothesisError("p > 2 required (got p=" + std::to_string(p) + ")");
  if (!is_prime(p)) throw HypothesisError("p must be prime (got p=" + std::to_string(p) + ")");
  if ((n + 1) % p == 0) {
    throw HypothesisError("very good prime required: p=" + std::to_string(p) +
                          " divides n+1=" + std::to_string(n + 1));
  }
  rho_ = loewy::rho(n);
  lambdas_.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) lambdas_.push_back(lambda_a(*this, i, 1));
}

const Weight& BlockContext::lambda(int i) const {
  if (i < 0 || i > n_) throw std::out_of_range("block index " + std::to_string(i) + " out of range");
  return lambdas_[static_cast<std::size_t>(i)];
}

Weight BlockContext::weight_of(const IrreducibleLabel& label) const {
  return lambda(label.index) + Integer(p_) * label.nu;
}

IrreducibleLabel BlockContext::label(int i, Weight nu) const {
  if (i < 0 || i > n_) throw std::out_of_range("block index " + std::to_string(i) + " out of range");
  if (nu.rank() != n_) throw std::invalid_argument("label: translation has wrong rank");
  return {i, std::move(nu)};
}

BlockContext make_context(int n, long p) { return BlockContext(n, p); }

Weight lambda_a(const BlockContext& ctx, int i, int a) {
  const int n = ctx.n();
  const long p = ctx.p();
  if (a < 1 || a > p - 1) throw std::invalid_argument("lambda_a: need 1 <= a <= p-1");
  if (i < 0 || i > n) throw std::out_of_range("lambda_a: index out of range");
  std::vector<Integer> c(static_cast<std::size_t>(n), Integer(p - 1));
  if (i == 0) {
    c[0] = a - 1;
  } else if (i == n) {
    c[static_cast<std::size_t>(n - 1)] = p - a - 1;
  } else {
    c[static_cast<std::size_t>(i - 1)] = p - a - 1;
    c[static_cast<std::size_t>(i)] = a - 1;
  }
  return Weight(std::move(c));
}

Weight mu_i(const BlockContext& ctx, int i) {
  if (i < 0 || i > ctx.n()) throw std::out_of_range("mu_i: index out of range");
  return eps_subset(ctx.n(), {i + 1}) - ctx.rho();
}

std::optional<IrreducibleLabel> classify(const BlockContext& ctx, const Weight& w) {
  auto [restricted, translation] = restricted_decompose(w, ctx.p());
  for (int i = 0; i <= ctx.n(); ++i) {
    if (restricted == ctx.lambda(i)) return IrreducibleLabel{i, std::move(translation)};
  }
  return std::nullopt;
}

}  // namespace loewy
