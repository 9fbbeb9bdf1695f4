#include "loewy/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace loewy {

namespace {

void require_same_rank(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) {
    throw std::invalid_argument("weight rank mismatch: " + std::to_string(a.rank()) +
                                " vs " + std::to_string(b.rank()));
  }
}

void require_rank(int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
}

}  // namespace

Weight::Weight(std::vector<Integer> coords) : coords_(std::move(coords)) {}

Weight::Weight(std::initializer_list<long long> coords) {
  coords_.reserve(coords.size());
  for (long long c : coords) coords_.emplace_back(c);
}

Weight Weight::zero(int rank) {
  require_rank(rank);
  return Weight(std::vector<Integer>(static_cast<std::size_t>(rank)));
}

Weight Weight::fundamental(int rank, int i) {
  require_rank(rank);
  if (i < 0 || i > rank + 1) {
    throw std::invalid_argument("fundamental weight index out of range");
  }
  Weight w = zero(rank);
  if (i >= 1 && i <= rank) w.coords_[static_cast<std::size_t>(i - 1)] = 1;
  return w;
}

Weight Weight::simple_root(int rank, int i) {
  require_rank(rank);
  if (i < 1 || i > rank) throw std::invalid_argument("simple root index out of range");
  Weight w = zero(rank);
  // Column i of the type A Cartan matrix.
  const auto idx = static_cast<std::size_t>(i - 1);
  w.coords_[idx] = 2;
  if (i > 1) w.coords_[idx - 1] = -1;
  if (i < rank) w.coords_[idx + 1] = -1;
  return w;
}

bool Weight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
}

Weight& Weight::operator+=(const Weight& other) {
  require_same_rank(*this, other);
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += other.coords_[k];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  require_same_rank(*this, other);
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= other.coords_[k];
  return *this;
}

Weight& Weight::operator*=(const Integer& scalar) {
  for (auto& c : coords_) c *= scalar;
  return *this;
}

Weight Weight::operator-() const {
  Weight out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
  if (auto cmp = a.rank() <=> b.rank(); cmp != 0) return cmp;
  for (std::size_t k = 0; k < a.coords_.size(); ++k) {
    if (a.coords_[k] < b.coords_[k]) return std::strong_ordering::less;
    if (b.coords_[k] < a.coords_[k]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string Weight::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (k) os << ',';
    os << coords_[k];
  }
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.to_string(); }

bool RootCoords::integral() const {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](const Rational& q) { return denominator(q) == 1; });
}

bool RootCoords::nonnegative() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& q) { return q >= 0; });
}

Weight from_eps(int rank, std::span<const Integer> eps_coeffs) {
  require_rank(rank);
  if (eps_coeffs.size() != static_cast<std::size_t>(rank) + 1) {
    throw std::invalid_argument("expected " + std::to_string(rank + 1) +
                                " epsilon coefficients, got " +
                                std::to_string(eps_coeffs.size()));
  }
  std::vector<Integer> coords(static_cast<std::size_t>(rank));
  for (std::size_t k = 0; k < coords.size(); ++k) coords[k] = eps_coeffs[k] - eps_coeffs[k + 1];
  return Weight(std::move(coords));
}

Weight from_eps(int rank, std::initializer_list<long long> eps_coeffs) {
  std::vector<Integer> v(eps_coeffs.begin(), eps_coeffs.end());
  return from_eps(rank, std::span<const Integer>(v));
}

std::vector<Integer> to_eps(const Weight& w) {
  const auto n = static_cast<std::size_t>(w.rank());
  std::vector<Integer> e(n + 1);
  for (std::size_t k = n; k-- > 0;) e[k] = e[k + 1] + w[k];
  return e;
}

Weight rho(int rank) {
  require_rank(rank);
  return Weight(std::vector<Integer>(static_cast<std::size_t>(rank), Integer(1)));
}

Integer pair(const Weight& w, int k, int j) {
  if (k < 1 || j > w.rank() + 1 || k >= j) {
    throw std::invalid_argument("pair: need 1 <= k < j <= n+1, got (" + std::to_string(k) +
                                "," + std::to_string(j) + ")");
  }
  Integer sum = 0;
  for (int m = k; m < j; ++m) sum += w[static_cast<std::size_t>(m - 1)];
  return sum;
}

RootCoords root_coords(const Weight& w) {
  // (C^{-1})_{ab} = min(a,b) (n+1-max(a,b)) / (n+1) for type A_n.
  const int n = w.rank();
  RootCoords rc;
  rc.coeffs.reserve(static_cast<std::size_t>(n));
  for (int a = 1; a <= n; ++a) {
    Integer num = 0;
    for (int b = 1; b <= n; ++b) {
      num += Integer(std::min(a, b)) * Integer(n + 1 - std::max(a, b)) *
             w[static_cast<std::size_t>(b - 1)];
    }
    rc.coeffs.emplace_back(num, Integer(n + 1));
  }
  return rc;
}

bool leq(const Weight& lambda, const Weight& mu) {
  require_same_rank(lambda, mu);
  const RootCoords rc = root_coords(mu - lambda);
  return rc.integral() && rc.nonnegative();
}

bool is_dominant(const Weight& w) {
  return std::all_of(w.coords().begin(), w.coords().end(),
                     [](const Integer& c) { return c >= 0; });
}

bool is_restricted(const Weight& w, long p) {
  return std::all_of(w.coords().begin(), w.coords().end(),
                     [p](const Integer& c) { return c >= 0 && c < p; });
}

Integer floor_mod(const Integer& a, const Integer& b) {
  Integer r = a % b;
  if (r < 0) r += (b < 0 ? -b : b);
  return r;
}

Integer floor_div(const Integer& a, const Integer& b) { return (a - floor_mod(a, b)) / b; }

RestrictedDecomposition restricted_decompose(const Weight& w, long p) {
  if (p < 2) throw std::invalid_argument("restricted_decompose: p must be >= 2");
  const Integer pp = p;
  std::vector<Integer> mu, nu;
  mu.reserve(w.coords().size());
  nu.reserve(w.coords().size());
  for (const auto& c : w.coords()) {
    mu.push_back(floor_mod(c, pp));
    nu.push_back(floor_div(c, pp));
  }
  return {Weight(std::move(mu)), Weight(std::move(nu))};
}

Weight eps_subset(int rank, std::span<const int> subset) {
  require_rank(rank);
  std::vector<Integer> e(static_cast<std::size_t>(rank) + 1);
  for (int k : subset) {
    if (k < 1 || k > rank + 1) {
      throw std::invalid_argument("eps_subset: index " + std::to_string(k) + " out of range");
    }
    e[static_cast<std::size_t>(k - 1)] += 1;
  }
  return from_eps(rank, std::span<const Integer>(e));
}

Weight eps_subset(int rank, std::initializer_list<int> subset) {
  return eps_subset(rank, std::span<const int>(subset.begin(), subset.size()));
}

Weight lambda_zero_dual(const Weight& w, long p) {
  // w_0 sends w_i to -w_{n+1-i}.
  const auto n = w.coords().size();
  std::vector<Integer> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = Integer(2 * (p - 1)) - w[n - 1 - k];
  return Weight(std::move(out));
}

}  // namespace loewy
