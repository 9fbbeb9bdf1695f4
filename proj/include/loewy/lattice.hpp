#pragma once

// Weight lattice of SL(n+1).
//
// Weights are stored in the fundamental-weight basis: a Weight of rank n is
// the integer vector (a_1, ..., a_n) with lambda = sum a_i w_i.  The
// epsilon-basis is only used for construction and for the permutation action
// of the Weyl group; eps_i = w_i - w_{i-1} with w_0 = w_{n+1} = 0.

#include <compare>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace loewy {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<Integer> coords);
  Weight(std::initializer_list<long long> coords);

  static Weight zero(int rank);
  // w_i for 0 <= i <= rank + 1; w_0 and w_{n+1} are zero.
  static Weight fundamental(int rank, int i);
  // alpha_i = eps_i - eps_{i+1}, 1 <= i <= rank.
  static Weight simple_root(int rank, int i);

  int rank() const { return static_cast<int>(coords_.size()); }
  const std::vector<Integer>& coords() const { return coords_; }
  // 0-based access; coordinate of w_{idx+1}.
  const Integer& operator[](std::size_t idx) const { return coords_[idx]; }

  bool is_zero() const;

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  Weight& operator*=(const Integer& scalar);

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Integer& s, Weight a) { return a *= s; }
  friend Weight operator*(Weight a, const Integer& s) { return a *= s; }
  Weight operator-() const;

  friend bool operator==(const Weight& a, const Weight& b) = default;
  // Lexicographic on (rank, coords); used only for deterministic ordering.
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b);

  std::string to_string() const;

 private:
  std::vector<Integer> coords_;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

// Coordinates of a weight over the simple roots alpha_1..alpha_n.
struct RootCoords {
  std::vector<Rational> coeffs;

  bool integral() const;
  bool nonnegative() const;
  friend bool operator==(const RootCoords&, const RootCoords&) = default;
};

// sum_k c_k eps_k.  Throws std::invalid_argument unless eps_coeffs has rank+1
// entries.
Weight from_eps(int rank, std::span<const Integer> eps_coeffs);
Weight from_eps(int rank, std::initializer_list<long long> eps_coeffs);

// The epsilon-representative of a weight normalised so that the last entry
// is zero.
std::vector<Integer> to_eps(const Weight& w);

Weight rho(int rank);

// <lambda, (eps_k - eps_j)^vee> for 1 <= k < j <= n+1.
Integer pair(const Weight& w, int k, int j);

RootCoords root_coords(const Weight& w);

// Dominance order: lambda <= mu iff mu - lambda is a nonnegative integer
// combination of simple roots.
bool leq(const Weight& lambda, const Weight& mu);

bool is_dominant(const Weight& w);

// Whether all fundamental coordinates lie in [0, p).
bool is_restricted(const Weight& w, long p);

struct RestrictedDecomposition {
  Weight restricted;   // in X_1
  Weight translation;  // lambda = restricted + p * translation
};

RestrictedDecomposition restricted_decompose(const Weight& w, long p);

// eps_X = sum_{k in X} eps_k for X a subset of {1, ..., n+1}.
Weight eps_subset(int rank, std::span<const int> subset);
Weight eps_subset(int rank, std::initializer_list<int> subset);

// lambda^0 = 2(p-1) rho + w_0(lambda).
Weight lambda_zero_dual(const Weight& w, long p);

// Floor division helpers for signed big integers.
Integer floor_div(const Integer& a, const Integer& b);
Integer floor_mod(const Integer& a, const Integer& b);

}  // namespace loewy
