#pragma once

// The Weyl group S_{n+1} acting on weights by permuting epsilon-coordinates,
// the dot action, and the extended affine Weyl group W x pX.

#include <initializer_list>
#include <vector>

#include "loewy/lattice.hpp"

namespace loewy {

class WeylElement {
 public:
  // images[k-1] = w(k), values in 1..n+1, each exactly once.
  explicit WeylElement(std::vector<int> images);
  WeylElement(std::initializer_list<int> images);

  static WeylElement identity(int rank);
  // Transposition (k k+1); the simple reflection s_k.
  static WeylElement simple_reflection(int rank, int k);

  int rank() const { return static_cast<int>(images_.size()) - 1; }
  int operator()(int k) const { return images_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<int>& images() const { return images_; }

  WeylElement inverse() const;
  // (u * v)(k) = u(v(k)).
  friend WeylElement operator*(const WeylElement& u, const WeylElement& v);
  friend bool operator==(const WeylElement&, const WeylElement&) = default;

 private:
  std::vector<int> images_;
};

// w(eps_k) = eps_{w(k)}.
Weight act(const WeylElement& w, const Weight& lambda);

// w . lambda = w(lambda + rho) - rho.
Weight dot(const WeylElement& w, const Weight& lambda);

// Longest element of S_{n+1}: i -> n+2-i.
WeylElement w0(int rank);
// Longest element of the parabolic subgroup for I = {alpha_1..alpha_{n-1}}.
WeylElement wI(int rank);
// Longest element of the parabolic subgroup for J = {alpha_2..alpha_n}.
WeylElement wJ(int rank);

struct AffineElement {
  WeylElement w;
  Weight translation;  // nu; the element acts by translating with p * nu
};

Weight dot_affine(const AffineElement& a, const Weight& lambda, long p);

}  // namespace loewy
