#include "loewy/weyl.hpp"

#include <numeric>
#include <stdexcept>

namespace loewy {

WeylElement::WeylElement(std::vector<int> images) : images_(std::move(images)) {
  if (images_.size() < 2) throw std::invalid_argument("WeylElement: need at least 2 letters");
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("WeylElement: image array is not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

WeylElement::WeylElement(std::initializer_list<int> images)
    : WeylElement(std::vector<int>(images)) {}

WeylElement WeylElement::identity(int rank) {
  std::vector<int> img(static_cast<std::size_t>(rank) + 1);
  std::iota(img.begin(), img.end(), 1);
  return WeylElement(std::move(img));
}

WeylElement WeylElement::simple_reflection(int rank, int k) {
  if (k < 1 || k > rank) throw std::invalid_argument("simple_reflection: index out of range");
  auto img = identity(rank).images_;
  std::swap(img[static_cast<std::size_t>(k - 1)], img[static_cast<std::size_t>(k)]);
  return WeylElement(std::move(img));
}

WeylElement WeylElement::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) {
    inv[static_cast<std::size_t>(images_[k] - 1)] = static_cast<int>(k) + 1;
  }
  return WeylElement(std::move(inv));
}

WeylElement operator*(const WeylElement& u, const WeylElement& v) {
  if (u.images_.size() != v.images_.size()) {
    throw std::invalid_argument("WeylElement: rank mismatch in product");
  }
  std::vector<int> img(v.images_.size());
  for (std::size_t k = 0; k < img.size(); ++k) img[k] = u(v.images_[k]);
  return WeylElement(std::move(img));
}

Weight act(const WeylElement& w, const Weight& lambda) {
  if (w.rank() != lambda.rank()) throw std::invalid_argument("act: rank mismatch");
  const auto e = to_eps(lambda);
  std::vector<Integer> out(e.size());
  for (std::size_t k = 0; k < e.size(); ++k) {
    out[static_cast<std::size_t>(w(static_cast<int>(k) + 1) - 1)] = e[k];
  }
  return from_eps(lambda.rank(), std::span<const Integer>(out));
}

Weight dot(const WeylElement& w, const Weight& lambda) {
  const Weight r = rho(lambda.rank());
  return act(w, lambda + r) - r;
}

WeylElement w0(int rank) {
  std::vector<int> img(static_cast<std::size_t>(rank) + 1);
  for (int i = 1; i <= rank + 1; ++i) img[static_cast<std::size_t>(i - 1)] = rank + 2 - i;
  return WeylElement(std::move(img));
}

WeylElement wI(int rank) {
  std::vector<int> img(static_cast<std::size_t>(rank) + 1);
  for (int i = 1; i <= rank; ++i) img[static_cast<std::size_t>(i - 1)] = rank + 1 - i;
  img[static_cast<std::size_t>(rank)] = rank + 1;
  return WeylElement(std::move(img));
}

WeylElement wJ(int rank) {
  std::vector<int> img(static_cast<std::size_t>(rank) + 1);
  img[0] = 1;
  for (int i = 2; i <= rank + 1; ++i) img[static_cast<std::size_t>(i - 1)] = rank + 3 - i;
  return WeylElement(std::move(img));
}

Weight dot_affine(const AffineElement& a, const Weight& lambda, long p) {
  return dot(a.w, lambda) + Integer(p) * a.translation;
}

}  // namespace loewy
