#include "loewy/layers.hpp"

#include <stdexcept>

namespace loewy {

namespace {
const LabelMultiset kEmpty{};
}

LayerDecomposition::LayerDecomposition(std::vector<LabelMultiset> layers)
    : layers_(std::move(layers)) {
  for (auto& layer : layers_) {
    for (auto it = layer.begin(); it != layer.end();) {
      if (it->second < 0) throw std::invalid_argument("negative multiplicity in layer");
      it = it->second == 0 ? layer.erase(it) : std::next(it);
    }
  }
  trim();
}

std::size_t LayerDecomposition::loewy_length() const {
  std::size_t len = layers_.size();
  while (len > 0 && layers_[len - 1].empty()) --len;
  return len;
}

const LabelMultiset& LayerDecomposition::layer(std::size_t j) const {
  return j < layers_.size() ? layers_[j] : kEmpty;
}

void LayerDecomposition::add(std::size_t j, const IrreducibleLabel& label, Multiplicity mult) {
  if (mult < 0) throw std::invalid_argument("negative multiplicity in layer");
  if (mult == 0) return;
  if (layers_.size() <= j) layers_.resize(j + 1);
  layers_[j][label] += mult;
}

void LayerDecomposition::trim() { layers_.resize(loewy_length()); }

LayerDecomposition LayerDecomposition::reversed() const {
  std::vector<LabelMultiset> out(layers_.rbegin(), layers_.rend());
  return LayerDecomposition(std::move(out));
}

Multiplicity LayerDecomposition::factor_count(std::size_t j) const {
  Multiplicity total = 0;
  for (const auto& [label, mult] : layer(j)) total += mult;
  return total;
}

Multiplicity LayerDecomposition::total_factors() const {
  Multiplicity total = 0;
  for (std::size_t j = 0; j < layers_.size(); ++j) total += factor_count(j);
  return total;
}

std::vector<std::vector<Multiplicity>> LayerDecomposition::g1_counts(int n) const {
  std::vector<std::vector<Multiplicity>> out(layers_.size(),
                                             std::vector<Multiplicity>(static_cast<std::size_t>(n) + 1));
  for (std::size_t j = 0; j < layers_.size(); ++j) {
    for (const auto& [label, mult] : layers_[j]) out[j].at(static_cast<std::size_t>(label.index)) += mult;
  }
  return out;
}

bool operator==(const LayerDecomposition& a, const LayerDecomposition& b) {
  const std::size_t len = std::max(a.loewy_length(), b.loewy_length());
  for (std::size_t j = 0; j < len; ++j) {
    if (a.layer(j) != b.layer(j)) return false;
  }
  return true;
}

void ClassVector::add(const IrreducibleLabel& label, Multiplicity mult) {
  if (mult == 0) return;
  auto [it, inserted] = entries_.try_emplace(label, 0);
  it->second += mult;
  if (it->second == 0) entries_.erase(it);
}

Multiplicity ClassVector::operator[](const IrreducibleLabel& label) const {
  auto it = entries_.find(label);
  return it == entries_.end() ? 0 : it->second;
}

std::vector<Multiplicity> ClassVector::g1_counts(int n) const {
  std::vector<Multiplicity> out(static_cast<std::size_t>(n) + 1);
  for (const auto& [label, mult] : entries_) out.at(static_cast<std::size_t>(label.index)) += mult;
  return out;
}

ClassVector class_of(const LayerDecomposition& layers) {
  ClassVector cv;
  for (const auto& layer : layers.layers()) {
    for (const auto& [label, mult] : layer) cv.add(label, mult);
  }
  return cv;
}

}  // namespace loewy
