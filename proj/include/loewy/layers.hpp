#pragma once

// Multisets of block irreducibles arranged in radical (or socle) layers, and
// classes in the Grothendieck group.

#include <cstdint>
#include <map>
#include <vector>

#include "loewy/block.hpp"

namespace loewy {

using Multiplicity = std::int64_t;
using LabelMultiset = std::map<IrreducibleLabel, Multiplicity>;

class LayerDecomposition {
 public:
  LayerDecomposition() = default;
  explicit LayerDecomposition(std::vector<LabelMultiset> layers);

  // Number of layers up to and including the last nonempty one.
  std::size_t loewy_length() const;
  std::size_t size() const { return layers_.size(); }
  const LabelMultiset& layer(std::size_t j) const;
  const std::vector<LabelMultiset>& layers() const { return layers_; }

  void add(std::size_t j, const IrreducibleLabel& label, Multiplicity mult = 1);
  // Drops trailing empty layers.
  void trim();
  // Layers listed from the last to the first.
  LayerDecomposition reversed() const;

  Multiplicity factor_count(std::size_t j) const;
  Multiplicity total_factors() const;

  // Per layer, multiplicity of each block index with translations forgotten.
  std::vector<std::vector<Multiplicity>> g1_counts(int n) const;

  friend bool operator==(const LayerDecomposition& a, const LayerDecomposition& b);

 private:
  std::vector<LabelMultiset> layers_;
};

// Formal integer combination of irreducibles; zero entries are never stored.
class ClassVector {
 public:
  void add(const IrreducibleLabel& label, Multiplicity mult);
  const LabelMultiset& entries() const { return entries_; }
  Multiplicity operator[](const IrreducibleLabel& label) const;
  // Multiplicity of each block index with translations forgotten.
  std::vector<Multiplicity> g1_counts(int n) const;
  friend bool operator==(const ClassVector&, const ClassVector&) = default;

 private:
  LabelMultiset entries_;
};

ClassVector class_of(const LayerDecomposition& layers);

}  // namespace loewy
