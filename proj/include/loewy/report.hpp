#pragma once

// Serialisation of layer decompositions.
//
// Schema:
//   {"n":.., "p":.., "object":"..",
//    "layers":[{"j":.., "factors":[{"i":.., "nu":[..], "mult":..}, ..]}, ..],
//    "conditional_on_loewy_length_conjecture": bool}
// Keys are emitted sorted and factors in label order, so equal reports give
// byte-identical output.  A layer with more than the label limit is cut and
// marked with "truncated": true and "distinct_labels": count.

#include <cstddef>
#include <string>

#include "json.hpp"
#include "loewy/layers.hpp"

namespace loewy {

inline constexpr std::size_t kDefaultLabelLimit = 200;

struct LayerReport {
  int n = 0;
  long p = 0;
  std::string object;
  LayerDecomposition layers;
  bool conditional_on_loewy_length_conjecture = false;
  friend bool operator==(const LayerReport&, const LayerReport&) = default;
};

/// label_limit == 0 disables truncation.
nlohmann::json to_json(const LayerReport& report, std::size_t label_limit = kDefaultLabelLimit);
LayerReport report_from_json(const nlohmann::json& doc);

std::string emit_json(const LayerReport& report, std::size_t label_limit = kDefaultLabelLimit);
std::string emit_text(const LayerReport& report, std::size_t label_limit = kDefaultLabelLimit);

/// Integer to JSON: a number when it fits in 64 bits, a decimal string otherwise.
nlohmann::json integer_json(const Integer& value);
nlohmann::json weight_json(const Weight& w);

}  // namespace loewy
