#include "loewy/report.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace loewy {

using nlohmann::json;

json integer_json(const Integer& value) {
  if (value >= std::numeric_limits<long long>::min() &&
      value <= std::numeric_limits<long long>::max()) {
    return value.convert_to<long long>();
  }
  return value.str();
}

json weight_json(const Weight& w) {
  json out = json::array();
  for (const auto& c : w.coords()) out.push_back(integer_json(c));
  return out;
}

namespace {

Integer integer_from_json(const json& v) {
  if (v.is_string()) return Integer(v.get<std::string>());
  if (v.is_number_integer()) return Integer(v.get<long long>());
  throw std::invalid_argument("report: expected an integer, got " + v.dump());
}

}  // namespace

json to_json(const LayerReport& report, std::size_t label_limit) {
  json doc;
  doc["n"] = report.n;
  doc["p"] = report.p;
  doc["object"] = report.object;
  doc["conditional_on_loewy_length_conjecture"] = report.conditional_on_loewy_length_conjecture;
  json layers = json::array();
  for (std::size_t j = 0; j < report.layers.size(); ++j) {
    const auto& layer = report.layers.layer(j);
    json factors = json::array();
    std::size_t emitted = 0;
    for (const auto& [label, mult] : layer) {
      if (label_limit != 0 && emitted == label_limit) break;
      factors.push_back({{"i", label.index}, {"nu", weight_json(label.nu)}, {"mult", mult}});
      ++emitted;
    }
    json entry = {{"j", j}, {"factors", std::move(factors)}};
    if (emitted < layer.size()) {
      entry["truncated"] = true;
      entry["distinct_labels"] = layer.size();
    }
    layers.push_back(std::move(entry));
  }
  doc["layers"] = std::move(layers);
  return doc;
}

LayerReport report_from_json(const json& doc) {
  LayerReport out;
  out.n = doc.at("n").get<int>();
  out.p = doc.at("p").get<long>();
  out.object = doc.at("object").get<std::string>();
  out.conditional_on_loewy_length_conjecture =
      doc.at("conditional_on_loewy_length_conjecture").get<bool>();
  std::vector<LabelMultiset> layers;
  for (const auto& entry : doc.at("layers")) {
    const auto j = entry.at("j").get<std::size_t>();
    if (j != layers.size()) throw std::invalid_argument("report: layers out of order");
    LabelMultiset layer;
    for (const auto& f : entry.at("factors")) {
      std::vector<Integer> coords;
      for (const auto& c : f.at("nu")) coords.push_back(integer_from_json(c));
      layer[IrreducibleLabel{f.at("i").get<int>(), Weight(std::move(coords))}] +=
          f.at("mult").get<Multiplicity>();
    }
    layers.push_back(std::move(layer));
  }
  out.layers = LayerDecomposition(std::move(layers));
  return out;
}

std::string emit_json(const LayerReport& report, std::size_t label_limit) {
  return to_json(report, label_limit).dump();
}

std::string emit_text(const LayerReport& report, std::size_t label_limit) {
  std::ostringstream os;
  os << report.object << "  (n=" << report.n << ", p=" << report.p << ")\n";
  if (report.conditional_on_loewy_length_conjecture) {
    os << "conditional: assumes Loewy length 2n+1 for the projective cover\n";
  }
  for (std::size_t j = 0; j < report.layers.size(); ++j) {
    const auto& layer = report.layers.layer(j);
    os << "layer " << j << " [" << report.layers.factor_count(j) << " factors]:";
    std::size_t emitted = 0;
    for (const auto& [label, mult] : layer) {
      if (label_limit != 0 && emitted == label_limit) {
        os << " ... (" << layer.size() - emitted << " more labels, use --full)";
        break;
      }
      os << ' ' << label.to_string();
      if (mult != 1) os << '^' << mult;
      ++emitted;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace loewy
