#pragma once

#include "reesposet/poset.hpp"

#include <json.hpp>

#include <map>
#include <stdexcept>
#include <string>

namespace reesposet {

using Json = nlohmann::json;

/// {"elements":[{"id","rank","label"}],"covers":[[lo,hi]],"bottom","top"},
/// ids ascending and covers sorted.
inline Json poset_to_json(const GradedPoset& p) {
  Json elements = Json::array();
  for (ElementId x = 0; x < static_cast<ElementId>(p.size()); ++x)
    elements.push_back({{"id", x}, {"rank", p.rank(x)}, {"label", p.label(x)}});
  Json covers = Json::array();
  for (auto [lo, hi] : p.covers()) covers.push_back({lo, hi});
  Json out;
  out["elements"] = std::move(elements);
  out["covers"] = std::move(covers);
  out["bottom"] = p.bottom() ? Json(*p.bottom()) : Json(nullptr);
  out["top"] = p.top() ? Json(*p.top()) : Json(nullptr);
  return out;
}

/// Reads the poset schema. Element ids may be any distinct integers; they are
/// renumbered 0..N-1 in increasing order. Labels default to the original id.
/// Given "bottom"/"top" fields must agree with the order.
inline GradedPoset poset_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("elements") || !j.contains("covers"))
    throw std::invalid_argument("poset JSON needs \"elements\" and \"covers\"");
  std::map<long long, int> rank_of;
  std::map<long long, std::string> label_of;
  for (const auto& e : j.at("elements")) {
    const long long id = e.at("id").get<long long>();
    if (rank_of.count(id)) throw std::invalid_argument("duplicate element id " + std::to_string(id));
    rank_of[id] = e.at("rank").get<int>();
    label_of[id] = e.contains("label") ? e.at("label").get<std::string>() : std::to_string(id);
  }
  std::map<long long, ElementId> index;
  std::vector<int> ranks;
  std::vector<std::string> labels;
  for (auto& [id, r] : rank_of) {
    index[id] = static_cast<ElementId>(ranks.size());
    ranks.push_back(r);
    labels.push_back(label_of[id]);
  }
  auto lookup = [&](const Json& v) {
    const long long id = v.get<long long>();
    auto it = index.find(id);
    if (it == index.end()) throw std::invalid_argument("unknown element id " + std::to_string(id));
    return it->second;
  };
  std::vector<Cover> covers;
  for (const auto& c : j.at("covers")) {
    if (!c.is_array() || c.size() != 2) throw std::invalid_argument("cover must be [lo, hi]");
    covers.emplace_back(lookup(c[0]), lookup(c[1]));
  }
  GradedPoset p(std::move(ranks), std::move(covers), std::move(labels));
  auto check_bound = [&](const char* key, std::optional<ElementId> actual) {
    if (!j.contains(key) || j.at(key).is_null()) return;
    if (!actual || lookup(j.at(key)) != *actual)
      throw std::invalid_argument(std::string("\"") + key + "\" does not match the order");
  };
  check_bound("bottom", p.bottom());
  check_bound("top", p.top());
  return p;
}

}  // namespace reesposet
