#pragma once

// JSON views of colorings and experiment reports. Output is byte-stable:
// object keys are inserted in a fixed order and tuples are emitted in
// lexicographic order.

#include <json.hpp>

#include "wlplanar/wl.hpp"

namespace wlplanar {

using json = nlohmann::ordered_json;

// {"k":…, "round":…, "classes": {"0": [[v...],...], ...}} with tuples sorted
// lexicographically and class ids ascending.
inline json coloring_to_json(const wl::Coloring& c) {
  std::map<int, std::vector<std::vector<int>>> classes;
  std::array<int, 3> t{};
  for (long idx = 0; idx < c.tuple_count(); ++idx) {
    long rest = idx;
    for (int p = c.k - 1; p >= 0; --p) {
      t[p] = static_cast<int>(rest % c.n);
      rest /= c.n;
    }
    classes[c.color[idx]].emplace_back(t.begin(), t.begin() + c.k);
  }
  json out;
  out["k"] = c.k;
  out["round"] = c.round;
  json cls = json::object();
  for (auto& [id, tuples] : classes) cls[std::to_string(id)] = tuples;
  out["classes"] = std::move(cls);
  return out;
}

inline std::string graph_to_json_summary(const ColoredGraph& g) {
  return std::to_string(g.n) + "v/" + std::to_string(g.edges.size()) + "e";
}

}  // namespace wlplanar
