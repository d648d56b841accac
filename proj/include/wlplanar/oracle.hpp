#pragma once

// Ground-truth brute force for small graphs: isomorphism bijections,
// automorphism groups, orbits, canonical forms and fixing numbers. The
// backtracking search orders candidates by joint 1-WL color classes, which
// only prunes; correctness is independent of the ordering.

#include <cstdlib>
#include <functional>

#include "wlplanar/wl.hpp"

namespace wlplanar {
namespace oracle {

// Size cap for the oracle entry points. Callers with a verified time budget
// may pass a larger limit explicitly.
inline int default_limit() {
  if (const char* env = std::getenv("WLPLANAR_ORACLE_LIMIT")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 12;
}

struct AutomorphismSet {
  std::vector<std::vector<int>> perms;  // full list, identity included
  std::size_t order() const { return perms.size(); }
};

namespace detail {

// Checks that mapping[u] := v is consistent with everything mapped so far:
// adjacency, both arc directions, and diagonal colors.
inline bool consistent(const ColoredGraph& g, const ColoredGraph& h,
                       const std::vector<int>& mapping, int u, int v) {
  if (g.degree(u) != h.degree(v)) return false;
  if (g.arc_color(u, u) != h.arc_color(v, v)) return false;
  for (int x = 0; x < g.n; ++x) {
    int y = mapping[x];
    if (y < 0 || x == u) continue;
    bool ge = g.has_edge(u, x), he = h.has_edge(v, y);
    if (ge != he) return false;
    if (ge && (g.arc_color(u, x) != h.arc_color(v, y) ||
               g.arc_color(x, u) != h.arc_color(y, v)))
      return false;
  }
  return true;
}

// Enumerates color/edge-preserving bijections g -> h in lexicographic order
// of the mapping, invoking sink(mapping). sink returns false to stop after
// the current find (used to get just one bijection).
inline void search(const ColoredGraph& g, const ColoredGraph& h,
                   const std::function<bool(const std::vector<int>&)>& sink) {
  if (g.n != h.n || g.edges.size() != h.edges.size()) return;

  auto cs = wl::joint_stable(g, h, 1);
  if (cs[0].class_sizes() != cs[1].class_sizes()) return;

  // Map vertices in order of ascending class size (most constrained first).
  std::map<int, int> size_of;
  for (int c : cs[0].color) ++size_of[c];
  std::vector<int> order(g.n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return size_of[cs[0].color[a]] < size_of[cs[0].color[b]];
  });

  std::vector<int> mapping(g.n, -1);
  std::vector<bool> used(h.n, false);
  bool stop = false;

  std::function<void(int)> rec = [&](int depth) {
    if (stop) return;
    if (depth == g.n) {
      if (!sink(mapping)) stop = true;
      return;
    }
    int u = order[depth];
    for (int v = 0; v < h.n; ++v) {
      if (used[v] || cs[1].color[v] != cs[0].color[u]) continue;
      if (!consistent(g, h, mapping, u, v)) continue;
      mapping[u] = v;
      used[v] = true;
      rec(depth + 1);
      mapping[u] = -1;
      used[v] = false;
      if (stop) return;
    }
  };
  rec(0);
}

inline void check_limit(const ColoredGraph& g, int limit, const char* who) {
  if (g.n > limit)
    throw Error(std::string(who) + ": graph exceeds oracle limit (" +
                std::to_string(g.n) + " > " + std::to_string(limit) + ")");
}

}  // namespace detail

// A color- and edge-preserving bijection g -> h, or absence.
inline std::optional<std::vector<int>> isomorphic(const ColoredGraph& g,
                                                  const ColoredGraph& h,
                                                  int limit = default_limit()) {
  detail::check_limit(g, limit, "isomorphic");
  detail::check_limit(h, limit, "isomorphic");
  std::optional<std::vector<int>> found;
  detail::search(g, h, [&](const std::vector<int>& m) {
    found = m;
    return false;
  });
  return found;
}

// All isomorphisms g -> h; empty when none exists.
inline std::vector<std::vector<int>> all_isomorphisms(const ColoredGraph& g,
                                                      const ColoredGraph& h,
                                                      int limit = default_limit()) {
  detail::check_limit(g, limit, "all_isomorphisms");
  detail::check_limit(h, limit, "all_isomorphisms");
  std::vector<std::vector<int>> all;
  detail::search(g, h, [&](const std::vector<int>& m) {
    all.push_back(m);
    return true;
  });
  return all;
}

inline AutomorphismSet automorphisms(const ColoredGraph& g,
                                     int limit = default_limit()) {
  detail::check_limit(g, limit, "automorphisms");
  return AutomorphismSet{all_isomorphisms(g, g, limit)};
}

// Orbit partition of the vertices under the automorphism group, as sorted
// classes in sorted order.
inline std::vector<std::vector<int>> orbits(const ColoredGraph& g,
                                            int limit = default_limit()) {
  auto aut = automorphisms(g, limit);
  std::vector<int> rep(g.n);
  std::iota(rep.begin(), rep.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (rep[v] != v) v = rep[v] = rep[rep[v]];
    return v;
  };
  for (auto& p : aut.perms)
    for (int v = 0; v < g.n; ++v) {
      int a = find(v), b = find(p[v]);
      if (a != b) rep[std::max(a, b)] = std::min(a, b);
    }
  std::map<int, std::vector<int>> cls;
  for (int v = 0; v < g.n; ++v) cls[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [r, vs] : cls) out.push_back(vs);
  return out;
}

// Orbits of unordered vertex pairs {u,v}, u != v; used to prune searches over
// pairs. Returns one representative pair per orbit.
inline std::vector<std::pair<int, int>> pair_orbit_representatives(
    const ColoredGraph& g, int limit = default_limit()) {
  auto aut = automorphisms(g, limit);
  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<int, int>> reps;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v) {
      if (seen.count({u, v})) continue;
      reps.emplace_back(u, v);
      for (auto& p : aut.perms)
        seen.insert(std::minmax(p[u], p[v]));
    }
  return reps;
}

struct FixingResult {
  int number;
  std::vector<int> witness;  // one minimum set with trivial pointwise stabilizer
};

// Minimum size of a vertex set whose pointwise stabilizer is trivial, by
// subset enumeration in increasing size with early exit.
inline FixingResult fixing_number(const ColoredGraph& g,
                                  int limit = default_limit()) {
  auto aut = automorphisms(g, limit);
  auto fixes_all = [&](const std::vector<int>& set) {
    for (auto& p : aut.perms) {
      bool identity = true;
      for (int v = 0; v < g.n && identity; ++v) identity = p[v] == v;
      if (identity) continue;
      bool fixes_set = true;
      for (int v : set)
        if (p[v] != v) {
          fixes_set = false;
          break;
        }
      if (fixes_set) return false;  // nontrivial stabilizer element
    }
    return true;
  };
  for (int s = 0; s <= g.n; ++s) {
    FixingResult result{-1, {}};
    bool keep_going = detail::for_each_subset(g.n, s, [&](const std::vector<int>& sub) {
      if (fixes_all(sub)) {
        result = {s, sub};
        return false;
      }
      return true;
    });
    if (!keep_going) return result;
  }
  throw Error("fixing_number: unreachable");
}

// Canonical form of a colored graph: the lexicographically least encoding of
// (adjacency, arc colors) over all vertex relabelings that pin the vertices
// of `individualized` to the first slots in order. Equal forms mean there is
// an isomorphism respecting colors and the individualization. Exhaustive over
// (n - t)! permutations; keep n small.
struct CanonicalForm {
  std::vector<color_t> code;
  auto operator<=>(const CanonicalForm&) const = default;
};

inline CanonicalForm canonical_form(const ColoredGraph& g,
                                    std::span<const int> individualized = {},
                                    int limit = 10) {
  if (g.n > limit)
    throw Error("canonical_form: graph exceeds size limit (" +
                std::to_string(g.n) + " > " + std::to_string(limit) + ")");
  // slot[i] = original vertex placed at position i
  std::vector<int> pinned;
  std::vector<bool> is_pinned(g.n, false);
  for (int v : individualized) {
    if (v < 0 || v >= g.n) throw Error("canonical_form: vertex out of range");
    if (!is_pinned[v]) {
      is_pinned[v] = true;
      pinned.push_back(v);
    }
  }
  std::vector<int> free_verts;
  for (int v = 0; v < g.n; ++v)
    if (!is_pinned[v]) free_verts.push_back(v);

  auto encode = [&](const std::vector<int>& slot) {
    std::vector<color_t> code{static_cast<color_t>(g.n),
                              static_cast<color_t>(pinned.size())};
    for (int i = 0; i < g.n; ++i)
      for (int j = 0; j < g.n; ++j) {
        int u = slot[i], v = slot[j];
        if (i == j) {
          code.push_back(g.arc_color(u, u));
        } else if (g.has_edge(u, v)) {
          code.push_back(2 + g.arc_color(u, v));
        } else {
          code.push_back(1);
        }
      }
    return code;
  };

  std::optional<std::vector<color_t>> best;
  std::vector<int> slot = pinned;
  slot.insert(slot.end(), free_verts.begin(), free_verts.end());
  std::sort(slot.begin() + pinned.size(), slot.end());
  do {
    auto code = encode(slot);
    if (!best || code < *best) best = std::move(code);
  } while (std::next_permutation(slot.begin() + pinned.size(), slot.end()));
  return CanonicalForm{*best};
}

// True iff the chi^k vertex classes equal the automorphism orbits. With
// G' = G this is the orbit-determination property of the k-dimensional
// algorithm on this graph.
inline bool determines_orbits_check(const ColoredGraph& g, int k,
                                    int limit = default_limit()) {
  detail::check_limit(g, limit, "determines_orbits_check");
  auto coloring = wl::stable_coloring(g, k);
  return coloring.vertex_classes() == orbits(g, limit);
}

}  // namespace oracle
}  // namespace wlplanar
