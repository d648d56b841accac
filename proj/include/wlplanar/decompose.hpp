#pragma once

// Decomposition machinery over minimum separators: the pair set P(G) and its
// minimal elements P0(G), torso graphs with the three-case coloring, the
// reduced graph with the torso-type coloring, and canonical forms of
// individualized colored graphs.

#include "wlplanar/oracle.hpp"

namespace wlplanar {
namespace decompose {

// A minimum separator together with one connected component of its removal.
struct SeparatorPair {
  std::vector<int> separator;
  std::vector<int> component;
  auto operator<=>(const SeparatorPair&) const = default;
};

// All pairs (S, K): S a separator of minimum cardinality, K a component of
// G - S. Requires g connected and not complete.
inline std::vector<SeparatorPair> p_set(const ColoredGraph& g) {
  std::vector<SeparatorPair> pairs;
  for (auto& s : min_separators(g)) {
    std::vector<bool> removed(g.n, false);
    for (int v : s) removed[v] = true;
    for (auto& comp : components_after_removal(g, removed))
      pairs.push_back({s, comp});
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

// The minimal elements of p_set under (S,K) <= (S',K') iff K subseteq K'.
inline std::vector<SeparatorPair> p0_set(const ColoredGraph& g) {
  auto pairs = p_set(g);
  auto subset_of = [](const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  std::vector<SeparatorPair> minimal;
  for (auto& p : pairs) {
    bool is_minimal = true;
    for (auto& q : pairs)
      if (q.component != p.component && subset_of(q.component, p.component)) {
        is_minimal = false;
        break;
      }
    if (is_minimal) minimal.push_back(p);
  }
  return minimal;
}

// Like p0_set but yields the empty set for complete inputs instead of
// throwing; the torso and reduced-graph builders use it so that separatorless
// graphs degrade gracefully.
inline std::vector<SeparatorPair> p0_set_or_empty(const ColoredGraph& g) {
  if (!is_connected(g)) throw Error("p0: graph not connected");
  if (is_complete(g)) return {};
  return p0_set(g);
}

// The torso of S: S plus the P0-components hanging at S, with S completed to
// a clique. Arc colors follow the three-case rule: added S-edges (0,0),
// original S-edges (lambda,1), everything else (lambda,2); the values are
// composed by the same pairing everywhere so torsos of different graphs stay
// comparable.
struct TorsoGraph {
  ColoredGraph base;
  std::vector<int> separator;          // as labels of `base`
  std::vector<int> original_vertices;  // base label -> label in g
};

namespace detail {

inline color_t torso_color(color_t lambda, int tag) {
  return pair_colors(lambda, tag);
}

}  // namespace detail

inline TorsoGraph g_top(const ColoredGraph& g, const std::vector<int>& s) {
  std::set<int> vprime(s.begin(), s.end());
  std::vector<int> s_sorted(s.begin(), s.end());
  std::sort(s_sorted.begin(), s_sorted.end());
  for (auto& p : p0_set_or_empty(g))
    if (p.separator == s_sorted)
      vprime.insert(p.component.begin(), p.component.end());

  std::vector<int> verts(vprime.begin(), vprime.end());
  std::vector<int> label(g.n, -1);
  for (std::size_t i = 0; i < verts.size(); ++i) label[verts[i]] = static_cast<int>(i);

  auto in_s = [&](int v) {
    return std::binary_search(s_sorted.begin(), s_sorted.end(), v);
  };

  std::vector<std::pair<int, int>> edge_list;
  for (auto [u, v] : g.edges)
    if (label[u] >= 0 && label[v] >= 0) edge_list.emplace_back(label[u], label[v]);
  for (std::size_t i = 0; i < s_sorted.size(); ++i)
    for (std::size_t j = i + 1; j < s_sorted.size(); ++j)
      if (!g.has_edge(s_sorted[i], s_sorted[j]))
        edge_list.emplace_back(label[s_sorted[i]], label[s_sorted[j]]);

  TorsoGraph t;
  t.base = make_graph(static_cast<int>(verts.size()), std::move(edge_list));
  t.original_vertices = verts;
  for (int v : s_sorted) t.separator.push_back(label[v]);
  std::sort(t.separator.begin(), t.separator.end());

  // Three-case rule over the arc domain of the torso.
  auto color_pair = [&](int u, int v) -> color_t {
    bool both_in_s = in_s(u) && in_s(v);
    if (both_in_s && !g.has_edge(u, v) && u != v) return detail::torso_color(0, 0);
    if (both_in_s && u == v) return detail::torso_color(0, 0);
    if (both_in_s && g.has_edge(u, v)) return detail::torso_color(g.arc_color(u, v), 1);
    return detail::torso_color(g.arc_color(u, v), 2);
  };
  for (int v : verts) {
    color_t c = color_pair(v, v);
    if (c != 0) t.base.arc_colors[{label[v], label[v]}] = c;
  }
  for (auto [lu, lv] : t.base.edges) {
    int u = verts[lu], v = verts[lv];
    t.base.arc_colors[{lu, lv}] = color_pair(u, v);
    t.base.arc_colors[{lv, lu}] = color_pair(v, u);
  }
  return t;
}

// The torso restricted to S and one component: G_top^(S,K).
inline TorsoGraph g_top_restricted(const ColoredGraph& g, const SeparatorPair& p) {
  TorsoGraph full = g_top(g, p.separator);
  std::set<int> wanted(p.separator.begin(), p.separator.end());
  wanted.insert(p.component.begin(), p.component.end());

  std::vector<int> verts;
  std::vector<int> sub_label(full.base.n, -1);
  for (int i = 0; i < full.base.n; ++i)
    if (wanted.count(full.original_vertices[i])) {
      sub_label[i] = static_cast<int>(verts.size());
      verts.push_back(i);
    }

  std::vector<std::pair<int, int>> edge_list;
  for (auto [u, v] : full.base.edges)
    if (sub_label[u] >= 0 && sub_label[v] >= 0)
      edge_list.emplace_back(sub_label[u], sub_label[v]);

  TorsoGraph t;
  t.base = make_graph(static_cast<int>(verts.size()), std::move(edge_list));
  for (auto& [arc, c] : full.base.arc_colors) {
    auto [u, v] = arc;
    if (sub_label[u] >= 0 && sub_label[v] >= 0)
      t.base.arc_colors[{sub_label[u], sub_label[v]}] = c;
  }
  for (int i : verts) t.original_vertices.push_back(full.original_vertices[i]);
  for (int s : full.separator)
    if (sub_label[s] >= 0) t.separator.push_back(sub_label[s]);
  std::sort(t.separator.begin(), t.separator.end());
  return t;
}

// Canonical identifier of a colored graph with an ordered individualized
// vertex tuple: equal values exactly when an isomorphism maps the tuples onto
// each other position by position (repeats are pinned once).
using Isotype = oracle::CanonicalForm;

inline Isotype isotype(const ColoredGraph& g, std::span<const int> individualized,
                       int limit = 10) {
  return oracle::canonical_form(g, individualized, limit);
}

inline Isotype isotype(const ColoredGraph& g, std::initializer_list<int> inds,
                       int limit = 10) {
  return isotype(g, std::span<const int>(inds.begin(), inds.size()), limit);
}

// Shared state for one decomposition run. Torso isotypes are interned here,
// so reduced-graph colors of two graphs are comparable only when built with
// the same context.
struct DecomposeContext {
  ColorInterner interner;
  int isotype_limit = 10;
};

// The reduced graph: G with all P0-components removed, separators completed
// to cliques, and arcs colored by the (lambda, ISOTYPE of individualized
// torso) rule. Minimum 2-separator pairs that end up as non-edges of the
// reduced graph keep their color in `separator_pair_colors`.
struct ReducedGraph {
  ColoredGraph base;
  std::map<std::pair<int, int>, color_t> separator_pair_colors;
  std::vector<int> original_vertices;  // base label -> label in g
};

inline ReducedGraph g_bot(const ColoredGraph& g, DecomposeContext& ctx) {
  if (!is_connected(g)) throw Error("g_bot: graph not connected");
  if (is_k_connected(g, 3)) throw Error("g_bot: input is 3-connected");
  bool two_connected = is_k_connected(g, 2);
  if (two_connected) {
    for (int v = 0; v < g.n; ++v)
      if (g.degree(v) < 3)
        throw Error("g_bot: 2-connected case needs minimum degree 3");
  }

  auto p0 = p0_set_or_empty(g);

  std::vector<bool> dropped(g.n, false);
  for (auto& p : p0)
    for (int v : p.component) dropped[v] = true;

  std::vector<int> verts;
  std::vector<int> label(g.n, -1);
  for (int v = 0; v < g.n; ++v)
    if (!dropped[v]) {
      label[v] = static_cast<int>(verts.size());
      verts.push_back(v);
    }

  std::set<std::pair<int, int>> edge_set;
  for (auto [u, v] : g.edges)
    if (label[u] >= 0 && label[v] >= 0)
      edge_set.insert(std::minmax(label[u], label[v]));
  for (auto& p : p0)
    for (std::size_t i = 0; i < p.separator.size(); ++i)
      for (std::size_t j = i + 1; j < p.separator.size(); ++j)
        edge_set.insert(std::minmax(label[p.separator[i]], label[p.separator[j]]));

  ReducedGraph r;
  r.base = make_graph(static_cast<int>(verts.size()),
                      {edge_set.begin(), edge_set.end()});
  r.original_vertices = verts;

  // In the 2-connected case every minimum separator is a vertex pair; collect
  // them so the first display case can be applied.
  std::set<std::pair<int, int>> min_seps;
  if (two_connected && !is_complete(g))
    for (auto& s : min_separators(g)) min_seps.insert({s[0], s[1]});

  auto isotype_id = [&](const std::vector<int>& s,
                        std::span<const int> pins) -> color_t {
    TorsoGraph t = g_top(g, s);
    std::vector<int> pinned_labels;
    for (int v : pins) {
      auto it = std::find(t.original_vertices.begin(), t.original_vertices.end(), v);
      pinned_labels.push_back(
          static_cast<int>(it - t.original_vertices.begin()));
    }
    Isotype iso = isotype(t.base, pinned_labels, ctx.isotype_limit);
    return ctx.interner.intern(iso.code);
  };

  auto bot_color = [&](int u, int v) -> color_t {
    // u, v are labels of g
    bool is_min_2sep = u != v && min_seps.count(std::minmax(u, v)) > 0;
    if (is_min_2sep && !g.has_edge(u, v)) {
      std::array<int, 2> pins{u, v};
      return pair_colors(0, 1 + isotype_id({std::min(u, v), std::max(u, v)},
                                           std::span<const int>(pins)));
    }
    // diagonal or original edge
    std::vector<int> s = u == v ? std::vector<int>{u}
                                : std::vector<int>{std::min(u, v), std::max(u, v)};
    std::array<int, 2> pins{u, v};
    auto span = u == v ? std::span<const int>(pins.data(), 1)
                       : std::span<const int>(pins);
    return pair_colors(g.arc_color(u, v), 1 + isotype_id(s, span));
  };

  for (int lv = 0; lv < r.base.n; ++lv) {
    int v = verts[lv];
    color_t c = bot_color(v, v);
    if (c != 0) r.base.arc_colors[{lv, lv}] = c;
  }
  for (auto [lu, lv] : r.base.edges) {
    int u = verts[lu], v = verts[lv];
    if (g.has_edge(u, v)) {
      r.base.arc_colors[{lu, lv}] = bot_color(u, v);
      r.base.arc_colors[{lv, lu}] = bot_color(v, u);
    } else {
      // an added clique edge over a separator pair
      color_t c = bot_color(u, v);
      r.base.arc_colors[{lu, lv}] = c;
      r.base.arc_colors[{lv, lu}] = bot_color(v, u);
    }
  }
  // Minimum 2-separators that are neither edges of g nor completed cliques.
  for (auto [u, v] : min_seps) {
    if (label[u] < 0 || label[v] < 0) continue;
    auto key = std::minmax(label[u], label[v]);
    if (r.base.has_edge(key.first, key.second)) continue;
    r.separator_pair_colors[{key.first, key.second}] = bot_color(u, v);
    r.separator_pair_colors[{key.second, key.first}] = bot_color(v, u);
  }
  return r;
}

// Isomorphism of reduced graphs that also respects the off-edge separator
// pair colors. Enumerates base isomorphisms with the oracle and filters.
inline bool reduced_isomorphic(const ReducedGraph& a, const ReducedGraph& b,
                               int limit = oracle::default_limit()) {
  if (a.separator_pair_colors.size() != b.separator_pair_colors.size())
    return false;
  for (auto& m : oracle::all_isomorphisms(a.base, b.base, limit)) {
    bool ok = true;
    for (auto& [arc, c] : a.separator_pair_colors) {
      auto it = b.separator_pair_colors.find({m[arc.first], m[arc.second]});
      if (it == b.separator_pair_colors.end() || it->second != c) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace decompose
}  // namespace wlplanar
