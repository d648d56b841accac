#pragma once

// The k-dimensional Weisfeiler-Leman refinement engine, k in {1,2,3}.
//
// Colors are canonical integers: every round, the distinct signatures of all
// tuples (across every graph of a joint run) are sorted by a total structural
// order and renamed 0..c-1 in sorted order. Equal ids therefore mean equal
// signatures across graphs of the same run, which is what the cross-graph
// distinguishing test needs. Signature equality is purely structural; nothing
// is hashed.
//
// For k = 1 the refinement multiset ranges over the neighbors of the vertex;
// for k >= 2 it ranges over all vertices, substituted into each position.

#include <array>
#include <numeric>
#include <span>

#include "wlplanar/graph.hpp"

namespace wlplanar {
namespace wl {

// A (possibly intermediate) coloring of the k-tuples of one graph. Tuples are
// indexed v1*n^(k-1) + ... + vk; class ids are dense 0..num_colors-1 within
// the run that produced the coloring.
struct Coloring {
  int k = 0;
  int n = 0;
  int round = 0;       // refinement rounds applied
  int num_colors = 0;  // distinct ids in `color` (run-wide count for joint runs)
  std::vector<int> color;

  long tuple_count() const { return static_cast<long>(color.size()); }

  int color_of(std::span<const int> tuple) const {
    long idx = 0;
    for (int v : tuple) idx = idx * n + v;
    return color[idx];
  }

  // Color of a single vertex via the repetition extension: the l-tuple
  // (v) is padded by repeating its last entry k-l times.
  int vertex_color(int v) const {
    std::array<int, 3> t{v, v, v};
    return color_of(std::span<const int>(t.data(), k));
  }

  // Vertex partition induced by the diagonal colors, as sorted classes.
  std::vector<std::vector<int>> vertex_classes() const {
    std::map<int, std::vector<int>> by_color;
    for (int v = 0; v < n; ++v) by_color[vertex_color(v)].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& [c, vs] : by_color) out.push_back(vs);
    std::sort(out.begin(), out.end());
    return out;
  }

  // Multiset of class sizes restricted to this graph, keyed by id. Two graphs
  // of one joint run are distinguished iff these maps differ.
  std::map<int, long> class_sizes() const {
    std::map<int, long> m;
    for (int c : color) ++m[c];
    return m;
  }
};

namespace detail {

inline void check_k(int k) {
  if (k < 1 || k > 3) throw Error("wl: k must be 1, 2 or 3");
}

inline long pow_n(int n, int k) {
  long p = 1;
  for (int i = 0; i < k; ++i) p *= n;
  return p;
}

// Initial signature of one tuple: the lifted arc-color value followed by the
// ordered isomorphism type of the position-colored induced subgraph (for each
// i < j a trit: equal / adjacent / non-adjacent).
inline std::vector<color_t> initial_signature(const ColoredGraph& g,
                                              std::span<const int> t) {
  int k = static_cast<int>(t.size());
  std::vector<color_t> sig;
  sig.reserve(2 + k * (k - 1) / 2);
  int u1 = t[0], u2 = k >= 2 ? t[1] : t[0];
  if (u1 == u2 || g.has_edge(u1, u2)) {
    sig.push_back(g.arc_color(u1, u2));
    sig.push_back(0);
  } else {
    sig.push_back(1);
    sig.push_back(1);
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      color_t trit = t[i] == t[j] ? 0 : g.has_edge(t[i], t[j]) ? 1 : 2;
      sig.push_back(trit);
    }
  return sig;
}

// Whole-run state: per-graph dense color arrays refined in lockstep against
// one shared dictionary.
struct RunState {
  int k;
  std::vector<const ColoredGraph*> graphs;
  std::vector<Coloring> colorings;
  std::vector<std::vector<std::vector<int>>>* trace = nullptr;  // per graph, per round

  void record_round() {
    if (!trace) return;
    for (std::size_t i = 0; i < graphs.size(); ++i)
      (*trace)[i].push_back(colorings[i].color);
  }
};

// Sorts all signatures of a round and renames them to dense ids, writing the
// ids back through `out`. Returns the number of distinct signatures.
inline int assign_ids(std::vector<std::vector<color_t>>& sigs,
                      std::vector<int*> out) {
  std::vector<int> order(sigs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return sigs[a] < sigs[b]; });
  int next = -1;
  const std::vector<color_t>* prev = nullptr;
  for (int idx : order) {
    if (!prev || *prev != sigs[idx]) {
      ++next;
      prev = &sigs[idx];
    }
    *out[idx] = next;
  }
  return next + 1;
}

inline void initial_round(RunState& rs) {
  std::vector<std::vector<color_t>> sigs;
  std::vector<int*> out;
  for (std::size_t gi = 0; gi < rs.graphs.size(); ++gi) {
    const ColoredGraph& g = *rs.graphs[gi];
    Coloring& c = rs.colorings[gi];
    c.k = rs.k;
    c.n = g.n;
    c.round = 0;
    c.color.assign(pow_n(g.n, rs.k), 0);
    std::array<int, 3> t{};
    for (long idx = 0; idx < c.tuple_count(); ++idx) {
      long rest = idx;
      for (int p = rs.k - 1; p >= 0; --p) {
        t[p] = static_cast<int>(rest % g.n);
        rest /= g.n;
      }
      sigs.push_back(initial_signature(g, std::span<const int>(t.data(), rs.k)));
      out.push_back(&c.color[idx]);
    }
  }
  int total = assign_ids(sigs, out);
  for (auto& c : rs.colorings) c.num_colors = total;
  rs.record_round();
}

// One refinement round across the whole run. Returns the new number of
// distinct ids over the union of all tuples.
inline int refine_round(RunState& rs) {
  std::vector<std::vector<color_t>> sigs;
  std::vector<int*> out;
  std::vector<std::vector<int>> next_colors(rs.graphs.size());

  for (std::size_t gi = 0; gi < rs.graphs.size(); ++gi) {
    const ColoredGraph& g = *rs.graphs[gi];
    Coloring& c = rs.colorings[gi];
    next_colors[gi].assign(c.color.size(), 0);
    const int n = g.n, k = rs.k;

    if (k == 1) {
      for (int v = 0; v < n; ++v) {
        std::vector<color_t> sig;
        sig.reserve(1 + g.adj[v].size());
        sig.push_back(c.color[v]);
        std::vector<color_t> ms;
        ms.reserve(g.adj[v].size());
        for (int w : g.adj[v]) ms.push_back(c.color[w]);
        std::sort(ms.begin(), ms.end());
        sig.insert(sig.end(), ms.begin(), ms.end());
        sigs.push_back(std::move(sig));
        out.push_back(&next_colors[gi][v]);
      }
      continue;
    }

    // strides for substituting w into position p
    long stride[3] = {0, 0, 0};
    stride[k - 1] = 1;
    for (int p = k - 2; p >= 0; --p) stride[p] = stride[p + 1] * n;

    std::vector<std::array<color_t, 3>> ms(n);
    std::array<int, 3> t{};
    for (long idx = 0; idx < c.tuple_count(); ++idx) {
      long rest = idx;
      for (int p = k - 1; p >= 0; --p) {
        t[p] = static_cast<int>(rest % n);
        rest /= n;
      }
      for (int w = 0; w < n; ++w) {
        for (int p = 0; p < k; ++p) {
          long widx = idx + (static_cast<long>(w) - t[p]) * stride[p];
          ms[w][p] = c.color[widx];
        }
        for (int p = k; p < 3; ++p) ms[w][p] = 0;
      }
      std::sort(ms.begin(), ms.end());
      std::vector<color_t> sig;
      sig.reserve(1 + n * k);
      sig.push_back(c.color[idx]);
      for (auto& vec : ms)
        for (int p = 0; p < k; ++p) sig.push_back(vec[p]);
      sigs.push_back(std::move(sig));
      out.push_back(&next_colors[gi][idx]);
    }
  }

  int total = assign_ids(sigs, out);
  for (std::size_t gi = 0; gi < rs.graphs.size(); ++gi) {
    rs.colorings[gi].color = std::move(next_colors[gi]);
    rs.colorings[gi].num_colors = total;
    ++rs.colorings[gi].round;
  }
  rs.record_round();
  return total;
}

// Runs refinement until the partition of the union of all tuples stops
// getting strictly finer. (Per-graph class counts may stabilize earlier while
// cross-graph identifications still split; the union count is the sound
// stopping rule for cross-graph color comparison.)
inline void refine_to_fixpoint(RunState& rs) {
  int prev = rs.colorings.empty() ? 0 : rs.colorings[0].num_colors;
  while (true) {
    int cur = refine_round(rs);
    if (cur == prev) break;
    prev = cur;
  }
}

}  // namespace detail

// The round-0 coloring of a single graph.
inline Coloring initial_coloring(const ColoredGraph& g, int k) {
  detail::check_k(k);
  detail::RunState rs;
  rs.k = k;
  rs.graphs = {&g};
  rs.colorings.resize(1);
  detail::initial_round(rs);
  return rs.colorings[0];
}

// Refines `initial` on g to the stable coloring.
inline Coloring refine_to_stable(const ColoredGraph& g, int k, Coloring initial) {
  detail::check_k(k);
  if (initial.k != k || initial.n != g.n ||
      initial.tuple_count() != detail::pow_n(g.n, k))
    throw Error("refine_to_stable: coloring does not fit graph");
  detail::RunState rs;
  rs.k = k;
  rs.graphs = {&g};
  rs.colorings = {std::move(initial)};
  detail::refine_to_fixpoint(rs);
  return rs.colorings[0];
}

inline Coloring stable_coloring(const ColoredGraph& g, int k) {
  return refine_to_stable(g, k, initial_coloring(g, k));
}

// Joint refinement of several graphs against one shared dictionary; the
// returned colorings' ids are comparable across the input graphs. Optionally
// records every round of every graph into `trace`.
inline std::vector<Coloring> joint_stable(
    std::span<const ColoredGraph* const> graphs, int k,
    std::vector<std::vector<std::vector<int>>>* trace = nullptr) {
  detail::check_k(k);
  detail::RunState rs;
  rs.k = k;
  rs.graphs.assign(graphs.begin(), graphs.end());
  rs.colorings.resize(rs.graphs.size());
  if (trace) {
    trace->assign(rs.graphs.size(), {});
    rs.trace = trace;
  }
  detail::initial_round(rs);
  detail::refine_to_fixpoint(rs);
  return rs.colorings;
}

inline std::vector<Coloring> joint_stable(const ColoredGraph& g,
                                          const ColoredGraph& h, int k) {
  std::array<const ColoredGraph*, 2> gs{&g, &h};
  return joint_stable(std::span<const ColoredGraph* const>(gs), k);
}

// True iff some stable color's class sizes differ between g and h.
inline bool distinguishes(const ColoredGraph& g, const ColoredGraph& h, int k) {
  auto cs = joint_stable(g, h, k);
  return cs[0].class_sizes() != cs[1].class_sizes();
}

// The graph with vertices vs individualized in order: the diagonal color of
// vs[i] becomes the pair (previous color, i+1), every other diagonal color
// (previous color, 0). An empty list returns the graph unchanged.
inline ColoredGraph individualize(const ColoredGraph& g, std::span<const int> vs) {
  if (vs.empty()) return g;
  std::vector<bool> seen(g.n, false);
  for (int v : vs) {
    if (v < 0 || v >= g.n) throw Error("individualize: vertex out of range");
    if (seen[v]) throw Error("individualize: repeated vertex");
    seen[v] = true;
  }
  ColoredGraph h = g;
  std::vector<color_t> tag(g.n, 0);
  for (std::size_t i = 0; i < vs.size(); ++i)
    tag[vs[i]] = static_cast<color_t>(i) + 1;
  for (int v = 0; v < g.n; ++v)
    h.set_arc_color(v, v, pair_colors(g.arc_color(v, v), tag[v]));
  return h;
}

inline ColoredGraph individualize(const ColoredGraph& g,
                                  std::initializer_list<int> vs) {
  return individualize(g, std::span<const int>(vs.begin(), vs.size()));
}

// Every class a singleton. Only meaningful for k = 1.
inline bool is_discrete(const Coloring& c) {
  if (c.k != 1) throw Error("is_discrete: k must be 1");
  return c.num_colors >= c.n &&
         [&] {
           std::vector<bool> used(c.num_colors, false);
           for (int id : c.color) {
             if (used[id]) return false;
             used[id] = true;
           }
           return true;
         }();
}

// W_i(u,v): number of walks of length exactly i, by i-fold adjacency
// self-composition. Counts fit int64 for the graph sizes this library
// targets (degree^i up to ~10^14).
inline std::vector<std::vector<std::int64_t>> walk_counts(const ColoredGraph& g,
                                                          int length) {
  if (length < 0) throw Error("walk_counts: negative length");
  std::vector<std::vector<std::int64_t>> w(g.n, std::vector<std::int64_t>(g.n, 0));
  for (int v = 0; v < g.n; ++v) w[v][v] = 1;
  for (int step = 0; step < length; ++step) {
    std::vector<std::vector<std::int64_t>> next(g.n,
                                                std::vector<std::int64_t>(g.n, 0));
    for (int u = 0; u < g.n; ++u)
      for (int v = 0; v < g.n; ++v) {
        if (w[u][v] == 0) continue;
        for (int x : g.adj[v]) next[u][x] += w[u][v];
      }
    w = std::move(next);
  }
  return w;
}

}  // namespace wl
}  // namespace wlplanar
