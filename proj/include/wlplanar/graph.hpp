#pragma once

// Core graph representation: simple undirected graphs with optional arc
// colors and an optional rotation system (combinatorial embedding), the
// line-oriented text format, and the structural queries the rest of the
// library builds on (faces, connectivity, minimum separators, blocks,
// degree-2 smoothing).

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace wlplanar {

using color_t = std::int64_t;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parse failures carry the 1-based line number they occurred on.
struct ParseError : Error {
  int line;
  ParseError(int line_no, const std::string& msg)
      : Error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

// Combines two non-negative colors into one, injectively (Szudzik pairing).
// Used when a new tag has to be composed with a pre-existing color without a
// shared dictionary. Inputs are capped so nesting a few levels cannot
// overflow int64.
inline color_t pair_colors(color_t a, color_t b) {
  constexpr color_t kLimit = color_t(1) << 31;
  if (a < 0 || b < 0 || a >= kLimit || b >= kLimit)
    throw Error("color pairing input out of range");
  return a >= b ? a * a + a + b : b * b + a;
}

// Interns structured color values (flat integer encodings) into dense ids.
// Ids are assigned in first-use order; two values get equal ids within one
// interner exactly when they are equal. Share one interner across the graphs
// of a run whenever their colors must be comparable.
class ColorInterner {
 public:
  color_t intern(const std::vector<color_t>& key) {
    auto [it, inserted] = table_.try_emplace(key, next_);
    if (inserted) ++next_;
    return it->second;
  }
  std::size_t size() const { return table_.size(); }

 private:
  std::map<std::vector<color_t>, color_t> table_;
  color_t next_ = 0;
};

// A simple undirected graph on vertices 0..n-1. Arc colors map ordered pairs
// (u,v) with u == v or {u,v} an edge to non-negative ids; a pair absent from
// the map has color 0, so an empty map is the monochromatic graph. The two
// directions of an edge may carry different colors. The rotation system, when
// present, lists every vertex's neighbors in cyclic order and encodes a
// combinatorial embedding; it is certified planar only by the Euler check in
// faces().
struct ColoredGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;     // u < v, sorted, unique
  std::vector<std::vector<int>> adj;          // sorted neighbor lists
  std::map<std::pair<int, int>, color_t> arc_colors;  // nonzero entries only
  std::optional<std::vector<std::vector<int>>> rotation;

  bool has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
  }

  int degree(int v) const { return static_cast<int>(adj[v].size()); }

  // Color of the ordered pair (u,v); valid for u == v or {u,v} an edge.
  color_t arc_color(int u, int v) const {
    auto it = arc_colors.find({u, v});
    return it == arc_colors.end() ? 0 : it->second;
  }

  void set_arc_color(int u, int v, color_t c) {
    if (u != v && !has_edge(u, v)) throw Error("arc color outside domain");
    if (c == 0)
      arc_colors.erase({u, v});
    else
      arc_colors[{u, v}] = c;
  }

  bool monochromatic() const { return arc_colors.empty(); }

  bool operator==(const ColoredGraph& o) const {
    return n == o.n && edges == o.edges && arc_colors == o.arc_colors &&
           rotation == o.rotation;
  }
};

namespace detail {

inline void build_adjacency(ColoredGraph& g) {
  g.adj.assign(g.n, {});
  for (auto [u, v] : g.edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& nbrs : g.adj) std::sort(nbrs.begin(), nbrs.end());
}

}  // namespace detail

// Builds a graph from an edge list, normalizing edge order. Throws on loops,
// duplicate edges, or out-of-range endpoints.
inline ColoredGraph make_graph(int n, std::vector<std::pair<int, int>> edge_list) {
  ColoredGraph g;
  g.n = n;
  for (auto& [u, v] : edge_list) {
    if (u == v) throw Error("loop forbidden");
    if (u < 0 || v < 0 || u >= n || v >= n) throw Error("vertex out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edge_list.begin(), edge_list.end());
  if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end())
    throw Error("duplicate edge");
  g.edges = std::move(edge_list);
  detail::build_adjacency(g);
  return g;
}

// Checks the structural invariants that can be violated by direct field
// manipulation: rotation lists must match neighborhoods, arc colors must stay
// in their domain.
inline void validate(const ColoredGraph& g) {
  if (g.rotation) {
    if (static_cast<int>(g.rotation->size()) != g.n)
      throw Error("rotation size mismatch");
    for (int v = 0; v < g.n; ++v) {
      auto rot = (*g.rotation)[v];
      std::sort(rot.begin(), rot.end());
      if (rot != g.adj[v]) throw Error("rotation inconsistent with edge set");
    }
  }
  for (auto& [arc, c] : g.arc_colors) {
    auto [u, v] = arc;
    if (u < 0 || v < 0 || u >= g.n || v >= g.n)
      throw Error("arc color vertex out of range");
    if (u != v && !g.has_edge(u, v)) throw Error("arc color outside domain");
    if (c < 0) throw Error("negative arc color");
  }
}

// ---------------------------------------------------------------------------
// Text format.
//
//   # comment
//   n m
//   u v                (m edge lines)
//   rot u: v1 v2 ... vd  (optional; cyclic neighbor order)
//   arc u v c            (optional; color of ordered pair (u,v), default 0)
//
// If any rot line appears, every vertex of positive degree must get one.

inline ColoredGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  int n = -1, m = -1;
  std::vector<std::pair<int, int>> edge_list;
  std::vector<std::optional<std::vector<int>>> rot_lines;
  std::vector<std::tuple<int, int, color_t, int>> arc_lines;  // u,v,c,line
  bool any_rot = false;
  int edges_seen = 0;

  auto strip = [](std::string s) {
    auto hash = s.find('#');
    if (hash != std::string::npos) s.erase(hash);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
      s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(i);
  };

  while (std::getline(in, line)) {
    ++line_no;
    std::string body = strip(line);
    if (body.empty()) continue;

    if (n < 0) {
      std::istringstream ls(body);
      if (!(ls >> n >> m) || n < 0 || m < 0 || !(ls >> std::ws).eof())
        throw ParseError(line_no, "malformed header, expected \"n m\"");
      rot_lines.assign(n, std::nullopt);
      continue;
    }

    if (body.rfind("rot", 0) == 0) {
      std::istringstream ls(body.substr(3));
      int u;
      char colon;
      if (!(ls >> u >> colon) || colon != ':')
        throw ParseError(line_no, "malformed rot line");
      if (u < 0 || u >= n) throw ParseError(line_no, "rot vertex out of range");
      std::vector<int> order;
      int w;
      while (ls >> w) {
        if (w < 0 || w >= n)
          throw ParseError(line_no, "rot neighbor out of range");
        order.push_back(w);
      }
      if (!ls.eof()) throw ParseError(line_no, "malformed rot line");
      if (rot_lines[u]) throw ParseError(line_no, "duplicate rot line");
      rot_lines[u] = std::move(order);
      any_rot = true;
      continue;
    }

    if (body.rfind("arc", 0) == 0) {
      std::istringstream ls(body.substr(3));
      int u, v;
      color_t c;
      if (!(ls >> u >> v >> c) || !(ls >> std::ws).eof())
        throw ParseError(line_no, "malformed arc line");
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw ParseError(line_no, "arc vertex out of range");
      if (c < 0) throw ParseError(line_no, "negative arc color");
      arc_lines.emplace_back(u, v, c, line_no);
      continue;
    }

    // Edge line.
    std::istringstream ls(body);
    int u, v;
    if (!(ls >> u >> v) || !(ls >> std::ws).eof())
      throw ParseError(line_no, "malformed edge line");
    if (edges_seen >= m) throw ParseError(line_no, "more edge lines than m");
    if (u == v) throw ParseError(line_no, "loop forbidden");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError(line_no, "edge endpoint out of range");
    auto e = std::minmax(u, v);
    if (std::find(edge_list.begin(), edge_list.end(),
                  std::make_pair(e.first, e.second)) != edge_list.end())
      throw ParseError(line_no, "duplicate edge");
    edge_list.emplace_back(e.first, e.second);
    ++edges_seen;
  }

  if (n < 0) throw ParseError(line_no, "missing header");
  if (edges_seen != m) throw ParseError(line_no, "fewer edge lines than m");

  ColoredGraph g = make_graph(n, std::move(edge_list));

  for (auto [u, v, c, ln] : arc_lines) {
    if (u != v && !g.has_edge(u, v))
      throw ParseError(ln, "arc color for a non-edge pair");
    if (c != 0) g.arc_colors[{u, v}] = c;
  }

  if (any_rot) {
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
      if (!rot_lines[v]) {
        if (g.degree(v) > 0)
          throw ParseError(line_no, "rotation inconsistent with edge set: vertex " +
                                        std::to_string(v) + " has no rot line");
        continue;
      }
      auto sorted = *rot_lines[v];
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
          sorted != g.adj[v])
        throw ParseError(line_no, "rotation inconsistent with edge set: vertex " +
                                      std::to_string(v));
      rot[v] = *rot_lines[v];
    }
    g.rotation = std::move(rot);
  }

  return g;
}

inline std::string to_file_format(const ColoredGraph& g) {
  std::ostringstream out;
  out << g.n << ' ' << g.edges.size() << '\n';
  for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
  if (g.rotation) {
    for (int v = 0; v < g.n; ++v) {
      if ((*g.rotation)[v].empty()) continue;
      out << "rot " << v << ':';
      for (int w : (*g.rotation)[v]) out << ' ' << w;
      out << '\n';
    }
  }
  for (auto& [arc, c] : g.arc_colors)
    out << "arc " << arc.first << ' ' << arc.second << ' ' << c << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Connectivity.

// Connected components of g after deleting `removed`; singleton vertex sets
// for isolated vertices included. Each component is sorted.
inline std::vector<std::vector<int>> components_after_removal(
    const ColoredGraph& g, const std::vector<bool>& removed) {
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(g.n, false);
  for (int s = 0; s < g.n; ++s) {
    if (seen[s] || removed[s]) continue;
    std::vector<int> comp, stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : g.adj[v])
        if (!seen[w] && !removed[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline std::vector<std::vector<int>> components(const ColoredGraph& g) {
  return components_after_removal(g, std::vector<bool>(g.n, false));
}

inline bool is_connected(const ColoredGraph& g) {
  return g.n == 0 || components(g).size() == 1;
}

inline bool is_complete(const ColoredGraph& g) {
  return static_cast<long>(g.edges.size()) == static_cast<long>(g.n) * (g.n - 1) / 2;
}

namespace detail {

// Enumerates all k-subsets of 0..n-1, calling f(subset). f returns false to
// abort the enumeration.
template <typename F>
bool for_each_subset(int n, int k, F&& f) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return true;
  while (true) {
    if (!f(idx)) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline bool disconnects(const ColoredGraph& g, const std::vector<int>& subset) {
  std::vector<bool> removed(g.n, false);
  for (int v : subset) removed[v] = true;
  return components_after_removal(g, removed).size() >= 2;
}

}  // namespace detail

// True iff |V| > k and no vertex set of size < k disconnects g. Brute force
// over subsets; O(n^k (n+m)), intended for the small graphs this library
// works with.
inline bool is_k_connected(const ColoredGraph& g, int k) {
  if (k < 1) throw Error("k must be positive");
  if (g.n <= k) return false;
  for (int s = 0; s < k; ++s) {
    bool ok = detail::for_each_subset(g.n, s, [&](const std::vector<int>& sub) {
      return !detail::disconnects(g, sub);
    });
    if (!ok) return false;
  }
  return true;
}

// All separators of minimum cardinality. Requires g connected and not
// complete (a complete graph has no separator).
inline std::vector<std::vector<int>> min_separators(const ColoredGraph& g) {
  if (!is_connected(g)) throw Error("min_separators: graph not connected");
  if (is_complete(g)) throw Error("min_separators: complete graph has no separator");
  for (int c = 1; c <= g.n - 2; ++c) {
    std::vector<std::vector<int>> found;
    detail::for_each_subset(g.n, c, [&](const std::vector<int>& sub) {
      if (detail::disconnects(g, sub)) found.push_back(sub);
      return true;
    });
    if (!found.empty()) return found;
  }
  throw Error("min_separators: no separator found");
}

inline std::vector<int> cut_vertices(const ColoredGraph& g) {
  std::vector<int> cuts;
  for (int v = 0; v < g.n; ++v)
    if (detail::disconnects(g, {v})) cuts.push_back(v);
  return cuts;
}

// Maximal vertex sets inducing a 2-connected subgraph (> 2 vertices). These
// are the DFS blocks with at least 3 vertices; bridges do not qualify.
inline std::vector<std::vector<int>> two_connected_components(const ColoredGraph& g) {
  // Hopcroft-Tarjan block decomposition via lowpoints, iterative-free since
  // our graphs are tiny; recursion depth <= n.
  std::vector<int> num(g.n, -1), low(g.n, 0);
  std::vector<std::pair<int, int>> stack;
  std::vector<std::vector<int>> blocks;
  int counter = 0;

  auto emit_block = [&](std::pair<int, int> top_edge) {
    std::set<int> verts;
    while (!stack.empty()) {
      auto e = stack.back();
      stack.pop_back();
      verts.insert(e.first);
      verts.insert(e.second);
      if (e == top_edge) break;
    }
    if (verts.size() >= 3)
      blocks.emplace_back(verts.begin(), verts.end());
  };

  struct Frame {
    int v, parent;
    std::size_t i;
  };
  for (int root = 0; root < g.n; ++root) {
    if (num[root] != -1) continue;
    std::vector<Frame> frames{{root, -1, 0}};
    num[root] = low[root] = counter++;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.i < g.adj[f.v].size()) {
        int w = g.adj[f.v][f.i++];
        if (w == f.parent) continue;
        if (num[w] == -1) {
          stack.push_back({f.v, w});
          num[w] = low[w] = counter++;
          frames.push_back({w, f.v, 0});
        } else if (num[w] < num[f.v]) {
          stack.push_back({f.v, w});
          low[f.v] = std::min(low[f.v], num[w]);
        }
      } else {
        int v = f.v, parent = f.parent;
        frames.pop_back();
        if (parent != -1) {
          if (low[v] >= num[parent]) emit_block({parent, v});
          low[parent] = std::min(low[parent], low[v]);
        }
      }
    }
  }
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

inline bool same_two_connected_component(
    const std::vector<std::vector<int>>& blocks, int u, int v) {
  for (auto& b : blocks)
    if (std::binary_search(b.begin(), b.end(), u) &&
        std::binary_search(b.begin(), b.end(), v))
      return true;
  return false;
}

// ---------------------------------------------------------------------------
// Faces of a rotation system.

// Traces the faces of the combinatorial embedding. Each face is the cyclic
// sequence of vertices along its boundary walk; every directed edge lies on
// exactly one face. Requires a connected graph with a rotation system, and
// throws if the Euler check V - E + F = 2 fails (invalid or non-planar
// rotation).
inline std::vector<std::vector<int>> faces(const ColoredGraph& g) {
  if (!g.rotation) throw Error("faces: rotation system missing");
  if (!is_connected(g)) throw Error("faces: graph not connected");
  validate(g);
  const auto& rot = *g.rotation;

  // next position of u within rot[v]
  std::map<std::pair<int, int>, int> pos;
  for (int v = 0; v < g.n; ++v)
    for (std::size_t i = 0; i < rot[v].size(); ++i) pos[{v, rot[v][i]}] = static_cast<int>(i);

  std::set<std::pair<int, int>> used;
  std::vector<std::vector<int>> result;
  for (auto [a, b] : g.edges) {
    for (auto start : {std::make_pair(a, b), std::make_pair(b, a)}) {
      if (used.count(start)) continue;
      std::vector<int> cycle;
      auto cur = start;
      do {
        used.insert(cur);
        cycle.push_back(cur.first);
        auto [u, v] = cur;
        const auto& rv = rot[v];
        int i = pos.at({v, u});
        int w = rv[(i + 1) % rv.size()];
        cur = {v, w};
      } while (cur != start);
      // Deterministic starting point: first occurrence of the least vertex.
      auto mn = std::min_element(cycle.begin(), cycle.end());
      std::rotate(cycle.begin(), mn, cycle.end());
      result.push_back(std::move(cycle));
    }
  }
  long euler = static_cast<long>(g.n) - static_cast<long>(g.edges.size()) +
               static_cast<long>(result.size());
  if (euler != 2)
    throw Error("faces: Euler check failed (V-E+F = " + std::to_string(euler) + ")");
  std::sort(result.begin(), result.end());
  return result;
}

inline std::map<int, int> face_length_multiset(const std::vector<std::vector<int>>& fs) {
  std::map<int, int> m;
  for (auto& f : fs) ++m[static_cast<int>(f.size())];
  return m;
}

inline std::map<int, int> degree_multiset(const ColoredGraph& g) {
  std::map<int, int> m;
  for (int v = 0; v < g.n; ++v) ++m[g.degree(v)];
  return m;
}

// ---------------------------------------------------------------------------
// Structural transforms.

inline ColoredGraph permute_graph(const ColoredGraph& g, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> edge_list;
  edge_list.reserve(g.edges.size());
  for (auto [u, v] : g.edges) edge_list.emplace_back(perm[u], perm[v]);
  ColoredGraph h = make_graph(g.n, std::move(edge_list));
  for (auto& [arc, c] : g.arc_colors)
    h.arc_colors[{perm[arc.first], perm[arc.second]}] = c;
  if (g.rotation) {
    std::vector<std::vector<int>> rot(g.n);
    for (int v = 0; v < g.n; ++v) {
      rot[perm[v]].reserve((*g.rotation)[v].size());
      for (int w : (*g.rotation)[v]) rot[perm[v]].push_back(perm[w]);
    }
    h.rotation = std::move(rot);
  }
  return h;
}

inline ColoredGraph disjoint_union(const ColoredGraph& a, const ColoredGraph& b) {
  std::vector<std::pair<int, int>> edge_list = a.edges;
  for (auto [u, v] : b.edges) edge_list.emplace_back(u + a.n, v + a.n);
  ColoredGraph g = make_graph(a.n + b.n, std::move(edge_list));
  g.arc_colors = a.arc_colors;
  for (auto& [arc, c] : b.arc_colors)
    g.arc_colors[{arc.first + a.n, arc.second + a.n}] = c;
  if (a.rotation && b.rotation) {
    std::vector<std::vector<int>> rot = *a.rotation;
    rot.resize(g.n);
    for (int v = 0; v < b.n; ++v)
      for (int w : (*b.rotation)[v]) rot[v + a.n].push_back(w + a.n);
    g.rotation = std::move(rot);
  }
  return g;
}

// Replaces edge {u,v} by a path u - w - v through a fresh vertex w = n.
// Forward arc colors are inherited forward, backward ones backward; the new
// vertex is uncolored. The rotation, if present, is updated in place.
inline ColoredGraph subdivide_edge(const ColoredGraph& g, int u, int v) {
  if (!g.has_edge(u, v)) throw Error("subdivide_edge: not an edge");
  int w = g.n;
  std::vector<std::pair<int, int>> edge_list;
  for (auto e : g.edges)
    if (e != std::minmax(u, v)) edge_list.push_back(e);
  edge_list.emplace_back(u, w);
  edge_list.emplace_back(v, w);
  ColoredGraph h = make_graph(g.n + 1, std::move(edge_list));
  for (auto& [arc, c] : g.arc_colors) {
    if (arc == std::make_pair(u, v)) {
      h.arc_colors[{u, w}] = c;
      h.arc_colors[{w, v}] = c;
    } else if (arc == std::make_pair(v, u)) {
      h.arc_colors[{v, w}] = c;
      h.arc_colors[{w, u}] = c;
    } else {
      h.arc_colors[arc] = c;
    }
  }
  if (g.rotation) {
    auto rot = *g.rotation;
    rot.resize(g.n + 1);
    std::replace(rot[u].begin(), rot[u].end(), v, w);
    std::replace(rot[v].begin(), rot[v].end(), u, w);
    rot[w] = {u, v};
    h.rotation = std::move(rot);
  }
  return h;
}

// ---------------------------------------------------------------------------
// Degree-2 smoothing.
//
// Returns the minor retaining the vertices of degree >= 3: two retained
// vertices are adjacent iff g joins them by a path whose inner vertices all
// have degree 2 (a direct edge counts, with an empty inner part). The arc
// color of (u,v) encodes the multiset, over all such paths, of
//   [length, forward/backward color of each step, diagonal color of each
//    inner vertex]
// read from u to v, interned through `ctx`. Graphs without degree-2 vertices
// are returned unchanged. Requires a 2-connected input that is not a cycle.

inline ColoredGraph smooth_degree2(const ColoredGraph& g, ColorInterner& ctx) {
  bool has_deg2 = false;
  for (int v = 0; v < g.n; ++v) has_deg2 |= g.degree(v) == 2;
  if (!has_deg2) return g;

  if (!is_k_connected(g, 2)) throw Error("smooth_degree2: graph not 2-connected");
  bool all_deg2 = true;
  for (int v = 0; v < g.n; ++v) all_deg2 &= g.degree(v) == 2;
  if (all_deg2) throw Error("smooth_degree2: cycle input, result would be empty");

  std::vector<int> keep;  // old label -> new label
  std::vector<int> label(g.n, -1);
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) != 2) {
      label[v] = static_cast<int>(keep.size());
      keep.push_back(v);
    }

  // Walk every degree-2 chain once from each retained endpoint; collect the
  // path descriptor in the direction walked.
  std::map<std::pair<int, int>, std::vector<std::vector<color_t>>> path_descs;
  for (int u : keep) {
    for (int first : g.adj[u]) {
      std::vector<color_t> desc;
      int prev = u, cur = first;
      desc.push_back(0);  // length, patched below
      desc.push_back(g.arc_color(prev, cur));
      desc.push_back(g.arc_color(cur, prev));
      int len = 1;
      while (g.degree(cur) == 2) {
        desc.push_back(g.arc_color(cur, cur));
        int next = g.adj[cur][0] == prev ? g.adj[cur][1] : g.adj[cur][0];
        desc.push_back(g.arc_color(cur, next));
        desc.push_back(g.arc_color(next, cur));
        prev = cur;
        cur = next;
        ++len;
      }
      desc[0] = len;
      path_descs[{u, cur}].push_back(std::move(desc));
    }
  }

  std::vector<std::pair<int, int>> edge_list;
  std::map<std::pair<int, int>, color_t> colors;
  for (auto& [arc, descs] : path_descs) {
    auto [u, v] = arc;
    if (label[u] < label[v]) edge_list.emplace_back(label[u], label[v]);
    std::vector<std::vector<color_t>> sorted = descs;
    std::sort(sorted.begin(), sorted.end());
    std::vector<color_t> key{static_cast<color_t>(sorted.size())};
    for (auto& d : sorted) {
      key.push_back(static_cast<color_t>(d.size()));
      key.insert(key.end(), d.begin(), d.end());
    }
    colors[{label[u], label[v]}] = ctx.intern(key);
  }

  ColoredGraph h = make_graph(static_cast<int>(keep.size()), std::move(edge_list));
  h.arc_colors = std::move(colors);
  for (int v : keep) {
    color_t c = g.arc_color(v, v);
    if (c != 0) h.arc_colors[{label[v], label[v]}] = c;
  }
  return h;
}

inline ColoredGraph smooth_degree2(const ColoredGraph& g) {
  ColorInterner local;
  return smooth_degree2(g, local);
}

// Small builders used all over the tests and the catalog.

inline ColoredGraph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return make_graph(n, std::move(e));
}

inline ColoredGraph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return make_graph(n, std::move(e));
}

inline ColoredGraph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return make_graph(n, std::move(e));
}

inline ColoredGraph star_graph(int leaves) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return make_graph(leaves + 1, std::move(e));
}

}  // namespace wlplanar
