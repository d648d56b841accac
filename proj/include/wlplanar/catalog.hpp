#pragma once

// Generators (with rotation systems) for the eight exception families, the
// curated non-exception corpus (prisms, antiprisms, wheels, Kleetopes), the
// exhaustive small-graph corpus with brute-force planarity, and the
// exception-detection predicate.
//
// Platonic bases are built from convex coordinates: the rotation of a vertex
// is its neighbors sorted by angle in the tangent plane of the outward
// normal. Kleetopes and the rhombic dodecahedron are then derived
// combinatorially from the base's faces, so no further geometry is needed.

#include <cmath>

#include "wlplanar/oracle.hpp"

namespace wlplanar {
namespace catalog {

namespace detail {

struct Vec3 {
  double x, y, z;
};

inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 normalize(Vec3 a) {
  double len = std::sqrt(dot(a, a));
  return {a.x / len, a.y / len, a.z / len};
}

// Rotation system of a convex solid: at each vertex, neighbors ordered by
// angle around the outward normal (position minus centroid).
inline std::vector<std::vector<int>> rotation_from_coords(
    const std::vector<Vec3>& pos, const std::vector<std::vector<int>>& adj) {
  int n = static_cast<int>(pos.size());
  Vec3 centroid{0, 0, 0};
  for (auto& p : pos) {
    centroid.x += p.x / n;
    centroid.y += p.y / n;
    centroid.z += p.z / n;
  }
  std::vector<std::vector<int>> rot(n);
  for (int v = 0; v < n; ++v) {
    Vec3 normal = normalize(pos[v] - centroid);
    // orthonormal tangent basis
    Vec3 seed = std::abs(normal.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    Vec3 e1 = normalize(cross(normal, seed));
    Vec3 e2 = cross(normal, e1);
    std::vector<std::pair<double, int>> angles;
    for (int w : adj[v]) {
      Vec3 d = pos[w] - pos[v];
      angles.emplace_back(std::atan2(dot(d, e2), dot(d, e1)), w);
    }
    std::sort(angles.begin(), angles.end());
    for (auto& [a, w] : angles) rot[v].push_back(w);
  }
  return rot;
}

inline ColoredGraph from_coords(std::vector<Vec3> pos,
                                std::vector<std::pair<int, int>> edge_list) {
  ColoredGraph g = make_graph(static_cast<int>(pos.size()), std::move(edge_list));
  g.rotation = rotation_from_coords(pos, g.adj);
  validate(g);
  faces(g);  // Euler check certifies the derived embedding
  return g;
}

// The face of the base embedding that contains the corner (a, v, b): the face
// traced by leaving v towards b with predecessor a in rot(v). Faces are
// passed as the traced cycles; the corner is located by scanning.
inline int face_at_corner(const std::vector<std::vector<int>>& face_list, int a,
                          int v, int b) {
  for (std::size_t fi = 0; fi < face_list.size(); ++fi) {
    const auto& f = face_list[fi];
    int len = static_cast<int>(f.size());
    for (int i = 0; i < len; ++i)
      if (f[i] == a && f[(i + 1) % len] == v && f[(i + 2) % len] == b)
        return static_cast<int>(fi);
  }
  throw Error("face_at_corner: corner not found");
}

// Adds one apex per face of `base`, joined to that face's vertices. With
// keep_base_edges the result is the Kleetope (triakis/tetrakis solids);
// without, the base edges are dropped, which turns the cube into the rhombic
// dodecahedron.
inline ColoredGraph face_split(const ColoredGraph& base, bool keep_base_edges) {
  auto face_list = faces(base);
  int n = base.n;
  int total = n + static_cast<int>(face_list.size());

  std::vector<std::pair<int, int>> edge_list;
  if (keep_base_edges) edge_list = base.edges;
  for (std::size_t fi = 0; fi < face_list.size(); ++fi)
    for (int v : face_list[fi]) edge_list.emplace_back(v, n + static_cast<int>(fi));

  std::vector<std::vector<int>> rot(total);
  // apex rotation: the face cycle itself
  for (std::size_t fi = 0; fi < face_list.size(); ++fi)
    rot[n + fi] = face_list[fi];
  // base vertex rotation: original neighbors interleaved with the apexes of
  // the faces between them (or apexes alone when base edges are dropped)
  const auto& base_rot = *base.rotation;
  for (int v = 0; v < n; ++v) {
    int d = static_cast<int>(base_rot[v].size());
    for (int i = 0; i < d; ++i) {
      int a = base_rot[v][i];
      int b = base_rot[v][(i + 1) % d];
      if (keep_base_edges) rot[v].push_back(a);
      rot[v].push_back(n + face_at_corner(face_list, a, v, b));
    }
  }

  ColoredGraph g = make_graph(total, std::move(edge_list));
  g.rotation = std::move(rot);
  validate(g);
  faces(g);  // Euler check
  return g;
}

}  // namespace detail

// --- the eight families of Table 1 ---

// Bipyramid over an n-gon: equator 0..n-1, apexes n (north) and n+1 (south).
inline ColoredGraph bipyramid(int n) {
  if (n < 3) throw Error("bipyramid: n must be at least 3");
  std::vector<detail::Vec3> pos;
  for (int i = 0; i < n; ++i) {
    double a = 2 * 3.14159265358979323846 * i / n;
    pos.push_back({std::cos(a), std::sin(a), 0});
  }
  pos.push_back({0, 0, 1});
  pos.push_back({0, 0, -1});
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) {
    e.emplace_back(i, (i + 1) % n);
    e.emplace_back(i, n);
    e.emplace_back(i, n + 1);
  }
  return detail::from_coords(std::move(pos), std::move(e));
}

inline ColoredGraph tetrahedron() {
  std::vector<detail::Vec3> pos{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  std::vector<std::pair<int, int>> e{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  return detail::from_coords(std::move(pos), std::move(e));
}

// Cube on 3-bit vertex labels; neighbors differ in one bit.
inline ColoredGraph cube() {
  std::vector<detail::Vec3> pos;
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < 8; ++v) {
    pos.push_back({v & 1 ? 1.0 : -1.0, v & 2 ? 1.0 : -1.0, v & 4 ? 1.0 : -1.0});
    for (int b = 0; b < 3; ++b)
      if (!(v & (1 << b))) e.emplace_back(v, v | (1 << b));
  }
  return detail::from_coords(std::move(pos), std::move(e));
}

inline ColoredGraph octahedron() { return bipyramid(4); }

inline ColoredGraph icosahedron() {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  std::vector<detail::Vec3> pos;
  for (double s1 : {-1.0, 1.0})
    for (double s2 : {-phi, phi}) {
      pos.push_back({0, s1, s2});
      pos.push_back({s1, s2, 0});
      pos.push_back({s2, 0, s1});
    }
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < 12; ++u)
    for (int v = u + 1; v < 12; ++v) {
      auto d = pos[u] - pos[v];
      if (detail::dot(d, d) < 4.0 + 1e-9) e.emplace_back(u, v);
    }
  return detail::from_coords(std::move(pos), std::move(e));
}

inline ColoredGraph triakis_tetrahedron() {
  return detail::face_split(tetrahedron(), true);
}
inline ColoredGraph triakis_octahedron() {
  return detail::face_split(octahedron(), true);
}
inline ColoredGraph tetrakis_hexahedron() {
  return detail::face_split(cube(), true);
}
inline ColoredGraph rhombic_dodecahedron() {
  return detail::face_split(cube(), false);
}
// Kleetope of the icosahedron; not an exception, used as the near-miss case.
inline ColoredGraph triakis_icosahedron() {
  return detail::face_split(icosahedron(), true);
}

// --- curated non-exception families ---

inline ColoredGraph prism(int n) {
  if (n < 3) throw Error("prism: n must be at least 3");
  std::vector<detail::Vec3> pos;
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) {
    double a = 2 * 3.14159265358979323846 * i / n;
    pos.push_back({std::cos(a), std::sin(a), 1});
    e.emplace_back(i, (i + 1) % n);
    e.emplace_back(i, n + i);
  }
  for (int i = 0; i < n; ++i) {
    double a = 2 * 3.14159265358979323846 * i / n;
    pos.push_back({std::cos(a), std::sin(a), -1});
    e.emplace_back(n + i, n + (i + 1) % n);
  }
  return detail::from_coords(std::move(pos), std::move(e));
}

inline ColoredGraph antiprism(int n) {
  if (n < 3) throw Error("antiprism: n must be at least 3");
  std::vector<detail::Vec3> pos;
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) {
    double a = 2 * 3.14159265358979323846 * i / n;
    pos.push_back({std::cos(a), std::sin(a), 1});
    e.emplace_back(i, (i + 1) % n);
    e.emplace_back(i, n + i);
    e.emplace_back(i, n + (i + 1) % n);
  }
  for (int i = 0; i < n; ++i) {
    double a = 2 * 3.14159265358979323846 * (i + 0.5) / n;
    pos.push_back({std::cos(a), std::sin(a), -1});
    e.emplace_back(n + i, n + (i + 1) % n);
  }
  return detail::from_coords(std::move(pos), std::move(e));
}

// Wheel: rim cycle 0..rim-1 plus hub vertex `rim`.
inline ColoredGraph wheel(int rim) {
  if (rim < 3) throw Error("wheel: rim must be at least 3");
  std::vector<detail::Vec3> pos;
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < rim; ++i) {
    double a = 2 * 3.14159265358979323846 * i / rim;
    pos.push_back({std::cos(a), std::sin(a), 0});
    e.emplace_back(i, (i + 1) % rim);
    e.emplace_back(i, rim);
  }
  pos.push_back({0, 0, 1});
  return detail::from_coords(std::move(pos), std::move(e));
}

// --- named access (CLI and tests) ---

struct SolidRow {
  std::string name;
  int v, e, f;
  std::map<int, int> v_type;  // degree -> count
  std::map<int, int> f_type;  // face length -> count
};

// The reference counts for the eight families; the bipyramid row is
// parameterized by n.
inline SolidRow table1_row(const std::string& name, int n = 0) {
  if (name == "bipyramid")
    return {"bipyramid(" + std::to_string(n) + ")", n + 2, 3 * n, 2 * n,
            {{n, 2}, {4, n}}, {{3, 2 * n}}};
  if (name == "tetrahedron") return {name, 4, 6, 4, {{3, 4}}, {{3, 4}}};
  if (name == "cube") return {name, 8, 12, 6, {{3, 8}}, {{4, 6}}};
  if (name == "triakis-tetrahedron")
    return {name, 8, 18, 12, {{3, 4}, {6, 4}}, {{3, 12}}};
  if (name == "icosahedron") return {name, 12, 30, 20, {{5, 12}}, {{3, 20}}};
  if (name == "rhombic-dodecahedron")
    return {name, 14, 24, 12, {{3, 8}, {4, 6}}, {{4, 12}}};
  if (name == "triakis-octahedron")
    return {name, 14, 36, 24, {{3, 8}, {8, 6}}, {{3, 24}}};
  if (name == "tetrakis-hexahedron")
    return {name, 14, 36, 24, {{4, 6}, {6, 8}}, {{3, 24}}};
  throw Error("table1_row: unknown name " + name);
}

// bipyramid(4) is special-cased through its own generator; names accepted:
// the eight table rows plus prism(n), antiprism(n), wheel(n) and
// triakis-icosahedron.
inline ColoredGraph generate(const std::string& spec) {
  auto param = [&](const std::string& prefix) -> std::optional<int> {
    if (spec.rfind(prefix + "(", 0) == 0 && spec.back() == ')')
      return std::stoi(spec.substr(prefix.size() + 1,
                                   spec.size() - prefix.size() - 2));
    return std::nullopt;
  };
  if (auto n = param("bipyramid")) return bipyramid(*n);
  if (auto n = param("prism")) return prism(*n);
  if (auto n = param("antiprism")) return antiprism(*n);
  if (auto n = param("wheel")) return wheel(*n);
  if (spec == "tetrahedron") return tetrahedron();
  if (spec == "cube") return cube();
  if (spec == "octahedron") return octahedron();
  if (spec == "icosahedron") return icosahedron();
  if (spec == "triakis-tetrahedron") return triakis_tetrahedron();
  if (spec == "triakis-octahedron") return triakis_octahedron();
  if (spec == "tetrakis-hexahedron") return tetrakis_hexahedron();
  if (spec == "rhombic-dodecahedron") return rhombic_dodecahedron();
  if (spec == "triakis-icosahedron") return triakis_icosahedron();
  throw Error("generate: unknown solid " + spec);
}

// Figure-1 exception list checked by the experiments; bipyramids included for
// the given range of n.
inline std::vector<std::pair<std::string, ColoredGraph>> exception_solids(
    int bipyramid_min = 3, int bipyramid_max = 8) {
  std::vector<std::pair<std::string, ColoredGraph>> out;
  for (int n = bipyramid_min; n <= bipyramid_max; ++n)
    out.emplace_back("bipyramid(" + std::to_string(n) + ")", bipyramid(n));
  for (const char* name :
       {"tetrahedron", "cube", "triakis-tetrahedron", "icosahedron",
        "rhombic-dodecahedron", "triakis-octahedron", "tetrakis-hexahedron"})
    out.emplace_back(name, generate(name));
  return out;
}

// --- the exception predicate ---

// True iff no vertex pair individualization makes 1-WL discrete. The search
// runs over unordered pairs (the two orders induce the same partition, only
// with swapped labels) and, when the oracle is within range, only over one
// representative per pair orbit.
inline bool is_exception(const ColoredGraph& g,
                         int oracle_limit = oracle::default_limit()) {
  if (!is_k_connected(g, 3)) throw Error("is_exception: graph not 3-connected");
  if (!g.rotation) throw Error("is_exception: rotation system required");
  faces(g);  // certifies the embedding

  std::vector<std::pair<int, int>> pairs;
  if (g.n <= oracle_limit) {
    pairs = oracle::pair_orbit_representatives(g, oracle_limit);
  } else {
    for (int u = 0; u < g.n; ++u)
      for (int v = u + 1; v < g.n; ++v) pairs.emplace_back(u, v);
  }
  for (auto [u, v] : pairs) {
    auto c = wl::stable_coloring(wl::individualize(g, {u, v}), 1);
    if (wl::is_discrete(c)) return false;
  }
  return true;
}

// A pair whose individualization refines to discrete, if one exists.
inline std::optional<std::pair<int, int>> discretizing_pair(const ColoredGraph& g) {
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v) {
      auto c = wl::stable_coloring(wl::individualize(g, {u, v}), 1);
      if (wl::is_discrete(c)) return std::make_pair(u, v);
    }
  return std::nullopt;
}

// --- exhaustive small-graph corpus ---

namespace detail {

// A K5 subgraph, or K5 with exactly one edge replaced by a 2-path, within g.
inline bool contains_k5_subdivision(const ColoredGraph& g) {
  bool found = !wlplanar::detail::for_each_subset(
      g.n, 5, [&](const std::vector<int>& sub) {
        std::vector<std::pair<int, int>> missing;
        for (std::size_t i = 0; i < 5; ++i)
          for (std::size_t j = i + 1; j < 5; ++j)
            if (!g.has_edge(sub[i], sub[j])) missing.emplace_back(sub[i], sub[j]);
        if (missing.empty()) return false;
        if (missing.size() == 1) {
          auto [u, v] = missing[0];
          for (int x = 0; x < g.n; ++x) {
            if (std::find(sub.begin(), sub.end(), x) != sub.end()) continue;
            if (g.has_edge(x, u) && g.has_edge(x, v)) return false;
          }
        }
        return true;
      });
  return found;
}

inline bool contains_k33(const ColoredGraph& g) {
  if (g.n != 6) return false;
  return !wlplanar::detail::for_each_subset(6, 3, [&](const std::vector<int>& a) {
    std::vector<int> b;
    for (int v = 0; v < 6; ++v)
      if (std::find(a.begin(), a.end(), v) == a.end()) b.push_back(v);
    for (int x : a)
      for (int y : b)
        if (!g.has_edge(x, y)) return true;
    return false;  // complete bipartite found
  });
}

}  // namespace detail

// Planarity for n <= 6 by direct Kuratowski search: a graph this small is
// nonplanar iff it contains K5, K33, or K5 with one edge subdivided as a
// subgraph.
inline bool is_planar_n6(const ColoredGraph& g) {
  if (g.n > 6) throw Error("is_planar_n6: only defined for n <= 6");
  if (g.n >= 3 && g.edges.size() > static_cast<std::size_t>(3 * g.n - 6))
    return false;
  return !detail::contains_k5_subdivision(g) && !detail::contains_k33(g);
}

// Exhaustive search for a rotation system passing the Euler check. Feasible
// for the handful of small 3-connected planar graphs that need embeddings;
// returns the input unchanged plus rotation, or nullopt if none exists.
inline std::optional<ColoredGraph> find_rotation(const ColoredGraph& g) {
  if (!is_connected(g)) throw Error("find_rotation: graph not connected");
  std::vector<std::vector<std::vector<int>>> options(g.n);
  for (int v = 0; v < g.n; ++v) {
    auto nbrs = g.adj[v];
    if (nbrs.size() <= 2) {
      options[v] = {nbrs};
      continue;
    }
    // fix the first neighbor, permute the rest (cyclic rotations equivalent)
    std::vector<int> rest(nbrs.begin() + 1, nbrs.end());
    std::sort(rest.begin(), rest.end());
    do {
      std::vector<int> order{nbrs[0]};
      order.insert(order.end(), rest.begin(), rest.end());
      options[v].push_back(order);
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  std::vector<std::size_t> pick(g.n, 0);
  while (true) {
    ColoredGraph h = g;
    std::vector<std::vector<int>> rot(g.n);
    for (int v = 0; v < g.n; ++v) rot[v] = options[v][pick[v]];
    h.rotation = std::move(rot);
    try {
      faces(h);
      return h;
    } catch (const Error&) {
    }
    int v = g.n - 1;
    while (v >= 0 && pick[v] + 1 == options[v].size()) pick[v--] = 0;
    if (v < 0) return std::nullopt;
    ++pick[v];
  }
}

struct CorpusEntry {
  std::string name;
  ColoredGraph g;
  std::optional<bool> planar;  // decided for n <= 6 and for embedded graphs
  bool three_connected = false;
};

// All connected graphs on 1..max_n vertices up to isomorphism (canonical-form
// dedup over an edge-subset enumeration), with brute-force planarity for
// n <= 6. max_n is capped at 7; 7 already takes minutes and larger sizes are
// out of scope.
inline std::vector<CorpusEntry> enumerated_corpus(int max_n) {
  if (max_n > 7) throw Error("enumerated_corpus: limit is 7");
  std::vector<CorpusEntry> out;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::pair<int, int>> all_edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) all_edges.emplace_back(i, j);
    int m = static_cast<int>(all_edges.size());
    std::set<oracle::CanonicalForm> seen;
    for (long mask = 0; mask < (1L << m); ++mask) {
      std::vector<std::pair<int, int>> edge_list;
      for (int b = 0; b < m; ++b)
        if (mask & (1L << b)) edge_list.push_back(all_edges[b]);
      ColoredGraph g = make_graph(n, std::move(edge_list));
      if (!is_connected(g)) continue;
      auto canon = oracle::canonical_form(g);
      if (!seen.insert(canon).second) continue;
      CorpusEntry e;
      e.name = "n" + std::to_string(n) + "-" + std::to_string(seen.size() - 1);
      if (n <= 6) e.planar = is_planar_n6(g);
      e.three_connected = is_k_connected(g, 3);
      e.g = std::move(g);
      out.push_back(std::move(e));
    }
  }
  return out;
}

// The curated rotation-bearing corpus: every Figure 1 solid (bipyramids
// 3..8), prisms and antiprisms 3..8, wheels with rims 4..10, the triakis
// icosahedron, and one-edge-subdivided variants of a few solids.
inline std::vector<CorpusEntry> curated_corpus() {
  std::vector<CorpusEntry> out;
  auto add = [&](std::string name, ColoredGraph g) {
    CorpusEntry e;
    e.planar = true;
    e.three_connected = is_k_connected(g, 3);
    e.name = std::move(name);
    e.g = std::move(g);
    out.push_back(std::move(e));
  };
  for (auto& [name, g] : exception_solids()) add(name, g);
  for (int n = 3; n <= 8; ++n) add("prism(" + std::to_string(n) + ")", prism(n));
  for (int n = 3; n <= 8; ++n)
    add("antiprism(" + std::to_string(n) + ")", antiprism(n));
  for (int r = 4; r <= 10; ++r) add("wheel(" + std::to_string(r) + ")", wheel(r));
  add("triakis-icosahedron", triakis_icosahedron());
  for (const char* name : {"tetrahedron", "cube", "bipyramid(3)"}) {
    ColoredGraph base = generate(name);
    auto [u, v] = base.edges.front();
    add(std::string(name) + "-subdivided", subdivide_edge(base, u, v));
  }
  return out;
}

// The whole corpus: enumerated part up to max_n plus the curated families.
inline std::vector<CorpusEntry> corpus(int max_n = 6) {
  auto out = enumerated_corpus(max_n);
  auto curated = curated_corpus();
  out.insert(out.end(), curated.begin(), curated.end());
  return out;
}

}  // namespace catalog
}  // namespace wlplanar
