#pragma once

// Barycentric fixed-point iteration: pin three vertices of a common face at
// (0,0), (1,0), (0,1), start every other vertex at (1,1), and repeatedly
// replace each free vertex by the average of its neighbors. On 3-connected
// planar graphs the iteration converges to an injective straight-line
// embedding; the per-iteration positions refine no finer than the rounds of
// 1-dimensional refinement with the same three vertices individualized, which
// is what links the embedding to discreteness.

#include <cmath>

#include "wlplanar/wl.hpp"

namespace wlplanar {
namespace tutte {

struct Defaults {
  static constexpr double eps = 1e-9;
  static constexpr int max_iter = 100000;
  static constexpr double injectivity_tol = 1e-6;
  static constexpr double link_tol = 1e-9;
};

struct EmbeddingState {
  std::vector<std::pair<double, double>> positions;
  std::array<int, 3> fixed{};
  int iterations = 0;
  bool converged = false;
  bool injective = false;
  std::vector<double> max_movement;  // per-round max coordinate movement
};

namespace detail {

inline void check_face3(const ColoredGraph& g, const std::array<int, 3>& face3) {
  if (face3[0] == face3[1] || face3[0] == face3[2] || face3[1] == face3[2])
    throw Error("tutte: face vertices must be distinct");
  if (!is_k_connected(g, 3)) throw Error("tutte: graph not 3-connected");
  for (auto& f : faces(g)) {
    std::set<int> on_face(f.begin(), f.end());
    if (on_face.count(face3[0]) && on_face.count(face3[1]) &&
        on_face.count(face3[2]))
      return;
  }
  throw Error("tutte: vertices do not lie on a common face");
}

}  // namespace detail

// Runs the iteration until the maximum coordinate movement drops below eps or
// max_iter rounds pass. Convergence failure is reported in the result, not
// fatal; an invalid face triple or eps <= 0 is.
inline EmbeddingState tutte_iterate(const ColoredGraph& g,
                                    const std::array<int, 3>& face3,
                                    double eps = Defaults::eps,
                                    int max_iter = Defaults::max_iter) {
  if (eps <= 0) throw Error("tutte: eps must be positive");
  detail::check_face3(g, face3);

  EmbeddingState st;
  st.fixed = face3;
  st.positions.assign(g.n, {1.0, 1.0});
  st.positions[face3[0]] = {0.0, 0.0};
  st.positions[face3[1]] = {1.0, 0.0};
  st.positions[face3[2]] = {0.0, 1.0};

  std::vector<bool> pinned(g.n, false);
  for (int v : face3) pinned[v] = true;

  auto next = st.positions;
  for (int it = 0; it < max_iter; ++it) {
    double movement = 0.0;
    for (int v = 0; v < g.n; ++v) {
      if (pinned[v]) {
        next[v] = st.positions[v];
        continue;
      }
      double sx = 0.0, sy = 0.0;
      for (int w : g.adj[v]) {
        sx += st.positions[w].first;
        sy += st.positions[w].second;
      }
      next[v] = {sx / g.degree(v), sy / g.degree(v)};
      movement = std::max({movement, std::abs(next[v].first - st.positions[v].first),
                           std::abs(next[v].second - st.positions[v].second)});
    }
    st.positions.swap(next);
    st.max_movement.push_back(movement);
    st.iterations = it + 1;
    if (movement < eps) {
      st.converged = true;
      break;
    }
  }

  st.injective = true;
  for (int u = 0; u < g.n && st.injective; ++u)
    for (int v = u + 1; v < g.n; ++v) {
      double dx = st.positions[u].first - st.positions[v].first;
      double dy = st.positions[u].second - st.positions[v].second;
      if (std::hypot(dx, dy) <= Defaults::injectivity_tol) {
        st.injective = false;
        break;
      }
    }
  return st;
}

struct LinkCheckResult {
  bool discrete = false;        // is the stable 1-WL coloring discrete?
  bool link_holds = true;       // mu_i distinct => round-i colors distinct
  int checked_iterations = 0;
  int stable_round = 0;
};

// Verifies the position/color refinement link for the individualization of
// face3: at every iteration i, vertices with equal round-i colors must sit at
// equal positions (within tolerance). Colors are the rounds of 1-dimensional
// refinement on the graph with face3 individualized. Iterations past the
// stable round need no check: if the stable coloring is discrete the
// implication is trivially true there, and the returned flag already reports
// failure of discreteness otherwise.
inline LinkCheckResult discreteness_link_check(const ColoredGraph& g,
                                               const std::array<int, 3>& face3,
                                               double tol = Defaults::link_tol) {
  detail::check_face3(g, face3);

  ColoredGraph ind = wl::individualize(g, {face3[0], face3[1], face3[2]});
  std::vector<std::vector<std::vector<int>>> trace;
  std::array<const ColoredGraph*, 1> one{&ind};
  auto colorings = wl::joint_stable(std::span<const ColoredGraph* const>(one), 1, &trace);
  const auto& rounds = trace[0];

  LinkCheckResult res;
  res.discrete = wl::is_discrete(colorings[0]);
  res.stable_round = colorings[0].round;

  std::vector<std::pair<double, double>> mu(g.n, {1.0, 1.0});
  mu[face3[0]] = {0.0, 0.0};
  mu[face3[1]] = {1.0, 0.0};
  mu[face3[2]] = {0.0, 1.0};
  std::vector<bool> pinned(g.n, false);
  for (int v : face3) pinned[v] = true;

  auto same_position = [&](int u, int v) {
    return std::abs(mu[u].first - mu[v].first) <= tol &&
           std::abs(mu[u].second - mu[v].second) <= tol;
  };

  for (std::size_t i = 0; i < rounds.size(); ++i) {
    // contrapositive: same round-i color => same mu_i position
    std::map<int, std::vector<int>> classes;
    for (int v = 0; v < g.n; ++v) classes[rounds[i][v]].push_back(v);
    for (auto& [c, vs] : classes)
      for (std::size_t a = 0; a + 1 < vs.size(); ++a)
        if (!same_position(vs[a], vs[a + 1])) res.link_holds = false;
    ++res.checked_iterations;

    auto next = mu;
    for (int v = 0; v < g.n; ++v) {
      if (pinned[v]) continue;
      double sx = 0.0, sy = 0.0;
      for (int w : g.adj[v]) {
        sx += mu[w].first;
        sy += mu[w].second;
      }
      next[v] = {sx / g.degree(v), sy / g.degree(v)};
    }
    mu.swap(next);
  }
  return res;
}

// SVG of a converged embedding: straight-line edges, vertices filled by their
// stable individualized 1-WL class.
inline std::string embedding_svg(const ColoredGraph& g, const EmbeddingState& st) {
  ColoredGraph ind = wl::individualize(g, {st.fixed[0], st.fixed[1], st.fixed[2]});
  auto coloring = wl::stable_coloring(ind, 1);

  double min_x = 1e300, min_y = 1e300, max_x = -1e300, max_y = -1e300;
  for (auto& [x, y] : st.positions) {
    min_x = std::min(min_x, x);
    min_y = std::min(min_y, y);
    max_x = std::max(max_x, x);
    max_y = std::max(max_y, y);
  }
  double w = std::max(max_x - min_x, 1e-9), h = std::max(max_y - min_y, 1e-9);
  double scale = 400.0 / std::max(w, h);
  auto px = [&](double x) { return 20.0 + (x - min_x) * scale; };
  auto py = [&](double y) { return 20.0 + (max_y - y) * scale; };

  static const char* palette[] = {"#4c72b0", "#dd8452", "#55a868", "#c44e52",
                                  "#8172b3", "#937860", "#da8bc3", "#8c8c8c",
                                  "#ccb974", "#64b5cd"};
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"440\" height=\"440\">\n";
  for (auto [u, v] : g.edges)
    out << "  <line x1=\"" << px(st.positions[u].first) << "\" y1=\""
        << py(st.positions[u].second) << "\" x2=\"" << px(st.positions[v].first)
        << "\" y2=\"" << py(st.positions[v].second)
        << "\" stroke=\"#444\" stroke-width=\"1\"/>\n";
  for (int v = 0; v < g.n; ++v)
    out << "  <circle cx=\"" << px(st.positions[v].first) << "\" cy=\""
        << py(st.positions[v].second) << "\" r=\"6\" fill=\""
        << palette[coloring.color[v] % 10] << "\" stroke=\"#000\"/>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace tutte
}  // namespace wlplanar
