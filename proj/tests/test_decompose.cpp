#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "wlplanar/catalog.hpp"
#include "wlplanar/decompose.hpp"

using namespace wlplanar;
using decompose::SeparatorPair;

namespace {

ColoredGraph bowtie() {
  return make_graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

// two K4-minus-an-edge lobes glued on the non-adjacent pair {0,1}:
// 2-connected, not 3-connected, minimum degree 3
ColoredGraph two_lobes() {
  return make_graph(6, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                        {0, 4}, {0, 5}, {1, 4}, {1, 5}, {4, 5}});
}

std::vector<int> random_permutation(int n, std::mt19937& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("p_set lists every (separator, component) pair") {
  auto bt = decompose::p_set(bowtie());
  REQUIRE(bt == std::vector<SeparatorPair>{{{2}, {0, 1}}, {{2}, {3, 4}}});

  auto p4 = decompose::p_set(path_graph(4));
  REQUIRE(p4 == std::vector<SeparatorPair>{
                    {{1}, {0}}, {{1}, {2, 3}}, {{2}, {0, 1}}, {{2}, {3}}});

  auto c4 = decompose::p_set(cycle_graph(4));
  REQUIRE(c4 == std::vector<SeparatorPair>{
                    {{0, 2}, {1}}, {{0, 2}, {3}}, {{1, 3}, {0}}, {{1, 3}, {2}}});

  REQUIRE_THROWS_AS(decompose::p_set(complete_graph(4)), Error);
}

TEST_CASE("p0_set keeps the component-minimal pairs") {
  REQUIRE(decompose::p0_set(path_graph(4)) ==
          std::vector<SeparatorPair>{{{1}, {0}}, {{2}, {3}}});
  REQUIRE(decompose::p0_set(bowtie()) ==
          std::vector<SeparatorPair>{{{2}, {0, 1}}, {{2}, {3, 4}}});

  // minimality characterization: (S,K) minimal iff no minimum separator
  // intersects K
  for (auto& g : {two_lobes(), path_graph(6), bowtie(), cycle_graph(5)}) {
    auto all = decompose::p_set(g);
    auto minimal = decompose::p0_set(g);
    auto seps = min_separators(g);
    for (auto& p : all) {
      bool meets = false;
      for (auto& s : seps)
        for (int v : s)
          if (std::binary_search(p.component.begin(), p.component.end(), v))
            meets = true;
      bool is_minimal =
          std::find(minimal.begin(), minimal.end(), p) != minimal.end();
      REQUIRE(is_minimal == !meets);
    }
  }
}

TEST_CASE("p0_set is isomorphism invariant") {
  std::mt19937 rng(31);
  for (auto& g : {two_lobes(), path_graph(5), bowtie()}) {
    auto base = decompose::p0_set(g);
    for (int trial = 0; trial < 10; ++trial) {
      auto perm = random_permutation(g.n, rng);
      auto mapped = decompose::p0_set(permute_graph(g, perm));
      std::vector<SeparatorPair> expect;
      for (auto p : base) {
        for (auto& v : p.separator) v = perm[v];
        for (auto& v : p.component) v = perm[v];
        std::sort(p.separator.begin(), p.separator.end());
        std::sort(p.component.begin(), p.component.end());
        expect.push_back(p);
      }
      std::sort(expect.begin(), expect.end());
      REQUIRE(mapped == expect);
    }
  }
}

TEST_CASE("g_top builds the separator torso with the three-case coloring") {
  // bowtie at its cut vertex: all of P0 hangs there, so the torso is the
  // whole graph
  auto t = decompose::g_top(bowtie(), {2});
  REQUIRE(t.base.n == 5);
  REQUIRE(t.base.edges.size() == 6);

  // path at {1}: only the pendant component {0}
  auto p = decompose::g_top(path_graph(4), {1});
  REQUIRE(p.original_vertices == std::vector<int>{0, 1});
  REQUIRE(p.base.edges.size() == 1);
  // pendant edge gets the (lambda, 2) tag, separator diagonal the (0,0) tag
  REQUIRE(p.base.arc_color(0, 1) == pair_colors(0, 2));
  int sep = p.separator[0];
  REQUIRE(p.base.arc_color(sep, sep) == pair_colors(0, 0));

  // a set that is not a P0 separator: torso = clique on S
  auto q = decompose::g_top(path_graph(4), {0, 3});
  REQUIRE(q.base.n == 2);
  REQUIRE(q.base.edges.size() == 1);
  REQUIRE(q.base.arc_color(0, 1) == pair_colors(0, 0));  // added S-edge

  // an S-edge that exists in g keeps its color with tag 1
  auto k4 = complete_graph(4);
  auto r = decompose::g_top(k4, {0, 1});
  REQUIRE(r.base.arc_color(0, 1) == pair_colors(0, 1));
}

TEST_CASE("g_bot removes P0 components and colors by torso isotype") {
  decompose::DecomposeContext ctx;
  auto r = decompose::g_bot(path_graph(4), ctx);
  REQUIRE(r.original_vertices == std::vector<int>{1, 2});
  REQUIRE(r.base.edges.size() == 1);
  // the two pendant torsos are isomorphic with individualization, so the
  // diagonal colors agree
  REQUIRE(r.base.arc_color(0, 0) == r.base.arc_color(1, 1));

  auto rb = decompose::g_bot(bowtie(), ctx);
  REQUIRE(rb.original_vertices == std::vector<int>{2});
  REQUIRE(rb.base.n == 1);
  REQUIRE(rb.base.edges.empty());

  REQUIRE_THROWS_AS(decompose::g_bot(complete_graph(5), ctx), Error);  // 3-conn
  REQUIRE_THROWS_AS(decompose::g_bot(complete_graph(3), ctx), Error);  // degree
  REQUIRE_THROWS_AS(decompose::g_bot(cycle_graph(5), ctx), Error);     // degree
}

TEST_CASE("g_bot on a 2-connected example adds the separator clique") {
  decompose::DecomposeContext ctx;
  auto g = two_lobes();
  auto r = decompose::g_bot(g, ctx);
  // both lobes are P0 components; {0,1} stays, completed to an edge
  REQUIRE(r.original_vertices == std::vector<int>{0, 1});
  REQUIRE(r.base.edges.size() == 1);
}

TEST_CASE("g_bot separator colors stay distinct from other pair colors") {
  // two triangle lobes in series: separators {0,1} and {2,3} are in P0,
  // {0,3} and {1,2} are minimum separators that stay non-edges of the
  // reduced graph, and the middle edges 0-2, 1-3 are non-separating
  auto big = make_graph(10, {{4, 0}, {4, 1}, {5, 0}, {5, 1}, {6, 0}, {6, 1},
                             {4, 5}, {5, 6}, {4, 6},
                             {7, 2}, {7, 3}, {8, 2}, {8, 3}, {9, 2}, {9, 3},
                             {7, 8}, {8, 9}, {7, 9},
                             {0, 2}, {1, 3}});
  REQUIRE(is_k_connected(big, 2));
  REQUIRE_FALSE(is_k_connected(big, 3));

  decompose::DecomposeContext ctx2;
  auto rb = decompose::g_bot(big, ctx2);
  REQUIRE(rb.original_vertices == std::vector<int>{0, 1, 2, 3});
  REQUIRE_FALSE(rb.separator_pair_colors.empty());

  std::set<color_t> sep_colors, other_colors;
  auto two_sep = [&](int u, int v) {
    std::vector<bool> removed(big.n, false);
    removed[rb.original_vertices[u]] = true;
    removed[rb.original_vertices[v]] = true;
    return components_after_removal(big, removed).size() >= 2;
  };
  for (auto [u, v] : rb.base.edges) {
    auto bucket = two_sep(u, v) ? &sep_colors : &other_colors;
    bucket->insert(rb.base.arc_color(u, v));
    bucket->insert(rb.base.arc_color(v, u));
  }
  for (int u = 0; u < rb.base.n; ++u) other_colors.insert(rb.base.arc_color(u, u));
  for (auto& [arc, c] : rb.separator_pair_colors) {
    REQUIRE(two_sep(arc.first, arc.second));
    sep_colors.insert(c);
  }
  for (color_t c : sep_colors) REQUIRE_FALSE(other_colors.count(c));
}

TEST_CASE("isotype equality matches individualization-respecting isomorphism") {
  auto k3 = complete_graph(3);
  REQUIRE(decompose::isotype(k3, {0}) == decompose::isotype(k3, {1}));

  auto p3 = path_graph(3);
  REQUIRE_FALSE(decompose::isotype(p3, {0}) == decompose::isotype(p3, {1}));

  std::mt19937 rng(41);
  auto g = catalog::wheel(5);
  auto base = decompose::isotype(g, {0, 2});
  for (int trial = 0; trial < 10; ++trial) {
    auto perm = random_permutation(g.n, rng);
    auto h = permute_graph(g, perm);
    std::array<int, 2> mapped{perm[0], perm[2]};
    REQUIRE(decompose::isotype(h, std::span<const int>(mapped)) == base);
  }
}

TEST_CASE("reduced graphs decide isomorphism both ways on samples") {
  std::mt19937 rng(53);

  // 1-connected colored pair: a tree and a relabeling
  auto tree = make_graph(7, {{0, 1}, {1, 2}, {2, 3}, {2, 4}, {4, 5}, {4, 6}});
  tree.arc_colors[{3, 3}] = 1;
  auto relabeled = permute_graph(tree, random_permutation(7, rng));
  {
    decompose::DecomposeContext ctx;
    auto ra = decompose::g_bot(tree, ctx);
    auto rb = decompose::g_bot(relabeled, ctx);
    REQUIRE(oracle::isomorphic(tree, relabeled).has_value());
    REQUIRE(decompose::reduced_isomorphic(ra, rb));
  }

  // same tree with the color moved: not isomorphic, reductions differ
  auto other = tree;
  other.arc_colors.clear();
  other.arc_colors[{5, 5}] = 1;
  {
    decompose::DecomposeContext ctx;
    auto ra = decompose::g_bot(tree, ctx);
    auto rb = decompose::g_bot(other, ctx);
    REQUIRE(oracle::isomorphic(tree, other) == std::nullopt);
    REQUIRE_FALSE(decompose::reduced_isomorphic(ra, rb));
  }

  // 2-connected pair
  auto g = two_lobes();
  auto h = permute_graph(g, random_permutation(6, rng));
  {
    decompose::DecomposeContext ctx;
    auto ra = decompose::g_bot(g, ctx);
    auto rb = decompose::g_bot(h, ctx);
    REQUIRE(decompose::reduced_isomorphic(ra, rb));
  }
}
