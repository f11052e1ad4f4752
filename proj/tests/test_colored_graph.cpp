#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "treeqi/colored_graph.hpp"

using namespace treeqi;
using fixture::p_path;
using fixture::star;

namespace {

bool has_violation(const ColoredGraph& g, const std::string& what) {
  for (const auto& v : validate_graph(g))
    if (v.what.find(what) != std::string::npos) return true;
  return false;
}

ColoredGraph random_valid(Rng& rng) {
  const int n = 1 + static_cast<int>(rng.below(3));
  const int p = 1 + static_cast<int>(rng.below(6));
  return rng.coin() ? oracle::random_tree(n, p, rng) : oracle::random_graph(n, p, rng);
}

}  // namespace

TEST_CASE("validate_graph") {
  CHECK(validate_graph(p_path(1, {1, 2})).empty());
  CHECK(validate_graph(fixture::single_p(2, 3)).empty());

  ColoredGraph lonely(2);
  const auto f = lonely.add_f("f");
  lonely.add_edge(f, lonely.add_p("a", 1));
  CHECK(has_violation(lonely, "F degree < 2"));

  ColoredGraph repeated(2);
  const auto g = repeated.add_f("f");
  repeated.add_edge(g, repeated.add_p("a", 1));
  repeated.add_edge(g, repeated.add_p("b", 1));
  CHECK(has_violation(repeated, "repeated P-color at F"));

  ColoredGraph pp(2);
  pp.add_edge(pp.add_p("a", 1), pp.add_p("b", 2));
  CHECK_FALSE(validate_graph(pp).empty());

  ColoredGraph wide = star(1, {1, 2});
  const auto c = wide.add_p("x", 1);
  wide.add_edge(0, c);  // repeated color and degree 3 > n+1
  CHECK_FALSE(validate_graph(wide).empty());

  ColoredGraph apart(2);
  apart.add_p("a", 1);
  apart.add_p("b", 2);
  CHECK_FALSE(validate_graph(apart).empty());

  CHECK_FALSE(validate_graph(fixture::single_p(2, 4)).empty());
  CHECK_THROWS_AS(require_valid(lonely), std::invalid_argument);
}

TEST_CASE("is_weak_covering examples") {
  const auto path4 = p_path(1, {1, 2, 1, 2});
  for (const auto& g : {path4, star(2, {1, 2, 3}), fixture::single_p(1, 1)}) {
    std::vector<std::size_t> id(g.size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
    CHECK(is_weak_covering({g, g, id}));
  }

  // path4 vertices: p0 p1 f1 p2 f2 p3 f3 ; target p0(1) p1(2) f1.
  const auto target = p_path(1, {1, 2});
  std::vector<std::size_t> collapse(path4.size());
  for (std::size_t i = 0; i < path4.size(); ++i) {
    const auto& v = path4.vertex(i);
    collapse[i] = v.kind == VertexKind::F ? 2 : (v.color == 1 ? 0 : 1);
  }
  CHECK(is_weak_covering({path4, target, collapse}));

  // Degree-1 P onto a P with two F-neighbors.
  const auto edge = p_path(2, {1, 2});      // p0 p1 f1
  const auto line = p_path(2, {1, 2, 3});   // p0 p1 f1 p2 f2
  CHECK_FALSE(is_weak_covering({edge, line, {0, 1, 2}}));

  std::vector<std::size_t> wrong_color{1, 0, 2};
  CHECK_FALSE(is_weak_covering({target, target, wrong_color}));
  CHECK_THROWS_AS(is_weak_covering({target, target, {0, 1}}), std::invalid_argument);
}

TEST_CASE("minimize examples") {
  const auto m = minimize(p_path(1, {1, 2, 1, 2}));
  CHECK(m.graph().size() == 3);
  CHECK(canonical_form(m.graph(), false) == canonical_form(p_path(1, {1, 2}), false));

  const auto s = star(2, {1, 2, 3});
  CHECK(canonical_form(minimize(s).graph(), false) == canonical_form(s, false));
  CHECK(minimize(fixture::single_p(2, 1)).graph().size() == 1);
  const auto p3 = p_path(2, {1, 2, 3});
  CHECK(minimize(p3).graph().size() == p3.size());

  // Quotient ids come from the lowest-index member of each block.
  CHECK(m.graph().vertex(0).id == "p0");
  CHECK(m.graph().vertex(1).id == "p1");
  CHECK(m.graph().vertex(2).id == "f1");
}

TEST_CASE("is_minimal examples") {
  CHECK(is_minimal(p_path(1, {1, 2})));
  CHECK_FALSE(is_minimal(p_path(1, {1, 2, 1, 2})));
  CHECK(is_minimal(fixture::single_p(3, 2)));
}

TEST_CASE("bisimilar examples") {
  CHECK(bisimilar(p_path(1, {1, 2}), p_path(1, {1, 2, 1, 2})));
  CHECK_FALSE(bisimilar(star(2, {1, 2, 3}), p_path(2, {1, 2, 3})));
  CHECK(bisimilar(star(2, {1, 2, 3}), star(2, {1, 2, 3})));
  CHECK_THROWS_AS(bisimilar(p_path(1, {1, 2}), p_path(2, {1, 2})), std::invalid_argument);
}

TEST_CASE("bisimilar_up_to_permutation examples") {
  const auto sigma = bisimilar_up_to_permutation(p_path(2, {1, 2}), p_path(2, {2, 3}));
  REQUIRE(sigma);
  CHECK(*sigma == std::vector<Color>{0, 3, 1, 2});
  CHECK(bisimilar(p_path(2, {1, 2}), p_path(2, {2, 3}).recolored(*sigma)));

  const auto id = bisimilar_up_to_permutation(star(2, {1, 2, 3}), star(2, {1, 2, 3}));
  REQUIRE(id);
  CHECK(*id == std::vector<Color>{0, 1, 2, 3});
  CHECK_FALSE(bisimilar_up_to_permutation(p_path(2, {1, 2}), star(2, {1, 2, 3})));
  CHECK_FALSE(bisimilar_up_to_permutation(p_path(2, {1, 2}), p_path(2, {1, 2, 3})));
}

TEST_CASE("minimize: quotient is a valid weak covering and minimization is idempotent") {
  Rng rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto g = random_valid(rng);
    const auto m = minimize(g);
    CHECK(is_weak_covering(m.quotient));
    CHECK(validate_graph(m.graph()).empty());
    const auto again = minimize(m.graph());
    CHECK(again.graph().size() == m.graph().size());
    for (std::size_t i = 0; i < again.quotient.vertex_map.size(); ++i)
      CHECK(again.quotient.vertex_map[i] == i);
    CHECK(is_minimal(m.graph()));
  }
}

TEST_CASE("minimize agrees with the greatest-bisimulation oracle") {
  Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = random_valid(rng);
    const auto ours = minimize(g).graph();
    const auto theirs = oracle::minimize(g);
    REQUIRE(ours.size() == theirs.size());
    if (ours.size() <= 10) CHECK(oracle::canonical(ours, false) == oracle::canonical(theirs, false));
  }
}

TEST_CASE("covers are bisimilar to their targets") {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = random_valid(rng);
    const auto cover = oracle::random_cover(g, rng, 1 + static_cast<int>(rng.below(3)));
    REQUIRE(validate_graph(cover.graph).empty());
    CHECK(is_weak_covering({cover.graph, g, cover.map}));
    CHECK(bisimilar(cover.graph, g));
    CHECK(bisimilar(oracle::shuffled(cover.graph, rng), g));
  }
}

TEST_CASE("bisimilarity is transitive on sampled triples") {
  Rng rng(5);
  int positive = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(3));
    const auto base = oracle::random_tree(n, 1 + static_cast<int>(rng.below(4)), rng);
    // Two covers of base plus an unrelated graph mixed in.
    const auto a = oracle::random_cover(base, rng, 2).graph;
    const auto b = oracle::random_cover(base, rng, 2).graph;
    const auto c = rng.coin() ? oracle::random_cover(base, rng, 1).graph
                              : oracle::random_tree(n, 1 + static_cast<int>(rng.below(4)), rng);
    const bool ab = bisimilar(a, b), bc = bisimilar(b, c), ac = bisimilar(a, c);
    if (ab && bc) {
      ++positive;
      CHECK(ac);
    }
    if (ab && ac) CHECK(bc);
    CHECK(ab);
  }
  CHECK(positive > 50);
}

TEST_CASE("permutation witnesses are correct and lexicographically first") {
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(3));
    const auto a = oracle::random_tree(n, 1 + static_cast<int>(rng.below(5)), rng);
    std::vector<Color> perm(n + 2);
    for (int i = 0; i < n + 2; ++i) perm[i] = i;
    std::shuffle(perm.begin() + 1, perm.end(), std::mt19937(trial));
    const auto b = oracle::random_cover(a, rng, 1).graph.recolored(perm);
    const auto sigma = bisimilar_up_to_permutation(a, b);
    REQUIRE(sigma);
    CHECK((*sigma)[0] == 0);
    CHECK(bisimilar(a, b.recolored(*sigma)));
    // No smaller bijection on the colors of b works.
    const auto colors = b.colors_used();
    std::vector<Color> imgs;
    for (auto c : colors) imgs.push_back((*sigma)[c]);
    std::vector<Color> test = imgs;
    std::sort(test.begin(), test.end());
    // Every earlier arrangement of the same image set must fail.
    while (test < imgs) {
      auto p = *sigma;
      for (std::size_t i = 0; i < colors.size(); ++i) p[colors[i]] = test[i];
      CHECK_FALSE(bisimilar(a, b.recolored(p)));
      if (!std::next_permutation(test.begin(), test.end())) break;
    }
  }
}

TEST_CASE("bisimilarity agrees with the common weak quotient oracle") {
  // Exhaustive over all valid graphs with at most 8 vertices.
  for (int n = 1; n <= 3; ++n) {
    const auto graphs = oracle::all_valid_graphs(n, 8);
    std::map<std::string, std::vector<std::size_t>> by_quotient;
    std::vector<std::string> minimal(graphs.size());
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      minimal[i] = canonical_form(minimize(graphs[i]).graph(), false);
      const auto qs = oracle::weak_quotients(graphs[i]);
      const auto own = oracle::canonical(minimize(graphs[i]).graph(), false);
      CHECK(std::binary_search(qs.begin(), qs.end(), own));
      for (const auto& q : qs) by_quotient[q].push_back(i);
    }
    // Sharing any weak quotient means bisimilar, so the minimal graphs agree.
    for (const auto& [q, members] : by_quotient)
      for (auto i : members) CHECK(minimal[i] == minimal[members.front()]);
    // Conversely, equal minimal graphs are a common quotient.
    CHECK(graphs.size() > 20);
  }
}
