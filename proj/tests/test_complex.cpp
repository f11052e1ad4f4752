#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "treeqi/classify.hpp"
#include "treeqi/error.hpp"
#include "treeqi/random.hpp"
#include "treeqi/realize.hpp"

using namespace treeqi;
using fixture::cx;

namespace {

std::map<std::string, Color> coloring_by_name(const SimplicialComplex& k) {
  const auto c = compute_coloring(k, validate_tn(k));
  std::map<std::string, Color> out;
  for (VertexId v = 0; v < k.vertex_count(); ++v) out[k.name(v)] = c[v];
  return out;
}

TnFailure failure_of(const SimplicialComplex& k) {
  const auto check = check_tn(k);
  REQUIRE_FALSE(check.ok());
  return *check.failure;
}

}  // namespace

TEST_CASE("construction rejects malformed simplices") {
  CHECK_THROWS_AS(cx(2, {{"a", "b"}}), ParseError);
  CHECK_THROWS_AS(cx(2, {{"a", "a", "b"}}), ParseError);
  CHECK_THROWS_AS(cx(2, {{"a", "b", "c"}, {"c", "b", "a"}}), ParseError);
  CHECK_THROWS_AS(cx(2, {}), ParseError);
  CHECK_THROWS_AS(cx(0, {{"a"}}), ParseError);
  try {
    cx(2, {{"a", "b"}});
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("cardinality 2") != std::string::npos);
  }
}

TEST_CASE("simplices are stored sorted regardless of input order") {
  const auto k = cx(2, {{"d", "b", "a"}, {"c", "a", "b"}});
  const auto s = k.named_simplices();
  CHECK(s == std::vector<std::vector<std::string>>{{"a", "b", "c"}, {"a", "b", "d"}});
}

TEST_CASE("validate: two triangles sharing an edge") {
  const auto tree = validate_tn(fixture::two_triangles());
  CHECK(tree.simplex_count == 2);
  REQUIRE(tree.faces.size() == 1);
  CHECK(tree.edge_count() == 2);
}

TEST_CASE("validate: three triangles around a vertex form a cycle") {
  const auto k = cx(2, {{"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "4"}});
  CHECK(failure_of(k) == TnFailure::Cyclic);
  CHECK_THROWS_AS(validate_tn(k), NotInTnError);
  try {
    validate_tn(k);
  } catch (const NotInTnError& e) {
    CHECK(e.failure() == TnFailure::Cyclic);
  }
}

TEST_CASE("validate: single simplex is a one-node tree") {
  const auto tree = validate_tn(cx(2, {{"a", "b", "c"}}));
  CHECK(tree.node_count() == 1);
  CHECK(tree.edge_count() == 0);
}

TEST_CASE("validate: disconnected inputs") {
  CHECK(failure_of(cx(2, {{"a", "b", "c"}, {"x", "y", "z"}})) == TnFailure::Disconnected);
  // Meeting in a vertex only.
  CHECK(failure_of(cx(2, {{"a", "b", "c"}, {"a", "y", "z"}})) == TnFailure::Disconnected);
  CHECK(failure_of(cx(1, {{"a", "b"}, {"c", "d"}})) == TnFailure::Disconnected);
}

TEST_CASE("validate: tree-shaped but a vertex is reused") {
  // Consecutive triangles share edges and the incidence graph is a path,
  // but the last triangle closes up on vertex 1.
  const auto k = cx(2, {{"1", "2", "3"}, {"2", "3", "4"}, {"3", "4", "5"}, {"4", "5", "6"},
                        {"1", "5", "6"}});
  CHECK(failure_of(k) == TnFailure::IdentifiedVertices);
  // The same in dimension 1: a cycle graph is caught as not a tree earlier.
  CHECK(failure_of(cx(1, {{"a", "b"}, {"b", "c"}, {"c", "a"}})) == TnFailure::Cyclic);
}

TEST_CASE("pieces") {
  SUBCASE("two triangles") {
    const auto k = fixture::two_triangles();
    const auto pieces = compute_pieces(k, validate_tn(k));
    REQUIRE(pieces.size() == 1);
    CHECK(k.names_of(pieces[0].spine) == std::vector<std::string>{"a", "b"});
    CHECK(pieces[0].members == std::vector<std::size_t>{0, 1});
  }
  SUBCASE("path a-b-c-d") {
    const auto k = cx(1, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
    const auto pieces = compute_pieces(k, validate_tn(k));
    REQUIRE(pieces.size() == 2);
    CHECK(k.names_of(pieces[0].spine) == std::vector<std::string>{"b"});
    CHECK(pieces[0].members == std::vector<std::size_t>{0, 1});
    CHECK(k.names_of(pieces[1].spine) == std::vector<std::string>{"c"});
    CHECK(pieces[1].members == std::vector<std::size_t>{1, 2});
  }
  SUBCASE("single simplex") {
    const auto k = cx(2, {{"a", "b", "c"}});
    CHECK(compute_pieces(k, validate_tn(k)).empty());
  }
}

TEST_CASE("coloring") {
  using M = std::map<std::string, Color>;
  CHECK(coloring_by_name(cx(1, {{"a", "b"}, {"b", "c"}, {"c", "d"}})) ==
        M{{"a", 1}, {"b", 2}, {"c", 1}, {"d", 2}});
  CHECK(coloring_by_name(fixture::two_triangles()) == M{{"a", 1}, {"b", 2}, {"c", 3}, {"d", 3}});
  CHECK(coloring_by_name(cx(2, {{"a", "b", "c"}})) == M{{"a", 1}, {"b", 2}, {"c", 3}});
  CHECK(coloring_by_name(fixture::star_complex()) ==
        M{{"1", 1}, {"2", 2}, {"3", 3}, {"4", 3}, {"5", 1}, {"6", 2}});
}

TEST_CASE("piece labels are the color missing from the spine") {
  const auto k = fixture::two_triangles();
  const auto tree = validate_tn(k);
  auto pieces = compute_pieces(k, tree);
  label_pieces(pieces, compute_coloring(k, tree), 2);
  CHECK(pieces[0].label == 3);
}

TEST_CASE("cone vertices") {
  CHECK(cone_vertices(fixture::two_triangles()) == std::vector<std::string>{"a", "b"});
  CHECK(cone_vertices(fixture::star_complex()).empty());
  CHECK(cone_vertices(cx(2, {{"a", "b", "c"}})) == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("maximally branched") {
  auto mb = [](const SimplicialComplex& k) { return is_maximally_branched(k, validate_tn(k)); };
  CHECK(mb(fixture::star_complex()));
  CHECK(mb(fixture::two_triangles()));
  CHECK(mb(fixture::path(3)));
  CHECK(mb(fixture::path(2)));
  CHECK_FALSE(mb(fixture::path(1)));
  // Central triangle glued along two of its three edges.
  CHECK_FALSE(mb(cx(2, {{"1", "2", "3"}, {"1", "2", "4"}, {"2", "3", "5"}})));
}

TEST_CASE("realize examples") {
  SUBCASE("single P of color 1 in dimension 1") {
    const auto k = realize(fixture::single_p(1, 1), 1);
    CHECK(k.simplex_count() == 2);
    const auto g = gamma(k);
    REQUIRE(g.size() == 1);
    CHECK(g.vertex(0).color == 1);
  }
  SUBCASE("star in dimension 2") {
    const auto k = realize(fixture::star(2, {1, 2, 3}), 2);
    CHECK(k.simplex_count() == 4);  // centre plus one tip per outer piece
    CHECK(canonical_form(gamma(k), false) == canonical_form(fixture::star(2, {1, 2, 3}), false));
  }
  SUBCASE("P1-F-P2 in dimension 1") {
    const auto t = fixture::p_path(1, {1, 2});
    const auto k = realize(t, 1);
    CHECK(k.simplex_count() == 3);
    CHECK(canonical_form(gamma(k), false) == canonical_form(t, false));
  }
  SUBCASE("extra tips enlarge pieces") {
    const auto t = fixture::p_path(2, {1, 2});
    std::vector<int> extra(t.size(), 0);
    extra[0] = 3;
    const auto k = realize(t, 2, extra);
    CHECK(k.simplex_count() == 3 + 3);
    CHECK(canonical_form(gamma(k), false) == canonical_form(t, false));
  }
  SUBCASE("rejects graphs outside the class") {
    ColoredGraph bad(2);
    const auto f = bad.add_f("f");
    bad.add_edge(f, bad.add_p("a", 1));
    bad.add_edge(f, bad.add_p("b", 1));
    CHECK_THROWS_AS(realize(bad, 2), std::invalid_argument);
    CHECK_THROWS_AS(realize(fixture::p_path(2, {1, 2}), 3), std::invalid_argument);
  }
}

TEST_CASE("generate_random contract") {
  const auto one = generate_random(2, 1, 7);
  CHECK(compute_pieces(one, validate_tn(one)).size() == 1);
  CHECK(generate_random(2, 4, 7) == generate_random(2, 4, 7));
  CHECK_FALSE(generate_random(2, 4, 7) == generate_random(2, 4, 8));
  const auto two = generate_random(2, 3, 1, {false, 2});
  CHECK(gamma(two).colors_used().size() == 2);
  CHECK_THROWS_AS(generate_random(2, 3, 1, {false, 4}), std::invalid_argument);
  CHECK_THROWS_AS(generate_random(2, 1, 1, {false, 2}), std::invalid_argument);
  // A maximally branched tree has P-count 1 mod n.
  CHECK_THROWS_AS(generate_random(2, 4, 1, {true, 0}), std::invalid_argument);
}

TEST_CASE("generated complexes satisfy the structural invariants") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 1 + static_cast<int>(seed % 3);
    const int pieces = 1 + static_cast<int>(seed % 7);
    const auto k = generate_random(n, pieces, seed);
    const auto check = check_tn(k);
    REQUIRE(check.ok());
    const auto& tree = *check.tree;
    const auto& col = *check.coloring;
    CHECK(tree.edge_count() + 1 == tree.node_count());

    // Connected incidence graph: walk from simplex 0.
    std::vector<char> seen(tree.simplex_count, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      const auto s = stack.back();
      stack.pop_back();
      for (auto fi : tree.faces_of_simplex[s])
        for (auto t : tree.faces[fi].simplices)
          if (!seen[t]) {
            seen[t] = 1;
            stack.push_back(t);
          }
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; }));

    for (const auto& s : k.simplices()) {
      std::set<Color> colors;
      for (auto v : s) colors.insert(col[v]);
      CHECK(colors.size() == static_cast<std::size_t>(n + 1));
      CHECK(*colors.begin() == 1);
      CHECK(*colors.rbegin() == n + 1);
    }
    auto ps = compute_pieces(k, tree);
    CHECK(static_cast<int>(ps.size()) == pieces);
    label_pieces(ps, col, n);
    for (const auto& p : ps) {
      CHECK(p.members.size() >= 2);
      std::set<Color> off;
      for (auto m : p.members)
        for (auto v : k.simplex(m))
          if (!std::binary_search(p.spine.begin(), p.spine.end(), v)) off.insert(col[v]);
      REQUIRE(off.size() == 1);
      CHECK(*off.begin() == p.label);
    }
  }
}

TEST_CASE("renaming vertices permutes colors only") {
  Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 3;
    const auto k = generate_random(n, 2 + trial % 5, 1000 + trial);
    std::vector<std::size_t> perm(k.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    const auto r = fixture::renamed(k, "w", perm);
    CHECK(canonical_form(gamma(r), true) == canonical_form(gamma(k), true));
    CHECK(gamma(r).colors_used().size() == gamma(k).colors_used().size());
  }
}

TEST_CASE("three pairwise glued simplices are always rejected") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 2 + static_cast<int>(seed % 2);
    const auto k = generate_random(n, 1 + static_cast<int>(seed % 5), seed);
    auto simplices = k.named_simplices();
    const auto s = simplices[seed % simplices.size()];
    // s, s with s[0] swapped for x, s with s[1] swapped for x.
    auto a = s, b = s;
    a[0] = "zz_fresh";
    b[1] = "zz_fresh";
    simplices.push_back(a);
    simplices.push_back(b);
    const auto check = check_tn(SimplicialComplex(n, simplices));
    REQUIRE_FALSE(check.ok());
    CHECK(*check.failure == TnFailure::Cyclic);
  }
}
