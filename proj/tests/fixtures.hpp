#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "treeqi/colored_graph.hpp"
#include "treeqi/complex.hpp"

namespace fixture {

using treeqi::ColoredGraph;
using treeqi::SimplicialComplex;

inline SimplicialComplex cx(int n, std::vector<std::vector<std::string>> simplices) {
  return SimplicialComplex(n, simplices);
}

/// 1-dimensional path on `edges` edges with vertices v0, v1, ...
inline SimplicialComplex path(int edges) {
  std::vector<std::vector<std::string>> s;
  for (int i = 0; i < edges; ++i) s.push_back({"v" + std::to_string(i), "v" + std::to_string(i + 1)});
  return SimplicialComplex(1, s);
}

inline SimplicialComplex two_triangles() { return cx(2, {{"a", "b", "c"}, {"a", "b", "d"}}); }

inline SimplicialComplex star_complex() {
  return cx(2, {{"1", "2", "3"}, {"1", "2", "4"}, {"2", "3", "5"}, {"1", "3", "6"}});
}

/// P-path with the given colors joined by F-vertices: c0-F-c1-F-...
inline ColoredGraph p_path(int n, std::initializer_list<int> colors) {
  ColoredGraph g(n);
  std::size_t prev = 0;
  int i = 0;
  for (int c : colors) {
    const auto p = g.add_p("p" + std::to_string(i), c);
    if (i > 0) {
      const auto f = g.add_f("f" + std::to_string(i));
      g.add_edge(prev, f);
      g.add_edge(f, p);
    }
    prev = p;
    ++i;
  }
  return g;
}

/// One F joined to a P of each listed color.
inline ColoredGraph star(int n, std::initializer_list<int> colors) {
  ColoredGraph g(n);
  const auto f = g.add_f("center");
  for (int c : colors) g.add_edge(f, g.add_p("leaf" + std::to_string(c), c));
  return g;
}

inline ColoredGraph single_p(int n, int color) {
  ColoredGraph g(n);
  g.add_p("only", color);
  return g;
}

inline SimplicialComplex renamed(const SimplicialComplex& k, const std::string& prefix,
                                 std::vector<std::size_t> perm) {
  std::vector<std::vector<std::string>> s;
  for (const auto& named : k.named_simplices()) {
    std::vector<std::string> out;
    for (const auto& v : named) {
      std::size_t idx = 0;
      while (k.name(static_cast<treeqi::VertexId>(idx)) != v) ++idx;
      out.push_back(prefix + std::to_string(perm[idx]));
    }
    s.push_back(out);
  }
  return SimplicialComplex(k.dimension(), s);
}

}  // namespace fixture
