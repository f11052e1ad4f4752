#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "treeqi/colored_graph.hpp"
#include "treeqi/random.hpp"

namespace treeqi {

/// Every valid colored tree with exactly `p_count` P-vertices, once per
/// colored isomorphism class (colors are not permuted), ordered by canonical
/// form. Serial reference implementation.
std::vector<ColoredGraph> enumerate_gamma_trees(int n, int p_count);

/// Same output as enumerate_gamma_trees; parent trees are extended in
/// parallel with `jobs` OpenMP threads.
std::vector<ColoredGraph> enumerate_gamma_trees_parallel(int n, int p_count, int jobs);

/// Extensions of `tree` by one P-vertex: a new leaf on an F-vertex with spare
/// valence, or a new F-vertex joining an existing P to a new P.
std::vector<ColoredGraph> one_p_extensions(const ColoredGraph& tree);

struct CensusClass {
  std::string canonical;  // canonical_form(minimal, true)
  std::size_t p_count = 0;
  int first_seen_at = 0;  // smallest tree P-count producing the class
  bool has_cycle = false;
};

struct CensusReport {
  int n = 0;
  int max_pieces = 0;
  std::map<int, int> buckets;  // minimal P-count -> number of classes
  bool abelian_included = true;
  int total = 0;
  std::vector<CensusClass> classes;  // ordered by (p_count, canonical)
  std::vector<std::size_t> trees_per_k;  // index k-1

  friend bool operator==(const CensusReport& a, const CensusReport& b) {
    return a.n == b.n && a.max_pieces == b.max_pieces && a.buckets == b.buckets &&
           a.abelian_included == b.abelian_included && a.total == b.total;
  }
};

struct CensusOptions {
  bool include_abelian = true;
  int jobs = 1;  // 1 selects the serial reference path
  std::ostream* log = nullptr;  // one line per k when set
};

CensusReport census(int n, int max_pieces, const CensusOptions& options = {});

struct TreeOptions {
  bool maximally_branched = false;
  int colors_used = 0;  // 0: unconstrained
};

/// Random valid colored tree with `p_count` P-vertices. Throws
/// std::invalid_argument when the options are unsatisfiable.
ColoredGraph random_gamma_tree(int n, int p_count, Rng& rng,
                               const TreeOptions& options = {});

}  // namespace treeqi
