#pragma once

#include <cstdint>
#include <span>

#include "treeqi/colored_graph.hpp"
#include "treeqi/complex.hpp"

namespace treeqi {

/// Builds a complex whose labelled graph is exactly `tree`, colors included.
///
/// Every piece gets the fewest fresh tip simplices needed to reach two members,
/// plus `extra_tips[p]` more for P-vertex p when given. Vertex names are
/// "c<color>_<index>" with the color zero-padded, so name order within a
/// simplex is color order. Throws std::invalid_argument if `tree` is not a
/// valid colored tree for dimension n.
SimplicialComplex realize(const ColoredGraph& tree, int n,
                          std::span<const int> extra_tips = {});

struct GenerateOptions {
  bool maximally_branched = false;
  int colors_used = 0;  // 0: unconstrained
};

/// Deterministic in all arguments. Throws std::invalid_argument when the
/// options cannot be satisfied.
SimplicialComplex generate_random(int n, int pieces, std::uint64_t seed,
                                  const GenerateOptions& options = {});

}  // namespace treeqi
