#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "treeqi/error.hpp"

namespace treeqi {

/// Index into the sorted vertex-name table of a complex. Index order equals
/// lexicographic name order.
using VertexId = std::uint32_t;

/// P-colors are 1..n+1. Zero means "no color".
using Color = int;

/// A pure n-dimensional abstract simplicial complex, given by its n-simplices.
///
/// Vertices are opaque strings. Each simplex is stored as a sorted list of
/// vertex ids and the simplex list itself is sorted, so every traversal in
/// this library is lexicographic on names.
class SimplicialComplex {
 public:
  /// Throws ParseError on wrong cardinality, repeated vertices, duplicate
  /// simplices, an empty simplex list or a dimension below 1.
  SimplicialComplex(int dimension,
                    const std::vector<std::vector<std::string>>& simplices);

  int dimension() const { return dimension_; }
  std::size_t vertex_count() const { return names_.size(); }
  std::size_t simplex_count() const { return simplices_.size(); }

  const std::string& name(VertexId v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  std::span<const VertexId> simplex(std::size_t i) const { return simplices_[i]; }
  const std::vector<std::vector<VertexId>>& simplices() const { return simplices_; }

  std::vector<std::vector<std::string>> named_simplices() const;
  std::vector<std::string> names_of(std::span<const VertexId> vertices) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  int dimension_;
  std::vector<std::string> names_;
  std::vector<std::vector<VertexId>> simplices_;
};

/// An (n-1)-face contained in at least two n-simplices.
struct SharedFace {
  std::vector<VertexId> vertices;
  std::vector<std::size_t> simplices;
};

/// Bipartite incidence graph between n-simplices and shared (n-1)-faces.
/// When produced by validate_tn it is a tree.
struct GluingTree {
  std::size_t simplex_count = 0;
  std::vector<SharedFace> faces;  // sorted by vertex names
  std::vector<std::vector<std::size_t>> faces_of_simplex;

  std::size_t node_count() const { return simplex_count + faces.size(); }
  std::size_t edge_count() const;
};

/// Proper (n+1)-coloring of the vertices: a simplicial map onto the n-simplex.
struct VertexColoring {
  std::vector<Color> colors;  // indexed by VertexId

  Color operator[](VertexId v) const { return colors[v]; }
  friend bool operator==(const VertexColoring&, const VertexColoring&) = default;
};

/// The star of a shared face. `label` is 0 until coloring is known.
struct Piece {
  std::vector<VertexId> spine;
  std::vector<std::size_t> members;
  Color label = 0;
};

/// Incidence graph of simplices and shared faces, with no tree check.
GluingTree build_incidence(const SimplicialComplex& complex);

struct TnCheck {
  std::optional<GluingTree> tree;
  std::optional<VertexColoring> coloring;
  std::optional<TnFailure> failure;
  std::string detail;

  bool ok() const { return !failure.has_value(); }
};

/// Full membership test with a failure certificate instead of an exception.
TnCheck check_tn(const SimplicialComplex& complex);

/// Returns the gluing tree iff the complex can be assembled from n-simplices
/// by gluing along (n-1)-faces. Throws NotInTnError otherwise.
GluingTree validate_tn(const SimplicialComplex& complex);

std::vector<Piece> compute_pieces(const SimplicialComplex& complex,
                                  const GluingTree& tree);

/// Seeds the lexicographically first simplex with colors 1..n+1 in name order
/// and propagates breadth-first across the gluing tree. Throws NotInTnError
/// (Uncolorable) on a conflict.
VertexColoring compute_coloring(const SimplicialComplex& complex,
                                const GluingTree& tree);

/// Fills each piece label with the one color missing from its spine.
void label_pieces(std::vector<Piece>& pieces, const VertexColoring& coloring,
                  int dimension);

/// Vertices adjacent in the 1-skeleton to every other vertex, sorted by name.
std::vector<std::string> cone_vertices(const SimplicialComplex& complex);

bool is_maximally_branched(const SimplicialComplex& complex,
                           const GluingTree& tree);

}  // namespace treeqi
