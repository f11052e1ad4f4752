#pragma once

#include <optional>
#include <string>
#include <vector>

#include "treeqi/colored_graph.hpp"
#include "treeqi/complex.hpp"

namespace treeqi {

/// Everything derived from a validated complex on the way to its invariant.
struct Analysis {
  GluingTree tree;
  VertexColoring coloring;
  std::vector<Piece> pieces;  // labelled
  // Empty for a single simplex, which has no pieces.
  ColoredGraph gamma;
};

/// Validates and decomposes. Throws NotInTnError.
Analysis analyze(const SimplicialComplex& complex);

/// The labelled P/F tree of the piece decomposition. Throws
/// std::invalid_argument for a single simplex.
ColoredGraph gamma(const SimplicialComplex& complex);

struct Reducibility {
  bool reducible = false;
  std::vector<Color> colors_used;
  std::vector<std::string> cone_witness;
};

Reducibility is_reducible(const SimplicialComplex& complex, const Analysis& analysis);

struct QiClass {
  enum class Variant { Abelian, Graph };

  int dimension = 0;
  Variant variant = Variant::Abelian;
  std::string canonical;  // canonical minimal graph mod color permutation
  bool reducible = false;
  bool maximally_branched = false;
  int colors_used = 0;

  /// Identity ignores the metadata, which is derived from the invariant.
  friend bool operator==(const QiClass& a, const QiClass& b) {
    return a.dimension == b.dimension && a.variant == b.variant &&
           a.canonical == b.canonical;
  }
  friend auto operator<=>(const QiClass& a, const QiClass& b) {
    if (auto c = a.dimension <=> b.dimension; c != 0) return c;
    if (auto c = a.variant <=> b.variant; c != 0) return c;
    return a.canonical <=> b.canonical;
  }
};

QiClass qi_class(const SimplicialComplex& complex);

struct QiCertificate {
  bool equivalent = false;
  std::string reason;
  std::optional<std::vector<Color>> permutation;
  std::optional<ColoredGraph> minimal_a;
  std::optional<ColoredGraph> minimal_b;
};

/// Graph-level decision shared by complex and graph comparison.
QiCertificate compare_graphs(const ColoredGraph& a, const ColoredGraph& b,
                             bool allow_permutation = true);

QiCertificate qi_equivalent(const SimplicialComplex& a, const SimplicialComplex& b,
                            bool allow_permutation = true);

struct FamilyCertificate {
  bool equivalent = false;
  std::vector<QiClass> classes_a;  // per input component, in input order
  std::vector<QiClass> classes_b;
  std::vector<std::size_t> unmatched_a;
  std::vector<std::size_t> unmatched_b;
  // Set when either side has one component; the free-product statement is
  // applied verbatim there too.
  bool single_component = false;
};

/// Free products of tree-complex groups: equal sets of component classes.
/// Components are classified in parallel.
FamilyCertificate qi_equivalent_families(const std::vector<SimplicialComplex>& a,
                                         const std::vector<SimplicialComplex>& b);

}  // namespace treeqi
