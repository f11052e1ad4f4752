#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "treeqi/complex.hpp"

namespace treeqi {

enum class VertexKind { P, F };

struct GraphVertex {
  std::string id;
  VertexKind kind = VertexKind::P;
  Color color = 0;  // 1..n+1 for P-vertices, 0 for F-vertices

  friend bool operator==(const GraphVertex&, const GraphVertex&) = default;
};

/// Bipartite P/F graph whose P-vertices carry colors from {1..n+1}.
///
/// The container accepts anything structurally addressable; the class
/// constraints (bipartite, F-degree in [2, n+1], distinct colors around each
/// F, connected) are checked by validate_graph.
class ColoredGraph {
 public:
  explicit ColoredGraph(int n = 1) : n_(n) {}

  std::size_t add_p(std::string id, Color color);
  std::size_t add_f(std::string id);
  std::size_t add_vertex(GraphVertex vertex);
  void add_edge(std::size_t a, std::size_t b);

  int n() const { return n_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  const GraphVertex& vertex(std::size_t i) const { return vertices_[i]; }
  const std::vector<GraphVertex>& vertices() const { return vertices_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  std::span<const std::size_t> neighbors(std::size_t i) const { return adjacency_[i]; }
  std::size_t degree(std::size_t i) const { return adjacency_[i].size(); }

  bool is_p(std::size_t i) const { return vertices_[i].kind == VertexKind::P; }
  std::size_t p_count() const;
  std::size_t f_count() const { return size() - p_count(); }

  /// Sorted set of P-colors present.
  std::vector<Color> colors_used() const;

  std::optional<std::size_t> find(std::string_view id) const;

  bool is_connected() const;
  bool is_tree() const;

  /// Applies `permutation` (indexed 1..n+1; entry 0 unused) to every P-color.
  ColoredGraph recolored(std::span<const Color> permutation) const;

 private:
  int n_;
  std::vector<GraphVertex> vertices_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

struct GraphViolation {
  std::string what;
  std::string where;  // offending vertex id or "a--b" for an edge
};

std::vector<GraphViolation> validate_graph(const ColoredGraph& graph);

/// Throws std::invalid_argument listing the violations, if any.
void require_valid(const ColoredGraph& graph);

/// Partition of the vertices; blocks are numbered 0..block_count-1.
struct VertexPartition {
  std::vector<std::size_t> block_of;
  std::size_t block_count = 0;

  std::vector<std::vector<std::size_t>> blocks() const;
};

struct WeakCoveringMap {
  ColoredGraph source;
  ColoredGraph target;
  std::vector<std::size_t> vertex_map;  // source index -> target index
};

/// Checks color/kind preservation, the homomorphism property and edge
/// lifting. Throws std::invalid_argument if vertex_map is not total.
bool is_weak_covering(const WeakCoveringMap& map);

/// Coarsest partition refining the P-color/F partition in which vertices of a
/// block see the same set of neighbor blocks.
VertexPartition coarsest_stable_partition(const ColoredGraph& graph);

struct Minimization {
  WeakCoveringMap quotient;

  const ColoredGraph& graph() const { return quotient.target; }
};

/// Quotient by the coarsest stable partition. Quotient vertices keep the id of
/// the lowest-index source vertex of their block and appear in that order.
Minimization minimize(const ColoredGraph& graph);

bool is_minimal(const ColoredGraph& graph);

/// Canonical byte encoding, invariant under vertex renaming. With
/// `mod_color_permutation` it is additionally invariant under permuting the
/// P-colors.
std::string canonical_form(const ColoredGraph& graph, bool mod_color_permutation);

/// Canonical vertex order: position -> vertex index.
std::vector<std::size_t> canonical_order(const ColoredGraph& graph);

/// Rebuilds the graph a canonical form was produced from. Vertex ids are
/// "v0", "v1", ... in canonical position order.
ColoredGraph decode_canonical(std::string_view encoding);

bool bisimilar(const ColoredGraph& a, const ColoredGraph& b);

/// First permutation sigma (indexed 1..n+1, entry 0 unused) such that `a` and
/// sigma applied to `b` are bisimilar, or nullopt.
std::optional<std::vector<Color>> bisimilar_up_to_permutation(const ColoredGraph& a,
                                                              const ColoredGraph& b);

}  // namespace treeqi
