#include "treeqi/complex.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace treeqi {

const char* to_string(TnFailure failure) {
  switch (failure) {
    case TnFailure::Disconnected: return "DISCONNECTED";
    case TnFailure::Cyclic: return "CYCLIC";
    case TnFailure::Uncolorable: return "UNCOLORABLE";
    case TnFailure::IdentifiedVertices: return "IDENTIFIED_VERTICES";
  }
  return "UNKNOWN";
}

namespace {

std::string brace(const std::vector<std::string>& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ',';
    out += names[i];
  }
  return out + "}";
}

struct Propagation {
  VertexColoring coloring;
  std::optional<TnFailure> failure;
  std::string detail;
};

Propagation propagate(const SimplicialComplex& complex, const GluingTree& tree) {
  const int n = complex.dimension();
  Propagation result;
  auto& colors = result.coloring.colors;
  colors.assign(complex.vertex_count(), 0);

  const auto seed = complex.simplex(0);
  for (std::size_t i = 0; i < seed.size(); ++i) colors[seed[i]] = static_cast<Color>(i + 1);

  std::vector<bool> visited(complex.simplex_count(), false);
  visited[0] = true;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t s = queue.front();
    queue.pop_front();
    for (std::size_t f : tree.faces_of_simplex[s]) {
      const SharedFace& face = tree.faces[f];
      std::vector<bool> present(n + 2, false);
      for (VertexId v : face.vertices) present[colors[v]] = true;
      Color missing = 0;
      for (Color c = 1; c <= n + 1; ++c) {
        if (!present[c]) missing = c;
      }
      for (std::size_t t : face.simplices) {
        if (visited[t]) continue;
        visited[t] = true;
        queue.push_back(t);
        const auto simplex = complex.simplex(t);
        const auto off = std::find_if(simplex.begin(), simplex.end(), [&](VertexId v) {
          return !std::binary_search(face.vertices.begin(), face.vertices.end(), v);
        });
        const VertexId w = *off;
        if (colors[w] == 0) {
          colors[w] = missing;
          continue;
        }
        const auto where = brace(complex.names_of(simplex));
        if (colors[w] != missing) {
          result.failure = TnFailure::Uncolorable;
          result.detail = "vertex " + complex.name(w) + " needs colors " +
                          std::to_string(colors[w]) + " and " + std::to_string(missing) +
                          " (reached through simplex " + where + ")";
        } else {
          result.failure = TnFailure::IdentifiedVertices;
          result.detail = "vertex " + complex.name(w) + " of simplex " + where +
                          " already occurs in a non-adjacent part of the gluing tree";
        }
        return result;
      }
    }
  }
  return result;
}

}  // namespace

SimplicialComplex::SimplicialComplex(int dimension,
                                     const std::vector<std::vector<std::string>>& simplices)
    : dimension_(dimension) {
  if (dimension < 1) throw ParseError("dimension must be at least 1");
  if (simplices.empty()) throw ParseError("complex has no simplices");
  const std::size_t expected = static_cast<std::size_t>(dimension) + 1;
  for (const auto& s : simplices) {
    if (s.size() != expected) {
      throw ParseError("simplex cardinality " + std::to_string(s.size()) +
                       " != " + std::to_string(expected));
    }
    names_.insert(names_.end(), s.begin(), s.end());
  }
  std::sort(names_.begin(), names_.end());
  names_.erase(std::unique(names_.begin(), names_.end()), names_.end());

  simplices_.reserve(simplices.size());
  for (const auto& s : simplices) {
    std::vector<VertexId> ids;
    ids.reserve(s.size());
    for (const auto& name : s) {
      ids.push_back(static_cast<VertexId>(
          std::lower_bound(names_.begin(), names_.end(), name) - names_.begin()));
    }
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
      auto sorted = s;
      std::sort(sorted.begin(), sorted.end());
      throw ParseError("repeated vertex in simplex " + brace(sorted));
    }
    simplices_.push_back(std::move(ids));
  }
  std::sort(simplices_.begin(), simplices_.end());
  const auto dup = std::adjacent_find(simplices_.begin(), simplices_.end());
  if (dup != simplices_.end()) {
    throw ParseError("duplicate simplex " + brace(names_of(*dup)));
  }
}

std::vector<std::vector<std::string>> SimplicialComplex::named_simplices() const {
  std::vector<std::vector<std::string>> out;
  out.reserve(simplices_.size());
  for (const auto& s : simplices_) out.push_back(names_of(s));
  return out;
}

std::vector<std::string> SimplicialComplex::names_of(std::span<const VertexId> vertices) const {
  std::vector<std::string> out;
  out.reserve(vertices.size());
  for (VertexId v : vertices) out.push_back(names_[v]);
  return out;
}

std::size_t GluingTree::edge_count() const {
  std::size_t total = 0;
  for (const auto& face : faces) total += face.simplices.size();
  return total;
}

GluingTree build_incidence(const SimplicialComplex& complex) {
  std::map<std::vector<VertexId>, std::vector<std::size_t>> faces;
  for (std::size_t s = 0; s < complex.simplex_count(); ++s) {
    const auto simplex = complex.simplex(s);
    for (std::size_t drop = 0; drop < simplex.size(); ++drop) {
      std::vector<VertexId> face;
      face.reserve(simplex.size() - 1);
      for (std::size_t i = 0; i < simplex.size(); ++i) {
        if (i != drop) face.push_back(simplex[i]);
      }
      faces[std::move(face)].push_back(s);
    }
  }
  GluingTree tree;
  tree.simplex_count = complex.simplex_count();
  tree.faces_of_simplex.resize(tree.simplex_count);
  for (auto& [vertices, members] : faces) {
    if (members.size() < 2) continue;
    const std::size_t index = tree.faces.size();
    for (std::size_t s : members) tree.faces_of_simplex[s].push_back(index);
    tree.faces.push_back(SharedFace{vertices, std::move(members)});
  }
  return tree;
}

TnCheck check_tn(const SimplicialComplex& complex) {
  TnCheck check;
  GluingTree tree = build_incidence(complex);

  // Breadth-first over the bipartite graph; a second visit of a face node
  // from a different simplex closes a cycle.
  std::vector<bool> simplex_seen(tree.simplex_count, false);
  std::vector<std::optional<std::size_t>> face_parent(tree.faces.size());
  std::optional<std::string> cycle;
  std::deque<std::size_t> queue{0};
  simplex_seen[0] = true;
  std::vector<std::optional<std::size_t>> simplex_parent(tree.simplex_count);
  while (!queue.empty()) {
    const std::size_t s = queue.front();
    queue.pop_front();
    for (std::size_t f : tree.faces_of_simplex[s]) {
      if (simplex_parent[s] == f) continue;
      if (face_parent[f]) {
        if (!cycle) {
          cycle = "face " + brace(complex.names_of(tree.faces[f].vertices)) +
                  " closes a cycle at simplex " + brace(complex.names_of(complex.simplex(s)));
        }
        continue;
      }
      face_parent[f] = s;
      for (std::size_t t : tree.faces[f].simplices) {
        if (t == s) continue;
        if (simplex_seen[t]) {
          if (!cycle) {
            cycle = "simplex " + brace(complex.names_of(complex.simplex(t))) +
                    " is reached twice (via face " +
                    brace(complex.names_of(tree.faces[f].vertices)) + ")";
          }
          continue;
        }
        simplex_seen[t] = true;
        simplex_parent[t] = f;
        queue.push_back(t);
      }
    }
  }

  const auto unreached = std::find(simplex_seen.begin(), simplex_seen.end(), false);
  if (unreached != simplex_seen.end()) {
    const auto s = static_cast<std::size_t>(unreached - simplex_seen.begin());
    check.failure = TnFailure::Disconnected;
    check.detail = "simplex " + brace(complex.names_of(complex.simplex(s))) +
                   " shares no chain of (n-1)-faces with simplex " +
                   brace(complex.names_of(complex.simplex(0)));
    return check;
  }
  if (tree.edge_count() != tree.node_count() - 1) {
    check.failure = TnFailure::Cyclic;
    check.detail = cycle.value_or("incidence graph has " + std::to_string(tree.edge_count()) +
                                  " edges on " + std::to_string(tree.node_count()) + " nodes");
    return check;
  }

  Propagation p = propagate(complex, tree);
  if (p.failure) {
    check.failure = p.failure;
    check.detail = std::move(p.detail);
    return check;
  }
  check.coloring = std::move(p.coloring);
  check.tree = std::move(tree);
  return check;
}

GluingTree validate_tn(const SimplicialComplex& complex) {
  TnCheck check = check_tn(complex);
  if (!check.ok()) throw NotInTnError(*check.failure, check.detail);
  return std::move(*check.tree);
}

std::vector<Piece> compute_pieces(const SimplicialComplex&, const GluingTree& tree) {
  std::vector<Piece> pieces;
  pieces.reserve(tree.faces.size());
  for (const auto& face : tree.faces) pieces.push_back(Piece{face.vertices, face.simplices, 0});
  return pieces;
}

VertexColoring compute_coloring(const SimplicialComplex& complex, const GluingTree& tree) {
  Propagation p = propagate(complex, tree);
  if (p.failure) throw NotInTnError(*p.failure, p.detail);
  return std::move(p.coloring);
}

void label_pieces(std::vector<Piece>& pieces, const VertexColoring& coloring, int dimension) {
  for (auto& piece : pieces) {
    std::vector<bool> present(dimension + 2, false);
    for (VertexId v : piece.spine) present[coloring[v]] = true;
    for (Color c = 1; c <= dimension + 1; ++c) {
      if (!present[c]) piece.label = c;
    }
  }
}

std::vector<std::string> cone_vertices(const SimplicialComplex& complex) {
  std::vector<std::vector<VertexId>> adjacent(complex.vertex_count());
  for (const auto& simplex : complex.simplices()) {
    for (VertexId a : simplex) {
      for (VertexId b : simplex) {
        if (a != b) adjacent[a].push_back(b);
      }
    }
  }
  std::vector<std::string> cones;
  for (VertexId v = 0; v < complex.vertex_count(); ++v) {
    auto& nbrs = adjacent[v];
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    if (nbrs.size() + 1 == complex.vertex_count()) cones.push_back(complex.name(v));
  }
  return cones;
}

bool is_maximally_branched(const SimplicialComplex& complex, const GluingTree& tree) {
  if (complex.simplex_count() == 1) return false;
  const auto all = static_cast<std::size_t>(complex.dimension()) + 1;
  return std::all_of(tree.faces_of_simplex.begin(), tree.faces_of_simplex.end(),
                     [all](const auto& shared) { return shared.size() == 1 || shared.size() == all; });
}

}  // namespace treeqi
