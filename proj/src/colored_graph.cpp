#include "treeqi/colored_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace treeqi {

std::size_t ColoredGraph::add_vertex(GraphVertex vertex) {
  vertices_.push_back(std::move(vertex));
  adjacency_.emplace_back();
  return vertices_.size() - 1;
}

std::size_t ColoredGraph::add_p(std::string id, Color color) {
  return add_vertex(GraphVertex{std::move(id), VertexKind::P, color});
}

std::size_t ColoredGraph::add_f(std::string id) {
  return add_vertex(GraphVertex{std::move(id), VertexKind::F, 0});
}

void ColoredGraph::add_edge(std::size_t a, std::size_t b) {
  if (a >= size() || b >= size()) throw std::out_of_range("edge endpoint out of range");
  edges_.emplace_back(a, b);
  adjacency_[a].push_back(b);
  if (a != b) adjacency_[b].push_back(a);
}

std::size_t ColoredGraph::p_count() const {
  return static_cast<std::size_t>(
      std::count_if(vertices_.begin(), vertices_.end(),
                    [](const GraphVertex& v) { return v.kind == VertexKind::P; }));
}

std::vector<Color> ColoredGraph::colors_used() const {
  std::set<Color> colors;
  for (const auto& v : vertices_) {
    if (v.kind == VertexKind::P) colors.insert(v.color);
  }
  return {colors.begin(), colors.end()};
}

std::optional<std::size_t> ColoredGraph::find(std::string_view id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].id == id) return i;
  }
  return std::nullopt;
}

bool ColoredGraph::is_connected() const {
  if (vertices_.empty()) return true;
  std::vector<bool> seen(size(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t u : adjacency_[v]) {
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        queue.push_back(u);
      }
    }
  }
  return reached == size();
}

bool ColoredGraph::is_tree() const {
  return !vertices_.empty() && edges_.size() + 1 == size() && is_connected();
}

ColoredGraph ColoredGraph::recolored(std::span<const Color> permutation) const {
  ColoredGraph out = *this;
  for (auto& v : out.vertices_) {
    if (v.kind == VertexKind::P) v.color = permutation[v.color];
  }
  return out;
}

std::vector<GraphViolation> validate_graph(const ColoredGraph& graph) {
  std::vector<GraphViolation> out;
  const int n = graph.n();
  if (n < 1) out.push_back({"dimension below 1", std::to_string(n)});
  if (graph.empty()) {
    out.push_back({"empty graph", ""});
    return out;
  }

  std::set<std::string> ids;
  for (const auto& v : graph.vertices()) {
    if (!ids.insert(v.id).second) out.push_back({"duplicate vertex id", v.id});
    if (v.kind == VertexKind::P && (v.color < 1 || v.color > n + 1)) {
      out.push_back({"P-color out of range", v.id});
    }
    if (v.kind == VertexKind::F && v.color != 0) out.push_back({"F-vertex carries a color", v.id});
  }

  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto [a, b] : graph.edges()) {
    const std::string where = graph.vertex(a).id + "--" + graph.vertex(b).id;
    if (a == b) {
      out.push_back({"self-loop", where});
      continue;
    }
    if (!seen.insert(std::minmax(a, b)).second) out.push_back({"duplicate edge", where});
    if (graph.is_p(a) == graph.is_p(b)) {
      out.push_back({graph.is_p(a) ? "P--P edge" : "F--F edge", where});
    }
  }

  for (std::size_t v = 0; v < graph.size(); ++v) {
    if (graph.is_p(v)) continue;
    const auto& id = graph.vertex(v).id;
    if (graph.degree(v) < 2) out.push_back({"F degree < 2", id});
    if (graph.degree(v) > static_cast<std::size_t>(n) + 1) out.push_back({"F degree > n+1", id});
    std::set<Color> colors;
    for (std::size_t u : graph.neighbors(v)) {
      if (graph.is_p(u) && !colors.insert(graph.vertex(u).color).second) {
        out.push_back({"repeated P-color at F", id});
        break;
      }
    }
  }

  if (!graph.is_connected()) out.push_back({"disconnected", ""});
  return out;
}

void require_valid(const ColoredGraph& graph) {
  const auto violations = validate_graph(graph);
  if (violations.empty()) return;
  std::string message = "invalid colored graph:";
  for (const auto& v : violations) {
    message += " " + v.what;
    if (!v.where.empty()) message += " (" + v.where + ")";
    message += ";";
  }
  throw std::invalid_argument(message);
}

std::vector<std::vector<std::size_t>> VertexPartition::blocks() const {
  std::vector<std::vector<std::size_t>> out(block_count);
  for (std::size_t v = 0; v < block_of.size(); ++v) out[block_of[v]].push_back(v);
  return out;
}

bool is_weak_covering(const WeakCoveringMap& map) {
  const auto& src = map.source;
  const auto& dst = map.target;
  if (map.vertex_map.size() != src.size()) throw std::invalid_argument("vertex map is not total");
  for (std::size_t image : map.vertex_map) {
    if (image >= dst.size()) throw std::invalid_argument("vertex map leaves the target");
  }

  for (std::size_t v = 0; v < src.size(); ++v) {
    const auto& a = src.vertex(v);
    const auto& b = dst.vertex(map.vertex_map[v]);
    if (a.kind != b.kind || a.color != b.color) return false;
  }

  std::set<std::pair<std::size_t, std::size_t>> target_edges;
  for (auto [a, b] : dst.edges()) target_edges.insert(std::minmax(a, b));
  for (auto [a, b] : src.edges()) {
    if (!target_edges.contains(std::minmax(map.vertex_map[a], map.vertex_map[b]))) return false;
  }

  for (std::size_t v = 0; v < src.size(); ++v) {
    std::set<std::size_t> lifted;
    for (std::size_t u : src.neighbors(v)) lifted.insert(map.vertex_map[u]);
    for (std::size_t t : dst.neighbors(map.vertex_map[v])) {
      if (!lifted.contains(t)) return false;
    }
  }

  // A weak covering of a connected source onto a connected target is onto.
  if (src.is_connected() && !src.empty()) {
    std::vector<bool> hit(dst.size(), false);
    for (std::size_t image : map.vertex_map) hit[image] = true;
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) return false;
  }
  return true;
}

VertexPartition coarsest_stable_partition(const ColoredGraph& graph) {
  const std::size_t size = graph.size();
  VertexPartition partition;
  partition.block_of.resize(size);
  {
    std::map<Color, std::size_t> initial;
    for (const auto& v : graph.vertices()) initial.emplace(v.kind == VertexKind::F ? 0 : v.color, 0);
    std::size_t next = 0;
    for (auto& [key, id] : initial) id = next++;
    for (std::size_t v = 0; v < size; ++v) {
      const auto& gv = graph.vertex(v);
      partition.block_of[v] = initial.at(gv.kind == VertexKind::F ? 0 : gv.color);
    }
    partition.block_count = initial.size();
  }

  using Signature = std::pair<std::size_t, std::vector<std::size_t>>;
  std::vector<Signature> signatures(size);
  while (true) {
    for (std::size_t v = 0; v < size; ++v) {
      auto& [own, seen] = signatures[v];
      own = partition.block_of[v];
      seen.clear();
      for (std::size_t u : graph.neighbors(v)) seen.push_back(partition.block_of[u]);
      std::sort(seen.begin(), seen.end());
      seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    }
    std::map<Signature, std::size_t> ids;
    for (const auto& s : signatures) ids.emplace(s, 0);
    if (ids.size() == partition.block_count) break;
    std::size_t next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (std::size_t v = 0; v < size; ++v) partition.block_of[v] = ids.at(signatures[v]);
    partition.block_count = ids.size();
  }
  return partition;
}

Minimization minimize(const ColoredGraph& graph) {
  require_valid(graph);
  const VertexPartition partition = coarsest_stable_partition(graph);

  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> order(partition.block_count, unset);
  ColoredGraph quotient(graph.n());
  for (std::size_t v = 0; v < graph.size(); ++v) {
    auto& slot = order[partition.block_of[v]];
    if (slot == unset) slot = quotient.add_vertex(graph.vertex(v));
  }
  std::vector<std::size_t> vertex_map(graph.size());
  for (std::size_t v = 0; v < graph.size(); ++v) vertex_map[v] = order[partition.block_of[v]];

  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (auto [a, b] : graph.edges()) edges.insert(std::minmax(vertex_map[a], vertex_map[b]));
  for (auto [a, b] : edges) quotient.add_edge(a, b);

  return Minimization{WeakCoveringMap{graph, std::move(quotient), std::move(vertex_map)}};
}

bool is_minimal(const ColoredGraph& graph) {
  return minimize(graph).graph().size() == graph.size();
}

namespace {

void require_same_dimension(const ColoredGraph& a, const ColoredGraph& b) {
  if (a.n() != b.n()) throw std::invalid_argument("graphs have different dimensions");
}

}  // namespace

bool bisimilar(const ColoredGraph& a, const ColoredGraph& b) {
  require_same_dimension(a, b);
  return canonical_form(minimize(a).graph(), false) == canonical_form(minimize(b).graph(), false);
}

std::optional<std::vector<Color>> bisimilar_up_to_permutation(const ColoredGraph& a,
                                                              const ColoredGraph& b) {
  require_same_dimension(a, b);
  const int n = a.n();
  const ColoredGraph ma = minimize(a).graph();
  const ColoredGraph mb = minimize(b).graph();
  const auto colors_a = ma.colors_used();
  const auto colors_b = mb.colors_used();
  if (colors_a.size() != colors_b.size() || ma.size() != mb.size() ||
      ma.p_count() != mb.p_count()) {
    return std::nullopt;
  }

  // Colors outside both graphs stay fixed; the remaining unused colors of b
  // go to the remaining unused colors of a in increasing order.
  std::vector<Color> free_domain, free_range;
  for (Color c = 1; c <= n + 1; ++c) {
    const bool in_a = std::binary_search(colors_a.begin(), colors_a.end(), c);
    const bool in_b = std::binary_search(colors_b.begin(), colors_b.end(), c);
    if (in_a && !in_b) free_domain.push_back(c);
    if (in_b && !in_a) free_range.push_back(c);
  }

  const std::string target = canonical_form(ma, false);
  std::vector<Color> images = colors_a;
  do {
    std::vector<Color> sigma(n + 2);
    for (Color c = 0; c <= n + 1; ++c) sigma[c] = c;
    for (std::size_t i = 0; i < colors_b.size(); ++i) sigma[colors_b[i]] = images[i];
    for (std::size_t i = 0; i < free_domain.size(); ++i) sigma[free_domain[i]] = free_range[i];
    if (canonical_form(mb.recolored(sigma), false) == target) return sigma;
  } while (std::next_permutation(images.begin(), images.end()));
  return std::nullopt;
}

}  // namespace treeqi
