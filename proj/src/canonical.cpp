// Canonical labeling by color refinement with individualization and
// backtracking. Leaves are compared by their encoding; equal leaves yield
// automorphisms, used both to prune candidate vertices in the same orbit and to
// jump back to the node where the two paths diverged.

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "treeqi/colored_graph.hpp"

namespace treeqi {
namespace {

using Cells = std::vector<std::size_t>;  // vertex -> cell rank (dense, ordered)
using Perm = std::vector<std::size_t>;

void put_u16(std::string& out, std::size_t value) {
  out.push_back(static_cast<char>((value >> 8) & 0xff));
  out.push_back(static_cast<char>(value & 0xff));
}

std::size_t get_u16(std::string_view in, std::size_t at) {
  return (static_cast<std::size_t>(static_cast<unsigned char>(in[at])) << 8) |
         static_cast<unsigned char>(in[at + 1]);
}

std::size_t count_cells(const Cells& cells) {
  return cells.empty() ? 0 : *std::max_element(cells.begin(), cells.end()) + 1;
}

class Canonizer {
 public:
  explicit Canonizer(const ColoredGraph& graph) : graph_(graph), size_(graph.size()) {
    if (size_ > 0xffff) throw std::invalid_argument("graph too large for canonical form");
    adjacency_.resize(size_);
    for (auto [a, b] : graph.edges()) {
      if (a == b) continue;
      adjacency_[a].push_back(b);
      adjacency_[b].push_back(a);
    }
    for (auto& nbrs : adjacency_) {
      std::sort(nbrs.begin(), nbrs.end());
      nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
  }

  void run() {
    Cells cells(size_);
    rank_by(cells, [&](std::size_t v) { return color_key(v); });
    refine(cells);
    std::vector<std::size_t> prefix;
    search(cells, prefix);
    best_order_.assign(size_, 0);
    for (std::size_t v = 0; v < size_; ++v) best_order_[best_cells_[v]] = v;
  }

  const std::string& encoding() const { return best_; }
  const Perm& order() const { return best_order_; }

 private:
  Color color_key(std::size_t v) const {
    const auto& gv = graph_.vertex(v);
    return gv.kind == VertexKind::F ? 0 : gv.color;
  }

  template <typename KeyFn>
  void rank_by(Cells& cells, KeyFn key) const {
    using Key = decltype(key(std::size_t{}));
    std::vector<Key> keys(size_);
    for (std::size_t v = 0; v < size_; ++v) keys[v] = key(v);
    std::vector<Key> distinct = keys;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (std::size_t v = 0; v < size_; ++v) {
      cells[v] = static_cast<std::size_t>(
          std::lower_bound(distinct.begin(), distinct.end(), keys[v]) - distinct.begin());
    }
  }

  // Equitable refinement: split cells by the multiset of neighbor cells until
  // stable. Order-preserving, so singleton positions never move.
  void refine(Cells& cells) const {
    std::size_t count = count_cells(cells);
    while (true) {
      Cells previous = cells;
      rank_by(cells, [&](std::size_t v) {
        std::vector<std::size_t> key;
        key.reserve(adjacency_[v].size() + 1);
        for (std::size_t u : adjacency_[v]) key.push_back(previous[u]);
        std::sort(key.begin(), key.end());
        key.insert(key.begin(), previous[v]);
        return key;
      });
      const std::size_t next = count_cells(cells);
      if (next == count) return;
      count = next;
    }
  }

  std::string encode(const Cells& position) const {
    Perm at(size_);
    for (std::size_t v = 0; v < size_; ++v) at[position[v]] = v;
    std::string out;
    out.push_back(static_cast<char>(graph_.n()));
    put_u16(out, size_);
    for (std::size_t i = 0; i < size_; ++i) out.push_back(static_cast<char>(color_key(at[i])));
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t v = 0; v < size_; ++v) {
      for (std::size_t u : adjacency_[v]) {
        if (v < u) edges.emplace_back(std::minmax(position[v], position[u]));
      }
    }
    std::sort(edges.begin(), edges.end());
    for (auto [a, b] : edges) {
      put_u16(out, a);
      put_u16(out, b);
    }
    return out;
  }

  static std::size_t common_prefix(const std::vector<std::size_t>& a,
                                   const std::vector<std::size_t>& b) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    return i;
  }

  void record_automorphism(const Cells& from, const Cells& to) {
    Perm inverse_to(size_);
    for (std::size_t v = 0; v < size_; ++v) inverse_to[to[v]] = v;
    Perm gamma(size_);
    for (std::size_t v = 0; v < size_; ++v) gamma[v] = inverse_to[from[v]];
    automorphisms_.push_back(std::move(gamma));
  }

  // Orbit test under the recorded automorphisms that fix `prefix` pointwise.
  bool same_orbit(std::size_t v, const std::vector<std::size_t>& explored,
                  const std::vector<std::size_t>& prefix) const {
    std::vector<std::size_t> parent(size_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (const auto& gamma : automorphisms_) {
      if (!std::all_of(prefix.begin(), prefix.end(),
                       [&](std::size_t p) { return gamma[p] == p; })) {
        continue;
      }
      any = true;
      for (std::size_t x = 0; x < size_; ++x) parent[find(x)] = find(gamma[x]);
    }
    if (!any) return false;
    const std::size_t root = find(v);
    return std::any_of(explored.begin(), explored.end(),
                       [&](std::size_t u) { return find(u) == root; });
  }

  // Returns the depth to resume at, or npos to continue normally.
  std::size_t search(const Cells& cells, std::vector<std::size_t>& prefix) {
    const std::size_t depth = prefix.size();
    if (count_cells(cells) == size_) return leaf(cells, prefix);

    // Target: the first non-singleton cell.
    std::vector<std::size_t> sizes(size_, 0);
    for (std::size_t v = 0; v < size_; ++v) ++sizes[cells[v]];
    std::size_t target = 0;
    while (sizes[target] < 2) ++target;
    std::vector<std::size_t> candidates;
    for (std::size_t v = 0; v < size_; ++v) {
      if (cells[v] == target) candidates.push_back(v);
    }

    std::vector<std::size_t> explored;
    for (std::size_t v : candidates) {
      if (!explored.empty() && same_orbit(v, explored, prefix)) continue;
      explored.push_back(v);
      Cells child(size_);
      rank_by(child, [&](std::size_t u) {
        return std::pair{cells[u], u == v ? 0 : 1};
      });
      refine(child);
      prefix.push_back(v);
      const std::size_t resume = search(child, prefix);
      prefix.pop_back();
      if (resume != npos && resume < depth) return resume;
    }
    return npos;
  }

  std::size_t leaf(const Cells& cells, const std::vector<std::size_t>& prefix) {
    std::string code = encode(cells);
    if (first_.empty()) {
      first_ = best_ = std::move(code);
      first_cells_ = best_cells_ = cells;
      first_prefix_ = best_prefix_ = prefix;
      return npos;
    }
    if (code == first_) {
      record_automorphism(first_cells_, cells);
      return common_prefix(prefix, first_prefix_);
    }
    if (code == best_) {
      record_automorphism(best_cells_, cells);
      return common_prefix(prefix, best_prefix_);
    }
    if (code < best_) {
      best_ = std::move(code);
      best_cells_ = cells;
      best_prefix_ = prefix;
    }
    return npos;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  const ColoredGraph& graph_;
  std::size_t size_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<Perm> automorphisms_;
  std::string first_, best_;
  Cells first_cells_, best_cells_;
  std::vector<std::size_t> first_prefix_, best_prefix_;
  Perm best_order_;
};

std::string plain_form(const ColoredGraph& graph, Perm* order = nullptr) {
  if (graph.empty()) {
    std::string out;
    out.push_back(static_cast<char>(graph.n()));
    put_u16(out, 0);
    return out;
  }
  Canonizer canonizer(graph);
  canonizer.run();
  if (order) *order = canonizer.order();
  return canonizer.encoding();
}

}  // namespace

std::vector<std::size_t> canonical_order(const ColoredGraph& graph) {
  Perm order;
  plain_form(graph, &order);
  return order;
}

std::string canonical_form(const ColoredGraph& graph, bool mod_color_permutation) {
  if (graph.n() < 1 || graph.n() > 254) throw std::invalid_argument("dimension out of range");
  if (!mod_color_permutation) return plain_form(graph);

  // Canonical leaves all share the sorted color sequence, so compressing the
  // colors order-preservingly onto 1..m only lowers the encoding. The orbit
  // minimum is therefore reached by a bijection of the present colors onto
  // 1..m.
  const auto present = graph.colors_used();
  std::vector<Color> images(present.size());
  std::iota(images.begin(), images.end(), 1);
  std::string best;
  bool have = false;
  do {
    std::vector<Color> sigma(graph.n() + 2, 0);
    for (std::size_t i = 0; i < present.size(); ++i) sigma[present[i]] = images[i];
    std::string code = plain_form(graph.recolored(sigma));
    if (!have || code < best) {
      best = std::move(code);
      have = true;
    }
  } while (std::next_permutation(images.begin(), images.end()));
  return best;
}

ColoredGraph decode_canonical(std::string_view encoding) {
  if (encoding.size() < 3) throw std::invalid_argument("truncated canonical form");
  const int n = static_cast<unsigned char>(encoding[0]);
  const std::size_t size = get_u16(encoding, 1);
  if (encoding.size() < 3 + size || (encoding.size() - 3 - size) % 4 != 0) {
    throw std::invalid_argument("malformed canonical form");
  }
  ColoredGraph graph(n);
  for (std::size_t i = 0; i < size; ++i) {
    const Color c = static_cast<unsigned char>(encoding[3 + i]);
    const std::string id = "v" + std::to_string(i);
    if (c == 0) {
      graph.add_f(id);
    } else {
      graph.add_p(id, c);
    }
  }
  for (std::size_t at = 3 + size; at < encoding.size(); at += 4) {
    const std::size_t a = get_u16(encoding, at);
    const std::size_t b = get_u16(encoding, at + 2);
    if (a >= size || b >= size) throw std::invalid_argument("malformed canonical form");
    graph.add_edge(a, b);
  }
  return graph;
}

}  // namespace treeqi
