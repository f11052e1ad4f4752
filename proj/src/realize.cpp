#include "treeqi/realize.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "treeqi/census.hpp"
#include "treeqi/random.hpp"

namespace treeqi {
namespace {

class UnionFind {
 public:
  std::size_t make() {
    parent_.push_back(parent_.size());
    return parent_.size() - 1;
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }
  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
};

std::string padded(int value, int width) {
  std::string digits = std::to_string(value);
  return std::string(static_cast<std::size_t>(std::max(0, width - static_cast<int>(digits.size()))), '0') +
         digits;
}

}  // namespace

SimplicialComplex realize(const ColoredGraph& tree, int n, std::span<const int> extra_tips) {
  if (tree.n() != n) throw std::invalid_argument("graph dimension differs from n");
  require_valid(tree);
  if (!tree.is_tree()) throw std::invalid_argument("graph is not a tree");
  if (!extra_tips.empty() && extra_tips.size() != tree.size()) {
    throw std::invalid_argument("extra_tips must have one entry per graph vertex");
  }

  const auto slots_per_vertex = static_cast<std::size_t>(n) + 1;
  UnionFind uf;
  std::vector<Color> slot_color;
  auto make_slot = [&](Color c) {
    slot_color.push_back(c);
    return uf.make();
  };
  // Every graph vertex owns one slot per color: an F-vertex its simplex, a
  // P-vertex its spine (the slot of its own color stays unused).
  std::vector<std::size_t> base(tree.size());
  for (std::size_t v = 0; v < tree.size(); ++v) {
    base[v] = uf.size();
    for (Color c = 1; c <= n + 1; ++c) make_slot(c);
  }
  for (auto [a, b] : tree.edges()) {
    const std::size_t p = tree.is_p(a) ? a : b;
    const std::size_t f = tree.is_p(a) ? b : a;
    const Color label = tree.vertex(p).color;
    for (Color c = 1; c <= n + 1; ++c) {
      if (c != label) uf.unite(base[p] + c - 1, base[f] + c - 1);
    }
  }

  std::vector<std::vector<std::size_t>> simplices;
  for (std::size_t f = 0; f < tree.size(); ++f) {
    if (tree.is_p(f)) continue;
    std::vector<std::size_t> simplex(slots_per_vertex);
    std::iota(simplex.begin(), simplex.end(), base[f]);
    simplices.push_back(std::move(simplex));
  }
  for (std::size_t p = 0; p < tree.size(); ++p) {
    if (!tree.is_p(p)) continue;
    const Color label = tree.vertex(p).color;
    const int deficit = std::max(0, 2 - static_cast<int>(tree.degree(p)));
    const int tips = deficit + (extra_tips.empty() ? 0 : std::max(0, extra_tips[p]));
    for (int t = 0; t < tips; ++t) {
      std::vector<std::size_t> simplex;
      for (Color c = 1; c <= n + 1; ++c) {
        if (c != label) simplex.push_back(base[p] + c - 1);
      }
      simplex.push_back(make_slot(label));
      simplices.push_back(std::move(simplex));
    }
  }

  const int width = static_cast<int>(std::to_string(n + 1).size());
  std::vector<std::string> names(uf.size());
  std::size_t next = 0;
  std::vector<std::vector<std::string>> named;
  named.reserve(simplices.size());
  for (const auto& simplex : simplices) {
    std::vector<std::string> vertices;
    for (std::size_t slot : simplex) {
      const std::size_t root = uf.find(slot);
      if (names[root].empty()) {
        names[root] = "c" + padded(slot_color[slot], width) + "_" + std::to_string(next++);
      }
      vertices.push_back(names[root]);
    }
    named.push_back(std::move(vertices));
  }
  return SimplicialComplex(n, named);
}

SimplicialComplex generate_random(int n, int pieces, std::uint64_t seed,
                                  const GenerateOptions& options) {
  Rng rng(seed);
  const ColoredGraph tree =
      random_gamma_tree(n, pieces, rng, TreeOptions{options.maximally_branched, options.colors_used});
  std::vector<int> extra(tree.size(), 0);
  for (std::size_t v = 0; v < tree.size(); ++v) {
    if (tree.is_p(v)) extra[v] = static_cast<int>(rng.below(3));
  }
  return realize(tree, n, extra);
}

}  // namespace treeqi
