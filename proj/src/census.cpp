#include "treeqi/census.hpp"

#include <omp.h>

#include <algorithm>
#include <ostream>
#include <set>
#include <stdexcept>

namespace treeqi {
namespace {

std::string next_id(const ColoredGraph& g) { return "v" + std::to_string(g.size()); }

std::vector<std::string> first_level(int n) {
  std::vector<std::string> level;
  for (Color c = 1; c <= n + 1; ++c) {
    ColoredGraph g(n);
    g.add_p("v0", c);
    level.push_back(canonical_form(g, false));
  }
  std::sort(level.begin(), level.end());
  return level;
}

std::vector<std::string> extension_forms(const std::string& parent) {
  std::vector<std::string> out;
  for (const auto& child : one_p_extensions(decode_canonical(parent))) {
    out.push_back(canonical_form(child, false));
  }
  return out;
}

std::vector<std::string> next_level_serial(const std::vector<std::string>& level) {
  std::set<std::string> next;
  for (const auto& parent : level) {
    for (auto& form : extension_forms(parent)) next.insert(std::move(form));
  }
  return {next.begin(), next.end()};
}

std::vector<std::string> next_level_parallel(const std::vector<std::string>& level, int jobs) {
  std::vector<std::vector<std::string>> produced(level.size());
  const auto count = static_cast<long>(level.size());
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (long i = 0; i < count; ++i) {
    produced[static_cast<std::size_t>(i)] = extension_forms(level[static_cast<std::size_t>(i)]);
  }
  std::vector<std::string> next;
  for (auto& part : produced) {
    next.insert(next.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  std::sort(next.begin(), next.end());
  next.erase(std::unique(next.begin(), next.end()), next.end());
  return next;
}

std::vector<ColoredGraph> decode_all(const std::vector<std::string>& forms) {
  std::vector<ColoredGraph> out;
  out.reserve(forms.size());
  for (const auto& form : forms) out.push_back(decode_canonical(form));
  return out;
}

void require_dimension(int n, int p_count) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (p_count < 1) throw std::invalid_argument("P-vertex count must be at least 1");
}

struct ClassKey {
  std::string canonical;
  std::size_t p_count;
  bool has_cycle;
};

ClassKey classify_tree(const std::string& form) {
  const ColoredGraph minimal = minimize(decode_canonical(form)).graph();
  return ClassKey{canonical_form(minimal, true), minimal.p_count(), !minimal.is_tree()};
}

}  // namespace

std::vector<ColoredGraph> one_p_extensions(const ColoredGraph& tree) {
  const int n = tree.n();
  std::vector<ColoredGraph> out;
  for (std::size_t v = 0; v < tree.size(); ++v) {
    if (tree.is_p(v)) {
      const Color own = tree.vertex(v).color;
      for (Color c = 1; c <= n + 1; ++c) {
        if (c == own) continue;
        ColoredGraph g = tree;
        const std::size_t f = g.add_f(next_id(g));
        const std::size_t p = g.add_p(next_id(g), c);
        g.add_edge(v, f);
        g.add_edge(f, p);
        out.push_back(std::move(g));
      }
    } else if (tree.degree(v) < static_cast<std::size_t>(n) + 1) {
      std::vector<bool> present(n + 2, false);
      for (std::size_t u : tree.neighbors(v)) present[tree.vertex(u).color] = true;
      for (Color c = 1; c <= n + 1; ++c) {
        if (present[c]) continue;
        ColoredGraph g = tree;
        const std::size_t p = g.add_p(next_id(g), c);
        g.add_edge(v, p);
        out.push_back(std::move(g));
      }
    }
  }
  return out;
}

std::vector<ColoredGraph> enumerate_gamma_trees(int n, int p_count) {
  require_dimension(n, p_count);
  auto level = first_level(n);
  for (int k = 2; k <= p_count; ++k) level = next_level_serial(level);
  return decode_all(level);
}

std::vector<ColoredGraph> enumerate_gamma_trees_parallel(int n, int p_count, int jobs) {
  require_dimension(n, p_count);
  auto level = first_level(n);
  for (int k = 2; k <= p_count; ++k) level = next_level_parallel(level, std::max(1, jobs));
  return decode_all(level);
}

CensusReport census(int n, int max_pieces, const CensusOptions& options) {
  require_dimension(n, max_pieces);
  const bool serial = options.jobs <= 1;

  CensusReport report;
  report.n = n;
  report.max_pieces = max_pieces;
  report.abelian_included = options.include_abelian;

  std::map<std::string, CensusClass> classes;
  std::vector<std::string> level;
  for (int k = 1; k <= max_pieces; ++k) {
    if (k == 1) {
      level = first_level(n);
    } else {
      level = serial ? next_level_serial(level) : next_level_parallel(level, options.jobs);
    }

    std::vector<ClassKey> keys(level.size());
    if (serial) {
      for (std::size_t i = 0; i < level.size(); ++i) keys[i] = classify_tree(level[i]);
    } else {
      const auto count = static_cast<long>(level.size());
#pragma omp parallel for schedule(dynamic) num_threads(options.jobs)
      for (long i = 0; i < count; ++i) {
        keys[static_cast<std::size_t>(i)] = classify_tree(level[static_cast<std::size_t>(i)]);
      }
    }
    for (auto& key : keys) {
      classes.try_emplace(key.canonical, CensusClass{key.canonical, key.p_count, k, key.has_cycle});
    }
    report.trees_per_k.push_back(level.size());
    if (options.log) {
      *options.log << "k=" << k << " trees=" << level.size() << " classes=" << classes.size() << '\n';
    }
  }

  for (auto& [form, cls] : classes) {
    ++report.buckets[static_cast<int>(cls.p_count)];
    report.classes.push_back(std::move(cls));
  }
  std::sort(report.classes.begin(), report.classes.end(), [](const auto& a, const auto& b) {
    return std::tie(a.p_count, a.canonical) < std::tie(b.p_count, b.canonical);
  });
  report.total = static_cast<int>(report.classes.size()) + (options.include_abelian ? 1 : 0);
  return report;
}

ColoredGraph random_gamma_tree(int n, int p_count, Rng& rng, const TreeOptions& options) {
  require_dimension(n, p_count);
  const int wanted = options.colors_used;
  if (wanted < 0 || wanted > n + 1) throw std::invalid_argument("colors_used out of range");
  if (p_count == 1 && wanted > 1) throw std::invalid_argument("one piece uses one color");
  if (p_count > 1 && wanted == 1) throw std::invalid_argument("two or more pieces use two or more colors");
  if (wanted > p_count) throw std::invalid_argument("fewer pieces than requested colors");
  if (options.maximally_branched) {
    if ((p_count - 1) % n != 0) {
      throw std::invalid_argument("maximally branched trees have 1 + n*k P-vertices");
    }
    if (p_count > 1 && wanted != 0 && wanted != n + 1) {
      throw std::invalid_argument("maximally branched trees with an F-vertex use all colors");
    }
  }

  std::vector<Color> palette(static_cast<std::size_t>(n) + 1);
  for (Color c = 1; c <= n + 1; ++c) palette[c - 1] = c;
  rng.shuffle(palette);
  if (wanted > 0) palette.resize(static_cast<std::size_t>(wanted));
  std::sort(palette.begin(), palette.end());
  const std::size_t max_degree = palette.size();

  ColoredGraph g(n);
  std::vector<std::size_t> ps{g.add_p(next_id(g), rng.pick(palette))};
  std::vector<std::size_t> fs;
  std::set<Color> used{g.vertex(ps[0]).color};

  auto add_f_with = [&](std::size_t p, Color c) {
    const std::size_t f = g.add_f(next_id(g));
    const std::size_t q = g.add_p(next_id(g), c);
    g.add_edge(p, f);
    g.add_edge(f, q);
    fs.push_back(f);
    ps.push_back(q);
    used.insert(c);
    return f;
  };

  while (ps.size() < static_cast<std::size_t>(p_count)) {
    if (options.maximally_branched) {
      const std::size_t p = rng.pick(ps);
      const Color own = g.vertex(p).color;
      bool first = true;
      std::size_t f = 0;
      for (Color c = 1; c <= n + 1; ++c) {
        if (c == own) continue;
        if (first) {
          f = add_f_with(p, c);
          first = false;
        } else {
          ps.push_back(g.add_p(next_id(g), c));
          g.add_edge(f, ps.back());
        }
      }
      continue;
    }

    std::vector<std::size_t> open;
    for (std::size_t f : fs) {
      if (g.degree(f) < max_degree) open.push_back(f);
    }
    std::vector<Color> unused;
    for (Color c : palette) {
      if (!used.contains(c)) unused.push_back(c);
    }
    const bool forced = wanted > 0 && p_count - ps.size() == unused.size();
    const bool grow = !open.empty() && rng.coin();

    if (grow) {
      const std::size_t f = rng.pick(open);
      std::vector<Color> missing;
      if (forced) {
        missing = unused;
      } else {
        std::set<Color> present;
        for (std::size_t u : g.neighbors(f)) present.insert(g.vertex(u).color);
        for (Color c : palette) {
          if (!present.contains(c)) missing.push_back(c);
        }
      }
      const Color c = rng.pick(missing);
      ps.push_back(g.add_p(next_id(g), c));
      g.add_edge(f, ps.back());
      used.insert(c);
    } else {
      const std::size_t p = rng.pick(ps);
      std::vector<Color> choices;
      for (Color c : forced ? unused : palette) {
        if (c != g.vertex(p).color) choices.push_back(c);
      }
      add_f_with(p, rng.pick(choices));
    }
  }
  return g;
}

}  // namespace treeqi
