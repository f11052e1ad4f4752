#include "treeqi/classify.hpp"

#include <exception>
#include <set>
#include <stdexcept>

namespace treeqi {
namespace {

std::string brace(const std::vector<std::string>& names) {
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ',';
    out += names[i];
  }
  return out + "}";
}

std::string describe(const std::vector<Color>& sigma) {
  bool identity = true;
  std::string moves;
  for (std::size_t c = 1; c < sigma.size(); ++c) {
    if (sigma[c] != static_cast<Color>(c)) identity = false;
    if (!moves.empty()) moves += ' ';
    moves += std::to_string(c) + "->" + std::to_string(sigma[c]);
  }
  return identity ? "bisimilar via identity permutation" : "bisimilar via permutation " + moves;
}

}  // namespace

Analysis analyze(const SimplicialComplex& complex) {
  TnCheck check = check_tn(complex);
  if (!check.ok()) throw NotInTnError(*check.failure, check.detail);

  Analysis a{std::move(*check.tree), std::move(*check.coloring), {}, ColoredGraph(complex.dimension())};
  a.pieces = compute_pieces(complex, a.tree);
  label_pieces(a.pieces, a.coloring, complex.dimension());
  if (complex.simplex_count() < 2) return a;

  for (const auto& piece : a.pieces) {
    a.gamma.add_p("P" + brace(complex.names_of(piece.spine)), piece.label);
  }
  for (std::size_t s = 0; s < complex.simplex_count(); ++s) {
    const auto& shared = a.tree.faces_of_simplex[s];
    if (shared.size() < 2) continue;
    const std::size_t f = a.gamma.add_f("F" + brace(complex.names_of(complex.simplex(s))));
    for (std::size_t piece : shared) a.gamma.add_edge(f, piece);
  }
  return a;
}

ColoredGraph gamma(const SimplicialComplex& complex) {
  if (complex.simplex_count() < 2) {
    throw std::invalid_argument("a single simplex has no pieces (abelian class)");
  }
  return analyze(complex).gamma;
}

Reducibility is_reducible(const SimplicialComplex& complex, const Analysis& analysis) {
  Reducibility r;
  r.cone_witness = cone_vertices(complex);
  if (complex.simplex_count() == 1) {
    r.reducible = true;
    return r;
  }
  r.colors_used = analysis.gamma.colors_used();
  r.reducible = r.colors_used.size() < static_cast<std::size_t>(complex.dimension()) + 1;
  return r;
}

QiClass qi_class(const SimplicialComplex& complex) {
  const Analysis a = analyze(complex);
  QiClass cls;
  cls.dimension = complex.dimension();
  if (complex.simplex_count() == 1) {
    cls.variant = QiClass::Variant::Abelian;
    cls.reducible = true;
    return cls;
  }
  cls.variant = QiClass::Variant::Graph;
  cls.canonical = canonical_form(minimize(a.gamma).graph(), true);
  const Reducibility r = is_reducible(complex, a);
  cls.reducible = r.reducible;
  cls.colors_used = static_cast<int>(r.colors_used.size());
  cls.maximally_branched = is_maximally_branched(complex, a.tree);
  return cls;
}

QiCertificate compare_graphs(const ColoredGraph& a, const ColoredGraph& b, bool allow_permutation) {
  QiCertificate cert;
  if (a.n() != b.n()) {
    cert.reason = "dimensions differ (" + std::to_string(a.n()) + " vs " + std::to_string(b.n()) + ")";
    return cert;
  }
  cert.minimal_a = minimize(a).graph();
  cert.minimal_b = minimize(b).graph();
  if (allow_permutation) {
    cert.permutation = bisimilar_up_to_permutation(*cert.minimal_a, *cert.minimal_b);
    cert.equivalent = cert.permutation.has_value();
    cert.reason = cert.equivalent ? describe(*cert.permutation)
                                  : "minimal graphs differ under every color permutation";
    return cert;
  }
  cert.equivalent = bisimilar(*cert.minimal_a, *cert.minimal_b);
  if (cert.equivalent) {
    std::vector<Color> identity(static_cast<std::size_t>(a.n()) + 2);
    for (std::size_t c = 0; c < identity.size(); ++c) identity[c] = static_cast<Color>(c);
    cert.permutation = identity;
    cert.reason = describe(identity);
  } else {
    cert.reason = "minimal graphs differ";
  }
  return cert;
}

QiCertificate qi_equivalent(const SimplicialComplex& a, const SimplicialComplex& b,
                            bool allow_permutation) {
  if (a.dimension() != b.dimension()) {
    QiCertificate cert;
    cert.reason = "dimensions differ (" + std::to_string(a.dimension()) + " vs " +
                  std::to_string(b.dimension()) + ")";
    return cert;
  }
  const Analysis x = analyze(a);
  const Analysis y = analyze(b);
  const bool abelian_a = a.simplex_count() == 1;
  const bool abelian_b = b.simplex_count() == 1;
  if (abelian_a || abelian_b) {
    QiCertificate cert;
    cert.equivalent = abelian_a && abelian_b;
    cert.reason = cert.equivalent ? "both are single simplices (free abelian of rank n+1)"
                                  : "exactly one side is a single simplex";
    return cert;
  }
  return compare_graphs(x.gamma, y.gamma, allow_permutation);
}

FamilyCertificate qi_equivalent_families(const std::vector<SimplicialComplex>& a,
                                         const std::vector<SimplicialComplex>& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("families must be nonempty");
  FamilyCertificate cert;
  cert.classes_a.resize(a.size());
  cert.classes_b.resize(b.size());

  const auto total = static_cast<long>(a.size() + b.size());
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < total; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      if (k < a.size()) {
        cert.classes_a[k] = qi_class(a[k]);
      } else {
        cert.classes_b[k - a.size()] = qi_class(b[k - a.size()]);
      }
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  const std::set<QiClass> set_a(cert.classes_a.begin(), cert.classes_a.end());
  const std::set<QiClass> set_b(cert.classes_b.begin(), cert.classes_b.end());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!set_b.contains(cert.classes_a[i])) cert.unmatched_a.push_back(i);
  }
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (!set_a.contains(cert.classes_b[j])) cert.unmatched_b.push_back(j);
  }
  cert.equivalent = cert.unmatched_a.empty() && cert.unmatched_b.empty();
  cert.single_component = a.size() == 1 || b.size() == 1;
  return cert;
}

}  // namespace treeqi
