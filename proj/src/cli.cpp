#include "treeqi/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "treeqi/census.hpp"
#include "treeqi/classify.hpp"
#include "treeqi/io.hpp"
#include "treeqi/realize.hpp"

namespace treeqi::cli {
namespace {

using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

// Thrown for unreadable paths; maps to exit code 2.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
}

ordered_json graph_or_null(const std::optional<ColoredGraph>& g) {
  return g ? ordered_json::parse(graph_to_json(*g)) : ordered_json(nullptr);
}

ordered_json certificate_json(const QiCertificate& cert) {
  ordered_json doc;
  doc["equivalent"] = cert.equivalent;
  doc["reason"] = cert.reason;
  if (cert.permutation) {
    doc["permutation"] = std::vector<Color>(cert.permutation->begin() + 1, cert.permutation->end());
  } else {
    doc["permutation"] = nullptr;
  }
  doc["minimal_a"] = graph_or_null(cert.minimal_a);
  doc["minimal_b"] = graph_or_null(cert.minimal_b);
  return doc;
}

ordered_json classes_json(const std::vector<QiClass>& classes) {
  ordered_json out = ordered_json::array();
  for (const auto& c : classes) out.push_back(ordered_json::parse(qi_class_to_json(c)));
  return out;
}

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
  const SimplicialComplex complex = parse_complex(read_file(path));
  const TnCheck check = check_tn(complex);
  ordered_json doc;
  if (!check.ok()) {
    doc["valid"] = false;
    doc["failure"] = to_string(*check.failure);
    doc["detail"] = check.detail;
    out << doc.dump() << '\n';
    err << "invalid: " << to_string(*check.failure) << ": " << check.detail << '\n';
    return kNegative;
  }
  auto pieces = compute_pieces(complex, *check.tree);
  label_pieces(pieces, *check.coloring, complex.dimension());
  ordered_json piece_list = ordered_json::array();
  for (const auto& p : pieces) {
    ordered_json item;
    item["spine"] = complex.names_of(p.spine);
    item["members"] = p.members.size();
    item["label"] = p.label;
    piece_list.push_back(std::move(item));
  }
  doc["valid"] = true;
  doc["dimension"] = complex.dimension();
  doc["simplices"] = complex.simplex_count();
  doc["shared_faces"] = check.tree->faces.size();
  doc["tree_nodes"] = check.tree->node_count();
  doc["tree_edges"] = check.tree->edge_count();
  doc["pieces"] = std::move(piece_list);
  out << doc.dump() << '\n';
  return kOk;
}

void print_graph(const ColoredGraph& g, const std::string& format, std::ostream& out) {
  if (format == "dot") {
    out << graph_to_dot(g);
  } else {
    out << graph_to_json(g) << '\n';
  }
}

ColoredGraph read_valid_graph(const std::string& path) {
  ColoredGraph g = parse_graph(read_file(path));
  require_valid(g);
  return g;
}

int cmd_census(int n, int k, int jobs, const std::string& dump, bool abelian, std::ostream& out,
               std::ostream& err) {
  const CensusReport report = census(n, k, CensusOptions{abelian, jobs, &err});
  if (!dump.empty()) {
    std::filesystem::create_directories(dump);
    std::map<std::size_t, int> index;
    for (const auto& cls : report.classes) {
      const ColoredGraph rep = decode_canonical(cls.canonical);
      const std::string stem =
          "class_" + std::to_string(cls.p_count) + "_" + std::to_string(index[cls.p_count]++);
      write_file(std::filesystem::path(dump) / (stem + ".json"), graph_to_json(rep) + "\n");
      write_file(std::filesystem::path(dump) / (stem + ".dot"), graph_to_dot(rep));
    }
  }
  out << census_to_json(report) << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quasi-isometry classification of right-angled n-tree groups", "treeqi"};
  app.require_subcommand(1);

  std::string path_a, path_b, format = "json", dump;
  bool graphs = false, no_permutation = false, maximally_branched = false, no_abelian = false;
  int dimension = 0, max_pieces = 0, jobs = 1, pieces = 0, colors = 0;
  std::uint64_t seed = 0;
  const auto formats = CLI::IsMember({"json", "dot"});

  auto* validate = app.add_subcommand("validate", "Check tree-complex membership");
  validate->add_option("complex", path_a, "complex JSON")->required();

  auto* gamma_cmd = app.add_subcommand("gamma", "Print the labelled graph of a complex");
  gamma_cmd->add_option("complex", path_a, "complex JSON")->required();
  gamma_cmd->add_option("--format", format)->check(formats);

  auto* minimize_cmd = app.add_subcommand("minimize", "Minimal bisimilar graph and quotient map");
  minimize_cmd->add_option("graph", path_a, "graph JSON")->required();
  minimize_cmd->add_option("--format", format)->check(formats);

  auto* compare = app.add_subcommand("compare", "Decide quasi-isometry of two inputs");
  compare->add_option("a", path_a)->required();
  compare->add_option("b", path_b)->required();
  compare->add_flag("--graphs", graphs, "inputs are graph JSON");
  compare->add_flag("--no-permutation", no_permutation, "do not permute P-colors");

  auto* families = app.add_subcommand("compare-families", "Compare free products of families");
  families->add_option("a", path_a, "JSON array of complexes")->required();
  families->add_option("b", path_b, "JSON array of complexes")->required();

  auto* classify = app.add_subcommand("classify", "Print the quasi-isometry class");
  classify->add_option("complex", path_a)->required();

  auto* census_cmd = app.add_subcommand("census", "Count classes by piece number");
  census_cmd->add_option("--dimension", dimension)->required()->check(CLI::Range(1, 254));
  census_cmd->add_option("--max-pieces", max_pieces)->required()->check(CLI::PositiveNumber);
  census_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  census_cmd->add_option("--dump", dump, "directory for minimal representatives");
  census_cmd->add_flag("--no-abelian", no_abelian, "leave out the single-simplex class");

  auto* realize_cmd = app.add_subcommand("realize", "Build a complex realizing a colored tree");
  realize_cmd->add_option("graph", path_a)->required();

  auto* generate = app.add_subcommand("generate", "Random tree complex");
  generate->add_option("--dimension", dimension)->required()->check(CLI::Range(1, 254));
  generate->add_option("--pieces", pieces)->required()->check(CLI::PositiveNumber);
  generate->add_option("--seed", seed)->required();
  generate->add_flag("--maximally-branched", maximally_branched);
  generate->add_option("--colors", colors)->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("treeqi");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(path_a, out, err);

    if (gamma_cmd->parsed()) {
      const SimplicialComplex complex = parse_complex(read_file(path_a));
      if (complex.simplex_count() == 1) {
        err << "single simplex: no pieces, the class is abelian\n";
        return kNegative;
      }
      print_graph(gamma(complex), format, out);
      return kOk;
    }

    if (minimize_cmd->parsed()) {
      const Minimization m = minimize(read_valid_graph(path_a));
      if (format == "dot") {
        out << graph_to_dot(m.graph());
      } else {
        out << minimization_to_json(m) << '\n';
      }
      return kOk;
    }

    if (compare->parsed()) {
      QiCertificate cert;
      if (graphs) {
        cert = compare_graphs(read_valid_graph(path_a), read_valid_graph(path_b), !no_permutation);
      } else {
        cert = qi_equivalent(parse_complex(read_file(path_a)), parse_complex(read_file(path_b)),
                             !no_permutation);
      }
      out << certificate_json(cert).dump() << '\n';
      return cert.equivalent ? kOk : kNegative;
    }

    if (families->parsed()) {
      const FamilyCertificate cert = qi_equivalent_families(parse_complex_list(read_file(path_a)),
                                                            parse_complex_list(read_file(path_b)));
      ordered_json doc;
      doc["equivalent"] = cert.equivalent;
      doc["classes_a"] = classes_json(cert.classes_a);
      doc["classes_b"] = classes_json(cert.classes_b);
      doc["unmatched_a"] = cert.unmatched_a;
      doc["unmatched_b"] = cert.unmatched_b;
      doc["single_component"] = cert.single_component;
      out << doc.dump() << '\n';
      return cert.equivalent ? kOk : kNegative;
    }

    if (classify->parsed()) {
      out << qi_class_to_json(qi_class(parse_complex(read_file(path_a)))) << '\n';
      return kOk;
    }

    if (census_cmd->parsed()) return cmd_census(dimension, max_pieces, jobs, dump, !no_abelian, out, err);

    if (realize_cmd->parsed()) {
      const ColoredGraph g = read_valid_graph(path_a);
      out << complex_to_json(realize(g, g.n())) << '\n';
      return kOk;
    }

    if (generate->parsed()) {
      const GenerateOptions options{maximally_branched, colors};
      out << complex_to_json(generate_random(dimension, pieces, seed, options)) << '\n';
      return kOk;
    }
  } catch (const NotInTnError& e) {
    err << "invalid: " << e.what() << '\n';
    return kNegative;
  } catch (const std::invalid_argument& e) {
    err << "invalid: " << e.what() << '\n';
    return generate->parsed() ? kUsage : kNegative;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace treeqi::cli
