#include "treeqi/io.hpp"

#include <map>

#include "json.hpp"

namespace treeqi {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

template <typename T>
T get_field(const json& object, const char* key, const char* what) {
  if (!object.is_object() || !object.contains(key)) {
    throw ParseError(std::string(what) + ": missing \"" + key + "\"");
  }
  try {
    return object.at(key).get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string(what) + ": \"" + key + "\" has the wrong type");
  }
}

SimplicialComplex complex_from(const json& doc) {
  const int dimension = get_field<int>(doc, "dimension", "complex");
  if (!doc.contains("simplices")) throw ParseError("complex: missing \"simplices\"");
  const auto& simplices = doc.at("simplices");
  if (!simplices.is_array()) throw ParseError("complex: \"simplices\" must be an array");
  std::vector<std::vector<std::string>> out;
  for (const auto& s : simplices) {
    if (!s.is_array()) throw ParseError("complex: each simplex must be an array");
    std::vector<std::string> vertices;
    for (const auto& v : s) {
      if (!v.is_string()) throw ParseError("complex: vertex identifiers must be strings");
      vertices.push_back(v.get<std::string>());
    }
    out.push_back(std::move(vertices));
  }
  return SimplicialComplex(dimension, out);
}

ordered_json graph_json(const ColoredGraph& graph) {
  ordered_json vertices = ordered_json::array();
  for (const auto& v : graph.vertices()) {
    ordered_json item;
    item["id"] = v.id;
    item["kind"] = v.kind == VertexKind::P ? "P" : "F";
    if (v.kind == VertexKind::P) item["color"] = v.color;
    vertices.push_back(std::move(item));
  }
  ordered_json edges = ordered_json::array();
  for (auto [a, b] : graph.edges()) edges.push_back({graph.vertex(a).id, graph.vertex(b).id});
  ordered_json doc;
  doc["n"] = graph.n();
  doc["vertices"] = std::move(vertices);
  doc["edges"] = std::move(edges);
  return doc;
}

ColoredGraph graph_from(const json& doc) {
  const int n = get_field<int>(doc, "n", "graph");
  const auto& vertices = doc.contains("vertices") ? doc.at("vertices") : json();
  const auto& edges = doc.contains("edges") ? doc.at("edges") : json();
  if (!vertices.is_array()) throw ParseError("graph: \"vertices\" must be an array");
  if (!edges.is_array()) throw ParseError("graph: \"edges\" must be an array");

  ColoredGraph graph(n);
  std::map<std::string, std::size_t> index;
  for (const auto& v : vertices) {
    const auto id = get_field<std::string>(v, "id", "graph vertex");
    const auto kind = get_field<std::string>(v, "kind", "graph vertex");
    if (index.contains(id)) throw ParseError("graph: duplicate vertex id " + id);
    if (kind == "P") {
      index[id] = graph.add_p(id, get_field<int>(v, "color", "graph vertex"));
    } else if (kind == "F") {
      if (v.contains("color")) throw ParseError("graph: F-vertex " + id + " carries a color");
      index[id] = graph.add_f(id);
    } else {
      throw ParseError("graph: vertex kind must be \"P\" or \"F\"");
    }
  }
  for (const auto& e : edges) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      throw ParseError("graph: each edge must be a pair of vertex ids");
    }
    const auto a = index.find(e[0].get<std::string>());
    const auto b = index.find(e[1].get<std::string>());
    if (a == index.end() || b == index.end()) throw ParseError("graph: edge names an unknown vertex");
    graph.add_edge(a->second, b->second);
  }
  return graph;
}

std::string quoted(const std::string& id) {
  std::string out = "\"";
  for (char c : id) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

constexpr std::string_view kAlphabet =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

}  // namespace

SimplicialComplex parse_complex(std::string_view text) { return complex_from(parse_json(text)); }

std::string complex_to_json(const SimplicialComplex& complex) {
  ordered_json doc;
  doc["dimension"] = complex.dimension();
  doc["simplices"] = complex.named_simplices();
  return doc.dump();
}

std::vector<SimplicialComplex> parse_complex_list(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_array()) throw ParseError("family: expected a JSON array of complexes");
  std::vector<SimplicialComplex> out;
  for (const auto& item : doc) out.push_back(complex_from(item));
  return out;
}

ColoredGraph parse_graph(std::string_view text) { return graph_from(parse_json(text)); }

std::string graph_to_json(const ColoredGraph& graph) { return graph_json(graph).dump(); }

std::string graph_to_dot(const ColoredGraph& graph) {
  std::string out = "graph Gamma {\n";
  for (const auto& v : graph.vertices()) {
    if (v.kind == VertexKind::P) {
      out += "  " + quoted(v.id) + " [shape=circle, label=\"P" + std::to_string(v.color) + "\"];\n";
    } else {
      out += "  " + quoted(v.id) + " [shape=square, label=\"F\"];\n";
    }
  }
  for (auto [a, b] : graph.edges()) {
    out += "  " + quoted(graph.vertex(a).id) + " -- " + quoted(graph.vertex(b).id) + ";\n";
  }
  return out + "}\n";
}

std::string minimization_to_json(const Minimization& m) {
  ordered_json quotient = ordered_json::object();
  const auto& src = m.quotient.source;
  for (std::size_t v = 0; v < src.size(); ++v) {
    quotient[src.vertex(v).id] = m.graph().vertex(m.quotient.vertex_map[v]).id;
  }
  ordered_json doc;
  doc["minimal"] = graph_json(m.graph());
  doc["quotient"] = std::move(quotient);
  return doc.dump();
}

Minimization parse_minimization(std::string_view text, const ColoredGraph& source) {
  const json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("minimal") || !doc.contains("quotient")) {
    throw ParseError("minimization: expected \"minimal\" and \"quotient\"");
  }
  ColoredGraph minimal = graph_from(doc.at("minimal"));
  const auto& quotient = doc.at("quotient");
  std::vector<std::size_t> map(source.size());
  for (std::size_t v = 0; v < source.size(); ++v) {
    const auto& id = source.vertex(v).id;
    if (!quotient.contains(id) || !quotient.at(id).is_string()) {
      throw ParseError("minimization: quotient map misses " + id);
    }
    const auto image = minimal.find(quotient.at(id).get<std::string>());
    if (!image) throw ParseError("minimization: quotient map leaves the minimal graph");
    map[v] = *image;
  }
  return Minimization{WeakCoveringMap{source, std::move(minimal), std::move(map)}};
}

std::string qi_class_to_json(const QiClass& cls) {
  ordered_json doc;
  doc["dimension"] = cls.dimension;
  doc["variant"] = cls.variant == QiClass::Variant::Abelian ? "abelian" : "graph";
  doc["canonical"] = base64_encode(cls.canonical);
  doc["reducible"] = cls.reducible;
  doc["maximally_branched"] = cls.maximally_branched;
  doc["colors_used"] = cls.colors_used;
  return doc.dump();
}

QiClass parse_qi_class(std::string_view text) {
  const json doc = parse_json(text);
  QiClass cls;
  cls.dimension = get_field<int>(doc, "dimension", "class");
  const auto variant = get_field<std::string>(doc, "variant", "class");
  if (variant == "abelian") {
    cls.variant = QiClass::Variant::Abelian;
  } else if (variant == "graph") {
    cls.variant = QiClass::Variant::Graph;
  } else {
    throw ParseError("class: variant must be \"abelian\" or \"graph\"");
  }
  cls.canonical = base64_decode(get_field<std::string>(doc, "canonical", "class"));
  cls.reducible = get_field<bool>(doc, "reducible", "class");
  cls.maximally_branched = get_field<bool>(doc, "maximally_branched", "class");
  cls.colors_used = get_field<int>(doc, "colors_used", "class");
  return cls;
}

std::string census_to_json(const CensusReport& report) {
  ordered_json buckets = ordered_json::object();
  for (auto [j, count] : report.buckets) buckets[std::to_string(j)] = count;
  ordered_json doc;
  doc["n"] = report.n;
  doc["max_pieces"] = report.max_pieces;
  doc["buckets"] = std::move(buckets);
  doc["abelian"] = report.abelian_included;
  doc["total"] = report.total;
  return doc.dump();
}

CensusReport parse_census(std::string_view text) {
  const json doc = parse_json(text);
  CensusReport report;
  report.n = get_field<int>(doc, "n", "census");
  report.max_pieces = get_field<int>(doc, "max_pieces", "census");
  report.abelian_included = get_field<bool>(doc, "abelian", "census");
  report.total = get_field<int>(doc, "total", "census");
  const auto buckets = get_field<std::map<std::string, int>>(doc, "buckets", "census");
  for (const auto& [key, count] : buckets) {
    try {
      report.buckets[std::stoi(key)] = count;
    } catch (const std::exception&) {
      throw ParseError("census: bucket keys must be integers");
    }
  }
  return report;
}

std::string base64_encode(std::string_view bytes) {
  std::string out;
  out.reserve((bytes.size() + 2) / 3 * 4);
  for (std::size_t i = 0; i < bytes.size(); i += 3) {
    std::uint32_t chunk = static_cast<unsigned char>(bytes[i]) << 16;
    if (i + 1 < bytes.size()) chunk |= static_cast<unsigned char>(bytes[i + 1]) << 8;
    if (i + 2 < bytes.size()) chunk |= static_cast<unsigned char>(bytes[i + 2]);
    out += kAlphabet[(chunk >> 18) & 63];
    out += kAlphabet[(chunk >> 12) & 63];
    out += i + 1 < bytes.size() ? kAlphabet[(chunk >> 6) & 63] : '=';
    out += i + 2 < bytes.size() ? kAlphabet[chunk & 63] : '=';
  }
  return out;
}

std::string base64_decode(std::string_view text) {
  if (text.size() % 4 != 0) throw ParseError("base64: length must be a multiple of 4");
  std::string out;
  for (std::size_t i = 0; i < text.size(); i += 4) {
    std::uint32_t chunk = 0;
    int pad = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      const char c = text[i + j];
      std::uint32_t value = 0;
      if (c == '=' && i + 4 == text.size() && j >= 2) {
        ++pad;
      } else {
        const auto at = kAlphabet.find(c);
        if (at == std::string_view::npos || pad > 0) throw ParseError("base64: invalid character");
        value = static_cast<std::uint32_t>(at);
      }
      chunk = (chunk << 6) | value;
    }
    out += static_cast<char>((chunk >> 16) & 0xff);
    if (pad < 2) out += static_cast<char>((chunk >> 8) & 0xff);
    if (pad < 1) out += static_cast<char>(chunk & 0xff);
  }
  return out;
}

}  // namespace treeqi
