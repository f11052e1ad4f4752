#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "treeqi/census.hpp"
#include "treeqi/classify.hpp"
#include "treeqi/colored_graph.hpp"
#include "treeqi/complex.hpp"

namespace treeqi {

// All parsers throw ParseError. All writers emit compact JSON with a fixed key
// order followed by no trailing newline.

SimplicialComplex parse_complex(std::string_view text);
std::string complex_to_json(const SimplicialComplex& complex);

/// A JSON array of complex documents.
std::vector<SimplicialComplex> parse_complex_list(std::string_view text);

ColoredGraph parse_graph(std::string_view text);
std::string graph_to_json(const ColoredGraph& graph);
std::string graph_to_dot(const ColoredGraph& graph);

/// {"minimal": <graph>, "quotient": {<source id>: <minimal id>, ...}}
std::string minimization_to_json(const Minimization& m);
Minimization parse_minimization(std::string_view text, const ColoredGraph& source);

std::string qi_class_to_json(const QiClass& cls);
QiClass parse_qi_class(std::string_view text);

std::string census_to_json(const CensusReport& report);
CensusReport parse_census(std::string_view text);

std::string base64_encode(std::string_view bytes);
std::string base64_decode(std::string_view text);

}  // namespace treeqi
