#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "maghom/complexes.hpp"
#include "maghom/graph.hpp"
#include "maghom/homology.hpp"
#include "maghom/series.hpp"

namespace maghom {

// Wire formats:
//   graph:   {"n": int, "edges": [[u, v], ...]}
//   complex: {"facets": [[v, ...], ...]}
//   table:   {"mode": "Z"|"Q"|"Fp", "p": int (Fp only),
//             "cells": [{"k", "l", "rank", "torsion": [int, ...]}
//                       or {"k", "l", "skipped": true}, ...]} sorted by (l, k)
// Keys are emitted sorted; cell order is fixed; identical inputs give
// byte-identical output.

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json complex_to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const nlohmann::json& j);

nlohmann::json table_to_json(const BigradedTable& t);
BigradedTable table_from_json(const nlohmann::json& j);

nlohmann::json series_to_json(const TruncatedSeries& s);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
nlohmann::json parse_json_file(const std::string& path);

} // namespace maghom
