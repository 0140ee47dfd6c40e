#pragma once

#include <string>

#include "dpcover/counting.hpp"
#include "dpcover/cover.hpp"
#include "dpcover/gluing.hpp"
#include "dpcover/graph.hpp"

namespace dpcover {

// Graph files: {"vertices": ["w","v1",...], "edges": [["w","v1"],...]}.
// Saving sorts edges by index pair, so load(save(g)) reproduces the bytes.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);
Graph load_graph(const std::string& path);
void save_graph(const Graph& g, const std::string& path);

// Cover files: {"m": 4, "graph": {...}, "matchings": [{"edge": ["u","v"],
// "map": [2,3,4,1]}]}; map[j-1] = k pairs (u,j) with (v,k), labels 1-based,
// null for unmatched labels. Parsing validates the cover axioms and throws
// std::invalid_argument listing every violation.
std::string cover_to_json(const Cover& c);
Cover cover_from_json(const std::string& text);
Cover load_cover(const std::string& path);
void save_cover(const Cover& c, const std::string& path);

// {"count": "104", "cover": {...}, "prescribed": [{"vertex": "w",
// "label": 1}], "nodes_expanded": n}; counts are decimal strings.
std::string count_report_to_json(const CountReport& r);

// Permutation lists as arrays of 1-based images: {"fs": [[2,3,1,4]]}.
std::string perm_table_to_json(const PermTable& f);
PermTable perm_table_from_json(const std::string& text, int m);

// {"p": 2, "parts": [{"graph": "c3.json", "clique": ["v1","v2"]}, ...]};
// graph paths resolve relative to base_dir.
GluingSpec gluing_spec_from_json(const std::string& text, const std::string& base_dir);

std::string dp_result_to_json(const DpResult& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace dpcover
