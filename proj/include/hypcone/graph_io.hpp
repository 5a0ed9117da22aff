// SPDX-License-Identifier: MIT
#ifndef HYPCONE_GRAPH_IO_HPP
#define HYPCONE_GRAPH_IO_HPP

#include <iosfwd>
#include <string>

#include "hypcone/graph.hpp"

namespace hypcone {

/** Read a graph from the JSON shape
 *  {"vertices":[{"id":int,"label":string?}],"edges":[[int,int]]}. */
Graph read_graph_json(std::istream& in);
Graph read_graph_json_file(const std::string& path);

/** Canonical JSON writer: vertices ascending by id (label omitted when
 *  empty), edges sorted as (min,max) pairs, LF line endings.  Reading the
 *  output reproduces the graph bit-exactly. */
void write_graph_json(const Graph& g, std::ostream& out);
void write_graph_json_file(const Graph& g, const std::string& path);

/** Plain edge list, one "u v" line per canonical edge.  Blank lines and
 *  lines starting with '#' are skipped on input. */
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);

/** Dispatch on filename extension: ".json" -> JSON, anything else -> edge
 *  list. */
Graph read_graph_file(const std::string& path);

} // namespace hypcone

#endif // HYPCONE_GRAPH_IO_HPP
