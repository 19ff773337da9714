#ifndef CHROMA_GRAPH_IO_HPP
#define CHROMA_GRAPH_IO_HPP

#include <iosfwd>
#include <string>

#include "chroma/graph.hpp"

namespace chroma {

// Graph text format: "p <num_vertices>", then "e <u> <v>" lines with
// 1-indexed ids (loops as "e u u"), then optional "l <u> <label-text>".
// Label text of the form "<x>" reads back as a Constant label and a
// digit/dotted injective string as a MapString; anything else stays Plain.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
std::string graph_to_text(const Graph& g);

// Parses one label-text token as written by VertexLabel::to_string.
VertexLabel parse_label_text(const std::string& text);

} // namespace chroma

#endif
