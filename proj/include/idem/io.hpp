#pragma once

#include <string>
#include <string_view>

#include "idem/algebra.hpp"
#include "idem/edges.hpp"
#include "idem/thin.hpp"

namespace idem {

/// Text format:
///
///   # comment
///   algebra no-edge
///   size 3
///   labels a b c
///   op f 2
///   0 2 2
///   1 1 2
///   2 2 2
///   end
///
/// Tables are flat, row-major, radix `size`; line breaks inside a table are free.
/// Throws ParseError with the line number.
AlgebraDescription parse_algebra_text(std::string_view text);
std::string serialize_algebra(const AlgebraDescription& d);

std::string read_file(const std::string& path);
/// Writes to a sibling temporary file, then renames it over `path`.
void write_file_atomic(const std::string& path, const std::string& content);

/// Undirected DOT of the edge graph: semilattice solid, majority dashed,
/// affine dotted, unary bold.
std::string graph_dot(const StructureGraph& g, std::string_view name);
/// Hyperedges drawn as point nodes joined to their members.
std::string hypergraph_dot(const StructureGraph& h, std::string_view name);
/// Directed DOT of thin arcs, labelled with kind and certificate.
std::string thin_dot(const ThinGraph& g, std::string_view name);

}  // namespace idem
