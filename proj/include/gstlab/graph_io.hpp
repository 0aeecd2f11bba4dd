#ifndef GSTLAB_GRAPH_IO_HPP
#define GSTLAB_GRAPH_IO_HPP

#include <iosfwd>
#include <string>

#include "gstlab/graph.hpp"

namespace gstlab {

// Edge-list text format: header line "n <count>", then one edge per line
// as "src dst [weight]" (0-indexed, weight defaults to 1).
DiGraph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const DiGraph& g);

// Matrix Market coordinate format (general, real), 1-indexed entries.
Mat read_matrix_market(std::istream& in);
void write_matrix_market(std::ostream& out, const Mat& a);

// Reads either format, keying off the "%%MatrixMarket" banner.
DiGraph read_graph_file(const std::string& path);
DiGraph graph_from_adjacency(const Mat& a);

void write_graph_file(const std::string& path, const DiGraph& g);
void write_matrix_market_file(const std::string& path, const Mat& a);

}  // namespace gstlab

#endif
