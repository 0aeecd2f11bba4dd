#include "gstlab/graph_io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace gstlab {

namespace {

std::string format17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

DiGraph read_edge_list(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    if (n < 0) {
      std::string tag;
      if (!(ls >> tag >> n) || tag != "n" || n < 1)
        throw std::invalid_argument(
            "edge list: expected header line \"n <count>\"");
      continue;
    }
    Edge e;
    if (!(ls >> e.src >> e.dst)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw std::invalid_argument("edge list: malformed line: " + line);
    }
    if (!(ls >> e.weight)) e.weight = 1.0;
    edges.push_back(e);
  }
  if (n < 0) throw std::invalid_argument("edge list: missing header line");
  return DiGraph(n, std::move(edges));
}

void write_edge_list(std::ostream& out, const DiGraph& g) {
  out << "n " << g.node_count() << "\n";
  for (const Edge& e : g.edges())
    out << e.src << " " << e.dst << " " << format17(e.weight) << "\n";
}

Mat read_matrix_market(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw std::invalid_argument("matrix market: empty stream");
  if (line.rfind("%%MatrixMarket", 0) != 0)
    throw std::invalid_argument("matrix market: missing banner");
  {
    std::istringstream hs(line);
    std::string banner, object, fmt, field, symmetry;
    hs >> banner >> object >> fmt >> field >> symmetry;
    if (object != "matrix" || fmt != "coordinate" || field != "real" ||
        symmetry != "general")
      throw std::invalid_argument(
          "matrix market: only \"matrix coordinate real general\" supported");
  }
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '%') break;
  }
  std::istringstream ds(line);
  long rows = 0, cols = 0, nnz = 0;
  if (!(ds >> rows >> cols >> nnz) || rows < 1 || cols < 1 || nnz < 0)
    throw std::invalid_argument("matrix market: bad size line");
  Mat a = Mat::Zero(rows, cols);
  for (long k = 0; k < nnz; ++k) {
    long i = 0, j = 0;
    double v = 0;
    if (!(in >> i >> j >> v))
      throw std::invalid_argument("matrix market: truncated entry list");
    if (i < 1 || i > rows || j < 1 || j > cols)
      throw std::invalid_argument("matrix market: index out of range");
    a(i - 1, j - 1) = v;
  }
  return a;
}

void write_matrix_market(std::ostream& out, const Mat& a) {
  long nnz = 0;
  for (long j = 0; j < a.cols(); ++j)
    for (long i = 0; i < a.rows(); ++i)
      if (a(i, j) != 0.0) ++nnz;
  out << "%%MatrixMarket matrix coordinate real general\n";
  out << a.rows() << " " << a.cols() << " " << nnz << "\n";
  for (long j = 0; j < a.cols(); ++j)
    for (long i = 0; i < a.rows(); ++i)
      if (a(i, j) != 0.0)
        out << (i + 1) << " " << (j + 1) << " " << format17(a(i, j)) << "\n";
}

DiGraph graph_from_adjacency(const Mat& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("graph_from_adjacency: matrix must be square");
  std::vector<Edge> edges;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0.0) edges.push_back({i, j, a(i, j)});
  return DiGraph(static_cast<int>(a.rows()), std::move(edges));
}

DiGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  std::string first;
  std::getline(in, first);
  in.seekg(0);
  if (first.rfind("%%MatrixMarket", 0) == 0)
    return graph_from_adjacency(read_matrix_market(in));
  return read_edge_list(in);
}

void write_graph_file(const std::string& path, const DiGraph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_edge_list(out, g);
}

void write_matrix_market_file(const std::string& path, const Mat& a) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_matrix_market(out, a);
}

}  // namespace gstlab
