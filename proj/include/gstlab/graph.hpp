#ifndef GSTLAB_GRAPH_HPP
#define GSTLAB_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "gstlab/types.hpp"

namespace gstlab {

struct Edge {
  int src = 0;
  int dst = 0;
  double weight = 1.0;
};

struct Provenance {
  std::uint64_t seed = 0;
  double edge_probability = 0.0;
};

// Weighted directed graph. Immutable after construction; construction
// validates node bounds, positive weights and duplicate (src,dst) pairs.
class DiGraph {
 public:
  DiGraph(int node_count, std::vector<Edge> edges,
          std::optional<Provenance> provenance = std::nullopt);

  int node_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::optional<Provenance>& provenance() const { return provenance_; }

  std::vector<int> out_degrees() const;
  std::vector<int> in_degrees() const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::optional<Provenance> provenance_;
};

enum class Connectivity { StronglyConnected, WeaklyConnected, Disconnected };

struct ConnectivityClass {
  Connectivity kind = Connectivity::Disconnected;
  std::vector<int> sinks;    // out-degree 0
  std::vector<int> sources;  // in-degree 0
};

// G(n, p) digraph: every ordered pair (i, j), i != j, drawn independently
// with probability p, weight 1, no self-loops. Stream order is row-major
// over ordered pairs with one uniform draw per pair, so a (n, p, seed)
// triple reproduces the same edge set on any platform.
DiGraph erdos_renyi(int n, double p, std::uint64_t seed);

// Dense adjacency: entry (i, j) = weight of edge i -> j.
Mat adjacency(const DiGraph& g);

// diag(A 1): row sums, i.e. out-degrees for a directed graph.
Mat degree_matrix(const Mat& a);

ConnectivityClass connectivity_class(const DiGraph& g);

// True iff the graph has no directed cycle (adjacency nilpotent).
bool is_dag(const DiGraph& g);

// A / rho(A) with rho the spectral radius (max eigenvalue magnitude).
// Throws ZeroSpectralRadiusError when rho <= zero_tol * n, which covers
// DAGs where this scaling is meaningless.
Mat normalize(const Mat& a, double zero_tol = 1e-10);

}  // namespace gstlab

#endif
