#include "gstlab/graph.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "gstlab/errors.hpp"
#include "gstlab/rng.hpp"
#include "gstlab/spectral.hpp"

namespace gstlab {

DiGraph::DiGraph(int node_count, std::vector<Edge> edges,
                 std::optional<Provenance> provenance)
    : n_(node_count), edges_(std::move(edges)), provenance_(provenance) {
  if (n_ < 1) throw std::invalid_argument("DiGraph: node count must be >= 1");
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges_) {
    if (e.src < 0 || e.src >= n_ || e.dst < 0 || e.dst >= n_)
      throw std::invalid_argument("DiGraph: edge endpoint out of range");
    if (!(e.weight > 0.0))
      throw std::invalid_argument("DiGraph: edge weight must be positive");
    if (!seen.insert({e.src, e.dst}).second)
      throw std::invalid_argument("DiGraph: duplicate edge (" +
                                  std::to_string(e.src) + "," +
                                  std::to_string(e.dst) + ")");
  }
}

std::vector<int> DiGraph::out_degrees() const {
  std::vector<int> d(n_, 0);
  for (const Edge& e : edges_) ++d[e.src];
  return d;
}

std::vector<int> DiGraph::in_degrees() const {
  std::vector<int> d(n_, 0);
  for (const Edge& e : edges_) ++d[e.dst];
  return d;
}

DiGraph erdos_renyi(int n, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("erdos_renyi: n must be >= 1");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("erdos_renyi: p must lie in [0, 1]");
  std::mt19937_64 gen(seed);
  std::vector<Edge> edges;
  // Row-major over ordered pairs, one draw per pair. uniform_unit is in
  // [0, 1), so p = 0 draws nothing and p = 1 draws every pair.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (uniform_unit(gen) < p) edges.push_back({i, j, 1.0});
    }
  }
  return DiGraph(n, std::move(edges), Provenance{seed, p});
}

Mat adjacency(const DiGraph& g) {
  Mat a = Mat::Zero(g.node_count(), g.node_count());
  for (const Edge& e : g.edges()) a(e.src, e.dst) = e.weight;
  return a;
}

Mat degree_matrix(const Mat& a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("degree_matrix: matrix must be square");
  Mat d = Mat::Zero(a.rows(), a.cols());
  d.diagonal() = a.rowwise().sum();
  return d;
}

namespace {

// Nodes reachable from start along the given adjacency lists.
int reachable_count(const std::vector<std::vector<int>>& adj, int start) {
  std::vector<char> seen(adj.size(), 0);
  std::queue<int> q;
  q.push(start);
  seen[start] = 1;
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        q.push(w);
      }
    }
  }
  return count;
}

}  // namespace

ConnectivityClass connectivity_class(const DiGraph& g) {
  const int n = g.node_count();
  std::vector<std::vector<int>> fwd(n), rev(n), und(n);
  for (const Edge& e : g.edges()) {
    fwd[e.src].push_back(e.dst);
    rev[e.dst].push_back(e.src);
    und[e.src].push_back(e.dst);
    und[e.dst].push_back(e.src);
  }

  ConnectivityClass result;
  auto out_deg = g.out_degrees();
  auto in_deg = g.in_degrees();
  for (int v = 0; v < n; ++v) {
    if (out_deg[v] == 0) result.sinks.push_back(v);
    if (in_deg[v] == 0) result.sources.push_back(v);
  }

  // A digraph is strongly connected iff every node reaches node 0 and is
  // reached from it.
  bool strong = reachable_count(fwd, 0) == n && reachable_count(rev, 0) == n;
  if (strong) {
    result.kind = Connectivity::StronglyConnected;
  } else if (reachable_count(und, 0) == n) {
    result.kind = Connectivity::WeaklyConnected;
  } else {
    result.kind = Connectivity::Disconnected;
  }
  return result;
}

bool is_dag(const DiGraph& g) {
  const int n = g.node_count();
  std::vector<std::vector<int>> fwd(n);
  std::vector<int> in_deg(n, 0);
  for (const Edge& e : g.edges()) {
    fwd[e.src].push_back(e.dst);
    ++in_deg[e.dst];
  }
  // Kahn's algorithm: a digraph is acyclic iff all nodes get peeled.
  std::queue<int> q;
  for (int v = 0; v < n; ++v)
    if (in_deg[v] == 0) q.push(v);
  int peeled = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    ++peeled;
    for (int w : fwd[v])
      if (--in_deg[w] == 0) q.push(w);
  }
  return peeled == n;
}

Mat normalize(const Mat& a, double zero_tol) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("normalize: matrix must be square");
  const double rho = eigenvalues(a).spectral_radius();
  if (rho <= zero_tol * static_cast<double>(a.rows()))
    throw ZeroSpectralRadiusError(
        "normalize: spectral radius " + std::to_string(rho) +
        " is below tolerance; operator cannot be normalized (DAG-like)");
  return a / rho;
}

}  // namespace gstlab
