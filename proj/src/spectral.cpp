#include "gstlab/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "gstlab/errors.hpp"

namespace gstlab {

bool eigenvalue_less(const Complex& a, const Complex& b) {
  const double ma = std::abs(a), mb = std::abs(b);
  if (ma != mb) return ma < mb;
  if (a.real() != b.real()) return a.real() > b.real();
  return a.imag() > b.imag();
}

double Spectrum::spectral_radius() const {
  double r = 0.0;
  for (int i = 0; i < size(); ++i) r = std::max(r, std::abs(values[i]));
  return r;
}

std::vector<int> Spectrum::order(EigenvalueOrder key) const {
  std::vector<int> idx(size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    return key == EigenvalueOrder::MagnitudeAscending
               ? eigenvalue_less(values[a], values[b])
               : eigenvalue_less(values[b], values[a]);
  });
  return idx;
}

CVec Spectrum::sorted(EigenvalueOrder key) const {
  auto idx = order(key);
  CVec out(size());
  for (int i = 0; i < size(); ++i) out[i] = values[idx[i]];
  return out;
}

namespace {

Eigen::ComplexSchur<CMat> compute_schur(const CMat& a, bool with_u) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("schur/eigenvalues: matrix must be square");
  if (!a.allFinite())
    throw std::invalid_argument("schur/eigenvalues: non-finite entries");
  Eigen::ComplexSchur<CMat> cs;
  // Eigen's cap is 30 sweeps per row, the standard QR iteration budget.
  cs.compute(a, with_u);
  if (cs.info() != Eigen::Success)
    throw NonConvergenceError(
        "complex Schur QR iteration did not converge within 30*n sweeps");
  return cs;
}

// Unitary swap of adjacent diagonal entries i and i+1 of T, accumulated
// into U. Same construction as LAPACK ztrexc: a Givens rotation built from
// the eigenvector of the 2x2 block for its lower eigenvalue.
void swap_adjacent(CMat& u, CMat& t, int i) {
  const int n = static_cast<int>(t.rows());
  const Complex a = t(i, i), b = t(i, i + 1), c = t(i + 1, i + 1);
  const double scale = std::max({std::abs(b), std::abs(c - a), 1e-300});
  // Equal eigenvalues: the exchange is a no-op on the diagonal.
  if (std::abs(c - a) <= 4.0 * 2.22e-16 * (std::abs(a) + std::abs(c))) return;
  Complex x0 = b / scale, x1 = (c - a) / scale;
  const double nrm = std::sqrt(std::norm(x0) + std::norm(x1));
  x0 /= nrm;
  x1 /= nrm;
  // G = [[x0, -conj(x1)], [x1, conj(x0)]] is unitary with first column the
  // normalized eigenvector, so G^H [[a,b],[0,c]] G has diagonal (c, a).
  Eigen::Matrix2cd g;
  g << x0, -std::conj(x1), x1, std::conj(x0);
  t.block(i, i, 2, n - i) = g.adjoint() * t.block(i, i, 2, n - i);
  t.block(0, i, i + 2, 2) = t.block(0, i, i + 2, 2) * g;
  u.middleCols(i, 2) = u.middleCols(i, 2) * g;
  t(i + 1, i) = Complex(0, 0);
}

}  // namespace

Spectrum eigenvalues(const CMat& a) {
  auto cs = compute_schur(a, false);
  return Spectrum{cs.matrixT().diagonal()};
}

Spectrum eigenvalues(const Mat& a) {
  return eigenvalues(CMat(a.cast<Complex>()));
}

SchurFactorization reorder_schur(const SchurFactorization& f,
                                 std::span<const int> perm) {
  const int n = f.size();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("reorder_schur: permutation length mismatch");
  std::vector<char> hit(n, 0);
  for (int p : perm) {
    if (p < 0 || p >= n || hit[p])
      throw std::invalid_argument(
          "reorder_schur: order list is not a permutation of diag(T)");
    hit[p] = 1;
  }

  SchurFactorization out{f.u, f.t};
  // cur[pos] = index (in the input diagonal) of the eigenvalue now at pos.
  std::vector<int> cur(n);
  std::iota(cur.begin(), cur.end(), 0);
  for (int j = 0; j < n; ++j) {
    int p = j;
    while (cur[p] != perm[j]) ++p;
    for (; p > j; --p) {
      swap_adjacent(out.u, out.t, p - 1);
      std::swap(cur[p - 1], cur[p]);
    }
  }
  return out;
}

SchurFactorization reorder_schur(const SchurFactorization& f,
                                 const CVec& target_diagonal,
                                 double match_tol) {
  const int n = f.size();
  if (static_cast<int>(target_diagonal.size()) != n)
    throw std::invalid_argument("reorder_schur: target length mismatch");
  const CVec diag = f.diagonal();
  std::vector<int> perm(n, -1);
  std::vector<char> used(n, 0);
  for (int j = 0; j < n; ++j) {
    int best = -1;
    double best_dist = 0;
    for (int i = 0; i < n; ++i) {
      if (used[i]) continue;
      double dist = std::abs(diag[i] - target_diagonal[j]);
      if (best < 0 || dist < best_dist) {
        best = i;
        best_dist = dist;
      }
    }
    if (best < 0 ||
        best_dist > match_tol * (1.0 + std::abs(target_diagonal[j])))
      throw std::invalid_argument(
          "reorder_schur: order list is not a permutation of diag(T)");
    used[best] = 1;
    perm[j] = best;
  }
  return reorder_schur(f, perm);
}

SchurFactorization schur(const CMat& a, EigenvalueOrder order) {
  auto cs = compute_schur(a, true);
  SchurFactorization f{cs.matrixU(), cs.matrixT()};
  Spectrum spec{f.diagonal()};
  auto idx = spec.order(order);
  bool already = true;
  for (int i = 0; i < f.size(); ++i) already = already && idx[i] == i;
  if (already) return f;
  return reorder_schur(f, idx);
}

SchurFactorization schur(const Mat& a, EigenvalueOrder order) {
  return schur(CMat(a.cast<Complex>()), order);
}

int numerical_rank(const Mat& m, double tol) {
  if (m.size() == 0) return 0;
  if (!m.allFinite())
    throw std::invalid_argument("numerical_rank: non-finite entries");
  Eigen::BDCSVD<Mat> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv[0] <= 0.0) return 0;
  const double cut = tol * sv[0];
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv[i] > cut) ++rank;
  return rank;
}

int numerical_rank(const CMat& m, double tol) {
  if (m.size() == 0) return 0;
  if (!m.allFinite())
    throw std::invalid_argument("numerical_rank: non-finite entries");
  // Real embedding [[Re, -Im], [Im, Re]] is orthogonally equivalent to
  // diag(M, conj(M)); its singular values are those of M, doubled. BDCSVD
  // on the embedding is faster than complex Jacobi at these sizes.
  const long r = m.rows(), c = m.cols();
  Mat e(2 * r, 2 * c);
  e.topLeftCorner(r, c) = m.real();
  e.topRightCorner(r, c) = -m.imag();
  e.bottomLeftCorner(r, c) = m.imag();
  e.bottomRightCorner(r, c) = m.real();
  Eigen::BDCSVD<Mat> svd(e);
  const auto& sv = svd.singularValues();  // descending, values paired
  if (sv.size() == 0 || sv[0] <= 0.0) return 0;
  const double cut = tol * sv[0];
  int rank = 0;
  for (int i = 0; i < sv.size(); i += 2)
    if (sv[i] > cut) ++rank;
  return rank;
}

namespace {

constexpr double kMachineEps = 2.220446049250313e-16;

// Admissible linkage radius when joining a cluster that would reach size m.
// Multiple eigenvalues of multiplicity m scatter like scale * eps^(1/m)
// under rounding, so the radius must grow with the hypothesized
// multiplicity; it is capped to avoid swallowing genuinely distinct
// eigenvalues once clusters get large.
double linkage_radius(int m, double scale, double cluster_tol) {
  const int mm = std::min(m, 8);
  const double envelope =
      4.0 * scale * std::pow(kMachineEps, 1.0 / static_cast<double>(mm));
  return std::max(cluster_tol * scale, envelope);
}

}  // namespace

DefectivenessReport is_defective(const CMat& a, double cluster_tol,
                                 double rank_tol) {
  const int n = static_cast<int>(a.rows());
  const Spectrum spec = eigenvalues(a);
  const CVec lam = spec.sorted();
  const double scale = std::max(spec.spectral_radius(), 1e-30);

  // Single-linkage with a multiplicity-adaptive radius: repeatedly merge
  // the closest pair of clusters whose distance is admissible for the
  // combined size. Single-linkage distances update as the min of the
  // merged rows, so the whole pass is O(n^2) space and O(n^3) time worst
  // case with a small constant.
  std::vector<std::vector<int>> clusters(n);
  std::vector<char> alive(n, 1);
  Mat dist(n, n);
  for (int i = 0; i < n; ++i) {
    clusters[i] = {i};
    for (int j = 0; j < n; ++j) dist(i, j) = std::abs(lam[i] - lam[j]);
  }
  for (;;) {
    int best_a = -1, best_b = -1;
    double best_dist = 0;
    for (int x = 0; x < n; ++x) {
      if (!alive[x]) continue;
      for (int y = x + 1; y < n; ++y) {
        if (!alive[y]) continue;
        const double dmin = dist(x, y);
        const int m =
            static_cast<int>(clusters[x].size() + clusters[y].size());
        if (dmin <= linkage_radius(m, scale, cluster_tol) &&
            (best_a < 0 || dmin < best_dist)) {
          best_a = x;
          best_b = y;
          best_dist = dmin;
        }
      }
    }
    if (best_a < 0) break;
    auto& src = clusters[best_b];
    clusters[best_a].insert(clusters[best_a].end(), src.begin(), src.end());
    src.clear();
    alive[best_b] = 0;
    for (int k = 0; k < n; ++k) {
      if (!alive[k] || k == best_a) continue;
      const double d = std::min(dist(best_a, k), dist(best_b, k));
      dist(best_a, k) = d;
      dist(k, best_a) = d;
    }
  }

  DefectivenessReport report;
  for (int x = 0; x < n; ++x) {
    if (!alive[x]) continue;
    const auto& members = clusters[x];
    EigenvalueCluster c;
    c.algebraic = static_cast<int>(members.size());
    Complex mean(0, 0);
    for (int i : members) mean += lam[i];
    mean /= static_cast<double>(members.size());
    c.representative = mean;
    if (c.algebraic == 1) {
      c.geometric = 1;
    } else {
      CMat shifted = a;
      shifted.diagonal().array() -= mean;
      const int deficit = n - numerical_rank(shifted, rank_tol);
      // No rank deficit means the members are resolved simple eigenvalues
      // that merely clustered; treat the cluster as semisimple.
      c.geometric = deficit == 0 ? c.algebraic
                                 : std::min(std::max(deficit, 1), c.algebraic);
    }
    report.defective = report.defective || c.geometric < c.algebraic;
    report.clusters.push_back(c);
  }
  std::sort(report.clusters.begin(), report.clusters.end(),
            [](const EigenvalueCluster& x, const EigenvalueCluster& y) {
              return eigenvalue_less(x.representative, y.representative);
            });
  return report;
}

DefectivenessReport is_defective(const Mat& a, double cluster_tol,
                                 double rank_tol) {
  return is_defective(CMat(a.cast<Complex>()), cluster_tol, rank_tol);
}

std::pair<CMat, CMat> nilpotent_part(const SchurFactorization& f) {
  CMat d = CMat::Zero(f.size(), f.size());
  d.diagonal() = f.t.diagonal();
  CMat n = f.t;
  n.diagonal().setZero();
  n.triangularView<Eigen::StrictlyLower>().setZero();
  return {d, n};
}

double invariance_error(const SchurFactorization& f, int column) {
  if (column < 0 || column >= f.size())
    throw std::invalid_argument("invariance_error: column out of range");
  return f.t.col(column).head(column).norm();
}

CMat taylor_triangular_eval(std::span<const Complex> coeffs, const CMat& d,
                            const CMat& n) {
  if (d.rows() != d.cols() || n.rows() != n.cols() || d.rows() != n.rows())
    throw std::invalid_argument("taylor_triangular_eval: size mismatch");
  const int dim = static_cast<int>(d.rows());
  if (coeffs.empty()) return CMat::Zero(dim, dim);
  CMat t = d + n;
  CMat result =
      coeffs.back() * CMat::Identity(dim, dim);
  for (int k = static_cast<int>(coeffs.size()) - 2; k >= 0; --k) {
    result = (result * t).eval();
    result.diagonal().array() += coeffs[k];
    // D + N is upper triangular, so the evaluation stays in the upper
    // triangle; keep it exact there.
    result.triangularView<Eigen::StrictlyLower>().setZero();
  }
  return result;
}

CMat eigenvector_matrix(const Mat& a) {
  Eigen::ComplexEigenSolver<CMat> solver(a.cast<Complex>(), true);
  if (solver.info() != Eigen::Success)
    throw NonConvergenceError("eigenvector_matrix: eigensolver failed");
  return solver.eigenvectors();
}

}  // namespace gstlab
