#include "gstlab/dw.hpp"

#include <cmath>
#include <stdexcept>

namespace gstlab {

int DwBasis::nonempty_levels() const {
  int count = 0;
  for (const DwLevel& lvl : levels)
    if (lvl.basis.cols() > 0) ++count;
  return count;
}

int DwBasis::total_columns() const {
  int count = static_cast<int>(terminal.cols());
  for (const DwLevel& lvl : levels) count += static_cast<int>(lvl.basis.cols());
  return count;
}

Mat eps_span_basis(const Mat& columns, double eps) {
  if (!(eps > 0.0))
    throw std::invalid_argument("eps_span_basis: eps must be positive");
  const long n = columns.rows();
  const long m = columns.cols();
  Mat residual = columns;
  Mat basis(n, std::min(n, m));
  long k = 0;
  for (; k < basis.cols(); ++k) {
    long pivot = 0;
    double best = 0.0;
    for (long j = 0; j < m; ++j) {
      const double norm = residual.col(j).norm();
      if (norm > best) {
        best = norm;
        pivot = j;
      }
    }
    if (best <= eps) break;
    Vec q = residual.col(pivot) / best;
    // second orthogonalization pass keeps the block orthonormal when
    // residuals have become small
    for (long prev = 0; prev < k; ++prev)
      q -= basis.col(prev).dot(q) * basis.col(prev);
    const double qn = q.norm();
    if (qn <= 1e-14) break;
    q /= qn;
    basis.col(k) = q;
    residual -= q * (q.transpose() * residual);
  }
  return basis.leftCols(k);
}

std::pair<double, double> dw_eigen_range(double eps, int level) {
  if (level < 1)
    throw std::invalid_argument("dw_eigen_range: level must be >= 1");
  if (!(eps > 0.0 && eps < 1.0))
    throw std::invalid_argument("dw_eigen_range: eps must lie in (0, 1)");
  if (level == 1) return {0.0, eps};
  const double low = std::pow(eps, 1.0 / std::pow(2.0, level - 2));
  const double high = std::pow(eps, 1.0 / std::pow(2.0, level - 1));
  return {low, high};
}

DwBasis build_dw(const Mat& a_normalized, int max_levels, double eps) {
  if (a_normalized.rows() != a_normalized.cols())
    throw std::invalid_argument("build_dw: operator must be square");
  if (max_levels < 1)
    throw std::invalid_argument("build_dw: max_levels must be >= 1");
  if (!(eps > 0.0 && eps < 1.0))
    throw std::invalid_argument("build_dw: eps must lie in (0, 1)");
  const long n = a_normalized.rows();

  DwBasis out;
  out.epsilon = eps;
  out.requested_levels = max_levels;

  Mat ambient = Mat::Identity(n, n);  // basis of V_{j-1} in ambient coords
  Mat op = a_normalized;              // A^(2^(j-1)) restricted to V_{j-1}

  for (int level = 1; level <= max_levels; ++level) {
    const long d_prev = ambient.cols();
    // compress the restricted power's column space
    Mat coeff = eps_span_basis(op, eps);  // d_prev x d_j
    const long d = coeff.cols();

    // complement of span(coeff) inside V_{j-1}
    Eigen::HouseholderQR<Mat> qr(coeff);
    Mat q = qr.householderQ() * Mat::Identity(d_prev, d_prev);
    Mat w_ambient = ambient * q.rightCols(d_prev - d);

    DwLevel lvl;
    lvl.index = level;
    lvl.basis = std::move(w_ambient);
    std::tie(lvl.range_low, lvl.range_high) = dw_eigen_range(eps, level);
    out.levels.push_back(std::move(lvl));

    Mat next_ambient = ambient * coeff;
    Mat restricted = coeff.transpose() * op * coeff;
    Mat squared = restricted * restricted;  // A^(2^j) on V_j

    const bool no_compression = d == d_prev;
    const bool power_converged =
        (squared - restricted).norm() <=
        1e-14 * std::max(1.0, restricted.norm());

    ambient = std::move(next_ambient);
    out.terminal = ambient;
    if (d <= 1) break;
    // idempotent restricted power with no compression cannot produce
    // further levels (identity-like operator); stop instead of spinning
    if (no_compression && power_converged) break;
    op = std::move(squared);
  }

  while (!out.levels.empty() && out.levels.back().basis.cols() == 0)
    out.levels.pop_back();

  const int achieved = static_cast<int>(out.levels.size());
  out.terminal_range_low =
      achieved == 0 ? 0.0 : dw_eigen_range(eps, achieved).second;
  out.terminal_range_high = 1.0;
  return out;
}

}  // namespace gstlab
