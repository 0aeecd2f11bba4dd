#include "gstlab/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gstlab {

BlockedBasis BlockedBasis::from(const GstBasis& basis) {
  BlockedBasis out;
  out.blocks = basis.blocks;
  for (int k = 0; k < basis.group_count(); ++k)
    out.block_eigenvalues.push_back(basis.partition.group_eigenvalues(k));
  return out;
}

BlockedBasis BlockedBasis::from(const DwBasis& basis) {
  BlockedBasis out;
  for (const DwLevel& lvl : basis.levels)
    if (lvl.basis.cols() > 0) out.blocks.push_back(lvl.basis.cast<Complex>());
  if (basis.terminal.cols() > 0)
    out.blocks.push_back(basis.terminal.cast<Complex>());
  return out;
}

int BlockedBasis::n() const {
  return blocks.empty() ? 0 : static_cast<int>(blocks.front().rows());
}

int BlockedBasis::total_columns() const {
  int total = 0;
  for (const CMat& b : blocks) total += static_cast<int>(b.cols());
  return total;
}

OrthogonalityStats cross_orthogonality(const BlockedBasis& basis) {
  OrthogonalityStats stats;
  const int total = basis.total_columns();
  if (total == 0) return stats;

  CMat u(basis.n(), total);
  std::vector<int> block_of(total);
  std::vector<Complex> eig_of(total,
                              Complex(std::numeric_limits<double>::quiet_NaN(), 0));
  const bool have_eigs =
      basis.block_eigenvalues.size() == basis.blocks.size();
  int col = 0;
  for (size_t k = 0; k < basis.blocks.size(); ++k) {
    const CMat& b = basis.blocks[k];
    u.middleCols(col, b.cols()) = b;
    for (int c = 0; c < b.cols(); ++c) {
      block_of[col + c] = static_cast<int>(k);
      if (have_eigs) eig_of[col + c] = basis.block_eigenvalues[k][c];
    }
    col += static_cast<int>(b.cols());
  }

  const CMat gram = u.adjoint() * u;
  double sum = 0.0;
  for (int i = 0; i < total; ++i) {
    for (int j = 0; j < total; ++j) {
      if (block_of[i] == block_of[j]) continue;
      const double v = std::abs(gram(i, j));
      sum += v;
      ++stats.cross_pair_count;
      if (v > stats.m) {
        stats.m = v;
        stats.max_i = i;
        stats.max_j = j;
      }
      OrthogonalityPair pair;
      pair.i = i;
      pair.j = j;
      pair.abs_inner = v;
      pair.eig_distance =
          have_eigs ? std::abs(std::abs(eig_of[i]) - std::abs(eig_of[j]))
                    : std::numeric_limits<double>::quiet_NaN();
      stats.pairs.push_back(pair);
    }
  }
  stats.mu = stats.cross_pair_count > 0
                 ? sum / static_cast<double>(stats.cross_pair_count)
                 : 0.0;
  return stats;
}

std::vector<double> invariance_residual(const BlockedBasis& basis,
                                        const Mat& a) {
  std::vector<double> out;
  const CMat ac = a.cast<Complex>();
  for (const CMat& b : basis.blocks) {
    const CMat image = ac * b;
    out.push_back((image - b * (b.adjoint() * image)).norm());
  }
  return out;
}

std::vector<double> annihilation_residual(const GstBasis& basis,
                                          const Mat& a) {
  std::vector<double> out;
  for (int k = 0; k < basis.group_count(); ++k) {
    const CMat& block = basis.blocks[k];
    const CVec& roots = basis.annihilators[k].roots;
    double worst = 0.0;
    for (int c = 0; c < block.cols(); ++c) {
      const CVec r = apply_factored(
          a, std::span<const Complex>(roots.data(), roots.size()),
          block.col(c));
      worst = std::max(worst, r.norm());
    }
    out.push_back(worst);
  }
  return out;
}

DimensionVariance gst_dimension_variance(std::span<const int> sizes, int n) {
  DimensionVariance dv;
  dv.method = VarianceMethod::Gst;
  dv.sizes.assign(sizes.begin(), sizes.end());
  const int m = static_cast<int>(sizes.size());
  const double mean = static_cast<double>(n) / static_cast<double>(m);
  dv.expected_sizes.assign(m, mean);
  if (m <= 1) return dv;  // variance undefined
  double sum = 0.0;
  for (int s : sizes) sum += (s - mean) * (s - mean);
  dv.value = sum / static_cast<double>(m - 1);
  return dv;
}

DimensionVariance dw_dimension_variance(std::span<const int> sizes, int n,
                                        double eps) {
  if (!(eps > 0.0 && eps < 1.0))
    throw std::invalid_argument("dw_dimension_variance: eps must be in (0,1)");
  DimensionVariance dv;
  dv.method = VarianceMethod::Dw;
  dv.sizes.assign(sizes.begin(), sizes.end());
  const int levels = static_cast<int>(sizes.size());
  for (int k = 1; k <= levels; ++k) {
    const double mu =
        k == 1 ? n * eps
               : n * (std::pow(eps, 1.0 / std::pow(2.0, k - 1)) -
                      std::pow(eps, 1.0 / std::pow(2.0, k - 2)));
    dv.expected_sizes.push_back(mu);
  }
  if (levels <= 1) return dv;  // variance undefined
  double sum = 0.0;
  for (int k = 0; k < levels; ++k) {
    const double d = sizes[k] - dv.expected_sizes[k];
    sum += d * d;
  }
  dv.value = sum / static_cast<double>(levels - 1);
  return dv;
}

}  // namespace gstlab
