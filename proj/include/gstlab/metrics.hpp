#ifndef GSTLAB_METRICS_HPP
#define GSTLAB_METRICS_HPP

#include <optional>
#include <span>
#include <vector>

#include "gstlab/dw.hpp"
#include "gstlab/gst.hpp"
#include "gstlab/types.hpp"

namespace gstlab {

// A basis organized as column blocks, with optional per-column eigenvalues
// (available for GST blocks, not for DW levels).
struct BlockedBasis {
  std::vector<CMat> blocks;
  std::vector<CVec> block_eigenvalues;  // empty when unknown

  static BlockedBasis from(const GstBasis& basis);
  static BlockedBasis from(const DwBasis& basis);
  int n() const;
  int total_columns() const;
};

struct OrthogonalityPair {
  int i = 0;
  int j = 0;
  double abs_inner = 0.0;
  double eig_distance = 0.0;  // | |lambda_i| - |lambda_j| |; NaN if unknown
};

struct OrthogonalityStats {
  double mu = 0.0;  // mean |b_ij| over cross-subspace entries
  double m = 0.0;   // max |b_ij| over cross-subspace entries
  long long cross_pair_count = 0;
  int max_i = -1;
  int max_j = -1;
  std::vector<OrthogonalityPair> pairs;  // one record per ordered cross pair
};

// B = U^H U over the stacked blocks; within-block entries are excluded
// from both the mean and the max. A single-block basis reports
// mu = m = 0 with zero pairs.
OrthogonalityStats cross_orthogonality(const BlockedBasis& basis);

// || (I - U_k U_k^H) A U_k ||_F per block.
std::vector<double> invariance_residual(const BlockedBasis& basis,
                                        const Mat& a);

// max over columns u of block k of || P_k(A) u ||_2, annihilators applied
// in factored form.
std::vector<double> annihilation_residual(const GstBasis& basis,
                                          const Mat& a);

enum class VarianceMethod { Gst, Dw };

struct DimensionVariance {
  VarianceMethod method = VarianceMethod::Gst;
  std::vector<int> sizes;
  std::vector<double> expected_sizes;
  std::optional<double> value;  // empty when M or L == 1 (undefined)
};

// GST: S^2 = sum (s_k - N/M)^2 / (M-1).
DimensionVariance gst_dimension_variance(std::span<const int> sizes, int n);

// DW: mu_1 = N eps, mu_k = N (eps^(1/2^(k-1)) - eps^(1/2^(k-2))) for k >= 2;
// S^2 = sum (s_k - mu_k)^2 / (L-1). sizes[k-1] is the width of dyadic
// level k.
DimensionVariance dw_dimension_variance(std::span<const int> sizes, int n,
                                        double eps);

}  // namespace gstlab

#endif
