#ifndef GSTLAB_DW_HPP
#define GSTLAB_DW_HPP

#include <utility>
#include <vector>

#include "gstlab/types.hpp"

namespace gstlab {

// One wavelet level: the dyadic index k means the level was produced while
// compressing the operator power A^(2^(k-1)). A level may be empty when no
// eigenvalue falls in its band.
struct DwLevel {
  int index = 0;
  Mat basis;  // ambient orthonormal columns, possibly zero columns
  double range_low = 0.0;
  double range_high = 0.0;
};

// Diffusion-wavelets basis: orthogonal levels W_1..W_L plus the terminal
// scaling block V_L; column counts sum to N.
struct DwBasis {
  double epsilon = 0.0;
  int requested_levels = 0;
  std::vector<DwLevel> levels;  // trailing empty levels trimmed
  Mat terminal;
  double terminal_range_low = 0.0;
  double terminal_range_high = 1.0;

  int n() const { return static_cast<int>(terminal.rows()); }
  int achieved_levels() const { return static_cast<int>(levels.size()); }
  int nonempty_levels() const;
  int total_columns() const;
};

// Orthonormal block B such that every input column v satisfies
// ||B B^T v - v|| <= eps. Greedy column-pivoted orthogonalization: pick the
// column with the largest residual until all residuals are within eps.
Mat eps_span_basis(const Mat& columns, double eps);

// Multiscale construction: level j compresses the operator power A^(2^(j-1))
// restricted to V_{j-1}; W_j is the complement of V_j inside V_{j-1}.
// Stops when V_j reaches dimension <= 1, the level cap is hit, or the
// restricted power has converged so further levels cannot change anything.
DwBasis build_dw(const Mat& a_normalized, int max_levels, double eps);

// Theoretical eigenvalue band of level k: [0, eps] for k = 1 and
// [eps^(1/2^(k-2)), eps^(1/2^(k-1))] for k >= 2.
std::pair<double, double> dw_eigen_range(double eps, int level);

}  // namespace gstlab

#endif
