#ifndef GSTLAB_GST_HPP
#define GSTLAB_GST_HPP

#include <span>
#include <vector>

#include "gstlab/spectral.hpp"
#include "gstlab/types.hpp"

namespace gstlab {

// Eigenvalues sorted ascending by magnitude, cut into M contiguous groups
// at the M-1 largest consecutive-magnitude gaps.
struct SpectralPartition {
  CVec sorted_values;               // ascending under eigenvalue_less
  std::vector<int> group_sizes;     // M entries, sum = N
  std::vector<double> boundary_gaps;  // the M-1 chosen gap values

  int group_count() const { return static_cast<int>(group_sizes.size()); }
  int size() const { return static_cast<int>(sorted_values.size()); }
  int group_offset(int k) const;
  CVec group_eigenvalues(int k) const;
};

// Monic polynomial whose roots are a group's eigenvalues with algebraic
// multiplicity. Kept in factored form; expanded coefficients are derived.
struct AnnihilatorPolynomial {
  CVec roots;         // ascending eigenvalue order
  CVec coefficients;  // monic, ascending degree, length roots.size() + 1

  int degree() const { return static_cast<int>(roots.size()); }
};

// The assembled transform: per-group orthonormal blocks U_1..U_M from
// eigenvalue-reordered Schur factorizations, stacked as U_S.
struct GstBasis {
  Mat operator_matrix;  // the normalized operator the basis was built from
  SpectralPartition partition;
  std::vector<CMat> blocks;
  std::vector<AnnihilatorPolynomial> annihilators;
  CMat u_s;
  double condition_estimate = 0.0;

  int n() const { return static_cast<int>(u_s.rows()); }
  int group_count() const { return static_cast<int>(blocks.size()); }
};

// Per-group constant-gain filter: the minimal-degree polynomial with
// P(lambda) = gamma_k on group k's eigenvalues, with zero derivative
// conditions at repeated eigenvalues so that P(A)x = gamma_k x holds on
// the whole invariant subspace, defective or not. Applications use the
// Newton form; expanded monomial coefficients are kept for reporting.
struct GainFilter {
  std::vector<double> gains;
  CVec newton_nodes;   // Hermite sequence, repeated nodes adjacent
  CVec newton_coeffs;  // divided differences
  CVec coefficients;   // expanded monomial, ascending degree
  double condition_estimate = 0.0;

  Complex evaluate(Complex x) const;
  int degree() const { return static_cast<int>(newton_nodes.size()) - 1; }
};

// Cuts at the M-1 largest consecutive-magnitude gaps; equal gaps prefer
// the earlier position. Throws when M exceeds N or when fewer than M-1
// strictly positive gaps exist (all-equal magnitudes, the DAG-like case).
SpectralPartition partition_eigenvalues(const Spectrum& spectrum, int m);

// Iterated reordered-Schur construction: iteration k moves group k's
// eigenvalues to the leading positions (internal ascending order kept,
// remaining groups following in cyclic order) and takes the leading s_k
// columns of U as the block for group k.
GstBasis build_gst(const Mat& a_normalized, int m);

// Coefficient vector solving U_S z = x. Throws SingularBasisError when the
// basis condition estimate exceeds 1e12.
CVec gst_forward(const GstBasis& basis, const CVec& x);
CVec gst_forward(const GstBasis& basis, const Vec& x);

// x = U_S z.
CVec gst_inverse(const GstBasis& basis, const CVec& z);

AnnihilatorPolynomial annihilator(const SpectralPartition& partition, int k);

GainFilter design_gain_filter(const SpectralPartition& partition,
                              std::span<const double> gains);

// y = P(A) x by Horner matrix-vector products; P(A) is never formed.
CVec apply_filter(const Mat& a, std::span<const Complex> coeffs_ascending,
                  const CVec& x);

// y = (A - r_1 I)...(A - r_d I) x, factors applied in the given order.
CVec apply_factored(const Mat& a, std::span<const Complex> roots,
                    const CVec& x);

// y = P(A) x for a designed gain filter, evaluated in Newton form.
CVec apply_gain_filter(const Mat& a, const GainFilter& filter, const CVec& x);

}  // namespace gstlab

#endif
