#ifndef GSTLAB_SPECTRAL_HPP
#define GSTLAB_SPECTRAL_HPP

#include <span>
#include <utility>
#include <vector>

#include "gstlab/types.hpp"

namespace gstlab {

enum class EigenvalueOrder { MagnitudeAscending, MagnitudeDescending };

// Total order on eigenvalues: |a| primary, ties broken by real part
// descending, then imaginary part descending. A total order keeps Schur
// orderings and partitions deterministic; conjugate pairs sort adjacently.
bool eigenvalue_less(const Complex& a, const Complex& b);

struct Spectrum {
  CVec values;

  int size() const { return static_cast<int>(values.size()); }
  double spectral_radius() const;
  // argsort under eigenvalue_less (or its reverse)
  std::vector<int> order(
      EigenvalueOrder key = EigenvalueOrder::MagnitudeAscending) const;
  CVec sorted(EigenvalueOrder key = EigenvalueOrder::MagnitudeAscending) const;
};

// Z = U T U^H with U unitary and T upper triangular carrying the
// eigenvalues on its diagonal.
struct SchurFactorization {
  CMat u;
  CMat t;

  int size() const { return static_cast<int>(t.rows()); }
  CVec diagonal() const { return t.diagonal(); }
  CMat reconstruct() const { return u * t * u.adjoint(); }
};

Spectrum eigenvalues(const CMat& a);
Spectrum eigenvalues(const Mat& a);

// Schur factorization with diag(T) sorted under the requested key.
SchurFactorization schur(
    const CMat& a, EigenvalueOrder order = EigenvalueOrder::MagnitudeAscending);
SchurFactorization schur(
    const Mat& a, EigenvalueOrder order = EigenvalueOrder::MagnitudeAscending);

// Reorders diag(T) so that position j holds the eigenvalue currently at
// position perm[j]. perm must be a permutation of 0..n-1. Implemented as a
// sequence of unitary swaps of adjacent diagonal entries, so the
// factorization residual is preserved.
SchurFactorization reorder_schur(const SchurFactorization& f,
                                 std::span<const int> perm);

// Convenience overload: target diagonal given as eigenvalue values; they
// are matched against diag(T) within a tolerance. Throws
// std::invalid_argument when the list is not a permutation of diag(T).
SchurFactorization reorder_schur(const SchurFactorization& f,
                                 const CVec& target_diagonal,
                                 double match_tol = 1e-8);

// Count of singular values > tol * sigma_max.
int numerical_rank(const Mat& m, double tol);
int numerical_rank(const CMat& m, double tol);

struct EigenvalueCluster {
  Complex representative;  // cluster mean
  int algebraic = 0;
  int geometric = 0;
};

struct DefectivenessReport {
  std::vector<EigenvalueCluster> clusters;  // ascending |representative|
  bool defective = false;
};

// Clusters the spectrum and compares geometric multiplicity
// (n - rank(A - mean*I)) against algebraic multiplicity per cluster.
// cluster_tol is the base relative clustering distance; the linkage radius
// additionally admits the floating-point scatter of multiple eigenvalues,
// which grows like (eps*scale)^(1/m) with the multiplicity m. A cluster
// whose shifted matrix shows no rank deficit at rank_tol is treated as a
// set of resolved simple eigenvalues rather than clamped to geometric
// multiplicity one.
DefectivenessReport is_defective(const Mat& a, double cluster_tol = 1e-6,
                                 double rank_tol = 1e-8);
DefectivenessReport is_defective(const CMat& a, double cluster_tol = 1e-6,
                                 double rank_tol = 1e-8);

// T = D + N with D = diag(T) and N strictly upper triangular, exact split.
std::pair<CMat, CMat> nilpotent_part(const SchurFactorization& f);

// eps_i = || T(0:i, i) ||_2, the off-span component of Z u_i relative to
// span(u_i). Column index is 0-based; eps_0 == 0 always.
double invariance_error(const SchurFactorization& f, int column);

// P(D + N) for upper-triangular D + N, exact triangular evaluation (Horner
// on D + N). The nilpotent structure caps the contribution of N at order
// min(deg P, n-1). coeffs are monomial coefficients in ascending degree.
CMat taylor_triangular_eval(std::span<const Complex> coeffs, const CMat& d,
                            const CMat& n);

// One eigenvector per eigenvalue (columns); for defective operators the
// columns are linearly dependent, which the rank experiments measure.
CMat eigenvector_matrix(const Mat& a);

}  // namespace gstlab

#endif
