#include "gstlab/gst.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "gstlab/errors.hpp"

namespace gstlab {

int SpectralPartition::group_offset(int k) const {
  if (k < 0 || k >= group_count())
    throw std::invalid_argument("SpectralPartition: group index out of range");
  int off = 0;
  for (int i = 0; i < k; ++i) off += group_sizes[i];
  return off;
}

CVec SpectralPartition::group_eigenvalues(int k) const {
  return sorted_values.segment(group_offset(k), group_sizes[k]);
}

SpectralPartition partition_eigenvalues(const Spectrum& spectrum, int m) {
  const int n = spectrum.size();
  if (m < 1) throw std::invalid_argument("partition: M must be >= 1");
  if (m > n) throw std::invalid_argument("partition: M exceeds N");
  const double max_mag = spectrum.spectral_radius();
  if (max_mag > 1.0 + 1e-6)
    throw std::invalid_argument(
        "partition: spectrum is not normalized (|lambda| > 1)");

  SpectralPartition part;
  part.sorted_values = spectrum.sorted(EigenvalueOrder::MagnitudeAscending);

  std::vector<double> gaps(n - 1);
  int positive_gaps = 0;
  for (int i = 0; i + 1 < n; ++i) {
    gaps[i] = std::abs(part.sorted_values[i + 1]) -
              std::abs(part.sorted_values[i]);
    if (gaps[i] > 0.0) ++positive_gaps;
  }
  if (positive_gaps < m - 1)
    throw std::invalid_argument(
        "partition: fewer than M-1 positive consecutive gaps "
        "(near-constant magnitudes; GST grouping is not applicable)");

  // Largest M-1 gaps; ties take the earlier (lower-magnitude) position.
  std::vector<int> gap_order(gaps.size());
  std::iota(gap_order.begin(), gap_order.end(), 0);
  std::stable_sort(gap_order.begin(), gap_order.end(),
                   [&](int a, int b) { return gaps[a] > gaps[b]; });
  std::vector<int> cuts(gap_order.begin(), gap_order.begin() + (m - 1));
  std::sort(cuts.begin(), cuts.end());

  int prev = 0;
  for (int cut : cuts) {
    part.group_sizes.push_back(cut + 1 - prev);
    part.boundary_gaps.push_back(gaps[cut]);
    prev = cut + 1;
  }
  part.group_sizes.push_back(n - prev);
  return part;
}

namespace {

// Condition estimate from the column-pivoted QR of U_S: ratio of extreme
// |R| diagonal entries.
double condition_from_qr(const Eigen::ColPivHouseholderQR<CMat>& qr) {
  const auto& r = qr.matrixR();
  const int k = static_cast<int>(std::min(r.rows(), r.cols()));
  double dmax = 0.0, dmin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < k; ++i) {
    const double d = std::abs(r(i, i));
    dmax = std::max(dmax, d);
    dmin = std::min(dmin, d);
  }
  if (dmin == 0.0) return std::numeric_limits<double>::infinity();
  return dmax / dmin;
}

}  // namespace

GstBasis build_gst(const Mat& a_normalized, int m) {
  if (a_normalized.rows() != a_normalized.cols())
    throw std::invalid_argument("build_gst: operator must be square");
  const int n = static_cast<int>(a_normalized.rows());

  // The initial factorization carries the sorted spectrum; building the
  // partition from diag(T) keeps group boundaries aligned with Schur
  // positions without re-matching eigenvalues.
  SchurFactorization fact =
      schur(a_normalized, EigenvalueOrder::MagnitudeAscending);
  Spectrum spec{fact.diagonal()};
  if (std::abs(spec.spectral_radius() - 1.0) > 1e-8)
    throw std::invalid_argument(
        "build_gst: operator is not normalized (max |lambda| != 1)");

  GstBasis basis;
  basis.operator_matrix = a_normalized;
  basis.partition = partition_eigenvalues(spec, m);
  const auto& sizes = basis.partition.group_sizes;

  // cur[pos] = sorted-spectrum position currently at Schur position pos.
  std::vector<int> cur(n);
  std::iota(cur.begin(), cur.end(), 0);

  basis.u_s.resize(n, n);
  int filled = 0;
  for (int k = 0; k < m; ++k) {
    // Iteration k wants group k first, later groups next, earlier groups
    // rotated to the back; each group keeps its internal ascending order.
    std::vector<int> target;
    target.reserve(n);
    for (int g = k; g < m; ++g) {
      const int off = basis.partition.group_offset(g);
      for (int i = 0; i < sizes[g]; ++i) target.push_back(off + i);
    }
    for (int g = 0; g < k; ++g) {
      const int off = basis.partition.group_offset(g);
      for (int i = 0; i < sizes[g]; ++i) target.push_back(off + i);
    }
    std::vector<int> perm(n);
    std::vector<int> where(n);
    for (int pos = 0; pos < n; ++pos) where[cur[pos]] = pos;
    for (int pos = 0; pos < n; ++pos) perm[pos] = where[target[pos]];
    bool identity = true;
    for (int pos = 0; pos < n; ++pos) identity = identity && perm[pos] == pos;
    if (!identity) fact = reorder_schur(fact, perm);
    cur = target;

    basis.blocks.push_back(fact.u.leftCols(sizes[k]));
    basis.annihilators.push_back(annihilator(basis.partition, k));
    basis.u_s.middleCols(filled, sizes[k]) = basis.blocks.back();
    filled += sizes[k];
  }

  Eigen::ColPivHouseholderQR<CMat> qr(basis.u_s);
  basis.condition_estimate = condition_from_qr(qr);
  return basis;
}

CVec gst_forward(const GstBasis& basis, const CVec& x) {
  if (x.size() != basis.n())
    throw std::invalid_argument("gst_forward: signal length mismatch");
  Eigen::ColPivHouseholderQR<CMat> qr(basis.u_s);
  const double cond = condition_from_qr(qr);
  if (!(cond < 1e12))
    throw SingularBasisError(
        "gst_forward: basis is numerically singular or ill-conditioned",
        cond);
  return qr.solve(x);
}

CVec gst_forward(const GstBasis& basis, const Vec& x) {
  return gst_forward(basis, CVec(x.cast<Complex>()));
}

CVec gst_inverse(const GstBasis& basis, const CVec& z) {
  if (z.size() != basis.n())
    throw std::invalid_argument("gst_inverse: coefficient length mismatch");
  return basis.u_s * z;
}

AnnihilatorPolynomial annihilator(const SpectralPartition& partition, int k) {
  AnnihilatorPolynomial p;
  p.roots = partition.group_eigenvalues(k);
  const int d = p.degree();
  // expand prod (x - r) by convolution; coefficients ascending, monic
  p.coefficients = CVec::Zero(d + 1);
  p.coefficients[0] = Complex(1, 0);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j >= 1; --j)
      p.coefficients[j] =
          (j == i + 1 ? Complex(0, 0) : p.coefficients[j]) * (-p.roots[i]) +
          p.coefficients[j - 1];
    p.coefficients[0] *= -p.roots[i];
  }
  return p;
}

Complex GainFilter::evaluate(Complex x) const {
  const int d = degree();
  Complex acc = newton_coeffs[d];
  for (int i = d - 1; i >= 0; --i)
    acc = acc * (x - newton_nodes[i]) + newton_coeffs[i];
  return acc;
}

GainFilter design_gain_filter(const SpectralPartition& partition,
                              std::span<const double> gains) {
  const int m = partition.group_count();
  if (static_cast<int>(gains.size()) != m)
    throw std::invalid_argument("design_gain_filter: need one gain per group");
  for (double g : gains)
    if (!std::isfinite(g))
      throw std::invalid_argument("design_gain_filter: gains must be finite");

  // Distinct interpolation nodes with multiplicities, per group. Repeated
  // eigenvalues within a group add derivative conditions; coincident nodes
  // across groups with different gains make the problem unsolvable.
  struct Node {
    Complex value;
    int multiplicity;
    int group;
  };
  std::vector<Node> nodes;
  for (int k = 0; k < m; ++k) {
    const CVec lam = partition.group_eigenvalues(k);
    for (int i = 0; i < lam.size(); ++i) {
      bool found = false;
      for (Node& nd : nodes) {
        const double dist = std::abs(nd.value - lam[i]);
        if (dist <= 1e-10 * (1.0 + std::abs(lam[i]))) {
          if (nd.group != k) {
            if (gains[nd.group] != gains[k])
              throw IllConditionedInterpolationError(
                  "design_gain_filter: coincident eigenvalues across groups "
                  "with conflicting gains",
                  std::numeric_limits<double>::infinity());
            found = true;  // same value demanded; merge the condition
            break;
          }
          ++nd.multiplicity;
          found = true;
          break;
        }
      }
      if (!found) nodes.push_back({lam[i], 1, k});
    }
  }
  double min_cross_distance = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < nodes.size(); ++i)
    for (size_t j = i + 1; j < nodes.size(); ++j)
      if (nodes[i].group != nodes[j].group)
        min_cross_distance = std::min(
            min_cross_distance, std::abs(nodes[i].value - nodes[j].value));

  // Leja ordering of the distinct nodes stabilizes the divided differences
  // at high degree; repeated nodes stay adjacent as Hermite requires.
  std::vector<int> order;
  {
    std::vector<char> used(nodes.size(), 0);
    int first = 0;
    for (size_t i = 1; i < nodes.size(); ++i)
      if (std::abs(nodes[i].value) > std::abs(nodes[first].value))
        first = static_cast<int>(i);
    order.push_back(first);
    used[first] = 1;
    while (order.size() < nodes.size()) {
      int best = -1;
      double best_score = -1;
      for (size_t i = 0; i < nodes.size(); ++i) {
        if (used[i]) continue;
        double score = 0;
        for (int j : order)
          score += std::log(
              std::max(std::abs(nodes[i].value - nodes[j].value), 1e-300));
        if (best < 0 || score > best_score) {
          best = static_cast<int>(i);
          best_score = score;
        }
      }
      order.push_back(best);
      used[best] = 1;
    }
  }

  // Hermite sequence and divided-difference table. Values are the group
  // gains; all imposed derivatives are zero.
  std::vector<Complex> z;
  std::vector<Complex> f;
  for (int idx : order) {
    const Node& nd = nodes[idx];
    for (int r = 0; r < nd.multiplicity; ++r) {
      z.push_back(nd.value);
      f.push_back(Complex(gains[nd.group], 0));
    }
  }
  const int len = static_cast<int>(z.size());
  std::vector<Complex> table = f;  // table[i] = f[z_i..z_{i+level}]
  std::vector<Complex> coeffs(len);
  coeffs[0] = table[0];
  for (int level = 1; level < len; ++level) {
    for (int i = 0; i + level < len; ++i) {
      const Complex dz = z[i + level] - z[i];
      if (std::abs(dz) <= 1e-14 * (1.0 + std::abs(z[i]))) {
        // repeated node: divided difference equals the imposed derivative
        // value, zero for every order >= 1
        table[i] = Complex(0, 0);
      } else {
        table[i] = (table[i + 1] - table[i]) / dz;
      }
    }
    coeffs[level] = table[0];
  }

  GainFilter filter;
  filter.gains.assign(gains.begin(), gains.end());
  filter.newton_nodes = Eigen::Map<const CVec>(z.data(), len);
  filter.newton_coeffs = Eigen::Map<const CVec>(coeffs.data(), len);

  // Expand to monomial coefficients for reporting.
  CVec mono = CVec::Zero(len);
  mono[0] = coeffs[len - 1];
  int deg = 0;
  for (int i = len - 2; i >= 0; --i) {
    // mono <- mono * (x - z_i) + coeffs[i]
    for (int j = deg + 1; j >= 1; --j)
      mono[j] = (j > deg ? Complex(0, 0) : mono[j] * (-z[i])) +
                (j - 1 <= deg ? mono[j - 1] : Complex(0, 0));
    mono[0] = mono[0] * (-z[i]) + coeffs[i];
    ++deg;
  }
  filter.coefficients = mono;

  // A-posteriori conditioning: how far the filter drifts from the target
  // gain at its own nodes, relative to the gain scale.
  double worst = 0.0;
  for (const Node& nd : nodes) {
    const double err = std::abs(filter.evaluate(nd.value) -
                                Complex(gains[nd.group], 0));
    worst = std::max(worst, err / (1.0 + std::abs(gains[nd.group])));
  }
  filter.condition_estimate =
      min_cross_distance > 0
          ? 1.0 / std::max(min_cross_distance, 1e-300)
          : std::numeric_limits<double>::infinity();
  if (worst > 1e-6)
    throw IllConditionedInterpolationError(
        "design_gain_filter: interpolation is too ill-conditioned "
        "(node residual " +
            std::to_string(worst) + ")",
        filter.condition_estimate);
  return filter;
}

CVec apply_filter(const Mat& a, std::span<const Complex> coeffs_ascending,
                  const CVec& x) {
  if (a.rows() != a.cols() || a.rows() != x.size())
    throw std::invalid_argument("apply_filter: dimension mismatch");
  if (coeffs_ascending.empty()) return CVec::Zero(x.size());
  const int d = static_cast<int>(coeffs_ascending.size()) - 1;
  CVec y = coeffs_ascending[d] * x;
  for (int k = d - 1; k >= 0; --k)
    y = real_times_complex(a, y) + coeffs_ascending[k] * x;
  return y;
}

CVec apply_factored(const Mat& a, std::span<const Complex> roots,
                    const CVec& x) {
  if (a.rows() != a.cols() || a.rows() != x.size())
    throw std::invalid_argument("apply_factored: dimension mismatch");
  CVec y = x;
  for (const Complex& r : roots) y = real_times_complex(a, y) - r * y;
  return y;
}

CVec apply_gain_filter(const Mat& a, const GainFilter& filter, const CVec& x) {
  if (a.rows() != a.cols() || a.rows() != x.size())
    throw std::invalid_argument("apply_gain_filter: dimension mismatch");
  const int d = filter.degree();
  CVec y = filter.newton_coeffs[d] * x;
  for (int i = d - 1; i >= 0; --i)
    y = real_times_complex(a, y) - filter.newton_nodes[i] * y +
        filter.newton_coeffs[i] * x;
  return y;
}

}  // namespace gstlab
