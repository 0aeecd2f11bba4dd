#ifndef GSTLAB_TYPES_HPP
#define GSTLAB_TYPES_HPP

#include <Eigen/Dense>
#include <complex>

namespace gstlab {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

// y = A x for real A and complex x without promoting A.
inline CVec real_times_complex(const Mat& a, const CVec& x) {
  CVec y(a.rows());
  y.real() = a * x.real();
  y.imag() = a * x.imag();
  return y;
}

}  // namespace gstlab

#endif
