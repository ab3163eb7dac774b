#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <stdexcept>
#include <string>
#include <string_view>

namespace totpos {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RatMatrix = Matrix<Rat>;
using RatVector = Vector<Rat>;
using IntMatrix = Matrix<Integer>;

/// Raised when an input is well formed but lies outside the mathematical class an
/// operation requires (not ITN, not TP, inconsistent table, ...). The CLI maps this
/// to exit code 1; every other exception is an operator error.
class MathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Parses "p/q", "-p/q" or a plain integer. Throws std::invalid_argument.
Rat parse_rat(std::string_view text);
/// Canonical "p/q" form, or "p" when the denominator is 1.
std::string to_string(const Rat& value);

RatMatrix identity(Eigen::Index n);
/// Matrix unit E_{ij} with 1-based indices.
RatMatrix unit(Eigen::Index n, Eigen::Index i, Eigen::Index j);
RatMatrix diagonal(const RatVector& d);
/// Antidiagonal matrix sum_i r_i E_{i,n+1-i}.
RatMatrix antidiagonal(const RatVector& r);

template <typename Derived>
bool is_square(const Eigen::MatrixBase<Derived>& a) {
  return a.rows() == a.cols();
}

template <typename Derived>
bool is_diagonal(const Eigen::MatrixBase<Derived>& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (i != j && a(i, j) != 0) return false;
  return true;
}

template <typename Derived>
bool is_scalar_matrix(const Eigen::MatrixBase<Derived>& a) {
  if (!is_square(a) || !is_diagonal(a)) return false;
  for (Eigen::Index i = 1; i < a.rows(); ++i)
    if (a(i, i) != a(0, 0)) return false;
  return true;
}

/// Exact inverse by Gauss-Jordan elimination. Throws MathError when singular.
RatMatrix inverse(const RatMatrix& a);

void require_square(const RatMatrix& a, const char* what);

}  // namespace totpos
