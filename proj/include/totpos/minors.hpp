#pragma once

#include "totpos/rational.hpp"

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace totpos {

/// Largest dimension for which full minor enumeration is allowed.
inline constexpr Eigen::Index kMinorEnumerationCap = 12;

using IndexSet = std::vector<int>;

/// Row set alpha and column set beta of a minor A[alpha|beta]; 1-based, strictly
/// increasing, equal cardinality.
struct MinorIndex {
  IndexSet alpha;
  IndexSet beta;

  friend bool operator==(const MinorIndex&, const MinorIndex&) = default;
};

/// Throws std::invalid_argument for a non-square selection, unsorted or repeated
/// indices; std::out_of_range for indices outside the matrix.
void validate(const MinorIndex& idx, Eigen::Index rows, Eigen::Index cols);

/// Fraction-free integer elimination (Bareiss) with row pivoting.
template <typename Derived>
Integer bareiss_determinant(Eigen::MatrixBase<Derived> const& a) {
  static_assert(std::is_same_v<typename Derived::Scalar, Integer>);
  const Eigen::Index n = a.rows();
  if (n == 0) return Integer(1);
  IntMatrix m = a;
  Integer previous(1);
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return Integer(0);
      m.row(k).swap(m.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        // Exact by Sylvester's identity.
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      }
    }
    previous = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : Integer(-m(n - 1, n - 1));
}

/// Exact determinant of a rational matrix: each row is scaled to integers by the
/// lcm of its denominators, then reduced fraction-free.
template <typename Derived>
Rat determinant(Eigen::MatrixBase<Derived> const& a) {
  static_assert(std::is_same_v<typename Derived::Scalar, Rat>);
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const Eigen::Index n = a.rows();
  IntMatrix scaled(n, n);
  Integer clearing(1);
  for (Eigen::Index i = 0; i < n; ++i) {
    Integer l(1);
    for (Eigen::Index j = 0; j < n; ++j) l = lcm(l, denominator(a(i, j)));
    for (Eigen::Index j = 0; j < n; ++j)
      scaled(i, j) = numerator(a(i, j)) * (l / denominator(a(i, j)));
    clearing *= l;
  }
  return Rat(bareiss_determinant(scaled), clearing);
}

/// Submatrix A[alpha|beta].
RatMatrix submatrix(const RatMatrix& a, const MinorIndex& idx);

/// det A[alpha|beta], exact.
Rat minor(const RatMatrix& a, const MinorIndex& idx);

/// All k-subsets of {1..n} in lexicographic order.
std::vector<IndexSet> subsets(int n, int k);

/// Contiguous runs {s, s+1, ..., s+k-1} of {1..n}.
std::vector<IndexSet> contiguous_subsets(int n, int k);

/// Visits every minor of a square matrix, ordered by size, then alpha, then beta
/// (each lexicographic). Stops early when the visitor returns false.
void for_each_minor(const RatMatrix& a,
                    const std::function<bool(const MinorIndex&, const Rat&)>& visit);

struct CauchyBinetResult {
  bool equal = false;
  Rat product_determinant;  ///< det(AB)
  Rat expansion;            ///< sum over gamma of det A[[m]|gamma] det B[gamma|[m]]
};

/// Evaluates both sides of the Cauchy-Binet identity for A (m x n), B (n x m), m <= n.
CauchyBinetResult cauchy_binet_check(const RatMatrix& a, const RatMatrix& b);

}  // namespace totpos
