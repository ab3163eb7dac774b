#include "totpos/structure.hpp"

#include "totpos/classify.hpp"
#include "totpos/factor.hpp"

#include <string>

namespace totpos {

namespace {

void require_positive_diagonal(const RatMatrix& d) {
  require_square(d, "diagonal input");
  if (!is_diagonal(d)) throw std::invalid_argument("expected a diagonal matrix");
  for (Eigen::Index i = 0; i < d.rows(); ++i)
    if (d(i, i) <= 0) throw std::invalid_argument("diagonal entries must be positive");
}

void require_same_shape(const RatMatrix& a, const RatMatrix& x) {
  require_square(a, "centralizer");
  if (x.rows() != a.rows() || x.cols() != a.cols())
    throw std::invalid_argument("centralizer: matrices must have equal dimension");
}

}  // namespace

CentralizerShape centralizer_shape(const RatMatrix& d) {
  require_positive_diagonal(d);
  CentralizerShape shape;
  for (Eigen::Index i = 0; i < d.rows(); ++i) {
    if (i > 0 && d(i, i) == d(i - 1, i - 1))
      ++shape.composition.back();
    else
      shape.composition.push_back(1);
  }
  return shape;
}

bool in_centralizer(const RatMatrix& a, const RatMatrix& x) {
  require_same_shape(a, x);
  if (RatMatrix(a * x) != RatMatrix(x * a)) return false;
  return is_itn(x);
}

bool block_membership(const RatMatrix& d, const RatMatrix& x) {
  require_positive_diagonal(d);
  require_same_shape(d, x);
  const auto shape = centralizer_shape(d);
  std::vector<int> block_of(d.rows());
  std::vector<int> starts;
  int start = 0;
  for (std::size_t b = 0; b < shape.composition.size(); ++b) {
    starts.push_back(start);
    for (int t = 0; t < shape.composition[b]; ++t) block_of[start + t] = static_cast<int>(b);
    start += shape.composition[b];
  }
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j)
      if (block_of[i] != block_of[j] && x(i, j) != 0) return false;
  for (std::size_t b = 0; b < shape.composition.size(); ++b) {
    const int size = shape.composition[b];
    if (!is_itn_fast(RatMatrix(x.block(starts[b], starts[b], size, size)))) return false;
  }
  return true;
}

RatMatrix dk_matrix(int n, int k) {
  if (n < 2 || k < 1 || k > n - 1)
    throw std::out_of_range("dk_matrix: need n >= 2 and 1 <= k <= n-1");
  RatVector entries(n);
  for (int j = 1; j <= n; ++j) entries(j - 1) = j == k + 1 ? k : j;
  return diagonal(entries);
}

bool is_dk(const RatMatrix& d, int k) {
  if (!is_square(d) || !is_diagonal(d) || k < 1 || k > d.rows() - 1) return false;
  for (Eigen::Index i = 0; i < d.rows(); ++i)
    if (d(i, i) <= 0) return false;
  for (int i = 1; i < d.rows(); ++i) {
    const bool equal = d(i - 1, i - 1) == d(i, i);
    if (equal != (i == k)) return false;
  }
  return true;
}

RatMatrix CkElement::realize() const {
  if (n < 2 || k < 1 || k > n - 1) throw std::out_of_range("C_k element: 1 <= k <= n-1");
  if (a <= 0 || b <= 0) throw std::invalid_argument("C_k element: a and b must be positive");
  if (x.rows() != 2 || x.cols() != 2 || is_diagonal(x) || !is_itn(x))
    throw std::invalid_argument("C_k element: X must be a non-diagonal 2x2 ITN matrix");
  RatMatrix m = RatMatrix::Zero(n, n);
  for (int i = 0; i < k - 1; ++i) m(i, i) = a;
  m.block(k - 1, k - 1, 2, 2) = x;
  for (int i = k + 1; i < n; ++i) m(i, i) = b;
  return m;
}

CkElement random_ck_element(int n, int k, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> positive(1, 8);
  CkElement e{n, k, 0, 0, {}};
  e.a = Rat(positive(rng), positive(rng));
  e.b = Rat(positive(rng), positive(rng));
  do {
    e.x = random_itn(2, rng, false);
  } while (is_diagonal(e.x));
  return e;
}

bool ck_commute_expected(int n, int i, int j) {
  if (n < 4) throw std::out_of_range("ck_commute_expected: requires n >= 4");
  if (i < 1 || i > n - 1 || j < 1 || j > n - 1)
    throw std::out_of_range("ck_commute_expected: indices must lie in [1, n-1]");
  return std::abs(i - j) > 1;
}

EntryWitness maximal_subgroup_witness(const RatMatrix& a) {
  require_square(a, "maximal_subgroup_witness");
  if (is_diagonal(a))
    throw MathError("maximal_subgroup_witness: diagonal input has an ITN inverse");
  if (!is_itn(a)) throw MathError("maximal_subgroup_witness: input is not ITN");
  const RatMatrix inv = inverse(a);
  for (Eigen::Index i = 0; i < inv.rows(); ++i)
    for (Eigen::Index j = 0; j < inv.cols(); ++j)
      if (inv(i, j) < 0) return {static_cast<int>(i + 1), static_cast<int>(j + 1), inv(i, j)};
  throw MathError("maximal_subgroup_witness: inverse is entrywise nonnegative");
}

bool two_by_two_conjugation_test(const RatMatrix& a) {
  if (a.rows() != 2 || a.cols() != 2)
    throw std::invalid_argument("two_by_two_conjugation_test: expected a 2x2 matrix");
  if (is_diagonal(a)) throw MathError("two_by_two_conjugation_test: input is diagonal");
  if (!is_itn(a)) throw MathError("two_by_two_conjugation_test: input is not ITN");
  return a(0, 0) == a(1, 1) && (a(0, 1) == 0 || a(1, 0) == 0);
}

}  // namespace totpos
