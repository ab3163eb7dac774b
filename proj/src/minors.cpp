#include "totpos/minors.hpp"

#include <numeric>
#include <string>

namespace totpos {

namespace {

void validate_set(const IndexSet& set, Eigen::Index bound, const char* name) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set[i] < 1 || set[i] > bound)
      throw std::out_of_range(std::string(name) + " index " + std::to_string(set[i]) +
                              " outside [1, " + std::to_string(bound) + "]");
    if (i > 0 && set[i] <= set[i - 1])
      throw std::invalid_argument(std::string(name) + " must be strictly increasing");
  }
}

}  // namespace

void validate(const MinorIndex& idx, Eigen::Index rows, Eigen::Index cols) {
  if (idx.alpha.empty() || idx.alpha.size() != idx.beta.size())
    throw std::invalid_argument("minor selection must be square and nonempty");
  validate_set(idx.alpha, rows, "row");
  validate_set(idx.beta, cols, "column");
}

RatMatrix submatrix(const RatMatrix& a, const MinorIndex& idx) {
  validate(idx, a.rows(), a.cols());
  const auto k = static_cast<Eigen::Index>(idx.alpha.size());
  RatMatrix sub(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) sub(i, j) = a(idx.alpha[i] - 1, idx.beta[j] - 1);
  return sub;
}

Rat minor(const RatMatrix& a, const MinorIndex& idx) { return determinant(submatrix(a, idx)); }

std::vector<IndexSet> subsets(int n, int k) {
  std::vector<IndexSet> out;
  if (k < 0 || k > n) return out;
  IndexSet current(k);
  std::iota(current.begin(), current.end(), 1);
  while (true) {
    out.push_back(current);
    int pos = k - 1;
    while (pos >= 0 && current[pos] == n - k + pos + 1) --pos;
    if (pos < 0) break;
    ++current[pos];
    for (int i = pos + 1; i < k; ++i) current[i] = current[i - 1] + 1;
  }
  return out;
}

std::vector<IndexSet> contiguous_subsets(int n, int k) {
  std::vector<IndexSet> out;
  for (int start = 1; start + k - 1 <= n; ++start) {
    IndexSet run(k);
    std::iota(run.begin(), run.end(), start);
    out.push_back(std::move(run));
  }
  return out;
}

void for_each_minor(const RatMatrix& a,
                    const std::function<bool(const MinorIndex&, const Rat&)>& visit) {
  require_square(a, "minor enumeration");
  if (a.rows() > kMinorEnumerationCap)
    throw std::invalid_argument("minor enumeration is capped at n = " +
                                std::to_string(kMinorEnumerationCap));
  const int n = static_cast<int>(a.rows());
  for (int k = 1; k <= n; ++k) {
    const auto sets = subsets(n, k);
    for (const auto& alpha : sets)
      for (const auto& beta : sets) {
        MinorIndex idx{alpha, beta};
        if (!visit(idx, minor(a, idx))) return;
      }
  }
}

CauchyBinetResult cauchy_binet_check(const RatMatrix& a, const RatMatrix& b) {
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  if (b.rows() != n || b.cols() != m)
    throw std::invalid_argument("cauchy_binet_check: B must be " + std::to_string(n) + "x" +
                                std::to_string(m));
  if (m > n) throw std::invalid_argument("cauchy_binet_check: requires m <= n");
  if (m == 0) return {true, Rat(1), Rat(1)};

  CauchyBinetResult result;
  const RatMatrix product = a * b;
  result.product_determinant = determinant(product);

  IndexSet all_m(m);
  std::iota(all_m.begin(), all_m.end(), 1);
  Rat sum(0);
  for (const auto& gamma : subsets(static_cast<int>(n), static_cast<int>(m)))
    sum += minor(a, {all_m, gamma}) * minor(b, {gamma, all_m});
  result.expansion = sum;
  result.equal = result.product_determinant == result.expansion;
  return result;
}

}  // namespace totpos
