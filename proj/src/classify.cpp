#include "totpos/classify.hpp"

#include "totpos/factor.hpp"

#include <numeric>

namespace totpos {

std::string_view to_string(ClassLabel label) {
  switch (label) {
    case ClassLabel::TP: return "TP";
    case ClassLabel::ITN_not_TP: return "ITN_not_TP";
    case ClassLabel::TN_singular: return "TN_singular";
    case ClassLabel::NOT_TN: return "NOT_TN";
  }
  return "NOT_TN";
}

ClassLabel parse_class_label(std::string_view text) {
  for (auto label : {ClassLabel::TP, ClassLabel::ITN_not_TP, ClassLabel::TN_singular,
                     ClassLabel::NOT_TN})
    if (to_string(label) == text) return label;
  throw std::invalid_argument("unknown class label '" + std::string(text) + "'");
}

Certificate classify_full(const RatMatrix& a) {
  std::optional<Witness> first_zero;
  std::optional<Witness> negative;
  for_each_minor(a, [&](const MinorIndex& idx, const Rat& value) {
    if (value < 0) {
      negative = Witness{idx, value};
      return false;
    }
    if (value == 0 && !first_zero) first_zero = Witness{idx, value};
    return true;
  });
  if (negative) return {ClassLabel::NOT_TN, negative};

  const int n = static_cast<int>(a.rows());
  if (n == 0) return {ClassLabel::TP, std::nullopt};
  IndexSet all(n);
  std::iota(all.begin(), all.end(), 1);
  const Rat det = minor(a, {all, all});
  if (det == 0) return {ClassLabel::TN_singular, Witness{{all, all}, det}};
  if (first_zero) return {ClassLabel::ITN_not_TP, first_zero};
  return {ClassLabel::TP, std::nullopt};
}

bool is_tp_fekete(const RatMatrix& a) {
  require_square(a, "is_tp_fekete");
  const int n = static_cast<int>(a.rows());
  for (int k = 1; k <= n; ++k) {
    const auto runs = contiguous_subsets(n, k);
    for (const auto& alpha : runs)
      for (const auto& beta : runs)
        if (minor(a, {alpha, beta}) <= 0) return false;
  }
  return true;
}

bool is_itn_fast(const RatMatrix& a) {
  require_square(a, "is_itn_fast");
  return neville_factorization(a).has_value();
}

PrincipalMinorReport principal_minors_positive(const RatMatrix& a) {
  require_square(a, "principal_minors_positive");
  const int n = static_cast<int>(a.rows());
  for (int k = 1; k <= n; ++k)
    for (const auto& alpha : subsets(n, k))
      if (minor(a, {alpha, alpha}) <= 0) return {false, MinorIndex{alpha, alpha}};
  return {};
}

RatMatrix tp_approx_identity(int n, const Rat& q) {
  if (n < 1) throw std::invalid_argument("tp_approx_identity: n must be >= 1");
  if (q <= 0 || q >= 1) throw std::invalid_argument("tp_approx_identity: need 0 < q < 1");
  // powers[t] = q^{t^2}
  std::vector<Rat> powers(n);
  for (int t = 0; t < n; ++t) {
    Rat p(1);
    for (int s = 0; s < t * t; ++s) p *= q;
    powers[t] = p;
  }
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = powers[std::abs(i - j)];
  if (!is_tp(m)) throw MathError("tp_approx_identity: Q(q) failed TP certification");
  return m;
}

Rat max_entry_distance(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("max_entry_distance: shape mismatch");
  Rat best(0);
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    Rat diff = a.data()[i] - b.data()[i];
    if (diff < 0) diff = -diff;
    if (diff > best) best = diff;
  }
  return best;
}

RatMatrix whitney_perturb(const RatMatrix& a, const Rat& eps) {
  require_square(a, "whitney_perturb");
  if (eps <= 0) throw std::invalid_argument("whitney_perturb: eps must be positive");
  if (!is_itn(a)) throw MathError("whitney_perturb: input is not ITN");
  const int n = static_cast<int>(a.rows());
  Rat q(1, 2);
  for (int halvings = 0; halvings <= kPerturbHalvingCap; ++halvings, q /= 2) {
    const RatMatrix kernel = tp_approx_identity(n, q);
    RatMatrix b = kernel * a * kernel;
    if (max_entry_distance(b, a) < eps) {
      if (!is_tp(b)) throw MathError("whitney_perturb: product failed TP certification");
      return b;
    }
  }
  throw MathError("whitney_perturb: halving cap exceeded");
}

}  // namespace totpos
