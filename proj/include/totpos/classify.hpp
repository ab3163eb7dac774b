#pragma once

#include "totpos/minors.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace totpos {

enum class ClassLabel { TP, ITN_not_TP, TN_singular, NOT_TN };

std::string_view to_string(ClassLabel label);
ClassLabel parse_class_label(std::string_view text);

struct Witness {
  MinorIndex index;
  Rat value;
};

/// NOT_TN carries a negative minor; ITN_not_TP a zero minor; TN_singular the
/// vanishing determinant; TP carries nothing.
struct Certificate {
  ClassLabel label = ClassLabel::NOT_TN;
  std::optional<Witness> witness;
};

/// Brute force over all sum_k C(n,k)^2 minors. Square input, n <= 12.
Certificate classify_full(const RatMatrix& a);

inline bool is_tp(const RatMatrix& a) { return classify_full(a).label == ClassLabel::TP; }
inline bool is_itn(const RatMatrix& a) {
  const auto label = classify_full(a).label;
  return label == ClassLabel::TP || label == ClassLabel::ITN_not_TP;
}

/// Fekete: positivity of the minors with consecutive rows and consecutive columns.
bool is_tp_fekete(const RatMatrix& a);

/// Polynomial-time ITN test via Neville elimination.
bool is_itn_fast(const RatMatrix& a);

struct PrincipalMinorReport {
  bool positive = true;
  std::optional<MinorIndex> first_failure;
};

PrincipalMinorReport principal_minors_positive(const RatMatrix& a);

/// Q(q)_{ij} = q^{(i-j)^2}, 0 < q < 1, certified TP before return.
RatMatrix tp_approx_identity(int n, const Rat& q);

/// Number of times whitney_perturb may halve q.
inline constexpr int kPerturbHalvingCap = 64;

/// Q(q) A Q(q) with q halved from 1/2 until max |B - A| < eps; certified TP.
/// Throws MathError when A is not ITN or the halving cap is hit.
RatMatrix whitney_perturb(const RatMatrix& a, const Rat& eps);

/// Largest absolute entry of A - B.
Rat max_entry_distance(const RatMatrix& a, const RatMatrix& b);

}  // namespace totpos
