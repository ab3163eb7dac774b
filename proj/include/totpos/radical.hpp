#pragma once

#include "totpos/rational.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace totpos {

/// Trial division runs over divisors below this bound. Any cofactor left above
/// kTrialDivisionBound^2 cannot be certified prime and is rejected.
inline constexpr long kTrialDivisionBound = 1'000'000;

class FactorizationCapError : public std::range_error {
 public:
  using std::range_error::range_error;
};

/// Prime factorization of a positive integer. Throws FactorizationCapError past the cap.
std::map<Integer, long> factorize(Integer value);

/// A positive real prod p_i^{e_i} with primes p_i and nonzero rational exponents e_i.
/// The factor map is canonical, so equal values compare equal member-wise.
class RadicalScalar {
 public:
  using FactorMap = std::map<Integer, Rat>;

  RadicalScalar() = default;

  /// Throws std::invalid_argument unless value > 0.
  static RadicalScalar from_rational(const Rat& value);
  /// Builds from an arbitrary prime -> exponent map; zero exponents are dropped.
  /// Keys must be prime (checked).
  static RadicalScalar from_factors(FactorMap factors);

  const FactorMap& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  bool is_rational() const;
  std::optional<Rat> to_rational() const;
  double approx() const;

  RadicalScalar pow(const Rat& exponent) const;
  RadicalScalar inverse() const { return pow(Rat(-1)); }

  RadicalScalar& operator*=(const RadicalScalar& other);
  friend RadicalScalar operator*(RadicalScalar lhs, const RadicalScalar& rhs) {
    return lhs *= rhs;
  }
  friend RadicalScalar operator/(const RadicalScalar& lhs, const RadicalScalar& rhs) {
    return lhs * rhs.inverse();
  }
  friend bool operator==(const RadicalScalar&, const RadicalScalar&) = default;

  /// e.g. "2^(1/2)*3^(-1)", "1" for the empty product.
  std::string str() const;

 private:
  FactorMap factors_;
};

RadicalScalar radical_mul(const RadicalScalar& s, const RadicalScalar& t);

/// x^{1/k} for x > 0, k >= 1.
RadicalScalar rational_root(const Rat& x, long k);

/// x^e for x > 0 and rational e.
RadicalScalar rational_power(const Rat& x, const Rat& exponent);

/// scale * body with every exponent of the scale in [0, 1); the rational part lives
/// in the body. Equal values have identical (scale, body) pairs, and no body entry
/// ever needs factoring.
class ScaledMatrix {
 public:
  ScaledMatrix() = default;
  ScaledMatrix(RadicalScalar scale, RatMatrix body);
  explicit ScaledMatrix(const RatMatrix& body) : ScaledMatrix(RadicalScalar{}, body) {}

  const RadicalScalar& scale() const { return scale_; }
  const RatMatrix& body() const { return body_; }
  Eigen::Index rows() const { return body_.rows(); }
  Eigen::Index cols() const { return body_.cols(); }

  /// The exact rational matrix when the scale is rational.
  std::optional<RatMatrix> to_rational() const;

  ScaledMatrix inverse() const;

  friend ScaledMatrix operator*(const ScaledMatrix& lhs, const ScaledMatrix& rhs);
  friend bool operator==(const ScaledMatrix& lhs, const ScaledMatrix& rhs) {
    return lhs.scale_ == rhs.scale_ && lhs.body_.rows() == rhs.body_.rows() &&
           lhs.body_.cols() == rhs.body_.cols() && lhs.body_ == rhs.body_;
  }

 private:
  RadicalScalar scale_;
  RatMatrix body_;
};

}  // namespace totpos
