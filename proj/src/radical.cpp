#include "totpos/radical.hpp"

#include <cmath>
#include <sstream>

namespace totpos {

std::map<Integer, long> factorize(Integer value) {
  if (value <= 0) throw std::invalid_argument("factorize: value must be positive");
  std::map<Integer, long> out;
  const auto strip = [&](long d) {
    while (value % d == 0) {
      ++out[Integer(d)];
      value /= d;
    }
  };
  strip(2);
  long d = 3;
  for (; d < kTrialDivisionBound && Integer(d) * d <= value; d += 2) strip(d);
  if (value > 1) {
    if (Integer(d) * d <= value)
      throw FactorizationCapError("factorize: cofactor " + value.str() +
                                  " has no divisor below the trial-division bound and "
                                  "cannot be certified prime");
    ++out[value];
  }
  return out;
}

RadicalScalar RadicalScalar::from_rational(const Rat& value) {
  if (value <= 0)
    throw std::invalid_argument("radical scalars are positive, got " + to_string(value));
  RadicalScalar s;
  for (const auto& [p, e] : factorize(numerator(value))) s.factors_[p] += Rat(e);
  for (const auto& [p, e] : factorize(denominator(value))) s.factors_[p] -= Rat(e);
  return s;
}

RadicalScalar RadicalScalar::from_factors(FactorMap factors) {
  RadicalScalar s;
  for (auto& [p, e] : factors) {
    const auto pf = factorize(p);
    if (pf.size() != 1 || pf.begin()->second != 1)
      throw std::invalid_argument("radical base " + p.str() + " is not prime");
    if (e != 0) s.factors_.emplace(p, e);
  }
  return s;
}

bool RadicalScalar::is_rational() const {
  for (const auto& [p, e] : factors_)
    if (denominator(e) != 1) return false;
  return true;
}

std::optional<Rat> RadicalScalar::to_rational() const {
  if (!is_rational()) return std::nullopt;
  Integer num(1), den(1);
  for (const auto& [p, e] : factors_) {
    const long k = numerator(e).convert_to<long>();
    Integer power = boost::multiprecision::pow(p, static_cast<unsigned>(k < 0 ? -k : k));
    (k > 0 ? num : den) *= power;
  }
  return Rat(num, den);
}

double RadicalScalar::approx() const {
  double log_value = 0.0;
  for (const auto& [p, e] : factors_)
    log_value += e.convert_to<double>() * std::log(p.convert_to<double>());
  return std::exp(log_value);
}

RadicalScalar RadicalScalar::pow(const Rat& exponent) const {
  RadicalScalar s;
  if (exponent == 0) return s;
  for (const auto& [p, e] : factors_) s.factors_.emplace(p, e * exponent);
  return s;
}

RadicalScalar& RadicalScalar::operator*=(const RadicalScalar& other) {
  for (const auto& [p, e] : other.factors_) {
    auto it = factors_.find(p);
    if (it == factors_.end()) {
      factors_.emplace(p, e);
    } else {
      it->second += e;
      if (it->second == 0) factors_.erase(it);
    }
  }
  return *this;
}

std::string RadicalScalar::str() const {
  if (factors_.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, e] : factors_) {
    if (!first) out << '*';
    first = false;
    out << p.str();
    if (e != 1) out << "^(" << to_string(e) << ')';
  }
  return out.str();
}

RadicalScalar radical_mul(const RadicalScalar& s, const RadicalScalar& t) { return s * t; }

RadicalScalar rational_root(const Rat& x, long k) {
  if (k < 1) throw std::invalid_argument("rational_root: k must be >= 1");
  if (x <= 0) throw std::invalid_argument("rational_root: x must be positive");
  return RadicalScalar::from_rational(x).pow(Rat(1, k));
}

RadicalScalar rational_power(const Rat& x, const Rat& exponent) {
  if (x <= 0) throw std::invalid_argument("rational_power: x must be positive");
  return RadicalScalar::from_rational(x).pow(exponent);
}

ScaledMatrix::ScaledMatrix(RadicalScalar scale, RatMatrix body)
    : scale_(std::move(scale)), body_(std::move(body)) {
  if (body_.isZero()) {
    scale_ = RadicalScalar{};
    return;
  }
  // Integer parts of the exponents belong to the body; only the surd stays.
  Rat moved(1);
  for (const auto& [p, e] : scale_.factors()) {
    Integer whole = numerator(e) / denominator(e);
    if (e < 0 && Rat(whole) != e) whole -= 1;  // floor, not truncation
    if (whole == 0) continue;
    Rat power(1);
    for (Integer i = 0; i < abs(whole); ++i) power *= Rat(p);
    moved *= whole > 0 ? power : Rat(1) / power;
  }
  if (moved != 1) {
    body_ *= moved;
    scale_ = scale_ / RadicalScalar::from_rational(moved);
  }
}

std::optional<RatMatrix> ScaledMatrix::to_rational() const {
  const auto s = scale_.to_rational();
  if (!s) return std::nullopt;
  return RatMatrix(body_ * *s);
}

ScaledMatrix ScaledMatrix::inverse() const {
  return ScaledMatrix(scale_.inverse(), totpos::inverse(body_));
}

ScaledMatrix operator*(const ScaledMatrix& lhs, const ScaledMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) throw std::invalid_argument("scaled product shape mismatch");
  return ScaledMatrix(lhs.scale_ * rhs.scale_, RatMatrix(lhs.body_ * rhs.body_));
}

}  // namespace totpos
