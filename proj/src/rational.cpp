#include "totpos/rational.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace totpos {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                                : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  Integer p{std::string(num)};
  Integer q{std::string(den)};
  if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  if (negative) p = -p;
  return Rat(p, q);
}

std::string to_string(const Rat& value) {
  const Integer p = numerator(value);
  const Integer q = denominator(value);
  if (q == 1) return p.str();
  return p.str() + "/" + q.str();
}

RatMatrix identity(Eigen::Index n) { return RatMatrix::Identity(n, n); }

RatMatrix unit(Eigen::Index n, Eigen::Index i, Eigen::Index j) {
  if (i < 1 || j < 1 || i > n || j > n) throw std::out_of_range("matrix unit index out of range");
  RatMatrix e = RatMatrix::Zero(n, n);
  e(i - 1, j - 1) = 1;
  return e;
}

RatMatrix diagonal(const RatVector& d) {
  RatMatrix m = RatMatrix::Zero(d.size(), d.size());
  for (Eigen::Index i = 0; i < d.size(); ++i) m(i, i) = d(i);
  return m;
}

RatMatrix antidiagonal(const RatVector& r) {
  const Eigen::Index n = r.size();
  RatMatrix m = RatMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, n - 1 - i) = r(i);
  return m;
}

RatMatrix inverse(const RatMatrix& a) {
  require_square(a, "inverse");
  const Eigen::Index n = a.rows();
  RatMatrix work = a;
  RatMatrix inv = identity(n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && work(pivot, col) == 0) ++pivot;
    if (pivot == n) throw MathError("matrix is singular");
    if (pivot != col) {
      work.row(col).swap(work.row(pivot));
      inv.row(col).swap(inv.row(pivot));
    }
    const Rat scale = 1 / work(col, col);
    work.row(col) *= scale;
    inv.row(col) *= scale;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || work(r, col) == 0) continue;
      const Rat factor = work(r, col);
      work.row(r) -= factor * work.row(col);
      inv.row(r) -= factor * inv.row(col);
    }
  }
  return inv;
}

void require_square(const RatMatrix& a, const char* what) {
  if (!is_square(a))
    throw std::invalid_argument(std::string(what) + ": matrix must be square, got " +
                                std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
}

}  // namespace totpos
