#include "totpos/factor.hpp"

#include <string>

namespace totpos {

namespace {

std::string label(const char* name, int j, int k) {
  return std::string(name) + "_{" + std::to_string(j) + "," + std::to_string(k) + "}";
}

// Adjacent-row elimination below the diagonal, column by column, bottom row first.
// weights(c, i-1) receives the multiplier that clears row i of column c. Returns
// false when the elimination leaves the ITN cone.
bool eliminate_below_diagonal(RatMatrix& m, RatMatrix& weights) {
  const Eigen::Index n = m.rows();
  for (Eigen::Index c = 0; c + 1 < n; ++c) {
    for (Eigen::Index i = n - 1; i > c; --i) {
      const Rat& value = m(i, c);
      if (value == 0) continue;
      const Rat& pivot = m(i - 1, c);
      if (pivot == 0) return false;
      const Rat multiplier = value / pivot;
      if (multiplier < 0) return false;
      m.row(i) -= multiplier * m.row(i - 1);
      weights(c, i - 1) = multiplier;
    }
  }
  return true;
}

}  // namespace

BidiagonalFactorization::BidiagonalFactorization(int n)
    : n_(n),
      lower_(RatMatrix::Zero(n > 0 ? n - 1 : 0, n > 0 ? n - 1 : 0)),
      upper_(RatMatrix::Zero(n > 0 ? n - 1 : 0, n > 0 ? n - 1 : 0)),
      d_(RatVector::Ones(n)) {
  if (n < 1) throw std::invalid_argument("factorization dimension must be >= 1");
}

void BidiagonalFactorization::validate() const {
  for (int j = 1; j < n_; ++j)
    for (int k = j; k < n_; ++k) {
      if (w(j, k) < 0) throw std::invalid_argument(label("w", j, k) + " is negative");
      if (w_prime(j, k + 1) < 0)
        throw std::invalid_argument(label("w'", j, k + 1) + " is negative");
    }
  for (int i = 0; i < n_; ++i)
    if (d_(i) <= 0)
      throw std::invalid_argument("d_" + std::to_string(i + 1) + " must be positive");
}

bool BidiagonalFactorization::all_positive() const {
  for (int j = 1; j < n_; ++j)
    for (int k = j; k < n_; ++k)
      if (w(j, k) <= 0 || w_prime(j, k + 1) <= 0) return false;
  for (int i = 0; i < n_; ++i)
    if (d_(i) <= 0) return false;
  return true;
}

RatMatrix to_matrix(const ElementaryBidiagonal& g) {
  if (g.k < 1 || g.k >= g.n)
    throw std::invalid_argument("elementary bidiagonal site k=" + std::to_string(g.k) +
                                " outside [1, n-1]");
  if (g.weight < 0) throw std::invalid_argument("elementary bidiagonal weight is negative");
  RatMatrix m = identity(g.n);
  if (g.kind == BidiagonalKind::lower)
    m(g.k, g.k - 1) = g.weight;
  else
    m(g.k - 1, g.k) = g.weight;
  return m;
}

RatMatrix to_matrix(const DiagonalGenerator& g) {
  for (Eigen::Index i = 0; i < g.d.size(); ++i)
    if (g.d(i) <= 0) throw std::invalid_argument("diagonal generator entry must be positive");
  return diagonal(g.d);
}

RatMatrix to_matrix(const Generator& g) {
  return std::visit([](const auto& item) { return to_matrix(item); }, g);
}

int dimension(const Generator& g) {
  return std::visit(
      [](const auto& item) -> int {
        if constexpr (std::is_same_v<std::decay_t<decltype(item)>, ElementaryBidiagonal>)
          return item.n;
        else
          return static_cast<int>(item.d.size());
      },
      g);
}

RatMatrix word_to_matrix(const GeneratorWord& word) {
  RatMatrix product = identity(word.n);
  for (const auto& item : word.items) {
    if (dimension(item) != word.n)
      throw std::invalid_argument("generator dimension does not match the word");
    product = product * to_matrix(item);
  }
  return product;
}

GeneratorWord whitney_word(const BidiagonalFactorization& f) {
  const int n = f.n();
  GeneratorWord word{n, {}};
  for (int j = 1; j <= n - 1; ++j)
    for (int k = n - 1; k >= j; --k)
      word.items.emplace_back(ElementaryBidiagonal{n, BidiagonalKind::lower, k, f.w(j, k)});
  word.items.emplace_back(DiagonalGenerator{f.d()});
  for (int j = n - 1; j >= 1; --j)
    for (int k = j; k <= n - 1; ++k)
      word.items.emplace_back(
          ElementaryBidiagonal{n, BidiagonalKind::upper, k, f.w_prime(j, k + 1)});
  return word;
}

RatMatrix synthesize(const BidiagonalFactorization& f) {
  f.validate();
  return word_to_matrix(whitney_word(f));
}

std::optional<BidiagonalFactorization> neville_factorization(const RatMatrix& a) {
  require_square(a, "neville_factorization");
  const auto n = static_cast<int>(a.rows());
  if (n == 0) return std::nullopt;
  BidiagonalFactorization f(n);

  RatMatrix lower_weights = RatMatrix::Zero(n - 1, n - 1);
  RatMatrix work = a;
  if (!eliminate_below_diagonal(work, lower_weights)) return std::nullopt;
  for (int i = 0; i < n; ++i) {
    if (work(i, i) <= 0) return std::nullopt;
    f.d()(i) = work(i, i);
  }

  // work = D U with U unit upper triangular; U^T is eliminated the same way.
  RatMatrix unit_upper_t(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) unit_upper_t(j, i) = work(i, j) / f.d()(i);
  RatMatrix upper_weights = RatMatrix::Zero(n - 1, n - 1);
  if (!eliminate_below_diagonal(unit_upper_t, upper_weights)) return std::nullopt;

  for (int j = 1; j < n; ++j)
    for (int k = j; k < n; ++k) {
      f.w(j, k) = lower_weights(j - 1, k - 1);
      f.w_prime(j, k + 1) = upper_weights(j - 1, k - 1);
    }
  return f;
}

BidiagonalFactorization factorize(const RatMatrix& a) {
  auto f = neville_factorization(a);
  if (!f) throw MathError("factorize: matrix is not invertible totally nonnegative");
  return *std::move(f);
}

LduDecomposition ldu(const RatMatrix& a) {
  const BidiagonalFactorization f = factorize(a);
  const int n = f.n();
  const GeneratorWord word = whitney_word(f);
  const auto lower_count = static_cast<std::ptrdiff_t>(n * (n - 1) / 2);
  GeneratorWord lower{n, {word.items.begin(), word.items.begin() + lower_count}};
  GeneratorWord upper{n, {word.items.begin() + lower_count + 1, word.items.end()}};
  return {word_to_matrix(lower), diagonal(f.d()), word_to_matrix(upper)};
}

BidiagonalFactorization random_factorization(int n, std::mt19937_64& rng, bool strict_tp) {
  BidiagonalFactorization f(n);
  std::uniform_int_distribution<int> numerator(strict_tp ? 1 : 0, 8);
  std::uniform_int_distribution<int> positive(1, 8);
  std::bernoulli_distribution planted_zero(0.25);
  const auto weight = [&]() -> Rat {
    const int p = numerator(rng);
    const int q = positive(rng);
    if (!strict_tp && planted_zero(rng)) return Rat(0);
    return Rat(p, q);
  };
  for (int j = 1; j < n; ++j)
    for (int k = j; k < n; ++k) {
      f.w(j, k) = weight();
      f.w_prime(j, k + 1) = weight();
    }
  for (int i = 0; i < n; ++i) {
    const int p = positive(rng);
    f.d()(i) = Rat(p, positive(rng));
  }
  return f;
}

RatMatrix random_itn(int n, std::mt19937_64& rng, bool strict_tp) {
  return synthesize(random_factorization(n, rng, strict_tp));
}

RatMatrix random_itn(int n, std::uint64_t seed, bool strict_tp) {
  std::mt19937_64 rng(seed);
  return random_itn(n, rng, strict_tp);
}

}  // namespace totpos
