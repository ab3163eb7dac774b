#pragma once

#include "totpos/rational.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace totpos {

/// Parameters (w, w', d) of the Whitney bidiagonal factorization
///
///   A = prod_{j=1}^{n-1} prod_{k=n-1}^{j} (I + w_{j,k} E_{k+1,k})
///       * diag(d)
///       * prod_{j=n-1}^{1} prod_{k=j}^{n-1} (I + w'_{j,k+1} E_{k,k+1})
///
/// The upper block is the transpose of the lower block read backwards, so
/// factorize(A^T) swaps w and w'. Indices are 1-based with 1 <= j <= k <= n-1.
class BidiagonalFactorization {
 public:
  BidiagonalFactorization() = default;
  /// All weights zero, d = (1, ..., 1).
  explicit BidiagonalFactorization(int n);

  int n() const { return n_; }

  const Rat& w(int j, int k) const { return lower_(j - 1, k - 1); }
  Rat& w(int j, int k) { return lower_(j - 1, k - 1); }
  /// w'_{j,k+1}; pass k+1 as the second index, matching the subscript.
  const Rat& w_prime(int j, int k_plus_1) const { return upper_(j - 1, k_plus_1 - 2); }
  Rat& w_prime(int j, int k_plus_1) { return upper_(j - 1, k_plus_1 - 2); }
  const RatVector& d() const { return d_; }
  RatVector& d() { return d_; }

  /// Weights nonnegative and d positive. Throws std::invalid_argument naming the
  /// offending parameter.
  void validate() const;
  /// Every w, w' and d entry strictly positive.
  bool all_positive() const;

  friend bool operator==(const BidiagonalFactorization& a, const BidiagonalFactorization& b) {
    return a.n_ == b.n_ && a.lower_ == b.lower_ && a.upper_ == b.upper_ && a.d_ == b.d_;
  }

 private:
  int n_ = 0;
  RatMatrix lower_;  // (j-1, k-1), upper triangle used
  RatMatrix upper_;  // (j-1, k-1) for w'_{j,k+1}
  RatVector d_;
};

enum class BidiagonalKind { lower, upper };

/// I + weight * E_{k+1,k} (lower) or I + weight * E_{k,k+1} (upper), 1 <= k <= n-1.
struct ElementaryBidiagonal {
  int n = 0;
  BidiagonalKind kind = BidiagonalKind::lower;
  int k = 1;
  Rat weight;

  friend bool operator==(const ElementaryBidiagonal&, const ElementaryBidiagonal&) = default;
};

/// Positive diagonal generator.
struct DiagonalGenerator {
  RatVector d;

  friend bool operator==(const DiagonalGenerator& a, const DiagonalGenerator& b) {
    return a.d.size() == b.d.size() && a.d == b.d;
  }
};

using Generator = std::variant<ElementaryBidiagonal, DiagonalGenerator>;

struct GeneratorWord {
  int n = 0;
  std::vector<Generator> items;
};

RatMatrix to_matrix(const ElementaryBidiagonal& g);
RatMatrix to_matrix(const DiagonalGenerator& g);
RatMatrix to_matrix(const Generator& g);
int dimension(const Generator& g);

/// Ordered product of the word's factors. Throws std::invalid_argument on negative
/// weights, nonpositive diagonal entries or dimension mismatch.
RatMatrix word_to_matrix(const GeneratorWord& word);

/// The canonical word of a factorization, factor by factor.
GeneratorWord whitney_word(const BidiagonalFactorization& f);

/// The map psi: parameters -> matrix.
RatMatrix synthesize(const BidiagonalFactorization& f);

/// Neville elimination of A: adjacent-row elimination of the lower part, then
/// adjacent-column elimination of the unit upper part. Returns the parameters, or
/// nullopt when A is not ITN (a needed row exchange, a negative multiplier or a
/// nonpositive pivot).
std::optional<BidiagonalFactorization> neville_factorization(const RatMatrix& a);

/// Throws MathError when A is not ITN.
BidiagonalFactorization factorize(const RatMatrix& a);

struct LduDecomposition {
  RatMatrix l;
  RatMatrix d;
  RatMatrix u;
};

/// Gaussian decomposition A = LDU of an ITN matrix, grouped from the Whitney factors.
LduDecomposition ldu(const RatMatrix& a);

/// Random parameters: numerators uniform in [0, 8] ([1, 8] when strict), denominators
/// uniform in [1, 8]; when not strict each weight is additionally zeroed with
/// probability 1/4. d is always positive.
BidiagonalFactorization random_factorization(int n, std::mt19937_64& rng, bool strict_tp);

RatMatrix random_itn(int n, std::mt19937_64& rng, bool strict_tp);
RatMatrix random_itn(int n, std::uint64_t seed, bool strict_tp);

}  // namespace totpos
