#pragma once

#include "totpos/factor.hpp"
#include "totpos/radical.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace totpos {

enum class Orientation { diagonal, antidiagonal };

std::string_view to_string(Orientation o);
Orientation parse_orientation(std::string_view text);

/// T(A) = mu(det A) (det A)^{-1/n} R A R^{-1} with mu(x) = x^c and
/// R = diag(r) or R = sum_i r_i E_{i,n+1-i}.
struct AutomorphismSpec {
  int n = 1;
  Orientation orientation = Orientation::diagonal;
  RatVector r;
  Rat mu_exponent{1};

  /// Throws std::invalid_argument on r.size() != n, r_i <= 0 or c == 0.
  void validate() const;
  /// Same automorphism with r_1 = 1.
  AutomorphismSpec normalized() const;
  RatMatrix conjugator() const;

  friend bool operator==(const AutomorphismSpec& a, const AutomorphismSpec& b) {
    return a.n == b.n && a.orientation == b.orientation && a.r.size() == b.r.size() &&
           a.r == b.r && a.mu_exponent == b.mu_exponent;
  }
};

/// Any map from square rational matrices to exact scaled matrices: automorphisms,
/// their tampered variants, or external oracles.
using MatrixMap = std::function<ScaledMatrix(const RatMatrix&)>;

/// mu(x) = x^c.
RadicalScalar mu(const AutomorphismSpec& spec, const Rat& x);

/// R A R^{-1} without the scalar factor.
RatMatrix conjugate(const AutomorphismSpec& spec, const RatMatrix& a);

/// Throws std::invalid_argument on a dimension mismatch, MathError when A is not ITN.
ScaledMatrix apply(const AutomorphismSpec& spec, const RatMatrix& a);

MatrixMap as_map(const AutomorphismSpec& spec);

AutomorphismSpec random_spec(int n, std::mt19937_64& rng);

struct Counterexample {
  RatMatrix a;
  RatMatrix b;
  std::string reason;
};

struct HomomorphismReport {
  bool pass = true;
  int trials_run = 0;
  std::optional<Counterexample> counterexample;
};

/// Draws ITN pairs (A, B) and checks T(AB) = T(A) T(B) exactly, plus TP -> TP and
/// ITN -> ITN on A, B and AB. Stops at the first counterexample.
HomomorphismReport verify_homomorphism(const MatrixMap& map, int n, int trials,
                                       std::uint64_t seed);
HomomorphismReport verify_homomorphism(const AutomorphismSpec& spec, int trials,
                                       std::uint64_t seed);

struct GeneratorImage {
  Generator input;
  ScaledMatrix image;
};

struct GeneratorImageTable {
  int n = 1;
  std::vector<GeneratorImage> entries;
};

/// Images of I + E_{k,k+1} and I + E_{k+1,k} for every k, of 2I and 3I, and of
/// diag(1, ..., n).
GeneratorImageTable tabulate(const MatrixMap& map, int n);
GeneratorImageTable tabulate(const AutomorphismSpec& spec);

std::string describe(const Generator& g);

/// A generator table that matches no automorphism of the classified form.
class TableInconsistency : public MathError {
 public:
  TableInconsistency(std::size_t entry, const std::string& what)
      : MathError("table entry " + std::to_string(entry) + ": " + what), entry_(entry) {}
  std::size_t entry() const { return entry_; }

 private:
  std::size_t entry_;
};

/// Reads orientation and the ratios r_k / r_{k+1} from the upper generators, c from
/// a scalar generator, normalizes r_1 = 1, then replays every entry through apply.
AutomorphismSpec recover(const GeneratorImageTable& table);

/// T^(X) = T(A)^{-1} T(AX) for a TP reference A and ITN X.
ScaledMatrix extend_tp_automorphism(const MatrixMap& oracle, const RatMatrix& reference,
                                    const RatMatrix& x);
/// The right-handed form T(XA) T(A)^{-1}.
ScaledMatrix extend_tp_automorphism_right(const MatrixMap& oracle, const RatMatrix& reference,
                                          const RatMatrix& x);

struct DomainReport {
  bool pass = true;
  std::optional<std::size_t> failing_sample;
  std::string detail;
};

/// Every TP sample must map to a TP body, every positive diagonal sample to a
/// diagonal body. Throws MathError when a sample is in neither set.
DomainReport intermediate_semigroup_check(const std::vector<RatMatrix>& samples,
                                    const AutomorphismSpec& spec);

}  // namespace totpos
