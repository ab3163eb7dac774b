#pragma once

#include "totpos/automorph.hpp"
#include "totpos/factor.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace totpos {

inline constexpr int kDefaultDimensionCap = 6;
inline constexpr int kHardDimensionCap = 12;

/// Canned defects used to confirm that the battery notices broken code.
enum class Mutation {
  none,
  transpose_in_apply,   ///< T(A) built from A^T
  dropped_scalar,       ///< the (det A)^{-1/n} factor is left out
  wrong_whitney_order,  ///< upper block multiplied with the inner index descending
};

std::string_view to_string(Mutation m);
Mutation parse_mutation(std::string_view text);

struct RunConfig {
  std::uint64_t seed = 42;
  std::vector<int> dims{2, 3, 4, 5};
  int trials = 20;
  int dimension_cap = kDefaultDimensionCap;
  Mutation mutation = Mutation::none;
  bool parallel = true;

  /// Throws std::invalid_argument on trials < 1, empty dims, or dims outside the cap.
  void validate() const;
};

struct PropertyReport {
  std::string id;
  std::string citation;
  int trials = 0;
  std::vector<std::string> failures;  ///< serialized counterexamples
  double elapsed_seconds = 0.0;

  bool pass() const { return failures.empty(); }
};

struct PropertyInfo {
  std::string id;
  std::string citation;
};

/// Every property in the battery, in report order.
std::vector<PropertyInfo> battery();

/// Independent trial stream per property: identical for serial and parallel runs.
std::uint64_t property_seed(std::uint64_t seed, std::string_view id);

PropertyReport run_property(std::string_view id, const RunConfig& config);
std::vector<PropertyReport> check_all(const RunConfig& config);

bool all_pass(const std::vector<PropertyReport>& reports);

/// Human-readable report. Timing is omitted unless requested so that equal
/// configurations give byte-identical output.
std::string format_text(const std::vector<PropertyReport>& reports, bool timing = false);
nlohmann::json format_json(const std::vector<PropertyReport>& reports, bool timing = false);

/// The automorphism of `spec`, optionally with a canned defect.
MatrixMap mutated_map(const AutomorphismSpec& spec, Mutation mutation);
/// synthesize, or the descending-order variant under wrong_whitney_order.
RatMatrix mutated_synthesize(const BidiagonalFactorization& f, Mutation mutation);
/// Upper block with the inner index descending from n-1 to j. Collapses distinct
/// parameter sets onto one matrix for n >= 3, so round trips break.
RatMatrix synthesize_descending_upper(const BidiagonalFactorization& f);

}  // namespace totpos
