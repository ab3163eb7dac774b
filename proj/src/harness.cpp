#include "totpos/harness.hpp"

#include "totpos/classify.hpp"
#include "totpos/io.hpp"
#include "totpos/minors.hpp"
#include "totpos/structure.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <sstream>

namespace totpos {

std::string_view to_string(Mutation m) {
  switch (m) {
    case Mutation::none: return "none";
    case Mutation::transpose_in_apply: return "transpose-in-apply";
    case Mutation::dropped_scalar: return "dropped-scalar";
    case Mutation::wrong_whitney_order: return "wrong-whitney-order";
  }
  return "none";
}

Mutation parse_mutation(std::string_view text) {
  for (auto m : {Mutation::none, Mutation::transpose_in_apply, Mutation::dropped_scalar,
                 Mutation::wrong_whitney_order})
    if (to_string(m) == text) return m;
  throw std::invalid_argument("unknown mutation '" + std::string(text) + "'");
}

void RunConfig::validate() const {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (dimension_cap < 1 || dimension_cap > kHardDimensionCap)
    throw std::invalid_argument("dimension cap must lie in [1, " +
                                std::to_string(kHardDimensionCap) + "]");
  if (dims.empty()) throw std::invalid_argument("at least one dimension is required");
  for (int n : dims)
    if (n < 1 || n > dimension_cap)
      throw std::invalid_argument("dimension " + std::to_string(n) + " outside [1, " +
                                  std::to_string(dimension_cap) + "]");
}

RatMatrix synthesize_descending_upper(const BidiagonalFactorization& f) {
  f.validate();
  const int n = f.n();
  GeneratorWord word = whitney_word(f);
  const auto upper_begin = word.items.begin() + n * (n - 1) / 2 + 1;
  word.items.erase(upper_begin, word.items.end());
  for (int j = n - 1; j >= 1; --j)
    for (int k = n - 1; k >= j; --k)
      word.items.emplace_back(
          ElementaryBidiagonal{n, BidiagonalKind::upper, k, f.w_prime(j, k + 1)});
  return word_to_matrix(word);
}

RatMatrix mutated_synthesize(const BidiagonalFactorization& f, Mutation mutation) {
  return mutation == Mutation::wrong_whitney_order ? synthesize_descending_upper(f) : synthesize(f);
}

MatrixMap mutated_map(const AutomorphismSpec& spec, Mutation mutation) {
  switch (mutation) {
    case Mutation::transpose_in_apply:
      return [spec](const RatMatrix& a) {
        if (!is_itn_fast(a)) throw MathError("apply: input is not ITN");
        return ScaledMatrix(rational_power(determinant(a), spec.mu_exponent - Rat(1, spec.n)),
                            conjugate(spec, RatMatrix(a.transpose())));
      };
    case Mutation::dropped_scalar:
      return [spec](const RatMatrix& a) {
        if (!is_itn_fast(a)) throw MathError("apply: input is not ITN");
        return ScaledMatrix(mu(spec, determinant(a)), conjugate(spec, a));
      };
    default:
      return as_map(spec);
  }
}

std::uint64_t property_seed(std::uint64_t seed, std::string_view id) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : id) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  // splitmix64 finalizer
  std::uint64_t z = seed ^ h;
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

using io::json;

constexpr std::size_t kRecordedFailures = 5;

class Trial {
 public:
  Trial(const RunConfig& config, PropertyReport& report)
      : config_(config), report_(report), rng_(property_seed(config.seed, report.id)) {}

  const RunConfig& config() const { return config_; }
  std::mt19937_64& rng() { return rng_; }
  Mutation mutation() const { return config_.mutation; }

  void count() { ++report_.trials; }
  void fail(json counterexample) {
    if (report_.failures.size() < kRecordedFailures) report_.failures.push_back(counterexample.dump());
  }
  bool check(bool ok, const std::function<json()>& counterexample) {
    count();
    if (!ok) fail(counterexample());
    return ok;
  }

  bool coin() { return std::bernoulli_distribution(0.5)(rng_); }
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  Rat small_rat(int lo, int hi, int max_den) {
    const int p = uniform(lo, hi);
    return Rat(p, uniform(1, max_den));
  }
  RatMatrix random_rational(int rows, int cols, int lo, int hi, int max_den) {
    RatMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = small_rat(lo, hi, max_den);
    return m;
  }
  RatMatrix itn(int n) { return random_itn(n, rng_, coin()); }
  RatMatrix tp(int n) { return random_itn(n, rng_, true); }
  RatMatrix non_diagonal_itn(int n) {
    RatMatrix a;
    do a = itn(n);
    while (is_diagonal(a));
    return a;
  }

 private:
  const RunConfig& config_;
  PropertyReport& report_;
  std::mt19937_64 rng_;
};

json with(json j, const char* key, json value) {
  j[key] = std::move(value);
  return j;
}

// -- factorization -----------------------------------------------------------

void whitney_round_trip(Trial& t) {
  for (int n : t.config().dims)
    for (int s = 0; s < t.config().trials; ++s) {
      const RatMatrix a = t.itn(n);
      const auto f = factorize(a);
      const RatMatrix back = mutated_synthesize(f, t.mutation());
      t.check(back == a, [&] { return json{{"A", io::to_json(a)}, {"synthesized", io::to_json(back)}}; });

      const auto positive = random_factorization(n, t.rng(), true);
      const RatMatrix p = mutated_synthesize(positive, t.mutation());
      const auto g = neville_factorization(p);
      t.check(g && *g == positive, [&] {
        return json{{"parameters", io::to_json(positive)}, {"matrix", io::to_json(p)}};
      });
    }
}

void bfz_stratification(Trial& t) {
  for (int n : t.config().dims)
    for (int s = 0; s < t.config().trials; ++s) {
      const auto f = random_factorization(n, t.rng(), t.coin());
      const RatMatrix a = mutated_synthesize(f, t.mutation());
      t.check(is_tp(a) == f.all_positive(), [&] {
        return json{{"parameters", io::to_json(f)}, {"matrix", io::to_json(a)}};
      });
    }
}

bool unit_triangular(const RatMatrix& m, bool lower) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (i == j && m(i, j) != 1) return false;
      if ((lower ? j > i : i > j) && m(i, j) != 0) return false;
    }
  return true;
}

void cryer_ldu(Trial& t) {
  for (int n : t.config().dims)
    for (int s = 0; s < t.config().trials; ++s) {
      const RatMatrix a = t.itn(n);
      const auto parts = ldu(a);
      const bool ok = RatMatrix(parts.l * parts.d * parts.u) == a && unit_triangular(parts.l, true) &&
                      unit_triangular(parts.u, false) && is_diagonal(parts.d) &&
                      is_itn(parts.l) && is_itn(parts.d) && is_itn(parts.u);
      t.check(ok, [&] { return json{{"A", io::to_json(a)}}; });
    }
}

// -- classification ------------------------------------------------------------

void whitney_density(Trial& t) {
  const Rat eps(1, 1000);
  for (int n : t.config().dims)
    for (int s = 0; s < t.config().trials; ++s) {
      const RatMatrix a = t.itn(n);
      const RatMatrix b = whitney_perturb(a, eps);
      t.check(max_entry_distance(a, b) < eps && is_tp(b), [&] { return json{{"A", io::to_json(a)}}; });
    }
}

void karlin_principal_minors(Trial& t) {
  for (int n : t.config().dims)
    for (int s = 0; s < t.config().trials; ++s) {
      const RatMatrix a = t.itn(n);
      const auto report = principal_minors_positive(a);
      t.check(report.positive, [&] {
        return json{{"A", io::to_json(a)}, {"failing", io::to_json(*report.first_failure)}};
      });
    }
}

void cauchy_binet(Trial& t) {
  for (int n : t.config().dims)
    for (int s = 0; s < t.config().trials; ++s) {
      const int m = t.uniform(1, n);
      const RatMatrix a = t.random_rational(m, n, -8, 8, 8);
      const RatMatrix b = t.random_rational(n, m, -8, 8, 8);
      const auto result = cauchy_binet_check(a, b);
      t.check(result.equal, [&] { return json{{"A", io::to_json(a)}, {"B", io::to_json(b)}}; });
    }
}

RatMatrix mixed_sample(Trial& t, int n) {
  switch (t.uniform(0, 3)) {
    case 0: return t.random_rational(n, n, -2, 8, 4);
    case 1: return t.itn(n);
    case 2: return t.tp(n);
    default: {
      // Repeating a row keeps every minor of a TN matrix nonnegative and kills the determinant.
      RatMatrix a = t.itn(n);
      if (n > 1) a.row(t.uniform(1, n - 1)) = a.row(0);
      return a;
    }
  }
}

void classifier_agreement(Trial& t) {
  for (int n : t.config().dims)
    for (int s = 0; s < t.config().trials; ++s) {
      const RatMatrix a = mixed_sample(t, n);
      const auto label = classify_full(a).label;
      const bool tp = label == ClassLabel::TP;
      const bool itn = tp || label == ClassLabel::ITN_not_TP;
      t.check(is_tp_fekete(a) == tp && is_itn_fast(a) == itn, [&] {
        return json{{"A", io::to_json(a)}, {"label", std::string(to_string(label))}};
      });
    }
}

void closure_products(Trial& t) {
  for (int n : t.config().dims)
    for (int s = 0; s < t.config().trials; ++s) {
      const RatMatrix a = t.tp(n);
      const RatMatrix x = t.itn(n);
      t.check(is_tp(RatMatrix(a * x)) && is_tp(RatMatrix(x * a)),
              [&] { return json{{"A", io::to_json(a)}, {"X", io::to_json(x)}}; });
    }
}

// -- structure -------------------------------------------------------------------

void maximal_subgroup(Trial& t) {
  for (int n : t.config().dims) {
    if (n < 2) continue;
    for (int s = 0; s < t.config().trials; ++s) {
      const RatMatrix a = t.non_diagonal_itn(n);
      bool ok = true;
      try {
        const auto w = maximal_subgroup_witness(a);
        ok = inverse(a)(w.row - 1, w.col - 1) < 0;
      } catch (const MathError&) {
        ok = false;
      }
      t.check(ok, [&] { return json{{"A", io::to_json(a)}}; });
    }
  }
}

void scalar_centralizer(Trial& t) {
  for (int n : t.config().dims)
    for (int s = 0; s < t.config().trials; ++s) {
      const Rat a = t.small_rat(1, 9, 8);
      const RatMatrix scalar = RatMatrix(identity(n) * a);
      const RatMatrix x = t.coin() ? t.itn(n) : t.random_rational(n, n, -1, 4, 3);
      const bool shape_ok = centralizer_shape(scalar).composition == std::vector<int>{n};
      const bool member_ok = in_centralizer(scalar, x) == is_itn(x);

      const auto spec = random_spec(n, t.rng());
      const ScaledMatrix image = mutated_map(spec, t.mutation())(scalar);
      Rat a_to_n(1);
      for (int i = 0; i < n; ++i) a_to_n *= a;
      const bool action_ok = image == ScaledMatrix(mu(spec, a_to_n), identity(n));
      t.check(shape_ok && member_ok && action_ok, [&] {
        return json{{"a", io::to_json(a)}, {"X", io::to_json(x)}, {"spec", io::to_json(spec)},
                    {"image", io::to_json(image)}};
      });
    }
}

RatMatrix random_run_diagonal(Trial& t, int n) {
  RatVector d(n);
  for (int i = 0; i < n; ++i) d(i) = t.uniform(1, 3);
  return diagonal(d);
}

RatMatrix block_structured(Trial& t, const RatMatrix& d) {
  const auto shape = centralizer_shape(d);
  const auto n = static_cast<int>(d.rows());
  RatMatrix x = RatMatrix::Zero(n, n);
  int start = 0;
  for (int size : shape.composition) {
    x.block(start, start, size, size) = t.itn(size);
    start += size;
  }
  return x;
}

void centralizer_blocks(Trial& t) {
  for (int n : t.config().dims)
    for (int s = 0; s < t.config().trials; ++s) {
      const RatMatrix d = random_run_diagonal(t, n);
      RatMatrix x;
      switch (t.uniform(0, 2)) {
        case 0: x = t.itn(n); break;
        case 1: x = block_structured(t, d); break;
        default: {
          x = block_structured(t, d);
          const int i = t.uniform(0, n - 1);
          const int j = t.uniform(0, n - 1);
          x(i, j) += t.coin() ? Rat(1) : Rat(-1, 2);
        }
      }
      t.check(block_membership(d, x) == in_centralizer(d, x),
              [&] { return json{{"D", io::to_json(d)}, {"X", io::to_json(x)}}; });
    }
}

void two_by_two_conjugation(Trial& t) {
  const int samples = t.config().trials * static_cast<int>(t.config().dims.size());
  for (int s = 0; s < samples; ++s) {
    RatMatrix a;
    switch (t.uniform(0, 2)) {
      case 0: a = t.non_diagonal_itn(2); break;
      case 1: a = identity(2) * t.small_rat(1, 8, 8) + unit(2, 1, 2) * t.small_rat(1, 8, 8); break;
      default: a = identity(2) * t.small_rat(1, 8, 8) + unit(2, 2, 1) * t.small_rat(1, 8, 8);
    }
    bool sampled_all = true;
    for (int c = 0; c < 50 && sampled_all; ++c) {
      RatVector dv(2);
      dv << t.small_rat(1, 8, 8), t.small_rat(1, 8, 8);
      const RatMatrix conj = diagonal(dv) * a * inverse(diagonal(dv));
      sampled_all = in_centralizer(a, conj);
    }
    t.check(two_by_two_conjugation_test(a) == sampled_all, [&] { return json{{"A", io::to_json(a)}}; });
  }
}

void ck_commuting(Trial& t) {
  std::vector<int> dims;
  for (int n : t.config().dims)
    if (n >= 4) dims.push_back(n);
  if (dims.empty()) dims.push_back(4);
  for (int n : dims)
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j) {
        const bool expected = ck_commute_expected(n, i, j);
        bool all_commute = true;
        const int budget = expected ? t.config().trials : 50;
        for (int s = 0; s < budget && all_commute; ++s) {
          const RatMatrix x = random_ck_element(n, i, t.rng()).realize();
          const RatMatrix y = random_ck_element(n, j, t.rng()).realize();
          all_commute = RatMatrix(x * y) == RatMatrix(y * x);
        }
        t.check(all_commute == expected,
                [&] { return json{{"n", n}, {"i", i}, {"j", j}, {"expected_commute", expected}}; });
      }
}

// -- automorphisms -------------------------------------------------------------------

void automorphism_homomorphism(Trial& t) {
  for (int n : t.config().dims) {
    const auto spec = random_spec(n, t.rng());
    const auto report = verify_homomorphism(mutated_map(spec, t.mutation()), n, t.config().trials,
                                            t.rng()());
    for (int s = 0; s < report.trials_run; ++s) t.count();
    if (!report.pass)
      t.fail(with(io::to_json(*report.counterexample), "spec", io::to_json(spec)));
  }
}

void automorphism_generators(Trial& t) {
  for (int n : t.config().dims) {
    if (n < 2) continue;
    for (int s = 0; s < t.config().trials; ++s) {
      const auto spec = random_spec(n, t.rng());
      const MatrixMap map = mutated_map(spec, t.mutation());
      for (auto kind : {BidiagonalKind::lower, BidiagonalKind::upper})
        for (int k = 1; k < n; ++k) {
          const ElementaryBidiagonal g{n, kind, k, t.small_rat(1, 8, 8)};
          const ScaledMatrix image = map(to_matrix(g));
          ElementaryBidiagonal predicted = g;
          if (spec.orientation == Orientation::antidiagonal) {
            predicted.kind = kind == BidiagonalKind::lower ? BidiagonalKind::upper : BidiagonalKind::lower;
            predicted.k = n - k;
          }
          // Body must be I + w' E at the predicted site with w' > 0 and no scalar.
          RatMatrix pattern = image.body() - identity(n);
          const Eigen::Index r = predicted.kind == BidiagonalKind::lower ? predicted.k : predicted.k - 1;
          const Eigen::Index c = predicted.kind == BidiagonalKind::lower ? predicted.k - 1 : predicted.k;
          const bool weight_ok = pattern(r, c) > 0;
          pattern(r, c) = 0;
          const bool ok = image.scale().is_one() && weight_ok && pattern.isZero();
          t.check(ok, [&] {
            return json{{"spec", io::to_json(spec)}, {"generator", io::to_json(Generator{g})},
                        {"image", io::to_json(image)}};
          });
        }
    }
  }
}

void automorphism_recovery(Trial& t) {
  for (int n : t.config().dims)
    for (int s = 0; s < t.config().trials; ++s) {
      const auto spec = random_spec(n, t.rng());
      const auto table = tabulate(mutated_map(spec, t.mutation()), n);
      std::optional<AutomorphismSpec> recovered;
      std::string error;
      try {
        recovered = recover(table);
      } catch (const std::exception& e) {
        error = e.what();
      }
      t.check(recovered && *recovered == spec.normalized(), [&] {
        json j{{"spec", io::to_json(spec)}};
        if (recovered) j["recovered"] = io::to_json(*recovered);
        if (!error.empty()) j["error"] = error;
        return j;
      });

      // One perturbed image must be rejected.
      auto mutated = table;
      const auto e = static_cast<std::size_t>(t.uniform(0, static_cast<int>(table.entries.size()) - 1));
      auto& entry = mutated.entries[e];
      if (t.coin()) {
        RatMatrix body = entry.image.body();
        body(t.uniform(0, n - 1), t.uniform(0, n - 1)) += 1;
        entry.image = ScaledMatrix(entry.image.scale(), body);
      } else {
        entry.image = ScaledMatrix(entry.image.scale() * RadicalScalar::from_rational(Rat(2)),
                                   entry.image.body());
      }
      bool rejected = false;
      try {
        recover(mutated);
      } catch (const TableInconsistency&) {
        rejected = true;
      }
      t.check(rejected, [&] { return json{{"spec", io::to_json(spec)}, {"perturbed_entry", e}}; });
    }
}

void determinant_covariance(Trial& t) {
  for (int n : t.config().dims)
    for (int s = 0; s < t.config().trials; ++s) {
      const auto spec = random_spec(n, t.rng());
      const RatMatrix a = t.itn(n);
      const ScaledMatrix image = mutated_map(spec, t.mutation())(a);
      const RadicalScalar lhs =
          image.scale().pow(Rat(n)) * RadicalScalar::from_rational(determinant(image.body()));
      const RadicalScalar rhs = mu(spec, determinant(a)).pow(Rat(n));
      t.check(lhs == rhs, [&] {
        return json{{"spec", io::to_json(spec)}, {"A", io::to_json(a)}, {"image", io::to_json(image)}};
      });
    }
}

void extension(Trial& t) {
  for (int n : t.config().dims)
    for (int s = 0; s < t.config().trials; ++s) {
      const auto spec = random_spec(n, t.rng());
      const MatrixMap oracle = mutated_map(spec, t.mutation());
      const RatMatrix x = t.itn(n);
      const ScaledMatrix expected = oracle(x);
      bool ok = true;
      for (int r = 0; r < 3 && ok; ++r) {
        const RatMatrix reference = t.tp(n);
        ok = extend_tp_automorphism(oracle, reference, x) == expected &&
             extend_tp_automorphism_right(oracle, reference, x) == expected;
      }
      t.check(ok, [&] { return json{{"spec", io::to_json(spec)}, {"X", io::to_json(x)}}; });
    }
}

void intermediate_semigroup(Trial& t) {
  for (int n : t.config().dims) {
    const auto spec = random_spec(n, t.rng());
    std::vector<RatMatrix> samples;
    for (int s = 0; s < t.config().trials; ++s) {
      samples.push_back(t.tp(n));
      RatVector d(n);
      for (int i = 0; i < n; ++i) d(i) = t.small_rat(1, 8, 8);
      samples.push_back(diagonal(d));
    }
    const auto report = intermediate_semigroup_check(samples, spec);
    for (std::size_t s = 0; s < samples.size(); ++s) t.count();
    if (!report.pass)
      t.fail({{"spec", io::to_json(spec)}, {"sample", io::to_json(samples[*report.failing_sample])},
              {"detail", report.detail}});
  }
}

struct Entry {
  PropertyInfo info;
  void (*run)(Trial&);
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {{"factor.round_trip", "Whitney bidiagonal factorization of ITN matrices"}, whitney_round_trip},
      {{"factor.tp_stratum", "Berenstein-Fomin-Zelevinsky: positive parameters <=> TP"}, bfz_stratification},
      {{"factor.ldu", "Cryer: ITN matrices have an ITN Gaussian decomposition LDU"}, cryer_ldu},
      {{"classify.density", "Whitney: TP is dense in TN (constructive, ITN inputs)"}, whitney_density},
      {{"classify.principal_minors", "Karlin: principal minors of ITN matrices are positive"}, karlin_principal_minors},
      {{"exact.cauchy_binet", "Cauchy-Binet determinantal identity"}, cauchy_binet},
      {{"classify.oracle_agreement", "Fekete contiguous-minor criterion and Neville test vs all minors"}, classifier_agreement},
      {{"classify.product_closure", "ITN(n) equals the TP-preserving multipliers S^L(n) = S^R(n)"}, closure_products},
      {{"automorph.extension", "extension of a TP(n) automorphism to ITN(n), reference independence"}, extension},
      {{"structure.maximal_subgroup", "D(n) is the unique maximal subgroup of ITN(n)"}, maximal_subgroup},
      {{"structure.scalar_centralizer", "C(aI) = ITN(n) and T(aI) = gamma(a) I"}, scalar_centralizer},
      {{"structure.diagonal_centralizer", "C(D) is a direct sum of ITN blocks over runs of equal entries"}, centralizer_blocks},
      {{"structure.two_by_two", "2x2: D A D^{-1} in C(A) for all D iff A = aI + bE_12 or aI + bE_21"}, two_by_two_conjugation},
      {{"structure.ck_commuting", "C_i and C_j commute iff |i - j| > 1 (n >= 4)"}, ck_commuting},
      {{"automorph.homomorphism", "classified maps are semigroup automorphisms of ITN(n) and TP(n)"}, automorphism_homomorphism},
      {{"automorph.generators", "automorphisms send elementary bidiagonal generators to generators"}, automorphism_generators},
      {{"automorph.recovery", "generator images determine the classified form"}, automorphism_recovery},
      {{"automorph.determinant", "det T(A) = mu(det A)^n"}, determinant_covariance},
      {{"automorph.intermediate_semigroup", "TP(n) + D(n) is preserved by classified automorphisms"}, intermediate_semigroup},
  };
  return entries;
}

PropertyReport run_entry(const Entry& entry, const RunConfig& config) {
  PropertyReport report{entry.info.id, entry.info.citation, 0, {}, 0.0};
  const auto start = std::chrono::steady_clock::now();
  Trial trial(config, report);
  try {
    entry.run(trial);
  } catch (const std::exception& e) {
    report.failures.push_back(json{{"exception", e.what()}}.dump());
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

std::vector<PropertyInfo> battery() {
  std::vector<PropertyInfo> out;
  for (const auto& e : registry()) out.push_back(e.info);
  return out;
}

PropertyReport run_property(std::string_view id, const RunConfig& config) {
  config.validate();
  for (const auto& e : registry())
    if (e.info.id == id) return run_entry(e, config);
  throw std::invalid_argument("unknown property '" + std::string(id) + "'");
}

std::vector<PropertyReport> check_all(const RunConfig& config) {
  config.validate();
  std::vector<PropertyReport> reports;
  if (!config.parallel) {
    for (const auto& e : registry()) reports.push_back(run_entry(e, config));
    return reports;
  }
  std::vector<std::future<PropertyReport>> pending;
  for (const auto& e : registry())
    pending.push_back(std::async(std::launch::async, [&e, &config] { return run_entry(e, config); }));
  for (auto& f : pending) reports.push_back(f.get());
  return reports;
}

bool all_pass(const std::vector<PropertyReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass(); });
}

std::string format_text(const std::vector<PropertyReport>& reports, bool timing) {
  std::ostringstream out;
  int failed = 0;
  for (const auto& r : reports) {
    out << (r.pass() ? "PASS " : "FAIL ") << r.id << "  trials=" << r.trials;
    if (timing) out << "  elapsed=" << r.elapsed_seconds << "s";
    out << "\n     " << r.citation << '\n';
    for (const auto& f : r.failures) out << "     counterexample: " << f << '\n';
    if (!r.pass()) ++failed;
  }
  out << (failed == 0 ? "all " + std::to_string(reports.size()) + " properties passed"
                      : std::to_string(failed) + " of " + std::to_string(reports.size()) +
                            " properties failed")
      << '\n';
  return out.str();
}

nlohmann::json format_json(const std::vector<PropertyReport>& reports, bool timing) {
  json out = json::array();
  for (const auto& r : reports) {
    json failures = json::array();
    for (const auto& f : r.failures) failures.push_back(json::parse(f));
    json item{{"id", r.id},       {"citation", r.citation}, {"trials", r.trials},
              {"pass", r.pass()}, {"failures", failures}};
    if (timing) item["elapsed_seconds"] = r.elapsed_seconds;
    out.push_back(std::move(item));
  }
  return {{"pass", all_pass(reports)}, {"properties", std::move(out)}};
}

}  // namespace totpos
