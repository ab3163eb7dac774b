#include "totpos/automorph.hpp"

#include "totpos/classify.hpp"
#include "totpos/minors.hpp"

#include <sstream>

namespace totpos {

std::string_view to_string(Orientation o) {
  return o == Orientation::diagonal ? "diagonal" : "antidiagonal";
}

Orientation parse_orientation(std::string_view text) {
  if (text == "diagonal") return Orientation::diagonal;
  if (text == "antidiagonal") return Orientation::antidiagonal;
  throw std::invalid_argument("unknown orientation '" + std::string(text) + "'");
}

void AutomorphismSpec::validate() const {
  if (n < 1) throw std::invalid_argument("automorphism dimension must be >= 1");
  if (r.size() != n)
    throw std::invalid_argument("automorphism needs " + std::to_string(n) + " entries in r");
  for (Eigen::Index i = 0; i < r.size(); ++i)
    if (r(i) <= 0) throw std::invalid_argument("r_" + std::to_string(i + 1) + " must be positive");
  if (mu_exponent == 0) throw std::invalid_argument("mu exponent must be nonzero");
}

AutomorphismSpec AutomorphismSpec::normalized() const {
  validate();
  AutomorphismSpec out = *this;
  out.r /= r(0);
  return out;
}

RatMatrix AutomorphismSpec::conjugator() const {
  validate();
  return orientation == Orientation::diagonal ? diagonal(r) : antidiagonal(r);
}

RadicalScalar mu(const AutomorphismSpec& spec, const Rat& x) {
  return rational_power(x, spec.mu_exponent);
}

RatMatrix conjugate(const AutomorphismSpec& spec, const RatMatrix& a) {
  spec.validate();
  const int n = spec.n;
  if (a.rows() != n || a.cols() != n)
    throw std::invalid_argument("automorphism of dimension " + std::to_string(n) +
                                " applied to a " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " matrix");
  RatMatrix body(n, n);
  const bool flip = spec.orientation == Orientation::antidiagonal;
  // (R A R^{-1})_{ij} = r_i a'_{ij} / r_j with a' = A or P A P.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rat& entry = flip ? a(n - 1 - i, n - 1 - j) : a(i, j);
      body(i, j) = spec.r(i) * entry / spec.r(j);
    }
  return body;
}

ScaledMatrix apply(const AutomorphismSpec& spec, const RatMatrix& a) {
  RatMatrix body = conjugate(spec, a);
  if (!is_itn_fast(a)) throw MathError("apply: input is not ITN");
  const Rat det = determinant(a);
  const Rat exponent = spec.mu_exponent - Rat(1, spec.n);
  return ScaledMatrix(rational_power(det, exponent), std::move(body));
}

MatrixMap as_map(const AutomorphismSpec& spec) {
  return [spec](const RatMatrix& a) { return apply(spec, a); };
}

AutomorphismSpec random_spec(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> positive(1, 8);
  std::uniform_int_distribution<int> exponent_num(1, 4);
  std::uniform_int_distribution<int> exponent_den(1, 4);
  std::bernoulli_distribution coin(0.5);
  AutomorphismSpec spec;
  spec.n = n;
  spec.orientation = coin(rng) ? Orientation::antidiagonal : Orientation::diagonal;
  spec.r.resize(n);
  for (int i = 0; i < n; ++i) {
    const int p = positive(rng);
    spec.r(i) = Rat(p, positive(rng));
  }
  const int p = exponent_num(rng);
  const int q = exponent_den(rng);
  spec.mu_exponent = coin(rng) ? Rat(-p, q) : Rat(p, q);
  return spec;
}

namespace {

// Class membership of a positive multiple of the body.
std::optional<std::string> class_violation(const RatMatrix& input, const ScaledMatrix& image,
                                           const char* which) {
  if (is_tp_fekete(input) && !is_tp_fekete(image.body()))
    return std::string("TP input ") + which + " has a non-TP image";
  if (!is_itn_fast(image.body())) return std::string("ITN input ") + which + " has a non-ITN image";
  return std::nullopt;
}

}  // namespace

HomomorphismReport verify_homomorphism(const MatrixMap& map, int n, int trials,
                                       std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("verify_homomorphism: trials must be >= 1");
  if (n < 1) throw std::invalid_argument("verify_homomorphism: n must be >= 1");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution strict(0.5);
  HomomorphismReport report;
  for (int t = 0; t < trials; ++t) {
    const bool strict_a = strict(rng);
    const RatMatrix a = random_itn(n, rng, strict_a);
    const bool strict_b = strict(rng);
    const RatMatrix b = random_itn(n, rng, strict_b);
    const RatMatrix ab = a * b;
    ++report.trials_run;

    const ScaledMatrix ta = map(a);
    const ScaledMatrix tb = map(b);
    const ScaledMatrix tab = map(ab);
    std::optional<std::string> reason;
    if (!(tab == ta * tb)) reason = "T(AB) != T(A) T(B)";
    if (!reason) reason = class_violation(a, ta, "A");
    if (!reason) reason = class_violation(b, tb, "B");
    if (!reason) reason = class_violation(ab, tab, "AB");
    if (reason) {
      report.pass = false;
      report.counterexample = Counterexample{a, b, *reason};
      return report;
    }
  }
  return report;
}

HomomorphismReport verify_homomorphism(const AutomorphismSpec& spec, int trials,
                                       std::uint64_t seed) {
  spec.validate();
  return verify_homomorphism(as_map(spec), spec.n, trials, seed);
}

std::string describe(const Generator& g) {
  std::ostringstream out;
  if (const auto* e = std::get_if<ElementaryBidiagonal>(&g)) {
    out << (e->kind == BidiagonalKind::lower ? "lower" : "upper") << "(k=" << e->k
        << ", w=" << to_string(e->weight) << ")";
  } else {
    const auto& d = std::get<DiagonalGenerator>(g).d;
    out << "diag(";
    for (Eigen::Index i = 0; i < d.size(); ++i) out << (i ? "," : "") << to_string(d(i));
    out << ")";
  }
  return out.str();
}

GeneratorImageTable tabulate(const MatrixMap& map, int n) {
  GeneratorImageTable table{n, {}};
  const auto add = [&](Generator g) {
    ScaledMatrix image = map(to_matrix(g));
    table.entries.push_back({std::move(g), std::move(image)});
  };
  for (int k = 1; k < n; ++k) add(ElementaryBidiagonal{n, BidiagonalKind::upper, k, Rat(1)});
  for (int k = 1; k < n; ++k) add(ElementaryBidiagonal{n, BidiagonalKind::lower, k, Rat(1)});
  add(DiagonalGenerator{RatVector::Constant(n, Rat(2))});
  add(DiagonalGenerator{RatVector::Constant(n, Rat(3))});
  if (n > 1) {
    RatVector ramp(n);
    for (int i = 0; i < n; ++i) ramp(i) = i + 1;
    add(DiagonalGenerator{ramp});
  }
  return table;
}

GeneratorImageTable tabulate(const AutomorphismSpec& spec) {
  spec.validate();
  return tabulate(as_map(spec), spec.n);
}

namespace {

struct BidiagonalShape {
  BidiagonalKind kind;
  int site;
  Rat weight;
};

// Identity plus one positive entry next to the diagonal.
std::optional<BidiagonalShape> read_elementary(const RatMatrix& m) {
  const auto n = static_cast<int>(m.rows());
  std::optional<BidiagonalShape> found;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rat& v = m(i, j);
      if (i == j) {
        if (v != 1) return std::nullopt;
        continue;
      }
      if (v == 0) continue;
      if (found || std::abs(i - j) != 1 || v < 0) return std::nullopt;
      found = i > j ? BidiagonalShape{BidiagonalKind::lower, j + 1, v}
                    : BidiagonalShape{BidiagonalKind::upper, i + 1, v};
    }
  return found;
}

bool is_scalar_generator(const Generator& g) {
  const auto* d = std::get_if<DiagonalGenerator>(&g);
  if (!d || d->d.size() == 0) return false;
  for (Eigen::Index i = 1; i < d->d.size(); ++i)
    if (d->d(i) != d->d(0)) return false;
  return d->d(0) != 1;
}

}  // namespace

AutomorphismSpec recover(const GeneratorImageTable& table) {
  const int n = table.n;
  if (n < 1) throw std::invalid_argument("recover: table dimension must be >= 1");
  for (std::size_t e = 0; e < table.entries.size(); ++e) {
    const auto& entry = table.entries[e];
    if (dimension(entry.input) != n || entry.image.rows() != n || entry.image.cols() != n)
      throw std::invalid_argument("recover: entry " + std::to_string(e) +
                                  " has the wrong dimension");
  }

  AutomorphismSpec spec;
  spec.n = n;
  spec.r = RatVector::Ones(n);

  std::optional<Orientation> orientation;
  for (int k = 1; k < n; ++k) {
    std::optional<std::size_t> source;
    for (std::size_t e = 0; e < table.entries.size() && !source; ++e) {
      const auto* g = std::get_if<ElementaryBidiagonal>(&table.entries[e].input);
      if (g && g->kind == BidiagonalKind::upper && g->k == k && g->weight > 0) source = e;
    }
    if (!source)
      throw std::invalid_argument("recover: table lacks an image of I + w E_{" +
                                  std::to_string(k) + "," + std::to_string(k + 1) + "}");
    const auto& entry = table.entries[*source];
    const auto& g = std::get<ElementaryBidiagonal>(entry.input);
    if (!entry.image.scale().is_one())
      throw TableInconsistency(*source, "determinant-one generator acquired scale " +
                                            entry.image.scale().str());
    const auto shape = read_elementary(entry.image.body());
    if (!shape)
      throw TableInconsistency(*source, "image of " + describe(entry.input) +
                                            " is not an elementary bidiagonal matrix");
    Orientation seen;
    if (shape->kind == BidiagonalKind::upper && shape->site == k)
      seen = Orientation::diagonal;
    else if (shape->kind == BidiagonalKind::lower && shape->site == n - k)
      seen = Orientation::antidiagonal;
    else
      throw TableInconsistency(*source, "image of " + describe(entry.input) +
                                            " sits at a site no conjugation can reach");
    if (orientation && *orientation != seen)
      throw TableInconsistency(*source, "orientation disagrees with earlier generators");
    orientation = seen;

    const Rat ratio = shape->weight / g.weight;
    if (seen == Orientation::diagonal) {
      // r_k / r_{k+1} = ratio
      spec.r(k) = spec.r(k - 1) / ratio;
    }
  }
  spec.orientation = orientation.value_or(Orientation::diagonal);
  if (spec.orientation == Orientation::antidiagonal) {
    // Image of I + w E_{k,k+1} is I + w (r_{n+1-k} / r_{n-k}) E_{n+1-k,n-k}.
    for (int m = 1; m < n; ++m) {
      const int k = n - m;
      for (const auto& entry : table.entries) {
        const auto* g = std::get_if<ElementaryBidiagonal>(&entry.input);
        if (g && g->kind == BidiagonalKind::upper && g->k == k && g->weight > 0) {
          spec.r(m) = spec.r(m - 1) * (read_elementary(entry.image.body())->weight / g->weight);
          break;
        }
      }
    }
  }

  std::optional<std::size_t> scalar_entry;
  for (std::size_t e = 0; e < table.entries.size() && !scalar_entry; ++e)
    if (is_scalar_generator(table.entries[e].input)) scalar_entry = e;
  if (!scalar_entry) throw std::invalid_argument("recover: table lacks a scalar generator aI, a != 1");
  {
    const auto& entry = table.entries[*scalar_entry];
    const Rat a = std::get<DiagonalGenerator>(entry.input).d(0);
    const RatMatrix& body = entry.image.body();
    if (!is_scalar_matrix(body) || body(0, 0) <= 0)
      throw TableInconsistency(*scalar_entry, "scalar generator mapped to a non-scalar matrix");
    const RadicalScalar image = entry.image.scale() * RadicalScalar::from_rational(body(0, 0));
    // T(aI) = mu(a^n) I = a^{nc} I.
    const RadicalScalar base = RadicalScalar::from_rational(a);
    const auto& [prime, base_exponent] = *base.factors().begin();
    const auto it = image.factors().find(prime);
    const Rat image_exponent = it == image.factors().end() ? Rat(0) : it->second;
    spec.mu_exponent = image_exponent / (base_exponent * n);
    if (spec.mu_exponent == 0)
      throw TableInconsistency(*scalar_entry, "scalar image is constant; mu is not bijective");
    if (!(image == base.pow(spec.mu_exponent * n)))
      throw TableInconsistency(*scalar_entry,
                               "scalar image " + image.str() + " is not a rational power of " +
                                   to_string(a) + " (mu outside the power-map family)");
  }

  for (std::size_t e = 0; e < table.entries.size(); ++e) {
    const auto& entry = table.entries[e];
    const ScaledMatrix expected = apply(spec, to_matrix(entry.input));
    if (!(expected == entry.image))
      throw TableInconsistency(e, "image of " + describe(entry.input) +
                                      " does not match the recovered automorphism");
  }
  return spec;
}

namespace {

ScaledMatrix checked_oracle(const MatrixMap& oracle, const RatMatrix& input) {
  ScaledMatrix image = oracle(input);
  if (image.rows() != input.rows() || image.cols() != input.cols())
    throw MathError("oracle returned a matrix of the wrong shape");
  if (!is_tp_fekete(image.body())) throw MathError("oracle output is not TP");
  return image;
}

void check_extension_inputs(const RatMatrix& reference, const RatMatrix& x) {
  require_square(reference, "extend_tp_automorphism");
  if (x.rows() != reference.rows() || x.cols() != reference.cols())
    throw std::invalid_argument("extend_tp_automorphism: dimension mismatch");
  if (!is_tp_fekete(reference)) throw MathError("extend_tp_automorphism: reference is not TP");
  if (!is_itn_fast(x)) throw MathError("extend_tp_automorphism: X is not ITN");
}

}  // namespace

ScaledMatrix extend_tp_automorphism(const MatrixMap& oracle, const RatMatrix& reference,
                                    const RatMatrix& x) {
  check_extension_inputs(reference, x);
  const ScaledMatrix t_ref = checked_oracle(oracle, reference);
  const ScaledMatrix t_ref_x = checked_oracle(oracle, RatMatrix(reference * x));
  return t_ref.inverse() * t_ref_x;
}

ScaledMatrix extend_tp_automorphism_right(const MatrixMap& oracle, const RatMatrix& reference,
                                          const RatMatrix& x) {
  check_extension_inputs(reference, x);
  const ScaledMatrix t_ref = checked_oracle(oracle, reference);
  const ScaledMatrix t_x_ref = checked_oracle(oracle, RatMatrix(x * reference));
  return t_x_ref * t_ref.inverse();
}

DomainReport intermediate_semigroup_check(const std::vector<RatMatrix>& samples,
                                    const AutomorphismSpec& spec) {
  spec.validate();
  DomainReport report;
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const RatMatrix& sample = samples[s];
    if (sample.rows() != spec.n || sample.cols() != spec.n)
      throw std::invalid_argument("intermediate_semigroup_check: sample " + std::to_string(s) +
                                  " has the wrong dimension");
    bool diag = is_diagonal(sample);
    for (Eigen::Index i = 0; diag && i < sample.rows(); ++i) diag = sample(i, i) > 0;
    const bool tp = !diag && is_tp_fekete(sample);
    if (!diag && !tp)
      throw MathError("intermediate_semigroup_check: sample " + std::to_string(s) +
                      " is neither TP nor a positive diagonal matrix");
    const ScaledMatrix image = apply(spec, sample);
    const bool ok = diag ? is_diagonal(image.body()) : is_tp_fekete(image.body());
    if (!ok) {
      report.pass = false;
      report.failing_sample = s;
      report.detail = diag ? "diagonal sample left the diagonal group"
                           : "TP sample left TP";
      return report;
    }
  }
  return report;
}

}  // namespace totpos
