// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 only if all pass.

#include "totpos/automorph.hpp"
#include "totpos/classify.hpp"
#include "totpos/factor.hpp"
#include "totpos/harness.hpp"
#include "totpos/io.hpp"
#include "totpos/minors.hpp"
#include "totpos/structure.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace totpos;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) note << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

std::mt19937_64 stream(std::uint64_t criterion) { return std::mt19937_64(property_seed(2024, "acceptance-" + std::to_string(criterion))); }

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
Rat small_rat(std::mt19937_64& rng, int lo, int hi, int den) { return Rat(uniform(rng, lo, hi), uniform(rng, 1, den)); }

RatMatrix rational_matrix(std::mt19937_64& rng, int rows, int cols, int lo, int hi) {
  RatMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = small_rat(rng, lo, hi, 6);
  return m;
}

std::string dump(const RatMatrix& m) { return io::to_json(m).dump(); }

// 1. Factorization round trip.
void round_trip(Outcome& o) {
  auto rng = stream(1);
  int count = 0;
  for (int n = 2; n <= 6; ++n)
    for (int s = 0; s < 500; ++s, ++count) {
      const RatMatrix a = random_itn(n, rng, s % 2 == 0);
      o.require(synthesize(factorize(a)) == a, dump(a));
    }
  o.note << count << " matrices, n=2..6";
}

// 2. Positive parameters exactly when TP.
void stratification(Outcome& o) {
  auto rng = stream(2);
  int positive = 0, boundary = 0;
  for (int n = 2; n <= 5; ++n)
    for (int s = 0; s < 200; ++s) {
      const auto f = random_factorization(n, rng, s % 3 == 0);
      const bool tp = is_tp(synthesize(f));
      o.require(tp == f.all_positive(), io::to_json(f).dump());
      (f.all_positive() ? positive : boundary)++;
    }
  o.require(positive > 0 && boundary > 0, "both directions exercised");
  o.note << positive << " positive and " << boundary << " planted-zero parameter sets";
}

// 3. Fast classifiers against full minor enumeration.
void classifier_agreement(Outcome& o) {
  auto rng = stream(3);
  int count = 0;
  for (int n = 2; n <= 5; ++n)
    for (int s = 0; s < 500; ++s, ++count) {
      RatMatrix a;
      switch (s % 4) {
        case 0: a = rational_matrix(rng, n, n, -2, 8); break;
        case 1: a = random_itn(n, rng, false); break;
        case 2: a = random_itn(n, rng, true); break;
        default:
          a = random_itn(n, rng, false);
          a.row(uniform(rng, 1, n - 1)) = a.row(0);
      }
      const auto label = classify_full(a).label;
      o.require(is_tp_fekete(a) == (label == ClassLabel::TP), "fekete " + dump(a));
      o.require(is_itn_fast(a) == (label == ClassLabel::TP || label == ClassLabel::ITN_not_TP),
                "neville " + dump(a));
    }
  o.note << count << " mixed samples, n=2..5";
}

// 4. TP times ITN is TP; Cauchy-Binet.
void closure(Outcome& o) {
  auto rng = stream(4);
  for (int n = 2; n <= 5; ++n)
    for (int s = 0; s < 200; ++s) {
      const RatMatrix a = random_itn(n, rng, true);
      const RatMatrix x = random_itn(n, rng, s % 2 == 0);
      o.require(is_tp(RatMatrix(a * x)) && is_tp(RatMatrix(x * a)), dump(a) + " " + dump(x));
    }
  int pairs = 0;
  for (int n = 2; n <= 5; ++n)
    for (int m = 1; m < n; ++m)
      for (int s = 0; s < 200; ++s, ++pairs) {
        const RatMatrix a = rational_matrix(rng, m, n, -6, 6);
        const RatMatrix b = rational_matrix(rng, n, m, -6, 6);
        o.require(cauchy_binet_check(a, b).equal, dump(a) + " " + dump(b));
      }
  o.note << "800 product pairs, " << pairs << " rectangular Cauchy-Binet pairs";
}

// 5. Principal minors.
void principal_minors(Outcome& o) {
  auto rng = stream(5);
  int count = 0;
  for (int n = 2; n <= 5; ++n)
    for (int s = 0; s < 500; ++s, ++count) {
      const RatMatrix a = random_itn(n, rng, s % 2 == 0);
      o.require(principal_minors_positive(a).positive, dump(a));
    }
  o.note << count << " ITN samples";
}

// 6. Homomorphism and class preservation.
void homomorphism(Outcome& o) {
  auto rng = stream(6);
  int pairs = 0;
  for (int s = 0; s < 100; ++s) {
    const int n = 2 + s % 4;
    const auto spec = random_spec(n, rng);
    const auto report = verify_homomorphism(spec, 200, rng());
    pairs += report.trials_run;
    o.require(report.pass, io::to_json(spec).dump() +
                               (report.counterexample ? " " + io::to_json(*report.counterexample).dump() : ""));
  }
  o.note << "100 specs, " << pairs << " pairs";
}

// 7. Elementary bidiagonal generators go to generators at the predicted site.
void generators(Outcome& o) {
  auto rng = stream(7);
  int images = 0;
  for (int s = 0; s < 100; ++s) {
    const int n = 2 + s % 4;
    const auto spec = random_spec(n, rng);
    for (auto kind : {BidiagonalKind::lower, BidiagonalKind::upper})
      for (int k = 1; k < n; ++k, ++images) {
        const Rat w = small_rat(rng, 1, 8, 8);
        const ScaledMatrix image = apply(spec, to_matrix(ElementaryBidiagonal{n, kind, k, w}));
        const bool flip = spec.orientation == Orientation::antidiagonal;
        const BidiagonalKind want_kind =
            flip ? (kind == BidiagonalKind::lower ? BidiagonalKind::upper : BidiagonalKind::lower) : kind;
        const int site = flip ? n - k : k;
        const int row = want_kind == BidiagonalKind::lower ? site : site - 1;
        const int col = want_kind == BidiagonalKind::lower ? site - 1 : site;
        RatMatrix rest = image.body() - identity(n);
        const bool weight_ok = rest(row, col) > 0;
        rest(row, col) = 0;
        o.require(image.scale().is_one() && weight_ok && rest.isZero(), io::to_json(spec).dump());
      }
  }
  o.note << images << " generator images under 100 specs";
}

// 8. Recovery from generator tables, and rejection of perturbed tables.
void recovery(Outcome& o) {
  auto rng = stream(8);
  int rejected = 0;
  for (int n = 2; n <= 5; ++n)
    for (int s = 0; s < 100; ++s) {
      const auto spec = random_spec(n, rng);
      auto table = tabulate(spec);
      o.require(recover(table) == spec.normalized(), io::to_json(spec).dump());
      const auto e = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(table.entries.size()) - 1));
      auto& entry = table.entries[e];
      RatMatrix body = entry.image.body();
      body(uniform(rng, 0, n - 1), uniform(rng, 0, n - 1)) += small_rat(rng, 1, 4, 4);
      entry.image = ScaledMatrix(entry.image.scale(), body);
      try {
        recover(table);
        o.require(false, "perturbed entry " + std::to_string(e) + " accepted for " + io::to_json(spec).dump());
      } catch (const TableInconsistency& err) {
        o.require(err.entry() < table.entries.size() &&
                      std::string(err.what()).find("table entry") != std::string::npos,
                  "unnamed entry");
        ++rejected;
      }
    }
  o.note << "400 tables recovered, " << rejected << " perturbed tables rejected";
}

// 9. Extension from TP agrees with apply and does not depend on the reference.
void extension(Outcome& o) {
  auto rng = stream(9);
  for (int s = 0; s < 200; ++s) {
    const int n = 2 + s % 4;
    const auto spec = random_spec(n, rng);
    const MatrixMap oracle = as_map(spec);
    const RatMatrix x = random_itn(n, rng, false);
    const ScaledMatrix expected = apply(spec, x);
    for (int r = 0; r < 3; ++r) {
      const RatMatrix reference = random_itn(n, rng, true);
      o.require(extend_tp_automorphism(oracle, reference, x) == expected, dump(x));
      o.require(extend_tp_automorphism_right(oracle, reference, x) == expected, dump(x));
    }
  }
  o.note << "200 inputs, 3 references each, both handed forms";
}

// 10. Centralizers, maximal subgroup, C_k commuting, 2x2 conjugation.
void structure(Outcome& o) {
  auto rng = stream(10);
  for (int n = 3; n <= 6; ++n)
    for (int s = 0; s < 1000; ++s) {
      RatVector d(n);
      for (int i = 0; i < n; ++i) d(i) = uniform(rng, 1, 3);
      const RatMatrix dm = diagonal(d);
      RatMatrix x = random_itn(n, rng, false);
      if (s % 3 != 0) {
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            if (d(i) != d(j)) x(i, j) = 0;
        if (s % 3 == 2) x(uniform(rng, 0, n - 1), uniform(rng, 0, n - 1)) += small_rat(rng, -2, 2, 3);
      }
      o.require(block_membership(dm, x) == in_centralizer(dm, x), dump(dm) + " " + dump(x));
    }

  int witnesses = 0;
  for (int n = 2; n <= 6; ++n)
    for (int s = 0; s < 200; ++s) {
      const RatMatrix a = random_itn(n, rng, s % 2 == 0);
      if (is_diagonal(a)) continue;
      const auto w = maximal_subgroup_witness(a);
      o.require(w.value < 0 && inverse(a)(w.row - 1, w.col - 1) == w.value, dump(a));
      ++witnesses;
    }

  for (int n = 4; n <= 6; ++n)
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j) {
        bool all = true;
        for (int s = 0; s < 50 && all; ++s) {
          const RatMatrix x = random_ck_element(n, i, rng).realize();
          const RatMatrix y = random_ck_element(n, j, rng).realize();
          all = RatMatrix(x * y) == RatMatrix(y * x);
        }
        o.require(all == ck_commute_expected(n, i, j),
                  "C_" + std::to_string(i) + ", C_" + std::to_string(j) + " at n=" + std::to_string(n));
      }

  int two_by_two = 0;
  for (int s = 0; s < 300; ++s) {
    RatMatrix a;
    const Rat diag_entry = small_rat(rng, 1, 8, 8);
    switch (s % 3) {
      case 0: a = random_itn(2, rng, false); break;
      case 1: a = identity(2) * diag_entry + unit(2, 1, 2) * small_rat(rng, 1, 8, 8); break;
      default: a = identity(2) * diag_entry + unit(2, 2, 1) * small_rat(rng, 1, 8, 8);
    }
    if (is_diagonal(a)) continue;
    bool all = true;
    for (int c = 0; c < 50 && all; ++c) {
      RatVector dv(2);
      dv << small_rat(rng, 1, 8, 8), small_rat(rng, 1, 8, 8);
      all = in_centralizer(a, RatMatrix(diagonal(dv) * a * inverse(diagonal(dv))));
    }
    o.require(two_by_two_conjugation_test(a) == all, dump(a));
    ++two_by_two;
  }
  o.note << "4000 centralizer pairs, " << witnesses << " subgroup witnesses, C_k pattern n=4..6, "
         << two_by_two << " 2x2 samples";
}

// 11. Constructive density.
void density(Outcome& o) {
  auto rng = stream(11);
  const Rat eps(1, 1000);
  for (int s = 0; s < 100; ++s) {
    const int n = 2 + s % 4;
    const RatMatrix a = random_itn(n, rng, false);
    const RatMatrix b = whitney_perturb(a, eps);
    o.require(is_tp(b) && max_entry_distance(a, b) < eps, dump(a));
  }
  o.note << "100 inputs, eps=1/1000";
}

// 12. Every canned defect is caught by the battery.
void mutation(Outcome& o) {
  for (auto m : {Mutation::transpose_in_apply, Mutation::dropped_scalar, Mutation::wrong_whitney_order}) {
    RunConfig config;
    config.mutation = m;
    const auto reports = check_all(config);
    int failing = 0;
    bool serialized = false;
    for (const auto& r : reports)
      if (!r.pass()) {
        ++failing;
        for (const auto& f : r.failures) serialized = serialized || !io::json::parse(f).empty();
      }
    o.require(failing > 0 && serialized, std::string(to_string(m)) + " went unnoticed");
    o.note << to_string(m) << ": " << failing << " failing properties; ";
  }
  RunConfig clean;
  o.require(all_pass(check_all(clean)), "clean battery failed");
  o.note << "clean run passes";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, void (*)(Outcome&)>> criteria = {
      {"factorization round trip", round_trip},
      {"positive parameters iff TP", stratification},
      {"classifier oracle agreement", classifier_agreement},
      {"product closure and Cauchy-Binet", closure},
      {"principal minors of ITN matrices", principal_minors},
      {"automorphism homomorphism law", homomorphism},
      {"generator preservation", generators},
      {"recovery from generator tables", recovery},
      {"extension from TP to ITN", extension},
      {"structure lemmas", structure},
      {"constructive density", density},
      {"mutation sensitivity", mutation},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.note << "exception: " << e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::printf("%s criterion %2zu  %-36s %7.2fs  %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), seconds, o.note.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%s: %zu of %zu criteria passed\n", failed == 0 ? "ACCEPTED" : "REJECTED",
              criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
