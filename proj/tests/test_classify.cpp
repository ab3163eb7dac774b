#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "totpos/classify.hpp"
#include "totpos/factor.hpp"

using namespace totpos;
using oracle::make;

namespace {

ClassLabel oracle_label(const RatMatrix& a) {
  switch (oracle::minor_signs(a)) {
    case oracle::Sign::some_negative: return ClassLabel::NOT_TN;
    case oracle::Sign::all_positive: return ClassLabel::TP;
    default: return oracle::det(a) == 0 ? ClassLabel::TN_singular : ClassLabel::ITN_not_TP;
  }
}

const RatMatrix kVandermonde = make(3, 3, {1, 1, 1, 1, 2, 4, 1, 3, 9});

}  // namespace

TEST_CASE("classify_full examples") {
  auto c = classify_full(identity(2));
  CHECK(c.label == ClassLabel::ITN_not_TP);
  REQUIRE(c.witness);
  CHECK(c.witness->index == MinorIndex{{1}, {2}});
  CHECK(c.witness->value == 0);

  c = classify_full(make(2, 2, {1, 1, 1, 1}));
  CHECK(c.label == ClassLabel::TN_singular);
  REQUIRE(c.witness);
  CHECK(c.witness->index == MinorIndex{{1, 2}, {1, 2}});
  CHECK(c.witness->value == 0);

  c = classify_full(make(2, 2, {2, 1, 1, 1}));
  CHECK(c.label == ClassLabel::TP);
  CHECK_FALSE(c.witness);

  c = classify_full(make(2, 2, {1, 2, 1, 1}));
  CHECK(c.label == ClassLabel::NOT_TN);
  REQUIRE(c.witness);
  CHECK(c.witness->value < 0);

  CHECK_THROWS_AS(classify_full(RatMatrix(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(classify_full(identity(13)), std::invalid_argument);
}

TEST_CASE("certificate witnesses are real minors") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + t % 4;
    const RatMatrix a = t % 2 ? oracle::random_rational(rng, n, n, -1, 4) : random_itn(n, rng, false);
    const auto c = classify_full(a);
    REQUIRE(c.label == oracle_label(a));
    if (c.label == ClassLabel::TP) {
      REQUIRE_FALSE(c.witness);
      continue;
    }
    REQUIRE(c.witness);
    REQUIRE(minor(a, c.witness->index) == c.witness->value);
    if (c.label == ClassLabel::NOT_TN) REQUIRE(c.witness->value < 0);
    else REQUIRE(c.witness->value == 0);
  }
}

TEST_CASE("label strings round trip") {
  for (auto l : {ClassLabel::TP, ClassLabel::ITN_not_TP, ClassLabel::TN_singular, ClassLabel::NOT_TN})
    CHECK(parse_class_label(to_string(l)) == l);
  CHECK_THROWS_AS(parse_class_label("TN"), std::invalid_argument);
}

TEST_CASE("Fekete examples") {
  CHECK(is_tp_fekete(make(2, 2, {2, 1, 1, 1})));
  CHECK_FALSE(is_tp_fekete(identity(3)));
  CHECK(is_tp_fekete(kVandermonde));
  CHECK(classify_full(kVandermonde).label == ClassLabel::TP);
}

TEST_CASE("is_itn_fast examples") {
  CHECK(is_itn_fast(make(2, 2, {1, 0, 3, 1})));
  CHECK_FALSE(is_itn_fast(make(2, 2, {1, 1, 1, 1})));
  CHECK_FALSE(is_itn_fast(make(2, 2, {0, 1, 1, 0})));
}

TEST_CASE("fast tests agree with the brute-force oracle") {
  std::mt19937_64 rng(32);
  for (int n = 1; n <= 4; ++n)
    for (int t = 0; t < 150; ++t) {
      RatMatrix a;
      switch (t % 4) {
        case 0: a = oracle::random_rational(rng, n, n, -1, 5); break;
        case 1: a = random_itn(n, rng, false); break;
        case 2: a = random_itn(n, rng, true); break;
        default:
          a = random_itn(n, rng, false);
          a.row(n - 1) = a.row(0);
      }
      const ClassLabel expected = oracle_label(a);
      REQUIRE(is_tp_fekete(a) == (expected == ClassLabel::TP));
      REQUIRE(is_itn_fast(a) == (expected == ClassLabel::TP || expected == ClassLabel::ITN_not_TP));
    }
}

TEST_CASE("principal minors") {
  CHECK(principal_minors_positive(diagonal((RatVector(3) << 1, 2, 3).finished())).positive);
  const auto r = principal_minors_positive(make(2, 2, {0, 1, 0, 1}));
  CHECK_FALSE(r.positive);
  REQUIRE(r.first_failure);
  CHECK(*r.first_failure == MinorIndex{{1}, {1}});

  std::mt19937_64 rng(33);
  for (int n = 1; n <= 5; ++n)
    for (int t = 0; t < 40; ++t) REQUIRE(principal_minors_positive(random_itn(n, rng, false)).positive);
}

TEST_CASE("tp_approx_identity") {
  CHECK(tp_approx_identity(1, Rat(1, 3)) == make(1, 1, {1}));
  CHECK(tp_approx_identity(2, Rat(1, 2)) == make(2, 2, {1, Rat(1, 2), Rat(1, 2), 1}));
  const RatMatrix q = tp_approx_identity(3, Rat(1, 4));
  CHECK(q(0, 2) == Rat(1, 256));
  CHECK(oracle_label(q) == ClassLabel::TP);
  CHECK_THROWS_AS(tp_approx_identity(2, Rat(1)), std::invalid_argument);
  CHECK_THROWS_AS(tp_approx_identity(2, Rat(0)), std::invalid_argument);
}

TEST_CASE("whitney_perturb") {
  RatMatrix b = whitney_perturb(identity(2), Rat(1, 10));
  CHECK(is_tp(b));
  CHECK(max_entry_distance(b, identity(2)) < Rat(1, 10));

  const RatMatrix lower = make(2, 2, {1, 0, 1, 1});
  b = whitney_perturb(lower, Rat(1, 100));
  CHECK(is_tp(b));
  CHECK(max_entry_distance(b, lower) < Rat(1, 100));

  CHECK_THROWS_AS(whitney_perturb(make(2, 2, {1, 1, 1, 1}), Rat(1, 10)), MathError);
  CHECK_THROWS_AS(whitney_perturb(identity(2), Rat(0)), std::invalid_argument);

  // Deterministic: same input, same output.
  CHECK(whitney_perturb(lower, Rat(1, 100)) == b);

  std::mt19937_64 rng(34);
  for (int n = 1; n <= 4; ++n)
    for (int t = 0; t < 10; ++t) {
      const RatMatrix a = random_itn(n, rng, false);
      const RatMatrix p = whitney_perturb(a, Rat(1, 1000));
      REQUIRE(oracle_label(p) == ClassLabel::TP);
      REQUIRE(max_entry_distance(a, p) < Rat(1, 1000));
    }
}
