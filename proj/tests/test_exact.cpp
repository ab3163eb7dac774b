#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "totpos/minors.hpp"
#include "totpos/radical.hpp"

using namespace totpos;
using oracle::make;

TEST_CASE("parse and print rationals") {
  CHECK(parse_rat("3/6") == Rat(1, 2));
  CHECK(parse_rat("-4") == Rat(-4));
  CHECK(parse_rat("+2/3") == Rat(2, 3));
  CHECK(to_string(Rat(-6, 4)) == "-3/2");
  CHECK(to_string(Rat(5)) == "5");
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("2/-3"), std::invalid_argument);
}

TEST_CASE("minor examples") {
  CHECK(minor(identity(3), {{1, 2}, {1, 2}}) == 1);
  CHECK(minor(make(2, 2, {2, 1, 1, 1}), {{1, 2}, {1, 2}}) == 1);
  const RatMatrix vandermonde = make(3, 3, {1, 1, 1, 1, 2, 4, 1, 3, 9});
  CHECK(minor(vandermonde, {{1, 2, 3}, {1, 2, 3}}) == 2);
  CHECK(oracle::det(vandermonde) == 2);
}

TEST_CASE("minor index validation") {
  const RatMatrix a = identity(3);
  CHECK_THROWS_AS(minor(a, {{1, 4}, {1, 2}}), std::out_of_range);
  CHECK_THROWS_AS(minor(a, {{1, 2}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(minor(a, {{2, 1}, {1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(minor(a, {{}, {}}), std::invalid_argument);
}

TEST_CASE("determinants agree with cofactor expansion for n <= 4") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 4; ++n)
    for (int t = 0; t < 60; ++t) {
      RatMatrix a = oracle::random_rational(rng, n, n);
      if (t % 5 == 0 && n > 1) a.row(n - 1) = a.row(0) * Rat(3, 2);  // singular
      REQUIRE(determinant(a) == oracle::det(a));
    }
}

TEST_CASE("every minor agrees with the oracle regardless of enumeration order") {
  std::mt19937_64 rng(12);
  for (int n = 1; n <= 4; ++n) {
    const RatMatrix a = oracle::random_rational(rng, n, n);
    int visited = 0;
    for_each_minor(a, [&](const MinorIndex& idx, const Rat& value) {
      std::uint32_t rows = 0, cols = 0;
      for (int i : idx.alpha) rows |= 1U << (i - 1);
      for (int j : idx.beta) cols |= 1U << (j - 1);
      CHECK(value == oracle::minor_mask(a, rows, cols));
      // Permuting rows and columns of the submatrix only flips the sign.
      const RatMatrix sub = submatrix(a, idx);
      RatMatrix reversed = sub.colwise().reverse().rowwise().reverse();
      CHECK(determinant(reversed) == value);
      ++visited;
      return true;
    });
    int expected = 0;
    for (int k = 1; k <= n; ++k) expected += static_cast<int>(subsets(n, k).size() * subsets(n, k).size());
    CHECK(visited == expected);
  }
}

TEST_CASE("minor enumeration cap") {
  CHECK_THROWS_AS(for_each_minor(identity(13), [](const MinorIndex&, const Rat&) { return true; }),
                  std::invalid_argument);
}

TEST_CASE("subset enumeration") {
  CHECK(subsets(3, 2) == std::vector<IndexSet>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(contiguous_subsets(4, 2) == std::vector<IndexSet>{{1, 2}, {2, 3}, {3, 4}});
  CHECK(subsets(4, 0).size() == 1);
}

TEST_CASE("Cauchy-Binet examples") {
  auto r = cauchy_binet_check(identity(2), identity(2));
  CHECK(r.equal);
  CHECK(r.product_determinant == 1);

  const RatMatrix a = make(2, 3, {1, 1, 0, 0, 1, 1});
  r = cauchy_binet_check(a, a.transpose());
  CHECK(r.equal);
  CHECK(r.product_determinant == 3);
  CHECK(r.expansion == 3);
  CHECK(oracle::cauchy_binet_sum(a, a.transpose()) == 3);

  r = cauchy_binet_check(make(2, 2, {1, 2, 3, 4}), identity(2));
  CHECK(r.equal);
  CHECK(r.expansion == -2);

  CHECK_THROWS_AS(cauchy_binet_check(identity(2), identity(3)), std::invalid_argument);
  CHECK_THROWS_AS(cauchy_binet_check(RatMatrix(3, 2), RatMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("Cauchy-Binet on random shapes m <= n <= 5") {
  std::mt19937_64 rng(13);
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; m <= n; ++m)
      for (int t = 0; t < 200; ++t) {
        const RatMatrix a = oracle::random_rational(rng, m, n);
        const RatMatrix b = oracle::random_rational(rng, n, m);
        const auto r = cauchy_binet_check(a, b);
        REQUIRE(r.equal);
        if (t < 5) {
          CHECK(r.product_determinant == oracle::det(oracle::multiply(a, b)));
          CHECK(r.expansion == oracle::cauchy_binet_sum(a, b));
        }
      }
}

TEST_CASE("inverse") {
  const RatMatrix a = make(2, 2, {2, 1, 1, 1});
  CHECK(inverse(a) == make(2, 2, {1, -1, -1, 2}));
  CHECK_THROWS_AS(inverse(make(2, 2, {1, 1, 1, 1})), MathError);
}

// -- radicals ------------------------------------------------------------------

RadicalScalar from(std::initializer_list<std::pair<int, Rat>> factors) {
  RadicalScalar::FactorMap m;
  for (const auto& [p, e] : factors) m[Integer(p)] = e;
  return RadicalScalar::from_factors(m);
}

TEST_CASE("radical multiplication examples") {
  CHECK(radical_mul(from({{2, Rat(1, 2)}}), from({{2, Rat(1, 2)}})) == from({{2, 1}}));
  CHECK(radical_mul(from({{3, Rat(1, 3)}}), from({{3, Rat(2, 3)}})) == from({{3, 1}}));
  CHECK(rational_root(Rat(12), 2) == from({{2, 1}, {3, Rat(1, 2)}}));
  CHECK(from({{2, Rat(1, 2)}}).str() == "2^(1/2)");
  CHECK(from({{2, Rat(1, 2)}, {3, -1}}).str() == "2^(1/2)*3^(-1)");
}

TEST_CASE("rational root examples") {
  CHECK(rational_root(Rat(1), 5).is_one());
  CHECK(rational_root(Rat(1), 5).factors().empty());
  CHECK(rational_root(Rat(4), 2) == from({{2, 1}}));
  CHECK(rational_root(Rat(8, 27), 3) == from({{2, 1}, {3, -1}}));
  CHECK(rational_root(Rat(8, 27), 3).to_rational() == Rat(2, 3));
  CHECK_FALSE(rational_root(Rat(2), 2).is_rational());
  CHECK_THROWS_AS(rational_root(Rat(0), 2), std::invalid_argument);
  CHECK_THROWS_AS(rational_root(Rat(-4), 2), std::invalid_argument);
  CHECK_THROWS_AS(rational_root(Rat(4), 0), std::invalid_argument);
}

TEST_CASE("factorization against the trial-division oracle") {
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<std::uint64_t> dist(2, 2'000'000);
  for (int t = 0; t < 300; ++t) {
    const std::uint64_t x = dist(rng);
    std::map<Integer, long> expected;
    for (const auto& [p, e] : oracle::prime_factors(x)) expected[Integer(p)] = e;
    REQUIRE(factorize(Integer(x)) == expected);
  }
}

TEST_CASE("factorization cap") {
  // A prime just above the bound is certified because trial division reaches its
  // square root; a product of two such primes is out of reach.
  const Integer p(1'000'003);
  CHECK(factorize(p).at(p) == 1);
  const Integer q(1'000'033);
  CHECK_THROWS_AS(factorize(p * q), FactorizationCapError);
  CHECK_THROWS_AS(RadicalScalar::from_factors({{Integer(4), Rat(1)}}), std::invalid_argument);
}

TEST_CASE("radical properties on random triples") {
  std::mt19937_64 rng(15);
  std::uniform_int_distribution<int> num(1, 60), den(1, 12), k(1, 6);
  auto draw = [&] { return rational_root(Rat(num(rng), den(rng)), k(rng)); };
  for (int t = 0; t < 300; ++t) {
    const auto s = draw(), u = draw(), v = draw();
    REQUIRE((s * u) * v == s * (u * v));
    REQUIRE(s * u == u * s);
    REQUIRE((s / s).is_one());
    const RadicalScalar product = s * u;
    for (const auto& [p, e] : product.factors()) REQUIRE(e != 0);
  }
}

TEST_CASE("root raised back recovers the factorization") {
  std::mt19937_64 rng(16);
  std::uniform_int_distribution<int> num(1, 5000), den(1, 300), kd(1, 7);
  for (int t = 0; t < 200; ++t) {
    const Rat x(num(rng), den(rng));
    const int k = kd(rng);
    const RadicalScalar root = rational_root(x, k);
    RadicalScalar power;
    for (int i = 0; i < k; ++i) power = radical_mul(power, root);
    REQUIRE(power.to_rational() == x);
    REQUIRE(power == RadicalScalar::from_rational(x));
  }
}

TEST_CASE("scaled matrix canonical form") {
  const RatMatrix body = make(2, 2, {2, 1, 1, 1});
  const ScaledMatrix m(rational_power(Rat(12), Rat(3, 2)), body);  // 12^{3/2} = 24 * 3^{1/2}
  CHECK(m.scale() == from({{3, Rat(1, 2)}}));
  CHECK(m.body() == RatMatrix(body * Rat(24)));
  // The same value reached another way has the same representation.
  const ScaledMatrix other(rational_root(Rat(3), 2), RatMatrix(body * Rat(24)));
  CHECK(m == other);
  CHECK(ScaledMatrix(from({{2, Rat(-1, 3)}}), identity(2)).scale() == from({{2, Rat(2, 3)}}));
  CHECK(ScaledMatrix(from({{2, Rat(-1, 3)}}), identity(2)).body() == RatMatrix(identity(2) / Rat(2)));
  CHECK_FALSE(m.to_rational());
  CHECK(ScaledMatrix(rational_root(Rat(4), 2), body).to_rational() == RatMatrix(body * Rat(2)));
  CHECK((m * m.inverse()) == ScaledMatrix(identity(2)));
}
