#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mzl/series.hpp"

using namespace mzl;

namespace {

// Independent Bernoulli oracle: Akiyama-Tanigawa transform, a different
// algorithm from the recurrence used by the library.
Rational bernoulli_at_oracle(int n) {
  std::vector<Rational> a(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) a[static_cast<size_t>(j)] = Rational(1, j + 1);
  for (int i = 1; i <= n; ++i)
    for (int j = 0; j <= n - i; ++j)
      a[static_cast<size_t>(j)] =
          Rational(j + 1) * (a[static_cast<size_t>(j)] - a[static_cast<size_t>(j + 1)]);
  return a[0];
}

ExactSeries random_series(std::mt19937& rng, long lead, long trunc) {
  std::uniform_int_distribution<long> coeff(-9, 9);
  std::vector<Rational> c;
  for (long n = lead; n <= trunc; ++n) c.emplace_back(coeff(rng));
  return ExactSeries(lead, trunc, std::move(c));
}

}  // namespace

TEST_CASE("bernoulli numbers match the independent oracle") {
  CHECK(bernoulli(0) == Rational(1));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(4) == Rational(-1, 30));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  for (int n = 0; n <= 30; n += 2) CHECK(bernoulli(n) == bernoulli_at_oracle(n));
  CHECK_THROWS_AS(bernoulli(3), std::invalid_argument);
  CHECK_THROWS_AS(bernoulli(-2), std::invalid_argument);
}

TEST_CASE("eisenstein expansions") {
  SECTION("E_0 = 1") {
    ExactSeries e0 = eisenstein(0, 5);
    CHECK(e0.coeff(0) == 1);
    for (long n = 1; n <= 5; ++n) CHECK(e0.coeff(n) == 0);
  }
  SECTION("E_4 through q^2") {
    ExactSeries e4 = eisenstein(4, 2);
    CHECK(e4.coeff(0) == 1);
    CHECK(e4.coeff(1) == 240);
    CHECK(e4.coeff(2) == 2160);
  }
  SECTION("E_6 through q^1") {
    ExactSeries e6 = eisenstein(6, 1);
    CHECK(e6.coeff(0) == 1);
    CHECK(e6.coeff(1) == -504);
  }
  SECTION("weights outside the family are rejected") {
    CHECK_THROWS_AS(eisenstein(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(eisenstein(5, 4), std::invalid_argument);
    CHECK_THROWS_AS(eisenstein(-4, 4), std::invalid_argument);
  }
  SECTION("integer coefficients for the small weights") {
    for (long k : {4L, 6L, 8L, 10L, 14L}) {
      ExactSeries e = eisenstein(k, 24);
      for (long n = 0; n <= 24; ++n) CHECK(is_integer(e.coeff(n)));
    }
  }
}

TEST_CASE("delta expansion and defining identity") {
  ExactSeries d = delta(4);
  CHECK(d.lead() == 1);
  CHECK(d.coeff(1) == 1);
  CHECK(d.coeff(2) == -24);
  CHECK(d.coeff(3) == 252);
  CHECK(d.coeff(4) == -1472);

  // E_4^3 - E_6^2 = 1728 Delta, exactly, through q^64
  ExactSeries e4 = eisenstein(4, 64);
  ExactSeries e6 = eisenstein(6, 64);
  ExactSeries lhs = e4 * e4 * e4 - e6 * e6;
  CHECK(lhs == delta(64) * Rational(1728));

  CHECK_THROWS_AS(delta(0), std::invalid_argument);
}

TEST_CASE("j expansion and defining identity") {
  ExactSeries j = jfunction(1);
  CHECK(j.lead() == -1);
  CHECK(j.coeff(-1) == 1);
  CHECK(j.coeff(0) == 744);
  CHECK(j.coeff(1) == 196884);

  // j * Delta = E_4^3 through q^64
  ExactSeries e4 = eisenstein(4, 64);
  CHECK(jfunction(64) * delta(66) == e4 * e4 * e4);
}

TEST_CASE("series ring operations") {
  SECTION("(1+q)(1-q) = 1-q^2") {
    ExactSeries a(0, 4, {Rational(1), Rational(1), Rational(0), Rational(0), Rational(0)});
    ExactSeries b(0, 4, {Rational(1), Rational(-1), Rational(0), Rational(0), Rational(0)});
    ExactSeries p = a * b;
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(1) == 0);
    CHECK(p.coeff(2) == -1);
    CHECK(p.coeff(3) == 0);
  }
  SECTION("Delta * Delta^{-1} = 1 through the valid range") {
    ExactSeries d = delta(16);
    ExactSeries p = d * d.inverse();
    CHECK(p.lead() == 0);
    CHECK(p.coeff(0) == 1);
    for (long n = 1; n <= p.trunc(); ++n) CHECK(p.coeff(n) == 0);
  }
  SECTION("Delta^2 has lead 2") {
    CHECK(delta(8).pow(2).lead() == 2);
    CHECK(delta(8).pow(2).coeff(2) == 1);
  }
  SECTION("negative powers require an invertible leading coefficient") {
    ExactSeries zero(0, 3, {Rational(0), Rational(0), Rational(0), Rational(0)});
    CHECK_THROWS_AS(zero.inverse(), std::invalid_argument);
  }
}

TEST_CASE("truncation bookkeeping follows the min rule") {
  std::mt19937 rng(20240811);
  for (int iter = 0; iter < 50; ++iter) {
    std::uniform_int_distribution<long> leads(-3, 3);
    long la = leads(rng), lb = leads(rng);
    ExactSeries a = random_series(rng, la, la + 6);
    ExactSeries b = random_series(rng, lb, lb + 8);
    ExactSeries p = a * b;
    CHECK(p.trunc() == std::min(a.trunc() + b.lead(), b.trunc() + a.lead()));
    CHECK(p.lead() == a.lead() + b.lead());

    // coefficients inside the certified window agree with a wider computation
    ExactSeries aw = random_series(rng, la, la + 12);
    ExactSeries bw = random_series(rng, lb, lb + 12);
    ExactSeries narrow = ExactSeries(la, la + 5, std::vector<Rational>(aw.coeffs().begin(),
                                                                       aw.coeffs().begin() + 6)) *
                         bw;
    ExactSeries wide = aw * bw;
    for (long n = narrow.lead(); n <= narrow.trunc(); ++n) CHECK(narrow.coeff(n) == wide.coeff(n));
  }
}

TEST_CASE("ring laws hold exactly on random series") {
  std::mt19937 rng(987654);
  for (int iter = 0; iter < 30; ++iter) {
    ExactSeries a = random_series(rng, 0, 8);
    ExactSeries b = random_series(rng, 0, 8);
    ExactSeries c = random_series(rng, 0, 8);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
  }
}
