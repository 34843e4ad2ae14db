#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "mzl/models.hpp"

using namespace mzl;

namespace {
constexpr double kPi = std::numbers::pi;

std::pair<long, long> random_valid_km(std::mt19937& rng) {
  std::uniform_int_distribution<long> kd(-24, 150);
  std::uniform_int_distribution<long> md(0, 25);
  while (true) {
    long k = 2 * kd(rng);
    long ell = split_weight(k).ell;
    long m = std::labs(ell) - ell + md(rng);
    if (monotone_hypothesis(k, m)) return {k, m};
  }
}
}  // namespace

TEST_CASE("endpoint identities for b and its variants") {
  std::mt19937 rng(42);
  for (int i = 0; i < 25; ++i) {
    auto [k, m] = random_valid_km(rng);
    CosModel base{k, m, Variant::base};
    CosModel kv{k, m, Variant::k_plus_12};
    CosModel mv{k, m, Variant::m_plus_1};
    double at_half = k * kPi / 4;
    CHECK_THAT(b_value(base, kPi / 2), Catch::Matchers::WithinAbs(at_half, 1e-9));
    CHECK_THAT(b_value(kv, kPi / 2) - 3 * kPi, Catch::Matchers::WithinAbs(at_half, 1e-9));
    CHECK_THAT(b_value(mv, kPi / 2), Catch::Matchers::WithinAbs(at_half, 1e-9));
    double end_base = b_value(base, 2 * kPi / 3);
    CHECK_THAT(b_value(kv, 2 * kPi / 3) - 3 * kPi,
               Catch::Matchers::WithinAbs(end_base + kPi, 1e-9));
    CHECK_THAT(b_value(mv, 2 * kPi / 3), Catch::Matchers::WithinAbs(end_base + kPi, 1e-9));
  }
}

TEST_CASE("b with m = 0 is linear") {
  CosModel model{30, 0, Variant::base};
  for (double t : {1.6, 1.8, 2.0}) CHECK(b_value(model, t) == 30 * t / 2);
}

TEST_CASE("cos model zeros against closed forms") {
  SECTION("k=12, m=0: only 7pi/12") {
    auto z = cos_model_zeros(CosModel{12, 0, Variant::base});
    REQUIRE(z.size() == 1);
    CHECK_THAT(z[0], Catch::Matchers::WithinAbs(7 * kPi / 12, 1e-13));
  }
  SECTION("k=4, m=0: empty") {
    CHECK(cos_model_zeros(CosModel{4, 0, Variant::base}).empty());
  }
  SECTION("k=0, m=5: arccos closed form") {
    auto z = cos_model_zeros(CosModel{0, 5, Variant::base});
    REQUIRE(z.size() == 5);
    for (int n = 0; n < 5; ++n) {
      double expected = std::acos(-(2.0 * n + 1) / 20.0);
      CHECK_THAT(z[static_cast<size_t>(n)], Catch::Matchers::WithinAbs(expected, 1e-13));
    }
  }
}

TEST_CASE("sandwich and derivative ordering along the arc") {
  std::mt19937 rng(4242);
  for (int i = 0; i < 20; ++i) {
    auto [k, m] = random_valid_km(rng);
    CosModel base{k, m, Variant::base};
    CosModel kv{k, m, Variant::k_plus_12};
    CosModel mv{k, m, Variant::m_plus_1};
    for (int s = 1; s < 50; ++s) {
      double t = kPi / 2 + (kPi / 6) * s / 50;
      double b = b_value(base, t);
      double bk = b_value(kv, t) - 3 * kPi;
      double bm = b_value(mv, t);
      CHECK(b < bk);
      CHECK(bk < b + kPi);
      CHECK(b < bm);
      CHECK(bm < b + kPi);
      CHECK(b_derivative(base, t) < b_derivative(kv, t));
      CHECK(b_derivative(base, t) < b_derivative(mv, t));
    }
  }
}

TEST_CASE("variant models have exactly one more zero") {
  std::mt19937 rng(77);
  for (int i = 0; i < 25; ++i) {
    auto [k, m] = random_valid_km(rng);
    size_t base_count = cos_model_zeros(CosModel{k, m, Variant::base}).size();
    CHECK(cos_model_zeros(CosModel{k, m, Variant::k_plus_12}).size() == base_count + 1);
    CHECK(cos_model_zeros(CosModel{k, m, Variant::m_plus_1}).size() == base_count + 1);
  }
}

TEST_CASE("interlacing conditions for cosine models") {
  CHECK(check_interlacing_conditions(24, 0, Variant::k_plus_12).pass);
  CHECK(check_interlacing_conditions(0, 3, Variant::m_plus_1).pass);
  CHECK(check_interlacing_conditions(100, 7, Variant::k_plus_12).pass);
  // hypothesis gate: k=2 has l=-1, so m >= 2 is required
  CHECK_THROWS_AS(check_interlacing_conditions(2, 0, Variant::m_plus_1), std::invalid_argument);
}

TEST_CASE("maximal gap bound") {
  CHECK_THAT(max_gap_bound(12, 0), Catch::Matchers::WithinAbs(kPi / 6, 1e-15));
  CHECK_THAT(max_gap_bound(0, 1), Catch::Matchers::WithinAbs(1 / std::sqrt(3.0), 1e-15));
  auto z = cos_model_zeros(CosModel{60, 2, Variant::base});
  REQUIRE(z.size() >= 2);
  double bound = max_gap_bound(60, 2);
  for (size_t i = 1; i < z.size(); ++i) CHECK(z[i] - z[i - 1] <= bound + 1e-12);
}

TEST_CASE("zero drift proposition") {
  CHECK(check_zero_drift(48, 0, Variant::k_plus_12).pass);
  CHECK(check_zero_drift(0, 6, Variant::m_plus_1).pass);
  // fewer than three starred zeros: vacuous pass
  CHECK(check_zero_drift(12, 0, Variant::k_plus_12).pass);
  CHECK_THROWS_AS(check_zero_drift(-24, 4, Variant::k_plus_12), std::invalid_argument);
  std::mt19937 rng(99);
  for (int i = 0; i < 15; ++i) {
    auto [k, m] = random_valid_km(rng);
    if (k >= 0) CHECK(check_zero_drift(k, m, Variant::k_plus_12).pass);
    CHECK(check_zero_drift(k, m, Variant::m_plus_1).pass);
  }
}

TEST_CASE("residue model H_k") {
  SECTION("H_k equals the positive residue term at the cosine zeros") {
    for (long k : {50L, 100L, 204L}) {
      // cancellation noise in 2cos(k theta/2) at a double-rounded zero is ~ k*ulp
      double noise = 5e-15 * static_cast<double>(k);
      for (double astar : cos_halfk_zeros(k, 7 * kPi / 12, 2 * kPi / 3)) {
        double expected = std::pow(2 * std::cos(astar / 2), -(double)k);
        CHECK_THAT(h_value(k, astar), Catch::Matchers::WithinAbs(expected, noise));
        if (expected > 10 * noise) CHECK(h_value(k, astar) > 0);
      }
    }
  }
  SECTION("zeros stay within pi/(3k) of the matching cosine zeros") {
    for (long k = 50; k <= 300; k += 2) {
      auto hz = h_model_zeros(k);
      auto cz = cos_halfk_zeros(k, 7 * kPi / 12 - kPi / (2 * k), 2 * kPi / 3);
      for (double a : hz) {
        double best = 1e9;
        for (double astar : cz) best = std::min(best, std::fabs(a - astar));
        CHECK(best < kPi / (3 * k));
      }
    }
  }
  SECTION("zeros of H_100 interlace with zeros of H_112") {
    auto a = h_model_zeros(100);
    auto b = h_model_zeros(112);
    std::vector<std::pair<double, int>> merged;
    for (double t : a) merged.push_back({t, 0});
    for (double t : b) merged.push_back({t, 1});
    std::sort(merged.begin(), merged.end());
    for (size_t i = 1; i < merged.size(); ++i) CHECK(merged[i].second != merged[i - 1].second);
  }
}

TEST_CASE("linear model near pi/2") {
  CHECK_THAT(linear_model(40, 3, kPi / 2), Catch::Matchers::WithinAbs(10 * kPi, 1e-12));
  SECTION("m = 0: L equals b identically") {
    for (double t : {1.6, 1.8, 2.0})
      CHECK_THAT(linear_model_remainder(24, 0, t), Catch::Matchers::WithinAbs(0.0, 1e-12));
  }
  SECTION("remainder is nonnegative and increasing for m > 0") {
    double prev = -1;
    for (int s = 1; s <= 60; ++s) {
      double t = kPi / 2 + (kPi / 6) * s / 61;
      double r = linear_model_remainder(8, 5, t);
      CHECK(r >= 0);
      CHECK(r > prev);
      prev = r;
    }
  }
}
