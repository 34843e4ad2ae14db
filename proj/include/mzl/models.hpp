#ifndef MZL_MODELS_HPP
#define MZL_MODELS_HPP

// The trigonometric surrogates used to approximate real traces on the arc:
//   b(theta)      = k theta / 2 - 2 pi m cos theta          (base)
//   b_{k+12}      = same with k -> k+12
//   b_{m+1}       = same with m -> m+1
//   H_k(theta)    = 2 cos(k theta / 2) + (2 cos(theta/2))^{-k}
//   L_{k,m}(theta)= k pi/4 + (k + 4 m pi)/2 (theta - pi/2)
// together with executable checks of the interlacing lemma for cosine
// zeros, the maximal gap bound, and the zero-drift proposition. These are
// surrogates, so all zero finding is double-precision monotone bisection
// to 1e-15 absolute.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "mzl/basis.hpp"

namespace mzl {

enum class Variant { base, k_plus_12, m_plus_1 };

struct CosModel {
  long k = 0;
  long m = 0;
  Variant variant = Variant::base;

  long eff_k() const { return variant == Variant::k_plus_12 ? k + 12 : k; }
  long eff_m() const { return variant == Variant::m_plus_1 ? m + 1 : m; }
};

struct ModelReport {
  bool pass = true;
  std::string detail;
  explicit operator bool() const { return pass; }
};

// m >= |l| - l, the hypothesis making b monotonically increasing on I.
inline bool monotone_hypothesis(long k, long m) {
  long ell = split_weight(k).ell;
  return m >= std::labs(ell) - ell;
}

inline double b_value(const CosModel& model, double theta) {
  return model.eff_k() * theta / 2 - 2 * std::numbers::pi * model.eff_m() * std::cos(theta);
}

inline double b_derivative(const CosModel& model, double theta) {
  return model.eff_k() / 2.0 + 2 * std::numbers::pi * model.eff_m() * std::sin(theta);
}

namespace detail {

template <typename F>
double bisect_increasing(double lo, double hi, double target, F&& f) {
  while (hi - lo > 1e-15) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // double resolution floor
    (f(mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

inline long ceil_div(long a, long b) { return a / b + (a % b != 0 && (a ^ b) > 0 ? 1 : 0); }
inline long floor_div(long a, long b) { return a / b - (a % b != 0 && (a ^ b) < 0 ? 1 : 0); }

}  // namespace detail

// All solutions of b(theta) = pi/2 mod pi in the open interval I, found by
// monotone bisection; requires the monotonicity hypothesis on (k, m).
inline std::vector<double> cos_model_zeros(const CosModel& model) {
  if (!monotone_hypothesis(model.eff_k(), model.eff_m()))
    throw std::invalid_argument("cos_model_zeros: hypothesis m >= |l| - l violated");
  long K = model.eff_k(), M = model.eff_m();
  // b(pi/2) = K pi/4 and b(2pi/3) = K pi/3 + M pi; zeros occur at odd
  // multiples of pi/2 strictly between. With H = K/2 the integer targets
  // are n with 2n+1 > H and 3(2n+1) < 2K + 6M.
  long n_min = detail::ceil_div(K / 2, 2);
  long n_max = detail::floor_div(2 * K + 6 * M - 4, 6);
  std::vector<double> zeros;
  const double pi = std::numbers::pi;
  for (long n = n_min; n <= n_max; ++n) {
    double target = (2 * n + 1) * pi / 2;
    zeros.push_back(detail::bisect_increasing(
        pi / 2, 2 * pi / 3, target, [&](double t) { return b_value(model, t); }));
  }
  return zeros;
}

// Upper bound 2 pi / (k + 2 sqrt(3) m pi) on consecutive cosine zero gaps.
inline double max_gap_bound(long k, long m) {
  if (!monotone_hypothesis(k, m))
    throw std::invalid_argument("max_gap_bound: hypothesis m >= |l| - l violated");
  return 2 * std::numbers::pi / (k + 2 * std::sqrt(3.0) * m * std::numbers::pi);
}

// The four sufficient conditions for interlacing of cos(b) and cos(b_*):
// first and last zero belong to b_*, no shared zeros, and exactly one
// zero of cos(b) between consecutive zeros of cos(b_*).
inline ModelReport check_interlacing_conditions(long k, long m, Variant variant) {
  if (variant == Variant::base)
    throw std::invalid_argument("check_interlacing_conditions: pick a starred variant");
  if (!monotone_hypothesis(k, m))
    throw std::invalid_argument("check_interlacing_conditions: hypothesis m >= |l| - l violated");
  std::vector<double> za = cos_model_zeros(CosModel{k, m, Variant::base});
  std::vector<double> zb = cos_model_zeros(CosModel{k, m, variant});
  ModelReport rep;
  auto fail = [&](const std::string& why) {
    rep.pass = false;
    if (!rep.detail.empty()) rep.detail += "; ";
    rep.detail += why;
  };
  if (!za.empty() && zb.empty()) fail("b_* has no zeros but b does");
  if (!za.empty() && !zb.empty()) {
    if (!(zb.front() < za.front())) fail("first zero does not belong to b_*");
    if (!(zb.back() > za.back())) fail("last zero does not belong to b_*");
  }
  for (double a : za)
    for (double b : zb)
      if (std::fabs(a - b) <= 1e-12) fail("shared zero at theta=" + std::to_string(a));
  for (size_t i = 0; i + 1 < zb.size(); ++i) {
    long inside = 0;
    for (double a : za)
      if (a > zb[i] && a < zb[i + 1]) ++inside;
    if (inside != 1)
      fail("gap (" + std::to_string(zb[i]) + ", " + std::to_string(zb[i + 1]) + ") holds " +
           std::to_string(inside) + " zeros of b");
  }
  return rep;
}

// Zero drift: beta_1 - alpha_1 < beta_2 - alpha_2 and
// alpha_2 - beta_1 > alpha_3 - beta_2 on every consecutive triple of b_*
// zeros with interleaved b zeros. Vacuous when fewer than three b_* zeros.
inline ModelReport check_zero_drift(long k, long m, Variant variant) {
  if (variant == Variant::base)
    throw std::invalid_argument("check_zero_drift: pick a starred variant");
  if (!monotone_hypothesis(k, m))
    throw std::invalid_argument("check_zero_drift: hypothesis m >= |l| - l violated");
  if (variant == Variant::k_plus_12 && k < 0)
    throw std::invalid_argument("check_zero_drift: k_plus_12 case requires k >= 0");
  std::vector<double> za = cos_model_zeros(CosModel{k, m, Variant::base});
  std::vector<double> zb = cos_model_zeros(CosModel{k, m, variant});
  ModelReport rep;
  if (zb.size() < 3) return rep;  // vacuous
  for (size_t i = 0; i + 2 < zb.size(); ++i) {
    double a1 = zb[i], a2 = zb[i + 1], a3 = zb[i + 2];
    const double* b1 = nullptr;
    const double* b2 = nullptr;
    for (const double& bz : za) {
      if (bz > a1 && bz < a2) b1 = &bz;
      if (bz > a2 && bz < a3) b2 = &bz;
    }
    if (!b1 || !b2) {
      rep.pass = false;
      rep.detail = "missing interleaved zero in triple starting at " + std::to_string(a1);
      return rep;
    }
    if (!(*b1 - a1 < *b2 - a2)) {
      rep.pass = false;
      rep.detail = "left distances fail at triple starting at " + std::to_string(a1);
      return rep;
    }
    if (!(a2 - *b1 > a3 - *b2)) {
      rep.pass = false;
      rep.detail = "right distances fail at triple starting at " + std::to_string(a1);
      return rep;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Residue model H_k

inline double h_value(long k, double theta) {
  return 2 * std::cos(k * theta / 2.0) + std::pow(2 * std::cos(theta / 2.0), -(double)k);
}

inline double h_derivative(long k, double theta) {
  return -(double)k * std::sin(k * theta / 2.0) +
         (double)k * std::sin(theta / 2.0) *
             std::pow(2 * std::cos(theta / 2.0), -(double)k - 1);
}

// Zeros of H_k on [7pi/12, 2pi/3), by sign scan at spacing pi/(4k) plus
// bisection. The boundary zero that H_k develops at 2pi/3 for k = 2,4
// mod 6 is excluded by the half-open interval.
inline std::vector<double> h_model_zeros(long k) {
  if (k < 4 || k % 2 != 0) throw std::invalid_argument("h_model_zeros: k must be even and >= 4");
  const double pi = std::numbers::pi;
  double lo = 7 * pi / 12, hi = 2 * pi / 3;
  double h = pi / (4 * k);
  std::vector<double> zeros;
  double prev_t = lo;
  double prev_v = h_value(k, lo);
  for (double t = lo + h; t < hi - h / 8; t += h) {
    double v = h_value(k, t);
    if (prev_v == 0) prev_v = 1e-300;  // boundary hit, nudge
    if ((prev_v < 0) != (v < 0)) {
      double a = prev_t, b = t, fa = prev_v;
      while (b - a > 1e-15) {
        double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b) break;
        double fm = h_value(k, mid);
        if ((fa < 0) == (fm < 0))
          a = mid, fa = fm;
        else
          b = mid;
      }
      zeros.push_back(0.5 * (a + b));
    }
    prev_t = t;
    prev_v = v;
  }
  return zeros;
}

// Closed-form zeros of 2 cos(k theta / 2) in [a, b): theta = (2n+1) pi / k.
inline std::vector<double> cos_halfk_zeros(long k, double a, double b) {
  std::vector<double> zeros;
  const double pi = std::numbers::pi;
  long n_lo = static_cast<long>(std::ceil((a * k / pi - 1) / 2 - 1e-12));
  for (long n = n_lo;; ++n) {
    double t = (2 * n + 1) * pi / k;
    if (t >= b - 1e-15) break;
    if (t >= a) zeros.push_back(t);
  }
  return zeros;
}

// ---------------------------------------------------------------------------
// Linear model near pi/2

inline double linear_model(long k, long m, double theta) {
  return k * std::numbers::pi / 4 +
         (k + 4 * m * std::numbers::pi) / 2 * (theta - std::numbers::pi / 2);
}

// R_m(theta) = L_{k,m}(theta) - b(theta) = 2 pi m (theta - pi/2 + cos theta);
// increasing and nonnegative on I (b is concave down).
inline double linear_model_remainder(long k, long m, double theta) {
  return linear_model(k, m, theta) - b_value(CosModel{k, m, Variant::base}, theta);
}

}  // namespace mzl

#endif
