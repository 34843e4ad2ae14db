#ifndef MZL_ARCEVAL_HPP
#define MZL_ARCEVAL_HPP

// Arbitrary-precision evaluation of forms on the arc z = e^{i theta} and on
// horizontal segments x + i*height. The arc evaluator never touches the raw
// f_{k,m} expansion for large k: it works through the stable real
// factorization
//   g(theta) = [e^{6 i theta} Delta]^l [e^{i k' theta / 2} E_{k'}] F(j) e^{-2 pi m sin theta},
// where each bracket is real on the arc. Truncation control is adaptive
// (stop after three consecutive terms below tol/8, then add a geometric
// tail majorant); this is an error estimate, not certified interval
// arithmetic.

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "mzl/basis.hpp"
#include "mzl/real.hpp"
#include "mzl/series.hpp"

namespace mzl {

class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EvalConfig {
  long prec_bits = 256;
  double tol = 1e-30;
  long max_terms = 400;

  void validate() const {
    if (prec_bits < 64) throw std::invalid_argument("EvalConfig: prec_bits must be >= 64");
    if (!(tol > 0) || tol < std::ldexp(1.0, static_cast<int>(1 - prec_bits)))
      throw std::invalid_argument("EvalConfig: tol must satisfy tol >= 2^(1-prec_bits)");
    if (max_terms < 8) throw std::invalid_argument("EvalConfig: max_terms too small");
  }
};

struct ArcValue {
  double theta = 0;
  Real value;
  long prec_bits = 0;
  double est_error = 0;
};

struct SegmentValue {
  double x = 0;
  double height = 0;
  Complex value;
  long prec_bits = 0;
  double est_error = 0;
};

inline constexpr double kThetaLo = std::numbers::pi / 2;       // arc endpoint at i
inline constexpr double kThetaHi = 2 * std::numbers::pi / 3;   // arc endpoint at rho

namespace detail {

enum class SeriesKind { delta_e, e4, e6 };

// Crude coefficient growth bound ln|a_n| <= 4 pi sqrt(n) + 3, valid for
// Delta, E_4 and E_6 alike; picks the summation length for a target tol.
inline long terms_needed(double log_abs_q, double tol, long max_terms) {
  constexpr double four_pi = 4 * std::numbers::pi;
  for (long n = 4; n <= max_terms; ++n) {
    if (four_pi * std::sqrt(static_cast<double>(n)) + 3 + n * log_abs_q < std::log(tol) - 2)
      return std::min(n + 8, max_terms);
  }
  throw numeric_error("series truncation cannot reach tol within max_terms");
}

inline std::shared_ptr<const ExactSeries> cached_series(SeriesKind kind, long min_trunc) {
  static std::map<std::pair<int, long>, std::shared_ptr<const ExactSeries>> cache;
  static std::mutex mu;
  long bucket = ((min_trunc + 31) / 32) * 32;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(kind), bucket);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::shared_ptr<const ExactSeries> s;
  switch (kind) {
    case SeriesKind::delta_e: s = std::make_shared<const ExactSeries>(delta(bucket)); break;
    case SeriesKind::e4: s = std::make_shared<const ExactSeries>(eisenstein(4, bucket)); break;
    case SeriesKind::e6: s = std::make_shared<const ExactSeries>(eisenstein(6, bucket)); break;
  }
  cache.emplace(key, s);
  return s;
}

}  // namespace detail

// Sum a q-series at a complex point with adaptive truncation. On return
// est_tail (if given) holds the geometric tail majorant added to the
// reported error, in absolute terms.
inline Complex series_value(const ExactSeries& s, const Complex& q, const EvalConfig& cfg,
                            double* est_tail = nullptr) {
  mpfr_prec_t prec = cfg.prec_bits;
  Complex acc(prec);
  Complex qpow(Real(1L, prec), Real(0L, prec));
  long lead = s.lead();
  if (lead > 0)
    for (long i = 0; i < lead; ++i) qpow = qpow * q;
  else if (lead < 0) {
    Complex qinv = Complex(Real(1L, prec), Real(0L, prec)) / q;
    for (long i = 0; i < -lead; ++i) qpow = qpow * qinv;
  }
  // Stop once the growth-envelope bound ln|a_n q^n| <= 4 pi sqrt(n) + 3 + n ln|q|
  // stays below tol/8 for three consecutive terms. The envelope covers the
  // standard series (Delta, E_4, E_6, j); observed magnitudes alone would be
  // fooled by the long runs of zero coefficients in gap-function expansions.
  constexpr double four_pi = 4 * std::numbers::pi;
  double log_abs_q = std::log(q.abs().to_double());
  double last_bound = 0;
  int small_run = 0;
  long n = lead;
  for (; n <= s.trunc(); ++n) {
    const Rational& a = s.coeff(n);
    if (a != 0) acc += qpow * Real(a, prec);
    double idx = static_cast<double>(std::max(n, 1L));
    last_bound = std::exp(four_pi * std::sqrt(idx) + 3 + n * log_abs_q);
    small_run = (last_bound < cfg.tol / 8) ? small_run + 1 : 0;
    qpow = qpow * q;
    if (small_run >= 3) break;
  }
  if (small_run < 3) throw numeric_error("series_value: series too short to reach tol");
  double ratio =
      std::exp(log_abs_q + four_pi / (2 * std::sqrt(static_cast<double>(std::max(n, 2L)))));
  ratio = std::min(ratio, 0.9);
  double tail = last_bound * ratio / (1 - ratio) + cfg.tol / 8;
  if (est_tail) *est_tail = tail;
  return acc;
}

namespace detail {

inline Complex arc_q(double theta, mpfr_prec_t prec) {
  Real th(theta, prec);
  Real r = exp(Real(-2L, prec) * Real::pi(prec) * sin(th));
  Real phase = Real(2L, prec) * Real::pi(prec) * cos(th);
  return Complex(r * cos(phase), r * sin(phase));
}

inline Complex segment_q(double x, double height, mpfr_prec_t prec) {
  Real r = exp(Real(-2L, prec) * Real::pi(prec) * Real(height, prec));
  Real phase = Real(2L, prec) * Real::pi(prec) * Real(x, prec);
  return Complex(r * cos(phase), r * sin(phase));
}

// Rotate a complex series value by e^{i w theta} and force the result real;
// an imaginary residue above tol means the precision budget was blown.
inline Real force_real_trace(const Complex& v, double theta, long w2, mpfr_prec_t prec,
                             double tol) {
  Real ang = Real(theta, prec) * Real(w2, prec) / 2;
  Complex rotated = v * Complex::expi(ang);
  if (abs(rotated.im) > Real(tol, prec))
    throw numeric_error("force_real_trace: imaginary residue exceeds tol");
  return rotated.re;
}

}  // namespace detail

// Real traces of the building blocks on the arc: a_delta = e^{6 i theta} Delta,
// e4t = e^{2 i theta} E_4, e6t = e^{3 i theta} E_6, and j = e4t^3 / a_delta.
struct ArcFactors {
  Real a_delta, e4t, e6t, j;
  double tail_delta = 0, tail_e4 = 0, tail_e6 = 0, err_j = 0;
};

inline ArcFactors arc_factors(double theta, const EvalConfig& cfg) {
  cfg.validate();
  mpfr_prec_t prec = cfg.prec_bits;
  double log_abs_q = -2 * std::numbers::pi * std::sin(theta);
  long terms = detail::terms_needed(log_abs_q, cfg.tol, cfg.max_terms);
  auto d = detail::cached_series(detail::SeriesKind::delta_e, terms);
  auto e4 = detail::cached_series(detail::SeriesKind::e4, terms);
  auto e6 = detail::cached_series(detail::SeriesKind::e6, terms);
  Complex q = detail::arc_q(theta, prec);
  ArcFactors f;
  Complex dv = series_value(*d, q, cfg, &f.tail_delta);
  Complex e4v = series_value(*e4, q, cfg, &f.tail_e4);
  Complex e6v = series_value(*e6, q, cfg, &f.tail_e6);
  f.a_delta = detail::force_real_trace(dv, theta, 12, prec, cfg.tol);
  f.e4t = detail::force_real_trace(e4v, theta, 4, prec, cfg.tol);
  f.e6t = detail::force_real_trace(e6v, theta, 6, prec, cfg.tol);
  f.j = f.e4t * f.e4t * f.e4t / f.a_delta;
  double abs_a = abs(f.a_delta).to_double();
  double abs_e4 = abs(f.e4t).to_double();
  f.err_j = (3 * abs_e4 * abs_e4 * f.tail_e4 + std::fabs(f.j.to_double()) * f.tail_delta) / abs_a;
  return f;
}

// Real trace of E_{k'} on the arc from the E_4 and E_6 traces.
inline Real eisenstein_trace(const ArcFactors& f, long kprime) {
  switch (kprime) {
    case 0: return Real(1L, f.e4t.prec());
    case 4: return f.e4t;
    case 6: return f.e6t;
    case 8: return f.e4t * f.e4t;
    case 10: return f.e4t * f.e6t;
    case 14: return f.e4t * f.e4t * f.e6t;
    default: throw std::invalid_argument("eisenstein_trace: k' not in {0,4,6,8,10,14}");
  }
}

// g(theta) = e^{i k theta / 2} e^{-2 pi m sin theta} f_{k,m}(e^{i theta}),
// real-valued on the open arc.
inline ArcValue real_trace(const BasisForm& form, double theta, const EvalConfig& cfg) {
  if (!(theta > kThetaLo && theta < kThetaHi))
    throw std::invalid_argument("real_trace: theta must lie strictly inside (pi/2, 2pi/3)");
  cfg.validate();
  mpfr_prec_t prec = cfg.prec_bits;
  ArcFactors f = arc_factors(theta, cfg);

  mpfr_prec_t horner_prec =
      std::max<mpfr_prec_t>(prec, static_cast<mpfr_prec_t>(form.F.max_coeff_bits()) + 64);
  Real fj = form.F.eval_real(f.j.with_prec(horner_prec)).with_prec(prec);
  Real fpj = form.F.derivative().eval_real(f.j.with_prec(horner_prec)).with_prec(prec);

  Real etr = eisenstein_trace(f, form.kprime());
  Real a_pow = pow(f.a_delta, form.ell());
  Real th(theta, prec);
  Real weight = exp(Real(-2L * form.m, prec) * Real::pi(prec) * sin(th));
  Real value = a_pow * etr * fj * weight;

  // first-order error propagation through the factorization
  double abs_a = abs(f.a_delta).to_double();
  double abs_e4 = abs(f.e4t).to_double();
  double abs_e6 = abs(f.e6t).to_double();
  double d_etr = 0;
  switch (form.kprime()) {
    case 0: d_etr = 0; break;
    case 4: d_etr = f.tail_e4; break;
    case 6: d_etr = f.tail_e6; break;
    case 8: d_etr = 2 * abs_e4 * f.tail_e4; break;
    case 10: d_etr = abs_e4 * f.tail_e6 + abs_e6 * f.tail_e4; break;
    case 14: d_etr = 2 * abs_e4 * abs_e6 * f.tail_e4 + abs_e4 * abs_e4 * f.tail_e6; break;
  }
  double w = weight.to_double();
  double apw = std::fabs(a_pow.to_double());
  double fjd = std::fabs(fj.to_double());
  double etrd = std::fabs(etr.to_double());
  double d_fj = std::fabs(fpj.to_double()) * f.err_j;
  double d_apow = std::fabs(static_cast<double>(form.ell())) * apw * (f.tail_delta / abs_a);
  double est = w * (apw * etrd * d_fj + apw * fjd * d_etr + etrd * fjd * d_apow) +
               std::fabs(value.to_double()) * std::ldexp(1.0, static_cast<int>(16 - prec));
  est += cfg.tol / 8;
  return ArcValue{theta, std::move(value), cfg.prec_bits, est};
}

// Real value of j(e^{i theta}) on the closed arc; the endpoint values are
// pinned exactly (j(i) = 1728, j(rho) = 0).
inline ArcValue j_on_arc(double theta, const EvalConfig& cfg) {
  cfg.validate();
  if (theta == kThetaLo)
    return ArcValue{theta, Real(1728L, cfg.prec_bits), cfg.prec_bits, 0.0};
  if (theta == kThetaHi) return ArcValue{theta, Real(0L, cfg.prec_bits), cfg.prec_bits, 0.0};
  if (!(theta > kThetaLo && theta < kThetaHi))
    throw std::invalid_argument("j_on_arc: theta outside [pi/2, 2pi/3]");
  ArcFactors f = arc_factors(theta, cfg);
  double est = f.err_j + std::fabs(f.j.to_double()) * std::ldexp(1.0, static_cast<int>(16 - cfg.prec_bits));
  return ArcValue{theta, f.j, cfg.prec_bits, est};
}

// Complex value of a q-series at z = x + i*height, |q| = e^{-2 pi height}.
// Heights below 1/2 are refused; convergence margins assume |q| <= e^{-pi}.
inline SegmentValue eval_on_segment(const ExactSeries& s, double x, double height,
                                    const EvalConfig& cfg) {
  if (!(height >= 0.5)) throw std::invalid_argument("eval_on_segment: height must be >= 0.5");
  if (!(x >= -0.5 && x <= 0.5)) throw std::invalid_argument("eval_on_segment: |x| must be <= 1/2");
  cfg.validate();
  Complex q = detail::segment_q(x, height, cfg.prec_bits);
  double tail = 0;
  Complex v = series_value(s, q, cfg, &tail);
  double est = tail + v.abs().to_double() * std::ldexp(1.0, static_cast<int>(16 - cfg.prec_bits));
  return SegmentValue{x, height, std::move(v), cfg.prec_bits, est};
}

// Values of Delta, E_4, E_6 and j at x + i*height, for the right-hand sides
// of the residue inequalities.
struct SegmentFactors {
  Complex delta_v, e4_v, e6_v, j_v;
  double tail_delta = 0, tail_e4 = 0, tail_e6 = 0;
};

inline SegmentFactors segment_factors(double x, double height, const EvalConfig& cfg) {
  if (!(height >= 0.5)) throw std::invalid_argument("segment_factors: height must be >= 0.5");
  cfg.validate();
  double log_abs_q = -2 * std::numbers::pi * height;
  long terms = detail::terms_needed(log_abs_q, cfg.tol, cfg.max_terms);
  auto d = detail::cached_series(detail::SeriesKind::delta_e, terms);
  auto e4 = detail::cached_series(detail::SeriesKind::e4, terms);
  auto e6 = detail::cached_series(detail::SeriesKind::e6, terms);
  Complex q = detail::segment_q(x, height, cfg.prec_bits);
  SegmentFactors f;
  f.delta_v = series_value(*d, q, cfg, &f.tail_delta);
  f.e4_v = series_value(*e4, q, cfg, &f.tail_e4);
  f.e6_v = series_value(*e6, q, cfg, &f.tail_e6);
  f.j_v = f.e4_v * f.e4_v * f.e4_v / f.delta_v;
  return f;
}

// E_w(tau) from the cached E_4 and E_6 values at the same point.
inline Complex eisenstein_value(const SegmentFactors& f, long w) {
  mpfr_prec_t prec = f.e4_v.re.prec();
  switch (w) {
    case 0: return Complex(Real(1L, prec), Real(0L, prec));
    case 4: return f.e4_v;
    case 6: return f.e6_v;
    case 8: return f.e4_v * f.e4_v;
    case 10: return f.e4_v * f.e6_v;
    case 14: return f.e4_v * f.e4_v * f.e6_v;
    default: throw std::invalid_argument("eisenstein_value: weight not in {0,4,6,8,10,14}");
  }
}

}  // namespace mzl

#endif
