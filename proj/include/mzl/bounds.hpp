#ifndef MZL_BOUNDS_HPP
#define MZL_BOUNDS_HPP

// Explicit constants, bound functions, inequalities and thresholds used in
// the interlacing proofs: the deviation envelope C(k), the zero-travel
// bound pi C / (2k), the T and B families controlling interval two, gap
// lower bounds near the arc endpoints, derivative floors, and the
// residue-term inequalities comparing real traces against their cosine
// models. Everything here is a pure evaluation at explicit precision.

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mzl/arceval.hpp"
#include "mzl/basis.hpp"
#include "mzl/models.hpp"

namespace mzl {

struct BoundReport {
  std::string name;
  std::map<std::string, double> params;
  double lhs = 0;
  double rhs = 0;
  bool holds = false;  // holds <=> lhs < rhs, strict
  std::string claim;   // human-readable inequality this instantiates

  double rel_slack() const {
    double scale = std::max({std::fabs(lhs), std::fabs(rhs), 1e-300});
    return (rhs - lhs) / scale;
  }
};

namespace detail {

inline Real decimal(long num, long den, mpfr_prec_t prec) {
  return Real(Rational(num, den), prec);
}

inline BoundReport make_report(std::string name, const Real& lhs, const Real& rhs,
                               std::string claim) {
  BoundReport r;
  r.name = std::move(name);
  r.lhs = lhs.to_double();
  r.rhs = rhs.to_double();
  r.holds = lhs < rhs;
  r.claim = std::move(claim);
  return r;
}

}  // namespace detail

// C(k) = 2.97 (.66713)^{(k-14)/12}, an upper envelope for the deviation of
// the weight-k gap-function trace from 2cos(k theta/2) on interval one.
inline Real c_of_k(long k, mpfr_prec_t prec = 256) {
  Real base = detail::decimal(66713, 100000, prec);
  Real expo = Real(k - 14, prec) / 12;
  return detail::decimal(297, 100, prec) * pow(base, expo);
}

// Zero-travel bound: a deviation below C < 2 moves a cosine zero by less
// than pi C / (2k).
inline Real epsilon_bound(const Real& c, long k, mpfr_prec_t prec = 256) {
  if (!(c < Real(2L, 64))) throw std::invalid_argument("epsilon_bound: requires C < 2");
  return Real::pi(prec) * c / (2 * Real(k, prec));
}

// Lower bound on the distance between zeros of cos(b) and cos(b_{k+12}) on
// interval one: pi/k - pi/(k+12), doubled when k' is 6, 10 or 14.
inline Real interval1_gap(long k, mpfr_prec_t prec = 256) {
  if (k < 4) throw std::invalid_argument("interval1_gap: k must be >= 4");
  long kp = split_weight(k).kprime;
  Real pi = Real::pi(prec);
  Real gap = pi / Real(k, prec) - pi / Real(k + 12, prec);
  return (kp == 6 || kp == 10 || kp == 14) ? Real(2L, prec) * gap : gap;
}

// The six-line list of lower bounds for (beta, alpha)-type intervals near
// 2pi/3, selected by k'. Each line is a pi/k combination minus the common
// drift allowance pi/(3k) + pi/(3(k+12)).
inline Real beta_alpha_lower_bound(long k, mpfr_prec_t prec = 256) {
  if (k < 4) throw std::invalid_argument("beta_alpha_lower_bound: k must be >= 4");
  long kp = split_weight(k).kprime;
  Real pi = Real::pi(prec);
  Real over_k = pi / Real(k, prec);
  Real over_k12 = pi / Real(k + 12, prec);
  Real main(prec);
  switch (kp) {
    case 0: main = over_k; break;
    case 4: main = detail::decimal(5, 3, prec) * over_k - detail::decimal(2, 3, prec) * over_k12; break;
    case 6: main = detail::decimal(3, 2, prec) * over_k - detail::decimal(1, 2, prec) * over_k12; break;
    case 8: main = detail::decimal(4, 3, prec) * over_k - detail::decimal(1, 3, prec) * over_k12; break;
    case 10: main = detail::decimal(7, 6, prec) * over_k - detail::decimal(1, 6, prec) * over_k12; break;
    case 14: main = detail::decimal(11, 6, prec) * over_k - detail::decimal(5, 6, prec) * over_k12; break;
    default: throw std::logic_error("beta_alpha_lower_bound: unreachable");
  }
  return main - over_k / 3 - over_k12 / 3;
}

// ---------------------------------------------------------------------------
// T and B families (interval two)

enum class HFamily { b06, b410, b814 };

inline HFamily h_family_of(long k) {
  switch (floor_mod(k, 12)) {
    case 0: case 6: return HFamily::b06;
    case 4: case 10: return HFamily::b410;
    case 8: case 2: return HFamily::b814;
    default: throw std::invalid_argument("h_family_of: k must be even");
  }
}

inline bool family_applies(HFamily f, long k) {
  long r = floor_mod(k, 12);
  switch (f) {
    case HFamily::b06: return r == 0 || r == 6;
    case HFamily::b410: return r == 4 || r == 10;
    case HFamily::b814: return r == 8 || r == 2;
  }
  return false;
}

// T_{*}(k, n): upper bound for the residue-term difference between
// heights k and k+12 at the relevant cosine zeros. The numerator argument
// must stay inside (pi/2, 2pi/3) where 2cos(theta/2) lies in (1, sqrt 2).
inline Real t_function(HFamily family, long k, long n, mpfr_prec_t prec = 256) {
  Real pi = Real::pi(prec);
  Real two_thirds = Real(2L, prec) * pi / 3;
  Real num_offset(prec), den_offset(prec);
  switch (family) {
    case HFamily::b06:
      num_offset = Real(2 * n + 1, prec) * pi / Real(k, prec);
      den_offset = Real(2 * n + 1, prec) * pi / Real(k + 12, prec);
      break;
    case HFamily::b410:
      num_offset = Real(6 * n + 5, prec) * pi / Real(3 * k, prec);
      den_offset = Real(6 * n + 5, prec) * pi / Real(3 * (k + 12), prec);
      break;
    case HFamily::b814:
      num_offset = Real(6 * n + 7, prec) * pi / Real(3 * k, prec);
      den_offset = Real(6 * n + 7, prec) * pi / Real(3 * (k + 12), prec);
      break;
  }
  Real theta_num = two_thirds - num_offset;
  Real theta_den = two_thirds - den_offset + pi / Real(3 * (k + 12), prec);
  Real half_pi = pi / 2;
  if (!(theta_num > half_pi && theta_num < two_thirds && theta_den > half_pi &&
        theta_den < two_thirds))
    throw std::invalid_argument("t_function: cosine argument outside (pi/2, 2pi/3)");
  Real numerator = Real(1L, prec) - pow(Real(2L, prec) * cos(theta_num / 2), -12L);
  Real denominator = pow(Real(2L, prec) * cos(theta_den / 2), k);
  return numerator / denominator;
}

// B_{*}(k): lower bound on the zero distance of the residue models at
// heights k and k+12, via the trivial derivative bound 4k + 24.
inline Real b_lower_bound(HFamily family, long k, mpfr_prec_t prec = 256) {
  if (!family_applies(family, k))
    throw std::invalid_argument("b_lower_bound: weight not in this family's congruence class");
  Real pi = Real::pi(prec);
  Real sine(prec);
  Real t(prec);
  switch (family) {
    case HFamily::b06:
      sine = sin(Real(3L, prec) * pi / Real(k + 12, prec));
      t = t_function(family, k, 1, prec);
      break;
    case HFamily::b410:
      sine = sin(Real(4L, prec) * pi / Real(3 * (k + 12), prec));
      t = t_function(family, k, 0, prec);
      break;
    case HFamily::b814:
      sine = sin(Real(7L, prec) * pi / Real(k + 12, prec));
      t = t_function(family, k, 0, prec);
      break;
  }
  return (sine - t) / Real(4 * k + 24, prec);
}

// Interval-two deviation envelope 2.24 (.44)^{(k-c)/12} with c the larger
// residue of the family (6, 10 or 14).
inline Real h_deviation_bound(long k, mpfr_prec_t prec = 256) {
  long c;
  switch (h_family_of(k)) {
    case HFamily::b06: c = 6; break;
    case HFamily::b410: c = 10; break;
    case HFamily::b814: c = 14; break;
    default: c = 14; break;
  }
  Real base = detail::decimal(44, 100, prec);
  return detail::decimal(224, 100, prec) * pow(base, Real(k - c, prec) / 12);
}

// The zero-travel envelope for the residue model: 20 C / (7k) with
// C = 2.24 (.44)^{(k-c)/12}.
inline Real h_zero_travel(long k, mpfr_prec_t prec = 256) {
  return h_deviation_bound(k, prec) * Real(20L, prec) / Real(7 * k, prec);
}

// ---------------------------------------------------------------------------
// Threshold searches

struct ThresholdResult {
  bool ever_holds = false;
  long first_hold = 0;    // smallest k where the predicate holds
  long stable_from = 0;   // smallest k from which it holds for every later k tested
  std::vector<long> exceptions;  // failures above first_hold
};

inline ThresholdResult threshold_search(const std::vector<long>& ks,
                                        const std::function<bool(long)>& pred) {
  ThresholdResult r;
  long last_fail = 0;
  bool saw_fail_after_hold = false;
  for (long k : ks) {
    bool ok = pred(k);
    if (ok && !r.ever_holds) {
      r.ever_holds = true;
      r.first_hold = k;
    }
    if (!ok) {
      last_fail = k;
      if (r.ever_holds) {
        r.exceptions.push_back(k);
        saw_fail_after_hold = true;
      }
    }
  }
  if (r.ever_holds) {
    r.stable_from = r.first_hold;
    if (saw_fail_after_hold) {
      for (long k : ks)
        if (k > last_fail) {
          r.stable_from = k;
          break;
        }
    }
  }
  return r;
}

inline std::vector<long> even_range(long lo, long hi) {
  std::vector<long> ks;
  for (long k = lo + (lo % 2 != 0 ? 1 : 0); k <= hi; k += 2) ks.push_back(k);
  return ks;
}

inline std::vector<long> family_range(HFamily f, long lo, long hi) {
  std::vector<long> ks;
  for (long k = lo; k <= hi; ++k)
    if (k % 2 == 0 && family_applies(f, k)) ks.push_back(k);
  return ks;
}

// pi C(k) / (2k) < (1/2)(pi/k - pi/(k+12)); true from k = 118 on. A C(k)
// of 2 or more certifies nothing, so those weights simply fail.
inline bool interval1_threshold_holds(long k, mpfr_prec_t prec = 256) {
  Real c = c_of_k(k, prec);
  if (!(c < Real(2L, 64))) return false;
  Real pi = Real::pi(prec);
  Real lhs = epsilon_bound(c, k, prec);
  Real rhs = (pi / Real(k, prec) - pi / Real(k + 12, prec)) / 2;
  return lhs < rhs;
}

// 2.24 (.44)^{(k-c)/12} * 20/(7k) < (1/2) B_{*}(k); true from 102 / 128 / 98.
inline bool interval2_threshold_holds(HFamily family, long k, mpfr_prec_t prec = 256) {
  Real lhs = h_zero_travel(k, prec);
  Real rhs = b_lower_bound(family, k, prec) / 2;
  return lhs < rhs;
}

// Zeros of the approximating cosines of G_k and G_{k+12} falling in the
// interval overlap [7pi/12, 1.9]; the interlacing argument needs at least
// two zeros there to stitch the two intervals together, and the gap bound
// guarantees that from k = 94 on.
inline long overlap_zero_count(long k) {
  if (k < 4) throw std::invalid_argument("overlap_zero_count: k must be >= 4");
  auto count_single = [](long kk) {
    // odd integers t = 2n+1 with t >= 7 kk / 12 (exact) and t <= 1.9 kk / pi
    long t_lo = detail::ceil_div(7 * kk, 12);
    double t_hi = 1.9 * static_cast<double>(kk) / std::numbers::pi;
    long count = 0;
    for (long t = t_lo % 2 == 0 ? t_lo + 1 : t_lo; static_cast<double>(t) <= t_hi; t += 2)
      ++count;
    return count;
  };
  return count_single(k) + count_single(k + 12);
}

// ---------------------------------------------------------------------------
// Gap lower bounds near the arc endpoints (linear-model construction)

// Near pi/2. Weight case: pi/(k+4m pi) - pi/(k+12+4m pi). Index case: the
// three-term expression with the Taylor-error allowance; the analyzed
// branch is k = 0 mod 4 and the same expression is evaluated for k = 2
// mod 4 (where the true bound is larger).
inline Real near_pi2_gap_bound(long k, long m, Variant variant, mpfr_prec_t prec = 256) {
  Real pi = Real::pi(prec);
  Real fourpm = Real(4 * m, prec) * pi;
  if (variant == Variant::k_plus_12) {
    return pi / (Real(k, prec) + fourpm) - pi / (Real(k + 12, prec) + fourpm);
  }
  if (variant != Variant::m_plus_1)
    throw std::invalid_argument("near_pi2_gap_bound: pick a starred variant");
  Real fourpm1 = Real(4 * (m + 1), prec) * pi;
  Real first = pi * (Real(2 + k, prec) + fourpm) / (Real(2L, prec) * (Real(k, prec) + fourpm));
  Real second =
      pi * (Real(2 + k, prec) + fourpm1) / (Real(2L, prec) * (Real(k, prec) + fourpm1));
  Real sqrt3 = sqrt(Real(3L, prec));
  Real taylor = Real(2L, prec) /
                (Real(m + 1, prec) * (Real(k, prec) + Real(2 * (m + 1), prec) * pi * sqrt3));
  return first - second - taylor;
}

// Near 2pi/3, by the same first-order construction anchored at 2pi/3.
// The anchor b(2pi/3) = k pi/3 + m pi sits delta_b above the nearest
// half-odd multiple of pi, with delta_b = pi/2, 5pi/6, pi/6 for k = 0, 1,
// 2 mod 3; slopes at the anchor are (k + 2 sqrt(3) pi m)/2.
inline Real near_2pi3_gap_bound(long k, long m, Variant variant, mpfr_prec_t prec = 256) {
  Real pi = Real::pi(prec);
  Real sqrt3 = sqrt(Real(3L, prec));
  Real delta_b(prec);
  switch (floor_mod(k, 3)) {
    case 0: delta_b = pi / 2; break;
    case 1: delta_b = Real(5L, prec) * pi / 6; break;
    default: delta_b = pi / 6; break;
  }
  Real slope_m = Real(k, prec) + Real(2 * m, prec) * sqrt3 * pi;
  if (variant == Variant::k_plus_12) {
    Real slope_k12 = Real(k + 12, prec) + Real(2 * m, prec) * sqrt3 * pi;
    return Real(2L, prec) * delta_b * (Real(1L, prec) / slope_m - Real(1L, prec) / slope_k12);
  }
  if (variant != Variant::m_plus_1)
    throw std::invalid_argument("near_2pi3_gap_bound: pick a starred variant");
  Real slope_m1 = Real(k, prec) + Real(2 * (m + 1), prec) * sqrt3 * pi;
  Real taylor = Real(2L, prec) / (Real(m + 1, prec) * slope_m1);
  return Real(2L, prec) * delta_b * (Real(1L, prec) / slope_m - Real(1L, prec) / slope_m1) -
         taylor;
}

// ---------------------------------------------------------------------------
// Derivative floors

// E (k + 2 sqrt(3) pi m), the floor for |d/dtheta 2cos(b)| on the travel
// window around each cosine zero; requires 0 < E < sqrt(2)/2.
inline Real derivative_floor(long k, long m, double e_const, mpfr_prec_t prec = 256) {
  if (!(e_const > 0 && e_const < std::sqrt(2.0) / 2))
    throw std::invalid_argument("derivative_floor: need 0 < E < sqrt(2)/2");
  return Real(e_const, prec) *
         (Real(k, prec) + Real(2 * m, prec) * sqrt(Real(3L, prec)) * Real::pi(prec));
}

// Sampled confirmation of the floor on the window
// (alpha* - pi/(2(|k|+4pi m)), alpha* + pi/(2(|k|+4pi m))) around each
// cosine-model zero alpha*.
inline ModelReport derivative_floor_check(long k, long m, double e_const, int samples = 101) {
  Real dummy = derivative_floor(k, m, e_const, 64);  // validates E
  (void)dummy;
  ModelReport rep;
  double floor_v = e_const * (k + 2 * std::sqrt(3.0) * std::numbers::pi * m);
  double w = std::numbers::pi / (2 * (std::labs(k) + 4 * std::numbers::pi * m));
  CosModel model{k, m, Variant::base};
  for (double astar : cos_model_zeros(model)) {
    for (int i = -samples / 2; i <= samples / 2; ++i) {
      double t = astar + w * (2.0 * i) / (samples + 1);
      if (t <= std::numbers::pi / 2 || t >= 2 * std::numbers::pi / 3) continue;
      double deriv = std::fabs((k + 4 * std::numbers::pi * m * std::sin(t)) *
                               std::sin(b_value(model, t)));
      if (!(deriv > floor_v)) {
        rep.pass = false;
        rep.detail = "floor fails at theta=" + std::to_string(t);
        return rep;
      }
    }
  }
  return rep;
}

// Sampled confirmation of |H_k'| > 7k/20 around the zeros of H_k relevant
// to the pairing argument (those below 2pi/3 - (2pi/3)/(k+12)).
inline ModelReport h_derivative_floor_check(long k, int samples = 101) {
  ModelReport rep;
  double floor_v = 7.0 * k / 20.0;
  double theta_max = 2 * std::numbers::pi / 3 - (2 * std::numbers::pi / 3) / (k + 12);
  double w = std::numbers::pi / (3 * k);
  for (double alpha : h_model_zeros(k)) {
    if (alpha > theta_max) continue;
    for (int i = -samples / 2; i <= samples / 2; ++i) {
      double t = alpha + w * (2.0 * i) / (samples + 1);
      if (t >= theta_max) continue;
      double deriv = std::fabs(h_derivative(k, t));
      if (!(deriv > floor_v)) {
        rep.pass = false;
        rep.detail = "H' floor fails at k=" + std::to_string(k) + " theta=" + std::to_string(t);
        return rep;
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Residue inequalities (the two contour-height estimates)

enum class ResidueInterval { one, two };

inline double residue_height(ResidueInterval iv) {
  return iv == ResidueInterval::one ? 0.75 : 0.65;
}

inline void check_residue_theta(ResidueInterval iv, double theta) {
  const double pi = std::numbers::pi;
  if (iv == ResidueInterval::one) {
    if (!(theta > pi / 2 && theta <= 1.9))
      throw std::invalid_argument("residue interval one requires theta in (pi/2, 1.9]");
  } else {
    if (!(theta >= 7 * pi / 12 && theta < 2 * pi / 3))
      throw std::invalid_argument("residue interval two requires theta in [7pi/12, 2pi/3)");
  }
}

// Per-(form, interval) cache of the x-dependent factors on the contour, so
// that maximizing over x for many theta samples stays cheap.
class ResidueRhs {
 public:
  ResidueRhs(const BasisForm& form, ResidueInterval iv, EvalConfig cfg, long grid_n = 201)
      : kprime_(form.kprime()),
        ell_(form.ell()),
        m_(form.m),
        iv_(iv),
        height_(residue_height(iv)),
        cfg_(cfg),
        grid_n_(std::max<long>(grid_n, 201)) {
    xs_.reserve(static_cast<size_t>(grid_n_));
    abs_e_.reserve(static_cast<size_t>(grid_n_));
    inv_denom_.reserve(static_cast<size_t>(grid_n_));
    j_tau_.reserve(static_cast<size_t>(grid_n_));
    for (long i = 0; i < grid_n_; ++i) {
      double x = -0.5 + static_cast<double>(i) / (grid_n_ - 1);
      xs_.push_back(x);
      SegmentFactors f = segment_factors(x, height_, cfg_);
      abs_e_.push_back(eisenstein_value(f, 14 - kprime_).abs());
      inv_denom_.push_back(pow(f.delta_v.abs(), ell_ + 1));
      j_tau_.push_back(f.j_v);
    }
  }

  // max over |x| <= 1/2 of e^{-2pi m (sin theta - A')} |D(z)/D(tau)|^l
  // |E_{k'}(z) E_{14-k'}(tau)| / (|D(tau)| |j(tau) - j(z)|)
  Real bound(double theta, const ArcFactors& zf) const {
    mpfr_prec_t prec = cfg_.prec_bits;
    Real best(-1L, prec);
    double best_x = 0;
    for (size_t i = 0; i < xs_.size(); ++i) {
      Real v = phi(i, zf.j);
      if (v > best) {
        best = v;
        best_x = xs_[i];
      }
    }
    // golden-section refinement on the continuous factor around the argmax
    double h = 1.0 / (grid_n_ - 1);
    double a = best_x - h, b = best_x + h;
    const double gr = (std::sqrt(5.0) - 1) / 2;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    Real fc = phi_fresh(c, zf.j), fd = phi_fresh(d, zf.j);
    for (int it = 0; it < 28; ++it) {
      if (fc > fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - gr * (b - a);
        fc = phi_fresh(c, zf.j);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + gr * (b - a);
        fd = phi_fresh(d, zf.j);
      }
    }
    if (fc > best) best = fc;
    if (fd > best) best = fd;

    Real pi = Real::pi(prec);
    Real th(theta, prec);
    Real weight = exp(Real(-2 * m_, prec) * pi * (sin(th) - Real(height_, prec)));
    Real z_side = pow(abs(zf.a_delta), ell_) * abs(eisenstein_trace(zf, kprime_));
    return weight * z_side * best;
  }

 private:
  Real phi(size_t i, const Real& jz) const {
    Complex diff(j_tau_[i].re - jz, j_tau_[i].im);
    return abs_e_[i] / (inv_denom_[i] * diff.abs());
  }
  Real phi_fresh(double x, const Real& jz) const {
    double xw = x - std::round(x);  // the contour factors have period 1 in x
    SegmentFactors f = segment_factors(xw, height_, cfg_);
    Complex diff(f.j_v.re - jz, f.j_v.im);
    return eisenstein_value(f, 14 - kprime_).abs() /
           (pow(f.delta_v.abs(), ell_ + 1) * diff.abs());
  }

  long kprime_, ell_, m_;
  ResidueInterval iv_;
  double height_;
  EvalConfig cfg_;
  long grid_n_;
  std::vector<double> xs_;
  std::vector<Real> abs_e_;
  std::vector<Real> inv_denom_;
  std::vector<Complex> j_tau_;
};

// Left side of the residue estimate at theta: the distance between the
// real trace and its cosine model (interval one), including the extra
// residue term (interval two).
inline Real residue_lhs(const BasisForm& form, double theta, ResidueInterval iv,
                        const EvalConfig& cfg) {
  mpfr_prec_t prec = cfg.prec_bits;
  Real g = real_trace(form, theta, cfg).value;
  Real th(theta, prec);
  Real pi = Real::pi(prec);
  Real b = Real(form.k(), prec) * th / 2 - Real(2 * form.m, prec) * pi * cos(th);
  Real model = Real(2L, prec) * cos(b);
  Real lhs_val = g - model;
  if (iv == ResidueInterval::two) {
    Real expo = -pi * Real(form.m, prec) * (Real(2L, prec) * sin(th) - tan(th / 2));
    Real extra = exp(expo) / pow(Real(2L, prec) * cos(th / 2), form.k());
    if (form.m % 2 != 0) extra = -extra;
    lhs_val -= extra;
  }
  return abs(lhs_val);
}

inline BoundReport residue_inequality_check(const BasisForm& form, double theta,
                                            ResidueInterval iv, const EvalConfig& cfg,
                                            long grid_n = 201) {
  check_residue_theta(iv, theta);
  ResidueRhs rhs_eval(form, iv, cfg, grid_n);
  ArcFactors zf = arc_factors(theta, cfg);
  Real lhs = residue_lhs(form, theta, iv, cfg);
  Real rhs = rhs_eval.bound(theta, zf);
  BoundReport rep = detail::make_report(
      "residue_inequality_" + std::string(iv == ResidueInterval::one ? "one" : "two"), lhs, rhs,
      "|trace - cosine model| <= contour maximum");
  rep.holds = lhs <= rhs;  // the estimate is non-strict
  rep.params["k"] = static_cast<double>(form.k());
  rep.params["m"] = static_cast<double>(form.m);
  rep.params["theta"] = theta;
  return rep;
}

// ---------------------------------------------------------------------------
// Sampled Delta constants

// Samples |Delta| on the arc and on the height-3/4 segment, the quotient
// bound they imply, and the height-0.65 quotient feeding the interval-two
// envelope 2.24 (.44)^{(k-c)/12}.
inline std::vector<BoundReport> verify_delta_constants(long grid, const EvalConfig& cfg) {
  if (grid < 1000) throw std::invalid_argument("verify_delta_constants: grid must be >= 1000");
  mpfr_prec_t prec = cfg.prec_bits;
  auto dseries = delta(64);

  Real arc_max(-1L, prec);
  for (long i = 1; i < grid; ++i) {
    double theta = kThetaLo + (kThetaHi - kThetaLo) * i / grid;
    Real v = series_value(dseries, detail::arc_q(theta, prec), cfg).abs();
    if (v > arc_max) arc_max = v;
  }

  auto seg_min = [&](double height) {
    Real best(1L, prec);
    for (long i = 0; i <= grid; ++i) {
      double x = -0.5 + static_cast<double>(i) / grid;
      Real v = eval_on_segment(dseries, x, height, cfg).value.abs();
      if (v < best) best = v;
    }
    return best;
  };
  Real min75 = seg_min(0.75);
  Real min65 = seg_min(0.65);

  std::vector<BoundReport> out;
  out.push_back(detail::make_report("delta_arc_max", arc_max,
                                    detail::decimal(481, 100000, prec),
                                    "|Delta(e^{i theta})| < .00481 on the arc"));
  out.push_back(detail::make_report("delta_segment75_min", detail::decimal(721, 100000, prec),
                                    min75, "|Delta(x + .75i)| > .00721"));
  out.push_back(detail::make_report("delta_quotient_max", arc_max / min75,
                                    detail::decimal(66713, 100000, prec),
                                    "|Delta(e^{i theta}) / Delta(x + .75i)| < .66713"));
  out.push_back(detail::make_report("delta_quotient65_max", arc_max / min65,
                                    detail::decimal(44, 100, prec),
                                    "|Delta(e^{i theta}) / Delta(x + .65i)| < .44"));
  for (auto& r : out) r.params["grid"] = static_cast<double>(grid);
  return out;
}

// Sampled interval-two deviation check: max over [7pi/12, 2pi/3) of
// |g_k - H_k| against 2.24 (.44)^l for the gap function G_k. The exponent
// l = (k - k')/12 is at least the family exponent (k-c)/12, so this is
// the stronger form of the envelope.
inline BoundReport h_deviation_check(long k, const EvalConfig& cfg, int samples = 40) {
  BasisForm g = gap_function(k);
  const double pi = std::numbers::pi;
  double lo = 7 * pi / 12, hi = 2 * pi / 3 - 1e-9;
  Real worst(-1L, cfg.prec_bits);
  for (int i = 0; i <= samples; ++i) {
    double theta = lo + (hi - lo) * i / samples;
    Real gval = real_trace(g, theta, cfg).value;
    Real dev = abs(gval - Real(h_value(k, theta), cfg.prec_bits));
    if (dev > worst) worst = dev;
  }
  Real bound = detail::decimal(224, 100, cfg.prec_bits) *
               pow(detail::decimal(44, 100, cfg.prec_bits), split_weight(k).ell);
  BoundReport rep = detail::make_report("h_deviation_k" + std::to_string(k), worst, bound,
                                        "max |g_k - H_k| < 2.24 (.44)^l on interval two");
  rep.params["k"] = static_cast<double>(k);
  rep.params["samples"] = samples;
  return rep;
}

// ---------------------------------------------------------------------------
// The closing inequality for the eps-trimmed interlacing theorem

// (1/(E(k+2sqrt3 pi m))) (2.97 (.49)^m (.67)^l + e^{-pi m (2 sin rho -
// tan(rho/2))}/(2cos(rho/2))^k) < (1/2) M(k,m), with rho = 2pi/3 - eps and
// M the smaller of the two endpoint gap bounds for the chosen variant.
inline BoundReport theorem2_inequality(long k, long m, double eps, double e_const,
                                       Variant variant, mpfr_prec_t prec = 256) {
  if (!(eps > 0)) throw std::invalid_argument("theorem2_inequality: eps must be positive");
  if (variant == Variant::base)
    throw std::invalid_argument("theorem2_inequality: pick a starred variant");
  Real pi = Real::pi(prec);
  Real rho = Real(2L, prec) * pi / 3 - Real(eps, prec);
  long ell = split_weight(k).ell;
  Real decay = detail::decimal(297, 100, prec) * pow(detail::decimal(49, 100, prec), m) *
               pow(detail::decimal(67, 100, prec), Real(ell, prec));
  Real res_term = exp(-pi * Real(m, prec) * (Real(2L, prec) * sin(rho) - tan(rho / 2))) /
                  pow(Real(2L, prec) * cos(rho / 2), k);
  Real floor_v = derivative_floor(k, m, e_const, prec);
  Real lhs = (decay + res_term) / floor_v;
  Real m_near = near_pi2_gap_bound(k, m, variant, prec);
  Real m_far = near_2pi3_gap_bound(k, m, variant, prec);
  Real mkm = m_near < m_far ? m_near : m_far;
  BoundReport rep = detail::make_report("theorem2_inequality", lhs, mkm / 2,
                                        "decay envelope below half the minimum zero gap");
  rep.params["k"] = static_cast<double>(k);
  rep.params["m"] = static_cast<double>(m);
  rep.params["eps"] = eps;
  rep.params["E"] = e_const;
  rep.params["M"] = mkm.to_double();
  return rep;
}

}  // namespace mzl

#endif
