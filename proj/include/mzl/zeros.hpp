#ifndef MZL_ZEROS_HPP
#define MZL_ZEROS_HPP

// Certified isolation of the zeros of f_{k,m} on the open arc
// I = (pi/2, 2pi/3), and a generic interlacing checker.
//
// Primary path: the interior arc zeros of Delta^l E_{k'} F(j) are exactly
// the roots of F in (0, 1728) pulled back through the monotone map
// theta -> j(e^{i theta}). Roots of F are isolated exactly (Sturm), then
// each bracket is driven to a theta bracket by bisection against the
// monotone j evaluation. Cross-check path: a sign scan of the real trace
// on a uniform theta grid, refined by bisection.
//
// Zeros are reported on the OPEN interval; corner zeros at i and rho are
// vanishing orders, not list entries, so forms sharing a corner zero do
// not spuriously fail interlacing.

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mzl/arceval.hpp"
#include "mzl/basis.hpp"
#include "mzl/polynomial.hpp"

namespace mzl {

enum class IsolationMethod { poly_isolation, sign_scan };

struct CertifiedZero {
  double theta = 0;
  double radius = 0;
};

struct ZeroSet {
  long k = 0, m = 0;
  std::vector<CertifiedZero> zeros;  // sorted, strictly increasing
  Rational endpoint_i, endpoint_rho;
  IsolationMethod method = IsolationMethod::poly_isolation;
};

// Zeros closer than this after refinement are surfaced as a multiplicity
// error instead of being merged; the theorem regime predicts simple zeros.
inline constexpr double kZeroSeparationFloor = 1e-12;
inline constexpr double kZeroRadiusTarget = 1e-13;

namespace detail {

// Sign of an integer polynomial at j(e^{i theta}), with precision
// escalation when the value is too close to zero to call.
inline int sign_at_j(const polyint::IntPoly& p, double theta, const EvalConfig& cfg) {
  for (int boost_factor = 1; boost_factor <= 4; boost_factor *= 2) {
    EvalConfig c = cfg;
    c.prec_bits = cfg.prec_bits * boost_factor;
    Real j = j_on_arc(theta, c).value;
    mpfr_prec_t horner_prec = std::max<mpfr_prec_t>(c.prec_bits, 128);
    Real jp = j.with_prec(horner_prec);
    Real value = polyint::eval_real(p, jp);
    // magnitude bound sum |c_i| |j|^i for a conditioning estimate
    Real magnitude(0L, horner_prec);
    Real ja = abs(jp);
    for (size_t i = p.size(); i-- > 0;) {
      magnitude *= ja;
      Real c_abs(p[i], horner_prec);
      magnitude += abs(c_abs);
    }
    Real threshold = magnitude * Real(std::ldexp(1.0, static_cast<int>(48 - c.prec_bits)), 64);
    Real va = abs(value);
    if (va > threshold) return value.sign();
  }
  throw numeric_error("sign_at_j: cannot certify polynomial sign at theta");
}

struct JBracket {
  Rational lo, hi;  // contains exactly one root of sf; lo == hi for exact roots
};

// Drive a j-space root bracket to a theta bracket of half-width <= radius.
// j is strictly decreasing on the arc, so classification against the
// rational bracket endpoints steers the bisection; inside the bracket the
// sign of the square-free part decides the side.
inline CertifiedZero theta_from_j_bracket(const polyint::IntPoly& sf, const JBracket& jb,
                                          const EvalConfig& cfg, double radius) {
  int sign_lo = polyint::sign_at(sf, jb.lo);  // sign of sf just below the root
  double lo = kThetaLo, hi = kThetaHi;
  Real jlo(jb.lo, cfg.prec_bits), jhi(jb.hi, cfg.prec_bits);
  while (hi - lo > 2 * radius) {
    double mid = 0.5 * (lo + hi);
    Real jm = j_on_arc(mid, cfg).value;
    if (jm >= jhi) {
      lo = mid;  // theta* is to the right of mid
    } else if (jm <= jlo) {
      hi = mid;
    } else {
      int s = sign_at_j(sf, mid, cfg);
      if (s == 0) throw numeric_error("theta_from_j_bracket: landed on a root exactly");
      if (s == sign_lo)
        hi = mid;  // j(mid) below the root, so theta past the zero
      else
        lo = mid;
    }
  }
  return CertifiedZero{0.5 * (lo + hi), 0.5 * (hi - lo)};
}

inline void check_separation(const std::vector<CertifiedZero>& zs, const std::string& who) {
  for (size_t i = 1; i < zs.size(); ++i) {
    double gap = zs[i].theta - zs[i - 1].theta;
    if (gap < kZeroSeparationFloor || gap <= zs[i].radius + zs[i - 1].radius)
      throw numeric_error(who + ": zeros closer than the certification floor (multiplicity?)");
  }
}

}  // namespace detail

// Exact number of distinct real roots of F in the open interval (0, 1728);
// equals the interior arc zero count in the theorem regime.
inline long count_expected(const BasisForm& form) {
  if (form.F.degree() <= 0) return 0;
  return count_real_roots(form.F, Rational(0), Rational(1728));
}

inline ZeroSet isolate_zeros_poly(const BasisForm& form, const EvalConfig& cfg,
                                  double radius = kZeroRadiusTarget) {
  cfg.validate();
  auto [at_i, at_rho] = endpoint_orders(form);
  ZeroSet out{form.k(), form.m, {}, at_i, at_rho, IsolationMethod::poly_isolation};
  Polynomial f = form.F;
  if (f.degree() >= 1) {
    while (!f.is_zero() && f.eval(Rational(0)) == 0) f = f.deflate(Rational(0));
    while (!f.is_zero() && f.eval(Rational(1728)) == 0) f = f.deflate(Rational(1728));
  }
  if (f.degree() >= 1) {
    polyint::IntPoly sf = squarefree_part(f);
    std::vector<RootBracket> brackets = isolate_real_roots(f, Rational(0), Rational(1728));
    for (const RootBracket& rb : brackets) {
      detail::JBracket jb{rb.lo, rb.hi};
      out.zeros.push_back(detail::theta_from_j_bracket(sf, jb, cfg, radius));
    }
    // j is decreasing, so brackets sorted by j give thetas in reverse order
    std::sort(out.zeros.begin(), out.zeros.end(),
              [](const CertifiedZero& a, const CertifiedZero& b) { return a.theta < b.theta; });
    detail::check_separation(out.zeros, "isolate_zeros_poly");
  }
  return out;
}

inline ZeroSet isolate_zeros_scan(const BasisForm& form, const EvalConfig& cfg,
                                  double radius = kZeroRadiusTarget) {
  cfg.validate();
  auto [at_i, at_rho] = endpoint_orders(form);
  ZeroSet out{form.k(), form.m, {}, at_i, at_rho, IsolationMethod::sign_scan};

  double k = static_cast<double>(std::labs(form.k()));
  double m_eff = static_cast<double>(std::max<long>(form.m, 1));
  double h = std::min(1e-3, std::numbers::pi /
                                (4 * (k + 2 * std::sqrt(3.0) * std::numbers::pi * m_eff)));
  std::vector<double> grid;
  grid.push_back(kThetaLo + h / 8);
  for (double t = kThetaLo + h; t < kThetaHi - h / 2; t += h) grid.push_back(t);
  grid.push_back(kThetaHi - h / 8);

  int prev_sign = 0;
  double prev_theta = 0;
  for (double t : grid) {
    int s = real_trace(form, t, cfg).value.sign();
    if (s == 0) throw numeric_error("isolate_zeros_scan: exact zero on grid point");
    if (prev_sign != 0 && s != prev_sign) {
      double lo = prev_theta, hi = t;
      int slo = prev_sign;
      while (hi - lo > 2 * radius) {
        double mid = 0.5 * (lo + hi);
        int sm = real_trace(form, mid, cfg).value.sign();
        if (sm == 0) throw numeric_error("isolate_zeros_scan: exact zero at bisection point");
        if (sm == slo)
          lo = mid;
        else
          hi = mid;
      }
      out.zeros.push_back(CertifiedZero{0.5 * (lo + hi), 0.5 * (hi - lo)});
    }
    prev_sign = s;
    prev_theta = t;
  }
  detail::check_separation(out.zeros, "isolate_zeros_scan");
  return out;
}

inline ZeroSet isolate_zeros(const BasisForm& form, const EvalConfig& cfg,
                             IsolationMethod method = IsolationMethod::poly_isolation,
                             double radius = kZeroRadiusTarget) {
  return method == IsolationMethod::poly_isolation ? isolate_zeros_poly(form, cfg, radius)
                                                   : isolate_zeros_scan(form, cfg, radius);
}

// Compare the two isolation paths: same count and pairwise agreement within
// the certification radii. Returns an explanation on failure.
inline std::optional<std::string> compare_zero_sets(const ZeroSet& a, const ZeroSet& b) {
  if (a.zeros.size() != b.zeros.size())
    return "zero count mismatch: " + std::to_string(a.zeros.size()) + " vs " +
           std::to_string(b.zeros.size());
  for (size_t i = 0; i < a.zeros.size(); ++i) {
    double d = std::fabs(a.zeros[i].theta - b.zeros[i].theta);
    if (d > a.zeros[i].radius + b.zeros[i].radius + 1e-15)
      return "zero " + std::to_string(i) + " disagrees by " + std::to_string(d);
  }
  return std::nullopt;
}

// Runs both paths, raises a diagnostic if they disagree, returns the
// poly-isolation result.
inline ZeroSet isolate_zeros_checked(const BasisForm& form, const EvalConfig& cfg,
                                     double radius = kZeroRadiusTarget) {
  ZeroSet a = isolate_zeros_poly(form, cfg, radius);
  ZeroSet b = isolate_zeros_scan(form, cfg, radius);
  if (auto why = compare_zero_sets(a, b))
    throw numeric_error("isolate_zeros_checked: path disagreement for " + form.label() + ": " +
                        *why);
  return a;
}

// ---------------------------------------------------------------------------
// Interlacing

enum class WhichSet { A, B };

struct InterlaceVerdict {
  bool ok = false;
  std::optional<std::pair<size_t, size_t>> witness;  // merged positions violating alternation
  std::optional<WhichSet> first_belongs_to, last_belongs_to;
};

// Strict alternation of the merged zero sequences. Certification intervals
// that straddle are an error (insufficient refinement), not a verdict.
inline InterlaceVerdict interlace_check(const ZeroSet& a, const ZeroSet& b) {
  struct Entry {
    double theta, radius;
    WhichSet who;
  };
  std::vector<Entry> merged;
  merged.reserve(a.zeros.size() + b.zeros.size());
  for (const auto& z : a.zeros) merged.push_back({z.theta, z.radius, WhichSet::A});
  for (const auto& z : b.zeros) merged.push_back({z.theta, z.radius, WhichSet::B});
  std::sort(merged.begin(), merged.end(),
            [](const Entry& x, const Entry& y) { return x.theta < y.theta; });
  for (size_t i = 1; i < merged.size(); ++i) {
    double gap = merged[i].theta - merged[i - 1].theta;
    if (gap <= merged[i].radius + merged[i - 1].radius)
      throw numeric_error("interlace_check: overlapping certification intervals");
  }
  InterlaceVerdict v;
  v.ok = true;
  for (size_t i = 1; i < merged.size(); ++i) {
    if (merged[i].who == merged[i - 1].who) {
      v.ok = false;
      v.witness = std::make_pair(i - 1, i);
      break;
    }
  }
  if (!merged.empty()) {
    v.first_belongs_to = merged.front().who;
    v.last_belongs_to = merged.back().who;
  }
  return v;
}

// Restriction of a zero set to theta < 2pi/3 - eps (the trimmed arc).
inline ZeroSet trim_to_arc_eps(ZeroSet zs, double eps) {
  if (eps > 0) {
    double cutoff = kThetaHi - eps;
    std::erase_if(zs.zeros, [cutoff](const CertifiedZero& z) { return z.theta >= cutoff; });
  }
  return zs;
}

}  // namespace mzl

#endif
