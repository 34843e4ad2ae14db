#ifndef MZL_REAL_HPP
#define MZL_REAL_HPP

// Thin value-semantics wrapper around MPFR. Every Real carries its own
// precision in bits; binary operations compute at the larger of the two
// operand precisions, so precision never degrades silently. Rounding is
// to nearest throughout.

#include <mpfr.h>

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mzl/rational.hpp"

namespace mzl {

class Real {
 public:
  explicit Real(mpfr_prec_t prec = 64) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_zero(v_, 1);
  }
  Real(long x, mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_si(v_, x, MPFR_RNDN);
  }
  Real(double x, mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_d(v_, x, MPFR_RNDN);
  }
  Real(const Rational& q, mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_q(v_, q.backend().data(), MPFR_RNDN);
  }
  Real(const Integer& n, mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_z(v_, n.backend().data(), MPFR_RNDN);
  }

  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  Real with_prec(mpfr_prec_t p) const {
    Real r(p);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  static Real pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(v_); }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }

  std::string str(int digits = 20) const {
    char* s = nullptr;
    if (mpfr_asprintf(&s, "%.*Rg", digits, v_) < 0) return "<err>";
    std::string out(s);
    mpfr_free_str(s);
    return out;
  }

  Real& operator+=(const Real& o) { return inplace(mpfr_add, o); }
  Real& operator-=(const Real& o) { return inplace(mpfr_sub, o); }
  Real& operator*=(const Real& o) { return inplace(mpfr_mul, o); }
  Real& operator/=(const Real& o) { return inplace(mpfr_div, o); }

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend Real operator-(const Real& a) {
    Real r(a.prec());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  friend Real operator*(Real a, long b) {
    mpfr_mul_si(a.v_, a.v_, b, MPFR_RNDN);
    return a;
  }
  friend Real operator*(long a, Real b) { return std::move(b) * a; }
  friend Real operator/(Real a, long b) {
    mpfr_div_si(a.v_, a.v_, b, MPFR_RNDN);
    return a;
  }
  friend Real operator+(Real a, long b) {
    mpfr_add_si(a.v_, a.v_, b, MPFR_RNDN);
    return a;
  }
  friend Real operator-(Real a, long b) {
    mpfr_sub_si(a.v_, a.v_, b, MPFR_RNDN);
    return a;
  }

  friend int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_); }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_); }

  friend bool operator<(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) < 0; }
  friend bool operator>(const Real& a, double b) { return mpfr_cmp_d(a.v_, b) > 0; }
  friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
  friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }

  friend Real abs(const Real& a) {
    Real r(a.prec());
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real sqrt(const Real& a) { return unary(mpfr_sqrt, a); }
  friend Real sin(const Real& a) { return unary(mpfr_sin, a); }
  friend Real cos(const Real& a) { return unary(mpfr_cos, a); }
  friend Real tan(const Real& a) { return unary(mpfr_tan, a); }
  friend Real exp(const Real& a) { return unary(mpfr_exp, a); }
  friend Real log(const Real& a) { return unary(mpfr_log, a); }
  friend Real hypot(const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec()));
    mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real pow(const Real& a, long e) {
    Real r(a.prec());
    mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
    return r;
  }
  friend Real pow(const Real& a, const Real& e) {
    Real r(std::max(a.prec(), e.prec()));
    mpfr_pow(r.v_, a.v_, e.v_, MPFR_RNDN);
    return r;
  }
  friend Real floor(const Real& a) { return unary_exact(mpfr_floor, a); }
  friend Real ceil(const Real& a) { return unary_exact(mpfr_ceil, a); }

  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  // Direct handle for interop (e.g. printing with mpfr_printf).
  const mpfr_t& raw() const { return v_; }

 private:
  static mpfr_prec_t clamp(mpfr_prec_t p) { return std::max<mpfr_prec_t>(p, MPFR_PREC_MIN); }

  template <typename F>
  Real& inplace(F op, const Real& o) {
    mpfr_prec_t p = std::max(prec(), o.prec());
    if (p > prec()) mpfr_prec_round(v_, p, MPFR_RNDN);
    op(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  template <typename F>
  static Real unary(F op, const Real& a) {
    Real r(a.prec());
    op(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  template <typename F>
  static Real unary_exact(F op, const Real& a) {
    Real r(a.prec());
    op(r.v_, a.v_);
    return r;
  }

  mpfr_t v_;
};

// Complex number over Real; only the handful of operations the arc and
// segment evaluators need.
struct Complex {
  Real re, im;

  Complex() = default;
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(mpfr_prec_t prec) : re(prec), im(prec) {}

  static Complex expi(const Real& theta) { return Complex(cos(theta), sin(theta)); }

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }

  friend Complex operator*(const Complex& a, const Complex& b) {
    return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend Complex operator*(const Complex& a, const Real& s) { return Complex(a.re * s, a.im * s); }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Real n = b.re * b.re + b.im * b.im;
    return Complex((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
  }

  Complex conj() const { return Complex(re, -im); }
  Real abs() const { return hypot(re, im); }
  Real norm() const { return re * re + im * im; }
};

}  // namespace mzl

#endif
