#ifndef MZL_SERIES_HPP
#define MZL_SERIES_HPP

// Exact arithmetic on truncated Laurent series in q with rational
// coefficients. A series stores the coefficients of q^lead .. q^trunc and
// is an exact representative of its function modulo O(q^{trunc+1}).
// Every operation returns the provably valid truncation: multiplying
// series valid through q^a and q^b with leads la, lb yields validity
// through min(a+lb, b+la).

#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mzl/rational.hpp"

namespace mzl {

class ExactSeries {
 public:
  ExactSeries(long lead, long trunc, std::vector<Rational> coeffs)
      : lead_(lead), trunc_(trunc), c_(std::move(coeffs)) {
    if (trunc_ < lead_ || c_.size() != static_cast<size_t>(trunc_ - lead_ + 1))
      throw std::invalid_argument("ExactSeries: coefficient count must be trunc - lead + 1");
  }

  static ExactSeries constant(const Rational& v, long trunc) {
    std::vector<Rational> c(static_cast<size_t>(trunc) + 1);
    c[0] = v;
    return ExactSeries(0, trunc, std::move(c));
  }
  static ExactSeries monomial(const Rational& v, long e, long trunc) {
    std::vector<Rational> c(static_cast<size_t>(trunc - e) + 1);
    c[0] = v;
    return ExactSeries(e, trunc, std::move(c));
  }

  long lead() const { return lead_; }
  long trunc() const { return trunc_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  // Coefficient of q^n. Exponents below lead are structurally zero;
  // exponents above trunc are unknown and reading them is an error.
  const Rational& coeff(long n) const {
    static const Rational zero{};
    if (n < lead_) return zero;
    if (n > trunc_) throw std::out_of_range("ExactSeries::coeff: exponent beyond truncation");
    return c_[static_cast<size_t>(n - lead_)];
  }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }

  // First exponent with a nonzero coefficient, or trunc()+1 for the zero series.
  long valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) return lead_ + static_cast<long>(i);
    return trunc_ + 1;
  }

  // Drop structurally-leading zero coefficients so lead is the lowest
  // exponent actually present.
  ExactSeries normalized() const {
    long v = valuation();
    if (v == lead_) return *this;
    if (v > trunc_) return ExactSeries(trunc_, trunc_, {Rational(0)});
    std::vector<Rational> c(c_.begin() + (v - lead_), c_.end());
    return ExactSeries(v, trunc_, std::move(c));
  }

  friend ExactSeries operator+(const ExactSeries& a, const ExactSeries& b) {
    long lead = std::min(a.lead_, b.lead_);
    long trunc = std::min(a.trunc_, b.trunc_);
    if (trunc < lead) throw std::invalid_argument("ExactSeries: incompatible truncations in +");
    std::vector<Rational> c(static_cast<size_t>(trunc - lead + 1));
    for (long n = lead; n <= trunc; ++n) {
      Rational v;
      if (n >= a.lead_ && n <= a.trunc_) v += a.coeff(n);
      if (n >= b.lead_ && n <= b.trunc_) v += b.coeff(n);
      c[static_cast<size_t>(n - lead)] = std::move(v);
    }
    return ExactSeries(lead, trunc, std::move(c));
  }
  friend ExactSeries operator-(const ExactSeries& a, const ExactSeries& b) { return a + (b * Rational(-1)); }

  friend ExactSeries operator*(const ExactSeries& a, const Rational& s) {
    std::vector<Rational> c(a.c_);
    for (auto& x : c) x *= s;
    return ExactSeries(a.lead_, a.trunc_, std::move(c));
  }

  friend ExactSeries operator*(const ExactSeries& a, const ExactSeries& b) {
    long lead = a.lead_ + b.lead_;
    long trunc = std::min(a.trunc_ + b.lead_, b.trunc_ + a.lead_);
    if (trunc < lead) throw std::invalid_argument("ExactSeries: incompatible truncations in *");
    std::vector<Rational> c(static_cast<size_t>(trunc - lead + 1));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      long ea = a.lead_ + static_cast<long>(i);
      long jmax = std::min<long>(static_cast<long>(b.c_.size()) - 1, trunc - ea - b.lead_);
      for (long j = 0; j <= jmax; ++j) {
        if (b.c_[static_cast<size_t>(j)] == 0) continue;
        c[static_cast<size_t>(ea + b.lead_ + j - lead)] += a.c_[i] * b.c_[static_cast<size_t>(j)];
      }
    }
    return ExactSeries(lead, trunc, std::move(c));
  }

  // Equality as functions on the common window of validity.
  friend bool operator==(const ExactSeries& a, const ExactSeries& b) {
    long lead = std::min(a.lead_, b.lead_);
    long trunc = std::min(a.trunc_, b.trunc_);
    for (long n = lead; n <= trunc; ++n)
      if (a.coeff(n) != b.coeff(n)) return false;
    return true;
  }

  // Multiplicative inverse via the standard reciprocal recurrence after
  // factoring out the leading term. A series valid through q^T with lead
  // L has an inverse valid through q^{T-2L} with lead -L.
  ExactSeries inverse() const {
    ExactSeries s = normalized();
    if (s.is_zero() || s.c_[0] == 0)
      throw std::invalid_argument("ExactSeries::inverse: zero leading coefficient");
    long lam = s.lead_;
    long out_trunc = s.trunc_ - 2 * lam;
    long n_terms = out_trunc + lam + 1;  // == s.trunc_ - lam + 1, number of known coefficients
    std::vector<Rational> r(static_cast<size_t>(n_terms));
    const Rational& c0 = s.c_[0];
    r[0] = 1 / c0;
    for (long n = 1; n < n_terms; ++n) {
      Rational acc;
      for (long i = 1; i <= n; ++i) {
        const Rational& si = s.c_[static_cast<size_t>(i)];
        if (si != 0) acc += si * r[static_cast<size_t>(n - i)];
      }
      r[static_cast<size_t>(n)] = -acc / c0;
    }
    return ExactSeries(-lam, out_trunc, std::move(r));
  }

  // Integer power; negative exponents use the Laurent inverse and require
  // an invertible leading coefficient.
  ExactSeries pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    if (e == 0) return constant(Rational(1), trunc_ - lead_);
    ExactSeries acc = *this;
    for (long i = 1; i < e; ++i) acc = acc * (*this);
    return acc;
  }

 private:
  long lead_, trunc_;
  std::vector<Rational> c_;
};

// ---------------------------------------------------------------------------
// Standard arithmetic helpers

// sigma_{p}(n) = sum of d^p over divisors d of n, by trial division.
inline Integer sigma_power(long n, long p) {
  if (n <= 0) throw std::invalid_argument("sigma_power: n must be positive");
  Integer s = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    s += boost::multiprecision::pow(Integer(d), static_cast<unsigned>(p));
    long e = n / d;
    if (e != d) s += boost::multiprecision::pow(Integer(e), static_cast<unsigned>(p));
  }
  return s;
}

// n-th Bernoulli number, convention B_2 = 1/6, B_4 = -1/30. Computed once
// by the classical recurrence sum_{j<=n} C(n+1,j) B_j = 0 and memoized.
inline Rational bernoulli(long n) {
  if (n < 0 || (n % 2 == 1 && n != 1))
    throw std::invalid_argument("bernoulli: odd n rejected");
  static std::vector<Rational> cache = {Rational(1), Rational(-1, 2)};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<long>(cache.size()) <= n) {
    long i = static_cast<long>(cache.size());
    Rational acc;
    Integer binom = 1;  // C(i+1, 0)
    for (long j = 0; j < i; ++j) {
      acc += Rational(binom) * cache[static_cast<size_t>(j)];
      binom = binom * (i + 1 - j) / (j + 1);
    }
    cache.push_back(-acc / Rational(i + 1));
  }
  return cache[static_cast<size_t>(n)];
}

// Eisenstein series E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n, with E_0 = 1.
// k = 2 and odd k are outside the family and rejected.
inline ExactSeries eisenstein(long k, long trunc) {
  if (trunc < 0) throw std::invalid_argument("eisenstein: trunc must be >= 0");
  if (k == 0) return ExactSeries::constant(Rational(1), trunc);
  if (k < 4 || k % 2 != 0) throw std::invalid_argument("eisenstein: weight must be 0 or even >= 4");
  Rational factor = Rational(-2 * k) / bernoulli(k);
  std::vector<Rational> c(static_cast<size_t>(trunc) + 1);
  c[0] = 1;
  for (long n = 1; n <= trunc; ++n) c[static_cast<size_t>(n)] = factor * Rational(sigma_power(n, k - 1));
  return ExactSeries(0, trunc, std::move(c));
}

// Delta = (E_4^3 - E_6^2)/1728 = q - 24q^2 + 252q^3 - ...; lead is exactly 1.
inline ExactSeries delta(long trunc) {
  if (trunc < 1) throw std::invalid_argument("delta: trunc must be >= 1");
  ExactSeries e4 = eisenstein(4, trunc);
  ExactSeries e6 = eisenstein(6, trunc);
  ExactSeries d = (e4 * e4 * e4 - e6 * e6) * Rational(1, 1728);
  ExactSeries n = d.normalized();
  if (n.lead() != 1 || n.coeff(1) != 1)
    throw std::logic_error("delta: expansion does not start with q");
  return n;
}

// j = E_4^3 / Delta = q^{-1} + 744 + 196884 q + ...
inline ExactSeries jfunction(long trunc) {
  if (trunc < -1) throw std::invalid_argument("jfunction: trunc must be >= -1");
  ExactSeries e4 = eisenstein(4, trunc + 1);
  ExactSeries j = (e4 * e4 * e4) * delta(trunc + 2).inverse();
  if (j.lead() != -1 || j.coeff(-1) != 1)
    throw std::logic_error("jfunction: expansion does not start with q^{-1}");
  return j;
}

}  // namespace mzl

#endif
