#ifndef MZL_POLYNOMIAL_HPP
#define MZL_POLYNOMIAL_HPP

// Dense univariate polynomials with exact rational coefficients, plus the
// integer Sturm-chain machinery used to count and isolate real roots of
// F(j) in (0, 1728). All root counting here is exact; no floating point
// is involved until a bracket is handed to the arc evaluator.

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mzl/rational.hpp"
#include "mzl/real.hpp"

namespace mzl {

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const Rational& v) { return Polynomial({v}); }

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& operator[](size_t i) const {
    static const Rational zero{};
    return i < c_.size() ? c_[i] : zero;
  }
  const Rational& leading() const {
    if (c_.empty()) throw std::logic_error("Polynomial::leading: zero polynomial");
    return c_.back();
  }

  Rational eval(const Rational& x) const {
    Rational acc;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Real eval_real(const Real& x) const {
    Real acc(0L, x.prec());
    for (size_t i = c_.size(); i-- > 0;) {
      acc *= x;
      acc += Real(c_[i], x.prec());
    }
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Polynomial(std::move(d));
  }

  // Synthetic division by (x - root); throws unless root is an exact root.
  Polynomial deflate(const Rational& root) const {
    if (c_.empty()) throw std::invalid_argument("Polynomial::deflate: zero polynomial");
    std::vector<Rational> q(c_.size() - 1);
    Rational carry = c_.back();
    for (size_t i = c_.size() - 1; i-- > 0;) {
      q[i] = carry;
      carry = c_[i] + carry * root;
    }
    if (carry != 0) throw std::invalid_argument("Polynomial::deflate: not a root");
    return Polynomial(std::move(q));
  }

  long multiplicity_at(const Rational& r) const {
    long mult = 0;
    Polynomial p = *this;
    while (!p.is_zero() && p.eval(r) == 0) {
      p = p.deflate(r);
      ++mult;
    }
    return mult;
  }

  // Exact long division; throws if the remainder is nonzero.
  Polynomial divide_exact(const Polynomial& d) const {
    if (d.is_zero()) throw std::invalid_argument("Polynomial::divide_exact: zero divisor");
    std::vector<Rational> rem(c_);
    long dq = degree() - d.degree();
    if (dq < 0) {
      if (!is_zero()) throw std::invalid_argument("Polynomial::divide_exact: inexact");
      return Polynomial();
    }
    std::vector<Rational> q(static_cast<size_t>(dq) + 1);
    for (long i = dq; i >= 0; --i) {
      Rational f = rem[static_cast<size_t>(i + d.degree())] / d.leading();
      q[static_cast<size_t>(i)] = f;
      if (f == 0) continue;
      for (long j = 0; j <= d.degree(); ++j)
        rem[static_cast<size_t>(i + j)] -= f * d[static_cast<size_t>(j)];
    }
    for (const auto& r : rem)
      if (r != 0) throw std::invalid_argument("Polynomial::divide_exact: inexact");
    return Polynomial(std::move(q));
  }

  bool has_integer_coefficients() const {
    for (const auto& x : c_)
      if (!is_integer(x)) return false;
    return true;
  }

  // Bit length of the largest coefficient (numerator or denominator);
  // used to pick a safe Horner working precision.
  unsigned long max_coeff_bits() const {
    unsigned long bits = 1;
    for (const auto& x : c_) {
      bits = std::max(bits, static_cast<unsigned long>(msb_bits(numerator(x))));
      bits = std::max(bits, static_cast<unsigned long>(msb_bits(denominator(x))));
    }
    return bits;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  static unsigned long msb_bits(const Integer& n) {
    if (n == 0) return 1;
    return boost::multiprecision::msb(boost::multiprecision::abs(n)) + 1;
  }
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

// ---------------------------------------------------------------------------
// Integer polynomial helpers (primitive parts, pseudo-remainders)

namespace polyint {

using IntPoly = std::vector<Integer>;  // p[i] = coeff of x^i, no trailing zeros

inline void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline long deg(const IntPoly& p) { return static_cast<long>(p.size()) - 1; }

inline Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p) g = boost::multiprecision::gcd(g, c);
  return g;
}

inline IntPoly primitive(IntPoly p) {
  trim(p);
  Integer g = content(p);
  if (g > 1)
    for (auto& c : p) c /= g;
  return p;
}

// Clear denominators of a rational polynomial and remove content.
inline IntPoly from_rational(const Polynomial& p) {
  Integer lcm = 1;
  for (const auto& c : p.coeffs()) lcm = boost::multiprecision::lcm(lcm, denominator(c));
  IntPoly out(p.coeffs().size());
  for (size_t i = 0; i < out.size(); ++i) {
    const Rational& c = p.coeffs()[i];
    out[i] = numerator(c) * (lcm / denominator(c));
  }
  return primitive(std::move(out));
}

inline IntPoly derivative(const IntPoly& p) {
  if (p.size() <= 1) return {};
  IntPoly d(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<long>(i);
  return d;
}

// Pseudo-remainder of lc(b)^(deg a - deg b + 1) * a modulo b. Returns the
// remainder and the sign of the applied multiplier so Sturm construction
// can recover the sign of the true remainder.
inline std::pair<IntPoly, int> pseudo_rem(IntPoly a, const IntPoly& b) {
  long da = deg(a), db = deg(b);
  if (db < 0) throw std::invalid_argument("pseudo_rem: zero divisor");
  long e = da - db + 1;
  const Integer& lb = b.back();
  int mult_sign = (lb < 0 && e % 2 == 1) ? -1 : 1;
  long applied = 0;
  while (deg(a) >= db && !a.empty()) {
    Integer s = a.back();
    long shift = deg(a) - db;
    for (auto& c : a) c *= lb;
    for (long j = 0; j <= db; ++j) a[static_cast<size_t>(shift + j)] -= s * b[static_cast<size_t>(j)];
    trim(a);
    ++applied;
  }
  // top up so the total multiplier is exactly lb^e
  for (; applied < e; ++applied)
    for (auto& c : a) c *= lb;
  return {std::move(a), mult_sign};
}

inline IntPoly gcd(IntPoly a, IntPoly b) {
  trim(a);
  trim(b);
  if (deg(a) < deg(b)) std::swap(a, b);
  while (!b.empty()) {
    IntPoly r = primitive(pseudo_rem(a, b).first);
    a = std::move(b);
    b = std::move(r);
  }
  a = primitive(std::move(a));
  if (!a.empty() && a.back() < 0)
    for (auto& c : a) c = -c;
  return a;
}

// Sign of p(num/den) with den > 0: the sign of sum c_i num^i den^{d-i}.
inline int sign_at(const IntPoly& p, const Integer& num, const Integer& den) {
  if (p.empty()) return 0;
  Integer acc = p.back();
  Integer dp = 1;
  for (size_t i = p.size() - 1; i-- > 0;) {
    dp *= den;
    acc = acc * num + p[i] * dp;
  }
  return acc == 0 ? 0 : (acc > 0 ? 1 : -1);
}

inline int sign_at(const IntPoly& p, const Rational& x) {
  return sign_at(p, numerator(x), denominator(x));
}

inline Real eval_real(const IntPoly& p, const Real& x) {
  Real acc(0L, x.prec());
  for (size_t i = p.size(); i-- > 0;) {
    acc *= x;
    acc += Real(p[i], x.prec());
  }
  return acc;
}

}  // namespace polyint

// ---------------------------------------------------------------------------
// Sturm chains and root isolation

class SturmChain {
 public:
  explicit SturmChain(const polyint::IntPoly& p) {
    seq_.push_back(p);
    polyint::IntPoly d = polyint::derivative(p);
    if (!d.empty()) seq_.push_back(polyint::primitive(std::move(d)));
    while (seq_.size() >= 2 && !seq_.back().empty() && polyint::deg(seq_.back()) >= 0) {
      const auto& a = seq_[seq_.size() - 2];
      const auto& b = seq_.back();
      if (polyint::deg(b) == 0) break;
      auto [rem, mult_sign] = polyint::pseudo_rem(a, b);
      polyint::trim(rem);
      if (rem.empty()) break;
      rem = polyint::primitive(std::move(rem));
      // next = -(true remainder) up to a positive factor
      if (mult_sign > 0)
        for (auto& c : rem) c = -c;
      seq_.push_back(std::move(rem));
    }
  }
  explicit SturmChain(const Polynomial& p) : SturmChain(polyint::from_rational(p)) {}

  int variations_at(const Rational& x) const {
    int last = 0, var = 0;
    for (const auto& p : seq_) {
      int s = polyint::sign_at(p, x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++var;
      last = s;
    }
    return var;
  }

  // Number of distinct real roots in (a, b]; requires p(a) != 0.
  long count_half_open(const Rational& a, const Rational& b) const {
    return variations_at(a) - variations_at(b);
  }

  // Number of distinct real roots in the open interval (a, b);
  // requires p(a) != 0 and p(b) != 0.
  long count_open(const Rational& a, const Rational& b) const {
    if (polyint::sign_at(seq_.front(), a) == 0 || polyint::sign_at(seq_.front(), b) == 0)
      throw std::invalid_argument("SturmChain::count_open: endpoint is a root");
    return count_half_open(a, b);
  }

  const polyint::IntPoly& poly() const { return seq_.front(); }

 private:
  std::vector<polyint::IntPoly> seq_;
};

struct RootBracket {
  Rational lo, hi;       // lo == hi for an exact rational root
  bool exact = false;
};

namespace detail {

// var_lo/var_hi carry the chain variation counts at the endpoints so each
// subdivision evaluates the chain only at its midpoint.
inline void isolate_rec(const SturmChain& chain, const Rational& lo, const Rational& hi,
                        int var_lo, int var_hi, std::vector<RootBracket>& out, int depth) {
  long count = var_lo - var_hi;
  if (count <= 0) return;
  if (depth > 4096) throw std::runtime_error("isolate_rec: subdivision depth exceeded");
  if (count == 1) {
    out.push_back({lo, hi, false});
    return;
  }
  Rational mid = (lo + hi) / 2;
  if (polyint::sign_at(chain.poly(), mid) == 0) {
    // exact rational root at the midpoint: record it and isolate the rest
    out.push_back({mid, mid, true});
    Rational eps = (hi - lo) / 1024;
    Rational ml = mid - eps, mr = mid + eps;
    // shrink the guard band until it contains only the midpoint root
    while (polyint::sign_at(chain.poly(), ml) == 0 || polyint::sign_at(chain.poly(), mr) == 0 ||
           chain.count_half_open(ml, mr) != 1) {
      eps /= 2;
      ml = mid - eps;
      mr = mid + eps;
    }
    isolate_rec(chain, lo, ml, var_lo, chain.variations_at(ml), out, depth + 1);
    isolate_rec(chain, mr, hi, chain.variations_at(mr), var_hi, out, depth + 1);
    return;
  }
  int var_mid = chain.variations_at(mid);
  isolate_rec(chain, lo, mid, var_lo, var_mid, out, depth + 1);
  isolate_rec(chain, mid, hi, var_mid, var_hi, out, depth + 1);
}

}  // namespace detail

// Primitive integer square-free part of p (same distinct roots, all simple).
inline polyint::IntPoly squarefree_part(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
  polyint::IntPoly ip = polyint::from_rational(p);
  polyint::IntPoly g = polyint::gcd(ip, polyint::derivative(ip));
  if (polyint::deg(g) <= 0) return ip;
  std::vector<Rational> gc(g.size());
  for (size_t i = 0; i < g.size(); ++i) gc[i] = Rational(g[i]);
  std::vector<Rational> pc(ip.size());
  for (size_t i = 0; i < ip.size(); ++i) pc[i] = Rational(ip[i]);
  Polynomial quot = Polynomial(std::move(pc)).divide_exact(Polynomial(std::move(gc)));
  return polyint::from_rational(quot);
}

// Isolate the distinct real roots of p in the open interval (a, b) into
// disjoint brackets, each containing exactly one root. Multiple roots are
// isolated once (the square-free part is used internally). Requires
// p(a) != 0 and p(b) != 0.
inline std::vector<RootBracket> isolate_real_roots(const Polynomial& p, const Rational& a,
                                                   const Rational& b) {
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  if (p.eval(a) == 0 || p.eval(b) == 0)
    throw std::invalid_argument("isolate_real_roots: interval endpoint is a root");
  polyint::IntPoly sf = squarefree_part(p);
  SturmChain chain(sf);
  if (polyint::sign_at(sf, a) == 0 || polyint::sign_at(sf, b) == 0)
    throw std::invalid_argument("isolate_real_roots: interval endpoint is a root");
  std::vector<RootBracket> out;
  detail::isolate_rec(chain, a, b, chain.variations_at(a), chain.variations_at(b), out, 0);
  std::sort(out.begin(), out.end(),
            [](const RootBracket& x, const RootBracket& y) { return x.lo < y.lo; });
  return out;
}

// Number of distinct real roots of p in the open interval (a, b).
inline long count_real_roots(const Polynomial& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw std::invalid_argument("count_real_roots: zero polynomial");
  if (p.degree() == 0) return 0;
  Polynomial q = p;
  // endpoint roots are excluded from the open count
  while (q.eval(a) == 0) q = q.deflate(a);
  while (q.eval(b) == 0) q = q.deflate(b);
  if (q.degree() <= 0) return 0;
  SturmChain chain(q);
  return chain.count_open(a, b);
}

}  // namespace mzl

#endif
