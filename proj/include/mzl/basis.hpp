#ifndef MZL_BASIS_HPP
#define MZL_BASIS_HPP

// Construction of the canonical basis elements f_{k,m} = q^{-m} + O(q^{l+1})
// of the weight-k space of weakly holomorphic forms for SL2(Z), in the
// factored shape Delta^l * E_{k'} * F(j) with F monic of degree l+m. The
// coefficients of F come from exact triangular elimination: base * j^i has
// leading term q^{l-i} with unit coefficient, so the linear system against
// the exponent window q^{-m} .. q^l is unit-triangular.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mzl/polynomial.hpp"
#include "mzl/rational.hpp"
#include "mzl/series.hpp"

namespace mzl {

struct WeightSplit {
  long k = 0;
  long ell = 0;     // l in k = 12l + k'
  long kprime = 0;  // k' in {0, 4, 6, 8, 10, 14}
};

// Unique decomposition k = 12l + k' with k' in {0,4,6,8,10,14}; l may be
// negative. Odd weights are rejected.
inline WeightSplit split_weight(long k) {
  if (k % 2 != 0) throw std::invalid_argument("split_weight: weight must be even");
  static constexpr long table[6] = {0, 14, 4, 6, 8, 10};  // indexed by (k mod 12)/2
  long r = floor_mod(k, 12);
  long kp = table[r / 2];
  return WeightSplit{k, (k - kp) / 12, kp};
}

struct BasisForm {
  WeightSplit split;
  long m = 0;
  Polynomial F;           // monic, degree l + m, exact rational coefficients
  ExactSeries expansion;  // q^{-m} + O(q^{l+1}), cached through at least q^{max(l+1,16)}

  long k() const { return split.k; }
  long ell() const { return split.ell; }
  long kprime() const { return split.kprime; }
  std::string label() const {
    return "f_{" + std::to_string(split.k) + "," + std::to_string(m) + "}";
  }
};

// Build f_{k,m}. The expansion cache extends through q^{max(l+1, cache_trunc)}
// so callers can inspect coefficients past the defining window.
inline BasisForm construct(long k, long m, long cache_trunc = 16) {
  WeightSplit ws = split_weight(k);
  long ell = ws.ell;
  if (m < -ell) throw std::invalid_argument("construct: m < -l, no such basis element");
  long d = ell + m;  // degree of F
  long window_hi = std::max(ell + 1, cache_trunc);
  // Truncations so that every product base * j^i is valid through window_hi.
  long work = window_hi + d + std::abs(ell) + 2;

  ExactSeries ekp = eisenstein(ws.kprime, work);
  ExactSeries base = (ell == 0) ? ekp : delta(work + std::abs(ell) + 1).pow(ell) * ekp;
  ExactSeries j = jfunction(work + d);

  // powers[i] = base * j^i, each with leading term q^{l-i} (+1 coefficient)
  std::vector<ExactSeries> powers;
  powers.reserve(static_cast<size_t>(d) + 1);
  powers.push_back(base);
  for (long i = 1; i <= d; ++i) powers.push_back(powers.back() * j);

  std::vector<Rational> fc(static_cast<size_t>(d) + 1);
  fc[static_cast<size_t>(d)] = 1;
  ExactSeries acc = powers[static_cast<size_t>(d)];
  for (long i = d - 1; i >= 0; --i) {
    Rational ci = -acc.coeff(ell - i);
    fc[static_cast<size_t>(i)] = ci;
    if (ci != 0) acc = acc + powers[static_cast<size_t>(i)] * ci;
  }

  // Trim the cached expansion to the certified window [-m, window_hi].
  long lo = -m;
  std::vector<Rational> cc;
  cc.reserve(static_cast<size_t>(window_hi - lo + 1));
  for (long n = lo; n <= window_hi; ++n) cc.push_back(acc.coeff(n));
  ExactSeries expansion(lo, window_hi, std::move(cc));

  if (expansion.coeff(-m) != 1)
    throw std::logic_error("construct: leading coefficient is not 1");
  for (long n = -m + 1; n <= ell; ++n)
    if (expansion.coeff(n) != 0) throw std::logic_error("construct: gap coefficient not eliminated");

  return BasisForm{ws, m, Polynomial(std::move(fc)), std::move(expansion)};
}

// Gap function G_k = f_{k,0} = 1 + O(q^{l+1}); defined for even k >= 4.
inline BasisForm gap_function(long k) {
  if (k < 4) throw std::invalid_argument("gap_function: weight must be >= 4");
  return construct(k, 0);
}

// Vanishing orders of f_{k,m} at the corner points z = i and z = rho,
// in the valence-formula normalization (halves at i, thirds at rho).
// E_{k'} forces a zero of order 1/2 at i when k = 2 mod 4 and of order
// eps/3 at rho with eps = k mod 3; each root of F at j = 1728 (resp.
// j = 0) adds a full unit.
inline std::pair<Rational, Rational> endpoint_orders(const BasisForm& f) {
  Rational at_i = (floor_mod(f.k(), 4) == 2) ? Rational(1, 2) : Rational(0);
  Rational at_rho = Rational(floor_mod(f.k(), 3), 3);
  at_i += Rational(f.F.multiplicity_at(Rational(1728)));
  at_rho += Rational(f.F.multiplicity_at(Rational(0)));
  return {at_i, at_rho};
}

}  // namespace mzl

#endif
