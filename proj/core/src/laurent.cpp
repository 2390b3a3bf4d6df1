#include "vnskew/laurent.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "vnskew/polygamma.hpp"

namespace vnskew {

namespace {

int sat_add(int a, int b) {
  long s = static_cast<long>(a) + static_cast<long>(b);
  if (s >= LaurentSeries::kExactEverywhere) return LaurentSeries::kExactEverywhere;
  if (s <= -LaurentSeries::kExactEverywhere) return -LaurentSeries::kExactEverywhere;
  return static_cast<int>(s);
}

}  // namespace

LaurentSeries LaurentSeries::constant(const PolyValue& v, int truncation_order) {
  LaurentSeries s(truncation_order);
  s.set_coefficient(0, v);
  return s;
}

int LaurentSeries::order() const {
  return coeffs_.empty() ? kExactEverywhere : coeffs_.begin()->first;
}

PolyValue LaurentSeries::coefficient(int power) const {
  auto it = coeffs_.find(power);
  return it == coeffs_.end() ? PolyValue() : it->second;
}

void LaurentSeries::insert(int power, const PolyValue& v) {
  if (v.is_zero() || power > truncation_) return;
  if (power < kMinPower) {
    throw std::domain_error("LaurentSeries: pole below eps^-3");
  }
  auto [it, fresh] = coeffs_.try_emplace(power, v);
  if (!fresh) {
    it->second += v;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

void LaurentSeries::set_coefficient(int power, const PolyValue& v) {
  coeffs_.erase(power);
  insert(power, v);
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
  truncation_ = std::min(truncation_, o.truncation_);
  std::erase_if(coeffs_, [&](const auto& kv) { return kv.first > truncation_; });
  for (const auto& [p, v] : o.coeffs_) insert(p, v);
  return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) {
  truncation_ = std::min(truncation_, o.truncation_);
  std::erase_if(coeffs_, [&](const auto& kv) { return kv.first > truncation_; });
  for (const auto& [p, v] : o.coeffs_) insert(p, -v);
  return *this;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  // The product of two series each exact up to its truncation is exact up to
  // min over the cross terms; an identically-zero factor yields exact zero.
  if (a.is_zero() || b.is_zero()) {
    int t = std::min(sat_add(a.truncation_, b.order()), sat_add(b.truncation_, a.order()));
    return LaurentSeries(t);
  }
  int t = std::min(sat_add(a.truncation_, b.order()), sat_add(b.truncation_, a.order()));
  LaurentSeries out(t);
  for (const auto& [pa, va] : a.coeffs_) {
    for (const auto& [pb, vb] : b.coeffs_) {
      if (pa + pb > t) continue;
      out.insert(pa + pb, va * vb);
    }
  }
  return out;
}

LaurentSeries& LaurentSeries::operator*=(const PolyValue& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [p, v] : coeffs_) v *= c;
  return *this;
}

LaurentSeries& LaurentSeries::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [p, v] : coeffs_) v *= c;
  return *this;
}

LaurentSeries LaurentSeries::inverse() const {
  if (is_zero()) throw std::domain_error("LaurentSeries: inverse of zero");
  int m = order();
  const PolyValue& lead = coeffs_.begin()->second;
  if (!lead.is_rational()) {
    throw std::domain_error("LaurentSeries: inverse requires a rational leading coefficient");
  }
  Rational a0 = lead.constant_part();
  int depth = truncation_ - m;  // relative depth available
  // Normalized tail u_k = a_{m+k} / a0; v solves (1 + sum u eps^k) v = 1.
  std::vector<PolyValue> u(depth + 1), v(depth + 1);
  for (int k = 0; k <= depth; ++k) u[k] = coefficient(m + k) / a0;
  v[0] = PolyValue(Rational(1));
  for (int k = 1; k <= depth; ++k) {
    PolyValue acc;
    for (int i = 1; i <= k; ++i) acc += u[i] * v[k - i];
    v[k] = -acc;
  }
  LaurentSeries out(-m + depth);
  for (int k = 0; k <= depth; ++k) out.insert(-m + k, v[k] / a0);
  return out;
}

double LaurentSeries::evaluate(double eps) const {
  double total = 0.0;
  for (const auto& [p, v] : coeffs_) total += v.to_double() * std::pow(eps, p);
  return total;
}

LaurentSeries gamma_taylor(long z, int truncation) {
  if (z < 1) throw std::invalid_argument("gamma_taylor: argument must be positive");
  if (truncation > 3) {
    throw std::invalid_argument("gamma_taylor: truncation beyond 3 leaves the {g,z2,z3} domain");
  }
  const Rational gz{factorial(z - 1)};
  LaurentSeries s(truncation);
  s.set_coefficient(0, PolyValue(gz));
  if (truncation >= 1) {
    PolyValue p0 = psi_int(0, z);
    s.set_coefficient(1, gz * p0);
    if (truncation >= 2) {
      PolyValue p1 = psi_int(1, z);
      s.set_coefficient(2, gz * (p0 * p0 + p1) / Rational(2));
      if (truncation >= 3) {
        PolyValue p2 = psi_int(2, z);
        s.set_coefficient(3, gz * (p0.pow(3) + Rational(3) * p0 * p1 + p2) / Rational(6));
      }
    }
  }
  return s;
}

namespace {

// Gamma(l+1 - eps), i.e. the positive-argument Taylor with eps -> -eps.
LaurentSeries gamma_taylor_neg(long z, int truncation) {
  LaurentSeries g = gamma_taylor(z, truncation);
  LaurentSeries out(g.truncation_order());
  for (const auto& [p, v] : g.coefficients()) {
    out.set_coefficient(p, (p % 2 == 0) ? v : -v);
  }
  return out;
}

// sin(pi eps)/pi = eps - z2 eps^3 + (3/10) z2^2 eps^5 - ...
LaurentSeries sin_pi_over_pi(int truncation) {
  LaurentSeries s(truncation);
  const PolyValue z2 = PolyValue::symbol_z2();
  // (pi eps)^{2k} = (6 z2)^k eps^{2k}; sin(pi eps)/pi = sum (-1)^k pi^{2k} eps^{2k+1}/(2k+1)!
  PolyValue pi2k(Rational(1));
  Rational sign(1);
  for (int k = 0; 2 * k + 1 <= truncation; ++k) {
    s.set_coefficient(2 * k + 1, sign * pi2k / Rational(factorial(2 * k + 1)));
    pi2k *= Rational(6) * z2;
    sign = -sign;
  }
  return s;
}

// pi/sin(pi eps) = 1/eps + z2 eps + (7/10) z2^2 eps^3 + (31/70) z2^3 eps^5 + ...
LaurentSeries pi_over_sin(int truncation) {
  LaurentSeries s(truncation);
  const PolyValue z2 = PolyValue::symbol_z2();
  s.set_coefficient(-1, PolyValue(Rational(1)));
  if (truncation >= 1) s.set_coefficient(1, z2);
  if (truncation >= 3) s.set_coefficient(3, Rational(7, 10) * (z2 * z2));
  if (truncation >= 5) s.set_coefficient(5, Rational(31, 70) * z2.pow(3));
  if (truncation >= 7) throw std::invalid_argument("pi_over_sin: truncation too high");
  return s;
}

}  // namespace

LaurentSeries gamma_laurent(long l, int truncation) {
  if (l < 0) throw std::invalid_argument("gamma_laurent: l must be >= 0");
  if (truncation < -1) throw std::invalid_argument("gamma_laurent: truncation below the pole");
  if (truncation > 2) {
    throw std::invalid_argument("gamma_laurent: truncation beyond 2 leaves the {g,z2,z3} domain");
  }
  // Gamma(-l + eps) = (-1)^l [pi/sin(pi eps)] / Gamma(l+1-eps).
  LaurentSeries s = pi_over_sin(truncation + 1) * gamma_taylor_neg(l + 1, 3).inverse();
  if (l % 2 == 1) s *= Rational(-1);
  LaurentSeries out(truncation);
  for (const auto& [p, v] : s.coefficients()) {
    if (p <= truncation) out.set_coefficient(p, v);
  }
  return out;
}

LaurentSeries inv_gamma_series(long z, int truncation) {
  if (z >= 1) {
    if (truncation > 3) {
      throw std::invalid_argument("inv_gamma_series: truncation beyond 3 for positive argument");
    }
    return gamma_taylor(z, 3).inverse();
  }
  if (truncation > 4) {
    throw std::invalid_argument("inv_gamma_series: truncation beyond 4 for non-positive argument");
  }
  // 1/Gamma(-l + eps) = (-1)^l sin(pi eps)/pi * Gamma(l+1 - eps): entire, simple
  // zero at eps = 0.
  long l = -z;
  LaurentSeries s = sin_pi_over_pi(truncation) * gamma_taylor_neg(l + 1, 3);
  if (l % 2 == 1) s *= Rational(-1);
  return s;
}

LaurentSeries psi_laurent(int order, long l, int truncation) {
  if (l < 0) throw std::invalid_argument("psi_laurent: l must be >= 0");
  const int cap = 2 - order;
  if (order < 0 || order > 2) throw std::invalid_argument("psi_laurent: order must be 0, 1 or 2");
  if (truncation > cap) {
    throw std::invalid_argument("psi_laurent: truncation leaves the {g,z2,z3} domain");
  }
  LaurentSeries s(truncation);
  const PolyValue p1 = psi_int(1, l + 1);
  const PolyValue p2 = psi_int(2, l + 1);
  const PolyValue two_z2 = Rational(2) * PolyValue::symbol_z2();
  switch (order) {
    case 0:
      s.set_coefficient(-1, PolyValue(Rational(-1)));
      s.set_coefficient(0, psi_int(0, l + 1));
      s.set_coefficient(1, two_z2 - p1);
      s.set_coefficient(2, p2 / Rational(2));
      break;
    case 1:
      s.set_coefficient(-2, PolyValue(Rational(1)));
      s.set_coefficient(0, two_z2 - p1);
      s.set_coefficient(1, p2);
      break;
    case 2:
      s.set_coefficient(-3, PolyValue(Rational(-2)));
      s.set_coefficient(0, p2);
      break;
    default:
      break;
  }
  return s;
}

LaurentSeries psi_series(int order, long z, int truncation) {
  if (z <= 0) return psi_laurent(order, -z, truncation);
  const int cap = 2 - order;
  if (truncation > cap) {
    throw std::invalid_argument("psi_series: truncation leaves the {g,z2,z3} domain");
  }
  LaurentSeries s(truncation);
  Rational fact(1);
  for (int r = 0; r <= truncation; ++r) {
    if (r > 0) fact *= Rational(r);
    s.set_coefficient(r, psi_int(order + r, z) / fact);
  }
  return s;
}

}  // namespace vnskew
