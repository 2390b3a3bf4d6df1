#include "vnskew/poly_value.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace vnskew {

PolyValue::PolyValue(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

PolyValue PolyValue::symbol_g() { return monomial(Monomial{1, 0, 0}, Rational(1)); }
PolyValue PolyValue::symbol_z2() { return monomial(Monomial{0, 1, 0}, Rational(1)); }
PolyValue PolyValue::symbol_z3() { return monomial(Monomial{0, 0, 1}, Rational(1)); }

PolyValue PolyValue::monomial(const Monomial& m, const Rational& c) {
  PolyValue v;
  if (!c.is_zero()) v.terms_.emplace(m, c);
  return v;
}

bool PolyValue::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

Rational PolyValue::constant_part() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational PolyValue::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::uint32_t PolyValue::max_weight() const {
  std::uint32_t w = 0;
  for (const auto& [m, c] : terms_) w = std::max(w, m.weight());
  return w;
}

void PolyValue::insert(const Monomial& m, const Rational& c) {
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else if (c.is_zero()) {
    terms_.erase(it);
  }
}

PolyValue& PolyValue::operator+=(const PolyValue& o) {
  for (const auto& [m, c] : o.terms_) insert(m, c);
  return *this;
}

PolyValue& PolyValue::operator-=(const PolyValue& o) {
  for (const auto& [m, c] : o.terms_) insert(m, -c);
  return *this;
}

PolyValue& PolyValue::operator*=(const PolyValue& o) {
  PolyValue out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      out.insert(Monomial{ma.g + mb.g, ma.z2 + mb.z2, ma.z3 + mb.z3}, ca * cb);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

PolyValue& PolyValue::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

PolyValue& PolyValue::operator/=(const Rational& c) {
  if (c.is_zero()) throw std::invalid_argument("PolyValue: division by zero");
  for (auto& [m, coeff] : terms_) coeff /= c;
  return *this;
}

PolyValue operator-(const PolyValue& a) {
  PolyValue r;
  r -= a;
  return r;
}

PolyValue PolyValue::pow(unsigned e) const {
  PolyValue r(Rational(1));
  for (unsigned i = 0; i < e; ++i) r *= *this;
  return r;
}

double PolyValue::to_double() const {
  double total = 0.0;
  for (const auto& [m, c] : terms_) {
    total += c.to_double() * std::pow(kEulerGamma, m.g) * std::pow(kZeta2, m.z2) *
             std::pow(kZeta3, m.z3);
  }
  return total;
}

namespace {

void append_monomial(std::ostringstream& os, const Monomial& m) {
  bool first = true;
  auto part = [&](const char* name, std::uint32_t e) {
    if (e == 0) return;
    if (!first) os << "*";
    os << name;
    if (e > 1) os << "^" << e;
    first = false;
  };
  part("g", m.g);
  part("z2", m.z2);
  part("z3", m.z3);
}

}  // namespace

std::string PolyValue::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending canonical order.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    if (m.is_constant()) {
      os << mag.str();
    } else {
      if (mag != Rational(1)) os << mag.str() << "*";
      append_monomial(os, m);
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PolyValue& v) {
  return os << v.str();
}

}  // namespace vnskew
