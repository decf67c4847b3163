#include "canlift/polynomial.hpp"

#include <algorithm>

namespace canlift {

Polynomial Polynomial::constant(int arity, Int value) {
  Polynomial p(arity);
  p.add_term(Exponents(arity, 0), value);
  return p;
}

Polynomial Polynomial::variable(int arity, int k) {
  if (k < 1 || k > arity) fail(ErrorCode::IndexOutOfRange, "variable index out of range");
  Polynomial p(arity);
  Exponents e(arity, 0);
  e[k - 1] = 1;
  p.add_term(e, 1);
  return p;
}

void Polynomial::add_term(const Exponents& e, const Int& coeff) {
  if ((int)e.size() != arity_) fail(ErrorCode::ArityMismatch, "exponent arity mismatch");
  if (coeff == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (arity_ != o.arity_) fail(ErrorCode::ArityMismatch, "polynomial arity mismatch");
  Polynomial out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(arity_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (arity_ != o.arity_) fail(ErrorCode::ArityMismatch, "polynomial arity mismatch");
  Polynomial out(arity_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exponents e = e1;
      for (int k = 0; k < arity_; ++k) e[k] += e2[k];
      out.add_term(e, c1 * c2);
    }
  return out;
}

Polynomial Polynomial::pow(int m) const {
  if (m < 0) fail(ErrorCode::Internal, "negative polynomial power");
  Polynomial out = constant(arity_, 1);
  for (int k = 0; k < m; ++k) out = out * *this;
  return out;
}

bool Polynomial::nonnegative_coeffs() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

Rat Polynomial::eval(const RatVec& point) const {
  if ((int)point.size() != arity_) fail(ErrorCode::ArityMismatch, "evaluation point arity mismatch");
  Rat out = 0;
  for (const auto& [e, c] : terms_) {
    Rat term(c);
    for (int k = 0; k < arity_; ++k) {
      int m = e[k];
      if (m == 0) continue;
      if (point[k] == 0) fail(ErrorCode::NonPositivePoint, "zero coordinate in Laurent evaluation");
      Rat base = point[k];
      if (m < 0) {
        base = 1 / base;
        m = -m;
      }
      for (int r = 0; r < m; ++r) term *= base;
    }
    out += term;
  }
  return out;
}

RationalFn::RationalFn(Polynomial n, Polynomial d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) fail(ErrorCode::Internal, "zero denominator");
  normalize();
}

RationalFn RationalFn::constant(int arity, Int value) {
  return RationalFn(Polynomial::constant(arity, value), Polynomial::constant(arity, 1));
}

RationalFn RationalFn::variable(int arity, int k) {
  return RationalFn(Polynomial::variable(arity, k), Polynomial::constant(arity, 1));
}

RationalFn RationalFn::operator+(const RationalFn& o) const {
  return RationalFn(num * o.den + o.num * den, den * o.den);
}

RationalFn RationalFn::operator-(const RationalFn& o) const {
  return RationalFn(num * o.den - o.num * den, den * o.den);
}

RationalFn RationalFn::operator*(const RationalFn& o) const {
  return RationalFn(num * o.num, den * o.den);
}

RationalFn RationalFn::operator/(const RationalFn& o) const {
  if (o.num.is_zero()) fail(ErrorCode::Internal, "division by zero rational function");
  return RationalFn(num * o.den, den * o.num);
}

RationalFn RationalFn::pow(int m) const {
  if (m >= 0) return RationalFn(num.pow(m), den.pow(m));
  return RationalFn(den.pow(-m), num.pow(-m));
}

Rat RationalFn::eval(const RatVec& point) const {
  Rat d = den.eval(point);
  if (d == 0) fail(ErrorCode::NonPositivePoint, "denominator vanishes at point");
  return num.eval(point) / d;
}

void RationalFn::normalize() {
  if (num.is_zero()) {
    den = Polynomial::constant(den.arity(), 1);
    return;
  }
  int arity = num.arity();
  // Shared monomial content: per-variable minimum exponent over both parts.
  std::vector<int> shift(arity, 0);
  bool first = true;
  auto scan = [&](const Polynomial& p) {
    for (const auto& [e, c] : p.terms()) {
      (void)c;
      for (int k = 0; k < arity; ++k)
        shift[k] = first ? e[k] : std::min(shift[k], e[k]);
      first = false;
    }
  };
  scan(num);
  scan(den);
  Int content = 0;
  auto rebuild = [&](const Polynomial& p) {
    Polynomial out(arity);
    for (const auto& [e, c] : p.terms()) {
      auto e2 = e;
      for (int k = 0; k < arity; ++k) e2[k] -= shift[k];
      out.add_term(e2, c);
      content = content == 0 ? Int(abs(c)) : Int(gcd(content, Int(abs(c))));
    }
    return out;
  };
  Polynomial n2 = rebuild(num), d2 = rebuild(den);
  if (content > 1) {
    Polynomial n3(arity), d3(arity);
    for (const auto& [e, c] : n2.terms()) n3.add_term(e, c / content);
    for (const auto& [e, c] : d2.terms()) d3.add_term(e, c / content);
    n2 = n3;
    d2 = d3;
  }
  // Sign convention: leading denominator coefficient positive.
  if (d2.terms().begin()->second < 0) {
    n2 = -n2;
    d2 = -d2;
  }
  num = n2;
  den = d2;
}

}  // namespace canlift
