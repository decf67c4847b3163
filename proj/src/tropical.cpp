#include "canlift/tropical.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace canlift {

// --- SFExpr construction ----------------------------------------------------

SFPtr SFExpr::make_var(int k) {
  if (k < 1) fail(ErrorCode::IndexOutOfRange, "variable index must be >= 1");
  auto e = std::make_shared<SFExpr>();
  e->kind = Kind::Var;
  e->var = k;
  return e;
}

SFPtr SFExpr::make_const(Int v) {
  if (v <= 0) fail(ErrorCode::SubtractionForbidden, "constants must be positive");
  auto e = std::make_shared<SFExpr>();
  e->kind = Kind::Const;
  e->value = std::move(v);
  return e;
}

static SFPtr binary(SFExpr::Kind k, SFPtr a, SFPtr b) {
  auto e = std::make_shared<SFExpr>();
  e->kind = k;
  e->lhs = std::move(a);
  e->rhs = std::move(b);
  return e;
}

SFPtr SFExpr::add(SFPtr a, SFPtr b) { return binary(Kind::Add, std::move(a), std::move(b)); }
SFPtr SFExpr::mul(SFPtr a, SFPtr b) { return binary(Kind::Mul, std::move(a), std::move(b)); }
SFPtr SFExpr::div(SFPtr a, SFPtr b) { return binary(Kind::Div, std::move(a), std::move(b)); }

SFPtr SFExpr::pow(SFPtr a, int m) {
  auto e = std::make_shared<SFExpr>();
  e->kind = Kind::Pow;
  e->lhs = std::move(a);
  e->exponent = m;
  return e;
}

int sf_arity(const SFPtr& e) {
  switch (e->kind) {
    case SFExpr::Kind::Var: return e->var;
    case SFExpr::Kind::Const: return 0;
    case SFExpr::Kind::Pow: return sf_arity(e->lhs);
    default: return std::max(sf_arity(e->lhs), sf_arity(e->rhs));
  }
}

// --- Parser -----------------------------------------------------------------

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void error(const std::string& msg) {
    fail(ErrorCode::ParseError, msg + " at position " + std::to_string(pos));
  }
  void check_minus() {
    if (peek() == '-')
      fail(ErrorCode::SubtractionForbidden,
           "'-' at position " + std::to_string(pos));
  }

  Int integer() {
    skip();
    if (pos >= s.size() || !std::isdigit((unsigned char)s[pos])) error("expected integer");
    std::string digits;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) digits += s[pos++];
    return Int(digits);
  }

  SFPtr atom() {
    check_minus();
    char c = peek();
    if (c == '(') {
      ++pos;
      SFPtr e = expr();
      if (peek() != ')') error("expected ')'");
      ++pos;
      return e;
    }
    if (c == 't') {
      ++pos;
      Int k = integer();
      if (k < 1 || k > 1000000) error("bad variable index");
      return SFExpr::make_var((int)k);
    }
    if (std::isdigit((unsigned char)c)) {
      Int v = integer();
      if (v <= 0) error("constants must be positive");
      return SFExpr::make_const(v);
    }
    error("unexpected character");
  }

  SFPtr factor() {
    SFPtr base = atom();
    if (peek() == '^') {
      ++pos;
      check_minus();
      Int m = integer();
      if (m > 1000000) error("exponent too large");
      return SFExpr::pow(base, (int)m);
    }
    return base;
  }

  SFPtr term() {
    SFPtr e = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos;
        e = SFExpr::mul(e, factor());
      } else if (c == '/') {
        ++pos;
        e = SFExpr::div(e, factor());
      } else {
        return e;
      }
    }
  }

  SFPtr expr() {
    SFPtr e = term();
    for (;;) {
      char c = peek();
      if (c == '-') check_minus();
      if (c != '+') return e;
      ++pos;
      e = SFExpr::add(e, term());
    }
  }
};

}  // namespace

SFPtr parse_sf(const std::string& text) {
  Parser p{text};
  SFPtr e = p.expr();
  if (p.peek() == '-') p.check_minus();
  if (p.peek() != '\0') p.error("trailing input");
  return e;
}

namespace {

// Precedence: Add = 0, Mul/Div = 1, Pow = 2, atoms = 3.
int sf_level(const SFPtr& e) {
  switch (e->kind) {
    case SFExpr::Kind::Add: return 0;
    case SFExpr::Kind::Mul:
    case SFExpr::Kind::Div: return 1;
    case SFExpr::Kind::Pow: return 2;
    default: return 3;
  }
}

std::string sf_print(const SFPtr& e, int min_level) {
  std::string s;
  switch (e->kind) {
    case SFExpr::Kind::Var: s = "t" + std::to_string(e->var); break;
    case SFExpr::Kind::Const: s = e->value.str(); break;
    case SFExpr::Kind::Add:
      s = sf_print(e->lhs, 0) + "+" + sf_print(e->rhs, 0);
      break;
    case SFExpr::Kind::Mul:
      s = sf_print(e->lhs, 1) + "*" + sf_print(e->rhs, 2);
      break;
    case SFExpr::Kind::Div:
      s = sf_print(e->lhs, 1) + "/" + sf_print(e->rhs, 2);
      break;
    case SFExpr::Kind::Pow:
      s = sf_print(e->lhs, 3) + "^" + std::to_string(e->exponent);
      break;
  }
  return sf_level(e) < min_level ? "(" + s + ")" : s;
}

}  // namespace

std::string sf_to_string(const SFPtr& e) { return sf_print(e, 0); }

Rat sf_eval(const SFPtr& e, const RatVec& point) {
  for (const Rat& x : point)
    if (x <= 0) fail(ErrorCode::NonPositivePoint, "evaluation point must be positive");
  struct Eval {
    const RatVec& p;
    Rat go(const SFPtr& e) {
      switch (e->kind) {
        case SFExpr::Kind::Var:
          if (e->var > (int)p.size()) fail(ErrorCode::ArityMismatch, "point too short");
          return p[e->var - 1];
        case SFExpr::Kind::Const: return Rat(e->value);
        case SFExpr::Kind::Add: return go(e->lhs) + go(e->rhs);
        case SFExpr::Kind::Mul: return go(e->lhs) * go(e->rhs);
        case SFExpr::Kind::Div: return go(e->lhs) / go(e->rhs);
        case SFExpr::Kind::Pow: {
          Rat b = go(e->lhs);
          int m = e->exponent;
          if (m < 0) {
            b = 1 / b;
            m = -m;
          }
          Rat out = 1;
          for (int r = 0; r < m; ++r) out *= b;
          return out;
        }
      }
      fail(ErrorCode::Internal, "bad AST node");
    }
  } ev{point};
  return ev.go(e);
}

SFPtr sf_compose(const SFPtr& e, const std::vector<SFPtr>& args) {
  switch (e->kind) {
    case SFExpr::Kind::Var:
      if (e->var > (int)args.size()) fail(ErrorCode::ArityMismatch, "missing substitution");
      return args[e->var - 1];
    case SFExpr::Kind::Const: return e;
    case SFExpr::Kind::Add: return SFExpr::add(sf_compose(e->lhs, args), sf_compose(e->rhs, args));
    case SFExpr::Kind::Mul: return SFExpr::mul(sf_compose(e->lhs, args), sf_compose(e->rhs, args));
    case SFExpr::Kind::Div: return SFExpr::div(sf_compose(e->lhs, args), sf_compose(e->rhs, args));
    case SFExpr::Kind::Pow: return SFExpr::pow(sf_compose(e->lhs, args), e->exponent);
  }
  fail(ErrorCode::Internal, "bad AST node");
}

std::pair<Polynomial, Polynomial> sf_normalize(const SFPtr& e, int arity) {
  using PP = std::pair<Polynomial, Polynomial>;
  struct Norm {
    int arity;
    PP go(const SFPtr& e) {
      switch (e->kind) {
        case SFExpr::Kind::Var:
          return {Polynomial::variable(arity, e->var), Polynomial::constant(arity, 1)};
        case SFExpr::Kind::Const:
          return {Polynomial::constant(arity, e->value), Polynomial::constant(arity, 1)};
        case SFExpr::Kind::Add: {
          PP l = go(e->lhs), r = go(e->rhs);
          return {l.first * r.second + r.first * l.second, l.second * r.second};
        }
        case SFExpr::Kind::Mul: {
          PP l = go(e->lhs), r = go(e->rhs);
          return {l.first * r.first, l.second * r.second};
        }
        case SFExpr::Kind::Div: {
          PP l = go(e->lhs), r = go(e->rhs);
          return {l.first * r.second, l.second * r.first};
        }
        case SFExpr::Kind::Pow: {
          PP l = go(e->lhs);
          int m = e->exponent;
          if (m >= 0) return {l.first.pow(m), l.second.pow(m)};
          return {l.second.pow(-m), l.first.pow(-m)};
        }
      }
      fail(ErrorCode::Internal, "bad AST node");
    }
  } norm{arity};
  return norm.go(e);
}

SFPtr sf_from_rational(const RationalFn& f) {
  // Clear negative Laurent exponents by a shared monomial shift.
  int arity = f.arity();
  std::vector<int> shift(arity, 0);
  auto scan = [&](const Polynomial& p) {
    for (const auto& [e, c] : p.terms()) {
      (void)c;
      for (int k = 0; k < arity; ++k) shift[k] = std::min(shift[k], e[k]);
    }
  };
  scan(f.num);
  scan(f.den);
  auto build = [&](const Polynomial& p) -> SFPtr {
    SFPtr sum;
    for (const auto& [e, c] : p.terms()) {
      if (c < 0)
        fail(ErrorCode::SubtractionForbidden, "negative coefficient, not subtraction-free");
      SFPtr mono = c == 1 ? nullptr : SFExpr::make_const(c);
      for (int k = 0; k < arity; ++k) {
        int m = e[k] - shift[k];
        if (m == 0) continue;
        SFPtr v = m == 1 ? SFExpr::make_var(k + 1) : SFExpr::pow(SFExpr::make_var(k + 1), m);
        mono = mono ? SFExpr::mul(mono, v) : v;
      }
      if (!mono) mono = SFExpr::make_const(1);
      sum = sum ? SFExpr::add(sum, mono) : mono;
    }
    if (!sum) fail(ErrorCode::Internal, "zero polynomial in SF conversion");
    return sum;
  };
  return SFExpr::div(build(f.num), build(f.den));
}

// --- PL side ----------------------------------------------------------------

long long AffineForm::eval(const std::vector<long long>& t) const {
  long long out = c;
  for (std::size_t k = 0; k < a.size(); ++k) out += a[k] * t[k];
  return out;
}

namespace {

void prune(TropPoly& p) {
  std::sort(p.begin(), p.end());
  // Same linear part: only the smallest constant matters under min.
  TropPoly out;
  for (const AffineForm& f : p) {
    if (!out.empty() && out.back().a == f.a) continue;  // sorted: earlier c smaller
    out.push_back(f);
  }
  p = std::move(out);
}

TropPoly trop_mul(const TropPoly& x, const TropPoly& y) {
  TropPoly out;
  out.reserve(x.size() * y.size());
  for (const AffineForm& f : x)
    for (const AffineForm& g : y) {
      AffineForm h = f;
      for (std::size_t k = 0; k < h.a.size(); ++k) h.a[k] += g.a[k];
      h.c += g.c;
      out.push_back(h);
    }
  prune(out);
  return out;
}

TropPoly trop_add(const TropPoly& x, const TropPoly& y) {
  TropPoly out = x;
  out.insert(out.end(), y.begin(), y.end());
  prune(out);
  return out;
}

TropPoly trop_scale(const TropPoly& x, int m) {  // m >= 0
  TropPoly out;
  out.reserve(x.size());
  for (const AffineForm& f : x) {
    AffineForm h = f;
    for (auto& v : h.a) v *= m;
    h.c *= m;
    out.push_back(h);
  }
  prune(out);
  return out;
}

AffineForm zero_form(int arity) {
  return AffineForm{std::vector<long long>(arity, 0), 0};
}

long long min_eval(const TropPoly& p, const std::vector<long long>& t) {
  long long best = p.front().eval(t);
  for (std::size_t k = 1; k < p.size(); ++k) best = std::min(best, p[k].eval(t));
  return best;
}

}  // namespace

long long PLComponent::eval(const std::vector<long long>& t) const {
  if ((int)t.size() != arity) fail(ErrorCode::ArityMismatch, "PL evaluation arity mismatch");
  return min_eval(pos, t) - min_eval(neg, t);
}

std::vector<long long> PLMap::eval(const std::vector<long long>& t) const {
  std::vector<long long> out;
  out.reserve(components.size());
  for (const PLComponent& c : components) out.push_back(c.eval(t));
  return out;
}

std::vector<long long> pl_eval(const PLMap& f, const std::vector<long long>& t) {
  return f.eval(t);
}

PLComponent tropicalize(const SFPtr& e, int arity) {
  switch (e->kind) {
    case SFExpr::Kind::Var: {
      if (e->var > arity) fail(ErrorCode::ArityMismatch, "variable beyond arity");
      AffineForm f = zero_form(arity);
      f.a[e->var - 1] = 1;
      return PLComponent{arity, {f}, {zero_form(arity)}};
    }
    case SFExpr::Kind::Const:
      return PLComponent{arity, {zero_form(arity)}, {zero_form(arity)}};
    case SFExpr::Kind::Add: {
      PLComponent l = tropicalize(e->lhs, arity), r = tropicalize(e->rhs, arity);
      // (A - B) min (C - D) = min(A+D, C+B) - (B+D)
      return PLComponent{arity, trop_add(trop_mul(l.pos, r.neg), trop_mul(r.pos, l.neg)),
                         trop_mul(l.neg, r.neg)};
    }
    case SFExpr::Kind::Mul: {
      PLComponent l = tropicalize(e->lhs, arity), r = tropicalize(e->rhs, arity);
      return PLComponent{arity, trop_mul(l.pos, r.pos), trop_mul(l.neg, r.neg)};
    }
    case SFExpr::Kind::Div: {
      PLComponent l = tropicalize(e->lhs, arity), r = tropicalize(e->rhs, arity);
      return PLComponent{arity, trop_mul(l.pos, r.neg), trop_mul(l.neg, r.pos)};
    }
    case SFExpr::Kind::Pow: {
      PLComponent l = tropicalize(e->lhs, arity);
      int m = e->exponent;
      if (m < 0) {
        std::swap(l.pos, l.neg);
        m = -m;
      }
      return PLComponent{arity, trop_scale(l.pos, m), trop_scale(l.neg, m)};
    }
  }
  fail(ErrorCode::Internal, "bad AST node");
}

PLMap tropicalize_map(const std::vector<SFPtr>& comps, int arity) {
  PLMap out;
  out.arity = arity;
  for (const SFPtr& e : comps) out.components.push_back(tropicalize(e, arity));
  return out;
}

PLMap pl_identity(int arity) {
  PLMap out;
  out.arity = arity;
  for (int k = 1; k <= arity; ++k) {
    AffineForm f = zero_form(arity);
    f.a[k - 1] = 1;
    out.components.push_back(PLComponent{arity, {f}, {zero_form(arity)}});
  }
  return out;
}

namespace {

// Tropical fraction (num, den) arithmetic used during composition.
struct Frac {
  TropPoly num, den;
};

Frac frac_add(const Frac& x, const Frac& y) {
  return {trop_add(trop_mul(x.num, y.den), trop_mul(y.num, x.den)),
          trop_mul(x.den, y.den)};
}

}  // namespace

PLComponent pl_compose(const PLComponent& f, const PLMap& g) {
  if (f.arity != (int)g.components.size())
    fail(ErrorCode::ArityMismatch, "composition arity mismatch");
  int arity = g.arity;
  auto subst_form = [&](const AffineForm& p) -> Frac {
    TropPoly pos = {zero_form(arity)}, neg = {zero_form(arity)};
    AffineForm base = zero_form(arity);
    base.c = p.c;
    pos = trop_mul(pos, TropPoly{base});
    for (int k = 0; k < f.arity; ++k) {
      long long a = p.a[k];
      if (a == 0) continue;
      const PLComponent& gk = g.components[k];
      if (a > 0) {
        pos = trop_mul(pos, trop_scale(gk.pos, (int)a));
        neg = trop_mul(neg, trop_scale(gk.neg, (int)a));
      } else {
        pos = trop_mul(pos, trop_scale(gk.neg, (int)-a));
        neg = trop_mul(neg, trop_scale(gk.pos, (int)-a));
      }
    }
    return {pos, neg};
  };
  auto subst_poly = [&](const TropPoly& p) -> Frac {
    Frac acc = subst_form(p.front());
    for (std::size_t k = 1; k < p.size(); ++k) acc = frac_add(acc, subst_form(p[k]));
    return acc;
  };
  Frac top = subst_poly(f.pos), bot = subst_poly(f.neg);
  // (A-B)/(C-D) -> (A+D) - (B+C)
  return PLComponent{arity, trop_mul(top.num, bot.den), trop_mul(top.den, bot.num)};
}

PLMap pl_compose(const PLMap& f, const PLMap& g) {
  PLMap out;
  out.arity = g.arity;
  for (const PLComponent& c : f.components) out.components.push_back(pl_compose(c, g));
  return out;
}

std::optional<AffineForm> is_affine(const PLComponent& comp) {
  if (comp.pos.size() != 1 || comp.neg.size() != 1) return std::nullopt;
  AffineForm out = comp.pos.front();
  const AffineForm& n = comp.neg.front();
  for (std::size_t k = 0; k < out.a.size(); ++k) out.a[k] -= n.a[k];
  out.c -= n.c;
  return out;
}

}  // namespace canlift
