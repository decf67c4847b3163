#ifndef CANLIFT_TROPICAL_HPP
#define CANLIFT_TROPICAL_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "canlift/polynomial.hpp"
#include "canlift/rational.hpp"

namespace canlift {

// --- Subtraction-free expressions -----------------------------------------
//
// AST over variables t_k, positive integer constants, +, *, / and integer
// powers. No subtraction node exists; every value at a positive point is a
// positive rational.

class SFExpr;
using SFPtr = std::shared_ptr<const SFExpr>;

class SFExpr {
 public:
  enum class Kind { Var, Const, Add, Mul, Div, Pow };

  Kind kind;
  int var = 0;        // Var: 1-based index
  Int value = 0;      // Const: positive integer
  SFPtr lhs, rhs;     // Add/Mul/Div; Pow uses lhs only
  int exponent = 1;   // Pow

  static SFPtr make_var(int k);
  static SFPtr make_const(Int v);
  static SFPtr add(SFPtr a, SFPtr b);
  static SFPtr mul(SFPtr a, SFPtr b);
  static SFPtr div(SFPtr a, SFPtr b);
  static SFPtr pow(SFPtr a, int m);  // any integer m
};

// Highest variable index occurring in the expression.
int sf_arity(const SFPtr& e);

// Grammar: expr := term ('+' term)*; term := factor (('*'|'/') factor)*;
// factor := atom ('^' posint)?; atom := 't'k | posint | '(' expr ')'.
// '-' is rejected anywhere (SubtractionForbidden).
SFPtr parse_sf(const std::string& text);

std::string sf_to_string(const SFPtr& e);

// Exact value at a strictly positive point.
Rat sf_eval(const SFPtr& e, const RatVec& point);

// Substitute args[k-1] for t_k.
SFPtr sf_compose(const SFPtr& e, const std::vector<SFPtr>& args);

// Clears denominators bottom-up without cancellation; both polynomials have
// nonnegative integer coefficients and e = P/Q identically.
std::pair<Polynomial, Polynomial> sf_normalize(const SFPtr& e, int arity);

// Rebuild an SF expression from a quotient of Laurent polynomials whose
// coefficients are all nonnegative. Fails with SubtractionForbidden when a
// negative coefficient survives.
SFPtr sf_from_rational(const RationalFn& f);

// --- Piecewise-linear (min-plus) side --------------------------------------

struct AffineForm {
  std::vector<long long> a;  // coefficients
  long long c = 0;           // constant

  long long eval(const std::vector<long long>& t) const;
  bool operator==(const AffineForm& o) const { return a == o.a && c == o.c; }
  bool operator<(const AffineForm& o) const {
    return a != o.a ? a < o.a : c < o.c;
  }
};

// min of a nonempty set of affine forms; kept sorted, deduplicated, and with
// dominated forms (same linear part, larger constant) removed.
using TropPoly = std::vector<AffineForm>;

struct PLComponent {
  int arity = 0;
  TropPoly pos, neg;  // value = min(pos) - min(neg)

  long long eval(const std::vector<long long>& t) const;
  bool operator==(const PLComponent& o) const = default;
};

struct PLMap {
  int arity = 0;
  std::vector<PLComponent> components;

  std::vector<long long> eval(const std::vector<long long>& t) const;
};

// Min-convention tropicalization: (*, /, +) -> (+, -, min); positive
// constants map to 0.
PLComponent tropicalize(const SFPtr& e, int arity);
PLMap tropicalize_map(const std::vector<SFPtr>& comps, int arity);

std::vector<long long> pl_eval(const PLMap& f, const std::vector<long long>& t);

PLMap pl_identity(int arity);

// f after g; g.components.size() must equal f.arity.
PLComponent pl_compose(const PLComponent& f, const PLMap& g);
PLMap pl_compose(const PLMap& f, const PLMap& g);

// The affine form when pos and neg are both singletons, else empty.
std::optional<AffineForm> is_affine(const PLComponent& comp);

}  // namespace canlift

#endif
