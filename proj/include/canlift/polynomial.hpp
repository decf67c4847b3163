#ifndef CANLIFT_POLYNOMIAL_HPP
#define CANLIFT_POLYNOMIAL_HPP

#include <map>
#include <vector>

#include "canlift/rational.hpp"

namespace canlift {

// Sparse multivariate Laurent polynomial with integer coefficients.
// Exponents may be negative; terms with zero coefficient are never stored.
class Polynomial {
 public:
  using Exponents = std::vector<int>;

  explicit Polynomial(int arity = 0) : arity_(arity) {}

  static Polynomial constant(int arity, Int value);
  static Polynomial variable(int arity, int k);  // 1-based t_k

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Int>& terms() const { return terms_; }

  void add_term(const Exponents& e, const Int& coeff);

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial pow(int m) const;  // m >= 0
  bool operator==(const Polynomial& o) const {
    return arity_ == o.arity_ && terms_ == o.terms_;
  }

  bool nonnegative_coeffs() const;
  Rat eval(const RatVec& point) const;  // point componentwise nonzero

 private:
  int arity_;
  std::map<Exponents, Int> terms_;
};

// A quotient of Laurent polynomials; no gcd cancellation beyond monomial
// content and integer content.
struct RationalFn {
  Polynomial num;
  Polynomial den;

  explicit RationalFn(int arity = 0)
      : num(Polynomial::constant(arity, 0)), den(Polynomial::constant(arity, 1)) {}
  RationalFn(Polynomial n, Polynomial d);

  static RationalFn constant(int arity, Int value);
  static RationalFn variable(int arity, int k);

  int arity() const { return num.arity(); }
  bool is_zero() const { return num.is_zero(); }

  RationalFn operator+(const RationalFn& o) const;
  RationalFn operator-(const RationalFn& o) const;
  RationalFn operator*(const RationalFn& o) const;
  RationalFn operator/(const RationalFn& o) const;
  RationalFn pow(int m) const;  // any integer m

  Rat eval(const RatVec& point) const;

  // Drops shared monomial and integer content; makes the denominator's
  // leading coefficient positive.
  void normalize();
};

}  // namespace canlift

#endif
