#pragma once

#include <map>
#include <string>

#include "qlim/rational.hpp"

namespace qlim {

/*
 * Sparse exact Laurent polynomial in one formal variable.
 *
 * Two roles share this type:
 *   - q-polynomials written in t = q^{1/2}, so q^{k/2} always has an integer
 *     exponent (exponents may be negative);
 *   - regularization polynomials in eps, where only nonnegative exponents
 *     occur by construction.
 *
 * Invariant: no explicitly stored zero coefficients.
 */
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: implicit from integer constants is intended
  explicit LaurentPoly(const BigRational& c);
  static LaurentPoly monomial(const BigRational& coeff, long exp);

  bool is_zero() const { return terms_.empty(); }
  const std::map<long, BigRational>& terms() const { return terms_; }
  BigRational coeff(long exp) const;
  long min_exp() const;  // requires a nonzero polynomial
  long max_exp() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

  LaurentPoly scaled(const BigRational& c) const;
  LaurentPoly times_power(long e) const;  // multiply by var^e
  LaurentPoly pow(unsigned long e) const;

  BigRational eval_one() const;  // value at var = 1
  BigRational eval(const BigRational& x) const;

  /* Exact quotient; throws NonPolynomialQuotient when a remainder is left. */
  LaurentPoly exact_div(const LaurentPoly& den) const;

  std::string str(const std::string& var = "t") const;

 private:
  void add_term(long exp, const BigRational& c);
  std::map<long, BigRational> terms_;
};

/* (q;q)_d = prod_{k=1..d} (1 - q^k) written in t: prod (1 - t^{2k}). */
LaurentPoly pochhammer_qq(unsigned long d);

/* Gaussian binomial [n k]_q in t, a polynomial with nonnegative coefficients. */
LaurentPoly gauss_binomial(unsigned long n, unsigned long k);

/* Generalized binomial with polynomial top: prod_{j<k}(top - j) / k!. */
LaurentPoly gen_binomial(const LaurentPoly& top, unsigned long k);

/*
 * Eps-polynomials are Laurent polynomials over a second formal variable; only
 * nonnegative exponents appear in the regularized formulas.
 */
using EpsPoly = LaurentPoly;

/* lim_{eps->0} num/den by valuation comparison at eps = 0.
 * Throws RegularizationFailure when the quotient has a pole there
 * (including an identically zero denominator). */
BigRational limit_ratio_at_zero(const EpsPoly& num, const EpsPoly& den);

}  // namespace qlim
