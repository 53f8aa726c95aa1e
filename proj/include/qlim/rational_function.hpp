#pragma once

#include "qlim/laurent.hpp"

namespace qlim {

/*
 * Quotient of Laurent polynomials in t. Not kept in reduced form: at desk
 * scale full gcd reduction buys nothing, and every consumer either compares
 * by cross-multiplication or goes through limit_at_one, which cancels only
 * the (t-1) factors it actually needs.
 */
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(1) {}
  RationalFunction(long c) : num_(c), den_(1) {}                    // NOLINT
  RationalFunction(LaurentPoly n) : num_(std::move(n)), den_(1) {}  // NOLINT
  RationalFunction(LaurentPoly n, LaurentPoly d);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  RationalFunction inverse() const;

  /* Equality of the represented functions: a.num*b.den == b.num*a.den. */
  bool operator==(const RationalFunction& o) const;

  std::string str() const;

 private:
  LaurentPoly num_, den_;
};

/* lim_{t->1} f, cancelling matching zeros of numerator and denominator by
 * synthetic division. Throws PoleAtOne when the limit does not exist. */
BigRational limit_at_one(const RationalFunction& f);

}  // namespace qlim
