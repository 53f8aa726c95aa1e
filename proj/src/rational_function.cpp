#include "qlim/rational_function.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "qlim/errors.hpp"

namespace qlim {

RationalFunction::RationalFunction(LaurentPoly n, LaurentPoly d)
    : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction RationalFunction::inverse() const {
  if (num_.is_zero()) throw std::domain_error("inverse of zero rational function");
  return {den_, num_};
}

bool RationalFunction::operator==(const RationalFunction& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

std::string RationalFunction::str() const {
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

namespace {

/* p / (t-1) for an ordinary polynomial p with p(1) = 0, by synthetic division. */
std::vector<BigRational> divide_t_minus_one(const std::vector<BigRational>& p) {
  const long deg = static_cast<long>(p.size()) - 1;
  std::vector<BigRational> q(deg);
  BigRational carry = 0;
  for (long i = deg; i >= 1; --i) {
    carry += p[i];
    q[i - 1] = carry;
  }
  return q;  // p(1) = 0 guarantees the remainder carry + p[0] vanishes
}

std::vector<BigRational> to_dense(const LaurentPoly& p) {
  const long lo = p.min_exp();
  std::vector<BigRational> v(p.max_exp() - lo + 1);
  for (const auto& [e, c] : p.terms()) v[e - lo] = c;
  return v;
}

BigRational value_at_one(const std::vector<BigRational>& p) {
  BigRational s = 0;
  for (const auto& c : p) s += c;
  return s;
}

}  // namespace

BigRational limit_at_one(const RationalFunction& f) {
  if (f.is_zero()) return 0;
  // Overall powers of t equal 1 at t = 1, so flattening exponents is harmless.
  std::vector<BigRational> n = to_dense(f.num()), d = to_dense(f.den());
  BigRational nv = value_at_one(n), dv = value_at_one(d);
  while (nv == 0 && dv == 0) {
    n = divide_t_minus_one(n);
    d = divide_t_minus_one(d);
    nv = value_at_one(n);
    dv = value_at_one(d);
  }
  if (dv == 0) throw PoleAtOne("denominator vanishes to higher order at t=1");
  return nv / dv;
}

}  // namespace qlim
