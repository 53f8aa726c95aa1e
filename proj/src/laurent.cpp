#include "qlim/laurent.hpp"

#include <stdexcept>
#include <vector>

#include "qlim/errors.hpp"

namespace qlim {

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_[0] = BigRational(c);
}

LaurentPoly::LaurentPoly(const BigRational& c) {
  if (c != 0) terms_[0] = c;
}

LaurentPoly LaurentPoly::monomial(const BigRational& coeff, long exp) {
  LaurentPoly p;
  if (coeff != 0) p.terms_[exp] = coeff;
  return p;
}

BigRational LaurentPoly::coeff(long exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? BigRational(0) : it->second;
}

long LaurentPoly::min_exp() const {
  if (terms_.empty()) throw std::logic_error("min_exp of zero polynomial");
  return terms_.begin()->first;
}

long LaurentPoly::max_exp() const {
  if (terms_.empty()) throw std::logic_error("max_exp of zero polynomial");
  return terms_.rbegin()->first;
}

void LaurentPoly::add_term(long exp, const BigRational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::scaled(const BigRational& c) const {
  LaurentPoly r;
  if (c == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
  return r;
}

LaurentPoly LaurentPoly::times_power(long e) const {
  LaurentPoly r;
  for (const auto& [exp, c] : terms_) r.terms_[exp + e] = c;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned long e) const {
  LaurentPoly base = *this, acc = LaurentPoly(1);
  while (e > 0) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}

BigRational LaurentPoly::eval_one() const {
  BigRational s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

BigRational LaurentPoly::eval(const BigRational& x) const {
  if (terms_.empty()) return 0;
  if (x == 0) {
    if (min_exp() < 0) throw std::domain_error("evaluating negative power at 0");
    return coeff(0);
  }
  BigRational s = 0;
  for (const auto& [e, c] : terms_) {
    BigRational p;
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(p.get_num_mpz_t(), x.get_num().get_mpz_t(), a);
    mpz_pow_ui(p.get_den_mpz_t(), x.get_den().get_mpz_t(), a);
    p.canonicalize();
    if (e < 0) p = 1 / p;
    s += c * p;
  }
  return s;
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& den) const {
  if (den.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return {};
  // Shift both to ordinary polynomials; the quotient picks the shift back up.
  const long nmin = min_exp(), dmin = den.min_exp();
  const long ndeg = max_exp() - nmin, ddeg = den.max_exp() - dmin;
  if (ndeg < ddeg) throw NonPolynomialQuotient("quotient would have negative degree span");
  std::vector<BigRational> a(ndeg + 1), b(ddeg + 1);
  for (const auto& [e, c] : terms_) a[e - nmin] = c;
  for (const auto& [e, c] : den.terms_) b[e - dmin] = c;
  std::vector<BigRational> q(ndeg - ddeg + 1);
  for (long i = ndeg - ddeg; i >= 0; --i) {
    BigRational f = a[i + ddeg] / b[ddeg];
    q[i] = f;
    if (f == 0) continue;
    for (long j = 0; j <= ddeg; ++j) a[i + j] -= f * b[j];
  }
  for (const auto& r : a)
    if (r != 0) throw NonPolynomialQuotient("polynomial division left a remainder");
  LaurentPoly quot;
  for (long i = 0; i < static_cast<long>(q.size()); ++i)
    if (q[i] != 0) quot.terms_[i + nmin - dmin] = q[i];
  return quot;
}

std::string LaurentPoly::str(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    const bool neg = c < 0;
    BigRational a = neg ? BigRational(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string mag = is_integer(a) ? a.get_num().get_str() : to_fraction_string(a);
    if (e == 0) {
      out += mag;
    } else {
      if (a != 1) out += mag + "*";
      out += var;
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

LaurentPoly pochhammer_qq(unsigned long d) {
  LaurentPoly p(1);
  for (unsigned long k = 1; k <= d; ++k) {
    LaurentPoly f(1);
    f -= LaurentPoly::monomial(1, 2 * static_cast<long>(k));
    p *= f;
  }
  return p;
}

LaurentPoly gauss_binomial(unsigned long n, unsigned long k) {
  if (k > n) return {};
  return pochhammer_qq(n).exact_div(pochhammer_qq(k) * pochhammer_qq(n - k));
}

LaurentPoly gen_binomial(const LaurentPoly& top, unsigned long k) {
  LaurentPoly prod(1);
  for (unsigned long j = 0; j < k; ++j) {
    LaurentPoly f = top;
    f -= LaurentPoly(static_cast<long>(j));
    prod *= f;
  }
  return prod.scaled(BigRational(1) / BigRational(factorial(k)));
}

BigRational limit_ratio_at_zero(const EpsPoly& num, const EpsPoly& den) {
  if (den.is_zero())
    throw RegularizationFailure("regularized denominator is identically zero");
  if (num.is_zero()) return 0;
  const long vn = num.min_exp(), vd = den.min_exp();
  if (vn < vd)
    throw RegularizationFailure("pole of order " + std::to_string(vd - vn) + " at eps=0");
  if (vn > vd) return 0;
  return num.coeff(vn) / den.coeff(vd);
}

}  // namespace qlim
