#include "qlim/rational.hpp"

#include <cctype>

#include "qlim/errors.hpp"

namespace qlim {

std::string to_fraction_string(const BigRational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

BigRational parse_rational(const std::string& text) {
  if (text.empty()) throw BadInput("empty rational literal");
  // mpq_set_str tolerates some whitespace; be stricter so round-trips are exact.
  for (char c : text)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
      throw BadInput("not a rational: \"" + text + "\"");
  BigRational r;
  if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
    throw BadInput("not a rational: \"" + text + "\"");
  if (r.get_den() == 0) throw BadInput("zero denominator: \"" + text + "\"");
  r.canonicalize();
  return r;
}

bool is_integer(const BigRational& r) {
  BigRational c(r);  // two-argument mpq construction skips canonicalization
  c.canonicalize();
  return c.get_den() == 1;
}

BigInt factorial(unsigned long n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

BigInt gen_binomial(const BigInt& top, unsigned long k) {
  BigInt prod = 1;
  for (unsigned long j = 0; j < k; ++j) prod *= top - static_cast<long>(j);
  // k! divides any product of k consecutive integers, so this is exact.
  BigInt f = factorial(k), q;
  mpz_divexact(q.get_mpz_t(), prod.get_mpz_t(), f.get_mpz_t());
  return q;
}

}  // namespace qlim
