#include "qlim/lattice.hpp"

#include <stdexcept>

#include "qlim/errors.hpp"

namespace qlim {

namespace {

void check_path_spec(const PathSpec& p) {
  if (p.slope < 0 || p.offset < 0 || p.steps < 0)
    throw BadInput("path parameters must be nonnegative");
}

template <class Leaf>
void walk_paths(long slope, long first_max, long steps, Leaf leaf) {
  const auto rec = [&](auto&& self, long pos, long prev_max, long area2) -> void {
    if (pos == steps) {
      leaf(area2);
      return;
    }
    for (long c = 0; c <= prev_max; ++c)
      self(self, pos + 1, c + slope, area2 + 2 * c);
  };
  if (steps == 0)
    leaf(0);
  else
    rec(rec, 0, first_max, 0);
}

BigRational ballot_value(long f, long n_level, long n) {
  // N/(fn+N) * binom(fn+N, n); the denominator fn+N is positive here.
  return BigRational(n_level) * gen_binomial(BigInt(f * n + n_level), n) /
         BigRational(f * n + n_level);
}

BigInt to_integer(const BigRational& v, const char* what) {
  if (!is_integer(v)) throw std::logic_error(std::string(what) + " came out non-integer");
  return v.get_num();
}

}  // namespace

BigInt count_paths(const PathSpec& p) {
  check_path_spec(p);
  BigInt count = 0;
  walk_paths(p.slope, p.offset, p.steps, [&](long) { ++count; });
  return count;
}

LaurentPoly weighted_count(const PathSpec& p) {
  check_path_spec(p);
  LaurentPoly sum;
  walk_paths(p.slope, p.offset, p.steps,
             [&](long area2) { sum += LaurentPoly::monomial(1, area2); });
  return sum.times_power(p.slope * p.steps);
}

BigInt raney_number(long f, long n_level, long i) {
  if (f < 0 || n_level < 0 || i < 0) throw BadInput("raney arguments must be nonnegative");
  const long top = (f + 1) * i + n_level + 1;
  return to_integer(BigRational(n_level + 1) * gen_binomial(BigInt(top), i) / BigRational(top),
                    "raney number");
}

BigInt fuss_catalan(long f, long n) {
  if (f < 1 || n < 0) throw BadInput("fuss_catalan needs f >= 1, n >= 0");
  return to_integer(gen_binomial(BigInt(f * n + 1), n) / BigRational(f * n + 1),
                    "fuss-catalan number");
}

BigInt level_count(long f, long n_level, long n) {
  if (f < 1 || n_level < 1 || n < 0) throw BadInput("level_count needs f, N >= 1, n >= 0");
  return to_integer(ballot_value(f, n_level, n), "level count");
}

LaurentPoly quantum_coeff(long f, long n_level, long n) {
  if (f < 0 || n_level < 1 || n < 1) throw BadInput("quantum_coeff needs N >= 1, n >= 1");
  LaurentPoly sum;
  // Same walk as weighted_count with first bound N-1 and step slack f-1,
  // except the path has exactly n columns and no closing prefactor.
  const auto rec = [&](auto&& self, long pos, long hi, long area2) -> void {
    if (pos == n) {
      sum += LaurentPoly::monomial(1, area2);
      return;
    }
    for (long c = 0; c <= hi; ++c) self(self, pos + 1, c + f - 1, area2 + 2 * c);
  };
  rec(rec, 0, n_level - 1, 0);
  const bool flip = ((f - 1) * n) % 2 != 0;
  return flip ? -sum : sum;
}

bool convolution_check(long n_level, long m_level, long c, long m) {
  if (n_level < 1 || m_level < 1 || c < 1 || m < 0)
    throw BadInput("convolution_check needs N, M, c >= 1 and m >= 0");
  BigRational lhs = 0;
  for (long i = 0; i <= m; ++i)
    lhs += ballot_value(c, n_level, i) * ballot_value(c, m_level, m - i);
  return lhs == ballot_value(c, n_level + m_level, m);
}

}  // namespace qlim
