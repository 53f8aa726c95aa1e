#include "qlim/bps.hpp"

#include <algorithm>

#include "qlim/closedform.hpp"
#include "qlim/errors.hpp"
#include "qlim/series.hpp"

namespace qlim {

MultiSeries<BigRational> log_series(const MultiSeries<BigRational>& y) {
  const MultiIndex zero(y.region().size(), 0);
  if (y.coeff(zero) != 1)
    throw NonUnitConstantTerm("log of a series whose constant term is not 1");
  MultiSeries<BigRational> u = y;
  u.set_coeff(zero, 0);
  MultiSeries<BigRational> acc(y.region()), pw = u;
  for (long k = 1; !pw.terms().empty(); ++k) {
    acc = acc + pw.scaled(BigRational(k % 2 == 1 ? 1 : -1, k));
    pw = pw * u;
  }
  return acc;
}

OneVarSeries log_series(const OneVarSeries& y) {
  if (y.c.empty() || y.c[0] != 1)
    throw NonUnitConstantTerm("log of a series whose constant term is not 1");
  const size_t n = y.c.size();
  std::vector<BigRational> u = y.c, acc(n, 0), pw;
  u[0] = 0;
  pw = u;
  for (size_t k = 1; k < n; ++k) {
    const BigRational f(k % 2 == 1 ? 1 : -1, k);
    for (size_t r = 0; r < n; ++r) acc[r] += f * pw[r];
    if (k + 1 < n) {
      std::vector<BigRational> next(n, 0);
      for (size_t i = 1; i < n; ++i)
        for (size_t j = 1; i + j < n; ++j) next[i + j] += pw[i] * u[j];
      pw = std::move(next);
    }
  }
  return OneVarSeries{std::move(acc)};
}

BigRational log_coeff_closed(const QuiverSpec& spec, const MultiIndex& l) {
  spec.validate();
  const int m = spec.size();
  if (static_cast<int>(l.size()) != m) throw BadInput("index arity mismatch");
  if (total_degree(l) == 0) throw BadInput("log coefficient needs a nonzero index");
  long sign_exp = 0, lsum = 0;
  for (int i = 0; i < m; ++i) {
    sign_exp += (spec.matrix[i][i] + 1) * l[i];
    lsum += l[i];
  }

  // A_max over admissible sets of maximal size m-1: exactly one vertex is not
  // a target, and its level survives the cancellation intact.
  EpsPoly amax;
  for (const AdmissibleSet& s : enumerate_admissible(m, m - 1)) {
    std::vector<bool> is_target(m, false);
    EpsPoly term(1);
    for (const auto& [i, j] : s) {
      is_target[j] = true;
      term *= LaurentPoly::monomial(l[i], 1) + LaurentPoly(spec.matrix[i][j] * static_cast<long>(l[i]));
    }
    for (int j = 0; j < m; ++j)
      if (!is_target[j]) term = term.scaled(spec.levels[j]);
    amax += term;
  }

  EpsPoly num = amax, den(1);
  for (int j = 0; j < m; ++j) {
    long tj = 0;
    for (int i = 0; i < m; ++i) tj += spec.matrix[i][j] * static_cast<long>(l[i]);
    const EpsPoly T = LaurentPoly::monomial(lsum, 1) + LaurentPoly(tj);
    num *= gen_binomial(T, static_cast<unsigned long>(l[j]));
    den *= T;
  }
  const BigRational v = limit_ratio_at_zero(num, den);
  return sign_exp % 2 == 0 ? v : -v;
}

OneVarSeries log_derivative_series(const QuiverSpec& spec, long bound,
                                   std::optional<long> cap) {
  const MultiSeries<BigRational> y = classical_limit_oracle(spec, bound, cap);
  std::vector<BigRational> u(bound + 1, 0);
  for (const auto& [idx, b] : y.terms()) {
    const long r = weighted_degree(spec.levels, idx);
    long neg = 0;
    for (int i = 0; i < spec.size(); ++i)
      if (spec.signs[i] < 0) neg += idx[i];
    u[r] += neg % 2 == 0 ? b : -b;
  }
  OneVarSeries lg = log_series(OneVarSeries{std::move(u)});
  OneVarSeries a{std::vector<BigRational>(bound + 1, 0)};
  for (long r = 1; r <= bound; ++r) a.c[r] = BigRational(r) * lg.c[r];
  return a;
}

int mobius(unsigned long d) {
  if (d == 0) throw BadInput("mobius of zero");
  int parity = 1;
  for (unsigned long p = 2; p * p <= d; ++p) {
    if (d % p == 0) {
      d /= p;
      if (d % p == 0) return 0;
      parity = -parity;
    }
  }
  if (d > 1) parity = -parity;
  return parity;
}

BpsTable bps_numbers(const OneVarSeries& a) {
  BpsTable table;
  for (long r = 1; r <= a.max_degree(); ++r) {
    BigRational sum = 0;
    for (long d = 1; d <= r; ++d)
      if (r % d == 0) sum += mobius(d) * a.c[r / d];
    const BigRational n = sum / BigRational(r * r);
    table.push_back({r, a.c[r], n, is_integer(n)});
  }
  return table;
}

nlohmann::json bps_to_json(const BpsTable& table) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& e : table) {
    nlohmann::json row;
    row["r"] = e.r;
    row["a"] = to_fraction_string(e.a);
    row["N"] = to_fraction_string(e.n);
    row["integral"] = e.integral;
    j.push_back(std::move(row));
  }
  return j;
}

}  // namespace qlim
