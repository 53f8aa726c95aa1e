#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "qlim/multiseries.hpp"
#include "qlim/quiver.hpp"

namespace qlim {

/* Dense one-variable series, degrees 0..R; c[r] is the coefficient of x^r. */
struct OneVarSeries {
  std::vector<BigRational> c;
  long max_degree() const { return static_cast<long>(c.size()) - 1; }
};

/* log of a multivariate series with constant term 1 (else NonUnitConstantTerm),
 * via log(1+u) = sum (-1)^{k+1} u^k / k; u is nilpotent on a finite region. */
MultiSeries<BigRational> log_series(const MultiSeries<BigRational>& y);

/* Same expansion for a dense one-variable series. */
OneVarSeries log_series(const OneVarSeries& y);

/*
 * Closed form for the coefficient of log y at l != 0:
 *   (-1)^{sum (C_ii+1) l_i} A_max(l) prod_j (1/Tbar_j) binom(Tbar_j, l_j),
 *   Tbar_j = sum_i C_ij l_i,
 *   A_max  = prod_j n_j * sum over admissible sets of size m-1 of
 *            prod_u C_{i_u j_u} l_{i_u} / n_{j_u}.
 * The 0/0 cases are cured by shifting every matrix entry C_ij -> C_ij + eps
 * (symmetry preserved, signs taken from the true integer C) and letting
 * eps -> 0 last; a level shift cannot work here because no level appears in
 * the binomial tops. Throws RegularizationFailure on a genuine pole.
 */
BigRational log_coeff_closed(const QuiverSpec& spec, const MultiIndex& l);

/*
 * One-variable specialization x_i -> signs[i] * x^{n_i} of the classical
 * limit, followed by the logarithmic derivative: returns a with
 *   x (log y)' = sum_{r>=1} a_r x^r,  r = 1..bound.
 */
OneVarSeries log_derivative_series(const QuiverSpec& spec, long bound,
                                   std::optional<long> cap = std::nullopt);

/* Moebius function by trial factorization. */
int mobius(unsigned long d);

struct BpsEntry {
  long r;
  BigRational a;
  BigRational n;  // N_r = (1/r^2) sum_{d|r} mu(d) a_{r/d}
  bool integral;
};
using BpsTable = std::vector<BpsEntry>;

/* Extremal invariants from the log-derivative coefficients a_1..a_R.
 * Integrality is reported per entry, never assumed. */
BpsTable bps_numbers(const OneVarSeries& a);

nlohmann::json bps_to_json(const BpsTable& table);

}  // namespace qlim
