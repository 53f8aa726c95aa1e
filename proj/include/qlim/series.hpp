#pragma once

#include <optional>

#include "qlim/multiseries.hpp"
#include "qlim/quiver.hpp"

namespace qlim {

/*
 * Truncated expansion of the generating series
 *   P_C(x) = sum_d (-t)^{sum C_ij d_i d_j} / prod_i (q;q)_{d_i} * x^d,
 * with coefficients kept as exact rational functions in t.
 */
MultiSeries<RationalFunction> expand_pc(const QuiverSpec& spec, long bound,
                                        std::optional<long> cap = std::nullopt);

/*
 * y = lim_{q->1} P_C(q^{n_i} x_i) / P_C(x_i), coefficientwise.
 *
 * Each ratio coefficient is carried over the fixed denominator
 * Q_l = prod_i (q;q)_{l_i}; the graded recursion for the numerators stays
 * polynomial because Q_l / (Q_k Q_{l-k}) is a product of Gaussian binomials.
 * The t->1 limit of y_l / Q_l is then taken per coefficient.
 */
MultiSeries<BigRational> classical_limit_oracle(const QuiverSpec& spec, long bound,
                                                std::optional<long> cap = std::nullopt);

/*
 * Partial limit y_j: only vertex j (1-based) is shifted, by a single power of
 * q. The truncation region stays the one cut out by the spec's own levels, so
 * the factorization y = prod_j y_j^{n_j} can be compared term by term.
 */
MultiSeries<BigRational> partial_limit(const QuiverSpec& spec, int j, long bound,
                                       std::optional<long> cap = std::nullopt);

}  // namespace qlim
