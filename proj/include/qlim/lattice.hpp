#pragma once

#include "qlim/laurent.hpp"

namespace qlim {

/*
 * Lattice paths under the line y = a*x + b, encoded by their column heights:
 * c_1 <= b, c_{i+1} <= c_i + a, all c_i >= 0, for a fixed number of steps.
 */
struct PathSpec {
  long slope;   // a
  long offset;  // b
  long steps;   // n
};

/* Exact number of height sequences, by depth-first enumeration. */
BigInt count_paths(const PathSpec& p);

/* Area-weighted count: t^{a n} * sum over paths of t^{2 sum c_i}
 * (the t-exponent is twice the area, which may be a half-integer). */
LaurentPoly weighted_count(const PathSpec& p);

/* Raney number (N+1)/((f+1)i + N+1) * binom((f+1)i + N+1, i). */
BigInt raney_number(long f, long n_level, long i);

/* Fuss-Catalan number 1/(f n + 1) * binom(f n + 1, n); f >= 1. */
BigInt fuss_catalan(long f, long n);

/* N/(f n + N) * binom(f n + N, n): the number of height sequences with
 * 0 <= c_1 <= N-1 and 0 <= c_{i+1} <= c_i + f - 1; f, N >= 1. */
BigInt level_count(long f, long n_level, long n);

/* Signed area-weighted coefficient
 * (-1)^{(f-1)n} sum_{c_1=0}^{N-1} sum_{c_2=0}^{c_1+f-1} ... q^{sum c_i}
 * as a polynomial in t (q = t^2); n >= 1. */
LaurentPoly quantum_coeff(long f, long n_level, long n);

/* Convolution identity between level counts:
 *   sum_{i+j=m} [N/(ci+N) binom(ci+N,i)] [M/(cj+M) binom(cj+M,j)]
 *     == (N+M)/(cm+N+M) binom(cm+N+M, m).
 * Returns whether the two exact values agree. */
bool convolution_check(long n_level, long m_level, long c, long m);

}  // namespace qlim
