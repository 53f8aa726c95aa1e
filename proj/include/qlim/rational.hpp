#pragma once

#include <gmpxx.h>

#include <string>

namespace qlim {

/*
 * Exact arithmetic kernel. mpq_class keeps fractions canonical (reduced,
 * positive denominator, 0/1 for zero), which is exactly the invariant the
 * rest of the library relies on.
 */
using BigInt = mpz_class;
using BigRational = mpq_class;

/* Renders "num/den", keeping the "/den" part even when it is /1. */
std::string to_fraction_string(const BigRational& r);

/* Parses "num/den" or a bare integer. Throws BadInput on junk or zero denominator. */
BigRational parse_rational(const std::string& text);

bool is_integer(const BigRational& r);

BigInt factorial(unsigned long n);

/* Generalized binomial with arbitrary integer top:
 * top (top-1) ... (top-k+1) / k!, always an integer. */
BigInt gen_binomial(const BigInt& top, unsigned long k);

}  // namespace qlim
