#pragma once

#include <string>
#include <vector>

#include "qlim/laurent.hpp"
#include "qlim/quiver.hpp"

namespace qlim {

/*
 * Worked examples with frozen expected values. expected_a[r-1] is the
 * coefficient of x^r in x (log y)', expected_n[r-1] the extremal invariant
 * N_r; both run r = 1..R with explicit zeros where a degree is absent.
 */
struct CatalogEntry {
  QuiverSpec spec;
  std::vector<BigRational> expected_a;
  std::vector<BigRational> expected_n;
  std::string notes;
};

const CatalogEntry& get_entry(const std::string& name);  // throws UnknownEntry
std::vector<std::string> catalog_names();

/*
 * Extremal-degree generating polynomial of the three-vertex entry "9_46":
 *   P_r(q) = sum_{d1+d3+2 d4 = r} (q;q)_r q^{-d1(d3+2d4) - 2d4(d3+d4)}
 *            / ((q;q)_{d1} (q;q)_{d3} (q;q)_{d4}),
 * assembled term by term through exact polynomial division (each quotient is
 * a q-multinomial times a Pochhammer, so a genuine Laurent polynomial).
 * Throws NonPolynomialQuotient if a division ever leaves a remainder.
 */
LaurentPoly bottom_row_946(long r);

}  // namespace qlim
