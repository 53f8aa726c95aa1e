#include "qlim/checks.hpp"

#include <random>
#include <sstream>

#include "qlim/bps.hpp"
#include "qlim/catalog.hpp"
#include "qlim/closedform.hpp"
#include "qlim/lattice.hpp"
#include "qlim/series.hpp"

namespace qlim {

namespace {

/* mt19937 + modulo keeps the sampled spec stream identical across
 * standard libraries (uniform_int_distribution is not portable). */
struct Rng {
  std::mt19937 gen;
  explicit Rng(unsigned seed) : gen(seed) {}
  long pick(long lo, long hi) {
    return lo + static_cast<long>(gen() % static_cast<unsigned long>(hi - lo + 1));
  }
};

QuiverSpec random_spec(Rng& rng, int m, long max_entry, long max_level) {
  QuiverSpec s;
  s.matrix.assign(m, std::vector<long>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= i; ++j)
      s.matrix[i][j] = s.matrix[j][i] = rng.pick(-max_entry, max_entry);
  s.levels.resize(m);
  for (auto& n : s.levels) n = rng.pick(0, max_level);
  s.signs.assign(m, 1);
  return s;
}

std::optional<long> cap_for(const QuiverSpec& s, long cap) {
  for (long n : s.levels)
    if (n == 0) return cap;
  return std::nullopt;
}

std::string show(const QuiverSpec& s) {
  std::ostringstream os;
  os << "matrix [";
  for (size_t i = 0; i < s.matrix.size(); ++i) {
    os << (i ? "; " : "");
    for (size_t j = 0; j < s.matrix.size(); ++j) os << (j ? "," : "") << s.matrix[i][j];
  }
  os << "] levels [";
  for (size_t i = 0; i < s.levels.size(); ++i) os << (i ? "," : "") << s.levels[i];
  os << "]";
  return os.str();
}

std::string show(const MultiIndex& idx) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
  os << ")";
  return os.str();
}

}  // namespace

CheckResult check_catalog_entry(const std::string& name) {
  const CatalogEntry& entry = get_entry(name);
  const long r_max = static_cast<long>(entry.expected_a.size());
  const OneVarSeries a = log_derivative_series(entry.spec, r_max);
  const BpsTable table = bps_numbers(a);
  for (long r = 1; r <= r_max; ++r) {
    if (a.c[r] != entry.expected_a[r - 1])
      return {name, false,
              "a_" + std::to_string(r) + " = " + to_fraction_string(a.c[r]) +
                  ", expected " + to_fraction_string(entry.expected_a[r - 1])};
    if (table[r - 1].n != entry.expected_n[r - 1])
      return {name, false,
              "N_" + std::to_string(r) + " = " + to_fraction_string(table[r - 1].n) +
                  ", expected " + to_fraction_string(entry.expected_n[r - 1])};
  }
  return {name, true, "a_1..a_" + std::to_string(r_max) + " and N_1..N_" +
                          std::to_string(r_max) + " reproduced exactly"};
}

CheckResult check_closedform_vs_oracle() {
  const std::string name = "closed form vs series oracle";
  Rng rng(46111);
  const long bound = 5;
  long specs = 0, coeffs = 0;
  for (int m = 1; m <= 3; ++m) {
    for (int rep = 0; rep < 80; ++rep) {
      const QuiverSpec s = random_spec(rng, m, 3, 3);
      const auto cap = cap_for(s, 2);
      const MultiSeries<BigRational> y = classical_limit_oracle(s, bound, cap);
      for (const MultiIndex& idx : TruncRegion(s.levels, bound, cap).indices_lex()) {
        const BigRational direct = coeff_b(s, idx);
        if (direct != y.coeff(idx))
          return {name, false,
                  show(s) + " at " + show(idx) + ": closed form " +
                      to_fraction_string(direct) + " vs oracle " +
                      to_fraction_string(y.coeff(idx))};
        ++coeffs;
      }
      ++specs;
    }
  }
  return {name, true,
          std::to_string(specs) + " specs / " + std::to_string(coeffs) +
              " coefficients, zero mismatches"};
}

CheckResult check_factorization() {
  const std::string name = "partial-limit factorization";
  Rng rng(52529);
  const long bound = 6;
  long specs = 0;
  for (int m = 1; m <= 3; ++m) {
    for (int rep = 0; rep < 18; ++rep) {
      const QuiverSpec s = random_spec(rng, m, 3, 2);
      const auto cap = cap_for(s, 2);
      const MultiSeries<BigRational> y = classical_limit_oracle(s, bound, cap);
      MultiSeries<BigRational> prod = MultiSeries<BigRational>::one(y.region());
      for (int j = 1; j <= m; ++j) {
        if (s.levels[j - 1] == 0) continue;
        prod = prod * partial_limit(s, j, bound, cap)
                          .pow(static_cast<unsigned long>(s.levels[j - 1]));
      }
      if (!(prod == y)) return {name, false, show(s) + ": product of partial limits differs"};
      ++specs;
    }
  }
  return {name, true, std::to_string(specs) + " specs, identity exact to degree 6"};
}

CheckResult check_quantum_identity() {
  const std::string name = "quantum coefficients vs shift ratio";
  const long n_max = 4;
  long cases = 0;
  for (long f = 0; f <= 3; ++f) {
    for (long n_level = 1; n_level <= 3; ++n_level) {
      TruncRegion region({n_level}, n_level * n_max);
      MultiSeries<RationalFunction> p(region);
      for (long d = 0; d <= n_max; ++d) {
        const long e = f * d * (d - 1);  // in t, i.e. q^{f d(d-1)/2}
        const BigRational sgn((f * d) % 2 == 0 ? 1 : -1);
        p.set_coeff({static_cast<int>(d)},
                    RationalFunction(LaurentPoly::monomial(sgn, e), pochhammer_qq(d)));
      }
      const auto ratio = ratio_series(shift_q(p, {n_level}), p);
      for (long n = 1; n <= n_max; ++n) {
        const RationalFunction lhs(quantum_coeff(f, n_level, n));
        if (!(lhs == ratio.coeff({static_cast<int>(n)})))
          return {name, false,
                  "f=" + std::to_string(f) + " N=" + std::to_string(n_level) +
                      " n=" + std::to_string(n) + ": nested sum differs from ratio"};
        ++cases;
      }
    }
  }
  return {name, true, std::to_string(cases) + " (f,N,n) cases agree exactly"};
}

CheckResult check_lattice_counts() {
  const std::string name = "lattice counts vs closed forms";
  if (raney_number(1, 1, 2) != 5 || count_paths({1, 1, 2}) != 5)
    return {name, false, "five paths under y = x + 1 with two steps not reproduced"};
  const long catalan[] = {1, 1, 2, 5, 14};
  for (long n = 0; n <= 4; ++n)
    if (level_count(2, 1, n) != catalan[n])
      return {name, false, "level_count(2,1," + std::to_string(n) + ") != Catalan"};
  long cases = 0;
  for (long f = 0; f <= 2; ++f)
    for (long n_level = 0; n_level <= 2; ++n_level)
      for (long i = 0; i <= 5; ++i) {
        if (raney_number(f, n_level, i) != count_paths({f, n_level, i}))
          return {name, false,
                  "raney(" + std::to_string(f) + "," + std::to_string(n_level) + "," +
                      std::to_string(i) + ") differs from the path count"};
        ++cases;
      }
  return {name, true, std::to_string(cases) + " grid points, Raney numbers = path counts"};
}

CheckResult check_convolution() {
  const std::string name = "level-count convolution";
  long cases = 0;
  for (long n = 1; n <= 4; ++n)
    for (long m = 1; m <= 4; ++m)
      for (long c = 1; c <= 4; ++c)
        for (long len = 0; len <= 12; ++len) {
          if (!convolution_check(n, m, c, len))
            return {name, false,
                    "N=" + std::to_string(n) + " M=" + std::to_string(m) +
                        " c=" + std::to_string(c) + " m=" + std::to_string(len)};
          ++cases;
        }
  return {name, true, std::to_string(cases) + " instances hold exactly"};
}

CheckResult check_bottom_row() {
  const std::string name = "extremal-degree bottom row";
  LaurentPoly p1 = LaurentPoly(2);
  LaurentPoly p2 = LaurentPoly(2) + LaurentPoly::monomial(1, -2) + LaurentPoly::monomial(1, -4);
  LaurentPoly p3 = LaurentPoly(2) + LaurentPoly::monomial(2, -4) +
                   LaurentPoly::monomial(2, -6) + LaurentPoly::monomial(2, -8);
  if (!(bottom_row_946(1) == p1)) return {name, false, "P_1 != 2"};
  if (!(bottom_row_946(2) == p2)) return {name, false, "P_2 != 2 + q^-1 + q^-2"};
  if (!(bottom_row_946(3) == p3)) return {name, false, "P_3 != 2 q^-4 (1 + q + q^2 + q^4)"};
  for (long r = 0; r <= 6; ++r) bottom_row_946(r);  // must stay a Laurent polynomial
  return {name, true, "P_1..P_3 exact; P_0..P_6 divide out cleanly"};
}

CheckResult check_integrality() {
  const std::string name = "extremal invariant integrality";
  for (const std::string& entry_name : catalog_names()) {
    const CatalogEntry& entry = get_entry(entry_name);
    const long r_max = static_cast<long>(entry.expected_a.size());
    for (const BpsEntry& e : bps_numbers(log_derivative_series(entry.spec, r_max))) {
      if (!e.integral)
        return {name, false,
                entry_name + ": N_" + std::to_string(e.r) + " = " + to_fraction_string(e.n)};
    }
  }
  return {name, true, "all N_r integers for every catalog entry"};
}

std::vector<CheckResult> run_all_checks() {
  std::vector<CheckResult> results;
  for (const char* name : {"9_46", "8_20", "9_42"})
    results.push_back(check_catalog_entry(name));
  results.push_back(check_closedform_vs_oracle());
  results.push_back(check_factorization());
  results.push_back(check_quantum_identity());
  results.push_back(check_lattice_counts());
  results.push_back(check_convolution());
  results.push_back(check_bottom_row());
  results.push_back(check_integrality());
  return results;
}

}  // namespace qlim
