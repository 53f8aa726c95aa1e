#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "qlim/closedform.hpp"
#include "qlim/errors.hpp"
#include "qlim/series.hpp"

using namespace qlim;

namespace {

QuiverSpec make_spec(std::vector<std::vector<long>> matrix, std::vector<long> levels) {
  QuiverSpec s;
  s.matrix = std::move(matrix);
  s.levels = std::move(levels);
  s.signs.assign(s.levels.size(), 1);
  return s;
}

// Independent reference: every k-subset of the m*m ordered pairs, kept when all
// targets are distinct and a DFS finds no directed cycle.
bool has_cycle(int m, const AdmissibleSet& s) {
  std::vector<std::vector<int>> adj(m);
  for (const auto& [i, j] : s) adj[i].push_back(j);
  std::vector<int> state(m, 0);  // 0 new, 1 on stack, 2 done
  std::function<bool(int)> dfs = [&](int v) {
    state[v] = 1;
    for (int w : adj[v]) {
      if (state[w] == 1) return true;
      if (state[w] == 0 && dfs(w)) return true;
    }
    state[v] = 2;
    return false;
  };
  for (int v = 0; v < m; ++v)
    if (state[v] == 0 && dfs(v)) return true;
  return false;
}

std::vector<AdmissibleSet> brute_force_admissible(int m, int k) {
  std::vector<VertexPair> all;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) all.push_back({i, j});
  std::vector<AdmissibleSet> out;
  const int n = static_cast<int>(all.size());
  std::vector<int> pick(k);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      AdmissibleSet s;
      std::set<int> targets;
      for (int p : pick) {
        s.push_back(all[p]);
        targets.insert(all[p].second);
      }
      if (static_cast<int>(targets.size()) == k && !has_cycle(m, s)) out.push_back(s);
      return;
    }
    for (int p = start; p < n; ++p) {
      pick[depth] = p;
      rec(p + 1, depth + 1);
    }
  };
  if (k >= 0 && k <= n) rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("admissible sets, small cases by hand") {
  CHECK(enumerate_admissible(1, 0) == std::vector<AdmissibleSet>{{}});
  CHECK(enumerate_admissible(3, 0) == std::vector<AdmissibleSet>{{}});
  // one pair on two vertices: loops and the 2-cycle are excluded
  CHECK(enumerate_admissible(2, 1) ==
        std::vector<AdmissibleSet>{{{0, 1}}, {{1, 0}}});
  // k = m is impossible: all vertices become targets, so a cycle is forced
  CHECK(enumerate_admissible(2, 2).empty());
  CHECK(enumerate_admissible(3, 3).empty());
  CHECK(enumerate_admissible(2, -1).empty());
}

TEST_CASE("admissible sets of size two on three vertices") {
  // sources point at two distinct non-source targets; 2-cycles/loops excluded
  const auto got = enumerate_admissible(3, 2);
  CHECK(got.size() == 9);
  for (const auto& s : got) {
    CHECK(s.size() == 2);
    CHECK(s[0].second != s[1].second);
    CHECK_FALSE(has_cycle(3, s));
  }
  CHECK(std::find(got.begin(), got.end(),
                  AdmissibleSet{{0, 1}, {0, 2}}) != got.end());
  CHECK(std::find(got.begin(), got.end(),
                  AdmissibleSet{{0, 1}, {1, 2}}) != got.end());
  // the 2-cycle {(0,1),(1,0)} must not appear
  CHECK(std::find(got.begin(), got.end(),
                  AdmissibleSet{{0, 1}, {1, 0}}) == got.end());
}

TEST_CASE("admissible enumeration matches brute force") {
  for (int m = 1; m <= 4; ++m)
    for (int k = 0; k < m; ++k) {
      auto fast = enumerate_admissible(m, k);
      auto sorted = fast;
      std::sort(sorted.begin(), sorted.end());
      CHECK(fast == sorted);  // deterministic lexicographic order
      CHECK(fast == brute_force_admissible(m, k));
    }
}

TEST_CASE("coeff_A at the zero index is the product of shifted levels") {
  auto spec = make_spec({{0, -1}, {-1, 3}}, {2, 5});
  const EpsPoly eps = LaurentPoly::monomial(1, 1);
  CHECK(coeff_A(spec, {0, 0}) ==
        (eps + LaurentPoly(2)) * (eps + LaurentPoly(5)));
}

TEST_CASE("coeff_A on two vertices") {
  // A = (M+eps)(N+eps) + beta*i*(M+eps) + beta*j*(N+eps); at eps=0:
  // MN + beta*i*M + beta*j*N
  std::mt19937 rng(7);
  for (int rep = 0; rep < 40; ++rep) {
    const long alpha = static_cast<long>(rng() % 11) - 5;
    const long beta = static_cast<long>(rng() % 11) - 5;
    const long gamma = static_cast<long>(rng() % 11) - 5;
    const long M = static_cast<long>(rng() % 5);
    const long N = static_cast<long>(rng() % 5);
    const int i = static_cast<int>(rng() % 4), j = static_cast<int>(rng() % 4);
    auto spec = make_spec({{alpha, beta}, {beta, gamma}}, {M, N});
    const EpsPoly a = coeff_A(spec, {i, j});
    CHECK(a.eval(BigRational(0)) ==
          BigRational(M * N + beta * i * M + beta * j * N));
    // the eps polynomial itself, not just its value at 0
    const EpsPoly eps = LaurentPoly::monomial(1, 1);
    const EpsPoly expect = (eps + LaurentPoly(M)) * (eps + LaurentPoly(N)) +
                           (eps + LaurentPoly(M)).scaled(BigRational(beta * i)) +
                           (eps + LaurentPoly(N)).scaled(BigRational(beta * j));
    CHECK(a == expect);
  }
}

TEST_CASE("coeff_A on three vertices") {
  // against the fully expanded numerator
  //   A = MNP + M*i*(P*beta + N*delta) + N*j*(P*beta + M*epsilon)
  //     + P*k*(N*delta + M*epsilon) + M*beta*delta*i^2 + N*beta*epsilon*j^2
  //     + P*delta*epsilon*k^2 + beta*i*j*(N*delta + M*epsilon)
  //     + delta*i*k*(P*beta + M*epsilon) + epsilon*j*k*(P*beta + N*delta)
  std::mt19937 rng(11);
  for (int rep = 0; rep < 40; ++rep) {
    const long al = static_cast<long>(rng() % 7) - 3;
    const long be = static_cast<long>(rng() % 7) - 3;
    const long ga = static_cast<long>(rng() % 7) - 3;
    const long de = static_cast<long>(rng() % 7) - 3;
    const long ep = static_cast<long>(rng() % 7) - 3;
    const long ph = static_cast<long>(rng() % 7) - 3;
    const long M = static_cast<long>(rng() % 4);
    const long N = static_cast<long>(rng() % 4);
    const long P = static_cast<long>(rng() % 4);
    const long i = static_cast<long>(rng() % 3);
    const long j = static_cast<long>(rng() % 3);
    const long k = static_cast<long>(rng() % 3);
    auto spec = make_spec({{al, be, de}, {be, ga, ep}, {de, ep, ph}}, {M, N, P});
    const BigRational got = coeff_A(spec, {static_cast<int>(i), static_cast<int>(j),
                                           static_cast<int>(k)})
                                .eval(BigRational(0));
    const long expect = M * N * P + M * i * (P * be + N * de) +
                        N * j * (P * be + M * ep) + P * k * (N * de + M * ep) +
                        M * be * de * i * i + N * be * ep * j * j +
                        P * de * ep * k * k + be * i * j * (N * de + M * ep) +
                        de * i * k * (P * be + M * ep) +
                        ep * j * k * (P * be + N * de);
    CHECK(got == BigRational(expect));
  }
}

TEST_CASE("coeff_b at the zero index is one") {
  CHECK(coeff_b(make_spec({{0}}, {1}), {0}) == 1);
  CHECK(coeff_b(make_spec({{2, -1}, {-1, 0}}, {1, 2}), {0, 0}) == 1);
  CHECK(coeff_b(make_spec({{3}}, {0}), {0}) == 1);
}

TEST_CASE("coeff_b single vertex closed form") {
  // b_l = (-1)^{(f+1)l} (N / (fl+N)) binom(fl+N, l) whenever fl+N != 0
  for (long f = -3; f <= 3; ++f)
    for (long N = 1; N <= 3; ++N)
      for (long l = 0; l <= 4; ++l) {
        if (f * l + N == 0) continue;
        auto spec = make_spec({{f}}, {N});
        BigRational expect(
            BigInt(N) * gen_binomial(BigInt(f * l + N), static_cast<unsigned long>(l)),
            BigInt(f * l + N));
        expect.canonicalize();
        if (((f + 1) * l) % 2 != 0) expect = -expect;
        CHECK(coeff_b(spec, {static_cast<int>(l)}) == expect);
      }
}

TEST_CASE("coeff_b regularizes the removable 0/0 cases") {
  // f=-1, N=2, l=2 hits T = fl+N = 0; the oracle still has a finite value
  auto spec = make_spec({{-1}}, {2});
  auto y = classical_limit_oracle(spec, 8);
  for (int l = 0; 2 * l <= 8; ++l)
    CHECK(coeff_b(spec, {static_cast<int>(l)}) == y.coeff({l}));
}

TEST_CASE("coeff_b matches the series oracle on fixed small quivers") {
  const std::vector<QuiverSpec> specs = {
      make_spec({{0}}, {2}),
      make_spec({{2}}, {1}),
      make_spec({{0, -1}, {-1, 0}}, {1, 2}),
      make_spec({{1, 1}, {1, 1}}, {2, 1}),
      make_spec({{0, -1, -2}, {-1, 0, -2}, {-2, -2, -4}}, {1, 1, 2}),
  };
  for (const auto& spec : specs) {
    const long bound = 5;
    auto y = classical_limit_oracle(spec, bound);
    for (const MultiIndex& idx : y.region().indices_lex())
      CHECK(coeff_b(spec, idx) == y.coeff(idx));
  }
}

TEST_CASE("coeff_b handles zero-level vertices consistently") {
  // a zero-level vertex never enters the shift, and the closed form must agree
  auto spec = make_spec({{1, -1}, {-1, 2}}, {1, 0});
  auto y = classical_limit_oracle(spec, 4, 2);
  for (const MultiIndex& idx : y.region().indices_lex())
    CHECK(coeff_b(spec, idx) == y.coeff(idx));
}

TEST_CASE("coeff_b validates arity") {
  CHECK_THROWS_AS(coeff_b(make_spec({{0}}, {1}), {0, 0}), BadInput);
}
