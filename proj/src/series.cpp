#include "qlim/series.hpp"

#include <map>
#include <utility>

#include "qlim/errors.hpp"

namespace qlim {

namespace {

/* Odometer over all 0 <= k <= idx componentwise. Calls f on each k != skip. */
template <class F>
void for_each_subindex(const MultiIndex& idx, F f) {
  MultiIndex k(idx.size(), 0);
  while (true) {
    f(k);
    size_t pos = 0;
    while (pos < k.size()) {
      if (k[pos] < idx[pos]) {
        ++k[pos];
        break;
      }
      k[pos] = 0;
      ++pos;
    }
    if (pos == k.size()) return;
  }
}

long quad_form(const std::vector<std::vector<long>>& matrix, const MultiIndex& idx) {
  long s = 0;
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = 0; j < idx.size(); ++j)
      s += matrix[i][j] * static_cast<long>(idx[i]) * idx[j];
  return s;
}

/* Per-call caches; the whole computation is a pure function of its inputs. */
struct Workspace {
  std::map<unsigned long, LaurentPoly> poch;
  std::map<std::pair<unsigned long, unsigned long>, LaurentPoly> gauss;

  const LaurentPoly& pochhammer(unsigned long d) {
    auto it = poch.find(d);
    if (it == poch.end()) it = poch.emplace(d, pochhammer_qq(d)).first;
    return it->second;
  }
  const LaurentPoly& binom(unsigned long n, unsigned long k) {
    auto key = std::make_pair(n, k);
    auto it = gauss.find(key);
    if (it == gauss.end()) it = gauss.emplace(key, gauss_binomial(n, k)).first;
    return it->second;
  }
};

MultiSeries<BigRational> oracle_core(const std::vector<std::vector<long>>& matrix,
                                     const std::vector<long>& shift,
                                     const TruncRegion& region) {
  Workspace ws;
  MultiSeries<BigRational> y(region);
  std::map<MultiIndex, LaurentPoly> ynum;  // numerator of Y_l over Q_l
  for (const MultiIndex& idx : region.indices_by_total_degree()) {
    if (total_degree(idx) == 0) {
      ynum[idx] = LaurentPoly(1);
      y.set_coeff(idx, 1);
      continue;
    }
    const long e = quad_form(matrix, idx);
    LaurentPoly acc =
        LaurentPoly::monomial(e % 2 == 0 ? 1 : -1, e + 2 * weighted_degree(shift, idx));
    for_each_subindex(idx, [&](const MultiIndex& k) {
      if (total_degree(k) == 0) return;
      const long ek = quad_form(matrix, k);
      LaurentPoly term = LaurentPoly::monomial(ek % 2 == 0 ? 1 : -1, ek);
      for (size_t v = 0; v < idx.size(); ++v) term *= ws.binom(idx[v], k[v]);
      MultiIndex rest(idx.size());
      for (size_t v = 0; v < idx.size(); ++v) rest[v] = idx[v] - k[v];
      acc -= term * ynum.at(rest);
    });
    LaurentPoly q(1);
    for (int v : idx) q *= ws.pochhammer(v);
    y.set_coeff(idx, limit_at_one(RationalFunction(acc, q)));
    ynum[idx] = std::move(acc);
  }
  return y;
}

}  // namespace

MultiSeries<RationalFunction> expand_pc(const QuiverSpec& spec, long bound,
                                        std::optional<long> cap) {
  spec.validate();
  TruncRegion region(spec.levels, bound, cap);
  MultiSeries<RationalFunction> P(region);
  for (const MultiIndex& idx : region.indices_lex()) {
    const long e = spec.quad_form(idx);
    LaurentPoly den(1);
    for (int v : idx) den *= pochhammer_qq(v);
    P.set_coeff(idx, RationalFunction(LaurentPoly::monomial(e % 2 == 0 ? 1 : -1, e),
                                      std::move(den)));
  }
  return P;
}

MultiSeries<BigRational> classical_limit_oracle(const QuiverSpec& spec, long bound,
                                                std::optional<long> cap) {
  spec.validate();
  return oracle_core(spec.matrix, spec.levels, TruncRegion(spec.levels, bound, cap));
}

MultiSeries<BigRational> partial_limit(const QuiverSpec& spec, int j, long bound,
                                       std::optional<long> cap) {
  spec.validate();
  if (j < 1 || j > spec.size())
    throw IndexOutOfRange("vertex index " + std::to_string(j) + " outside 1.." +
                          std::to_string(spec.size()));
  std::vector<long> shift(spec.size(), 0);
  shift[j - 1] = 1;
  return oracle_core(spec.matrix, shift, TruncRegion(spec.levels, bound, cap));
}

}  // namespace qlim
