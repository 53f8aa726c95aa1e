#include "qlim/closedform.hpp"

#include <algorithm>

#include "qlim/errors.hpp"

namespace qlim {

namespace {

/* A pair whose source is no remaining pair's target cannot sit on a cycle;
 * peeling until stuck leaves exactly the pairs on cycles. */
bool is_acyclic(AdmissibleSet pairs) {
  bool changed = true;
  while (changed && !pairs.empty()) {
    changed = false;
    for (auto it = pairs.begin(); it != pairs.end(); ++it) {
      const int src = it->first;
      const bool src_is_target = std::any_of(
          pairs.begin(), pairs.end(), [src](const VertexPair& p) { return p.second == src; });
      if (!src_is_target) {
        pairs.erase(it);
        changed = true;
        break;
      }
    }
  }
  return pairs.empty();
}

void targets_rec(int m, int k, int first, std::vector<int>& tgt,
                 std::vector<std::vector<int>>& out) {
  if (static_cast<int>(tgt.size()) == k) {
    out.push_back(tgt);
    return;
  }
  for (int j = first; j < m; ++j) {
    tgt.push_back(j);
    targets_rec(m, k, j + 1, tgt, out);
    tgt.pop_back();
  }
}

}  // namespace

std::vector<AdmissibleSet> enumerate_admissible(int m, int k) {
  if (m < 1) throw BadInput("vertex count must be positive");
  if (k < 0 || k >= m) return {};
  if (k == 0) return {AdmissibleSet{}};
  std::vector<std::vector<int>> target_sets;
  std::vector<int> tgt;
  targets_rec(m, k, 0, tgt, target_sets);

  std::vector<AdmissibleSet> out;
  for (const auto& targets : target_sets) {
    // Odometer over source choices, one per target.
    std::vector<int> src(k, 0);
    while (true) {
      AdmissibleSet s(k);
      for (int u = 0; u < k; ++u) s[u] = {src[u], targets[u]};
      std::sort(s.begin(), s.end());
      if (is_acyclic(s)) out.push_back(std::move(s));
      int pos = 0;
      while (pos < k) {
        if (++src[pos] < m) break;
        src[pos] = 0;
        ++pos;
      }
      if (pos == k) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

EpsPoly coeff_A(const QuiverSpec& spec, const MultiIndex& l) {
  const int m = spec.size();
  const EpsPoly eps = LaurentPoly::monomial(1, 1);
  EpsPoly A(1);
  for (int j = 0; j < m; ++j) A *= eps + LaurentPoly(spec.levels[j]);
  for (int k = 1; k <= m - 1; ++k) {
    for (const AdmissibleSet& s : enumerate_admissible(m, k)) {
      BigInt factor = 1;
      for (const auto& [i, j] : s) factor *= BigInt(spec.matrix[i][j]) * l[i];
      if (factor == 0) continue;
      std::vector<bool> is_target(m, false);
      for (const auto& [i, j] : s) is_target[j] = true;
      EpsPoly rest{BigRational(factor)};
      for (int j = 0; j < m; ++j)
        if (!is_target[j]) rest *= eps + LaurentPoly(spec.levels[j]);
      A += rest;
    }
  }
  return A;
}

BigRational coeff_b(const QuiverSpec& spec, const MultiIndex& l) {
  spec.validate();
  const int m = spec.size();
  if (static_cast<int>(l.size()) != m) throw BadInput("index arity mismatch");
  long sign_exp = 0;
  for (int i = 0; i < m; ++i) sign_exp += (spec.matrix[i][i] + 1) * l[i];

  const EpsPoly eps = LaurentPoly::monomial(1, 1);
  EpsPoly num = coeff_A(spec, l);
  EpsPoly den(1);
  for (int j = 0; j < m; ++j) {
    long tj = spec.levels[j];
    for (int i = 0; i < m; ++i) tj += spec.matrix[i][j] * static_cast<long>(l[i]);
    const EpsPoly T = eps + LaurentPoly(tj);
    num *= gen_binomial(T, static_cast<unsigned long>(l[j]));
    den *= T;
  }
  const BigRational v = limit_ratio_at_zero(num, den);
  return sign_exp % 2 == 0 ? v : -v;
}

}  // namespace qlim
