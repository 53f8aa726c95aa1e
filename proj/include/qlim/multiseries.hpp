#pragma once

#include <map>
#include <utility>

#include <json.hpp>

#include "qlim/errors.hpp"
#include "qlim/quiver.hpp"
#include "qlim/rational_function.hpp"

namespace qlim {

inline bool coeff_is_zero(const BigRational& c) { return c == 0; }
inline bool coeff_is_zero(const RationalFunction& c) { return c.is_zero(); }
inline BigRational coeff_div(const BigRational& a, const BigRational& b) { return a / b; }
inline RationalFunction coeff_div(const RationalFunction& a, const RationalFunction& b) {
  return a * b.inverse();
}

/*
 * Multivariate series truncated to a TruncRegion, with pluggable exact
 * coefficient domain (BigRational after the classical limit, RationalFunction
 * before it). Zero coefficients are never stored, and the term map is keyed
 * lexicographically, which fixes the serialization order.
 */
template <class C>
class MultiSeries {
 public:
  explicit MultiSeries(TruncRegion region) : region_(std::move(region)) {}

  const TruncRegion& region() const { return region_; }
  const std::map<MultiIndex, C>& terms() const { return terms_; }

  C coeff(const MultiIndex& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? C{} : it->second;
  }

  void set_coeff(const MultiIndex& idx, C value) {
    if (!region_.contains(idx)) throw IndexOutOfRange("index outside truncation region");
    if (coeff_is_zero(value))
      terms_.erase(idx);
    else
      terms_[idx] = std::move(value);
  }

  bool operator==(const MultiSeries& o) const {
    return region_ == o.region_ && terms_ == o.terms_;
  }

  MultiSeries operator+(const MultiSeries& o) const {
    require_same_region(o);
    MultiSeries r = *this;
    for (const auto& [idx, c] : o.terms_) r.set_coeff(idx, r.coeff(idx) + c);
    return r;
  }

  MultiSeries operator-(const MultiSeries& o) const {
    require_same_region(o);
    MultiSeries r = *this;
    for (const auto& [idx, c] : o.terms_) r.set_coeff(idx, r.coeff(idx) - c);
    return r;
  }

  MultiSeries operator*(const MultiSeries& o) const {
    require_same_region(o);
    MultiSeries r(region_);
    for (const auto& [ia, ca] : terms_)
      for (const auto& [ib, cb] : o.terms_) {
        MultiIndex idx(ia.size());
        for (size_t v = 0; v < idx.size(); ++v) idx[v] = ia[v] + ib[v];
        if (!region_.contains(idx)) continue;
        r.set_coeff(idx, r.coeff(idx) + ca * cb);
      }
    return r;
  }

  MultiSeries pow(unsigned long e) const {
    MultiSeries base = *this, acc = one(region_);
    while (e > 0) {
      if (e & 1) acc = acc * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return acc;
  }

  MultiSeries scaled(const C& c) const {
    MultiSeries r(region_);
    for (const auto& [idx, v] : terms_) r.set_coeff(idx, v * c);
    return r;
  }

  template <class F>
  auto map_coeffs(F f) const -> MultiSeries<decltype(f(C{}))> {
    MultiSeries<decltype(f(C{}))> r(region_);
    for (const auto& [idx, v] : terms_) r.set_coeff(idx, f(v));
    return r;
  }

  static MultiSeries one(const TruncRegion& region) {
    MultiSeries r(region);
    r.set_coeff(MultiIndex(region.size(), 0), C{1});
    return r;
  }

 private:
  void require_same_region(const MultiSeries& o) const {
    if (!(region_ == o.region_))
      throw BadInput("series defined over different truncation regions");
  }

  TruncRegion region_;
  std::map<MultiIndex, C> terms_;
};

/*
 * Coefficientwise solution Y of denom * Y = numer, graded by total degree:
 * Y_l = (numer_l - sum_{0<k<=l} denom_k Y_{l-k}) / denom_0.
 */
template <class C>
MultiSeries<C> ratio_series(const MultiSeries<C>& numer, const MultiSeries<C>& denom) {
  if (!(numer.region() == denom.region()))
    throw BadInput("ratio of series over different truncation regions");
  const MultiIndex zero(numer.region().size(), 0);
  const C c0 = denom.coeff(zero);
  if (coeff_is_zero(c0))
    throw NonUnitConstantTerm("denominator has zero constant term");
  MultiSeries<C> y(numer.region());
  for (const MultiIndex& idx : numer.region().indices_by_total_degree()) {
    C acc = numer.coeff(idx);
    for (const auto& [k, dk] : denom.terms()) {
      if (k == zero) continue;
      MultiIndex rest(idx.size());
      bool ok = true;
      for (size_t v = 0; v < idx.size(); ++v) {
        rest[v] = idx[v] - k[v];
        if (rest[v] < 0) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      acc = acc - dk * y.coeff(rest);
    }
    y.set_coeff(idx, coeff_div(acc, c0));
  }
  return y;
}

/* x_i -> q^{n_i} x_i on a pre-limit series: index l picks up t^{2 sum n_i l_i}. */
MultiSeries<RationalFunction> shift_q(const MultiSeries<RationalFunction>& P,
                                      const std::vector<long>& n);

/* {"trunc": D, "terms":[{"index":[...], "value":"num/den"}, ...]} lexicographic. */
nlohmann::json series_to_json(const MultiSeries<BigRational>& s);

}  // namespace qlim
