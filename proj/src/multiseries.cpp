#include "qlim/multiseries.hpp"

namespace qlim {

MultiSeries<RationalFunction> shift_q(const MultiSeries<RationalFunction>& P,
                                      const std::vector<long>& n) {
  if (n.size() != P.region().levels().size())
    throw BadInput("shift vector length does not match series arity");
  MultiSeries<RationalFunction> out(P.region());
  for (const auto& [idx, rf] : P.terms()) {
    const long e = 2 * weighted_degree(n, idx);
    out.set_coeff(idx, RationalFunction(rf.num().times_power(e), rf.den()));
  }
  return out;
}

nlohmann::json series_to_json(const MultiSeries<BigRational>& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [idx, c] : s.terms()) {
    nlohmann::json t;
    t["index"] = idx;
    t["value"] = to_fraction_string(c);
    terms.push_back(std::move(t));
  }
  nlohmann::json j;
  j["trunc"] = s.region().bound();
  j["terms"] = std::move(terms);
  return j;
}

}  // namespace qlim
