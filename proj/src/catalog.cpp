#include "qlim/catalog.hpp"

#include <map>

#include "qlim/errors.hpp"

namespace qlim {

namespace {

std::vector<BigRational> rationals(std::initializer_list<long> values) {
  std::vector<BigRational> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

std::map<std::string, CatalogEntry> build_catalog() {
  std::map<std::string, CatalogEntry> c;

  {
    QuiverSpec s;
    s.name = "9_46";
    s.matrix = {{0, -1, -2}, {-1, 0, -2}, {-2, -2, -4}};
    s.levels = {1, 1, 2};
    s.signs = {1, 1, 1};
    c["9_46"] = CatalogEntry{
        s,
        rationals({-2, -10, -56, -330}),
        rationals({-2, -2, -6, -20}),
        "three vertices, one level-2 generator; all plus signs"};
  }
  {
    QuiverSpec s;
    s.name = "8_20";
    s.matrix = {{0, -1, -1, -2}, {-1, -1, -1, -3}, {-1, -1, 1, -1}, {-2, -3, -1, -5}};
    s.levels = {1, 1, 1, 2};
    s.signs = {1, 1, 1, 1};
    c["8_20"] = CatalogEntry{
        s,
        rationals({1, 5, -17, 5}),
        rationals({1, 1, -2, 0}),
        "four vertices, one level-2 generator; all plus signs"};
  }
  {
    QuiverSpec s;
    s.name = "9_42";
    s.matrix = {{-12}};
    s.levels = {2};
    s.signs = {1};
    c["9_42"] = CatalogEntry{
        s,
        rationals({0, -4, 0, -100, 0, -2812, 0, -83300}),
        rationals({0, -1, 0, -6, 0, -78, 0, -1300}),
        "single vertex of level 2; only even degrees populated"};
  }
  return c;
}

const std::map<std::string, CatalogEntry>& catalog() {
  static const std::map<std::string, CatalogEntry> c = build_catalog();
  return c;
}

}  // namespace

const CatalogEntry& get_entry(const std::string& name) {
  const auto& c = catalog();
  auto it = c.find(name);
  if (it == c.end()) throw UnknownEntry("no catalog entry named \"" + name + "\"");
  return it->second;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& [name, entry] : catalog()) names.push_back(name);
  return names;
}

LaurentPoly bottom_row_946(long r) {
  if (r < 0) throw BadInput("negative degree");
  LaurentPoly sum;
  const LaurentPoly top = pochhammer_qq(r);
  for (long d4 = 0; 2 * d4 <= r; ++d4) {
    for (long d3 = 0; d3 + 2 * d4 <= r; ++d3) {
      const long d1 = r - d3 - 2 * d4;
      const long e = -d1 * (d3 + 2 * d4) - 2 * d4 * (d3 + d4);  // power of q
      const LaurentPoly quot =
          top.exact_div(pochhammer_qq(d1) * pochhammer_qq(d3) * pochhammer_qq(d4));
      sum += quot.times_power(2 * e);
    }
  }
  return sum;
}

}  // namespace qlim
