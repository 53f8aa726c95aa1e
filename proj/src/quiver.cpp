#include "qlim/quiver.hpp"

#include <algorithm>

#include "qlim/errors.hpp"

namespace qlim {

long total_degree(const MultiIndex& idx) {
  long s = 0;
  for (int v : idx) s += v;
  return s;
}

long weighted_degree(const std::vector<long>& levels, const MultiIndex& idx) {
  long s = 0;
  for (size_t i = 0; i < idx.size(); ++i) s += levels[i] * idx[i];
  return s;
}

void QuiverSpec::validate() const {
  const size_t m = matrix.size();
  if (m == 0) throw BadSpec("empty matrix");
  for (const auto& row : matrix)
    if (row.size() != m) throw BadSpec("matrix is not square");
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < i; ++j)
      if (matrix[i][j] != matrix[j][i]) throw BadSpec("matrix is not symmetric");
  if (levels.size() != m) throw BadSpec("levels length does not match matrix size");
  for (long n : levels)
    if (n < 0) throw BadSpec("negative level");
  if (signs.size() != m) throw BadSpec("signs length does not match matrix size");
  for (int s : signs)
    if (s != 1 && s != -1) throw BadSpec("signs must be +1 or -1");
}

long QuiverSpec::quad_form(const MultiIndex& idx) const {
  long s = 0;
  const int m = size();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) s += matrix[i][j] * static_cast<long>(idx[i]) * idx[j];
  return s;
}

QuiverSpec QuiverSpec::from_json(const nlohmann::json& j) {
  QuiverSpec spec;
  try {
    if (!j.is_object()) throw BadSpec("spec must be a JSON object");
    if (j.contains("name")) spec.name = j.at("name").get<std::string>();
    spec.matrix = j.at("matrix").get<std::vector<std::vector<long>>>();
    spec.levels = j.at("levels").get<std::vector<long>>();
    spec.signs = j.at("signs").get<std::vector<int>>();
  } catch (const nlohmann::json::exception& e) {
    throw BadSpec(std::string("malformed quiver spec: ") + e.what());
  }
  spec.validate();
  return spec;
}

nlohmann::json QuiverSpec::to_json() const {
  nlohmann::json j;
  if (!name.empty()) j["name"] = name;
  j["matrix"] = matrix;
  j["levels"] = levels;
  j["signs"] = signs;
  return j;
}

TruncRegion::TruncRegion(std::vector<long> levels, long bound, std::optional<long> cap)
    : levels_(std::move(levels)), bound_(bound), cap_(cap) {
  if (levels_.empty()) throw BadSpec("region needs at least one vertex");
  if (bound_ < 0) throw BadSpec("negative truncation bound");
  for (long n : levels_) {
    if (n < 0) throw BadSpec("negative level");
    if (n == 0 && !cap_)
      throw BadSpec("zero-level vertex requires an explicit per-vertex cap");
  }
  if (cap_ && *cap_ < 0) throw BadSpec("negative vertex cap");
}

bool TruncRegion::contains(const MultiIndex& idx) const {
  if (idx.size() != levels_.size()) return false;
  for (size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] < 0) return false;
    if (levels_[i] == 0 && idx[i] > *cap_) return false;
  }
  return weighted_degree(levels_, idx) <= bound_;
}

std::vector<MultiIndex> TruncRegion::indices_lex() const {
  std::vector<MultiIndex> out;
  MultiIndex cur(levels_.size(), 0);
  const auto rec = [&](auto&& self, size_t pos, long used) -> void {
    if (pos == levels_.size()) {
      out.push_back(cur);
      return;
    }
    const long n = levels_[pos];
    const long hi = n == 0 ? *cap_ : (bound_ - used) / n;
    for (long v = 0; v <= hi; ++v) {
      cur[pos] = static_cast<int>(v);
      self(self, pos + 1, used + n * v);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<MultiIndex> TruncRegion::indices_by_total_degree() const {
  std::vector<MultiIndex> out = indices_lex();
  std::stable_sort(out.begin(), out.end(), [](const MultiIndex& a, const MultiIndex& b) {
    return total_degree(a) < total_degree(b);
  });
  return out;
}

bool TruncRegion::operator==(const TruncRegion& o) const {
  return levels_ == o.levels_ && bound_ == o.bound_ && cap_ == o.cap_;
}

}  // namespace qlim
