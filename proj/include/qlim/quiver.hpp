#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qlim/rational.hpp"

namespace qlim {

/* Dimension vector / exponent multi-index, one entry per vertex. */
using MultiIndex = std::vector<int>;

long total_degree(const MultiIndex& idx);
long weighted_degree(const std::vector<long>& levels, const MultiIndex& idx);

/*
 * Symmetric quiver with higher-level generators: C is the (symmetrized)
 * adjacency matrix, levels[i] = n_i is the q-power attached to vertex i,
 * signs[i] is the +-1 carried into the one-variable specialization
 * x_i -> signs[i] * x^{n_i}.
 */
struct QuiverSpec {
  std::string name;
  std::vector<std::vector<long>> matrix;
  std::vector<long> levels;
  std::vector<int> signs;

  int size() const { return static_cast<int>(matrix.size()); }
  void validate() const;  // throws BadSpec

  /* sum_{i,j} C_ij l_i l_j (both orders of an off-diagonal pair counted) */
  long quad_form(const MultiIndex& idx) const;

  static QuiverSpec from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

/*
 * Index region for truncated series: all l >= 0 with
 * sum_i levels[i]*l_i <= bound, and l_i <= cap for every zero-level vertex.
 * A zero level makes the weighted degree blind to that coordinate, so the
 * cap is mandatory in that case (refusing a silently unbounded enumeration).
 */
class TruncRegion {
 public:
  TruncRegion(std::vector<long> levels, long bound,
              std::optional<long> cap = std::nullopt);

  bool contains(const MultiIndex& idx) const;
  const std::vector<long>& levels() const { return levels_; }
  long bound() const { return bound_; }
  std::optional<long> cap() const { return cap_; }
  int size() const { return static_cast<int>(levels_.size()); }

  /* All indices, lexicographic. */
  std::vector<MultiIndex> indices_lex() const;
  /* All indices ordered by total degree (ties lexicographic), so every
   * componentwise-smaller index comes first; what graded recursions need. */
  std::vector<MultiIndex> indices_by_total_degree() const;

  bool operator==(const TruncRegion& o) const;

 private:
  std::vector<long> levels_;
  long bound_;
  std::optional<long> cap_;
};

}  // namespace qlim
