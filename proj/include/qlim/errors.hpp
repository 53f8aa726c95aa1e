#pragma once

#include <stdexcept>
#include <string>

namespace qlim {

/* Common base so callers can catch everything this library throws. */
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/* Malformed user-facing input: unparsable rational, bad spec JSON, ... */
struct BadInput : Error {
  explicit BadInput(const std::string& msg) : Error(msg) {}
};

/* A quiver spec violating its invariants (asymmetric matrix, size mismatch, bad sign). */
struct BadSpec : BadInput {
  explicit BadSpec(const std::string& msg) : BadInput(msg) {}
};

/* limit_at_one: the denominator vanishes at t=1 to strictly higher order. */
struct PoleAtOne : Error {
  explicit PoleAtOne(const std::string& msg) : Error(msg) {}
};

/* ratio_series / log_series: constant term is zero (resp. not one). */
struct NonUnitConstantTerm : Error {
  explicit NonUnitConstantTerm(const std::string& msg) : Error(msg) {}
};

/* Epsilon-regularized evaluation still has a pole at eps = 0. */
struct RegularizationFailure : Error {
  explicit RegularizationFailure(const std::string& msg) : Error(msg) {}
};

/* Vertex index outside 1..m. */
struct IndexOutOfRange : Error {
  explicit IndexOutOfRange(const std::string& msg) : Error(msg) {}
};

/* Catalog lookup for a name that is not there. */
struct UnknownEntry : BadInput {
  explicit UnknownEntry(const std::string& msg) : BadInput(msg) {}
};

/* Exact polynomial division left a remainder. */
struct NonPolynomialQuotient : Error {
  explicit NonPolynomialQuotient(const std::string& msg) : Error(msg) {}
};

}  // namespace qlim
