#pragma once

#include <string>
#include <vector>

namespace qlim {

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

/* End-to-end reproduction of one catalog entry: log-derivative coefficients
 * and extremal invariants against the frozen expected values. */
CheckResult check_catalog_entry(const std::string& name);

CheckResult check_closedform_vs_oracle();  // randomized sweep, fixed seed
CheckResult check_factorization();         // y = prod_j y_j^{n_j}
CheckResult check_quantum_identity();      // nested sums vs shift ratio
CheckResult check_lattice_counts();        // DFS counts vs closed forms
CheckResult check_convolution();
CheckResult check_bottom_row();
CheckResult check_integrality();

/* All acceptance checks, catalog entries first, in a fixed order. */
std::vector<CheckResult> run_all_checks();

}  // namespace qlim
