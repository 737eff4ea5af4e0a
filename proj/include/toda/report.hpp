#pragma once

#include <string>
#include <vector>

namespace toda {

struct IdentityReport {
  std::string name;
  unsigned rank = 0;
  bool pass = false;
  std::vector<std::string> residuals;  // canonical text of nonzero entries
  std::string note;
};

// Single-entry sign mutation for negative controls (1-based indices; for
// Momentum and Counterterm targets, `row` is the site index).
struct Mutation {
  enum Target { MatrixM, MatrixN, MatrixR, Momentum, Counterterm, Shift } target;
  unsigned row = 0, col = 0;
};

}  // namespace toda
