#pragma once

#include "vsbound/rational.hpp"

#include <vector>

namespace vsbound {

struct LinearProgramResult {
  enum class Status { optimal, infeasible, unbounded };

  Status status = Status::infeasible;
  Rational objective;
  std::vector<Rational> solution;
};

/// Minimizes c·x subject to A x = b, x ≥ 0. Exact two-phase tableau simplex;
/// Bland's rule for both entering and leaving variables, so it always
/// terminates.
LinearProgramResult minimize_standard_form(const std::vector<std::vector<Rational>>& A,
                                           const std::vector<Rational>& b,
                                           const std::vector<Rational>& c);

}  // namespace vsbound
