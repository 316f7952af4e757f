#include "vsbound/simplex.hpp"

#include "vsbound/error.hpp"

#include <optional>

namespace vsbound {

namespace {

using boost::multiprecision::cpp_rational;

class Tableau {
 public:
  Tableau(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b)
      : rows_(A.size()), vars_(A.empty() ? 0 : A.front().size()) {
    cols_ = vars_ + rows_ + 1;
    cells_.assign(rows_, std::vector<cpp_rational>(cols_, 0));
    basis_.resize(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (A[i].size() != vars_) throw InputError("constraint matrix rows differ in length");
      const bool flip = b[i] < Rational(0);
      for (std::size_t j = 0; j < vars_; ++j) cells_[i][j] = flip ? cpp_rational(-A[i][j].value()) : A[i][j].value();
      cells_[i][vars_ + i] = 1;
      cells_[i][rhs()] = flip ? cpp_rational(-b[i].value()) : b[i].value();
      basis_[i] = vars_ + i;
    }
  }

  std::size_t rhs() const { return cols_ - 1; }
  bool is_artificial(std::size_t j) const { return j >= vars_ && j < vars_ + rows_; }

  // Reduced-cost row for costs `costs` (size cols_-1) given the current basis.
  void price(const std::vector<cpp_rational>& costs) {
    objective_.assign(cols_, 0);
    for (std::size_t j = 0; j + 1 < cols_; ++j) objective_[j] = costs[j];
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      const cpp_rational cb = costs[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < cols_; ++j) objective_[j] -= cb * cells_[i][j];
    }
  }

  cpp_rational objective_value() const { return -objective_[rhs()]; }

  // Returns false if unbounded.
  bool optimize(bool allow_artificial) {
    while (true) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j + 1 < cols_; ++j) {
        if (!allow_artificial && is_artificial(j)) continue;
        if (objective_[j] < 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return true;
      std::optional<std::size_t> leaving;
      cpp_rational best_ratio;
      for (std::size_t i = 0; i < cells_.size(); ++i) {
        const cpp_rational& a = cells_[i][*entering];
        if (a <= 0) continue;
        const cpp_rational ratio = cells_[i][rhs()] / a;
        if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }

  // Pivots artificial variables out of the basis; drops redundant rows.
  void expel_artificials() {
    for (std::size_t i = 0; i < cells_.size();) {
      if (!is_artificial(basis_[i])) {
        ++i;
        continue;
      }
      std::optional<std::size_t> column;
      for (std::size_t j = 0; j < vars_; ++j)
        if (cells_[i][j] != 0) {
          column = j;
          break;
        }
      if (column) {
        pivot(i, *column);
        ++i;
      } else {
        cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(vars_, Rational(0));
    for (std::size_t i = 0; i < cells_.size(); ++i)
      if (basis_[i] < vars_) x[basis_[i]] = Rational(cells_[i][rhs()]);
    return x;
  }

  std::size_t vars() const { return vars_; }

 private:
  void pivot(std::size_t row, std::size_t col) {
    const cpp_rational factor = cells_[row][col];
    for (auto& v : cells_[row]) v /= factor;
    for (std::size_t i = 0; i < cells_.size(); ++i) {
      if (i == row) continue;
      const cpp_rational a = cells_[i][col];
      if (a == 0) continue;
      for (std::size_t j = 0; j < cols_; ++j)
        if (cells_[row][j] != 0) cells_[i][j] -= a * cells_[row][j];
    }
    const cpp_rational z = objective_[col];
    if (z != 0)
      for (std::size_t j = 0; j < cols_; ++j)
        if (cells_[row][j] != 0) objective_[j] -= z * cells_[row][j];
    basis_[row] = col;
  }

  std::size_t rows_;
  std::size_t vars_;
  std::size_t cols_;
  std::vector<std::vector<cpp_rational>> cells_;
  std::vector<std::size_t> basis_;
  std::vector<cpp_rational> objective_;
};

}  // namespace

LinearProgramResult minimize_standard_form(const std::vector<std::vector<Rational>>& A,
                                           const std::vector<Rational>& b,
                                           const std::vector<Rational>& c) {
  if (A.size() != b.size()) throw InputError("constraint matrix and right-hand side differ in length");
  const std::size_t vars = A.empty() ? c.size() : A.front().size();
  if (c.size() != vars) throw InputError("cost vector length does not match variable count");

  LinearProgramResult result;
  Tableau tableau(A, b);

  std::vector<cpp_rational> phase1(vars + A.size(), 0);
  for (std::size_t i = 0; i < A.size(); ++i) phase1[vars + i] = 1;
  tableau.price(phase1);
  tableau.optimize(true);
  if (tableau.objective_value() != 0) {
    result.status = LinearProgramResult::Status::infeasible;
    return result;
  }
  tableau.expel_artificials();

  std::vector<cpp_rational> phase2(vars + A.size(), 0);
  for (std::size_t j = 0; j < vars; ++j) phase2[j] = c[j].value();
  tableau.price(phase2);
  if (!tableau.optimize(false)) {
    result.status = LinearProgramResult::Status::unbounded;
    return result;
  }
  result.status = LinearProgramResult::Status::optimal;
  result.objective = Rational(tableau.objective_value());
  result.solution = tableau.solution();
  return result;
}

}  // namespace vsbound
