#include "deskfair/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "deskfair/error.hpp"

namespace deskfair {

void LinearProgram::validate() const {
  const auto mismatch = [](const std::string& what) {
    throw Error(ErrorCode::DimensionMismatch, "linear program: " + what);
  };
  if (objective.size() != num_vars) mismatch("objective length != num_vars");
  if (lower.size() != num_vars || upper.size() != num_vars) mismatch("bound length != num_vars");
  if (rhs.size() != rows.size()) mismatch("rhs length != row count");
  for (const auto& row : rows) {
    if (row.size() != num_vars) mismatch("row length != num_vars");
    for (double a : row) {
      if (!std::isfinite(a)) throw Error(ErrorCode::BadParameter, "non-finite constraint coefficient");
    }
  }
  for (std::size_t j = 0; j < num_vars; ++j) {
    if (!std::isfinite(lower[j])) throw Error(ErrorCode::BadParameter, "lower bounds must be finite");
    if (std::isnan(upper[j]) || lower[j] > upper[j]) {
      throw Error(ErrorCode::BadParameter, "lower bound exceeds upper bound for variable " + std::to_string(j));
    }
    if (!std::isfinite(objective[j])) throw Error(ErrorCode::BadParameter, "non-finite objective coefficient");
  }
  for (double b : rhs) {
    if (!std::isfinite(b)) throw Error(ErrorCode::BadParameter, "non-finite right-hand side");
  }
}

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
  }
  return "unknown";
}

std::vector<Rational> group_objective(const Instance& inst) {
  std::vector<Rational> c(inst.num_papers());
  for (std::size_t j = 0; j < inst.num_papers(); ++j) {
    for (auto i : inst.paper(j).authors) {
      c[j] += Rational(1, static_cast<std::int64_t>(inst.paper_count(i)));
    }
  }
  return c;
}

LinearProgram build_group_relaxation(const Instance& inst) {
  const auto w = build_incidence(inst);
  LinearProgram lp;
  lp.num_vars = inst.num_papers();
  for (const auto& c : group_objective(inst)) lp.objective.push_back(to_double(c));
  lp.rows.reserve(w.rows());
  for (std::size_t i = 0; i < w.rows(); ++i) {
    const auto row = w.row(i);
    lp.rows.emplace_back(row.begin(), row.end());
    lp.rhs.push_back(static_cast<double>(inst.cap()));
  }
  lp.lower.assign(lp.num_vars, 0.0);
  lp.upper.assign(lp.num_vars, 1.0);
  return lp;
}

namespace {

// Dense tableau B^-1 [A | I | -E] over structural, slack and artificial
// columns, in that order. Nonbasic columns rest at one of their bounds.
class BoundedSimplex {
 public:
  explicit BoundedSimplex(const LinearProgram& lp);

  LpSolution solve();

 private:
  enum class State { Lower, Upper, Basic };
  enum class Outcome { Optimal, Unbounded };

  double& cell(std::size_t i, std::size_t j) { return tableau_[i * cols_ + j]; }
  double value(std::size_t j) const;
  void set_costs(std::vector<double> costs);
  Outcome optimize();
  void pivot(std::size_t row, std::size_t col);

  const LinearProgram& lp_;
  std::size_t rows_;
  std::size_t structural_;
  std::size_t cols_;
  std::size_t first_artificial_;
  std::vector<double> tableau_;
  std::vector<double> beta_;
  std::vector<std::size_t> basis_;
  std::vector<State> state_;
  std::vector<double> lo_;
  std::vector<double> hi_;
  std::vector<double> cost_;
  std::vector<double> reduced_;
  std::size_t iterations_ = 0;
  std::size_t iteration_limit_;
  std::vector<std::pair<std::ptrdiff_t, std::ptrdiff_t>> pivots_;
};

BoundedSimplex::BoundedSimplex(const LinearProgram& lp)
    : lp_(lp),
      rows_(lp.rows.size()),
      structural_(lp.num_vars),
      iteration_limit_(50 * (lp.rows.size() + lp.num_vars)) {
  std::vector<double> residual(rows_);
  std::size_t artificials = 0;
  for (std::size_t i = 0; i < rows_; ++i) {
    double activity = 0.0;
    for (std::size_t j = 0; j < structural_; ++j) activity += lp.rows[i][j] * lp.lower[j];
    residual[i] = lp.rhs[i] - activity;
    if (residual[i] < 0.0) ++artificials;
  }
  first_artificial_ = structural_ + rows_;
  cols_ = first_artificial_ + artificials;
  tableau_.assign(rows_ * cols_, 0.0);
  beta_.assign(rows_, 0.0);
  basis_.assign(rows_, 0);
  state_.assign(cols_, State::Lower);
  lo_.assign(cols_, 0.0);
  hi_.assign(cols_, kInfinity);
  std::copy(lp.lower.begin(), lp.lower.end(), lo_.begin());
  std::copy(lp.upper.begin(), lp.upper.end(), hi_.begin());

  std::size_t next_artificial = first_artificial_;
  for (std::size_t i = 0; i < rows_; ++i) {
    const double sign = residual[i] < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < structural_; ++j) cell(i, j) = sign * lp.rows[i][j];
    cell(i, structural_ + i) = sign;
    if (residual[i] < 0.0) {
      cell(i, next_artificial) = 1.0;
      basis_[i] = next_artificial++;
    } else {
      basis_[i] = structural_ + i;
    }
    state_[basis_[i]] = State::Basic;
    beta_[i] = sign * residual[i];
  }
}

double BoundedSimplex::value(std::size_t j) const {
  switch (state_[j]) {
    case State::Lower: return lo_[j];
    case State::Upper: return hi_[j];
    case State::Basic: break;
  }
  for (std::size_t i = 0; i < rows_; ++i) {
    if (basis_[i] == j) return beta_[i];
  }
  return 0.0;
}

void BoundedSimplex::set_costs(std::vector<double> costs) {
  cost_ = std::move(costs);
  reduced_ = cost_;
  for (std::size_t i = 0; i < rows_; ++i) {
    const double cb = cost_[basis_[i]];
    if (cb == 0.0) continue;
    for (std::size_t j = 0; j < cols_; ++j) reduced_[j] -= cb * tableau_[i * cols_ + j];
  }
}

void BoundedSimplex::pivot(std::size_t row, std::size_t col) {
  const double piv = cell(row, col);
  double* pivot_row = &tableau_[row * cols_];
  for (std::size_t j = 0; j < cols_; ++j) pivot_row[j] /= piv;
  pivot_row[col] = 1.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i == row) continue;
    const double factor = cell(i, col);
    if (factor == 0.0) continue;
    double* target = &tableau_[i * cols_];
    for (std::size_t j = 0; j < cols_; ++j) target[j] -= factor * pivot_row[j];
    target[col] = 0.0;
  }
  const double factor = reduced_[col];
  if (factor != 0.0) {
    for (std::size_t j = 0; j < cols_; ++j) reduced_[j] -= factor * pivot_row[j];
    reduced_[col] = 0.0;
  }
}

BoundedSimplex::Outcome BoundedSimplex::optimize() {
  for (;;) {
    // Bland: lowest-index improving column.
    std::ptrdiff_t entering = -1;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (state_[j] == State::Basic || hi_[j] <= lo_[j]) continue;
      if ((state_[j] == State::Lower && reduced_[j] > kFeasibilityTol) ||
          (state_[j] == State::Upper && reduced_[j] < -kFeasibilityTol)) {
        entering = static_cast<std::ptrdiff_t>(j);
        break;
      }
    }
    if (entering < 0) return Outcome::Optimal;
    if (++iterations_ > iteration_limit_) {
      throw Error(ErrorCode::SolverStalled,
                  "simplex exceeded " + std::to_string(iteration_limit_) + " iterations");
    }
    const auto col = static_cast<std::size_t>(entering);
    const double dir = state_[col] == State::Lower ? 1.0 : -1.0;

    // Ratio test; the entering column's own range is the bound-flip candidate.
    double step = hi_[col] - lo_[col];
    std::ptrdiff_t leaving_row = -1;
    for (std::size_t i = 0; i < rows_; ++i) {
      const double alpha = dir * cell(i, col);
      const std::size_t b = basis_[i];
      double limit;
      if (alpha > kPivotTol) {
        limit = (beta_[i] - lo_[b]) / alpha;
      } else if (alpha < -kPivotTol && std::isfinite(hi_[b])) {
        limit = (hi_[b] - beta_[i]) / -alpha;
      } else {
        continue;
      }
      limit = std::max(limit, 0.0);
      if (limit < step ||
          (leaving_row >= 0 && limit == step && b < basis_[static_cast<std::size_t>(leaving_row)])) {
        step = limit;
        leaving_row = static_cast<std::ptrdiff_t>(i);
      }
    }
    if (!std::isfinite(step)) return Outcome::Unbounded;

    const double entering_value = value(col) + dir * step;
    for (std::size_t i = 0; i < rows_; ++i) beta_[i] -= dir * step * cell(i, col);

    if (leaving_row < 0) {
      state_[col] = state_[col] == State::Lower ? State::Upper : State::Lower;
      pivots_.emplace_back(entering, -1);
      continue;
    }
    const auto r = static_cast<std::size_t>(leaving_row);
    if (std::abs(cell(r, col)) < kPivotTol) {
      throw Error(ErrorCode::NumericalBreakdown, "pivot magnitude below tolerance");
    }
    const std::size_t leaving = basis_[r];
    state_[leaving] = dir * cell(r, col) > 0.0 ? State::Lower : State::Upper;
    beta_[r] = entering_value;
    basis_[r] = col;
    state_[col] = State::Basic;
    pivots_.emplace_back(entering, static_cast<std::ptrdiff_t>(leaving));
    pivot(r, col);
  }
}

LpSolution BoundedSimplex::solve() {
  LpSolution sol;
  double scale = 1.0;
  for (double b : lp_.rhs) scale = std::max(scale, std::abs(b));

  if (cols_ > first_artificial_) {
    std::vector<double> phase_one(cols_, 0.0);
    for (std::size_t j = first_artificial_; j < cols_; ++j) phase_one[j] = -1.0;
    set_costs(std::move(phase_one));
    optimize();
    double infeasibility = 0.0;
    for (std::size_t j = first_artificial_; j < cols_; ++j) infeasibility += value(j);
    if (infeasibility > kFeasibilityTol * scale) {
      sol.status = LpStatus::Infeasible;
      sol.iteration_count = iterations_;
      sol.pivots = std::move(pivots_);
      return sol;
    }
    // Artificials are pinned at zero for the rest of the solve.
    for (std::size_t j = first_artificial_; j < cols_; ++j) hi_[j] = 0.0;
  }

  std::vector<double> phase_two(cols_, 0.0);
  std::copy(lp_.objective.begin(), lp_.objective.end(), phase_two.begin());
  set_costs(std::move(phase_two));
  const auto outcome = optimize();
  sol.iteration_count = iterations_;
  sol.pivots = std::move(pivots_);
  if (outcome == Outcome::Unbounded) {
    sol.status = LpStatus::Unbounded;
    return sol;
  }

  sol.status = LpStatus::Optimal;
  sol.values.resize(structural_);
  for (std::size_t j = 0; j < structural_; ++j) {
    double v = value(j);
    // clear roundoff that crossed a bound
    if (v < lo_[j] && v > lo_[j] - kFeasibilityTol) v = lo_[j];
    if (v > hi_[j] && v < hi_[j] + kFeasibilityTol) v = hi_[j];
    sol.values[j] = v;
  }
  for (std::size_t j = 0; j < structural_; ++j) {
    if (sol.values[j] < lo_[j] - kFeasibilityTol || sol.values[j] > hi_[j] + kFeasibilityTol) {
      throw Error(ErrorCode::NumericalBreakdown, "solution violates bounds of variable " + std::to_string(j));
    }
    sol.objective_value += lp_.objective[j] * sol.values[j];
  }
  for (std::size_t i = 0; i < rows_; ++i) {
    double activity = 0.0;
    for (std::size_t j = 0; j < structural_; ++j) activity += lp_.rows[i][j] * sol.values[j];
    if (activity > lp_.rhs[i] + kFeasibilityTol * std::max(1.0, std::abs(lp_.rhs[i]))) {
      throw Error(ErrorCode::NumericalBreakdown, "solution violates row " + std::to_string(i));
    }
  }
  sol.is_integral = std::all_of(sol.values.begin(), sol.values.end(), [](double v) {
    return std::abs(v) <= kIntegralityTol || std::abs(v - 1.0) <= kIntegralityTol;
  });
  return sol;
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp) {
  lp.validate();
  BoundedSimplex simplex(lp);
  return simplex.solve();
}

bool integrality_check(const LpSolution& sol) {
  if (sol.status != LpStatus::Optimal) {
    throw Error(ErrorCode::NotOptimal, std::string("integrality check on ") + to_string(sol.status) + " LP");
  }
  return std::all_of(sol.values.begin(), sol.values.end(), [](double v) {
    return std::abs(v) <= kIntegralityTol || std::abs(v - 1.0) <= kIntegralityTol;
  });
}

namespace {

std::string number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_mps(const LinearProgram& lp, std::ostream& out) {
  lp.validate();
  out << "NAME          DESKFAIR\n";
  out << "OBJSENSE\n    MAX\n";
  out << "ROWS\n N  OBJ\n";
  for (std::size_t i = 0; i < lp.rows.size(); ++i) out << " L  R" << i << "\n";
  out << "COLUMNS\n";
  for (std::size_t j = 0; j < lp.num_vars; ++j) {
    if (lp.objective[j] != 0.0) out << "    C" << j << "  OBJ  " << number(lp.objective[j]) << "\n";
    for (std::size_t i = 0; i < lp.rows.size(); ++i) {
      if (lp.rows[i][j] != 0.0) out << "    C" << j << "  R" << i << "  " << number(lp.rows[i][j]) << "\n";
    }
  }
  out << "RHS\n";
  for (std::size_t i = 0; i < lp.rows.size(); ++i) {
    if (lp.rhs[i] != 0.0) out << "    RHS  R" << i << "  " << number(lp.rhs[i]) << "\n";
  }
  out << "BOUNDS\n";
  for (std::size_t j = 0; j < lp.num_vars; ++j) {
    if (lp.lower[j] == lp.upper[j]) {
      out << " FX BND  C" << j << "  " << number(lp.lower[j]) << "\n";
      continue;
    }
    if (lp.lower[j] != 0.0) out << " LO BND  C" << j << "  " << number(lp.lower[j]) << "\n";
    if (std::isfinite(lp.upper[j])) out << " UP BND  C" << j << "  " << number(lp.upper[j]) << "\n";
  }
  out << "ENDATA\n";
}

}  // namespace deskfair
