#pragma once

#include <string>
#include <vector>

#include "zlab/function.hpp"
#include "zlab/kernels.hpp"
#include "zlab/limit.hpp"
#include "zlab/recipe.hpp"

namespace zlab {

/// Square lattice on [-radius, radius]^2 clipped to the closed disk.
struct GridSpec {
  double radius = 2.0;
  int points_per_side = 21;  // odd, >= 5, so zeta = 0 is a node
  double pole_guard = 0.05;
};

/// Throws Error(invalid_spec) for a malformed grid.
std::vector<cplx> grid_points(const GridSpec& grid, cplx center = {});

std::vector<long long> default_schedule();  // 10, 100, ..., 10^6

enum class VerifyMode { full, subsequence };

struct ConvergenceReport {
  std::vector<long long> schedule;
  std::vector<double> sup_error;
  std::vector<double> phase_dispersion;  // arg f_{n,alpha}(0) - arg g(0), in (-pi, pi]
  std::vector<bool> selected;
  VerifyMode mode = VerifyMode::full;
  double tolerance = 0.0;
  bool pass = false;
  std::string reason;    // empty on pass
  LimitFunction limit;   // g after any phase re-pinning
};

/// Sup over the grid of chordal(f_{n,alpha}(zeta), g(zeta)) for each n.
/// In subsequence mode the phase residuals are clustered in a 0.3 rad
/// window; the largest cluster (at least 25% of the schedule) is kept and g
/// is re-pinned to its circular mean phase. Pass requires the error to
/// decrease over the last three kept entries and the final entry to be below
/// tolerance; an exact recipe must stay below tolerance throughout.
ConvergenceReport verify_convergence(const Recipe& recipe, const LimitFunction& g, const GridSpec& grid,
                                     const std::vector<long long>& schedule, double tolerance,
                                     VerifyMode mode = VerifyMode::full,
                                     kernels::Isa isa = kernels::active_isa());

/// As above, first checking that f and alpha are the recipe's own.
ConvergenceReport verify_convergence(const Function& f, double alpha, const Recipe& recipe,
                                     const LimitFunction& g, const GridSpec& grid,
                                     const std::vector<long long>& schedule, double tolerance,
                                     VerifyMode mode = VerifyMode::full,
                                     kernels::Isa isa = kernels::active_isa());

/// The verdict rule alone, applied to a sequence of errors.
bool decreasing_tail(const std::vector<double>& errors, std::size_t count = 3);

/// Coefficient relations of the rescaled exponent: row j (j = k..1) is
/// |a_k binom(k, j) (k_n rho_n)^j (k_n z_n)^{k-j} - limit_j| with limit 0 for
/// j >= 2 and A1 of the target for j = 1 (0 when the target is not
/// exponential); the A0 row is Re[P(w) + Log L + (L1 - L2) ln|w|] - alpha ln rho - Re A0.
struct RelationTable {
  int k = 0;
  std::vector<long long> schedule;
  std::vector<std::vector<double>> rows;  // rows[i] is j = k - i
  std::vector<double> a0_row;
  std::vector<cplx> a1_value;             // a_k k (k_n rho_n)(k_n z_n)^{k-1}
};

RelationTable check_relations(const Recipe& recipe, const std::vector<long long>& schedule);

/// n * f^#(n z) over a lattice of the disk |z - center| <= radius.
struct MartyField {
  std::vector<cplx> points;
  std::vector<long long> schedule;
  std::vector<std::vector<double>> values;  // values[n index][point index]
  std::vector<double> max_value;
};

MartyField marty_scan(const Function& f, cplx center, double radius, int points_per_side,
                      const std::vector<long long>& schedule, kernels::Isa isa = kernels::active_isa());

}  // namespace zlab
