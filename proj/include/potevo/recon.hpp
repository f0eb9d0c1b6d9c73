#pragma once

#include <vector>

#include <Eigen/Dense>

#include "potevo/potential.hpp"
#include "potevo/sim.hpp"

namespace potevo {

// Potential recovered from a diagonal unitary's phases. Recovery is faithful
// only while |v_k t| stays inside the principal branch; wrap_flags mark the
// endpoints of any adjacent jump larger than pi/t. No unwrapping is applied.
struct Reconstruction {
  Eigen::VectorXd values;
  double t = 1.0;
  std::vector<bool> wrap_flags;
};

struct ErrorSummary {
  double max_abs_error = 0.0;
  double rmse = 0.0;
};

// v_k = -arg(entries[k]) / t with arg in (-pi, pi].
Reconstruction reconstruct_potential(const DiagonalUnitary& d, double t);

ErrorSummary compare(const PotentialGrid& reference, const Eigen::VectorXd& recovered);

// Comparison after removing the mean offset of both vectors; for diagonals
// that come without global-phase metadata.
ErrorSummary compare_up_to_constant(const PotentialGrid& reference,
                                    const Eigen::VectorXd& recovered);

}  // namespace potevo
