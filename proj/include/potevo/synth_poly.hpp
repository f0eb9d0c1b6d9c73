#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "potevo/circuit.hpp"
#include "potevo/potential.hpp"

namespace potevo {

// 0/1 design matrix relating qubit-subset phase parameters to the phase
// accumulated on each basis state: matrix(k, s) = 1 iff every qubit of
// subsets[s] is set in k. Subsets are ordered by size then lexicographically,
// the empty subset (all-ones column) first.
struct IncidenceSystem {
  int n = 0;
  int max_order = 0;
  std::vector<std::vector<int>> subsets;
  Eigen::MatrixXd matrix;

  Eigen::Index parameter_count() const { return matrix.cols(); }
};

struct FitResult {
  Eigen::VectorXd xi;             // phase parameters, ordered as subsets
  double residual_norm = 0.0;     // ||A xi - b||_2
  Eigen::VectorXd per_point_error;
  double target_scale = 1.0;      // evolution time t baked into b = -t v
};

IncidenceSystem build_incidence(int n, int r);

// Columns restricted to an explicit subset list (must contain the empty
// subset); used for the partial-CCp variants.
IncidenceSystem build_incidence(int n, const std::vector<std::vector<int>>& subsets);

// Minimizes ||A xi - b||_2 with b_k = -t v_k via column-pivoted QR.
FitResult solve_least_squares(const IncidenceSystem& sys, const PotentialGrid& grid, double t);

// GlobalPhase for the empty subset, then Phase/CPhase/CCPhase per subset.
// Subsets of size > 3 are unsupported.
Circuit synthesize_poly(const FitResult& fit, const IncidenceSystem& sys);

struct TriangularSystem {
  IncidenceSystem sys;
  std::vector<Eigen::Index> row_perm;  // sys.matrix.row(i) == original row row_perm[i]
};

// Permutes rows so the leading K x K block is lower-triangular: the row of
// basis index k with ones(k) == S moves to S's column position.
TriangularSystem triangular_reorder(const IncidenceSystem& sys);

// Forward substitution on the leading triangular block: perfectly encodes
// the K lattice points whose one-bits form a parameter subset. Coincides
// with the least-squares solution when r = n.
FitResult solve_triangular(const IncidenceSystem& sys, const PotentialGrid& grid, double t);

// Sum over i = 1..r of C(n,i); the global phase is not counted.
std::uint64_t gate_complexity(int n, int r);

// Sum over i = 0..r of C(n,i): parameters including the global phase.
std::uint64_t parameter_count(int n, int r);

// Partial third-order systems: all subsets of size <= 2 plus `count` size-3
// subsets, picked either as the lexicographic prefix or greedily by largest
// residual reduction against a grid.
std::vector<std::vector<int>> ccp_prefix_subsets(int n, int count);
std::vector<std::vector<int>> ccp_greedy_subsets(int n, int count, const PotentialGrid& grid,
                                                 double t);
IncidenceSystem build_incidence_with_ccp(int n, const std::vector<std::vector<int>>& ccp_subsets);

}  // namespace potevo
