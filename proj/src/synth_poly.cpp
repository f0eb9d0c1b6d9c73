#include "potevo/synth_poly.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>

namespace potevo {

namespace {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t result = 1;
  for (int i = 0; i < k; ++i) {
    result = result * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
  }
  return result;
}

void append_subsets_of_size(std::vector<std::vector<int>>& out, int n, int size) {
  std::vector<int> subset(static_cast<std::size_t>(size));
  // Lexicographic enumeration of sorted index tuples.
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == size) {
      out.push_back(subset);
      return;
    }
    for (int q = start; q < n; ++q) {
      subset[static_cast<std::size_t>(depth)] = q;
      rec(q + 1, depth + 1);
    }
  };
  rec(0, 0);
}

Eigen::MatrixXd incidence_matrix(int n, const std::vector<std::vector<int>>& subsets) {
  const Eigen::Index rows = Eigen::Index{1} << n;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(rows, static_cast<Eigen::Index>(subsets.size()));
  for (Eigen::Index k = 0; k < rows; ++k) {
    for (std::size_t s = 0; s < subsets.size(); ++s) {
      bool all_set = true;
      for (int q : subsets[s]) {
        if (((static_cast<std::uint64_t>(k) >> q) & 1u) == 0) {
          all_set = false;
          break;
        }
      }
      if (all_set) a(k, static_cast<Eigen::Index>(s)) = 1.0;
    }
  }
  return a;
}

std::uint64_t subset_mask(const std::vector<int>& subset) {
  std::uint64_t mask = 0;
  for (int q : subset) mask |= std::uint64_t{1} << q;
  return mask;
}

FitResult make_fit(const IncidenceSystem& sys, const Eigen::VectorXd& b, double t,
                   Eigen::VectorXd xi) {
  FitResult fit;
  fit.xi = std::move(xi);
  const Eigen::VectorXd residual = sys.matrix * fit.xi - b;
  fit.residual_norm = residual.norm();
  fit.per_point_error = residual.cwiseAbs();
  fit.target_scale = t;
  return fit;
}

}  // namespace

IncidenceSystem build_incidence(int n, int r) {
  if (n < 1) throw std::invalid_argument("qubit count must be >= 1");
  if (r < 0 || r > n) throw std::invalid_argument("order must satisfy 0 <= r <= n");
  std::vector<std::vector<int>> subsets;
  for (int size = 0; size <= r; ++size) append_subsets_of_size(subsets, n, size);

  IncidenceSystem sys;
  sys.n = n;
  sys.max_order = r;
  sys.subsets = std::move(subsets);
  sys.matrix = incidence_matrix(n, sys.subsets);
  return sys;
}

IncidenceSystem build_incidence(int n, const std::vector<std::vector<int>>& subsets) {
  if (n < 1) throw std::invalid_argument("qubit count must be >= 1");
  std::set<std::uint64_t> seen;
  bool has_empty = false;
  int max_order = 0;
  for (const auto& subset : subsets) {
    for (int q : subset) {
      if (q < 0 || q >= n) throw std::invalid_argument("subset qubit index out of range");
    }
    if (!seen.insert(subset_mask(subset)).second)
      throw std::invalid_argument("duplicate subset in explicit list");
    if (subset.empty()) has_empty = true;
    max_order = std::max(max_order, static_cast<int>(subset.size()));
  }
  if (!has_empty) throw std::invalid_argument("explicit subset list must include the empty subset");

  IncidenceSystem sys;
  sys.n = n;
  sys.max_order = max_order;
  sys.subsets = subsets;
  for (auto& subset : sys.subsets) std::sort(subset.begin(), subset.end());
  sys.matrix = incidence_matrix(n, sys.subsets);
  return sys;
}

FitResult solve_least_squares(const IncidenceSystem& sys, const PotentialGrid& grid, double t) {
  if (grid.values.size() != sys.matrix.rows())
    throw std::invalid_argument("grid length does not match incidence system");
  const Eigen::VectorXd b = -t * grid.values;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(sys.matrix);
  if (qr.rank() < sys.matrix.cols())
    throw std::runtime_error("incidence matrix is rank deficient");
  return make_fit(sys, b, t, qr.solve(b));
}

Circuit synthesize_poly(const FitResult& fit, const IncidenceSystem& sys) {
  if (fit.xi.size() != sys.parameter_count())
    throw std::invalid_argument("fit parameter count does not match incidence system");
  Circuit circuit;
  circuit.n = sys.n;
  for (std::size_t s = 0; s < sys.subsets.size(); ++s) {
    const auto& subset = sys.subsets[s];
    const double theta = fit.xi[static_cast<Eigen::Index>(s)];
    switch (subset.size()) {
      case 0:
        circuit.gates.push_back(GlobalPhase{theta});
        break;
      case 1:
        circuit.gates.push_back(PhaseGate{subset[0], theta});
        break;
      case 2:
        circuit.gates.push_back(CPhase{subset[0], subset[1], theta});
        break;
      case 3:
        circuit.gates.push_back(CCPhase{subset[0], subset[1], subset[2], theta});
        break;
      default:
        throw std::invalid_argument("subsets of size > 3 have no native phase gate");
    }
  }
  return circuit;
}

TriangularSystem triangular_reorder(const IncidenceSystem& sys) {
  const Eigen::Index rows = sys.matrix.rows();
  std::vector<Eigen::Index> perm;
  perm.reserve(static_cast<std::size_t>(rows));
  std::vector<bool> placed(static_cast<std::size_t>(rows), false);
  for (const auto& subset : sys.subsets) {
    const auto k = static_cast<Eigen::Index>(subset_mask(subset));
    perm.push_back(k);
    placed[static_cast<std::size_t>(k)] = true;
  }
  for (Eigen::Index k = 0; k < rows; ++k) {
    if (!placed[static_cast<std::size_t>(k)]) perm.push_back(k);
  }

  TriangularSystem tri;
  tri.sys = sys;
  tri.row_perm = perm;
  for (Eigen::Index i = 0; i < rows; ++i) {
    tri.sys.matrix.row(i) = sys.matrix.row(perm[static_cast<std::size_t>(i)]);
  }
  return tri;
}

FitResult solve_triangular(const IncidenceSystem& sys, const PotentialGrid& grid, double t) {
  if (grid.values.size() != sys.matrix.rows())
    throw std::invalid_argument("grid length does not match incidence system");
  const TriangularSystem tri = triangular_reorder(sys);
  const Eigen::VectorXd b = -t * grid.values;
  const Eigen::Index k = sys.parameter_count();

  Eigen::VectorXd b_perm(k);
  for (Eigen::Index i = 0; i < k; ++i) b_perm[i] = b[tri.row_perm[static_cast<std::size_t>(i)]];
  const Eigen::VectorXd xi = tri.sys.matrix.topRows(k)
                                 .triangularView<Eigen::Lower>()
                                 .solve(b_perm);
  return make_fit(sys, b, t, xi);
}

std::uint64_t gate_complexity(int n, int r) {
  if (r < 0 || r > n) throw std::invalid_argument("order must satisfy 0 <= r <= n");
  std::uint64_t total = 0;
  for (int i = 1; i <= r; ++i) total += binomial(n, i);
  return total;
}

std::uint64_t parameter_count(int n, int r) {
  if (r < 0 || r > n) throw std::invalid_argument("order must satisfy 0 <= r <= n");
  return gate_complexity(n, r) + 1;
}

std::vector<std::vector<int>> ccp_prefix_subsets(int n, int count) {
  std::vector<std::vector<int>> all3;
  append_subsets_of_size(all3, n, 3);
  if (count < 0 || static_cast<std::size_t>(count) > all3.size())
    throw std::invalid_argument("CCp subset count out of range");
  all3.resize(static_cast<std::size_t>(count));
  return all3;
}

std::vector<std::vector<int>> ccp_greedy_subsets(int n, int count, const PotentialGrid& grid,
                                                 double t) {
  std::vector<std::vector<int>> all3;
  append_subsets_of_size(all3, n, 3);
  if (count < 0 || static_cast<std::size_t>(count) > all3.size())
    throw std::invalid_argument("CCp subset count out of range");

  std::vector<std::vector<int>> chosen;
  std::vector<bool> used(all3.size(), false);
  for (int round = 0; round < count; ++round) {
    double best_residual = std::numeric_limits<double>::infinity();
    std::size_t best = all3.size();
    for (std::size_t i = 0; i < all3.size(); ++i) {
      if (used[i]) continue;
      std::vector<std::vector<int>> trial = chosen;
      trial.push_back(all3[i]);
      const FitResult fit =
          solve_least_squares(build_incidence_with_ccp(n, trial), grid, t);
      if (fit.residual_norm < best_residual) {
        best_residual = fit.residual_norm;
        best = i;
      }
    }
    used[best] = true;
    chosen.push_back(all3[best]);
  }
  return chosen;
}

IncidenceSystem build_incidence_with_ccp(int n, const std::vector<std::vector<int>>& ccp_subsets) {
  std::vector<std::vector<int>> subsets;
  for (int size = 0; size <= 2 && size <= n; ++size) append_subsets_of_size(subsets, n, size);
  for (const auto& subset : ccp_subsets) {
    if (subset.size() != 3) throw std::invalid_argument("CCp subsets must have size 3");
    subsets.push_back(subset);
  }
  return build_incidence(n, subsets);
}

}  // namespace potevo
