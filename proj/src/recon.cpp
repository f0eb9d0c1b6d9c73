#include "potevo/recon.hpp"

#include <cmath>
#include <stdexcept>

namespace potevo {

namespace {

constexpr double kPi = 3.14159265358979323846;

ErrorSummary summarize(const Eigen::VectorXd& diff) {
  ErrorSummary summary;
  summary.max_abs_error = diff.cwiseAbs().maxCoeff();
  summary.rmse = std::sqrt(diff.squaredNorm() / static_cast<double>(diff.size()));
  return summary;
}

}  // namespace

Reconstruction reconstruct_potential(const DiagonalUnitary& d, double t) {
  if (t == 0.0) throw std::invalid_argument("evolution time must be nonzero");
  const Eigen::Index len = d.entries.size();
  for (Eigen::Index k = 0; k < len; ++k) {
    if (std::abs(std::abs(d.entries[k]) - 1.0) > 1e-6)
      throw std::invalid_argument("diagonal entries must have unit modulus");
  }

  Reconstruction rec;
  rec.t = t;
  rec.values.resize(len);
  rec.wrap_flags.assign(static_cast<std::size_t>(len), false);
  for (Eigen::Index k = 0; k < len; ++k) {
    // std::arg returns (-pi, pi]; -arg/t undoes e^{-i v t} inside the branch.
    rec.values[k] = -std::arg(d.entries[k]) / t;
  }
  const double jump_limit = kPi / std::abs(t);
  for (Eigen::Index k = 0; k + 1 < len; ++k) {
    if (std::abs(rec.values[k + 1] - rec.values[k]) > jump_limit) {
      rec.wrap_flags[static_cast<std::size_t>(k)] = true;
      rec.wrap_flags[static_cast<std::size_t>(k + 1)] = true;
    }
  }
  return rec;
}

ErrorSummary compare(const PotentialGrid& reference, const Eigen::VectorXd& recovered) {
  if (reference.values.size() != recovered.size())
    throw std::invalid_argument("reference and recovered lengths differ");
  return summarize(recovered - reference.values);
}

ErrorSummary compare_up_to_constant(const PotentialGrid& reference,
                                    const Eigen::VectorXd& recovered) {
  if (reference.values.size() != recovered.size())
    throw std::invalid_argument("reference and recovered lengths differ");
  Eigen::VectorXd diff = recovered - reference.values;
  diff.array() -= diff.mean();
  return summarize(diff);
}

}  // namespace potevo
