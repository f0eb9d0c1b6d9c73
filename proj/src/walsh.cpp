#include "potevo/walsh.hpp"

#include <bit>

namespace potevo {

Eigen::VectorXd basis_vector(std::uint64_t mask, int n) {
  if (n < 1 || n > 62) throw std::invalid_argument("qubit count out of range");
  const std::uint64_t len = std::uint64_t{1} << n;
  if (mask >= len) throw std::out_of_range("Z-mask out of range");
  Eigen::VectorXd b(static_cast<Eigen::Index>(len));
  for (std::uint64_t k = 0; k < len; ++k) {
    b[static_cast<Eigen::Index>(k)] = (std::popcount(mask & k) & 1) ? -1.0 : 1.0;
  }
  return b;
}

}  // namespace potevo
