#pragma once

#include <cstdint>
#include <stdexcept>

#include <Eigen/Dense>

namespace potevo {

// Coefficients of a length-2^n function in the +/-1 Walsh-Hadamard basis,
// indexed by Z-mask (bit b of the mask set <=> Pauli-Z on qubit b, qubit 0
// = lsqb). Mean normalization: coeffs[j] = (1/2^n) sum_k (-1)^popcount(j&k) f_k,
// so coeffs[j] * t is directly a rotation angle.
template <typename Scalar>
struct WalshSpectrumT {
  int n = 0;
  Eigen::Vector<Scalar, Eigen::Dynamic> coeffs;
};

using WalshSpectrum = WalshSpectrumT<double>;

namespace detail {

inline int log2_exact(Eigen::Index len) {
  if (len < 1 || (len & (len - 1)) != 0)
    throw std::invalid_argument("vector length must be a power of two");
  int n = 0;
  while ((Eigen::Index{1} << n) < len) ++n;
  return n;
}

}  // namespace detail

// Unnormalized in-place butterfly. Applying it twice yields 2^n * f.
template <typename Scalar>
void fwht_inplace(Eigen::Vector<Scalar, Eigen::Dynamic>& data) {
  const Eigen::Index len = data.size();
  detail::log2_exact(len);
  for (Eigen::Index half = 1; half < len; half <<= 1) {
    for (Eigen::Index block = 0; block < len; block += half << 1) {
      for (Eigen::Index i = block; i < block + half; ++i) {
        const Scalar a = data[i];
        const Scalar b = data[i + half];
        data[i] = a + b;
        data[i + half] = a - b;
      }
    }
  }
}

// Column j of the unnormalized H^{(x)n} matrix: entry k is (-1)^popcount(j&k).
Eigen::VectorXd basis_vector(std::uint64_t mask, int n);

template <typename Scalar>
WalshSpectrumT<Scalar> analyze(const Eigen::Vector<Scalar, Eigen::Dynamic>& f) {
  WalshSpectrumT<Scalar> spectrum;
  spectrum.n = detail::log2_exact(f.size());
  if (!f.allFinite()) throw std::domain_error("input vector has non-finite entries");
  spectrum.coeffs = f;
  fwht_inplace(spectrum.coeffs);
  spectrum.coeffs /= static_cast<double>(f.size());
  return spectrum;
}

template <typename Scalar>
Eigen::Vector<Scalar, Eigen::Dynamic> synthesize(const WalshSpectrumT<Scalar>& spectrum) {
  Eigen::Vector<Scalar, Eigen::Dynamic> f = spectrum.coeffs;
  fwht_inplace(f);
  return f;
}

}  // namespace potevo
