#pragma once

#include <cstdint>
#include <string>

#include "potevo/circuit.hpp"
#include "potevo/walsh.hpp"

namespace potevo {

enum class MaskOrdering { Natural, GrayCode };

// Tensor string for a Z-mask, msqb leftmost, e.g. mask 3, n=3 -> "IZZ".
std::string mask_to_string(std::uint64_t mask, int n);

// Exact circuit for e^{-iVt} from the Walsh spectrum of V: per mask j != 0 a
// CNOT ladder folding the masked qubits' parity onto the highest Z qubit,
// Rz(2 c_j t) there, then the mirror ladder; mask 0 becomes GlobalPhase(-c_0 t).
Circuit synthesize_exact(const WalshSpectrum& spectrum, double t,
                         MaskOrdering ordering = MaskOrdering::Natural);

// Sum over r = 2..n of C(n,r) * 2(r-1): CNOTs in the natural-order circuit.
std::uint64_t cnot_count_bound(int n);

}  // namespace potevo
