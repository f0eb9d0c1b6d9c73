#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "potevo/potential.hpp"
#include "potevo/sim.hpp"
#include "potevo/synth_hadamard.hpp"
#include "potevo/synth_poly.hpp"
#include "potevo/walsh.hpp"
#include "test_util.hpp"

using namespace potevo;
using Complex = std::complex<double>;

TEST_CASE("single gate semantics") {
  SUBCASE("phase gate on |1>") {
    const StateVector out = apply_gate(StateVector::basis(1, 1), PhaseGate{0, 0.6});
    CHECK(std::abs(out.amplitudes[1] - std::polar(1.0, 0.6)) < 1e-15);
    const StateVector zero = apply_gate(StateVector::basis(1, 0), PhaseGate{0, 0.6});
    CHECK(zero.amplitudes[0] == Complex(1.0, 0.0));
  }
  SUBCASE("CNOT flips the target when the control is set") {
    const StateVector out = apply_gate(StateVector::basis(2, 1), Cnot{0, 1});  // |01>, lsqb set
    CHECK(std::abs(out.amplitudes[3] - Complex(1.0, 0.0)) < 1e-15);            // -> |11>
    const StateVector idle = apply_gate(StateVector::basis(2, 2), Cnot{0, 1});
    CHECK(std::abs(idle.amplitudes[2] - Complex(1.0, 0.0)) < 1e-15);
  }
  SUBCASE("CCPhase touches only |111>") {
    for (std::uint64_t k = 0; k < 8; ++k) {
      const StateVector out = apply_gate(StateVector::basis(3, k), CCPhase{0, 1, 2, 0.9});
      const Complex expected = k == 7 ? std::polar(1.0, 0.9) : Complex(1.0, 0.0);
      CHECK(std::abs(out.amplitudes[static_cast<Eigen::Index>(k)] - expected) < 1e-15);
    }
  }
  SUBCASE("Rz is diag(e^{-i t/2}, e^{+i t/2})") {
    const StateVector lo = apply_gate(StateVector::basis(1, 0), Rz{0, 0.8});
    const StateVector hi = apply_gate(StateVector::basis(1, 1), Rz{0, 0.8});
    CHECK(std::abs(lo.amplitudes[0] - std::polar(1.0, -0.4)) < 1e-15);
    CHECK(std::abs(hi.amplitudes[1] - std::polar(1.0, 0.4)) < 1e-15);
  }
  SUBCASE("out-of-range qubit throws") {
    StateVector s = StateVector::basis(2, 0);
    CHECK_THROWS_AS(apply_gate_inplace(s, Rz{2, 0.1}), std::out_of_range);
  }
}

TEST_CASE("norm is preserved over long gate sequences") {
  std::mt19937_64 rng(67);
  StateVector state = testutil::random_state(4, rng);
  const Circuit c = testutil::random_circuit(4, 100, rng);
  const StateVector out = evolve(state, c);
  CHECK(std::abs(out.amplitudes.norm() - 1.0) < 1e-12);
}

TEST_CASE("circuit_diagonal") {
  SUBCASE("empty circuit is the identity") {
    const DiagonalUnitary diag = circuit_diagonal(Circuit{2, {}});
    for (int k = 0; k < 4; ++k) CHECK(diag.entries[k] == Complex(1.0, 0.0));
  }
  SUBCASE("lone CNOT is rejected") {
    CHECK_THROWS_AS(circuit_diagonal(Circuit{2, {Cnot{0, 1}}}), NonDiagonalCircuit);
  }
  SUBCASE("NaI exact circuit matches the complex exponential") {
    const PotentialGrid grid = sample_model(RittnerExp{0.0299, 2.163, 5.102}, 4, 0.0, 10.0);
    const DiagonalUnitary diag =
        circuit_diagonal(synthesize_exact(analyze<double>(grid.values), 1.0));
    for (int k = 0; k < 16; ++k) {
      CHECK(std::abs(diag.entries[k] - std::polar(1.0, -grid.values[k])) < 1e-10);
    }
  }
}

TEST_CASE("evolution") {
  std::mt19937_64 rng(71);
  const PotentialGrid grid = testutil::random_grid(3, rng);
  const Circuit c = synthesize_exact(analyze<double>(grid.values), 1.0);

  SUBCASE("uniform superposition keeps flat probabilities") {
    const StateVector out = evolve(StateVector::uniform(3), c);
    for (int k = 0; k < 8; ++k) {
      CHECK(std::norm(out.amplitudes[k]) == doctest::Approx(1.0 / 8.0).epsilon(1e-12));
    }
  }
  SUBCASE("basis state picks up its diagonal phase") {
    const StateVector out = evolve(StateVector::basis(3, 0), c);
    CHECK(std::abs(out.amplitudes[0] - std::polar(1.0, -grid.values[0])) < 1e-10);
  }
  SUBCASE("two half steps equal one full step") {
    const Circuit half = synthesize_exact(analyze<double>(grid.values), 0.5);
    const StateVector twice = evolve(evolve(StateVector::uniform(3), half), half);
    const StateVector once = evolve(StateVector::uniform(3), c);
    CHECK((twice.amplitudes - once.amplitudes).cwiseAbs().maxCoeff() < 1e-10);
  }
  SUBCASE("dimension mismatch throws") {
    CHECK_THROWS_AS(evolve(StateVector::basis(2, 0), c), std::invalid_argument);
  }
}

TEST_CASE("exact fidelity") {
  std::mt19937_64 rng(73);
  const StateVector psi = testutil::random_state(3, rng);
  CHECK(fidelity_exact(psi, psi) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fidelity_exact(StateVector::basis(1, 0), StateVector::basis(1, 1)) == 0.0);

  const PotentialGrid grid = testutil::random_grid(3, rng);
  const Circuit c = synthesize_exact(analyze<double>(grid.values), 1.0);
  const StateVector zero = StateVector::basis(3, 0);
  CHECK(fidelity_exact(zero, evolve(zero, c)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("swap test") {
  std::mt19937_64 rng(79);
  SUBCASE("identical states") {
    const StateVector psi = testutil::random_state(3, rng);
    const SwapTestResult r = swap_test(psi, psi, 10000, 1);
    CHECK(std::abs(r.estimate - 1.0) <= 3.0 * r.std_error + 1e-12);
  }
  SUBCASE("orthogonal states") {
    const SwapTestResult r =
        swap_test(StateVector::basis(2, 0), StateVector::basis(2, 3), 10000, 2);
    // estimator noise floor at fidelity 0: sigma of 2*P0_hat-1 around 0
    CHECK(std::abs(r.estimate - 0.0) <= 3.0 * (2.0 * std::sqrt(0.5 * 0.5 / 10000.0)));
  }
  SUBCASE("constructed fidelity 0.25") {
    StateVector a = StateVector::basis(1, 0);
    StateVector b;
    b.n = 1;
    b.amplitudes.resize(2);
    b.amplitudes << Complex(0.5, 0.0), Complex(std::sqrt(0.75), 0.0);
    CHECK(fidelity_exact(a, b) == doctest::Approx(0.25).epsilon(1e-12));
    const SwapTestResult r = swap_test(a, b, 10000, 3);
    CHECK(std::abs(r.estimate - 0.25) <= 3.0 * r.std_error + 1e-12);
  }
  SUBCASE("standard error scales as 1/sqrt(shots)") {
    StateVector a = StateVector::basis(1, 0);
    StateVector b = StateVector::uniform(1);
    const SwapTestResult small = swap_test(a, b, 100, 4);
    const SwapTestResult large = swap_test(a, b, 10000, 4);
    CHECK(large.std_error < small.std_error);
    CHECK(large.std_error == doctest::Approx(small.std_error / 10.0).epsilon(0.5));
  }
  SUBCASE("seeded determinism") {
    const StateVector psi = testutil::random_state(2, rng);
    const StateVector phi = testutil::random_state(2, rng);
    const SwapTestResult r1 = swap_test(psi, phi, 5000, 42);
    const SwapTestResult r2 = swap_test(psi, phi, 5000, 42);
    CHECK(r1.estimate == r2.estimate);
  }
  SUBCASE("zero shots throws") {
    const StateVector psi = StateVector::basis(1, 0);
    CHECK_THROWS_AS(swap_test(psi, psi, 0, 0), std::invalid_argument);
  }
}

TEST_CASE("shot sampling") {
  SUBCASE("basis state concentrates all shots") {
    const ShotResult r = sample_counts(StateVector::basis(3, 5), 1000, 7);
    REQUIRE(r.counts.size() == 1);
    CHECK(r.counts.at("101") == 1000);
  }
  SUBCASE("uniform single qubit splits evenly") {
    const ShotResult r = sample_counts(StateVector::uniform(1), 10000, 8);
    const double sigma = std::sqrt(10000 * 0.25);
    CHECK(std::abs(static_cast<double>(r.counts.at("0")) - 5000.0) <= 3.0 * sigma);
    CHECK(std::abs(static_cast<double>(r.counts.at("1")) - 5000.0) <= 3.0 * sigma);
  }
  SUBCASE("evolution does not change the sampled distribution") {
    std::mt19937_64 rng(83);
    const PotentialGrid grid = testutil::random_grid(3, rng);
    const Circuit c = synthesize_exact(analyze<double>(grid.values), 1.0);
    const StateVector before = StateVector::uniform(3);
    const StateVector after = evolve(before, c);
    const ShotResult rb = sample_counts(before, 10000, 99);
    const ShotResult ra = sample_counts(after, 10000, 99);
    // identical seeds and identical probabilities: identical draws
    CHECK(rb.counts == ra.counts);
  }
  SUBCASE("determinism and input validation") {
    const StateVector psi = StateVector::uniform(2);
    CHECK(sample_counts(psi, 500, 11).counts == sample_counts(psi, 500, 11).counts);
    CHECK_THROWS_AS(sample_counts(psi, 0, 0), std::invalid_argument);
    StateVector bad = psi;
    bad.amplitudes *= 2.0;
    CHECK_THROWS_AS(sample_counts(bad, 10, 0), std::invalid_argument);
  }
}

TEST_CASE("noisy evolution") {
  std::mt19937_64 rng(89);
  const PotentialGrid grid = testutil::random_grid(4, rng);
  const StateVector zero = StateVector::basis(4, 0);

  SUBCASE("zero noise is exact") {
    const Circuit c = synthesize_exact(analyze<double>(grid.values), 1.0);
    const NoisyFidelity r = evolve_noisy(zero, c, NoiseModel{0, 0, 0, 1}, 50);
    CHECK(r.mean_fidelity == 1.0);
    CHECK(r.std_error == 0.0);
  }
  SUBCASE("fidelity is non-increasing in the noise strength") {
    const Circuit c = synthesize_exact(analyze<double>(grid.values), 1.0);
    double previous = 1.0;
    for (double p : {0.0, 0.01, 0.05}) {
      const NoisyFidelity r = evolve_noisy(zero, c, NoiseModel{p, p, p, 7}, 1000);
      CHECK(r.mean_fidelity <= previous + 3.0 * (r.std_error + 1e-12));
      previous = r.mean_fidelity;
    }
  }
  SUBCASE("shallow poly circuit survives better than the exact circuit") {
    const NoiseModel noise{0.005, 0.02, 0.05, 2024};
    const Circuit exact = synthesize_exact(analyze<double>(grid.values), 1.0);
    const IncidenceSystem sys = build_incidence(4, 2);
    const Circuit poly = synthesize_poly(solve_least_squares(sys, grid, 1.0), sys);
    const NoisyFidelity fe = evolve_noisy(zero, exact, noise, 1000);
    const NoisyFidelity fp = evolve_noisy(zero, poly, noise, 1000);
    CHECK(fp.mean_fidelity > fe.mean_fidelity);
  }
  SUBCASE("seeded determinism and validation") {
    const Circuit c = synthesize_exact(analyze<double>(grid.values), 1.0);
    const NoiseModel noise{0.01, 0.02, 0.0, 5};
    CHECK(evolve_noisy(zero, c, noise, 200).mean_fidelity ==
          evolve_noisy(zero, c, noise, 200).mean_fidelity);
    CHECK_THROWS_AS(evolve_noisy(zero, c, NoiseModel{-0.1, 0, 0, 0}, 10),
                    std::invalid_argument);
    CHECK_THROWS_AS(evolve_noisy(zero, c, NoiseModel{0, 0, 0, 0}, 0), std::invalid_argument);
  }
}
