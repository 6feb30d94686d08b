#pragma once

#include <cstdint>
#include <random>

#include "superko/bordism.hpp"
#include "superko/fieldtheory.hpp"

namespace superko {

// Seeded source of small exact values. Uses plain modular reduction of the
// engine output so that streams are identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    long uniform(long lo, long hi) { return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
    bool coin() { return (eng_() & 1U) != 0; }
    double real(double lo, double hi) { return lo + (hi - lo) * double(eng_() >> 11) * 0x1.0p-53; }
    // num / den with num in [lo, hi] and den in [1, max_den]
    Rational rational(long lo, long hi, long max_den = 4);
    GaussianRational gaussian(long bound = 2, long max_den = 2);
    std::mt19937_64& engine() { return eng_; }
    std::uint64_t next() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

// Sum of a few random monomials of the given parity (0 even, 1 odd) with no
// body term; real coefficients only when real is set.
CG random_nilpotent(Rng& rng, unsigned q, int parity, bool real = false);
CG random_odd(Rng& rng, unsigned q, bool real = false);
// Even element with positive rational body.
CG random_positive_even(Rng& rng, unsigned q, bool real = false);
CCircle random_circle(Rng& rng, unsigned q, bool real = false);

CliffordWord random_clifford_word(Rng& rng, int n);
SebEndo random_seb(Rng& rng, int n, unsigned q);
SabEndo random_sab(Rng& rng, int n, unsigned q);
SuperMap random_super_map(Rng& rng, MapKind kind, unsigned q);

// Random Q on a sum of irreducible graded Cl_{-n}-modules of total
// dimension at most max_dim, supported on a random union of summands.
SeftGenerator random_seft_generator(Rng& rng, int n, std::size_t max_dim);
AftGenerator random_aft_generator(Rng& rng, int n, std::size_t max_dim, int max_k = 2);

XySample random_xy_sample(Rng& rng, unsigned q);
// Parameters with real coefficients, the setting of the adjoint identity.
AftSample random_aft_sample(Rng& rng, unsigned q);

}  // namespace superko
