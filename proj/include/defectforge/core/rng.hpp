#pragma once

#include <array>
#include <cstdint>

namespace defectforge {

// Deterministic RNG used everywhere a stochastic choice is made. Two parts:
//
//  * splitmix64 — seed expansion and stream splitting. Child stream k of a
//    master seed uses the (k+1)-th output of splitmix64(master), so batch
//    entries get independent, reproducible streams (one child per index).
//  * xoshiro256++ — the per-stream generator (Blackman & Vigna 2019).
//
// Distributions are hand-rolled on purpose: std::uniform_* distributions are
// implementation-defined, which would break cross-platform byte-for-byte
// reproducibility of generated datasets.

std::uint64_t splitmix64_next(std::uint64_t& state);

/// Seed of the k-th child stream of `master` (k = 0, 1, ...).
std::uint64_t child_seed(std::uint64_t master, std::uint64_t index);

class Rng {
public:
    explicit Rng(std::uint64_t seed);

    /// Raw 64-bit output (xoshiro256++).
    std::uint64_t next();

    /// Uniform double in [0, 1): (next() >> 11) * 2^-53.
    double uniform();

    /// Uniform double in [lo, hi): lo + (hi - lo) * uniform().
    double uniform(double lo, double hi);

    /// Uniform integer in [0, n); unbiased (Lemire multiply-shift with
    /// rejection). n must be >= 1.
    std::uint64_t below(std::uint64_t n);

    /// Rng seeded from the k-th child stream of this stream's seed.
    Rng child(std::uint64_t index) const { return Rng(child_seed(seed_, index)); }

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    std::array<std::uint64_t, 4> s_;
};

} // namespace defectforge
