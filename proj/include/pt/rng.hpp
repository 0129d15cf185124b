#pragma once

#include <cstdint>
#include <random>

#include "pt/pose.hpp"
#include "pt/vec3.hpp"

namespace pt {

// splitmix64 finalizer, used to derive independent child seeds.
inline uint64_t mix_seed(uint64_t seed, uint64_t tag) {
    uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (tag + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Deterministic RNG. All distribution mappings are implemented here (not via
// std:: distributions) so that a given seed produces the same stream on every
// platform and standard library.
class Rng {
public:
    explicit Rng(uint64_t seed) : seed_(seed), gen_(seed) {}

    uint64_t seed() const { return seed_; }

    Rng child(uint64_t tag) const { return Rng(mix_seed(seed_, tag)); }

    uint64_t next_u64() { return gen_(); }

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n) by rejection, bias-free.
    uint64_t uniform_int(uint64_t n) {
        if (n == 0) return 0;
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t v;
        do { v = gen_(); } while (v >= limit);
        return v % n;
    }

    // Standard normal via Box-Muller. Consumes exactly two engine draws per
    // call; no cached spare, so the stream position is easy to reason about.
    double gaussian() {
        double u1 = uniform();
        double u2 = uniform();
        // avoid log(0)
        u1 = u1 > 0.0 ? u1 : 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.14159265358979323846 * u2);
    }

    double gaussian(double mean, double sd) { return mean + sd * gaussian(); }

    // Uniformly distributed rotation (random unit quaternion).
    Mat3 rotation() {
        double a = gaussian(), b = gaussian(), c = gaussian(), d = gaussian();
        return quat_to_mat(a, b, c, d);
    }

    // Uniform direction on the unit sphere.
    Vec3 unit_vector() {
        Vec3 v{gaussian(), gaussian(), gaussian()};
        double n = norm(v);
        return n > 0.0 ? v / n : Vec3{0, 0, 1};
    }

private:
    uint64_t seed_;
    std::mt19937_64 gen_;
};

}  // namespace pt
