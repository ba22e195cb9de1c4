#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace spe2d {

/// Counter-based RNG (Philox4x32-10).  Every draw is a pure function of the
/// 64-bit seed and a 4-lane counter, so ensembles are bitwise reproducible
/// under any parallel schedule.  Lane convention used across the project:
/// a = trajectory/trial index, b = step index, c = mode/channel, d = salt
/// distinguishing the purpose of the stream (see rng_salt below).
namespace philox {

inline void round_once(uint32_t& c0, uint32_t& c1, uint32_t& c2, uint32_t& c3,
                       uint32_t k0, uint32_t k1) {
    const uint64_t p0 = 0xD2511F53ULL * c0;
    const uint64_t p1 = 0xCD9E8D57ULL * c2;
    const uint32_t hi0 = static_cast<uint32_t>(p0 >> 32), lo0 = static_cast<uint32_t>(p0);
    const uint32_t hi1 = static_cast<uint32_t>(p1 >> 32), lo1 = static_cast<uint32_t>(p1);
    c0 = hi1 ^ c1 ^ k0;
    c1 = lo1;
    c2 = hi0 ^ c3 ^ k1;
    c3 = lo0;
}

struct Block {
    uint32_t x[4];
};

inline Block block(uint64_t seed, uint32_t a, uint32_t b, uint32_t c, uint32_t d) {
    uint32_t c0 = a, c1 = b, c2 = c, c3 = d;
    uint32_t k0 = static_cast<uint32_t>(seed);
    uint32_t k1 = static_cast<uint32_t>(seed >> 32);
    for (int r = 0; r < 10; ++r) {
        round_once(c0, c1, c2, c3, k0, k1);
        k0 += 0x9E3779B9u;
        k1 += 0xBB67AE85u;
    }
    return Block{{c0, c1, c2, c3}};
}

inline double to_unit(uint32_t hi, uint32_t lo) {
    // (0, 1]: 53 mantissa bits, never zero so it is safe under log().
    uint64_t bits = (static_cast<uint64_t>(hi) << 32) | lo;
    return (static_cast<double>(bits >> 11) + 1.0) * 0x1.0p-53;
}

} // namespace philox

namespace rng_salt {
constexpr uint32_t increments = 0; ///< Wiener increments in the integrator
constexpr uint32_t initial = 1;    ///< random initial data
constexpr uint32_t sampler = 2;    ///< smooth-field coefficient draws
constexpr uint32_t bench = 3;      ///< stand-alone stochastic benches
} // namespace rng_salt

inline std::pair<double, double> normal_pair(uint64_t seed, uint32_t a, uint32_t b,
                                             uint32_t c, uint32_t d) {
    philox::Block blk = philox::block(seed, a, b, c, d);
    double u1 = philox::to_unit(blk.x[0], blk.x[1]);
    double u2 = philox::to_unit(blk.x[2], blk.x[3]);
    double r = std::sqrt(-2.0 * std::log(u1));
    double t = 2.0 * M_PI * u2;
    return {r * std::cos(t), r * std::sin(t)};
}

inline double normal_draw(uint64_t seed, uint32_t a, uint32_t b, uint32_t c, uint32_t d) {
    return normal_pair(seed, a, b, c, d).first;
}

inline double uniform_draw(uint64_t seed, uint32_t a, uint32_t b, uint32_t c, uint32_t d) {
    philox::Block blk = philox::block(seed, a, b, c, d);
    return philox::to_unit(blk.x[0], blk.x[1]);
}

/// Deterministic Gaussian stream at a fixed (trajectory, step) position.
/// Same (seed, stream-id) always yields the same draws, independent of
/// thread count or evaluation order.
struct RngStream {
    uint64_t seed = 0;
    uint32_t trajectory = 0;
    uint32_t step = 0;

    double normal(uint32_t mode, uint32_t salt = rng_salt::increments) const {
        return normal_draw(seed, trajectory, step, mode, salt);
    }
    double uniform(uint32_t mode, uint32_t salt) const {
        return uniform_draw(seed, trajectory, step, mode, salt);
    }
};

/// K independent Brownian increments over a step of length dt, fully
/// determined by (seed, trajectory, step).
inline std::vector<double> sample_increments(const RngStream& rng, int K, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("sample_increments: dt must be > 0");
    std::vector<double> out(static_cast<std::size_t>(K));
    double s = std::sqrt(dt);
    for (int k = 0; k < K; ++k) out[static_cast<std::size_t>(k)] = s * rng.normal(static_cast<uint32_t>(k));
    return out;
}

} // namespace spe2d
