#ifndef GRAPHKRYLOV_RNG_HPP
#define GRAPHKRYLOV_RNG_HPP

#include <cstdint>

namespace graphkrylov {

/// SplitMix64 generator (Steele, Lea, Flood 2014).
///
/// Used for every seeded choice in the library (point clouds, node samples,
/// random labels) so that results reproduce bit-for-bit across platforms and
/// standard libraries. Mapping rules are part of the contract:
///   next_double():  upper 53 bits scaled by 2^-53, uniform in [0,1)
///   next_index(n):  next_u64() % n
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    std::uint64_t next_index(std::uint64_t bound) {
        return next_u64() % bound;
    }

private:
    std::uint64_t state_;
};

} // namespace graphkrylov

#endif
