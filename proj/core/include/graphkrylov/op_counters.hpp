#ifndef GRAPHKRYLOV_OP_COUNTERS_HPP
#define GRAPHKRYLOV_OP_COUNTERS_HPP

#include <cstdint>

namespace graphkrylov {

/// Tallies of length-n vector operations, the complexity currency of the
/// method comparison. One MV is one product L * (length-n column); DOTs and
/// AXPYs likewise count length-n inner products and scaled additions.
/// small_eig_* track the dense phi(H_m) work on the projected matrices.
struct OpCounters {
    std::uint64_t mv_count = 0;
    std::uint64_t dot_count = 0;
    std::uint64_t axpy_count = 0;
    std::uint64_t small_eig_count = 0;
    std::uint64_t small_eig_max_dim = 0;

    void reset() { *this = OpCounters{}; }
};

} // namespace graphkrylov

#endif
