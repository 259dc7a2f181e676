#ifndef GSVR_STATS_HPP
#define GSVR_STATS_HPP

#include <atomic>
#include <cstdint>

namespace gsvr {

// Process-wide telemetry. The decode path must leave the training counters
// untouched; tests assert this.
struct Counters {
    std::atomic<std::int64_t> degenerate_skipped{0}; // Gaussians dropped for det(Sigma) < floor
    std::atomic<std::int64_t> backward_passes{0};    // rasterizer/deformation backward invocations
    std::atomic<std::int64_t> optimizer_steps{0};    // Adam updates applied
};

Counters& counters();

} // namespace gsvr

#endif // GSVR_STATS_HPP
