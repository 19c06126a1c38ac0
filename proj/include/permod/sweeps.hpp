#pragma once

#include <cstdint>
#include <string>

#include "permod/anyon_model.hpp"

namespace permod {

/// Outcome of sweeping a check over simple-label assignments.
struct SweepResult {
    double max_residual = 0.0;
    long long instances = 0;
    std::string worst;
    double min_singular = std::numeric_limits<double>::infinity();
};

/// Mixed pentagon over assignments of the 3n+1 slots. Exhaustive sweeps
/// enumerate every assignment; sampled sweeps draw `samples` seeded ones.
SweepResult pentagon_sweep(const AnyonModel& model, int n, bool exhaustive, int samples,
                           std::uint64_t seed);

/// Naturality of Gamma over assignments of the 2n+1 slots; also tracks the
/// smallest singular value of Gamma across the sweep.
SweepResult gamma_sweep(const AnyonModel& model, int n, bool exhaustive, int samples,
                        std::uint64_t seed);

/// Induction step over assignments of the 2n+1 slots (n >= 3).
SweepResult induction_sweep(const AnyonModel& model, int n, bool exhaustive, int samples,
                            std::uint64_t seed);

/// Number of assignments an exhaustive sweep would enumerate, or -1 if it
/// overflows the cap.
long long exhaustive_size(int n_labels, int slots, long long cap = 2000000);

} // namespace permod
