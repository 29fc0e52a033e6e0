#pragma once

#include <cstddef>
#include <functional>

#include "horn/horn_polytopes.hpp"

namespace horn {

enum class Execution { serial, parallel };

/// Bounds for the exhaustive sweeps. `p` is half the length of sigma;
/// `max_part` bounds sigma_1 (or the parts of lambda, mu for the CL and
/// FFLP sweeps, where `p` is their length). A positive time budget stops
/// scheduling new items once exceeded and marks the report incomplete.
struct SweepConfig {
    int p = 2;
    int max_part = 6;
    double time_budget_seconds = 0.0;
    Execution execution = Execution::parallel;
};

/// Runs item(0..count-1) and concatenates the reports in index order. The
/// parallel path distributes items over OpenMP threads; the result does not
/// depend on the schedule.
Report run_indexed(std::size_t count, const std::function<Report(std::size_t)>& item, const SweepConfig& config);

/// All sigma of declared length 2p with parts <= max_part, lexicographic.
std::vector<Partition> sweep_sigmas(int p, int max_part);

/// c^nu_{sigma- sigma+} <= c^{nu(2)}_{sigma sigma} checked through the
/// duplication map. For each (sigma, nu) with |nu| = |sigma| and at most 2p
/// parts: enumerates the Yamanouchi tableaux of shape tau(sigma+, sigma-) and weight nu, checks their number equals
/// c^nu_{sigma- sigma+}, duplicates each one (valid shape and weight,
/// Yamanouchi, undo round trip, pairwise distinct images) and compares
/// against c^{nu^(2)}_{sigma sigma}.
Report sweep_prop2(const SweepConfig& config);
Report check_prop2(const Partition& sigma, const Partition& nu);

Report sweep_p1_equals_p2(const SweepConfig& config);
Report sweep_implication(const SweepConfig& config);
Report sweep_projection(const SweepConfig& config);
Report sweep_lpp(const SweepConfig& config);
/// lambda, mu of length p with parts <= max_part; every nu of the right
/// weight with at most 2p parts.
Report sweep_fflp(const SweepConfig& config);
/// cl_coefficient == lr_coefficient for lambda, mu of equal length <= p with
/// parts <= max_part and every partition nu of |lambda| + |mu|.
Report sweep_cl_vs_lr(const SweepConfig& config);

}  // namespace horn
