#pragma once

/**
 * @file report.hpp
 * @brief Batch matrix over the catalog: (instance, delta) solves fanned out
 *        over a jobs cap, assembled into a deterministic CSV.
 */

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "superder/deltader.hpp"

namespace superder {

/// The catalog instances exercised by the batch report (and the acceptance
/// suite): the small-rank members of every implemented family.
std::vector<std::string> report_families();

/// The delta values of the batch report: the critical pair {1/2, 1} plus the
/// off-critical controls {0, -1, -1/2, 2, 3/7}.
std::vector<Rational> report_deltas();

/// Runs tasks 0..count-1 on up to `jobs` threads; results must be written
/// into per-index slots by the callback.
void parallel_for(int count, int jobs, const std::function<void(int)>& fn);

/// CSV with columns family,dims,delta,nullity,scalar_line,grading_ok; rows
/// sorted by (family, delta); independent of the jobs setting. Instances with
/// dim > max_dim are skipped (max_dim <= 0 means no cap).
std::string report_csv(int jobs, int max_dim, std::uint64_t seed);

}  // namespace superder
