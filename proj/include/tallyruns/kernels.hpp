#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace tallyruns::kernels {

// OpenMP-parallel and complexity-reduced forms of the run-statistics
// recurrences. All of them are pinned against the serial reference
// implementation (and against exhaustive enumeration for small n) to
// 1e-12 by the test suite.

/// Same recurrence as reference::longest_run_pmf, double-buffered with the
/// row update parallelized. O(n^2) memory, O(n^3) work.
std::vector<double> longest_run_pmf(int n, double p);

/// Same recurrence as reference::run_count_pmf, double-buffered.
std::vector<double> run_count_pmf(int n, double p);

/// P(longest run >= s) via an absorbing-state walk over the trailing run
/// length (capped at s). O(n*s) work, O(s) memory; the fast path for
/// simulation-scale workloads.
double longest_run_tail_linear(int n, double p, int s);

/// P(run count <= m) with the run-count recurrence truncated at m. The
/// recurrence never moves probability toward smaller counts, so dropping
/// states above m is exact for the lower tail. O(n*m).
double run_count_cdf_truncated(int n, double p, int m);

/// Tail sum over a longest-run pmf, smallest terms first.
double tail_from_pmf(std::span<const double> w, int s);

/// Lower-tail sum over a run-count pmf, from i = 1 upward.
double cdf_from_pmf(std::span<const double> v, int m);

} // namespace tallyruns::kernels
