#pragma once

#include <vector>

namespace tallyruns::reference {

// Serial reference forms of the two run-statistics recurrences. They update
// a triangular array (longest run) and a pair of vectors (run count) in
// place, sweeping indices in decreasing order so that every value read is
// still one generation old. The OpenMP kernels must agree with these within
// 1e-12; the unit tests enforce that.

/// Distribution of the longest run of the tracked flag state in n
/// independent flags with per-flag probability p. Returns w where w[i] is
/// the probability the longest run has length exactly i, i = 0..n.
std::vector<double> longest_run_pmf(int n, double p);

/// Distribution of the number of maximal constant runs. Returns v where
/// v[i] is the probability of exactly i runs, i = 0..n (v[0] = 0).
std::vector<double> run_count_pmf(int n, double p);

/// P(longest run >= s), accumulated from the smallest pmf terms.
double longest_run_tail(int n, double p, int s);

/// P(run count <= m), accumulated from i = 1 upward.
double run_count_cdf(int n, double p, int m);

} // namespace tallyruns::reference
