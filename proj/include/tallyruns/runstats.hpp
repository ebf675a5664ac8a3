#pragma once

#include <vector>

namespace tallyruns {

/// IID Bernoulli model for one flag state of a sequence. p is always the
/// plug-in estimate r/n of the tracked state when fitted from data, and
/// q = 1 - p exactly as represented.
struct BernoulliModel {
    int n = 0;
    double p = 0.0;
    double q = 1.0;
};

BernoulliModel make_model(int n, double p);

/// Model for the flag state that occurs r times out of n.
BernoulliModel model_from_counts(int n, int r);

/// A probability together with its power -lg(alpha). Power is +inf when
/// alpha underflows to zero.
struct Significance {
    double alpha = 1.0;
    double power = 0.0;
};

/// -log10(alpha); +inf at 0, 0 at 1. Throws outside [0,1].
double power_of(double alpha);

Significance make_significance(double alpha);

/// Probability that the longest run of the tracked flag state has length
/// at least s, from the exact distribution of longest-run lengths. The
/// tail is accumulated from the pmf terms directly, never as 1 minus a
/// near-1 quantity. s = 0 yields alpha = 1.
Significance exact_longest_run_alpha(const BernoulliModel& model, int s);

/// Upper bound [1 + q(n-s)] p^s on the longest-run tail. Cheap, and on
/// transcript-scale inputs within 5% of exact whenever the exact tail is
/// below 0.1.
double quick_bound_alpha(const BernoulliModel& model, int s);

/// Probability that the number of maximal runs is at most m, from the
/// exact run-count distribution, accumulated small-index terms first.
Significance exact_run_count_alpha(const BernoulliModel& model, int m);

struct RunCountMoments {
    double mean = 0.0;
    double variance = 0.0;
};

/// Closed-form run-count moments: mean = 1 + (n-1)theta and
/// variance = (2n-3)theta - (3n-5)theta^2 with theta = 2pq. Requires n >= 2.
RunCountMoments run_count_moments(const BernoulliModel& model);

/// Gaussian estimate of the run-count lower tail with continuity
/// correction: Phi(m + 1/2; mean, sd). Advisory only; it can overestimate
/// deep tails by orders of magnitude.
double gaussian_run_count_approx(const BernoulliModel& model, int m);

} // namespace tallyruns
