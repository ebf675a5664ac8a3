#include "tallyruns/runstats.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "tallyruns/kernels.hpp"

namespace tallyruns {

BernoulliModel make_model(int n, double p) {
    if (n < 1) throw std::domain_error("model needs n >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("probability outside [0,1]");
    return BernoulliModel{n, p, 1.0 - p};
}

BernoulliModel model_from_counts(int n, int r) {
    if (r < 0 || r > n) throw std::domain_error("count outside [0,n]");
    return make_model(n, static_cast<double>(r) / n);
}

double power_of(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::domain_error("alpha outside [0,1]");
    if (alpha == 0.0) return std::numeric_limits<double>::infinity();
    return -std::log10(alpha);
}

Significance make_significance(double alpha) {
    alpha = std::min(std::max(alpha, 0.0), 1.0);
    return Significance{alpha, power_of(alpha)};
}

Significance exact_longest_run_alpha(const BernoulliModel& model, int s) {
    if (s < 0 || s > model.n) throw std::domain_error("run length outside [0,n]");
    if (s == 0) return make_significance(1.0);
    const std::vector<double> w = kernels::longest_run_pmf(model.n, model.p);
    return make_significance(kernels::tail_from_pmf(w, s));
}

double quick_bound_alpha(const BernoulliModel& model, int s) {
    if (s < 1 || s > model.n) throw std::domain_error("run length outside [1,n]");
    const double bound = (1.0 + model.q * (model.n - s)) * std::pow(model.p, s);
    return std::min(bound, 1.0);
}

Significance exact_run_count_alpha(const BernoulliModel& model, int m) {
    if (m < 1 || m > model.n) throw std::domain_error("run count outside [1,n]");
    return make_significance(kernels::run_count_cdf_truncated(model.n, model.p, m));
}

RunCountMoments run_count_moments(const BernoulliModel& model) {
    const int n = model.n;
    if (n < 2) throw std::domain_error("run-count moments need n >= 2");
    const double theta = 2.0 * model.p * model.q;
    const double mean = 1.0 + (n - 1) * theta;
    const double variance = (2.0 * n - 3.0) * theta - (3.0 * n - 5.0) * theta * theta;
    return RunCountMoments{mean, variance};
}

double gaussian_run_count_approx(const BernoulliModel& model, int m) {
    if (m < 1 || m > model.n) throw std::domain_error("run count outside [1,n]");
    const RunCountMoments mom = run_count_moments(model);
    if (!(mom.variance > 0.0)) throw std::domain_error("degenerate model: zero run-count variance");
    const double z = (m + 0.5 - mom.mean) / std::sqrt(mom.variance);
    // erfc form keeps far-left tails out of the cancellation zone.
    return 0.5 * std::erfc(-z / std::sqrt(2.0));
}

} // namespace tallyruns
