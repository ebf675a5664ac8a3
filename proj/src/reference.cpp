#include "tallyruns/reference.hpp"

#include <algorithm>
#include <stdexcept>

namespace tallyruns::reference {

namespace {

void check_np(int n, double p) {
    if (n < 1) throw std::domain_error("sequence length must be positive");
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("probability outside [0,1]");
}

} // namespace

std::vector<double> longest_run_pmf(int n, double p) {
    check_np(n, p);
    const double q = 1.0 - p;

    // u[i][j]: longest tracked run is exactly i and the last j flags are in
    // the tracked state (j <= i). Appending one flag maps
    //   j = i   -> p * (u[i][i-1] + u[i-1][i-1])
    //   0<j<i   -> p * u[i][j-1]
    //   j = 0   -> q * w[i],   w[i] = sum_j u[i][j].
    // Sweeping i and j downward lets the update run in place: every value
    // on the right-hand side sits at a smaller index and is still old.
    std::vector<std::vector<double>> u(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) u[i].assign(static_cast<size_t>(i) + 1, 0.0);
    std::vector<double> w(static_cast<size_t>(n) + 1, 0.0);
    u[0][0] = 1.0;
    w[0] = 1.0;

    for (int step = 0; step < n; ++step) {
        const int top = std::min(step + 1, n); // a run cannot exceed the flag count
        for (int i = top; i >= 0; --i) {
            auto& row = u[i];
            if (i > 0) {
                row[i] = p * (row[i - 1] + u[i - 1][i - 1]);
                for (int j = i - 1; j >= 1; --j) row[j] = p * row[j - 1];
            }
            row[0] = q * w[i];
            double sum = 0.0;
            for (int j = 0; j <= i; ++j) sum += row[j];
            w[i] = sum;
        }
    }
    return w;
}

std::vector<double> run_count_pmf(int n, double p) {
    check_np(n, p);
    const double q = 1.0 - p;

    // a[i] (b[i]): probability of exactly i runs with the last flag in the
    // tracked (opposite) state. Appending a flag either extends the last
    // run or starts run i from a sequence with i-1 runs:
    //   a[i] <- p * (a[i] + b[i-1]),  b[i] <- q * (b[i] + a[i-1]).
    // A downward sweep over i updates both arrays in place.
    std::vector<double> a(static_cast<size_t>(n) + 1, 0.0);
    std::vector<double> b(static_cast<size_t>(n) + 1, 0.0);
    a[1] = p;
    b[1] = q;
    for (int step = 1; step < n; ++step) {
        const int top = std::min(step + 1, n);
        for (int i = top; i >= 1; --i) {
            a[i] = p * (a[i] + b[i - 1]);
            b[i] = q * (b[i] + a[i - 1]);
        }
    }
    std::vector<double> v(static_cast<size_t>(n) + 1, 0.0);
    for (int i = 1; i <= n; ++i) v[i] = a[i] + b[i];
    return v;
}

double longest_run_tail(int n, double p, int s) {
    if (s < 0 || s > n) throw std::domain_error("run length outside [0,n]");
    if (s == 0) return 1.0;
    const std::vector<double> w = longest_run_pmf(n, p);
    double tail = 0.0;
    for (int i = n; i >= s; --i) tail += w[i]; // smallest terms first
    return std::min(tail, 1.0);
}

double run_count_cdf(int n, double p, int m) {
    if (m < 1 || m > n) throw std::domain_error("run count outside [1,n]");
    const std::vector<double> v = run_count_pmf(n, p);
    double cdf = 0.0;
    for (int i = 1; i <= m; ++i) cdf += v[i];
    return std::min(cdf, 1.0);
}

} // namespace tallyruns::reference
