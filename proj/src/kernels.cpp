#include "tallyruns/kernels.hpp"

#include <algorithm>
#include <stdexcept>

namespace tallyruns::kernels {

namespace {

void check_np(int n, double p) {
    if (n < 1) throw std::domain_error("sequence length must be positive");
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("probability outside [0,1]");
}

} // namespace

std::vector<double> longest_run_pmf(int n, double p) {
    check_np(n, p);
    const double q = 1.0 - p;

    // Triangular layout: row i holds entries j = 0..i at off[i].
    std::vector<size_t> off(static_cast<size_t>(n) + 2);
    for (int i = 0; i <= n + 1; ++i)
        off[i] = static_cast<size_t>(i) * (static_cast<size_t>(i) + 1) / 2;

    std::vector<double> cur(off[n + 1], 0.0), nxt(off[n + 1], 0.0);
    std::vector<double> w(static_cast<size_t>(n) + 1, 0.0), wn(static_cast<size_t>(n) + 1, 0.0);
    cur[0] = 1.0;
    w[0] = 1.0;

    for (int step = 0; step < n; ++step) {
        const int top = std::min(step + 1, n);
        // Rows are independent given the previous generation, which makes
        // the i-loop parallel. Rows above `top` are probability zero in
        // both buffers: row r is first written at step r-1, so a buffer
        // only ever holds zeros there.
#pragma omp parallel for schedule(static) if (top > 192)
        for (int i = 0; i <= top; ++i) {
            const double* src = &cur[off[i]];
            double* dst = &nxt[off[i]];
            dst[0] = q * w[i];
            double sum = dst[0];
            for (int j = 1; j < i; ++j) {
                dst[j] = p * src[j - 1];
                sum += dst[j];
            }
            if (i > 0) {
                dst[i] = p * (src[i - 1] + cur[off[i - 1] + static_cast<size_t>(i) - 1]);
                sum += dst[i];
            }
            wn[i] = sum;
        }
        cur.swap(nxt);
        w.swap(wn);
    }
    return w;
}

std::vector<double> run_count_pmf(int n, double p) {
    check_np(n, p);
    const double q = 1.0 - p;
    std::vector<double> a(static_cast<size_t>(n) + 1, 0.0), b(a), na(a), nb(a);
    a[1] = p;
    b[1] = q;
    for (int step = 1; step < n; ++step) {
        const int top = std::min(step + 1, n);
        for (int i = 1; i <= top; ++i) {
            na[i] = p * (a[i] + b[i - 1]);
            nb[i] = q * (b[i] + a[i - 1]);
        }
        a.swap(na);
        b.swap(nb);
    }
    std::vector<double> v(static_cast<size_t>(n) + 1, 0.0);
    for (int i = 1; i <= n; ++i) v[i] = a[i] + b[i];
    return v;
}

double longest_run_tail_linear(int n, double p, int s) {
    check_np(n, p);
    if (s < 0 || s > n) throw std::domain_error("run length outside [0,n]");
    if (s == 0) return 1.0;
    const double q = 1.0 - p;

    // d[t]: no tracked run of length >= s yet and the trailing tracked run
    // has length t. Mass entering t = s is absorbed into the answer.
    std::vector<double> d(static_cast<size_t>(s), 0.0);
    d[0] = 1.0;
    double absorbed = 0.0;
    for (int k = 0; k < n; ++k) {
        double alive = 0.0;
        for (int t = 0; t < s; ++t) alive += d[t];
        absorbed += p * d[s - 1];
        for (int t = s - 1; t >= 1; --t) d[t] = p * d[t - 1];
        d[0] = q * alive;
    }
    return std::min(absorbed, 1.0);
}

double run_count_cdf_truncated(int n, double p, int m) {
    check_np(n, p);
    if (m < 1 || m > n) throw std::domain_error("run count outside [1,n]");
    const double q = 1.0 - p;
    std::vector<double> a(static_cast<size_t>(m) + 1, 0.0), b(a);
    a[1] = p;
    b[1] = q;
    for (int step = 1; step < n; ++step) {
        const int top = std::min(step + 1, m);
        for (int i = top; i >= 1; --i) {
            a[i] = p * (a[i] + b[i - 1]);
            b[i] = q * (b[i] + a[i - 1]);
        }
    }
    double cdf = 0.0;
    for (int i = 1; i <= m; ++i) cdf += a[i] + b[i];
    return std::min(cdf, 1.0);
}

double tail_from_pmf(std::span<const double> w, int s) {
    if (s <= 0) return 1.0;
    double tail = 0.0;
    for (int i = static_cast<int>(w.size()) - 1; i >= s; --i) tail += w[i];
    return std::min(tail, 1.0);
}

double cdf_from_pmf(std::span<const double> v, int m) {
    double cdf = 0.0;
    const int top = std::min<int>(m, static_cast<int>(v.size()) - 1);
    for (int i = 1; i <= top; ++i) cdf += v[i];
    return std::min(cdf, 1.0);
}

} // namespace tallyruns::kernels
