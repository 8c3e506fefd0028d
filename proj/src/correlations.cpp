#include "dbk/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "dbk/partitions.hpp"

namespace dbk {

PointQuery::PointQuery(std::vector<HalfInteger> pts) : points(std::move(pts)) {
    if (points.empty() || points.size() > 4)
        throw std::invalid_argument("PointQuery: need 1 <= k <= 4 points");
    std::sort(points.begin(), points.end());
    for (std::size_t i = 1; i < points.size(); ++i)
        if (points[i] == points[i - 1])
            throw std::invalid_argument("PointQuery: points must be distinct");
}

namespace {

double det_small(const std::vector<double>& a, int n) {
    if (n == 1)
        return a[0];
    if (n == 2)
        return a[0] * a[3] - a[1] * a[2];
    double det = 0.0;
    std::vector<double> minor((n - 1) * (n - 1));
    for (int c = 0; c < n; ++c) {
        for (int i = 1; i < n; ++i) {
            int mj = 0;
            for (int j = 0; j < n; ++j) {
                if (j == c)
                    continue;
                minor[(i - 1) * (n - 1) + mj++] = a[i * n + j];
            }
        }
        double cof = a[c] * det_small(minor, n - 1);
        det += (c % 2 == 0) ? cof : -cof;
    }
    return det;
}

struct DiagramData {
    std::uint64_t dim2_lo; // dim^2 fits u64 through n = 30
    std::vector<std::int64_t> config_twice;
};

const std::vector<DiagramData>& diagrams_for(int n) {
    static std::map<int, std::vector<DiagramData>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;
    std::vector<DiagramData> data;
    for (const YoungDiagram& lambda : enumerate_partitions(n)) {
        std::uint64_t d = dimension(lambda);
        DiagramData dd;
        dd.dim2_lo = d * d;
        for (HalfInteger x : point_config(lambda).points)
            dd.config_twice.push_back(x.twice);
        data.push_back(std::move(dd));
    }
    return cache.emplace(n, std::move(data)).first->second;
}

bool subset_of(const std::vector<HalfInteger>& q, const std::vector<std::int64_t>& cfg) {
    for (HalfInteger x : q)
        if (!std::binary_search(cfg.begin(), cfg.end(), x.twice))
            return false;
    return true;
}

} // namespace

RhoEstimate rho_det(const PointQuery& q, const KernelEvaluator& kernel) {
    const int k = q.k();
    std::vector<double> a(k * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            a[i * k + j] = kernel.evaluate(q.points[i], q.points[j]);
    double value = det_small(a, k);
    if (value < -1e-10 || value > 1.0 + 1e-10)
        throw std::runtime_error("rho_det: determinant outside [0,1] tolerance band");
    return {value, 0.0, RhoEstimate::Method::det};
}

int choose_n_cut(double theta) {
    double p = std::exp(-theta);
    double cdf = p;
    for (int n = 1; n <= 30; ++n) {
        p *= theta / n;
        cdf += p;
        if (1.0 - cdf < 1e-12)
            return n;
    }
    throw std::domain_error("choose_n_cut: tail gate unreachable with n_cut <= 30");
}

RhoEstimate rho_exact(const PointQuery& q, double theta, int n_cut) {
    if (theta == 0.0)
        return {0.0, 0.0, RhoEstimate::Method::exact};
    if (theta < 0.0)
        throw std::domain_error("rho_exact: theta must be >= 0");

    // Tail gate: sum_{n > n_cut} e^-theta theta^n / n! must be < 1e-12.
    double pois = std::exp(-theta);
    double cdf = pois;
    for (int n = 1; n <= n_cut; ++n) {
        pois *= theta / n;
        cdf += pois;
    }
    if (!(1.0 - cdf < 1e-12))
        throw std::runtime_error("rho_exact: Poisson tail beyond n_cut too large; raise n_cut");

    long double value = 0.0L;
    double term = std::exp(-theta);
    long double factorial = 1.0L;
    for (int n = 0; n <= n_cut; ++n) {
        if (n > 0) {
            term *= theta / n;
            factorial *= n;
        }
        unsigned __int128 match = 0;
        for (const DiagramData& dd : diagrams_for(n))
            if (subset_of(q.points, dd.config_twice))
                match += dd.dim2_lo;
        if (match != 0)
            value += static_cast<long double>(term) *
                     (static_cast<long double>(match) / factorial);
    }
    return {static_cast<double>(value), 0.0, RhoEstimate::Method::exact};
}

RhoEstimate rho_mc(const PointQuery& q, double theta, int samples, std::uint64_t seed) {
    if (samples < 1000)
        throw std::invalid_argument("rho_mc: need at least 10^3 samples");
    if (theta == 0.0)
        return {0.0, 0.0, RhoEstimate::Method::mc};
    std::int64_t hits = 0;
    for (int s = 0; s < samples; ++s) {
        CounterRng rng(seed, static_cast<std::uint64_t>(s));
        PlancherelSample sample = sample_poissonized(theta, rng);
        bool ok = true;
        for (HalfInteger x : q.points)
            if (!sample.config.contains(x)) {
                ok = false;
                break;
            }
        hits += ok ? 1 : 0;
    }
    double p = static_cast<double>(hits) / samples;
    double se = std::sqrt(p * (1.0 - p) / samples);
    return {p, se, RhoEstimate::Method::mc};
}

} // namespace dbk
