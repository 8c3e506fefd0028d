#include "dbk/partitions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dbk {

YoungDiagram::YoungDiagram(std::vector<int> p) : parts(std::move(p)) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw std::invalid_argument("YoungDiagram: parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("YoungDiagram: parts must be weakly decreasing");
    }
}

int YoungDiagram::n() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

YoungDiagram YoungDiagram::conjugate() const {
    YoungDiagram c;
    if (parts.empty())
        return c;
    c.parts.resize(parts[0]);
    for (int j = 0; j < parts[0]; ++j) {
        int count = 0;
        for (int part : parts)
            if (part > j)
                ++count;
        c.parts[j] = count;
    }
    return c;
}

bool PointConfiguration::contains(HalfInteger x) const {
    return std::binary_search(points.begin(), points.end(), x);
}

FrobeniusCoords frobenius(const YoungDiagram& lambda) {
    FrobeniusCoords fc;
    YoungDiagram conj = lambda.conjugate();
    for (int i = 0; i < static_cast<int>(lambda.parts.size()); ++i) {
        if (lambda.parts[i] < i + 1)
            break;
        fc.p.push_back(lambda.parts[i] - (i + 1));
        fc.q.push_back(conj.parts[i] - (i + 1));
    }
    return fc;
}

YoungDiagram from_frobenius(const FrobeniusCoords& fc) {
    const int d = fc.d();
    std::vector<int> parts;
    for (int i = 0; i < d; ++i)
        parts.push_back(fc.p[i] + i + 1);
    // Rows below the diagonal come from the leg lengths: lambda'_j = q_j + j.
    for (int i = d;; ++i) {
        int row = 0;
        for (int j = 0; j < d; ++j)
            if (fc.q[j] + j + 1 >= i + 1)
                ++row;
        if (row == 0)
            break;
        parts.push_back(row);
    }
    return YoungDiagram(std::move(parts));
}

PointConfiguration point_config(const YoungDiagram& lambda) {
    FrobeniusCoords fc = frobenius(lambda);
    PointConfiguration cfg;
    // ascending: -q_1-1/2 < ... < -q_d-1/2 < p_d+1/2 < ... < p_1+1/2
    for (int i = 0; i < fc.d(); ++i)
        cfg.points.push_back(HalfInteger(-2 * fc.q[i] - 1));
    for (int i = fc.d() - 1; i >= 0; --i)
        cfg.points.push_back(HalfInteger(2 * fc.p[i] + 1));
    return cfg;
}

std::uint64_t dimension(const YoungDiagram& lambda) {
    const int n = lambda.n();
    if (n == 0)
        return 1;
    if (n > 30)
        throw std::domain_error("dimension: exact arithmetic supported for n <= 30");
    YoungDiagram conj = lambda.conjugate();
    unsigned __int128 hooks = 1;
    for (int i = 0; i < static_cast<int>(lambda.parts.size()); ++i)
        for (int j = 0; j < lambda.parts[i]; ++j)
            hooks *= static_cast<unsigned>(lambda.parts[i] - j + conj.parts[j] - i - 1);
    unsigned __int128 fact = 1;
    for (int k = 2; k <= n; ++k)
        fact *= static_cast<unsigned>(k);
    return static_cast<std::uint64_t>(fact / hooks); // exact: hooks | n!
}

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<int>& acc,
                   std::vector<YoungDiagram>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        acc.push_back(part);
        enumerate_rec(remaining - part, part, acc, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<YoungDiagram> enumerate_partitions(int n) {
    if (n < 0 || n > 30)
        throw std::domain_error("enumerate_partitions: need 0 <= n <= 30");
    std::vector<YoungDiagram> out;
    std::vector<int> acc;
    enumerate_rec(n, n == 0 ? 1 : n, acc, out);
    return out;
}

YoungDiagram rsk_shape(const std::vector<int>& perm) {
    std::vector<std::vector<int>> rows;
    for (int value : perm) {
        int carry = value;
        bool placed = false;
        for (auto& row : rows) {
            auto it = std::upper_bound(row.begin(), row.end(), carry);
            if (it == row.end()) {
                row.push_back(carry);
                placed = true;
                break;
            }
            std::swap(carry, *it); // bump
        }
        if (!placed)
            rows.push_back({carry});
    }
    std::vector<int> parts;
    parts.reserve(rows.size());
    for (const auto& row : rows)
        parts.push_back(static_cast<int>(row.size()));
    return YoungDiagram(std::move(parts));
}

YoungDiagram sample_plancherel(int n, CounterRng& rng) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.next_below(i + 1)]);
    return rsk_shape(perm);
}

int poisson_inversion(double theta, CounterRng& rng) {
    if (!(theta > 0.0 && theta <= 30.0))
        throw std::domain_error("poisson_inversion: need 0 < theta <= 30");
    double u = rng.next_double();
    double p = std::exp(-theta);
    double cdf = p;
    int k = 0;
    while (u >= cdf && k < 400) {
        ++k;
        p *= theta / k;
        cdf += p;
    }
    return k;
}

PlancherelSample sample_poissonized(double theta, CounterRng& rng) {
    PlancherelSample s;
    s.n = poisson_inversion(theta, rng);
    s.lambda = sample_plancherel(s.n, rng);
    s.config = point_config(s.lambda);
    return s;
}

} // namespace dbk
