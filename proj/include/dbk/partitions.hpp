#pragma once

#include <cstdint>
#include <vector>

#include "dbk/half_integer.hpp"
#include "dbk/rng.hpp"

namespace dbk {

// Partition lambda_1 >= lambda_2 >= ... > 0 of n = sum of parts; the empty
// diagram (n = 0) is valid.
struct YoungDiagram {
    std::vector<int> parts;

    YoungDiagram() = default;
    explicit YoungDiagram(std::vector<int> p);

    int n() const;
    bool empty() const { return parts.empty(); }
    YoungDiagram conjugate() const;

    friend bool operator==(const YoungDiagram& a, const YoungDiagram& b) {
        return a.parts == b.parts;
    }
};

// Frobenius coordinates (p_1 > ... > p_d >= 0 | q_1 > ... > q_d >= 0):
// arm/leg lengths along the diagonal.
struct FrobeniusCoords {
    std::vector<int> p;
    std::vector<int> q;

    int d() const { return static_cast<int>(p.size()); }
};

// X(lambda) = {-q_i - 1/2} union {p_i + 1/2}, as a sorted set of Z' points.
struct PointConfiguration {
    std::vector<HalfInteger> points; // ascending

    bool contains(HalfInteger x) const;
};

struct PlancherelSample {
    int n = 0;
    YoungDiagram lambda;
    PointConfiguration config;
};

FrobeniusCoords frobenius(const YoungDiagram& lambda);
YoungDiagram from_frobenius(const FrobeniusCoords& fc);
PointConfiguration point_config(const YoungDiagram& lambda);

// dim(lambda) by the hook-length formula, exact in 128-bit integers
// (valid through n ~ 30; we never need more than ~25).
std::uint64_t dimension(const YoungDiagram& lambda);

// All partitions of n, reverse-lexicographic (largest first part first),
// each exactly once. Requires n <= 30.
std::vector<YoungDiagram> enumerate_partitions(int n);

// Common shape of the Robinson-Schensted insertion tableaux of a permutation
// of {1..n}; row 1 length = longest increasing subsequence.
YoungDiagram rsk_shape(const std::vector<int>& perm);

// Uniform permutation (Fisher-Yates) pushed through RSK: exactly the
// Plancherel distribution on partitions of n.
YoungDiagram sample_plancherel(int n, CounterRng& rng);

// n ~ Poisson(theta) by sequential inversion (theta <= 30), then Plancherel.
PlancherelSample sample_poissonized(double theta, CounterRng& rng);

int poisson_inversion(double theta, CounterRng& rng);

} // namespace dbk
