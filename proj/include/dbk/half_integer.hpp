#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <stdexcept>

namespace dbk {

// Point of the half-integer lattice Z' = Z + 1/2, stored exactly as twice its
// value (an odd integer). -3/2 <-> twice = -3.
struct HalfInteger {
    std::int64_t twice = 1;

    HalfInteger() = default;
    explicit HalfInteger(std::int64_t twice_value) : twice(twice_value) {
        if ((twice % 2) == 0)
            throw std::invalid_argument("HalfInteger: doubled value must be odd");
    }

    // k + 1/2
    static HalfInteger from_offset(std::int64_t k) { return HalfInteger(2 * k + 1); }

    double value() const { return 0.5 * static_cast<double>(twice); }
    bool positive() const { return twice > 0; }
    bool negative() const { return twice < 0; }
    HalfInteger negated() const { return HalfInteger(-twice); }

    friend bool operator==(HalfInteger a, HalfInteger b) { return a.twice == b.twice; }
    friend bool operator!=(HalfInteger a, HalfInteger b) { return a.twice != b.twice; }
    friend bool operator<(HalfInteger a, HalfInteger b) { return a.twice < b.twice; }
    friend bool operator>(HalfInteger a, HalfInteger b) { return a.twice > b.twice; }
    friend bool operator<=(HalfInteger a, HalfInteger b) { return a.twice <= b.twice; }
    // Exact: difference of two half-integers is an integer.
    friend double operator-(HalfInteger a, HalfInteger b) {
        return static_cast<double>((a.twice - b.twice) / 2);
    }
};

inline HalfInteger half(std::int64_t twice_value) { return HalfInteger(twice_value); }

// Z'-point nearest to y (ties resolved upward); floor(y)+1/2 is always nearest.
inline HalfInteger nearest_half_integer(double y) {
    const auto fl = static_cast<std::int64_t>(std::floor(y));
    return HalfInteger(2 * fl + 1);
}

} // namespace dbk

template <> struct std::hash<dbk::HalfInteger> {
    std::size_t operator()(const dbk::HalfInteger& x) const noexcept {
        return std::hash<std::int64_t>{}(x.twice);
    }
};
