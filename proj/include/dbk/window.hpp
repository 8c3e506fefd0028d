#pragma once

#include <stdexcept>
#include <vector>

#include "dbk/half_integer.hpp"

namespace dbk {

// Symmetric finite window of Z': all x with |x| <= n_max - 1/2, indexed
// ascending, i <-> x = -n_max + 1/2 + i (so index 0 is the most negative
// point and index 2 n_max - 1 the most positive).
struct Window {
    int n_max = 0;

    explicit Window(int n) : n_max(n) {
        if (n <= 0)
            throw std::invalid_argument("Window: n_max must be positive");
    }

    int size() const { return 2 * n_max; }

    HalfInteger point(int i) const { return HalfInteger(2 * (i - n_max) + 1); }

    int index(HalfInteger x) const {
        int i = static_cast<int>((x.twice - 1) / 2 + n_max);
        if (i < 0 || i >= size())
            throw std::out_of_range("Window: point outside window");
        return i;
    }

    bool contains(HalfInteger x) const {
        return x.twice >= -(2 * n_max - 1) && x.twice <= 2 * n_max - 1;
    }

    std::vector<HalfInteger> points() const {
        std::vector<HalfInteger> p;
        p.reserve(size());
        for (int i = 0; i < size(); ++i)
            p.push_back(point(i));
        return p;
    }
};

} // namespace dbk
