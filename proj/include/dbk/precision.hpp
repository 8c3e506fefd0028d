#pragma once

#include <stdexcept>

namespace dbk {

// Truncation control for every series / quadrature evaluator in the library.
struct PrecisionPolicy {
    double target_rel_error = 1e-12;
    int max_terms = 500;

    PrecisionPolicy() = default;
    PrecisionPolicy(double target, int terms) : target_rel_error(target), max_terms(terms) {
        validate();
    }

    void validate() const {
        if (!(target_rel_error > 0.0 && target_rel_error < 1e-6))
            throw std::invalid_argument("PrecisionPolicy: target_rel_error must lie in (0, 1e-6)");
        if (max_terms < 50)
            throw std::invalid_argument("PrecisionPolicy: max_terms must be >= 50");
    }

    PrecisionPolicy with_max_terms(int terms) const { return {target_rel_error, terms}; }
};

} // namespace dbk
