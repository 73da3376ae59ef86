#ifndef CYCLES_REAL_ROOTS_HPP
#define CYCLES_REAL_ROOTS_HPP

#include <vector>

#include "cycles/univariate_poly.hpp"

namespace cycles {

struct RootRecord {
    double value = 0.0;
    int multiplicity_hint = 1;  // advisory only; >= 2 flags a non-simple root
    double residual = 0.0;
};

/// Real roots in [lo, hi], sorted ascending with pairwise separation above
/// the dedup tolerance (1e-8 absolute).
struct RootSet {
    std::vector<RootRecord> roots;
};

/// Certified-by-construction real-root isolation on [lo, hi]: breakpoints at
/// the recursively computed critical points make every piece monotonic, sign
/// changes are bisected and Newton-polished to the residual-based tolerance
/// tol. Throws ConvergenceFailure (with the bracket) when a bracketed root
/// cannot reach the tolerance. Degree-0 input yields an empty set.
RootSet real_roots(const UnivariatePoly& p, double lo, double hi, double tol);

} // namespace cycles

#endif
