#ifndef CYCLES_RESULTANT_HPP
#define CYCLES_RESULTANT_HPP

#include "cycles/bivariate_poly.hpp"
#include "cycles/univariate_poly.hpp"

namespace cycles {

/// Resultant of f and g with respect to y, as a polynomial in x.
///
/// Computed by evaluation-interpolation: both polynomials are evaluated at
/// Chebyshev-spaced x nodes, the Sylvester determinant is taken at each node
/// by row-pivoted elimination, and the node values are interpolated back to
/// monomial coefficients. Requires deg_y(f) + deg_y(g) >= 1 and nonzero
/// inputs. Throws CommonComponentError when the resultant is identically
/// zero (the inputs share a common factor).
UnivariatePoly resultant_eliminate_y(const BivariatePoly& f, const BivariatePoly& g);

} // namespace cycles

#endif
