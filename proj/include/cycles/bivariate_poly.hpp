#ifndef CYCLES_BIVARIATE_POLY_HPP
#define CYCLES_BIVARIATE_POLY_HPP

#include <map>
#include <utility>

#include "cycles/univariate_poly.hpp"

namespace cycles {

/// Sparse bivariate polynomial over the reals, keyed by exponent pair (i, j)
/// for x^i y^j. Stored coefficients are finite and nonzero after trimming;
/// degrees are kept consistent with the stored monomials.
class BivariatePoly {
public:
    using Key = std::pair<int, int>;
    using CoeffMap = std::map<Key, double>;

    BivariatePoly() = default;
    explicit BivariatePoly(CoeffMap coeffs);

    const CoeffMap& coeffs() const { return coeffs_; }
    int deg_total() const { return deg_total_; }
    int deg_x() const { return deg_x_; }
    int deg_y() const { return deg_y_; }
    bool is_zero() const { return coeffs_.empty(); }

    double coeff(int i, int j) const;
    void set_coeff(int i, int j, double c);
    void add_coeff(int i, int j, double c);

    double eval(double x, double y) const;
    // Sum of |c_ij| |x|^i |y|^j: residual scale at the point.
    double scale_at(double x, double y) const;
    double max_abs_coeff() const;

    BivariatePoly dx() const;
    BivariatePoly dy() const;

    // Drop coefficients with |c| < rel_tol * max|c| and recompute degrees.
    // An all-zero result is the zero polynomial (is_zero() true).
    BivariatePoly trimmed(double rel_tol) const;

    // Coefficients as polynomials in y: entry j is the coefficient of y^j,
    // a univariate polynomial in x. Length deg_y()+1 (empty for zero poly).
    std::vector<UnivariatePoly> y_coefficients() const;

    // Restrictions to the axes.
    UnivariatePoly restrict_y0() const;  // p(x, 0)
    UnivariatePoly restrict_x0() const;  // p(0, y)

    BivariatePoly operator+(const BivariatePoly& o) const;
    BivariatePoly operator-(const BivariatePoly& o) const;
    BivariatePoly operator*(double s) const;

private:
    CoeffMap coeffs_;
    int deg_total_ = 0, deg_x_ = 0, deg_y_ = 0;
    void recompute_degrees();
};

// P(x,y) = px(x) * qy(y) as a bivariate polynomial.
BivariatePoly outer_product(const UnivariatePoly& px, const UnivariatePoly& qy);

} // namespace cycles

#endif
