#ifndef CYCLES_UNIVARIATE_POLY_HPP
#define CYCLES_UNIVARIATE_POLY_HPP

#include <vector>

namespace cycles {

/// Dense univariate polynomial with real coefficients, lowest degree first.
/// The zero polynomial is stored as a single zero coefficient.
class UnivariatePoly {
public:
    UnivariatePoly() : coeffs_{0.0} {}
    explicit UnivariatePoly(std::vector<double> coeffs);

    static UnivariatePoly constant(double c) { return UnivariatePoly({c}); }
    // c0 + c1 x
    static UnivariatePoly linear(double c0, double c1) { return UnivariatePoly({c0, c1}); }

    const std::vector<double>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }
    double leading() const { return coeffs_.back(); }

    double eval(double x) const;
    // Horner value plus a running bound on the accumulated roundoff,
    // |error| <= bound. Used to decide whether a value is "numerically zero".
    double eval_with_bound(double x, double& bound) const;
    // Sum of |c_k| |x|^k: the natural residual scale at x.
    double scale_at(double x) const;
    double max_abs_coeff() const;

    UnivariatePoly derivative() const;
    // Drop leading coefficients with |c| < rel_tol * max|c|; keeps at least
    // the constant term.
    UnivariatePoly trimmed(double rel_tol = 1e-12) const;

    UnivariatePoly operator+(const UnivariatePoly& o) const;
    UnivariatePoly operator-(const UnivariatePoly& o) const;
    UnivariatePoly operator*(const UnivariatePoly& o) const;
    UnivariatePoly operator*(double s) const;
    UnivariatePoly pow(int n) const;

private:
    std::vector<double> coeffs_;
    void strip_exact_zeros();
};

} // namespace cycles

#endif
