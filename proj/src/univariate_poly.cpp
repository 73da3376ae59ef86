#include "cycles/univariate_poly.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace cycles {

UnivariatePoly::UnivariatePoly(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_ = {0.0};
    strip_exact_zeros();
}

void UnivariatePoly::strip_exact_zeros() {
    while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double UnivariatePoly::eval(double x) const {
    double acc = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

double UnivariatePoly::eval_with_bound(double x, double& bound) const {
    // Standard running error bound for Horner evaluation.
    constexpr double eps = 2.220446049250313e-16;
    double acc = 0.0;
    double err = 0.0;
    const double ax = std::fabs(x);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * x + coeffs_[i];
        err = err * ax + std::fabs(acc);
    }
    bound = 2.0 * eps * err * static_cast<double>(coeffs_.size());
    return acc;
}

double UnivariatePoly::scale_at(double x) const {
    double acc = 0.0;
    double p = 1.0;
    const double ax = std::fabs(x);
    for (double c : coeffs_) {
        acc += std::fabs(c) * p;
        p *= ax;
    }
    return acc;
}

double UnivariatePoly::max_abs_coeff() const {
    double m = 0.0;
    for (double c : coeffs_) m = std::max(m, std::fabs(c));
    return m;
}

UnivariatePoly UnivariatePoly::derivative() const {
    if (coeffs_.size() == 1) return UnivariatePoly();
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d[i - 1] = coeffs_[i] * static_cast<double>(i);
    return UnivariatePoly(std::move(d));
}

UnivariatePoly UnivariatePoly::trimmed(double rel_tol) const {
    const double thresh = rel_tol * max_abs_coeff();
    std::vector<double> c = coeffs_;
    while (c.size() > 1 && std::fabs(c.back()) < thresh) c.pop_back();
    return UnivariatePoly(std::move(c));
}

UnivariatePoly UnivariatePoly::operator+(const UnivariatePoly& o) const {
    std::vector<double> c(std::max(coeffs_.size(), o.coeffs_.size()), 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return UnivariatePoly(std::move(c));
}

UnivariatePoly UnivariatePoly::operator-(const UnivariatePoly& o) const {
    std::vector<double> c(std::max(coeffs_.size(), o.coeffs_.size()), 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
    return UnivariatePoly(std::move(c));
}

UnivariatePoly UnivariatePoly::operator*(const UnivariatePoly& o) const {
    if (is_zero() || o.is_zero()) return UnivariatePoly();
    std::vector<double> c(coeffs_.size() + o.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * o.coeffs_[j];
    return UnivariatePoly(std::move(c));
}

UnivariatePoly UnivariatePoly::operator*(double s) const {
    std::vector<double> c = coeffs_;
    for (double& v : c) v *= s;
    return UnivariatePoly(std::move(c));
}

UnivariatePoly UnivariatePoly::pow(int n) const {
    UnivariatePoly result = constant(1.0);
    for (int i = 0; i < n; ++i) result = result * (*this);
    return result;
}

} // namespace cycles
