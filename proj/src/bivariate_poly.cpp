#include "cycles/bivariate_poly.hpp"

#include <algorithm>
#include <cmath>

namespace cycles {

BivariatePoly::BivariatePoly(CoeffMap coeffs) : coeffs_(std::move(coeffs)) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->second == 0.0)
            it = coeffs_.erase(it);
        else
            ++it;
    }
    recompute_degrees();
}

void BivariatePoly::recompute_degrees() {
    deg_total_ = deg_x_ = deg_y_ = 0;
    for (const auto& [key, c] : coeffs_) {
        deg_total_ = std::max(deg_total_, key.first + key.second);
        deg_x_ = std::max(deg_x_, key.first);
        deg_y_ = std::max(deg_y_, key.second);
    }
}

double BivariatePoly::coeff(int i, int j) const {
    auto it = coeffs_.find({i, j});
    return it == coeffs_.end() ? 0.0 : it->second;
}

void BivariatePoly::set_coeff(int i, int j, double c) {
    if (c == 0.0)
        coeffs_.erase({i, j});
    else
        coeffs_[{i, j}] = c;
    recompute_degrees();
}

void BivariatePoly::add_coeff(int i, int j, double c) {
    double v = coeff(i, j) + c;
    set_coeff(i, j, v);
}

double BivariatePoly::eval(double x, double y) const {
    // Monomial accumulation with incrementally built powers; map order is
    // fixed, so the result is deterministic.
    double acc = 0.0;
    for (const auto& [key, c] : coeffs_) {
        double term = c;
        for (int k = 0; k < key.first; ++k) term *= x;
        for (int k = 0; k < key.second; ++k) term *= y;
        acc += term;
    }
    return acc;
}

double BivariatePoly::scale_at(double x, double y) const {
    const double ax = std::fabs(x), ay = std::fabs(y);
    double acc = 0.0;
    for (const auto& [key, c] : coeffs_) {
        double term = std::fabs(c);
        for (int k = 0; k < key.first; ++k) term *= ax;
        for (int k = 0; k < key.second; ++k) term *= ay;
        acc += term;
    }
    return acc;
}

double BivariatePoly::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [key, c] : coeffs_) m = std::max(m, std::fabs(c));
    return m;
}

BivariatePoly BivariatePoly::dx() const {
    CoeffMap out;
    for (const auto& [key, c] : coeffs_)
        if (key.first > 0) out[{key.first - 1, key.second}] = c * key.first;
    return BivariatePoly(std::move(out));
}

BivariatePoly BivariatePoly::dy() const {
    CoeffMap out;
    for (const auto& [key, c] : coeffs_)
        if (key.second > 0) out[{key.first, key.second - 1}] = c * key.second;
    return BivariatePoly(std::move(out));
}

BivariatePoly BivariatePoly::trimmed(double rel_tol) const {
    const double thresh = rel_tol * max_abs_coeff();
    CoeffMap out;
    for (const auto& [key, c] : coeffs_)
        if (std::fabs(c) >= thresh && c != 0.0) out[key] = c;
    return BivariatePoly(std::move(out));
}

std::vector<UnivariatePoly> BivariatePoly::y_coefficients() const {
    if (is_zero()) return {};
    std::vector<std::vector<double>> rows(deg_y_ + 1, std::vector<double>(deg_x_ + 1, 0.0));
    for (const auto& [key, c] : coeffs_) rows[key.second][key.first] = c;
    std::vector<UnivariatePoly> out;
    out.reserve(rows.size());
    for (auto& r : rows) out.emplace_back(std::move(r));
    return out;
}

UnivariatePoly BivariatePoly::restrict_y0() const {
    std::vector<double> c(deg_x_ + 1, 0.0);
    for (const auto& [key, v] : coeffs_)
        if (key.second == 0) c[key.first] = v;
    return UnivariatePoly(std::move(c));
}

UnivariatePoly BivariatePoly::restrict_x0() const {
    std::vector<double> c(deg_y_ + 1, 0.0);
    for (const auto& [key, v] : coeffs_)
        if (key.first == 0) c[key.second] = v;
    return UnivariatePoly(std::move(c));
}

BivariatePoly BivariatePoly::operator+(const BivariatePoly& o) const {
    CoeffMap out = coeffs_;
    for (const auto& [key, c] : o.coeffs_) out[key] += c;
    return BivariatePoly(std::move(out));
}

BivariatePoly BivariatePoly::operator-(const BivariatePoly& o) const {
    CoeffMap out = coeffs_;
    for (const auto& [key, c] : o.coeffs_) out[key] -= c;
    return BivariatePoly(std::move(out));
}

BivariatePoly BivariatePoly::operator*(double s) const {
    CoeffMap out;
    for (const auto& [key, c] : coeffs_) out[key] = c * s;
    return BivariatePoly(std::move(out));
}

BivariatePoly outer_product(const UnivariatePoly& px, const UnivariatePoly& qy) {
    BivariatePoly::CoeffMap out;
    const auto& a = px.coeffs();
    const auto& b = qy.coeffs();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0.0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0.0) continue;
            out[{static_cast<int>(i), static_cast<int>(j)}] += a[i] * b[j];
        }
    }
    return BivariatePoly(std::move(out));
}

} // namespace cycles
