#include "cycles/resultant.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "cycles/errors.hpp"

namespace cycles {
namespace {

// Determinant by LU with partial pivoting, plus the Hadamard row bound of the
// input matrix (used as the roundoff scale for zero detection).
double det_with_hadamard(std::vector<std::vector<double>>& m, double& hadamard) {
    const std::size_t n = m.size();
    hadamard = 1.0;
    for (const auto& row : m) {
        double norm = 0.0;
        for (double v : row) norm += v * v;
        hadamard *= std::sqrt(norm);
    }
    double det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::fabs(m[r][col]) > std::fabs(m[piv][col])) piv = r;
        if (m[piv][col] == 0.0) return 0.0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            const double factor = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
        }
    }
    return det;
}

// Sylvester determinant of f(x0, y), g(x0, y) in y, with the generic
// y-degrees fixed by the bivariate inputs (leading coefficients may vanish
// at individual nodes; the matrix shape must not change).
double sylvester_at(const std::vector<UnivariatePoly>& fy, const std::vector<UnivariatePoly>& gy,
                    double x0, double& hadamard) {
    const int m = static_cast<int>(fy.size()) - 1;  // deg_y f
    const int n = static_cast<int>(gy.size()) - 1;  // deg_y g
    std::vector<double> fc(m + 1), gc(n + 1);
    for (int i = 0; i <= m; ++i) fc[i] = fy[i].eval(x0);
    for (int i = 0; i <= n; ++i) gc[i] = gy[i].eval(x0);
    if (m == 0) {
        hadamard = std::pow(std::fabs(fc[0]), n);
        return std::pow(fc[0], n);
    }
    if (n == 0) {
        hadamard = std::pow(std::fabs(gc[0]), m);
        return std::pow(gc[0], m);
    }
    const int N = m + n;
    std::vector<std::vector<double>> S(N, std::vector<double>(N, 0.0));
    // Rows of f coefficients (highest first), then rows of g.
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) S[r][r + k] = fc[m - k];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) S[n + r][r + k] = gc[n - k];
    return det_with_hadamard(S, hadamard);
}

// Interpolate values at the given nodes into monomial coefficients via
// Newton divided differences.
std::vector<double> newton_interpolate(const std::vector<double>& nodes,
                                       const std::vector<double>& values) {
    const std::size_t n = nodes.size();
    std::vector<double> dd = values;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);
    // Expand the Newton form into monomials.
    std::vector<double> coeffs(n, 0.0);
    std::vector<double> basis{1.0};  // product of (t - nodes[k]) so far
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < basis.size(); ++i) coeffs[i] += dd[k] * basis[i];
        if (k + 1 < n) {
            basis.push_back(0.0);
            for (std::size_t i = basis.size() - 1; i > 0; --i)
                basis[i] = basis[i - 1] - nodes[k] * basis[i];
            basis[0] *= -nodes[k];
        }
    }
    return coeffs;
}

UnivariatePoly resultant_at_scale(const std::vector<UnivariatePoly>& fy,
                                  const std::vector<UnivariatePoly>& gy, int n_nodes,
                                  double scale, bool& identically_zero) {
    std::vector<double> t_nodes(n_nodes), values(n_nodes);
    double max_ratio = 0.0;
    for (int k = 0; k < n_nodes; ++k) {
        t_nodes[k] = std::cos(std::numbers::pi * (2.0 * k + 1.0) / (2.0 * n_nodes));
        double hadamard = 0.0;
        values[k] = sylvester_at(fy, gy, scale * t_nodes[k], hadamard);
        if (hadamard > 0.0) max_ratio = std::max(max_ratio, std::fabs(values[k]) / hadamard);
    }
    identically_zero = max_ratio <= 1e-10;
    if (identically_zero) return UnivariatePoly();
    std::vector<double> coeffs = newton_interpolate(t_nodes, values);
    // Undo the node scaling x = scale * t: pure per-coefficient scaling.
    double p = 1.0;
    for (auto& c : coeffs) {
        c /= p;
        p *= scale;
    }
    return UnivariatePoly(std::move(coeffs)).trimmed(1e-12);
}

} // namespace

UnivariatePoly resultant_eliminate_y(const BivariatePoly& f, const BivariatePoly& g) {
    if (f.is_zero() || g.is_zero())
        throw CommonComponentError("resultant: zero input polynomial");
    if (f.deg_y() + g.deg_y() < 1)
        throw NumericError("resultant: neither input involves y");

    const auto fy = f.y_coefficients();
    const auto gy = g.y_coefficients();
    const int n_nodes = f.deg_x() * g.deg_y() + g.deg_x() * f.deg_y() + 1;

    bool zero = false;
    UnivariatePoly r = resultant_at_scale(fy, gy, n_nodes, 2.0, zero);
    if (zero) throw CommonComponentError("resultant identically zero: common component");

    // One refit on a wider node interval when the Cauchy bound says the
    // roots extend past the first fit's range.
    if (r.degree() >= 1) {
        double cauchy = 0.0;
        const auto& c = r.coeffs();
        for (std::size_t i = 0; i + 1 < c.size(); ++i)
            cauchy = std::max(cauchy, std::fabs(c[i] / c.back()));
        cauchy += 1.0;
        if (cauchy > 2.0) {
            UnivariatePoly wide =
                resultant_at_scale(fy, gy, n_nodes, std::min(cauchy, 1e6), zero);
            if (!zero) r = wide;
        }
    }
    return r;
}

} // namespace cycles
