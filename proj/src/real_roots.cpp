#include "cycles/real_roots.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cycles/errors.hpp"

namespace cycles {
namespace {

constexpr double kDedupTol = 1e-8;

bool numerically_zero(const UnivariatePoly& p, double x, double& value) {
    double bound = 0.0;
    value = p.eval_with_bound(x, bound);
    return std::fabs(value) <= std::max(8.0 * bound, 1e-280);
}

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

// Multiplicity from derivative analysis: first derivative order that is not
// numerically zero at r.
int multiplicity_hint_at(const UnivariatePoly& p, double r) {
    UnivariatePoly d = p;
    for (int k = 1; k <= p.degree(); ++k) {
        d = d.derivative();
        double v = 0.0;
        if (!numerically_zero(d, r, v)) return k;
    }
    return p.degree();
}

struct Candidate {
    double value;
    int hint;
    double residual;
};

// Bisection plus safeguarded Newton on a sign-change bracket [a, b].
Candidate refine_bracket(const UnivariatePoly& p, const UnivariatePoly& dp, double a, double b,
                         double fa, double fb, double tol, bool strict) {
    const double a0 = a, b0 = b;
    for (int it = 0; it < 200; ++it) {
        const double m = 0.5 * (a + b);
        if (m == a || m == b) break;
        const double fm = p.eval(m);
        if (fm == 0.0) {
            a = b = m;
            break;
        }
        if (sign_of(fm) == sign_of(fa)) {
            a = m;
            fa = fm;
        } else {
            b = m;
            fb = fm;
        }
        if (b - a <= 1e-15 * std::max({1.0, std::fabs(a), std::fabs(b)})) break;
    }
    double r = 0.5 * (a + b);
    for (int it = 0; it < 30; ++it) {
        const double fr = p.eval(r);
        const double dr = dp.eval(r);
        if (dr == 0.0) break;
        double next = r - fr / dr;
        if (next < a0 || next > b0) break;
        if (next == r) break;
        r = next;
    }
    const double residual = std::fabs(p.eval(r));
    const double scale = std::max(p.scale_at(r), 1e-300);
    if (strict && residual > tol * scale) {
        throw ConvergenceFailure("real_roots: bracket [" + std::to_string(a0) + ", " +
                                 std::to_string(b0) + "] residual " + std::to_string(residual) +
                                 " above tolerance");
    }
    return {r, 1, residual};
}

void isolate(const UnivariatePoly& p, double lo, double hi, double tol, bool strict,
             std::vector<Candidate>& out) {
    const int deg = p.degree();
    if (deg <= 0) return;
    const UnivariatePoly dp = p.derivative();
    if (deg == 1) {
        const auto& c = p.coeffs();
        const double r = -c[0] / c[1];
        if (r >= lo && r <= hi) out.push_back({r, 1, std::fabs(p.eval(r))});
        return;
    }

    std::vector<Candidate> dcrit;
    isolate(dp, lo, hi, std::max(tol, 1e-10), false, dcrit);

    std::vector<double> breaks{lo};
    for (const auto& c : dcrit)
        if (c.value > lo && c.value < hi) breaks.push_back(c.value);
    breaks.push_back(hi);
    std::sort(breaks.begin(), breaks.end());

    // Roots sitting at breakpoints (critical points and interval endpoints).
    std::vector<bool> is_zero(breaks.size(), false);
    for (std::size_t i = 0; i < breaks.size(); ++i) {
        double v = 0.0;
        if (numerically_zero(p, breaks[i], v)) {
            is_zero[i] = true;
            const bool endpoint = (i == 0 || i + 1 == breaks.size());
            out.push_back({breaks[i], endpoint ? 1 : multiplicity_hint_at(p, breaks[i]),
                           std::fabs(v)});
        }
    }

    // Sign changes on the monotonic pieces; nudge away from ascertained zeros.
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        double a = breaks[i], b = breaks[i + 1];
        const double len = b - a;
        if (len <= 0.0) continue;
        if (is_zero[i]) a += 1e-3 * len;
        if (is_zero[i + 1]) b -= 1e-3 * len;
        if (a >= b) continue;
        const double fa = p.eval(a), fb = p.eval(b);
        if (sign_of(fa) * sign_of(fb) < 0)
            out.push_back(refine_bracket(p, dp, a, b, fa, fb, tol, strict));
    }
}

} // namespace

RootSet real_roots(const UnivariatePoly& p, double lo, double hi, double tol) {
    if (!(lo < hi)) throw NumericError("real_roots: empty interval");
    if (!(tol > 0.0)) throw NumericError("real_roots: tolerance must be positive");

    std::vector<Candidate> cands;
    isolate(p, lo, hi, tol, true, cands);

    std::sort(cands.begin(), cands.end(),
              [](const Candidate& a, const Candidate& b) { return a.value < b.value; });
    RootSet rs;
    for (const auto& c : cands) {
        if (!rs.roots.empty() && c.value - rs.roots.back().value <= kDedupTol) {
            auto& last = rs.roots.back();
            last.multiplicity_hint = std::max(last.multiplicity_hint, c.hint);
            if (c.residual < last.residual) {
                last.value = c.value;
                last.residual = c.residual;
            }
            continue;
        }
        rs.roots.push_back({c.value, c.hint, c.residual});
    }
    return rs;
}

} // namespace cycles
