#include "cycles/fields.hpp"

#include <cmath>

#include "cycles/errors.hpp"

namespace cycles {

SaddleParams::SaddleParams(double mu_, double A_, double delta_, double B_, double C_)
    : mu(mu_), A(A_), delta(delta_), B(B_), C(C_) {
    if (!(A * A - delta * mu > 1e-14))
        throw ValidationError("saddle: not a saddle (A^2 - delta*mu must be positive)");
}

const char* to_string(CenterKind k) {
    switch (k) {
        case CenterKind::Q1: return "Q1";
        case CenterKind::Q2: return "Q2";
        case CenterKind::Q3: return "Q3";
        case CenterKind::Q4: return "Q4";
    }
    return "?";
}

CenterKind center_kind_from_string(const std::string& s) {
    if (s == "Q1" || s == "q1") return CenterKind::Q1;
    if (s == "Q2" || s == "q2") return CenterKind::Q2;
    if (s == "Q3" || s == "q3") return CenterKind::Q3;
    if (s == "Q4" || s == "q4") return CenterKind::Q4;
    throw ValidationError("center kind: expected one of Q1..Q4, got '" + s + "'");
}

AffineMap::AffineMap(double a1_, double b1_, double c1_, double alpha1_, double beta1_,
                     double gamma1_)
    : a1(a1_), b1(b1_), c1(c1_), alpha1(alpha1_), beta1(beta1_), gamma1(gamma1_) {
    if (!(std::fabs(b1 * alpha1 - a1 * beta1) > 1e-12))
        throw ValidationError("affine: degenerate (b1*alpha1 - a1*beta1 too close to zero)");
}

Vec2 saddle_field(const SaddleParams& p, Vec2 pt) {
    return {-p.A * pt.x - p.delta * pt.y + p.B, p.mu * pt.x + p.A * pt.y + p.C};
}

double saddle_integral(const SaddleParams& p, Vec2 pt) {
    return -0.5 * p.mu * pt.x * pt.x - p.A * pt.x * pt.y - 0.5 * p.delta * pt.y * pt.y -
           p.C * pt.x + p.B * pt.y;
}

Vec2 base_center_field(CenterKind kind, Vec2 p) {
    const double u = p.x, v = p.y;
    switch (kind) {
        case CenterKind::Q1: return {-v + u * u - v * v, u * (1.0 + 2.0 * v)};
        case CenterKind::Q2: return {-v + u * u, u * (1.0 + v)};
        case CenterKind::Q3: return {-v - 4.0 / 3.0 * u * u, u * (1.0 - 16.0 / 3.0 * v)};
        case CenterKind::Q4:
            return {-v + 16.0 / 3.0 * u * u - 4.0 / 3.0 * v * v, u * (1.0 + 8.0 / 3.0 * v)};
    }
    return {};
}

double base_center_denominator(CenterKind kind, double v) {
    switch (kind) {
        case CenterKind::Q1: return 1.0 + 2.0 * v;
        case CenterKind::Q2: {
            const double d = 1.0 + v;
            return d * d;
        }
        case CenterKind::Q3: return -3.0 + 16.0 * v;
        case CenterKind::Q4: {
            const double d = 3.0 + 8.0 * v;
            const double d2 = d * d;
            return d2 * d2;
        }
    }
    return 0.0;
}

double base_center_integral(CenterKind kind, Vec2 p) {
    const double u = p.x, v = p.y;
    const double den = base_center_denominator(kind, v);
    if (std::fabs(den) <= 1e-10)
        throw DenominatorSingular("first-integral denominator too close to zero");
    switch (kind) {
        case CenterKind::Q1: return (u * u + v * v) / den;
        case CenterKind::Q2: return (u * u + v * v) / den;
        case CenterKind::Q3:
            return (9.0 * (u * u + v * v) - 24.0 * u * u * v + 16.0 * u * u * u * u) / den;
        case CenterKind::Q4:
            return (9.0 * (u * u + v * v) + 24.0 * v * v * v + 16.0 * v * v * v * v) / den;
    }
    return 0.0;
}

Vec2 center_field(const CenterSystem& sys, Vec2 p) {
    const AffineMap& t = sys.affine;
    const Vec2 w = base_center_field(sys.kind, t.apply(p));
    const double det = t.jacobian_det();
    return {(t.beta1 * w.x - t.b1 * w.y) / det, (-t.alpha1 * w.x + t.a1 * w.y) / det};
}

double center_integral(const CenterSystem& sys, Vec2 p) {
    return base_center_integral(sys.kind, sys.affine.apply(p));
}

double center_denominator(const CenterSystem& sys, Vec2 p) {
    return base_center_denominator(sys.kind, sys.affine.apply(p).y);
}

Region classify(Vec2 p) {
    if (p.x == 0.0 && p.y == 0.0) return Region::Origin;
    if (p.x > 0.0 && p.y > 0.0) return Region::SigmaPlus;
    if (p.y == 0.0 && p.x > 0.0) return Region::SwitchXAxis;
    if (p.x == 0.0 && p.y > 0.0) return Region::SwitchYAxis;
    return Region::SigmaMinus;
}

} // namespace cycles
