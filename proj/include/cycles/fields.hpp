#ifndef CYCLES_FIELDS_HPP
#define CYCLES_FIELDS_HPP

#include <string>

namespace cycles {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }

/// Linear Hamiltonian saddle
///   xdot = -A x - delta y + B,   ydot = mu x + A y + C,
/// valid when A^2 - delta*mu > 0 (strict, enforced at construction).
struct SaddleParams {
    double mu, A, delta, B, C;
    SaddleParams(double mu_, double A_, double delta_, double B_, double C_);
};

enum class CenterKind { Q1, Q2, Q3, Q4 };

const char* to_string(CenterKind k);
CenterKind center_kind_from_string(const std::string& s);

/// Affine change of variables T(x,y) = (a1 x + b1 y + c1, alpha1 x + beta1 y + gamma1),
/// nondegenerate: |b1*alpha1 - a1*beta1| > 1e-12 (enforced at construction).
struct AffineMap {
    double a1, b1, c1, alpha1, beta1, gamma1;
    AffineMap(double a1_, double b1_, double c1_, double alpha1_, double beta1_, double gamma1_);

    Vec2 apply(Vec2 p) const {
        return {a1 * p.x + b1 * p.y + c1, alpha1 * p.x + beta1 * p.y + gamma1};
    }
    double jacobian_det() const { return a1 * beta1 - b1 * alpha1; }
};

/// One of the quadratic isochronous centers, placed by an affine change of
/// variables.
struct CenterSystem {
    CenterKind kind;
    AffineMap affine;
};

/// Partition of the plane by the switching set (the two nonnegative
/// semi-axes): open first quadrant, the two open semi-axes, the origin, and
/// everything else.
enum class Region { SigmaPlus, SigmaMinus, SwitchXAxis, SwitchYAxis, Origin };

Vec2 saddle_field(const SaddleParams& p, Vec2 point);
double saddle_integral(const SaddleParams& p, Vec2 point);

Vec2 base_center_field(CenterKind kind, Vec2 point);
// Throws DenominatorSingular when |denominator| <= 1e-10.
double base_center_integral(CenterKind kind, Vec2 point);
// The literal denominator of the base first integral at transformed
// coordinate v (second component of T).
double base_center_denominator(CenterKind kind, double v);

// Pushforward under the affine change: DT^{-1} * base_field(T(point)).
Vec2 center_field(const CenterSystem& sys, Vec2 point);
double center_integral(const CenterSystem& sys, Vec2 point);
double center_denominator(const CenterSystem& sys, Vec2 point);

Region classify(Vec2 point);

} // namespace cycles

#endif
