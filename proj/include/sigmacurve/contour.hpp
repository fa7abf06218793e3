#pragma once

#include <functional>
#include <vector>

#include "sigmacurve/curve.hpp"
#include "sigmacurve/numbers.hpp"

namespace sigmacurve {

// Gauss-Legendre nodes and weights on [-1, 1], cached per order.
struct QuadRule {
    std::vector<double> x;
    std::vector<double> w;
};
const QuadRule& gauss_legendre(int n);

// Deterministic polyline from `from` to `to` that keeps at least `clearance`
// distance from every point in `avoid` (counterclockwise detour arcs).
std::vector<cplx> route_path(const cplx& from, const cplx& to,
                             const std::vector<cplx>& avoid, double clearance);

// Analytic continuation of the fiber coordinate y (y^r = f(x)) along a
// straight segment, with adaptive substepping and Newton projection.
cplx continue_y_segment(const CurveSpec& c, const cplx& x0, const cplx& y0, const cplx& x1);
cplx continue_y(const CurveSpec& c, const std::vector<cplx>& xpath, const cplx& y_start);

// Vector-valued integrand given per dx at a tracked point of the curve.
using IntegrandDx = std::function<Vec(const cplx& x, const cplx& y)>;

// Adaptive Gauss-Legendre integration of f(x,y) dx along an x-polyline with y
// continued from y_start.  If y_end is non-null it receives the final fiber
// value (closure check for cycles).
Vec integrate_polyline(const CurveSpec& c, const IntegrandDx& f, int dim,
                       const std::vector<cplx>& xpath, const cplx& y_start, double tol,
                       cplx* y_end = nullptr, int max_depth = 22);

// Same integral with one fixed Gauss-Legendre rule per segment and no error
// control; used for quadrature convergence studies.
Vec integrate_polyline_fixed(const CurveSpec& c, const IntegrandDx& f, int dim,
                             const std::vector<cplx>& xpath, const cplx& y_start, int nodes,
                             cplx* y_end = nullptr);

// Real base point to the right of all branch points; anchors sheet labels.
cplx sheet_basepoint(const CurveSpec& c);

// Routing clearance adapted to the branch-point geometry.
double default_clearance(const CurveSpec& c);

// The r points over x, sheet j carrying y = zeta^j * y_principal(x), where
// y_principal is continued from the principal root at the base point.
std::vector<AffinePoint> lift_points(const CurveSpec& c, const cplx& x);

// Sheet index of an affine point (nearest lift).
int sheet_of(const CurveSpec& c, const cplx& x, const cplx& y);

}  // namespace sigmacurve
