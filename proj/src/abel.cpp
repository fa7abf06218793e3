#include "sigmacurve/abel.hpp"

#include <cmath>

#include "sigmacurve/errors.hpp"

namespace sigmacurve {

namespace {

RMat lattice_matrix(const Mat& w1, const Mat& w2) {
    const int g = static_cast<int>(w1.rows());
    RMat M(2 * g, 2 * g);
    M.topLeftCorner(g, g) = 2.0 * w1.real();
    M.bottomLeftCorner(g, g) = 2.0 * w1.imag();
    M.topRightCorner(g, g) = 2.0 * w2.real();
    M.bottomRightCorner(g, g) = 2.0 * w2.imag();
    return M;
}

}  // namespace

AbelMap::AbelMap(const PeriodData& pd, int series_terms)
    : pd_(pd),
      cs_(pd.curve, pd.basis, series_terms),
      far_radius_(3.0 * pd.curve.branch_scale()),
      tol_(1e-12),
      lattice_lu_(lattice_matrix(pd.omega1, pd.omega2)) {}

cplx AbelMap::far_parameter(const cplx& x, const cplx& y) const {
    const CurveSpec& c = pd_.curve;
    const cplx t0 = std::exp(-std::log(x) / static_cast<double>(c.r));
    const LaurentSeries ys = cs_.y();
    cplx best = t0;
    double dist = 1e300;
    cplx t = t0;
    for (int k = 0; k < c.r; ++k) {
        const double d = std::abs(ys.eval(t) - y);
        if (d < dist) {
            dist = d;
            best = t;
        }
        t *= c.zeta();
    }
    if (dist > 1e-5 * (1.0 + std::abs(y)))
        throw RootResolutionFailure("abel map: point does not lie on the curve");
    return best;
}

Vec AbelMap::series_value(const cplx& t) const {
    const int g = pd_.curve.genus();
    Vec w(g);
    for (int i = 1; i <= g; ++i) w[i - 1] = cs_.abel_component(i).eval(t);
    return w;
}

Vec AbelMap::operator()(const cplx& x, const cplx& y) const {
    const CurveSpec& c = pd_.curve;
    const int g = c.genus();
    if (std::abs(x) >= far_radius_) return series_value(far_parameter(x, y));

    for (const cplx& b : c.branch_x())
        if (std::abs(x - b) < 1e-8 * c.branch_scale())
            throw BranchPoint("abel map: point too close to a branch point");

    const cplx anchor_x = far_radius_ * std::exp(kI * std::arg(x + cplx(1e-3, 2e-3)));
    const std::vector<cplx> path = route_path(anchor_x, x, c.branch_x(), default_clearance(c));
    const cplx anchor_y0 = lift_points(c, anchor_x)[0].y;

    const IntegrandDx f = [&](const cplx& xx, const cplx& yy) {
        Vec v(g);
        cplx yp = 1.0;
        for (int j = 0; j + 1 < c.r; ++j) yp *= yy;
        const cplx den = static_cast<double>(c.r) * yp;
        for (int i = 0; i < g; ++i) v[i] = pd_.basis.eval(i, xx, yy) / den;
        return v;
    };
    cplx y_end;
    const Vec I0 = integrate_polyline(c, f, g, path, anchor_y0, tol_, &y_end);

    // the lift through y is the zeta^j translate of the continued principal lift
    int j = -1;
    cplx rot = 1.0;
    for (int k = 0; k < c.r; ++k) {
        if (std::abs(rot * y_end - y) < 1e-5 * (1.0 + std::abs(y))) {
            j = k;
            break;
        }
        rot *= c.zeta();
    }
    if (j < 0) throw RootResolutionFailure("abel map: endpoint missed every lift");

    Vec w = series_value(far_parameter(anchor_x, rot * anchor_y0));
    for (int i = 0; i < g; ++i) {
        // nu_i picks up zeta^{j (ye_i + 1)} on the translated lift
        cplx scale = 1.0;
        for (int p = 0; p < (pd_.basis[i].ye + 1) * j; ++p) scale *= c.zeta();
        w[i] += scale * I0[i];
    }
    return w;
}

Vec AbelMap::reduce_mod_lattice(const Vec& w, RVec* coords) const {
    const int g = static_cast<int>(w.size());
    RVec rhs(2 * g);
    rhs.head(g) = w.real();
    rhs.tail(g) = w.imag();
    const RVec cvec = lattice_lu_.solve(rhs);
    if (coords) *coords = cvec;
    Vec out = w;
    for (int i = 0; i < g; ++i) {
        const double n = std::round(cvec[i]);
        const double m = std::round(cvec[g + i]);
        out -= 2.0 * n * pd_.omega1.col(i) + 2.0 * m * pd_.omega2.col(i);
    }
    return out;
}

double AbelMap::lattice_distance(const Vec& w) const {
    RVec cvec;
    reduce_mod_lattice(w, &cvec);
    double d = 0.0;
    for (int i = 0; i < cvec.size(); ++i) d = std::max(d, std::abs(cvec[i] - std::round(cvec[i])));
    return d;
}

}  // namespace sigmacurve
