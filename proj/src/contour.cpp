#include "sigmacurve/contour.hpp"

#include <cmath>
#include <map>

#include "sigmacurve/errors.hpp"

namespace sigmacurve {

const QuadRule& gauss_legendre(int n) {
    static std::map<int, QuadRule> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    QuadRule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int k = 0; k < n; ++k) {
        double x = std::cos(kPi * (k + 0.75) / (n + 0.5));
        double p0 = 0.0, p1 = 0.0;
        for (int it2 = 0; it2 < 100; ++it2) {
            p0 = 1.0;
            p1 = x;
            for (int j = 2; j <= n; ++j) {
                double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        p0 = 1.0;
        p1 = x;
        for (int j = 2; j <= n; ++j) {
            double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
            p0 = p1;
            p1 = p2;
        }
        double dp = n * (x * p1 - p0) / (x * x - 1.0);
        r.x[k] = x;
        r.w[k] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return cache.emplace(n, std::move(r)).first->second;
}

namespace {

double seg_point_dist(const cplx& a, const cplx& b, const cplx& p) {
    cplx d = b - a;
    double L2 = std::norm(d);
    if (L2 < 1e-300) return std::abs(p - a);
    double t = ((p - a) / d).real();
    t = std::max(0.0, std::min(1.0, t));
    return std::abs(p - (a + t * d));
}

void route_recursive(const cplx& from, const cplx& to, const std::vector<cplx>& avoid,
                     double clearance, std::vector<cplx>& out, int depth) {
    if (depth > 12) throw QuadratureFailure("route_path: detour recursion too deep");
    int worst = -1;
    double worst_d = clearance;
    for (size_t i = 0; i < avoid.size(); ++i) {
        // An endpoint inside the clearance disk cannot be detoured around;
        // the close approach is accepted and handled by adaptive refinement.
        if (std::abs(avoid[i] - from) < 1.35 * clearance ||
            std::abs(avoid[i] - to) < 1.35 * clearance)
            continue;
        double d = seg_point_dist(from, to, avoid[i]);
        if (d < worst_d) {
            worst_d = d;
            worst = (int)i;
        }
    }
    if (worst < 0) {
        out.push_back(to);
        return;
    }
    const cplx b = avoid[worst];
    double R = 1.25 * clearance;
    double a0 = std::arg(from - b);
    double a1 = std::arg(to - b);
    while (a1 <= a0) a1 += 2.0 * kPi;  // counterclockwise
    cplx e0 = b + std::polar(R, a0);
    cplx e1 = b + std::polar(R, a1);
    route_recursive(from, e0, avoid, clearance, out, depth + 1);
    int steps = std::max(2, (int)std::ceil((a1 - a0) / (kPi / 8.0)));
    for (int k = 1; k < steps; ++k)
        out.push_back(b + std::polar(R, a0 + (a1 - a0) * k / steps));
    out.push_back(e1);
    route_recursive(e1, to, avoid, clearance, out, depth + 1);
}

}  // namespace

std::vector<cplx> route_path(const cplx& from, const cplx& to, const std::vector<cplx>& avoid,
                             double clearance) {
    std::vector<cplx> out{from};
    route_recursive(from, to, avoid, clearance, out, 0);
    return out;
}

namespace {

cplx newton_y(const CurveSpec& c, const cplx& x, cplx y) {
    for (int it = 0; it < 12; ++it) {
        cplx yr1 = 1.0;
        for (int k = 0; k < c.r - 1; ++k) yr1 *= y;
        cplx res = yr1 * y - c.f(x);
        cplx step = res / ((double)c.r * yr1);
        y -= step;
        if (std::abs(step) < 1e-14 * (1.0 + std::abs(y))) return y;
    }
    throw QuadratureFailure("continue_y: Newton projection did not converge");
}

}  // namespace

cplx continue_y_segment(const CurveSpec& c, const cplx& x0, const cplx& y0, const cplx& x1) {
    double sheet_gap = 2.0 * std::sin(kPi / c.r);
    cplx x = x0, y = y0;
    double t = 0.0, h = 1.0;
    int guard = 0;
    while (t < 1.0) {
        if (++guard > 100000) throw QuadratureFailure("continue_y: too many substeps");
        double step = std::min(h, 1.0 - t);
        cplx xn = x0 + (t + step) * (x1 - x0);
        bool ok = true;
        cplx yn = y;
        try {
            yn = newton_y(c, xn, y);
        } catch (const QuadratureFailure&) {
            ok = false;
        }
        if (ok && std::abs(yn - y) < 0.3 * std::abs(yn) * sheet_gap + 1e-14) {
            t += step;
            x = xn;
            y = yn;
            h = std::min(1.0, h * 1.7);
        } else {
            h *= 0.5;
            if (h < 1e-9) throw QuadratureFailure("continue_y: step underflow near branch point");
        }
    }
    return y;
}

cplx continue_y(const CurveSpec& c, const std::vector<cplx>& xpath, const cplx& y_start) {
    cplx y = y_start;
    for (size_t i = 0; i + 1 < xpath.size(); ++i)
        y = continue_y_segment(c, xpath[i], y, xpath[i + 1]);
    return y;
}

namespace {

struct SegmentIntegrator {
    const CurveSpec& c;
    const IntegrandDx& f;
    int dim;
    double tol;
    int max_depth;

    Vec quad(const cplx& x0, const cplx& y0, const cplx& x1, cplx* y_out, int order) const {
        const QuadRule& q = gauss_legendre(order);
        cplx mid = 0.5 * (x0 + x1), half = 0.5 * (x1 - x0);
        Vec acc = Vec::Zero(dim);
        cplx yprev = y0;
        cplx xprev = x0;
        for (int k = 0; k < order; ++k) {
            cplx xk = mid + q.x[k] * half;
            cplx yk = continue_y_segment(c, xprev, yprev, xk);
            acc += q.w[k] * f(xk, yk);
            xprev = xk;
            yprev = yk;
        }
        if (y_out) *y_out = continue_y_segment(c, xprev, yprev, x1);
        return half * acc;
    }

    Vec go(const cplx& x0, const cplx& y0, const cplx& x1, cplx* y_out, int depth) const {
        cplx ye;
        Vec whole = quad(x0, y0, x1, &ye, 24);
        cplx xm = 0.5 * (x0 + x1);
        cplx ym;
        Vec left = quad(x0, y0, xm, &ym, 24);
        Vec right = quad(xm, ym, x1, &ye, 24);
        Vec fine = left + right;
        double err = (whole - fine).cwiseAbs().maxCoeff();
        double scale = 1.0 + fine.cwiseAbs().maxCoeff();
        if (err < tol * scale) {
            if (y_out) *y_out = ye;
            return fine;
        }
        if (depth >= max_depth)
            throw QuadratureFailure("integrate_polyline: refinement limit reached");
        Vec a = go(x0, y0, xm, &ym, depth + 1);
        Vec b = go(xm, ym, x1, y_out, depth + 1);
        return a + b;
    }
};

}  // namespace

Vec integrate_polyline(const CurveSpec& c, const IntegrandDx& f, int dim,
                       const std::vector<cplx>& xpath, const cplx& y_start, double tol,
                       cplx* y_end, int max_depth) {
    SegmentIntegrator si{c, f, dim, tol, max_depth};
    Vec acc = Vec::Zero(dim);
    cplx y = y_start;
    for (size_t i = 0; i + 1 < xpath.size(); ++i) {
        cplx ye;
        acc += si.go(xpath[i], y, xpath[i + 1], &ye, 0);
        y = ye;
    }
    if (y_end) *y_end = y;
    return acc;
}

Vec integrate_polyline_fixed(const CurveSpec& c, const IntegrandDx& f, int dim,
                             const std::vector<cplx>& xpath, const cplx& y_start, int nodes,
                             cplx* y_end) {
    const QuadRule& rule = gauss_legendre(nodes);
    Vec acc = Vec::Zero(dim);
    cplx y = y_start;
    for (size_t i = 0; i + 1 < xpath.size(); ++i) {
        const cplx a = xpath[i], b = xpath[i + 1];
        const cplx half = 0.5 * (b - a), mid = 0.5 * (a + b);
        cplx xprev = a, yprev = y;
        for (int q = 0; q < nodes; ++q) {
            const cplx x = mid + rule.x[q] * half;
            const cplx yq = continue_y_segment(c, xprev, yprev, x);
            acc += (rule.w[q] * half) * f(x, yq);
            xprev = x;
            yprev = yq;
        }
        y = continue_y_segment(c, xprev, yprev, b);
    }
    if (y_end) *y_end = y;
    return acc;
}

cplx sheet_basepoint(const CurveSpec& c) {
    return cplx(2.0 * c.branch_scale(), 0.0);
}

double default_clearance(const CurveSpec& c) {
    auto b = c.branch_x();
    double sep = 1e300;
    for (size_t i = 0; i < b.size(); ++i)
        for (size_t j = i + 1; j < b.size(); ++j) sep = std::min(sep, std::abs(b[i] - b[j]));
    return std::min(0.08 * c.branch_scale(), 0.3 * sep);
}

std::vector<AffinePoint> lift_points(const CurveSpec& c, const cplx& x) {
    double scale = 1.0 + std::abs(x);
    if (std::abs(c.f(x)) < 1e-10 * std::pow(scale, c.s))
        throw BranchPoint("lift_points: x is a branch point");
    cplx x0 = sheet_basepoint(c);
    cplx y0 = std::pow(c.f(x0), 1.0 / c.r);  // principal root defines sheet 0
    std::vector<cplx> path = route_path(x0, x, c.branch_x(), default_clearance(c));
    cplx y = continue_y(c, path, y0);
    std::vector<AffinePoint> lifts;
    cplx z = c.zeta();
    cplx factor = 1.0;
    for (int j = 0; j < c.r; ++j) {
        lifts.push_back(AffinePoint{x, factor * y, j});
        factor *= z;
    }
    return lifts;
}

int sheet_of(const CurveSpec& c, const cplx& x, const cplx& y) {
    auto lifts = lift_points(c, x);
    int best = 0;
    double bd = 1e300;
    for (const auto& p : lifts) {
        double d = std::abs(p.y - y);
        if (d < bd) {
            bd = d;
            best = p.sheet;
        }
    }
    return best;
}

}  // namespace sigmacurve
