#include "doctest.h"

#include <cmath>

#include "sigmacurve/contour.hpp"
#include "sigmacurve/curve.hpp"
#include "sigmacurve/errors.hpp"

using namespace sigmacurve;

namespace {

CurveSpec elliptic() { return build_curve(2, 3, {0.0, -1.0, 0.0}); }
CurveSpec trig34() { return build_curve(3, 4, {0.0, 0.3, -0.7, 1.1}); }

std::vector<cplx> circle_path(const cplx& center, double radius, int segments, double phase = 0.0) {
    std::vector<cplx> p;
    for (int k = 0; k <= segments; ++k)
        p.push_back(center + std::polar(radius, phase + 2.0 * kPi * k / segments));
    return p;
}

}  // namespace

TEST_CASE("Gauss-Legendre rules integrate polynomials exactly") {
    const QuadRule& q = gauss_legendre(16);
    double s10 = 0.0, s31 = 0.0, w = 0.0;
    for (int k = 0; k < 16; ++k) {
        s10 += q.w[k] * std::pow(q.x[k], 10);
        s31 += q.w[k] * std::pow(q.x[k], 31);
        w += q.w[k];
    }
    CHECK(std::abs(w - 2.0) < 1e-14);
    CHECK(std::abs(s10 - 2.0 / 11.0) < 1e-14);
    CHECK(std::abs(s31) < 1e-14);
}

TEST_CASE("route_path keeps clearance from interior obstacles") {
    std::vector<cplx> avoid{cplx(0.0, 0.0), cplx(1.0, 0.05)};
    auto path = route_path(cplx(-2.0, 0.0), cplx(3.0, 0.0), avoid, 0.3);
    REQUIRE(path.size() >= 3);
    CHECK(std::abs(path.front() - cplx(-2.0, 0.0)) < 1e-14);
    CHECK(std::abs(path.back() - cplx(3.0, 0.0)) < 1e-14);
    for (size_t i = 0; i + 1 < path.size(); ++i) {
        for (const cplx& b : avoid) {
            for (int k = 0; k <= 20; ++k) {
                cplx z = path[i] + (path[i + 1] - path[i]) * (k / 20.0);
                CHECK(std::abs(z - b) > 0.29);
            }
        }
    }
}

TEST_CASE("fiber continuation reproduces cyclic monodromy") {
    CurveSpec e = elliptic();
    cplx y0 = std::sqrt(cplx(1.5 * 1.5 * 1.5 - 1.5));
    // loop around the single branch point x = 1 flips the square root
    auto loop1 = circle_path(1.0, 0.5, 48);
    cplx yb = continue_y(e, loop1, continue_y_segment(e, 1.5, y0, loop1.front()));
    cplx yfwd = continue_y_segment(e, 1.5, y0, loop1.front());
    CHECK(std::abs(yb + yfwd) < 1e-9);

    // loop around two branch points (0 and 1) is closed
    auto loop2 = circle_path(0.5, 0.75, 64);
    cplx ystart = continue_y_segment(e, 1.5, y0, loop2.front());
    cplx yend = continue_y(e, loop2, ystart);
    CHECK(std::abs(yend - ystart) < 1e-9);

    // trigonal: a loop around any single branch point multiplies y by zeta
    CurveSpec t = trig34();
    cplx z = t.zeta();
    for (const cplx& b : t.branch_x()) {
        double rad = 0.25 * default_clearance(t) / 0.08;
        auto loop = circle_path(b, std::max(0.15, rad), 64);
        cplx ys = lift_points(t, loop.front())[0].y;
        cplx ye = continue_y(t, loop, ys);
        CHECK(std::abs(ye - z * ys) < 1e-8 * (1.0 + std::abs(ys)));
    }
}

TEST_CASE("adaptive polyline integration against an exact antiderivative") {
    CurveSpec e = elliptic();
    // (3x^2 - 1)/(2y) dx integrates to y along the curve
    IntegrandDx f = [&](const cplx& x, const cplx& y) {
        Vec v(1);
        v(0) = (3.0 * x * x - 1.0) / (2.0 * y);
        return v;
    };
    cplx y2 = std::sqrt(cplx(6.0));
    std::vector<cplx> seg{cplx(2.0), cplx(4.0)};
    cplx yend;
    Vec I = integrate_polyline(e, f, 1, seg, y2, 1e-12, &yend);
    CHECK(std::abs(yend - std::sqrt(cplx(60.0))) < 1e-10);
    CHECK(std::abs(I(0) - (std::sqrt(cplx(60.0)) - y2)) < 1e-10);
}

TEST_CASE("cycle period around a branch pair matches a real-segment oracle") {
    CurveSpec e = elliptic();
    IntegrandDx f = [&](const cplx& x, const cplx& y) {
        Vec v(1);
        v(0) = 1.0 / (2.0 * y);
        return v;
    };
    auto loop = circle_path(0.5, 0.8, 96);
    cplx ys = lift_points(e, loop.front())[0].y;
    cplx yend;
    Vec I = integrate_polyline(e, f, 1, loop, ys, 1e-12, &yend);
    CHECK(std::abs(yend - ys) < 1e-9);

    // integral of dx/sqrt(x - x^3) over [0,1] via x = sin^2(theta):
    // 2 * int_0^{pi/2} dtheta / sqrt(1 + sin^2 theta)
    const QuadRule& q = gauss_legendre(64);
    double oracle = 0.0;
    for (int k = 0; k < 64; ++k) {
        double th = 0.25 * kPi * (q.x[k] + 1.0);
        oracle += 0.25 * kPi * q.w[k] * 2.0 / std::sqrt(1.0 + std::sin(th) * std::sin(th));
    }
    // the loop integral of dx/(2y) equals the cut integral up to orientation
    CHECK(std::abs(std::abs(I(0)) - oracle) < 1e-9);
    CHECK(std::abs(I(0).real()) < 1e-9);  // purely imaginary for this cut
}

TEST_CASE("lift points and sheet labels") {
    CurveSpec e = elliptic();
    auto l = lift_points(e, 2.0);
    REQUIRE(l.size() == 2);
    CHECK(std::abs(l[0].y - std::sqrt(6.0)) < 1e-10);
    CHECK(std::abs(l[1].y + std::sqrt(6.0)) < 1e-10);
    CHECK(l[0].sheet == 0);
    CHECK(sheet_of(e, 2.0, -std::sqrt(6.0)) == 1);

    CurveSpec t = trig34();
    cplx xq(0.37, 0.81);
    auto lt = lift_points(t, xq);
    REQUIRE(lt.size() == 3);
    cplx z = t.zeta();
    CHECK(std::abs(lt[1].y - z * lt[0].y) < 1e-10);
    CHECK(std::abs(lt[2].y - z * z * lt[0].y) < 1e-10);
    for (const auto& p : lt)
        CHECK(std::abs(p.y * p.y * p.y - t.f(xq)) < 1e-9);

    CHECK_THROWS_AS(lift_points(e, 1.0), BranchPoint);
}
