#include "doctest.h"

#include <cmath>
#include <random>

#include "sigmacurve/abel.hpp"
#include "sigmacurve/errors.hpp"

using namespace sigmacurve;

namespace {

CurveSpec hyp5() {
    return build_curve(2, 5, {cplx(0.2, 0.1), cplx(0.0), cplx(-0.4), cplx(0.3), cplx(1.0)});
}

CurveSpec trig34() {
    return build_curve(3, 4, {cplx(0.0), cplx(0.3), cplx(-0.7), cplx(1.1)});
}

}  // namespace

TEST_CASE("abel map leading order at infinity matches the coordinate weights") {
    for (const CurveSpec& c : {hyp5(), trig34()}) {
        const auto pd = curve_periods(c, {});
        const AbelMap abel(pd);
        const YoungDiagramData yd = young_data(c);
        const double R = 40.0 * c.branch_scale();
        const cplx x = R * std::exp(kI * 0.7);
        const cplx y = lift_points(c, x)[0].y;
        const Vec w = abel(x, y);
        const cplx t = std::exp(-std::log(x) / static_cast<double>(c.r));
        // the lift above may sit on any sheet; compare against the best zeta twist
        for (int i = 0; i < c.genus(); ++i) {
            const int m = yd.hook_weights[i];
            double best = 1e300;
            cplx rot = 1.0;
            for (int k = 0; k < c.r; ++k) {
                const cplx lead = -std::pow(rot * t, m) / static_cast<double>(m);
                best = std::min(best, std::abs(w[i] / lead - 1.0));
                rot *= c.zeta();
            }
            CHECK(best < 5e-2);
        }
    }
}

TEST_CASE("abel map is path independent modulo the period lattice") {
    for (const CurveSpec& c : {hyp5(), trig34()}) {
        const auto pd = curve_periods(c, {});
        const AbelMap abel(pd);
        std::mt19937_64 rng(91);
        std::uniform_real_distribution<double> u(-1.2, 1.2);
        for (int trial = 0; trial < 5; ++trial) {
            const cplx x(u(rng), u(rng));
            const auto lifts = lift_points(c, x);
            const Vec wa = abel(x, lifts[1].y);
            // an independent route: far series anchor on the opposite side
            const cplx far = 35.0 * c.branch_scale() * std::exp(kI * (2.1 + 0.4 * trial));
            const IntegrandDx f = [&](const cplx& xx, const cplx& yy) {
                Vec v(c.genus());
                cplx yp = 1.0;
                for (int j = 0; j + 1 < c.r; ++j) yp *= yy;
                for (int i = 0; i < c.genus(); ++i)
                    v[i] = pd.basis.eval(i, xx, yy) / (static_cast<double>(c.r) * yp);
                return v;
            };
            const auto path = route_path(far, x, c.branch_x(), default_clearance(c));
            bool matched = false;
            for (const AffinePoint& al : lift_points(c, far)) {
                cplx y_end;
                const Vec leg = integrate_polyline(c, f, c.genus(), path, al.y, 1e-11, &y_end);
                if (std::abs(y_end - lifts[1].y) > 1e-6 * (1.0 + std::abs(y_end))) continue;
                matched = true;
                CHECK(abel.lattice_distance(wa - abel(far, al.y) - leg) < 1e-7);
                break;
            }
            CHECK(matched);
        }
    }
}

TEST_CASE("fiber sums vanish modulo the period lattice") {
    for (const CurveSpec& c : {hyp5(), trig34()}) {
        const auto pd = curve_periods(c, {});
        const AbelMap abel(pd);
        std::mt19937_64 rng(92);
        std::uniform_real_distribution<double> u(-1.5, 1.5);
        for (int trial = 0; trial < 4; ++trial) {
            const cplx x(u(rng), u(rng));
            Vec sum = Vec::Zero(c.genus());
            for (const AffinePoint& p : lift_points(c, x)) sum += abel(p.x, p.y);
            CHECK(abel.lattice_distance(sum) < 1e-7);
        }
    }
}

TEST_CASE("lattice reduction inverts lattice shifts") {
    const auto pd = curve_periods(hyp5(), {});
    const AbelMap abel(pd);
    Vec w(2);
    w << cplx(0.012, -0.007), cplx(-0.031, 0.022);
    const Vec shifted =
        w + 2.0 * (3.0 * pd.omega1.col(0) - 2.0 * pd.omega1.col(1)) + 2.0 * pd.omega2.col(1);
    const Vec back = abel.reduce_mod_lattice(shifted);
    CHECK((back - w).cwiseAbs().maxCoeff() < 1e-9);
    // w itself is small enough to be its own reduction
    CHECK((abel.reduce_mod_lattice(w) - w).cwiseAbs().maxCoeff() < 1e-12);
}
