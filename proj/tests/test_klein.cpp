#include "doctest.h"

#include <cmath>
#include <random>

#include "sigmacurve/contour.hpp"
#include "sigmacurve/curve.hpp"
#include "sigmacurve/errors.hpp"
#include "sigmacurve/klein.hpp"

using namespace sigmacurve;

namespace {

std::vector<cplx> random_lambda(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cplx> lam(n);
    for (auto& l : lam) l = cplx(u(rng), u(rng));
    return lam;
}

cplx random_point(double scale, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    return scale * cplx(u(rng), u(rng));
}

}  // namespace

TEST_CASE("bidifferential numerator: diagonal and swap symmetry") {
    std::mt19937_64 rng(71);
    for (const CurveSpec& c : {build_curve(2, 5, random_lambda(5, 11)),
                               build_curve(2, 7, random_lambda(7, 12)),
                               build_curve(3, 4, random_lambda(4, 13))}) {
        for (int trial = 0; trial < 8; ++trial) {
            const cplx x1 = random_point(2.0, rng), x2 = random_point(2.0, rng);
            const cplx y1 = lift_points(c, x1)[0].y, y2 = lift_points(c, x2)[1].y;

            const cplx h12 = klein_numerator(c, x1, y1, x2, y2);
            const cplx h21 = klein_numerator(c, x2, y2, x1, y1);
            CHECK(std::abs(h12 - h21) < 1e-12 * (1.0 + std::abs(h12)));

            cplx diag = klein_numerator(c, x1, y1, x1, y1);
            cplx want = c.f(x1);
            for (int j = 0; j < 2 * c.r - 2 - c.r; ++j) want *= y1;
            want *= static_cast<double>(c.r * c.r);
            CHECK(std::abs(diag - want) < 1e-11 * (1.0 + std::abs(want)));
        }
    }
}

TEST_CASE("bidifferential numerator: second-order zero on conjugate loci") {
    std::mt19937_64 rng(72);
    for (const CurveSpec& c : {build_curve(2, 5, random_lambda(5, 21)),
                               build_curve(3, 4, random_lambda(4, 22))}) {
        const cplx zeta = c.zeta();
        for (int j = 1; j < c.r; ++j) {
            for (int trial = 0; trial < 4; ++trial) {
                const cplx x = random_point(2.0, rng);
                const cplx y = lift_points(c, x)[0].y;
                cplx rot = 1.0;
                for (int k = 0; k < j; ++k) rot *= zeta;

                // exact zero on the locus itself
                CHECK(std::abs(klein_numerator(c, x, y, x, rot * y)) < 1e-12);

                // order two along the curve: value at distance eps shrinks ~eps^2
                const cplx dir = random_point(1.0, rng) + cplx(1.3, 0.4);
                double prev = 0.0;
                for (int k = 0; k < 2; ++k) {
                    const double eps = (k == 0) ? 1e-3 : 5e-4;
                    const cplx x2 = x + eps * dir;
                    cplx y2 = 0.0;
                    double best = 1e300;
                    for (const AffinePoint& p : lift_points(c, x2)) {
                        if (std::abs(p.y - y) < best) {
                            best = std::abs(p.y - y);
                            y2 = p.y;
                        }
                    }
                    const double v = std::abs(klein_numerator(c, x, y, x2, rot * y2));
                    if (k == 0)
                        prev = v;
                    else
                        CHECK(v < 0.30 * prev);  // quadratic would give 0.25
                }
            }
        }
    }
}

TEST_CASE("bidifferential numerator: weight homogeneity") {
    std::mt19937_64 rng(73);
    const std::vector<cplx> lam = random_lambda(4, 31);
    const CurveSpec c = build_curve(3, 4, lam);
    const double t = 1.37;
    std::vector<cplx> scaled = lam;
    for (int k = 0; k < 4; ++k) scaled[k] *= std::pow(t, 3.0 * (k + 1));
    const CurveSpec cs = build_curve(3, 4, scaled);
    for (int trial = 0; trial < 6; ++trial) {
        const cplx x1 = random_point(1.5, rng), x2 = random_point(1.5, rng);
        const cplx y1 = lift_points(c, x1)[0].y, y2 = lift_points(c, x2)[1].y;
        const cplx a = klein_numerator(cs, std::pow(t, 3) * x1, std::pow(t, 4) * y1,
                                       std::pow(t, 3) * x2, std::pow(t, 4) * y2);
        const cplx b = std::pow(t, 16) * klein_numerator(c, x1, y1, x2, y2);
        CHECK(std::abs(a - b) < 1e-10 * (1.0 + std::abs(b)));
    }
}

TEST_CASE("bidifferential density: biresidue one near the diagonal") {
    const CurveSpec c = build_curve(3, 4, random_lambda(4, 41));
    const cplx x0(0.83, -0.41);
    const cplx y0 = lift_points(c, x0)[0].y;
    // B(P,Q) (x1-x2)^2 -> 1 as both points approach the same place
    for (double eps : {1e-3, 1e-4}) {
        const cplx x1 = x0 + eps, x2 = x0 - eps;
        cplx y1 = 0.0, y2 = 0.0;
        double b1 = 1e300, b2 = 1e300;
        for (const AffinePoint& p : lift_points(c, x1))
            if (std::abs(p.y - y0) < b1) b1 = std::abs(p.y - y0), y1 = p.y;
        for (const AffinePoint& p : lift_points(c, x2))
            if (std::abs(p.y - y0) < b2) b2 = std::abs(p.y - y0), y2 = p.y;
        const cplx v = bidifferential_dxdx(c, x1, y1, x2, y2) * (x1 - x2) * (x1 - x2);
        CHECK(std::abs(v - 1.0) < 20.0 * eps);
    }
}

TEST_CASE("bidifferential rejects unsupported covers") {
    std::vector<cplx> lam(5, 0.0);
    lam[4] = 1.0;
    const CurveSpec c = build_curve(3, 5, lam);
    CHECK_THROWS_AS(klein_numerator(c, 1.0, 1.0, 2.0, 2.0), UnsupportedFamily);
}
