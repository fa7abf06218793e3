#include "doctest.h"

#include <random>

#include "sigmacurve/abel.hpp"
#include "sigmacurve/errors.hpp"
#include "sigmacurve/fs.hpp"
#include "sigmacurve/periods.hpp"
#include "sigmacurve/sigma.hpp"

using namespace sigmacurve;

namespace {

CurveSpec hyp5() { return build_curve(2, 5, {cplx(0.2, 0.1), 0.0, -0.4, 0.3, 1.0}); }
CurveSpec hyp7() {
    return build_curve(2, 7, {0.1, -0.2, cplx(0.3, 0.1), 0.0, -0.5, 0.2, 1.0});
}
CurveSpec trig34() { return build_curve(3, 4, {0.0, 0.3, -0.7, 1.1}); }

AffinePoint random_point(const CurveSpec& c, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double rad = c.branch_scale() * (0.8 + 0.9 * unif(rng));
    const cplx x = rad * std::exp(cplx(0.0, 2.0 * kPi * unif(rng)));
    cplx y = std::pow(c.f(x), 1.0 / c.r);
    const int sheet = (int)(unif(rng) * c.r);
    for (int k = 0; k < sheet; ++k) y *= c.zeta();
    return AffinePoint{x, y, sheet};
}

std::vector<int> zero_based(const std::vector<int>& idx) {
    std::vector<int> out;
    for (int i : idx) out.push_back(i - 1);
    return out;
}

}  // namespace

TEST_CASE("interpolation determinants reduce to Vandermonde for pure x columns") {
    CurveSpec c = hyp5();
    std::mt19937_64 rng(11);
    std::vector<AffinePoint> pts = {random_point(c, rng), random_point(c, rng),
                                    random_point(c, rng)};
    CHECK(std::abs(fs_psi(c, {pts[0], pts[1]}) - (pts[1].x - pts[0].x)) < 1e-12);
    CHECK(std::abs(fs_psi(c, pts) - fs_vandermonde(pts)) < 1e-10);

    std::vector<AffinePoint> doubled = {pts[0], pts[1], pts[0]};
    CHECK(std::abs(fs_psi(c, doubled)) < 1e-12);
}

TEST_CASE("deleted-column determinants expand the bordered determinant") {
    CurveSpec c = trig34();
    std::mt19937_64 rng(12);
    std::vector<AffinePoint> pts = {random_point(c, rng), random_point(c, rng),
                                    random_point(c, rng)};
    AffinePoint p = random_point(c, rng);
    MonomialBasis basis = monomial_basis(c, 4);

    std::vector<AffinePoint> all = pts;
    all.push_back(p);
    const int n = (int)pts.size();
    cplx expansion = 0.0;
    for (int l = 0; l <= n; ++l) {
        const double sign = (n + l) % 2 == 0 ? 1.0 : -1.0;
        expansion += sign * basis.eval(l, p.x, p.y) * fs_determinant(c, pts, l);
    }
    const cplx direct = fs_psi(c, all);
    CHECK(std::abs(expansion - direct) < 1e-9 * (1.0 + std::abs(direct)));
}

TEST_CASE("determinants are antisymmetric in the points") {
    CurveSpec c = hyp7();
    std::mt19937_64 rng(13);
    std::vector<AffinePoint> pts = {random_point(c, rng), random_point(c, rng),
                                    random_point(c, rng)};
    std::vector<AffinePoint> swapped = {pts[1], pts[0], pts[2]};
    for (int l = 0; l <= 3; ++l) {
        const cplx a = fs_determinant(c, pts, l);
        const cplx b = fs_determinant(c, swapped, l);
        CHECK(std::abs(a + b) < 1e-10 * (1.0 + std::abs(a)));
    }
}

TEST_CASE("the interpolation function vanishes on its divisor with unit leading term") {
    CurveSpec c = hyp7();
    std::mt19937_64 rng(14);
    std::vector<AffinePoint> pts = {random_point(c, rng), random_point(c, rng),
                                    random_point(c, rng)};
    MuFunction mu(c, pts);
    for (const auto& p : pts) CHECK(std::abs(mu(p)) < 1e-9);

    MuFunction mu2(c, {pts[0], pts[1]});
    CHECK(std::abs(mu2.mu_coefficient(1) - (pts[0].x + pts[1].x)) < 1e-10);
    CHECK(std::abs(mu2.mu_coefficient(0) - pts[0].x * pts[1].x) < 1e-10);
}

TEST_CASE("a doubled point imposes tangency along the curve") {
    CurveSpec c = hyp5();
    std::mt19937_64 rng(15);
    AffinePoint p = random_point(c, rng);
    MuFunction mu(c, {p, p});
    CHECK(std::abs(mu.coeff()[1] + 2.0 * p.x) < 1e-10);
    CHECK(std::abs(mu.coeff()[0] - p.x * p.x) < 1e-10);
}

TEST_CASE("special divisors are rejected") {
    CurveSpec c = hyp5();
    std::mt19937_64 rng(16);
    AffinePoint p = random_point(c, rng);
    AffinePoint q{p.x, -p.y, -1};
    CHECK_THROWS_AS(MuFunction(c, {p, q}), DegenerateConfiguration);
}

TEST_CASE("the residual divisor of one point is the rest of its fiber") {
    std::mt19937_64 rng(17);
    for (CurveSpec c : {hyp5(), trig34()}) {
        AffinePoint p = random_point(c, rng);
        auto res = residual_divisor(c, {p});
        auto expect = involution_divisor(c, p);
        REQUIRE(res.size() == expect.size());
        for (const auto& e : expect) {
            double best = 1e300;
            for (const auto& r : res) best = std::min(best, std::abs(r.x - e.x) + std::abs(r.y - e.y));
            CHECK(best < 1e-7);
        }
    }
}

TEST_CASE("input plus residual divisor has lattice-trivial Abel sum") {
    std::mt19937_64 rng(18);
    for (CurveSpec c : {hyp5(), trig34()}) {
        PeriodData pd = curve_periods(c);
        AbelMap w(pd);
        std::vector<AffinePoint> pts = {random_point(c, rng), random_point(c, rng)};
        auto res = residual_divisor(c, pts);
        CHECK((int)res.size() == monomial_basis(c, c.genus()).order(2) - 2);
        Vec total = Vec::Zero(c.genus());
        for (const auto& p : pts) total += w(p);
        for (const auto& p : res) total += w(p);
        CHECK(w.lattice_distance(total) < 1e-7);
    }
}

TEST_CASE("first-stratum sigma ratios recover the x coordinate") {
    std::mt19937_64 rng(19);
    for (CurveSpec c : {hyp5(), hyp7(), trig34()}) {
        PeriodData pd = curve_periods(c);
        AbelMap w(pd);
        SigmaFunction sigma(pd);
        const auto top = zero_based(sigma.diagram().natural_set(1));
        const auto swapped = zero_based(sigma.diagram().natural_set_swap(1, 1));
        for (int trial = 0; trial < 5; ++trial) {
            AffinePoint p = random_point(c, rng);
            Jet j = sigma.jet(w(p), 2);
            const cplx ratio = -j.dset(swapped) / j.dset(top);
            CHECK(std::abs(ratio - p.x) < 1e-7 * (1.0 + std::abs(p.x)));
        }
    }
}

TEST_CASE("second-stratum sigma ratios match the interpolation coefficients") {
    std::mt19937_64 rng(20);
    for (CurveSpec c : {hyp7(), trig34()}) {
        PeriodData pd = curve_periods(c);
        AbelMap w(pd);
        SigmaFunction sigma(pd);
        const auto top = zero_based(sigma.diagram().natural_set(2));
        for (int trial = 0; trial < 3; ++trial) {
            std::vector<AffinePoint> pts = {random_point(c, rng), random_point(c, rng)};
            MuFunction mu(c, pts);
            Jet j = sigma.jet(w(pts[0]) + w(pts[1]), 2);
            for (int i = 1; i <= 2; ++i) {
                const auto swapped = zero_based(sigma.diagram().natural_set_swap(2, i));
                const double sign = (2 - i + 1) % 2 == 0 ? 1.0 : -1.0;
                const cplx lhs = j.dset(swapped) / j.dset(top);
                const cplx rhs = sign * mu.mu_coefficient(i - 1);
                CHECK(std::abs(lhs - rhs) < 1e-6 * (1.0 + std::abs(rhs)));
            }
        }
    }
}

TEST_CASE("the stratum derivative of the coordinate ratio follows the basis differentials") {
    CurveSpec c = trig34();
    PeriodData pd = curve_periods(c);
    AbelMap w(pd);
    SigmaFunction sigma(pd);
    std::mt19937_64 rng(21);
    MonomialBasis basis = monomial_basis(c, c.genus());
    for (int trial = 0; trial < 3; ++trial) {
        AffinePoint p = random_point(c, rng);
        Jet j = sigma.jet(w(p), 2);
        const cplx s1 = j.d1(0), s2 = j.d1(1);
        Vec grad(c.genus());
        for (int i = 0; i < c.genus(); ++i)
            grad(i) = (j.d2(0, i) * s2 - s1 * j.d2(1, i)) / (s2 * s2);
        cplx along = 0.0;
        for (int i = 0; i < c.genus(); ++i) along += grad(i) * basis.eval(i, p.x, p.y);
        const cplx dlast = along / basis.eval(c.genus() - 1, p.x, p.y);
        CHECK(std::abs(dlast + 3.0 * p.y) < 1e-6 * (1.0 + std::abs(p.y)));
    }
}
