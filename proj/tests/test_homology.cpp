#include <random>

#include "doctest.h"
#include "sigmacurve/contour.hpp"
#include "sigmacurve/errors.hpp"
#include "sigmacurve/homology.hpp"

using namespace sigmacurve;

namespace {

CurveSpec hyp_curve(int s) {
    std::vector<cplx> lambda(s, cplx(0.0));
    lambda[s - 2] = 1.0;
    lambda[s - 1] = 2.0;
    return build_curve(2, s, lambda);
}

CurveSpec trig34() {
    return build_curve(3, 4, {cplx(0.0), cplx(0.3), cplx(-0.7), cplx(1.1)});
}

IMat pad_symplectic(int g, int K) {
    IMat J = IMat::Zero(K, K);
    for (int i = 0; i < g; ++i) {
        J(2 * i, 2 * i + 1) = 1;
        J(2 * i + 1, 2 * i) = -1;
    }
    return J;
}

bool is_standard_form(const IMat& M, int g) {
    if (M.rows() != 2 * g || M.cols() != 2 * g) return false;
    for (int i = 0; i < 2 * g; ++i)
        for (int j = 0; j < 2 * g; ++j) {
            const int want = (j == i + g) ? 1 : (i == j + g ? -1 : 0);
            if (M(i, j) != want) return false;
        }
    return true;
}

CyclePath ellipse_cycle(const CurveSpec& c, const cplx& lo, const cplx& hi, double ax, double bx) {
    const cplx mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    CyclePath p;
    const int segs = 64;
    p.x.resize(segs + 1);
    for (int i = 0; i <= segs; ++i) {
        const double th = 2.0 * kPi * i / segs + 0.37;
        p.x[i] = mid + half * cplx(ax * std::cos(th), bx * std::sin(th));
    }
    p.x[segs] = p.x[0];
    p.y0 = lift_points(c, p.x[0])[0].y;
    return p;
}

}  // namespace

TEST_CASE("symplectic reduction recovers standard form from scrambled input") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int trial = 0; trial < 6; ++trial) {
        const int g = 1 + trial % 3;
        const int K = 2 * g + trial % 4;
        IMat C = pad_symplectic(g, K);
        Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic> U =
            Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>::Identity(K, K);
        std::uniform_int_distribution<int> row(0, K - 1);
        for (int step = 0; step < 30; ++step) {
            const int i = row(rng), j = row(rng);
            if (i == j) continue;
            U.row(i) += static_cast<long long>(coef(rng)) * U.row(j);
        }
        const Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic> scr =
            U * C.cast<long long>() * U.transpose();
        IMat Ci(K, K);
        for (int i = 0; i < K; ++i)
            for (int j = 0; j < K; ++j) {
                REQUIRE(std::llabs(scr(i, j)) < (1LL << 30));
                Ci(i, j) = static_cast<int>(scr(i, j));
            }
        const IMat T = symplectic_reduce(Ci, g);
        CHECK(is_standard_form(T * Ci * T.transpose(), g));
    }
}

TEST_CASE("symplectic reduction rejects defective intersection data") {
    IMat C2(2, 2);
    C2 << 0, 2, -2, 0;
    CHECK_THROWS_AS(symplectic_reduce(C2, 1), ReductionFailure);
    const IMat Z = IMat::Zero(4, 4);
    CHECK_THROWS_AS(symplectic_reduce(Z, 1), ReductionFailure);
}

TEST_CASE("adjacent branch-pair loops on an elliptic curve meet exactly once") {
    const auto c = build_curve(2, 3, {cplx(0.0), cplx(-1.0), cplx(0.0)});
    const auto A = ellipse_cycle(c, cplx(-1.0), cplx(0.0), 1.35, 0.5);
    const auto B = ellipse_cycle(c, cplx(0.0), cplx(1.0), 1.42, 0.45);
    const int ab = intersection_number(c, A, B);
    const int ba = intersection_number(c, B, A);
    CHECK(std::abs(ab) == 1);
    CHECK(ba == -ab);
}

TEST_CASE("homology basis for hyperelliptic curves") {
    for (int s : {3, 5, 9}) {
        CAPTURE(s);
        const auto c = s == 3 ? build_curve(2, 3, {cplx(0.0), cplx(-1.0), cplx(0.0)}) : hyp_curve(s);
        const auto basis = homology_basis(c, 11);
        const int g = c.genus();
        CHECK(basis.g == g);
        CHECK(static_cast<int>(basis.candidates.size()) == 2 * g);
        CHECK((basis.inter + basis.inter.transpose()).cwiseAbs().maxCoeff() == 0);
        CHECK(is_standard_form(basis.combo * basis.inter * basis.combo.transpose(), g));
    }
}

TEST_CASE("homology basis for the trigonal curve") {
    const auto c = trig34();
    const auto basis = homology_basis(c, 7);
    CHECK(basis.g == 3);
    CHECK(static_cast<int>(basis.candidates.size()) == 36);
    CHECK((basis.inter + basis.inter.transpose()).cwiseAbs().maxCoeff() == 0);
    CHECK(is_standard_form(basis.combo * basis.inter * basis.combo.transpose(), 3));
}
