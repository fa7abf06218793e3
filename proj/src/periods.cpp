#include "sigmacurve/periods.hpp"

#include <algorithm>
#include <cmath>

#include "sigmacurve/contour.hpp"
#include "sigmacurve/errors.hpp"
#include "sigmacurve/klein.hpp"

namespace sigmacurve {

namespace {

bool positive_definite_imag(const Mat& tau) {
    const RMat im = tau.imag();
    const RMat sym = 0.5 * (im + im.transpose());
    Eigen::SelfAdjointEigenSolver<RMat> es(sym);
    return es.eigenvalues().minCoeff() > 0.0;
}

struct Blocks {
    Mat w1, w2, e1, e2;
};

Blocks assemble(const Mat& P, const IMat& combo, int g) {
    const Mat B = P * combo.cast<double>().cast<cplx>().transpose();
    Blocks out;
    out.w1 = 0.5 * B.topLeftCorner(g, g);
    out.w2 = 0.5 * B.topRightCorner(g, g);
    out.e1 = 0.5 * B.bottomLeftCorner(g, g);
    out.e2 = 0.5 * B.bottomRightCorner(g, g);
    return out;
}

// Probe points for the second-kind periods: lifts over a circle that clears
// every integration path, at staggered angles.  The cycle periods X of the
// dual second-kind basis solve V X = W with V_{ij} = phi_{j-1}(P_i)/(r y_i^{r-1})
// and W_{ic} the period of B(P_i, .) over cycle c, since the holomorphic
// correction B - sum_j nu_j tnu_j integrates to zero over closed cycles.
std::vector<AffinePoint> probe_points(const CurveSpec& c, const HomologyBasis& hb,
                                      int attempt, Mat* V) {
    const int g = c.genus();
    double far = c.branch_scale();
    for (const CyclePath& cyc : hb.candidates)
        for (const cplx& x : cyc.x) far = std::max(far, std::abs(x));
    const double radius = 2.2 * far * (1.0 + 0.25 * attempt);
    std::vector<AffinePoint> probes(g);
    for (int i = 0; i < g; ++i) {
        const double ang = 2.0 * kPi * (i + 0.17 + 0.37 * attempt) / (g + 0.5);
        const cplx x = radius * std::exp(kI * ang);
        probes[i] = lift_points(c, x)[0];
    }
    V->resize(g, g);
    const MonomialBasis mb = monomial_basis(c, g);
    for (int i = 0; i < g; ++i) {
        cplx yp = 1.0;
        for (int j = 0; j + 1 < c.r; ++j) yp *= probes[i].y;
        const cplx den = static_cast<double>(c.r) * yp;
        for (int j = 0; j < g; ++j) (*V)(i, j) = mb.eval(j, probes[i].x, probes[i].y) / den;
    }
    return probes;
}

}  // namespace

double legendre_residual(const Mat& w1, const Mat& w2, const Mat& e1, const Mat& e2) {
    const int g = static_cast<int>(w1.rows());
    Mat M(2 * g, 2 * g), J = Mat::Zero(2 * g, 2 * g);
    M.topLeftCorner(g, g) = 2.0 * w1;
    M.topRightCorner(g, g) = 2.0 * w2;
    M.bottomLeftCorner(g, g) = 2.0 * e1;
    M.bottomRightCorner(g, g) = 2.0 * e2;
    J.topRightCorner(g, g) = -Mat::Identity(g, g);
    J.bottomLeftCorner(g, g) = Mat::Identity(g, g);
    const Mat R = M * J * M.transpose() - 2.0 * kPi * kI * J;
    return R.cwiseAbs().maxCoeff();
}

PeriodData curve_periods(const CurveSpec& c, const PeriodOptions& opt) {
    const int g = c.genus();
    PeriodData pd;
    pd.curve = c;
    pd.basis = monomial_basis(c, 3 * g + 2);
    pd.homology = homology_basis(c, opt.seed);

    Mat V;
    std::vector<AffinePoint> probes;
    for (int attempt = 0;; ++attempt) {
        probes = probe_points(c, pd.homology, attempt, &V);
        Eigen::FullPivLU<Mat> lu(V);
        if (lu.isInvertible() && lu.rcond() > 1e-10) break;
        if (attempt >= 4) throw DegenerateConfiguration("probe system singular");
    }
    const Eigen::FullPivLU<Mat> Vlu(V);

    const IntegrandDx f = [&](const cplx& x, const cplx& y) {
        Vec v(2 * g);
        cplx yp = 1.0;
        for (int j = 0; j + 1 < c.r; ++j) yp *= y;
        const cplx den = static_cast<double>(c.r) * yp;
        for (int i = 0; i < g; ++i) v[i] = pd.basis.eval(i, x, y) / den;
        for (int i = 0; i < g; ++i)
            v[g + i] = bidifferential_dxdx(c, probes[i].x, probes[i].y, x, y);
        return v;
    };

    const int K = static_cast<int>(pd.homology.candidates.size());
    Mat P(2 * g, K);
    for (int j = 0; j < K; ++j) {
        const CyclePath& cyc = pd.homology.candidates[j];
        cplx yend;
        const Vec I = opt.fixed_rule > 0
                          ? integrate_polyline_fixed(c, f, 2 * g, cyc.x, cyc.y0, opt.fixed_rule, &yend)
                          : integrate_polyline(c, f, 2 * g, cyc.x, cyc.y0, opt.tol, &yend);
        if (std::abs(yend - cyc.y0) > 1e-7 * (1.0 + std::abs(cyc.y0)))
            throw HomologyFailure("period cycle failed to close");
        P.col(j) = I;
    }
    P.bottomRows(g) = Vlu.solve(P.bottomRows(g));

    Blocks blk = assemble(P, pd.homology.combo, g);
    Mat tau = blk.w1.fullPivLu().solve(blk.w2);
    if (!positive_definite_imag(tau)) {
        const IMat flipped = symplectic_reduce(-pd.homology.inter, g);
        blk = assemble(P, flipped, g);
        tau = blk.w1.fullPivLu().solve(blk.w2);
        if (!positive_definite_imag(tau))
            throw NonPositiveImaginaryPart("Im tau indefinite in both orientations");
        pd.homology.combo = flipped;
        pd.orientation_flipped = true;
    }

    pd.omega1 = blk.w1;
    pd.omega2 = blk.w2;
    pd.eta1 = blk.e1;
    pd.eta2 = blk.e2;
    pd.tau = tau;
    pd.omega1_inv = blk.w1.fullPivLu().inverse();
    const Mat X = blk.e1 * pd.omega1_inv;
    pd.gamma = 0.5 * (X + X.transpose());
    pd.legendre_residual = legendre_residual(blk.w1, blk.w2, blk.e1, blk.e2);
    return pd;
}

}  // namespace sigmacurve
