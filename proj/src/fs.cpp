#include "sigmacurve/fs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sigmacurve/errors.hpp"

namespace sigmacurve {

namespace {

MonomialBasis basis_upto(const CurveSpec& c, int n) {
    return monomial_basis(c, std::max(n, c.genus()));
}

double point_gap(const AffinePoint& a, const AffinePoint& b) {
    return std::abs(a.x - b.x) + std::abs(a.y - b.y);
}

}  // namespace

cplx fs_determinant(const CurveSpec& c, const std::vector<AffinePoint>& pts, int drop) {
    const int n = (int)pts.size();
    if (n < 1) throw BadInput("fs_determinant: need at least one point");
    if (drop < 0 || drop > n) throw BadInput("fs_determinant: drop out of range");
    MonomialBasis basis = basis_upto(c, n);
    Mat a(n, n);
    for (int i = 0; i < n; ++i) {
        int col = 0;
        for (int k = 0; k <= n; ++k) {
            if (k == drop) continue;
            a(i, col++) = basis.eval(k, pts[i].x, pts[i].y);
        }
    }
    return a.determinant();
}

cplx fs_psi(const CurveSpec& c, const std::vector<AffinePoint>& pts) {
    return fs_determinant(c, pts, (int)pts.size());
}

cplx fs_vandermonde(const std::vector<AffinePoint>& pts) {
    cplx acc = 1.0;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) acc *= pts[j].x - pts[i].x;
    return acc;
}

MuFunction::MuFunction(const CurveSpec& c, const std::vector<AffinePoint>& pts)
    : curve_(c), basis_(basis_upto(c, (int)pts.size())), n_((int)pts.size()) {
    if (n_ < 1) throw BadInput("MuFunction: need at least one point");
    const double tol = 1e-10 * c.branch_scale();

    Mat a(n_, n_);
    Vec rhs(n_);
    int row = 0;
    for (int i = 0; i < n_; ++i) {
        int mult = 0;
        for (int j = 0; j < i; ++j)
            if (point_gap(pts[i], pts[j]) < tol) ++mult;
        if (mult >= 2) throw BadInput("MuFunction: point multiplicity above 2");
        if (mult == 1 && std::abs(pts[i].y) < tol)
            throw BranchPoint("MuFunction: tangency at a branch point");
        for (int k = 0; k < n_; ++k)
            a(row, k) = mult == 0 ? basis_.eval(k, pts[i].x, pts[i].y)
                                  : basis_.eval_dx(k, pts[i].x, pts[i].y, curve_);
        rhs(row) = mult == 0 ? -basis_.eval(n_, pts[i].x, pts[i].y)
                             : -basis_.eval_dx(n_, pts[i].x, pts[i].y, curve_);
        ++row;
    }

    Eigen::FullPivLU<Mat> lu(a);
    if (lu.rank() < n_)
        throw DegenerateConfiguration("MuFunction: special divisor, interpolation not unique");
    Vec sol = lu.solve(rhs);
    if ((a * sol - rhs).norm() > 1e-8 * (1.0 + rhs.norm()))
        throw DegenerateConfiguration("MuFunction: interpolation solve did not converge");
    coeff_.assign(sol.data(), sol.data() + n_);
}

cplx MuFunction::mu_coefficient(int k) const {
    if (k < 0 || k >= n_) throw BadInput("MuFunction: coefficient index out of range");
    return (n_ - k) % 2 == 0 ? coeff_[k] : -coeff_[k];
}

cplx MuFunction::operator()(const cplx& x, const cplx& y) const {
    cplx acc = basis_.eval(n_, x, y);
    for (int k = 0; k < n_; ++k) acc += coeff_[k] * basis_.eval(k, x, y);
    return acc;
}

cplx MuFunction::dx(const cplx& x, const cplx& y) const {
    cplx acc = basis_.eval_dx(n_, x, y, curve_);
    for (int k = 0; k < n_; ++k) acc += coeff_[k] * basis_.eval_dx(k, x, y, curve_);
    return acc;
}

std::vector<AffinePoint> residual_divisor(const CurveSpec& c,
                                          const std::vector<AffinePoint>& pts) {
    const MuFunction mu(c, pts);
    const int n = (int)pts.size();
    MonomialBasis basis = basis_upto(c, n);
    const int deg = basis.order(n);
    const double scale = c.branch_scale();

    // Coefficients of the fiber norm prod_j mu(x, zeta^j y(x)), a degree-deg
    // polynomial in x, read off from samples on a circle enclosing the
    // branch points.
    const int m = deg + 1;
    const double rho = 1.7 * scale;
    const cplx zeta = c.zeta();
    std::vector<cplx> q(m);
    for (int j = 0; j < m; ++j) {
        const cplx x = rho * std::exp(cplx(0.0, 2.0 * kPi * (j + 0.37) / m));
        cplx y = std::pow(c.f(x), 1.0 / c.r);
        cplx prod = 1.0;
        for (int k = 0; k < c.r; ++k) {
            prod *= mu(x, y);
            y *= zeta;
        }
        q[j] = prod;
    }
    std::vector<cplx> coeff(m);
    double cmax = 0.0;
    for (int k = 0; k < m; ++k) {
        cplx acc = 0.0;
        for (int j = 0; j < m; ++j)
            acc += q[j] * std::exp(cplx(0.0, -2.0 * kPi * (j + 0.37) * k / m));
        coeff[k] = acc / (double(m) * std::pow(rho, k));
        cmax = std::max(cmax, std::abs(coeff[k]));
    }
    if (std::abs(coeff[deg]) < 1e-8 * cmax)
        throw RootResolutionFailure("residual_divisor: fiber norm lost its leading term");

    Mat comp = Mat::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -coeff[i] / coeff[deg];
    Eigen::ComplexEigenSolver<Mat> es(comp, false);
    std::vector<cplx> roots(es.eigenvalues().data(), es.eigenvalues().data() + deg);

    // Cluster roots in x, count the vanishing order of mu on each fiber
    // point, then cancel the input divisor and emit what remains.  An m-fold
    // root scatters by roughly eps^(1/m) under the eigensolve, so the cluster
    // width is generous and the centroid restores the accuracy.
    const double cluster_tol = 3e-4 * scale;
    std::vector<bool> used(roots.size(), false);
    std::vector<bool> consumed(pts.size(), false);
    std::vector<AffinePoint> out;
    for (size_t i = 0; i < roots.size(); ++i) {
        if (used[i]) continue;
        int mult = 0;
        cplx x0 = 0.0;
        for (size_t j = 0; j < roots.size(); ++j) {
            if (!used[j] && std::abs(roots[j] - roots[i]) < cluster_tol) {
                used[j] = true;
                x0 += roots[j];
                ++mult;
            }
        }
        x0 /= double(mult);

        const cplx y0 = std::pow(c.f(x0), 1.0 / c.r);
        if (std::abs(y0) < 1e-6 * scale)
            throw RootResolutionFailure("residual_divisor: zero at a branch point");
        double vscale = 0.0;
        for (int k = 0; k <= n; ++k)
            vscale += std::abs(basis.eval(k, x0, y0)) *
                      (k < n ? 1.0 + std::abs(mu.coeff()[k]) : 1.0);
        std::vector<int> order(c.r, 0);
        int total = 0;
        for (int k = 0; k < c.r; ++k) {
            cplx yk = y0;
            for (int p = 0; p < k; ++p) yk *= zeta;
            if (std::abs(mu(x0, yk)) < 1e-6 * vscale) {
                order[k] = std::abs(mu.dx(x0, yk)) < 1e-6 * vscale / scale ? 2 : 1;
                total += order[k];
            }
        }
        if (total != mult)
            throw RootResolutionFailure("residual_divisor: fiber orders do not match root count");

        for (size_t p = 0; p < pts.size(); ++p) {
            if (consumed[p] || std::abs(pts[p].x - x0) >= cluster_tol) continue;
            int best = 0;
            double bestgap = std::numeric_limits<double>::max();
            for (int k = 0; k < c.r; ++k) {
                cplx yk = y0;
                for (int q2 = 0; q2 < k; ++q2) yk *= zeta;
                double gap = std::abs(pts[p].y - yk);
                if (gap < bestgap) {
                    bestgap = gap;
                    best = k;
                }
            }
            if (order[best] == 0)
                throw RootResolutionFailure("residual_divisor: input point is not a zero");
            --order[best];
            consumed[p] = true;
        }
        for (int k = 0; k < c.r; ++k) {
            cplx yk = y0;
            for (int p = 0; p < k; ++p) yk *= zeta;
            for (int rep = 0; rep < order[k]; ++rep) out.push_back(AffinePoint{x0, yk, k});
        }
    }
    for (size_t p = 0; p < pts.size(); ++p)
        if (!consumed[p])
            throw RootResolutionFailure("residual_divisor: input point not found among zeros");
    if ((int)out.size() != deg - n)
        throw RootResolutionFailure("residual_divisor: residual degree mismatch");
    return out;
}

}  // namespace sigmacurve
