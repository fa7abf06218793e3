#include "sigmacurve/primeform.hpp"

#include <cmath>
#include <functional>
#include <vector>

#include "sigmacurve/contour.hpp"
#include "sigmacurve/errors.hpp"
#include "sigmacurve/homology.hpp"

namespace sigmacurve {

namespace {

cplx quad_form(const Mat& q, const Vec& u) { return (u.transpose() * q * u)(0, 0); }

std::vector<int> zero_based(std::vector<int> v) {
    for (int& k : v) --k;
    return v;
}

}  // namespace

ThetaChar odd_characteristic(const PeriodData& pd, double grad_tol) {
    const int g = pd.curve.genus();
    const unsigned half = 1u << g;
    for (unsigned ma = 0; ma < half; ++ma)
        for (unsigned mb = 0; mb < half; ++mb) {
            const ThetaChar ch = ThetaChar::half_integer(g, ma, mb);
            if (ch.parity() != 1) continue;
            const Jet j = theta_jet(pd.tau, Vec::Zero(g), ch, 1);
            double grad = 0.0;
            for (int i = 0; i < g; ++i) grad = std::max(grad, std::abs(j.d1(i)));
            if (grad > grad_tol) return ch;
        }
    throw CharacteristicNotFound("no odd half-characteristic with a usable gradient");
}

PrimeForm::PrimeForm(const PeriodData& pd, std::uint64_t seed)
    : sig_(pd, seed),
      abel_(pd),
      basis_(monomial_basis(pd.curve, pd.curve.genus())),
      gal_(galois_exponents(pd.curve)),
      delta_(odd_characteristic(pd)) {
    const int g = pd.curve.genus();
    bmat_ = 0.5 * pd.omega1_inv;
    const Jet j0 = theta_jet(pd.tau, Vec::Zero(g), delta_, 1, theta_tol_);
    Vec grad(g);
    for (int i = 0; i < g; ++i) grad[i] = j0.d1(i);
    grad_weights_ = bmat_.transpose() * grad;
    stratum_ = pd.curve.r == 2 ? zero_based(sig_.diagram().natural_set(2)) : std::vector<int>{};
}

Vec PrimeForm::basis_density(const AffinePoint& p) const {
    const CurveSpec& c = curve();
    const int g = c.genus();
    const double yscale = std::pow(c.branch_scale(), static_cast<double>(c.s) / c.r);
    if (std::abs(p.y) < 1e-9 * yscale)
        throw BranchPoint("basis densities blow up at a branch point");
    const cplx denom = static_cast<double>(c.r) * std::pow(p.y, c.r - 1);
    Vec nu(g);
    for (int i = 0; i < g; ++i) nu[i] = basis_.eval(i, p.x, p.y) / denom;
    return nu;
}

cplx PrimeForm::trivialization(const AffinePoint& p) const {
    return (grad_weights_.transpose() * basis_density(p))(0, 0);
}

cplx PrimeForm::root_factor(const AffinePoint& p) const {
    const Vec nu = basis_density(p);
    const cplx ze = (grad_weights_.transpose() * nu)(0, 0);
    if (std::abs(ze) < 1e-10 * grad_weights_.norm() * nu.norm())
        throw TrivializationZero("point lies on the divisor of the trivializing density");
    return std::sqrt(nu[0] / ze);
}

cplx PrimeForm::theta_form(const LiftedPoint& P, const LiftedPoint& Q) const {
    const cplx th = theta(periods().tau, bmat_ * (P.w - Q.w), delta_, theta_tol_);
    return th * root_factor(P.p) * root_factor(Q.p);
}

cplx PrimeForm::modular_form(const LiftedPoint& P, const LiftedPoint& Q) const {
    const cplx quad = quad_form(periods().gamma, P.w - Q.w);
    return std::exp(-0.5 * quad) * theta_form(P, Q);
}

cplx PrimeForm::stratum_sigma(const Vec& u) const {
    if (stratum_.empty()) return sig_(u);
    return sig_.jet(u, 1).dset(stratum_);
}

cplx PrimeForm::sigma_form(const LiftedPoint& P, const LiftedPoint& Q) const {
    return stratum_sigma(P.w - Q.w);
}

cplx PrimeForm::sigma_form_conjugate(const LiftedPoint& P, const LiftedPoint& Q) const {
    const CurveSpec& c = curve();
    if (c.r != 3) throw UnsupportedFamily("conjugate-sum form needs a trigonal curve");
    const int g = c.genus();
    const cplx z = c.zeta();
    Vec arg = P.w;
    for (int a = 1; a <= 2; ++a)
        for (int n = 0; n < g; ++n)
            arg[n] += std::pow(z, (a * gal_.u_exponents[n]) % c.r) * Q.w[n];
    return sig_(arg) / std::sqrt(cplx(-3.0));
}

cplx PrimeForm::shift_factor(const Vec& D, const IVec& l1, const IVec& l2) const {
    const PeriodData& pd = periods();
    const Vec omega = 2.0 * (pd.omega1 * l1.cast<cplx>() + pd.omega2 * l2.cast<cplx>());
    const Vec eta = 2.0 * (pd.eta1 * l1.cast<cplx>() + pd.eta2 * l2.cast<cplx>());
    const cplx expo = -((D + 0.5 * omega).transpose() * eta)(0, 0);
    long long sign = l1.dot(l2);
    for (int i = 0; i < curve().genus(); ++i) {
        sign += l1[i] * static_cast<long long>(std::lround(2.0 * delta_.a[i]));
        sign += l2[i] * static_cast<long long>(std::lround(2.0 * delta_.b[i]));
    }
    const double parity = (sign % 2 == 0) ? 1.0 : -1.0;
    return parity * std::exp(expo);
}

ThirdKindResult PrimeForm::third_kind(const AffinePoint& Q, const AffinePoint& Qp,
                                      const AffinePoint& P2, const cplx& x1) const {
    const CurveSpec& c = curve();
    const int g = c.genus();
    const PeriodData& pd = periods();
    if (std::abs(Q.x - Qp.x) + std::abs(Q.y - Qp.y) < 1e-8 * c.branch_scale())
        throw BadInput("third-kind poles coincide");

    // difference of the two unit-residue pole parts, as a dx-density;
    // regular at infinity and on the sheets not carrying the pole
    auto pole_density = [&](const cplx& x, const cplx& y) -> cplx {
        auto part = [&](const AffinePoint& S) {
            cplx gs = 0.0;
            for (int j = 0; j < c.r; ++j) gs += std::pow(y, c.r - 1 - j) * std::pow(S.y, j);
            return gs / (x - S.x);
        };
        return (part(Q) - part(Qp)) / (static_cast<double>(c.r) * std::pow(y, c.r - 1));
    };
    auto nu_integrand = [&](const cplx& x, const cplx& y) -> Vec {
        const cplx denom = static_cast<double>(c.r) * std::pow(y, c.r - 1);
        Vec v(g);
        for (int i = 0; i < g; ++i) v[i] = basis_.eval(i, x, y) / denom;
        return v;
    };

    const Vec wQ = abel_(Q), wQp = abel_(Qp), w2 = abel_(P2);
    auto theta_ratio = [&](const Vec& w) {
        return theta(pd.tau, bmat_ * (w - wQ), delta_, theta_tol_) /
               theta(pd.tau, bmat_ * (w - wQp), delta_, theta_tol_);
    };

    // argument increment of the theta ratio around one candidate loop,
    // marched with the Abel image continued along the loop
    auto ratio_winding = [&](const CyclePath& loop) {
        Vec w = abel_(loop.x.front(), loop.y0);
        cplx y = loop.y0;
        cplx prev = theta_ratio(w);
        double total = 0.0;
        std::function<void(const cplx&, const cplx&, int)> step = [&](const cplx& xa,
                                                                      const cplx& xb, int depth) {
            cplx yend = 0.0;
            const Vec dw =
                integrate_polyline(c, nu_integrand, g, {xa, xb}, y, 1e-11, &yend);
            const cplx cur = theta_ratio(w + dw);
            const double dphi = std::arg(cur / prev);
            if (std::abs(dphi) > 1.2 && depth < 24) {
                step(xa, 0.5 * (xa + xb), depth + 1);
                step(0.5 * (xa + xb), xb, depth + 1);
                return;
            }
            w += dw;
            y = yend;
            prev = cur;
            total += dphi;
        };
        const double pitch = 0.15 * c.branch_scale();
        for (std::size_t m = 0; m + 1 < loop.x.size(); ++m) {
            const cplx xa = loop.x[m], xb = loop.x[m + 1];
            const int nsub = std::max(1, static_cast<int>(std::ceil(std::abs(xb - xa) / pitch)));
            for (int q = 0; q < nsub; ++q)
                step(xa + (xb - xa) * (static_cast<double>(q) / nsub),
                     xa + (xb - xa) * (static_cast<double>(q + 1) / nsub), 0);
        }
        return total / (2.0 * kPi);
    };

    const HomologyBasis& hom = pd.homology;
    const int K = static_cast<int>(hom.candidates.size());
    std::vector<cplx> cand_period(K);
    std::vector<double> cand_winding(K);
    std::vector<bool> used(K, false);
    for (int k = 0; k < g; ++k)
        for (int j = 0; j < K; ++j)
            if (hom.combo(k, j) != 0) used[j] = true;
    for (int j = 0; j < K; ++j) {
        if (!used[j]) continue;
        const CyclePath& loop = hom.candidates[j];
        const Vec val = integrate_polyline(
            c,
            [&](const cplx& x, const cplx& y) {
                Vec v(1);
                v[0] = pole_density(x, y);
                return v;
            },
            1, loop.x, loop.y0, 1e-11);
        cand_period[j] = val[0];
        cand_winding[j] = ratio_winding(loop);
    }

    // corrected normalization: the subtracted first-kind piece leaves each
    // a-period equal to the argument winding of the theta ratio, which is the
    // value the double ratio actually sees on these representatives
    Vec rhs(g);
    for (int k = 0; k < g; ++k) {
        cplx per = 0.0;
        double wnd = 0.0;
        for (int j = 0; j < K; ++j) {
            const int m = hom.combo(k, j);
            if (m == 0) continue;
            per += static_cast<double>(m) * cand_period[j];
            wnd += static_cast<double>(m) * cand_winding[j];
        }
        const long long n = std::llround(wnd);
        if (std::abs(wnd - static_cast<double>(n)) > 0.05)
            throw QuadratureFailure("theta winding along an a-cycle did not settle on an integer");
        rhs[k] = per - 2.0 * kPi * kI * static_cast<double>(n);
    }
    const Mat aper_mat = 2.0 * pd.omega1.transpose();
    const Vec cvec = aper_mat.partialPivLu().solve(rhs);

    std::vector<cplx> avoid = c.branch_x();
    avoid.push_back(Q.x);
    avoid.push_back(Qp.x);
    const auto path = route_path(P2.x, x1, avoid, default_clearance(c));
    cplx yend = 0.0;
    const Vec joint = integrate_polyline(
        c,
        [&](const cplx& x, const cplx& y) {
            Vec v(g + 1);
            v.head(g) = nu_integrand(x, y);
            v[g] = pole_density(x, y);
            return v;
        },
        g + 1, path, P2.y, 1e-11, &yend);
    const Vec w1 = w2 + joint.head(g);
    cplx tint = joint[g];
    for (int i = 0; i < g; ++i) tint -= cvec[i] * joint[i];

    const cplx dr = (theta(pd.tau, bmat_ * (w1 - wQ), delta_, theta_tol_) *
                     theta(pd.tau, bmat_ * (w2 - wQp), delta_, theta_tol_)) /
                    (theta(pd.tau, bmat_ * (w1 - wQp), delta_, theta_tol_) *
                     theta(pd.tau, bmat_ * (w2 - wQ), delta_, theta_tol_));
    const cplx ei = std::exp(tint);
    const AffinePoint reached{x1, yend, sheet_of(c, x1, yend)};
    return {reached, dr, ei, std::abs(dr / ei - 1.0)};
}

cplx PrimeForm::benney_core_term(const Vec& u, const Vec& v, const cplx& k) const {
    const CurveSpec& c = curve();
    const int g = c.genus();
    const cplx z = c.zeta();
    std::vector<int> with_first = stratum_;
    with_first.insert(with_first.begin(), 0);
    cplx total = 0.0;
    for (int i = 0; i < c.r; ++i) {
        Vec arg = u;
        for (int n = 0; n < g; ++n)
            arg[n] -= std::pow(z, ((c.r - i) * gal_.u_exponents[n]) % c.r) * v[n];
        const Jet j = sig_.jet(arg, static_cast<int>(with_first.size()));
        const cplx val = j.dset(stratum_);
        const cplx der = j.dset(with_first);
        if (std::abs(val) < 1e-12 * (1.0 + std::abs(der)))
            throw ZeroDivisorPoint("sigma factor vanishes at the requested argument");
        total += std::pow(z, i) * (-std::pow(z, ((c.r - i) * gal_.u_exponents[0]) % c.r)) * der / val;
    }
    return k * total;
}

}  // namespace sigmacurve
