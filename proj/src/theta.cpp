#include "sigmacurve/theta.hpp"

#include <algorithm>
#include <cmath>

#include "sigmacurve/errors.hpp"

namespace sigmacurve {

namespace {

// jet of exp(e0 + beta.z) * t at z = 0, given the jet t of the second factor
Jet exp_linear_times(const Jet& t, const cplx& factor, const Vec& beta) {
    const int g = t.g;
    Jet out = Jet::zero(g, t.order);
    out.c[0] = factor * t.value();
    if (t.order >= 1)
        for (int i = 0; i < g; ++i) out.c[1 + i] = factor * (t.d1(i) + beta[i] * t.value());
    if (t.order >= 2) {
        for (int i = 0; i < g; ++i)
            for (int j = i; j < g; ++j)
                out.at2(i, j) =
                    factor * (t.d2(i, j) + beta[i] * t.d1(j) + beta[j] * t.d1(i) +
                              beta[i] * beta[j] * t.value());
    }
    if (t.order >= 3) {
        for (int i = 0; i < g; ++i)
            for (int j = i; j < g; ++j)
                for (int k = j; k < g; ++k)
                    out.at3(i, j, k) =
                        factor *
                        (t.d3(i, j, k) + beta[i] * t.d2(j, k) + beta[j] * t.d2(i, k) +
                         beta[k] * t.d2(i, j) + beta[i] * beta[j] * t.d1(k) +
                         beta[i] * beta[k] * t.d1(j) + beta[j] * beta[k] * t.d1(i) +
                         beta[i] * beta[j] * beta[k] * t.value());
    }
    return out;
}

}  // namespace

ThetaChar ThetaChar::half_integer(int g, unsigned mask_a, unsigned mask_b) {
    ThetaChar ch;
    ch.a = RVec::Zero(g);
    ch.b = RVec::Zero(g);
    for (int i = 0; i < g; ++i) {
        if (mask_a >> i & 1u) ch.a[i] = 0.5;
        if (mask_b >> i & 1u) ch.b[i] = 0.5;
    }
    return ch;
}

int ThetaChar::parity() const {
    const double e = 4.0 * a.dot(b);
    const long long r = std::llround(e);
    if (std::abs(e - r) > 1e-12) throw BadInput("parity of a non-half-integer characteristic");
    return static_cast<int>(((r % 2) + 2) % 2);
}

Jet theta_jet(const Mat& tau, const Vec& z, const ThetaChar& ch, int order,
                   double tol) {
    const int g = static_cast<int>(tau.rows());
    if (order < 0 || order > 3) throw BadInput("theta_jet: order must be 0..3");
    if (tau.cols() != g || z.size() != g || ch.a.size() != g || ch.b.size() != g)
        throw BadArity("theta_jet: dimension mismatch");

    const RMat Y = 0.5 * (tau.imag() + tau.imag().transpose());
    Eigen::LLT<RMat> llt(Y);
    if (llt.info() != Eigen::Success)
        throw NonPositiveImaginaryPart("theta_jet: Im tau not positive definite");

    // reduce z modulo tau m + k and keep the exact factor
    const RVec mr = llt.solve(z.imag());
    IVec m(g), k(g);
    for (int i = 0; i < g; ++i) m[i] = static_cast<int>(std::llround(mr[i]));
    Vec z0 = z - tau * m.cast<double>().cast<cplx>();
    for (int i = 0; i < g; ++i) {
        k[i] = static_cast<int>(std::llround(z0[i].real()));
        z0[i] -= static_cast<double>(k[i]);
    }

    // lattice sum at z0 over an ellipsoid of the metric pi (.)^t Y (.)
    const double L = std::log(1.0 / std::max(tol, 1e-16));
    const double radius = std::sqrt((L + 12.0) / kPi) + 1.0;
    const RVec vshift = llt.solve(z0.imag());
    const RVec center = -ch.a - vshift;
    const RMat Yinv = llt.solve(RMat::Identity(g, g));

    IVec lo(g), hi(g);
    double count = 1.0;
    for (int i = 0; i < g; ++i) {
        const double w = radius * std::sqrt(Yinv(i, i)) + 1.0;
        lo[i] = static_cast<int>(std::floor(center[i] - w));
        hi[i] = static_cast<int>(std::ceil(center[i] + w));
        count *= hi[i] - lo[i] + 1;
    }
    if (count > 4e6) throw QuadratureFailure("theta_jet: lattice box too large");

    Jet jet = Jet::zero(g, order);
    const double qmax = kPi * radius * radius;
    const cplx twoPiI = 2.0 * kPi * kI;

    IVec n = lo;
    RVec u(g);
    while (true) {
        for (int i = 0; i < g; ++i) u[i] = n[i] + ch.a[i];
        const RVec d = u + vshift;
        if (kPi * d.dot(Y * d) <= qmax) {
            cplx quad = 0.0;
            for (int i = 0; i < g; ++i) {
                quad += tau(i, i) * u[i] * u[i];
                for (int j = i + 1; j < g; ++j) quad += 2.0 * tau(i, j) * u[i] * u[j];
            }
            cplx lin = 0.0;
            for (int i = 0; i < g; ++i) lin += u[i] * (z0[i] + ch.b[i]);
            const cplx term = std::exp(kPi * kI * quad + twoPiI * lin);
            jet.c[0] += term;
            if (order >= 1)
                for (int i = 0; i < g; ++i) jet.c[1 + i] += twoPiI * u[i] * term;
            if (order >= 2)
                for (int i = 0; i < g; ++i)
                    for (int j = i; j < g; ++j)
                        jet.at2(i, j) += twoPiI * twoPiI * u[i] * u[j] * term;
            if (order >= 3)
                for (int i = 0; i < g; ++i)
                    for (int j = i; j < g; ++j)
                        for (int p = j; p < g; ++p)
                            jet.at3(i, j, p) +=
                                twoPiI * twoPiI * twoPiI * u[i] * u[j] * u[p] * term;
        }
        int i = 0;
        for (; i < g; ++i) {
            if (n[i] < hi[i]) {
                ++n[i];
                break;
            }
            n[i] = lo[i];
        }
        if (i == g) break;
    }

    if (m.isZero() && k.isZero()) return jet;

    // theta(z0 + tau m + k) = exp(2 pi i (a.k - b.m) - pi i m.tau.m - 2 pi i m.z0) theta(z0)
    cplx quad = 0.0;
    for (int i = 0; i < g; ++i) {
        quad += tau(i, i) * static_cast<double>(m[i]) * static_cast<double>(m[i]);
        for (int j = i + 1; j < g; ++j)
            quad += 2.0 * tau(i, j) * static_cast<double>(m[i]) * static_cast<double>(m[j]);
    }
    cplx lin = 0.0;
    for (int i = 0; i < g; ++i)
        lin += ch.a[i] * k[i] - ch.b[i] * m[i] - static_cast<double>(m[i]) * z0[i];
    const cplx factor = std::exp(twoPiI * lin - kPi * kI * quad);
    Vec beta = Vec::Zero(g);
    for (int i = 0; i < g; ++i) beta[i] = -twoPiI * static_cast<double>(m[i]);
    return exp_linear_times(jet, factor, beta);
}

cplx theta(const Mat& tau, const Vec& z, const ThetaChar& ch, double tol) {
    return theta_jet(tau, z, ch, 0, tol).value();
}

}  // namespace sigmacurve
