#include "sigmacurve/sigma.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "sigmacurve/abel.hpp"
#include "sigmacurve/contour.hpp"
#include "sigmacurve/errors.hpp"

namespace sigmacurve {

namespace {

// jet of t(B u) in u given the jet of t at z = B u
Jet pullback_linear(const Jet& t, const Mat& B) {
    const int g = static_cast<int>(B.cols());
    Jet out = Jet::zero(g, t.order);
    out.c[0] = t.value();
    if (t.order >= 1)
        for (int i = 0; i < g; ++i) {
            cplx s = 0.0;
            for (int a = 0; a < g; ++a) s += B(a, i) * t.d1(a);
            out.at1(i) = s;
        }
    if (t.order >= 2)
        for (int i = 0; i < g; ++i)
            for (int j = i; j < g; ++j) {
                cplx s = 0.0;
                for (int a = 0; a < g; ++a)
                    for (int b = 0; b < g; ++b) s += B(a, i) * B(b, j) * t.d2(a, b);
                out.at2(i, j) = s;
            }
    if (t.order >= 3)
        for (int i = 0; i < g; ++i)
            for (int j = i; j < g; ++j)
                for (int k = j; k < g; ++k) {
                    cplx s = 0.0;
                    for (int a = 0; a < g; ++a)
                        for (int b = 0; b < g; ++b)
                            for (int e = 0; e < g; ++e)
                                s += B(a, i) * B(b, j) * B(e, k) * t.d3(a, b, e);
                    out.at3(i, j, k) = s;
                }
    return out;
}

// jet of t(u) F(u) where F has value f, gradient p f and constant log-Hessian
// q: F_i = p_i F, F_ij = (p_i p_j + q_ij) F, and so on.
Jet gauss_times(const Jet& t, const cplx& f, const Vec& p, const Mat& q) {
    const int g = t.g;
    Jet out = Jet::zero(g, t.order);
    out.c[0] = f * t.value();
    if (t.order >= 1)
        for (int i = 0; i < g; ++i) out.at1(i) = f * (t.d1(i) + p[i] * t.value());
    if (t.order >= 2)
        for (int i = 0; i < g; ++i)
            for (int j = i; j < g; ++j)
                out.at2(i, j) = f * (t.d2(i, j) + p[i] * t.d1(j) + p[j] * t.d1(i) +
                                     (p[i] * p[j] + q(i, j)) * t.value());
    if (t.order >= 3)
        for (int i = 0; i < g; ++i)
            for (int j = i; j < g; ++j)
                for (int k = j; k < g; ++k) {
                    cplx s = t.d3(i, j, k);
                    s += p[i] * t.d2(j, k) + p[j] * t.d2(i, k) + p[k] * t.d2(i, j);
                    s += (p[i] * p[j] + q(i, j)) * t.d1(k);
                    s += (p[i] * p[k] + q(i, k)) * t.d1(j);
                    s += (p[j] * p[k] + q(j, k)) * t.d1(i);
                    s += (p[i] * p[j] * p[k] + p[i] * q(j, k) + p[j] * q(i, k) +
                          p[k] * q(i, j)) *
                         t.value();
                    out.at3(i, j, k) = f * s;
                }
    return out;
}

cplx quad_form(const Mat& q, const Vec& u) { return (u.transpose() * q * u)(0, 0); }

}  // namespace

SigmaFunction::SigmaFunction(const PeriodData& pd, std::uint64_t seed)
    : pd_(pd), yd_(young_data(pd.curve)) {
    const int g = yd_.g;
    bmat_ = 0.5 * pd_.omega1_inv;
    const int arity = yd_.rows[0] + g - 1;
    leading_ = pin_power_sums(schur_in_power_sums(yd_.rows, arity), yd_.hook_weights);
    find_characteristic(seed);
    normalize();
}

cplx SigmaFunction::sigma0(const Vec& u) const {
    const Vec z = bmat_ * u;
    const cplx quad = quad_form(pd_.gamma, u);
    return std::exp(-0.5 * quad) * theta(pd_.tau, z, delta_, theta_tol_);
}

cplx SigmaFunction::operator()(const Vec& u) const { return c_ * sigma0(u); }

Jet SigmaFunction::jet(const Vec& u, int order) const {
    if (order < 0 || order > 3) throw BadInput("SigmaFunction::jet: order must be 0..3");
    const Jet tj = theta_jet(pd_.tau, bmat_ * u, delta_, order, theta_tol_);
    const Jet zj = pullback_linear(tj, bmat_);
    const Vec p = -(pd_.gamma * u);
    const cplx f = c_ * std::exp(-0.5 * quad_form(pd_.gamma, u));
    return gauss_times(zj, f, p, -pd_.gamma);
}

Vec SigmaFunction::lattice_vector(const IVec& l1, const IVec& l2) const {
    return 2.0 * (pd_.omega1 * l1.cast<cplx>() + pd_.omega2 * l2.cast<cplx>());
}

cplx SigmaFunction::shift_factor(const Vec& u, const IVec& l1, const IVec& l2) const {
    const Vec omega = lattice_vector(l1, l2);
    const Vec eta = 2.0 * (pd_.eta1 * l1.cast<cplx>() + pd_.eta2 * l2.cast<cplx>());
    const cplx expo = -((u + 0.5 * omega).transpose() * eta)(0, 0);
    long long sign = l1.dot(l2);
    for (int i = 0; i < yd_.g; ++i) {
        sign += l1[i] * static_cast<long long>(std::lround(2.0 * delta_.a[i]));
        sign += l2[i] * static_cast<long long>(std::lround(2.0 * delta_.b[i]));
    }
    const double parity = (sign % 2 == 0) ? 1.0 : -1.0;
    return parity * std::exp(expo);
}

Mat SigmaFunction::kleinian_pp(const Vec& u) const {
    const int g = yd_.g;
    const Jet j = jet(u, 2);
    const cplx s = j.value();
    Mat out(g, g);
    for (int a = 0; a < g; ++a)
        for (int b = 0; b < g; ++b) out(a, b) = (j.d1(a) * j.d1(b) - s * j.d2(a, b)) / (s * s);
    return out;
}

cplx SigmaFunction::kleinian_ppp(const Vec& u, int i, int j, int k) const {
    const Jet jt = jet(u, 3);
    const cplx s = jt.value();
    cplx num = s * s * jt.d3(i, j, k);
    num -= s * (jt.d1(i) * jt.d2(j, k) + jt.d1(j) * jt.d2(i, k) + jt.d1(k) * jt.d2(i, j));
    num += 2.0 * jt.d1(i) * jt.d1(j) * jt.d1(k);
    return -num / (s * s * s);
}

void SigmaFunction::find_characteristic(std::uint64_t seed) {
    const int g = yd_.g;
    const int want_parity = static_cast<int>(yd_.size % 2);
    const CurveSpec& c = pd_.curve;
    AbelMap abel(pd_);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    auto random_abel_sum = [&]() {
        Vec w = Vec::Zero(g);
        for (int i = 0; i + 1 < g; ++i) {
            for (int tries = 0;; ++tries) {
                if (tries > 40) throw CharacteristicNotFound("could not sample curve points");
                const double rad = c.branch_scale() * (0.75 + 0.8 * unif(rng));
                const cplx x = rad * std::exp(cplx(0.0, 2.0 * kPi * unif(rng)));
                try {
                    auto lifts = lift_points(c, x);
                    const auto& p = lifts[rng() % lifts.size()];
                    w += abel(p.x, p.y);
                    break;
                } catch (const CurveError&) {
                }
            }
        }
        return w;
    };

    const int trials = 3;
    for (int attempt = 0; attempt < 3; ++attempt) {
        std::vector<Vec> zs;
        for (int t = 0; t < trials; ++t) zs.push_back(bmat_ * random_abel_sum());

        const unsigned total = 1u << (2 * g);
        double best = -1.0, second = -1.0, maxmag = 0.0;
        unsigned best_mask = 0;
        for (unsigned mask = 0; mask < total; ++mask) {
            const ThetaChar ch = ThetaChar::half_integer(g, mask & ((1u << g) - 1), mask >> g);
            double score = 0.0;
            for (const Vec& z : zs) score = std::max(score, std::abs(theta(pd_.tau, z, ch)));
            maxmag = std::max(maxmag, score);
            if (ch.parity() != want_parity) continue;
            if (best < 0.0 || score < best) {
                second = best;
                best = score;
                best_mask = mask;
            } else if (second < 0.0 || score < second) {
                second = score;
            }
        }
        const bool clear_zero = best >= 0.0 && best < 1e-5 * maxmag;
        const bool unique = second < 0.0 || second > 1e3 * best;
        if (clear_zero && unique) {
            delta_ = ThetaChar::half_integer(g, best_mask & ((1u << g) - 1), best_mask >> g);
            return;
        }
    }
    throw CharacteristicNotFound("no unique vanishing half-characteristic");
}

void SigmaFunction::normalize() {
    const int g = yd_.g;
    const int n = static_cast<int>(yd_.size);
    std::vector<int> pure(g, 0);
    pure[g - 1] = n;
    const Rational lead = leading_.coefficient(pure);
    if (lead.is_zero()) throw NormalizationUnstable("leading polynomial has no pure top term");
    const cplx target(static_cast<double>(lead.num()) / static_cast<double>(lead.den()), 0.0);

    const int m = std::max(64, 4 * n + 8);
    const double rho1 = 0.35 / bmat_.col(g - 1).norm();
    auto ring_coefficient = [&](double rho) {
        cplx acc = 0.0;
        for (int k = 0; k < m; ++k) {
            const cplx t = rho * std::exp(cplx(0.0, 2.0 * kPi * k / m));
            Vec u = Vec::Zero(g);
            u[g - 1] = t;
            acc += sigma0(u) / std::pow(t, n);
        }
        return acc / static_cast<double>(m);
    };
    const cplx a1 = ring_coefficient(rho1);
    const cplx a2 = ring_coefficient(0.5 * rho1);
    if (std::abs(a1) == 0.0 || std::abs(a1 - a2) > 1e-6 * std::abs(a1))
        throw NormalizationUnstable("ring extraction of the top coefficient did not settle");
    c_ = target / a1;
}

}  // namespace sigmacurve
