#include "sigmacurve/series.hpp"

#include <algorithm>
#include <cmath>

#include "sigmacurve/errors.hpp"

namespace sigmacurve {

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
    PowerSeries r(std::min(size(), o.size()));
    for (int k = 0; k < r.size(); ++k) r.c[k] = c[k] + o.c[k];
    return r;
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
    PowerSeries r(std::min(size(), o.size()));
    for (int k = 0; k < r.size(); ++k) r.c[k] = c[k] - o.c[k];
    return r;
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
    int n = std::min(size(), o.size());
    PowerSeries r(n);
    for (int i = 0; i < n; ++i) {
        if (c[i] == cplx(0.0)) continue;
        for (int j = 0; i + j < n; ++j) r.c[i + j] += c[i] * o.c[j];
    }
    return r;
}

PowerSeries PowerSeries::scaled(const cplx& a) const {
    PowerSeries r(size());
    for (int k = 0; k < size(); ++k) r.c[k] = a * c[k];
    return r;
}

PowerSeries PowerSeries::deriv() const {
    PowerSeries r(size());
    for (int k = 1; k < size(); ++k) r.c[k - 1] = (double)k * c[k];
    return r;
}

PowerSeries PowerSeries::integ() const {
    PowerSeries r(size());
    for (int k = 0; k + 1 < size(); ++k) r.c[k + 1] = c[k] / (double)(k + 1);
    return r;
}

PowerSeries PowerSeries::log1() const {
    if (size() == 0 || std::abs(c[0] - 1.0) > 1e-12)
        throw BadInput("PowerSeries::log1: constant term must be 1");
    return (deriv() * inv()).integ();
}

PowerSeries PowerSeries::exp0() const {
    if (size() == 0 || std::abs(c[0]) > 1e-12)
        throw BadInput("PowerSeries::exp0: constant term must be 0");
    // e' = a' e, so (n+1) e_{n+1} = sum_{k} (k+1) a_{k+1} e_{n-k}
    PowerSeries e(size());
    e.c[0] = 1.0;
    for (int n = 0; n + 1 < size(); ++n) {
        cplx acc = 0.0;
        for (int k = 0; k <= n; ++k) acc += (double)(k + 1) * c[k + 1] * e.c[n - k];
        e.c[n + 1] = acc / (double)(n + 1);
    }
    return e;
}

PowerSeries PowerSeries::powc(double alpha) const {
    return log1().scaled(alpha).exp0();
}

PowerSeries PowerSeries::inv() const {
    if (size() == 0 || std::abs(c[0]) < 1e-300)
        throw BadInput("PowerSeries::inv: constant term must be nonzero");
    PowerSeries r(size());
    r.c[0] = 1.0 / c[0];
    for (int n = 1; n < size(); ++n) {
        cplx acc = 0.0;
        for (int k = 1; k <= n; ++k) acc += c[k] * r.c[n - k];
        r.c[n] = -acc / c[0];
    }
    return r;
}

cplx PowerSeries::eval(const cplx& t) const {
    cplx acc = 0.0;
    for (int k = size() - 1; k >= 0; --k) acc = acc * t + c[k];
    return acc;
}

cplx LaurentSeries::coeff(int e) const {
    int k = e - lead;
    if (k < 0 || k >= tail.size()) return 0.0;
    return tail.c[k];
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
    return LaurentSeries{lead + o.lead, tail * o.tail};
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
    int new_lead = std::min(lead, o.lead);
    int new_last = std::min(last(), o.last());
    LaurentSeries r{new_lead, PowerSeries(std::max(0, new_last - new_lead + 1))};
    for (int e = new_lead; e <= new_last; ++e) r.tail.c[e - new_lead] = coeff(e) + o.coeff(e);
    return r;
}

LaurentSeries LaurentSeries::scaled(const cplx& a) const {
    return LaurentSeries{lead, tail.scaled(a)};
}

LaurentSeries LaurentSeries::integrate() const {
    double scale = 0.0;
    for (const cplx& v : tail.c) scale = std::max(scale, std::abs(v));
    if (std::abs(residue()) > 1e-10 * (scale + 1.0))
        throw QuadratureFailure("LaurentSeries::integrate: nonzero residue");
    LaurentSeries r{lead + 1, PowerSeries(tail.size())};
    for (int k = 0; k < tail.size(); ++k) {
        int e = lead + k;
        if (e == -1) continue;
        r.tail.c[k] = tail.c[k] / (double)(e + 1);
    }
    return r;
}

cplx LaurentSeries::eval(const cplx& t) const {
    cplx tpow = 1.0;
    for (int k = 0; k < std::abs(lead); ++k) tpow *= t;
    if (lead < 0) tpow = 1.0 / tpow;
    cplx acc = 0.0;
    for (int k = 0; k < tail.size(); ++k) {
        acc += tail.c[k] * tpow;
        tpow *= t;
    }
    return acc;
}

CurveSeries::CurveSeries(const CurveSpec& c, const MonomialBasis& basis, int terms)
    : curve_(c), basis_(basis), terms_(terms), h_(terms) {
    if (terms <= c.r * c.s) throw BadInput("CurveSeries: truncation too short");
    h_.c[0] = 1.0;
    for (int j = 1; j <= c.s; ++j) h_.c[j * c.r] = c.lambda[j - 1];
}

LaurentSeries CurveSeries::x() const {
    LaurentSeries r{-curve_.r, PowerSeries(terms_)};
    r.tail.c[0] = 1.0;
    return r;
}

LaurentSeries CurveSeries::y() const {
    return LaurentSeries{-curve_.s, h_.powc(1.0 / curve_.r)};
}

LaurentSeries CurveSeries::phi(int n) const {
    const Monomial& m = basis_[n];
    return LaurentSeries{-m.order, h_.powc((double)m.ye / curve_.r)};
}

LaurentSeries CurveSeries::differential(int p) const {
    const Monomial& m = basis_[p];
    int g = curve_.genus();
    double alpha = (double)(m.ye + 1) / curve_.r - 1.0;
    return LaurentSeries{2 * g - 2 - m.order, h_.powc(alpha).scaled(-1.0)};
}

LaurentSeries CurveSeries::abel_component(int i) const {
    return differential(i - 1).integrate();
}

LaurentSeries SecondKindBasis::series(const CurveSeries& cs, int k) const {
    LaurentSeries acc{0, PowerSeries(0)};
    bool first = true;
    for (const auto& [p, a] : combo.at(k - 1)) {
        LaurentSeries term = cs.differential(p).scaled(a);
        acc = first ? term : acc + term;
        first = false;
    }
    return acc;
}

cplx SecondKindBasis::eval_dx(const CurveSpec& c, const MonomialBasis& basis, int k,
                              const cplx& x, const cplx& y) const {
    cplx yr1 = 1.0;
    for (int i = 0; i < c.r - 1; ++i) yr1 *= y;
    cplx acc = 0.0;
    for (const auto& [p, a] : combo.at(k - 1)) acc += a * basis.eval(p, x, y);
    return acc / ((double)c.r * yr1);
}

SecondKindBasis second_kind_basis(const CurveSeries& cs) {
    const CurveSpec& c = cs.curve();
    const MonomialBasis& basis = cs.basis();
    int g = c.genus();

    std::vector<int> weight(g);  // weight of u_k: m_k = 2g - 1 - N(k-1)
    for (int k = 1; k <= g; ++k) weight[k - 1] = 2 * g - 1 - basis.order(k - 1);

    std::vector<LaurentSeries> w;  // abel components, exponents from m_j up
    for (int j = 1; j <= g; ++j) w.push_back(cs.abel_component(j));

    auto pairing = [&](int j, const LaurentSeries& v) { return (w[j - 1] * v).residue(); };

    // For pole order m_k + 1 we need the monomial with N(p) = 4g - 2 - N(k-1).
    auto pool_index = [&](int k) {
        int target = 4 * g - 2 - basis.order(k - 1);
        for (int p = g; p < basis.size(); ++p)
            if (basis.order(p) == target) return p;
        throw BadInput("second_kind_basis: basis not built far enough");
    };

    SecondKindBasis skb;
    skb.combo.assign(g, {});
    std::vector<LaurentSeries> built(g, LaurentSeries{0, PowerSeries(0)});

    // Build from the smallest pole order upward; each correction uses only
    // differentials of strictly smaller pole order, so earlier normalizations
    // are not disturbed.
    for (int k = g; k >= 1; --k) {
        int p = pool_index(k);
        LaurentSeries v = cs.differential(p);
        std::map<int, cplx> combo{{p, 1.0}};

        cplx diag = pairing(k, v);  // exactly 1/m_k up to roundoff
        if (std::abs(diag) < 1e-12)
            throw NormalizationUnstable("second_kind_basis: degenerate diagonal pairing");
        cplx sc = 1.0 / diag;
        v = v.scaled(sc);
        for (auto& [q, a] : combo) a *= sc;

        for (int j = k + 1; j <= g; ++j) {
            cplx excess = pairing(j, v);
            if (std::abs(excess) < 1e-14) continue;
            v = v + built[j - 1].scaled(-excess);
            for (const auto& [q, a] : skb.combo[j - 1]) combo[q] -= excess * a;
        }
        built[k - 1] = v;
        skb.combo[k - 1] = std::move(combo);
    }
    return skb;
}

}  // namespace sigmacurve
