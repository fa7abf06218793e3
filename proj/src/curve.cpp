#include "sigmacurve/curve.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <Eigen/Eigenvalues>

#include "sigmacurve/errors.hpp"

namespace sigmacurve {

cplx CurveSpec::f(const cplx& x) const {
    cplx acc = 1.0;
    for (const cplx& c : lambda) acc = acc * x + c;
    return acc;
}

cplx CurveSpec::df(const cplx& x) const {
    cplx acc = (double)s;
    for (int k = 0; k + 1 < s; ++k) acc = acc * x + lambda[k] * (double)(s - 1 - k);
    return acc;
}

std::vector<cplx> CurveSpec::branch_x() const {
    Mat comp = Mat::Zero(s, s);
    for (int i = 1; i < s; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < s; ++i) comp(i, s - 1) = -lambda[s - 1 - i];
    Eigen::ComplexEigenSolver<Mat> es(comp, false);
    std::vector<cplx> roots(s);
    for (int i = 0; i < s; ++i) roots[i] = es.eigenvalues()(i);
    // One Newton polish per root; the companion eigenvalues are good starts.
    for (cplx& z : roots) {
        for (int it = 0; it < 3; ++it) {
            cplx d = df(z);
            if (std::abs(d) < 1e-300) break;
            z -= f(z) / d;
        }
    }
    std::sort(roots.begin(), roots.end(), [](const cplx& a, const cplx& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

double CurveSpec::branch_scale() const {
    double m = 0.0;
    for (const cplx& b : branch_x()) m = std::max(m, std::abs(b));
    return 1.0 + m;
}

cplx CurveSpec::zeta() const {
    return std::polar(1.0, 2.0 * kPi / r);
}

CurveSpec build_curve(int r, int s, std::vector<cplx> lambda) {
    if (r < 2 || s <= r) throw BadInput("build_curve: need 2 <= r < s");
    if (std::gcd(r, s) != 1) throw NotCoprime("build_curve: gcd(r,s) must be 1");
    if ((int)lambda.size() != s) throw BadArity("build_curve: need s coefficients");
    CurveSpec c{r, s, std::move(lambda)};
    auto roots = c.branch_x();
    double tol = 1e-7 * c.branch_scale();
    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = i + 1; j < roots.size(); ++j)
            if (std::abs(roots[i] - roots[j]) < tol)
                throw SingularCurve("build_curve: repeated root of f");
    return c;
}

MonomialBasis monomial_basis(const CurveSpec& c, int upto) {
    if (upto < c.genus()) throw BadInput("monomial_basis: need upto >= genus");
    int bound = std::max(2 * c.genus(), c.r * c.s) + c.r * (upto + 1);
    std::vector<Monomial> all;
    for (int ye = 0; ye < c.r; ++ye)
        for (int xe = 0; c.r * xe + c.s * ye <= bound; ++xe)
            all.push_back(Monomial{0, xe, ye, c.r * xe + c.s * ye});
    std::sort(all.begin(), all.end(),
              [](const Monomial& a, const Monomial& b) { return a.order < b.order; });
    MonomialBasis basis;
    for (int n = 0; n <= upto; ++n) {
        Monomial m = all.at(n);
        m.n = n;
        basis.entries.push_back(m);
    }
    return basis;
}

cplx MonomialBasis::eval(int n, const cplx& x, const cplx& y) const {
    const Monomial& m = entries.at(n);
    cplx acc = 1.0;
    for (int k = 0; k < m.xe; ++k) acc *= x;
    for (int k = 0; k < m.ye; ++k) acc *= y;
    return acc;
}

cplx MonomialBasis::eval_dx(int n, const cplx& x, const cplx& y, const CurveSpec& c) const {
    const Monomial& m = entries.at(n);
    cplx xp = 1.0, yp = 1.0;
    for (int k = 0; k + 1 < m.xe; ++k) xp *= x;
    for (int k = 0; k + 1 < m.ye; ++k) yp *= y;
    cplx acc = 0.0;
    if (m.xe > 0) acc += (double)m.xe * xp * yp * (m.ye > 0 ? y : 1.0);
    if (m.ye > 0) {
        cplx yr1 = 1.0;
        for (int k = 0; k < c.r - 1; ++k) yr1 *= y;
        cplx dydx = c.df(x) / ((double)c.r * yr1);
        acc += (double)m.ye * (m.xe > 0 ? xp * x : 1.0) * yp * dydx;
    }
    return acc;
}

std::vector<int> weierstrass_gaps(int r, int s) {
    int g = (r - 1) * (s - 1) / 2;
    std::set<int> nongaps;
    for (int ye = 0; ye < r; ++ye)
        for (int xe = 0; r * xe + s * ye <= 2 * g; ++xe) nongaps.insert(r * xe + s * ye);
    std::vector<int> gaps;
    for (int k = 1; k <= 2 * g - 1; ++k)
        if (!nongaps.count(k)) gaps.push_back(k);
    return gaps;
}

FrobeniusChar frobenius_characteristics(const std::vector<int>& partition) {
    std::vector<int> lam;
    for (int p : partition)
        if (p > 0) lam.push_back(p);
    // conjugate partition
    int cols = lam.empty() ? 0 : lam[0];
    std::vector<int> conj(cols, 0);
    for (int p : lam)
        for (int j = 0; j < p; ++j) conj[j]++;
    FrobeniusChar fc;
    int d = 0;
    while (d < (int)lam.size() && lam[d] >= d + 1) ++d;
    // inner diagonal box first, so arms/legs increase
    for (int i = d - 1; i >= 0; --i) {
        fc.b.push_back(lam[i] - (i + 1));   // boxes to the right
        fc.a.push_back(conj[i] - (i + 1));  // boxes below
    }
    return fc;
}

std::vector<int> YoungDiagramData::truncation(int k) const {
    std::vector<int> t;
    for (int i = k; i < g; ++i)
        if (rows[i] > 0) t.push_back(rows[i]);
    return t;
}

long long YoungDiagramData::truncated_size(int k) const {
    long long n = 0;
    for (int v : truncation(k)) n += v;
    return n;
}

std::vector<int> YoungDiagramData::natural_set(int k) const {
    if (k < 1) throw BadInput("natural_set: k >= 1 required");
    if (k >= g) return {};
    FrobeniusChar fc = frobenius_characteristics(truncation(k));
    std::vector<int> out;
    for (size_t i = 0; i < fc.a.size(); ++i) {
        int hook = fc.hooks((int)i);
        bool found = false;
        for (int j = k + 1; j <= g; ++j) {
            if (hook_weights[j - 1] == hook) {
                out.push_back(j);
                found = true;
                break;
            }
        }
        if (!found) throw BadInput("natural_set: no index matches a principal hook");
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> YoungDiagramData::natural_set_swap(int k, int i) const {
    if (i < 1 || i > k) throw BadInput("natural_set_swap: need 1 <= i <= k");
    std::vector<int> out;
    out.push_back(i);
    for (int j : natural_set(k))
        if (j != k + 1) out.push_back(j);
    std::sort(out.begin(), out.end());
    return out;
}

YoungDiagramData young_data(const CurveSpec& c) {
    int g = c.genus();
    MonomialBasis basis = monomial_basis(c, g);
    YoungDiagramData y;
    y.g = g;
    for (int i = 1; i <= g; ++i) {
        int row = g - basis.order(i - 1) + (i - 1);
        y.rows.push_back(row);
        y.size += row;
        y.hook_weights.push_back(row + g - i);
    }
    return y;
}

std::vector<AffinePoint> involution_divisor(const CurveSpec& c, const AffinePoint& p) {
    if (c.r == 2) return {AffinePoint{p.x, -p.y, -1}};
    if (c.r == 3) {
        cplx z = c.zeta();
        return {AffinePoint{p.x, z * p.y, -1}, AffinePoint{p.x, z * z * p.y, -1}};
    }
    throw UnsupportedFamily("involution_divisor: only r = 2, 3 supported");
}

GaloisData galois_exponents(const CurveSpec& c) {
    int g = c.genus();
    MonomialBasis basis = monomial_basis(c, g);
    GaloisData gd;
    for (int n = 1; n <= g; ++n)
        gd.u_exponents.push_back((basis[n - 1].ye + 1) % c.r);
    YoungDiagramData y = young_data(c);
    gd.sigma_exponent = (int)((y.size % c.r) * ((basis[g - 1].ye + 1) % c.r) % c.r);
    return gd;
}

}  // namespace sigmacurve
