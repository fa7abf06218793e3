#pragma once

#include <map>
#include <vector>

#include "sigmacurve/curve.hpp"
#include "sigmacurve/numbers.hpp"

namespace sigmacurve {

// Dense truncated power series in t; c[k] is the coefficient of t^k.
class PowerSeries {
public:
    PowerSeries() = default;
    explicit PowerSeries(int n) : c(n, 0.0) {}

    std::vector<cplx> c;
    int size() const { return (int)c.size(); }

    PowerSeries operator+(const PowerSeries& o) const;
    PowerSeries operator-(const PowerSeries& o) const;
    PowerSeries operator*(const PowerSeries& o) const;  // truncated to min size
    PowerSeries scaled(const cplx& a) const;
    PowerSeries deriv() const;
    PowerSeries integ() const;           // antiderivative with zero constant
    PowerSeries log1() const;            // needs c[0] = 1
    PowerSeries exp0() const;            // needs c[0] = 0
    PowerSeries powc(double alpha) const;  // (1 + ...)^alpha, needs c[0] = 1
    PowerSeries inv() const;             // needs c[0] != 0
    cplx eval(const cplx& t) const;
};

// tail.c[k] is the coefficient of t^{lead + k}.
struct LaurentSeries {
    int lead = 0;
    PowerSeries tail;

    int last() const { return lead + tail.size() - 1; }
    cplx coeff(int e) const;
    LaurentSeries operator*(const LaurentSeries& o) const;
    LaurentSeries operator+(const LaurentSeries& o) const;
    LaurentSeries scaled(const cplx& a) const;
    cplx residue() const { return coeff(-1); }
    // Termwise t-antiderivative; throws QuadratureFailure on nonzero residue.
    LaurentSeries integrate() const;
    cplx eval(const cplx& t) const;
};

// Expansions of the curve's function field at the point at infinity in the
// local parameter t with x = t^{-r} exactly and y = t^{-s} h(t)^{1/r},
// h(t) = t^{rs} f(t^{-r}) = 1 + lambda_1 t^r + ... + lambda_s t^{rs}.
class CurveSeries {
public:
    CurveSeries(const CurveSpec& c, const MonomialBasis& basis, int terms);

    const CurveSpec& curve() const { return curve_; }
    const MonomialBasis& basis() const { return basis_; }
    int terms() const { return terms_; }

    const PowerSeries& h() const { return h_; }
    LaurentSeries x() const;
    LaurentSeries y() const;
    LaurentSeries phi(int n) const;  // t^{-N(n)} h^{r_n / r}

    // phi_p dx / (r y^{r-1}) expressed per dt: -t^{2g-2-N(p)} h^{(r_p+1)/r - 1}.
    // For p < g these are the basis of differentials of the first kind.
    LaurentSeries differential(int p) const;

    // Integral from infinity of differential(i-1): the i-th coordinate of the
    // image of a point near infinity, as a series in t.  Leading term
    // -t^{w_i}/w_i with w_i the coordinate weight.
    LaurentSeries abel_component(int i) const;

private:
    CurveSpec curve_;
    MonomialBasis basis_;
    int terms_;
    PowerSeries h_;
};

// Differentials of the second kind paired against the first-kind basis:
// tnu_k = sum_p combo[k-1][p] * phi_p dx/(r y^{r-1}), with a pole only at
// infinity (order weight(u_k)+1), no residue, and
// Res_infinity( (integral of nu_j) * tnu_k ) = delta_{jk}.
struct SecondKindBasis {
    std::vector<std::map<int, cplx>> combo;

    LaurentSeries series(const CurveSeries& cs, int k) const;  // per dt at infinity
    // Value of tnu_k / dx at an affine point.
    cplx eval_dx(const CurveSpec& c, const MonomialBasis& basis, int k,
                 const cplx& x, const cplx& y) const;
};

SecondKindBasis second_kind_basis(const CurveSeries& cs);

}  // namespace sigmacurve
