#pragma once

#include <vector>

#include "sigmacurve/numbers.hpp"

namespace sigmacurve {

// Cyclic cover y^r = f(x), f monic of degree s, gcd(r,s) = 1, smooth affine
// part, one point at infinity.
struct CurveSpec {
    int r = 0;
    int s = 0;
    std::vector<cplx> lambda;  // f = x^s + lambda[0] x^{s-1} + ... + lambda[s-1]

    int genus() const { return (r - 1) * (s - 1) / 2; }
    cplx f(const cplx& x) const;
    cplx df(const cplx& x) const;
    std::vector<cplx> branch_x() const;  // the s roots of f
    double branch_scale() const;         // 1 + max |root|
    cplx zeta() const;                   // primitive r-th root of unity e^{2 pi i / r}
};

CurveSpec build_curve(int r, int s, std::vector<cplx> lambda);

struct Monomial {
    int n;      // index in the basis
    int xe;     // x-exponent
    int ye;     // y-exponent, always < r
    int order;  // pole order at infinity: r*xe + s*ye
};

// Monomials of the affine ring ordered by increasing pole order at infinity.
// Pole orders enumerate the Weierstrass non-gaps.
struct MonomialBasis {
    std::vector<Monomial> entries;

    const Monomial& operator[](int n) const { return entries.at(n); }
    int size() const { return (int)entries.size(); }
    int order(int n) const { return entries.at(n).order; }
    cplx eval(int n, const cplx& x, const cplx& y) const;
    // d(phi_n)/dx along the curve, with dy/dx = f'(x) / (r y^{r-1}).
    cplx eval_dx(int n, const cplx& x, const cplx& y, const CurveSpec& c) const;
};

MonomialBasis monomial_basis(const CurveSpec& c, int upto);

// The g pole orders at infinity that no function of the affine ring attains.
std::vector<int> weierstrass_gaps(int r, int s);

// Frobenius characteristics of a partition: for each diagonal box, a = boxes
// below, b = boxes to the right, listed from the inner (lower right) corner
// outward so that both sequences increase.
struct FrobeniusChar {
    std::vector<int> a;
    std::vector<int> b;
    int hooks(int i) const { return a[i] + b[i] + 1; }
};
FrobeniusChar frobenius_characteristics(const std::vector<int>& partition);

struct YoungDiagramData {
    int g = 0;
    std::vector<int> rows;          // Lambda_1..Lambda_g
    long long size = 0;             // |Lambda|
    std::vector<int> hook_weights;  // weight of u_i: Lambda_i + g - i

    std::vector<int> truncation(int k) const;  // (Lambda_{k+1}, ..., Lambda_g)
    long long truncated_size(int k) const;     // N_k
    // Indices j > k whose u-weight equals a principal hook of the truncation.
    // Defined for 1 <= k < g; empty for k >= g.
    std::vector<int> natural_set(int k) const;
    // natural_set(k) with the mandatory entry k+1 replaced by i <= k.
    std::vector<int> natural_set_swap(int k, int i) const;
};

YoungDiagramData young_data(const CurveSpec& c);

struct AffinePoint {
    cplx x;
    cplx y;
    int sheet = -1;
};

// Divisor of the points whose Abel image is -w(p): the remaining fiber points
// over x(p).  Only r = 2 and r = 3 are supported.
std::vector<AffinePoint> involution_divisor(const CurveSpec& c, const AffinePoint& p);

struct GaloisData {
    std::vector<int> u_exponents;  // e_n with u_n -> zeta^{e_n} u_n
    int sigma_exponent = 0;        // sigma -> zeta^{sigma_exponent} sigma
};
GaloisData galois_exponents(const CurveSpec& c);

}  // namespace sigmacurve
