#pragma once

#include "sigmacurve/jet.hpp"
#include "sigmacurve/numbers.hpp"

namespace sigmacurve {

// Half-integer (or general real) theta characteristic [a; b].
struct ThetaChar {
    RVec a, b;

    // Entries of a are bits of mask_a times 1/2, same for b; bit i is entry i.
    static ThetaChar half_integer(int g, unsigned mask_a, unsigned mask_b);
    // e(delta) = 4 a.b mod 2; theta[delta] is even iff this is 0.
    int parity() const;
};

// theta[a;b](z; tau) = sum over n in Z^g of
//   exp( pi i (n+a)^t tau (n+a) + 2 pi i (n+a)^t (z+b) ),
// with all z-derivatives up to `order` accumulated in the same lattice pass.
// z is first reduced modulo the period lattice tau m + n and the exact
// quasi-periodicity factor is multiplied back, so large arguments stay
// accurate.  The sum runs over an ellipsoid of the Cholesky-reduced metric
// sized so the discarded tail is below `tol` relative to the leading bound.
Jet theta_jet(const Mat& tau, const Vec& z, const ThetaChar& ch, int order,
                   double tol = 1e-13);

cplx theta(const Mat& tau, const Vec& z, const ThetaChar& ch, double tol = 1e-13);

}  // namespace sigmacurve
