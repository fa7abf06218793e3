#pragma once

#include <cstdint>

#include "sigmacurve/curve.hpp"
#include "sigmacurve/homology.hpp"
#include "sigmacurve/numbers.hpp"

namespace sigmacurve {

struct PeriodOptions {
    double tol = 1e-11;      // adaptive quadrature tolerance
    int fixed_rule = 0;      // > 0: fixed Gauss-Legendre order per segment, no adaptivity
    std::uint64_t seed = 1;  // cycle construction seed
};

// Period matrices over a symplectic basis (a_1..a_g, b_1..b_g):
//   2*omega1 = a-periods of the first-kind basis, 2*omega2 = b-periods,
//   2*eta1, 2*eta2 = the matching periods of the dual second-kind basis,
// the second kind read off the fundamental bidifferential through probe
// points, so that the pairing against the first kind is the identity.
struct PeriodData {
    CurveSpec curve;
    MonomialBasis basis;
    HomologyBasis homology;
    Mat omega1, omega2, eta1, eta2;
    Mat tau;         // omega1^{-1} omega2, Im tau positive definite
    Mat omega1_inv;  // omega1^{-1}
    Mat gamma;       // symmetrized eta1 omega1^{-1}
    double legendre_residual = 0.0;
    bool orientation_flipped = false;
};

// Residual of M J M^t = 2 pi i J with M = [[2w1, 2w2], [2e1, 2e2]] and
// J = [[0, -I], [I, 0]].
double legendre_residual(const Mat& w1, const Mat& w2, const Mat& e1, const Mat& e2);

// Integrates the first- and second-kind bases over a symplectic homology
// basis.  Surface orientation is fixed by requiring Im tau positive definite.
PeriodData curve_periods(const CurveSpec& c, const PeriodOptions& opt = {});

}  // namespace sigmacurve
