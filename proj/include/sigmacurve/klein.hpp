#pragma once

#include "sigmacurve/curve.hpp"
#include "sigmacurve/numbers.hpp"

namespace sigmacurve {

// Numerator H of the symmetric fundamental bidifferential
//   B(P,Q) = H(P,Q) dx1 dx2 / ((x1 - x2)^2 r^2 y1^{r-1} y2^{r-1}).
// H is the weight-homogeneous polynomial in x1, y1, x2, y2, linear in the
// curve coefficients, fixed by
//   - symmetry under (x1, y1) <-> (x2, y2),
//   - H(x, y; x, y) = r^2 y^{2r-2} reduced along y^r = f(x),
//   - second-order vanishing where x2 = x1 but y2 = zeta^j y1, j != 0,
//   - regularity of B at infinity in each variable.
// Supported families: r = 2 (any odd s) and (r, s) = (3, 4).
cplx klein_numerator(const CurveSpec& c, const cplx& x1, const cplx& y1,
                     const cplx& x2, const cplx& y2);

// B(P,Q) as a density with respect to dx1 dx2.  Double pole with biresidue 1
// on the diagonal, elsewhere finite.
cplx bidifferential_dxdx(const CurveSpec& c, const cplx& x1, const cplx& y1,
                         const cplx& x2, const cplx& y2);

}  // namespace sigmacurve
