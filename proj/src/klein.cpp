#include "sigmacurve/klein.hpp"

#include "sigmacurve/errors.hpp"

namespace sigmacurve {

namespace {

// r = 2: H = 2 y1 y2 + sum_i (x1 x2)^i (2 c_{2i} + c_{2i+1} (x1 + x2)) with
// c_j the coefficient of x^j in f.  On the diagonal the sum telescopes to
// 2 f(x), so H(x, y; x, y) = 4 f(x).
cplx hyperelliptic_numerator(const CurveSpec& c, const cplx& x1, const cplx& y1,
                             const cplx& x2, const cplx& y2) {
    const auto coeff = [&](int j) -> cplx {
        if (j == c.s) return 1.0;
        if (j < 0 || j > c.s) return 0.0;
        return c.lambda[c.s - 1 - j];
    };
    cplx acc = 2.0 * y1 * y2;
    const cplx xs = x1 + x2;
    cplx x12 = 1.0;
    for (int i = 0; 2 * i <= c.s; ++i) {
        acc += x12 * (2.0 * coeff(2 * i) + coeff(2 * i + 1) * xs);
        x12 *= x1 * x2;
    }
    return acc;
}

// (3,4): the unique weight-16 solution of the defining conditions, up to the
// two symmetric gauge directions l2 (x1-x2)^2 (y1+y2) and
// l1 (x1-x2)^2 (x1 y2 + x2 y1), which drop out of every period identity; both
// are fixed to zero.
cplx trigonal34_numerator(const CurveSpec& c, const cplx& x1, const cplx& y1,
                          const cplx& x2, const cplx& y2) {
    const cplx l1 = c.lambda[0], l2 = c.lambda[1], l3 = c.lambda[2], l4 = c.lambda[3];
    const cplx x1s = x1 * x1, x2s = x2 * x2;
    cplx acc = 3.0 * y1 * y1 * y2 * y2;
    acc += 2.0 * x1s * x1 * x2 * y2 + x1s * x2s * (y1 + y2) + 2.0 * x1 * x2s * x2 * y1;
    acc += 1.5 * l1 * (x1s * x1 * y2 + x1s * x2 * y1 + x1 * x2s * y2 + x2s * x2 * y1);
    acc += l2 * (x1s * y1 + 2.0 * x1s * y2 + 2.0 * x2s * y1 + x2s * y2);
    acc += l3 * (x1 * y1 + 2.0 * x1 * y2 + 2.0 * x2 * y1 + x2 * y2);
    acc += 3.0 * l4 * (y1 + y2);
    return acc;
}

}  // namespace

cplx klein_numerator(const CurveSpec& c, const cplx& x1, const cplx& y1,
                     const cplx& x2, const cplx& y2) {
    if (c.r == 2) return hyperelliptic_numerator(c, x1, y1, x2, y2);
    if (c.r == 3 && c.s == 4) return trigonal34_numerator(c, x1, y1, x2, y2);
    throw UnsupportedFamily("bidifferential numerator: only r = 2 and (3,4)");
}

cplx bidifferential_dxdx(const CurveSpec& c, const cplx& x1, const cplx& y1,
                         const cplx& x2, const cplx& y2) {
    cplx y1p = 1.0, y2p = 1.0;
    for (int j = 0; j + 1 < c.r; ++j) {
        y1p *= y1;
        y2p *= y2;
    }
    const cplx d = x1 - x2;
    const double r2 = static_cast<double>(c.r) * static_cast<double>(c.r);
    return klein_numerator(c, x1, y1, x2, y2) / (d * d * r2 * y1p * y2p);
}

}  // namespace sigmacurve
