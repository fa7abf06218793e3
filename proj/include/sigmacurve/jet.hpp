#pragma once

#include "sigmacurve/numbers.hpp"

namespace sigmacurve {

// Value and symmetric derivative coefficients of a function of g complex
// variables up to order 3, stored densely by degree: (), (i), (i <= j),
// (i <= j <= k).
struct Jet {
    int g = 0;
    int order = 0;
    std::vector<cplx> c;

    static Jet zero(int g, int order);
    static int size(int g, int order);

    cplx value() const { return c[0]; }
    cplx d1(int i) const { return c[1 + i]; }
    cplx d2(int i, int j) const;
    cplx d3(int i, int j, int k) const;

    cplx& at1(int i) { return c[1 + i]; }
    cplx& at2(int i, int j);  // requires i <= j
    cplx& at3(int i, int j, int k);  // requires i <= j <= k

    // derivative along the product of the listed coordinate directions
    // (0-based, between 0 and 3 of them)
    cplx dset(const std::vector<int>& idx) const;
};

}  // namespace sigmacurve
