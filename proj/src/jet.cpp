#include "sigmacurve/jet.hpp"

#include <algorithm>

#include "sigmacurve/errors.hpp"

namespace sigmacurve {

namespace {

int idx2(int g, int i, int j) {
    int off = 0;
    for (int p = 0; p < i; ++p) off += g - p;
    return off + (j - i);
}

int idx3(int g, int i, int j, int k) {
    int off = 0;
    for (int p = 0; p < i; ++p) off += (g - p) * (g - p + 1) / 2;
    return off + idx2(g - i, j - i, k - i);
}

}  // namespace

int Jet::size(int g, int order) {
    int n = 1;
    if (order >= 1) n += g;
    if (order >= 2) n += g * (g + 1) / 2;
    if (order >= 3) n += g * (g + 1) * (g + 2) / 6;
    return n;
}

Jet Jet::zero(int g, int order) {
    Jet j;
    j.g = g;
    j.order = order;
    j.c.assign(size(g, order), 0.0);
    return j;
}

cplx Jet::d2(int i, int j) const {
    if (i > j) std::swap(i, j);
    return c.at(1 + g + idx2(g, i, j));
}

cplx Jet::d3(int i, int j, int k) const {
    if (i > j) std::swap(i, j);
    if (j > k) std::swap(j, k);
    if (i > j) std::swap(i, j);
    return c.at(1 + g + g * (g + 1) / 2 + idx3(g, i, j, k));
}

cplx& Jet::at2(int i, int j) { return c.at(1 + g + idx2(g, i, j)); }

cplx& Jet::at3(int i, int j, int k) {
    return c.at(1 + g + g * (g + 1) / 2 + idx3(g, i, j, k));
}

cplx Jet::dset(const std::vector<int>& idx) const {
    switch (idx.size()) {
        case 0: return value();
        case 1: return d1(idx[0]);
        case 2: return d2(idx[0], idx[1]);
        case 3: return d3(idx[0], idx[1], idx[2]);
        default: throw BadInput("Jet::dset: order above 3");
    }
}

}  // namespace sigmacurve
