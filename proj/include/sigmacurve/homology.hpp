#pragma once

#include <cstdint>
#include <vector>

#include "sigmacurve/curve.hpp"
#include "sigmacurve/numbers.hpp"

namespace sigmacurve {

// A closed loop on the surface: a closed x-plane polyline together with the
// fiber value at its start, which fixes the lift.
struct CyclePath {
    std::vector<cplx> x;  // x.front() == x.back()
    cplx y0;
};

// Geometric intersection number of two lifted cycles, computed by counting
// transversal x-plane crossings that happen on the same sheet.
int intersection_number(const CurveSpec& c, const CyclePath& A, const CyclePath& B);

// Integer change of basis T (2g x K) with T C T^t = [[0, I], [-I, 0]] for an
// antisymmetric integer C of rank 2g.  All pivots must be unimodular; a
// non-unit pivot means the cycles only span a proper sublattice and raises
// ReductionFailure.
IMat symplectic_reduce(const IMat& C, int g);

struct HomologyBasis {
    int g = 0;
    std::vector<CyclePath> candidates;
    IMat inter;  // K x K intersections of the candidates
    IMat combo;  // 2g x K: rows 1..g are a-cycles, rows g+1..2g are b-cycles
};

// Builds candidate loops around branch-point pairs (r = 2: ellipses around
// consecutive pairs; r = 3: dumbbells winding once and twice, plus their deck
// translates), verifies lift closure, and reduces to a symplectic basis.
HomologyBasis homology_basis(const CurveSpec& c, std::uint64_t seed);

}  // namespace sigmacurve
