#pragma once

#include <tuple>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"

namespace oddgrid {

// A doubly-periodic subset of the lattice, given by its cells inside the
// fundamental domain [0,p) x [0,q) and the adjacency family of the lattice.
// Supported families: PathGrid (the planar grid), RRook, RBishopComponent,
// Knight, TriangularPatch, HexagonalPatch; `r` is the reach where relevant.
// For HexagonalPatch and RBishopComponent both periods must be even, since
// the adjacency rule depends on the coordinate parity; bishop cells must all
// lie on the (i+j)-even class, which is the component being certified.
struct PeriodicPattern {
    int p = 1;
    int q = 1;
    Family family = Family::PathGrid;
    int r = 1;
    std::vector<std::pair<int, int>> cells;
};

// Verification verdict plus the exact density. For RBishopComponent the
// density is relative to the component's vertices (half the domain); for
// every other family it is |cells| / (p*q). A violator is (i, j, count)
// where count is the number of selected neighbors, accumulated with
// multiplicity when distinct offsets wrap onto the same residue.
struct DensityReport {
    bool ok = false;
    bool independent = false;
    Rational density{0, 1};
    std::vector<std::tuple<int, int, int>> violators;
};

DensityReport verify_periodic(const PeriodicPattern& pat);

// Wraps an odd-independent set on the k x k torus into a period-(k,k)
// planar-grid pattern. The set is re-checked on the torus first; a set that
// fails the predicate is a domain error.
PeriodicPattern from_torus_solution(int k, const std::vector<int>& s);

// r+1 rooks on a diagonal, then r blank columns: period (r+1, 2r+1),
// density 1/(2r+1) under the r-rook adjacency.
PeriodicPattern r_rook_diagonal_pattern(int r);

// Transplants an r-rook pattern onto one bishop component through the 45
// degree change of coordinates u=(i+j)/2, v=(i-j)/2. Periods grow to
// 2*lcm(p,q) on both axes so the skewed lattice becomes axis-periodic.
PeriodicPattern skew_to_bishop(const PeriodicPattern& rook_pattern);

// skew_to_bishop(r_rook_diagonal_pattern(r)): density 1/(2r+1) in one
// bishop component.
PeriodicPattern r_bishop_diagonal_pattern(int r);

// Black cells minus one skipped cell per even row, the skips shifted
// diagonally: period (8,8), density 7/16 under knight adjacency. The exact
// shift is recovered by searching the small parameter space against
// verify_periodic.
PeriodicPattern knight_central_pattern();

// One color class of (i-j) mod 3: period (3,3), density 1/3.
PeriodicPattern triangular_class_pattern();

// One bipartition class of the brick wall: period (2,2), density 1/2.
PeriodicPattern hexagonal_class_pattern();

// The two-sided density estimate for the planar grid: every torus value
// gives a lower bound alpha/k^2 and every internally-odd value an upper
// bound alpha/k^2; the report carries the best of each and whether they are
// consistent.
struct SandwichReport {
    Rational lower{0, 1};
    Rational upper{1, 1};
    int lower_k = 0;
    int upper_k = 0;
    bool ok = false;
};

SandwichReport sandwich_check(const std::vector<std::pair<int, int>>& torus_values,
                              const std::vector<std::pair<int, int>>& iod_values);

} // namespace oddgrid
