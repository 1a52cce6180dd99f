#pragma once

#include <utility>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"

namespace oddgrid {

// Outcome of an odd-independence check. A violator is a vertex outside the
// set together with its (even, positive) count of neighbours inside the set;
// when the set is not even independent the offending members are listed with
// their in-set neighbour counts and `independent` is false.
struct CheckReport {
    bool ok = false;
    bool independent = false;
    std::vector<std::pair<int, int>> violators;
};

// S is odd-independent when it is independent and every outside vertex sees
// 0 or an odd number of members.
CheckReport is_odd_independent(const Graph& g, const std::vector<int>& s);

// Same parity condition, but enforced only at interior cells of a path grid
// (the degree-4 vertices). Requires family path_grid.
CheckReport is_internally_odd_independent(const Graph& g, const std::vector<int>& s);

// x, y nonadjacent form a forbidden pair when some common neighbour z has
// N[z] inside N[x] union N[y].
bool forbidden_pair(const Graph& g, int x, int y);

// x, y nonadjacent with a common neighbour form a forcing pair when for some
// common neighbour z, every other w in N(z) nonadjacent to x or to y makes a
// forbidden pair with x or with y.
bool forcing_pair(const Graph& g, int x, int y);

// Upper bound for odd-independent sets in K_{1,r}-free d-regular graphs on
// n vertices: (r-1)n/(d+r-1) for even r, (r-2)n/(d+r-2) for odd r.
Rational star_free_upper_bound(int d, int r, long long n);

struct DensityBoundPair {
    Rational lower;
    Rational upper;
};

// Best known density interval for odd-independent sets in the infinite
// lattice graph named by `family` ("planar_grid", "r_rook", "r_bishop",
// "knight", "triangular", "hexagonal").
DensityBoundPair density_bounds(const std::string& family, int r = 0);

} // namespace oddgrid
