#include "odd_independence.hpp"

#include <algorithm>

namespace oddgrid {

namespace {

Bits to_bits(const Graph& g, const std::vector<int>& s) {
    Bits mask(g.order());
    for (int v : s) {
        if (v < 0 || v >= g.order())
            fail(ErrorCode::Param, "vertex " + std::to_string(v) + " out of range");
        if (mask.test(v)) fail(ErrorCode::Param, "duplicate vertex " + std::to_string(v));
        mask.set(v);
    }
    return mask;
}

CheckReport check_with_parity_mask(const Graph& g, const std::vector<int>& s,
                                   const Bits& parity_at) {
    Bits mask = to_bits(g, s);
    CheckReport rep;
    rep.independent = true;
    for (int v : s) {
        int inside = g.neighbors(v).count_and(mask);
        if (inside > 0) {
            rep.independent = false;
            rep.violators.emplace_back(v, inside);
        }
    }
    if (rep.independent) {
        for (int u = 0; u < g.order(); ++u) {
            if (mask.test(u) || !parity_at.test(u)) continue;
            int c = g.neighbors(u).count_and(mask);
            if (c > 0 && c % 2 == 0) rep.violators.emplace_back(u, c);
        }
    }
    rep.ok = rep.independent && rep.violators.empty();
    return rep;
}

} // namespace

CheckReport is_odd_independent(const Graph& g, const std::vector<int>& s) {
    Bits all(g.order());
    for (int v = 0; v < g.order(); ++v) all.set(v);
    return check_with_parity_mask(g, s, all);
}

CheckReport is_internally_odd_independent(const Graph& g, const std::vector<int>& s) {
    if (g.spec().family != Family::PathGrid)
        fail(ErrorCode::Domain, "internal odd-independence is defined on path_grid boards");
    Bits interior(g.order());
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 4) interior.set(v);
    return check_with_parity_mask(g, s, interior);
}

bool forbidden_pair(const Graph& g, int x, int y) {
    int n = g.order();
    if (x < 0 || x >= n || y < 0 || y >= n) fail(ErrorCode::Param, "vertex out of range");
    if (x == y) fail(ErrorCode::Param, "forbidden pair needs two distinct vertices");
    if (g.adjacent(x, y)) fail(ErrorCode::Domain, "forbidden pair needs nonadjacent vertices");

    Bits common = g.neighbors(x) & g.neighbors(y);
    Bits covered = g.closed_neighbors(x) | g.closed_neighbors(y);
    bool found = false;
    common.for_each([&](int z) {
        if (found) return;
        Bits rest = g.closed_neighbors(z);
        rest.and_not(covered);
        if (rest.none()) found = true;
    });
    return found;
}

bool forcing_pair(const Graph& g, int x, int y) {
    int n = g.order();
    if (x < 0 || x >= n || y < 0 || y >= n) fail(ErrorCode::Param, "vertex out of range");
    if (x == y) fail(ErrorCode::Param, "forcing pair needs two distinct vertices");
    if (g.adjacent(x, y)) fail(ErrorCode::Domain, "forcing pair needs nonadjacent vertices");
    Bits common = g.neighbors(x) & g.neighbors(y);
    if (common.none())
        fail(ErrorCode::Domain, "forcing pair needs a common neighbour");

    bool found = false;
    common.for_each([&](int z) {
        if (found) return;
        bool all_ok = true;
        g.neighbors(z).for_each([&](int w) {
            if (!all_ok || w == x || w == y) return;
            bool indep_x = !g.adjacent(w, x);
            bool indep_y = !g.adjacent(w, y);
            if (!indep_x && !indep_y) return; // adjacent to both: exempt
            bool covered = (indep_x && forbidden_pair(g, x, w)) ||
                           (indep_y && forbidden_pair(g, y, w));
            if (!covered) all_ok = false;
        });
        if (all_ok) found = true;
    });
    return found;
}

Rational star_free_upper_bound(int d, int r, long long n) {
    if (d < 1) fail(ErrorCode::Param, "degree must be >= 1");
    if (r < 2) fail(ErrorCode::Param, "star order must be >= 2");
    if (n < 0) fail(ErrorCode::Param, "vertex count must be >= 0");
    if (r % 2 == 0) return Rational(static_cast<int64_t>(r - 1) * n, d + r - 1);
    return Rational(static_cast<int64_t>(r - 2) * n, d + r - 2);
}

DensityBoundPair density_bounds(const std::string& family, int r) {
    if (family == "planar_grid") return {Rational(3, 8), Rational(5, 13)};
    if (family == "triangular") return {Rational(1, 3), Rational(1, 3)};
    if (family == "hexagonal") return {Rational(1, 2), Rational(1, 2)};
    if (family == "knight") {
        // Lower bound from the periodic 8x8 selection; upper bound from the
        // K_{1,8}-free degree-8 star bound.
        return {Rational(7, 16), Rational(7, 15)};
    }
    if (family == "r_rook" || family == "r_bishop") {
        if (r < 1) fail(ErrorCode::Param, family + " bounds require r >= 1");
        // Diagonal construction against the K_{1,5}-free bound for degree 4r.
        return {Rational(1, 2 * r + 1), Rational(3, 4 * r + 3)};
    }
    fail(ErrorCode::Param, "unknown density family: " + family);
}

} // namespace oddgrid
