#include "periodic.hpp"

#include <numeric>
#include <set>

#include "errors.hpp"
#include "odd_independence.hpp"

namespace oddgrid {

namespace {

constexpr int kMaxListed = 64;

bool parity_sensitive(Family f) {
    return f == Family::HexagonalPatch || f == Family::RBishopComponent;
}

void validate_pattern(const PeriodicPattern& pat) {
    if (pat.p < 1 || pat.q < 1) fail(ErrorCode::Param, "periods must be positive");
    if (static_cast<long long>(pat.p) * pat.q > 1'000'000)
        fail(ErrorCode::Capacity, "fundamental domain too large");
    switch (pat.family) {
        case Family::PathGrid:
        case Family::Knight:
        case Family::TriangularPatch:
        case Family::HexagonalPatch:
            break;
        case Family::RRook:
        case Family::RBishopComponent:
            if (pat.r < 1) fail(ErrorCode::Param, "reach must be >= 1");
            break;
        default:
            fail(ErrorCode::Domain,
                 "family has no bounded lattice adjacency for periodic verification");
    }
    if (parity_sensitive(pat.family) && (pat.p % 2 != 0 || pat.q % 2 != 0))
        fail(ErrorCode::Param, "this family needs even periods");
    std::set<std::pair<int, int>> seen;
    for (auto [i, j] : pat.cells) {
        if (i < 0 || i >= pat.p || j < 0 || j >= pat.q)
            fail(ErrorCode::Param, "cell outside the fundamental domain");
        if (!seen.insert({i, j}).second) fail(ErrorCode::Param, "duplicate cell");
        if (pat.family == Family::RBishopComponent && (i + j) % 2 != 0)
            fail(ErrorCode::Param, "bishop pattern cells must sit on the even class");
    }
}

std::vector<std::pair<int, int>> offsets_at(const PeriodicPattern& pat, int i, int j) {
    std::vector<std::pair<int, int>> offs;
    switch (pat.family) {
        case Family::PathGrid:
            offs = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
            break;
        case Family::Knight:
            offs = {{1, 2}, {1, -2}, {-1, 2}, {-1, -2}, {2, 1}, {2, -1}, {-2, 1}, {-2, -1}};
            break;
        case Family::TriangularPatch:
            offs = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}};
            break;
        case Family::HexagonalPatch:
            offs = {{0, 1}, {0, -1}};
            offs.emplace_back((i + j) % 2 == 0 ? 1 : -1, 0);
            break;
        case Family::RRook:
            for (int d = 1; d <= pat.r; ++d) {
                offs.emplace_back(d, 0);
                offs.emplace_back(-d, 0);
                offs.emplace_back(0, d);
                offs.emplace_back(0, -d);
            }
            break;
        case Family::RBishopComponent:
            for (int d = 1; d <= pat.r; ++d) {
                offs.emplace_back(d, d);
                offs.emplace_back(d, -d);
                offs.emplace_back(-d, d);
                offs.emplace_back(-d, -d);
            }
            break;
        default:
            fail(ErrorCode::Internal, "unhandled periodic family");
    }
    return offs;
}

} // namespace

DensityReport verify_periodic(const PeriodicPattern& pat) {
    validate_pattern(pat);
    std::vector<uint8_t> sel(static_cast<size_t>(pat.p) * pat.q, 0);
    for (auto [i, j] : pat.cells) sel[static_cast<size_t>(i) * pat.q + j] = 1;

    DensityReport rep;
    rep.ok = true;
    rep.independent = true;
    auto wrap = [](int v, int mod) {
        v %= mod;
        return v < 0 ? v + mod : v;
    };
    for (int i = 0; i < pat.p; ++i) {
        for (int j = 0; j < pat.q; ++j) {
            if (pat.family == Family::RBishopComponent && (i + j) % 2 != 0) continue;
            int count = 0;
            for (auto [di, dj] : offsets_at(pat, i, j)) {
                int ni = wrap(i + di, pat.p);
                int nj = wrap(j + dj, pat.q);
                count += sel[static_cast<size_t>(ni) * pat.q + nj];
            }
            bool bad;
            if (sel[static_cast<size_t>(i) * pat.q + j]) {
                bad = count > 0;
                if (bad) rep.independent = false;
            } else {
                bad = count > 0 && count % 2 == 0;
            }
            if (bad) {
                rep.ok = false;
                if (static_cast<int>(rep.violators.size()) < kMaxListed)
                    rep.violators.emplace_back(i, j, count);
            }
        }
    }
    long long domain = static_cast<long long>(pat.p) * pat.q;
    if (pat.family == Family::RBishopComponent) domain /= 2;
    rep.density = Rational(static_cast<long long>(pat.cells.size()), domain);
    return rep;
}

PeriodicPattern from_torus_solution(int k, const std::vector<int>& s) {
    if (k < 3) fail(ErrorCode::Param, "torus needs k >= 3");
    Graph g = Graph::build({Family::TorusGrid, k});
    CheckReport chk = is_odd_independent(g, s);
    if (!chk.ok)
        fail(ErrorCode::Domain, "set is not odd-independent on the torus");
    PeriodicPattern pat;
    pat.p = k;
    pat.q = k;
    pat.family = Family::PathGrid;
    for (int v : s) pat.cells.emplace_back(v / k, v % k);
    return pat;
}

PeriodicPattern r_rook_diagonal_pattern(int r) {
    if (r < 1) fail(ErrorCode::Param, "reach must be >= 1");
    PeriodicPattern pat;
    pat.p = r + 1;
    pat.q = 2 * r + 1;
    pat.family = Family::RRook;
    pat.r = r;
    for (int i = 0; i <= r; ++i) pat.cells.emplace_back(i, i);
    if (!verify_periodic(pat).ok)
        fail(ErrorCode::Construction, "diagonal rook pattern failed verification");
    return pat;
}

PeriodicPattern skew_to_bishop(const PeriodicPattern& rook_pattern) {
    if (rook_pattern.family != Family::RRook)
        fail(ErrorCode::Param, "skew transform expects an r-rook pattern");
    validate_pattern(rook_pattern);
    int p = rook_pattern.p;
    int q = rook_pattern.q;
    int side = 2 * (p / std::gcd(p, q)) * q;
    PeriodicPattern pat;
    pat.p = side;
    pat.q = side;
    pat.family = Family::RBishopComponent;
    pat.r = rook_pattern.r;

    std::vector<uint8_t> sel(static_cast<size_t>(p) * q, 0);
    for (auto [i, j] : rook_pattern.cells) sel[static_cast<size_t>(i) * q + j] = 1;
    auto wrap = [](long long v, int mod) {
        int w = static_cast<int>(v % mod);
        return w < 0 ? w + mod : w;
    };
    for (int i = 0; i < side; ++i) {
        for (int j = 0; j < side; ++j) {
            if ((i + j) % 2 != 0) continue;
            int u = wrap((static_cast<long long>(i) + j) / 2, p);
            int v = wrap((static_cast<long long>(i) - j) / 2, q);
            if (sel[static_cast<size_t>(u) * q + v]) pat.cells.emplace_back(i, j);
        }
    }
    if (!verify_periodic(pat).ok)
        fail(ErrorCode::Construction, "skewed bishop pattern failed verification");
    return pat;
}

PeriodicPattern r_bishop_diagonal_pattern(int r) {
    return skew_to_bishop(r_rook_diagonal_pattern(r));
}

PeriodicPattern knight_central_pattern() {
    // Black cells with one skip per even-index row, the skip column advancing
    // by a constant diagonal shift between those rows. The paper fixes the
    // idea but not the parameters, so the small parameter space is swept and
    // the verifier picks the pattern that works.
    for (int par = 0; par < 2; ++par) {
        for (int rowpar = 0; rowpar < 2; ++rowpar) {
            for (int shift = 0; shift < 8; ++shift) {
                for (int off = 0; off < 8; ++off) {
                    PeriodicPattern pat;
                    pat.p = 8;
                    pat.q = 8;
                    pat.family = Family::Knight;
                    for (int i = 0; i < 8; ++i) {
                        for (int j = 0; j < 8; ++j) {
                            if ((i + j) % 2 != par) continue;
                            if (i % 2 == rowpar && j == (shift * (i / 2) + off) % 8)
                                continue;
                            pat.cells.emplace_back(i, j);
                        }
                    }
                    if (pat.cells.size() != 28) continue;
                    if (verify_periodic(pat).ok) return pat;
                }
            }
        }
    }
    fail(ErrorCode::Construction, "no verifying knight pattern in the search space");
}

PeriodicPattern triangular_class_pattern() {
    PeriodicPattern pat;
    pat.p = 3;
    pat.q = 3;
    pat.family = Family::TriangularPatch;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if ((i - j + 3) % 3 == 0) pat.cells.emplace_back(i, j);
    if (!verify_periodic(pat).ok)
        fail(ErrorCode::Construction, "triangular class pattern failed verification");
    return pat;
}

PeriodicPattern hexagonal_class_pattern() {
    PeriodicPattern pat;
    pat.p = 2;
    pat.q = 2;
    pat.family = Family::HexagonalPatch;
    pat.cells = {{0, 0}, {1, 1}};
    if (!verify_periodic(pat).ok)
        fail(ErrorCode::Construction, "hexagonal class pattern failed verification");
    return pat;
}

SandwichReport sandwich_check(const std::vector<std::pair<int, int>>& torus_values,
                              const std::vector<std::pair<int, int>>& iod_values) {
    if (torus_values.empty() || iod_values.empty())
        fail(ErrorCode::Param, "sandwich check needs values on both sides");
    SandwichReport rep;
    bool first = true;
    for (auto [k, alpha] : torus_values) {
        if (k < 3 || alpha < 0) fail(ErrorCode::Param, "bad torus value");
        Rational ratio(alpha, static_cast<long long>(k) * k);
        if (first || rep.lower < ratio) {
            rep.lower = ratio;
            rep.lower_k = k;
        }
        first = false;
    }
    first = true;
    for (auto [k, alpha] : iod_values) {
        if (k < 3 || alpha < 0) fail(ErrorCode::Param, "bad internally-odd value");
        Rational ratio(alpha, static_cast<long long>(k) * k);
        if (first || ratio < rep.upper) {
            rep.upper = ratio;
            rep.upper_k = k;
        }
        first = false;
    }
    rep.ok = rep.lower < rep.upper || rep.lower == rep.upper;
    return rep;
}

} // namespace oddgrid
