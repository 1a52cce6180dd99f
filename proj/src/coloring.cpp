#include "coloring.hpp"

#include <algorithm>
#include <functional>

#include "errors.hpp"

namespace oddgrid {

namespace {

constexpr int kMaxListed = 64;

Graph path_grid(int rows, int cols) {
    if (rows == cols) return Graph::build({Family::PathGrid, rows});
    Graph a = Graph::build({Family::Path, rows});
    Graph b = Graph::build({Family::Path, cols});
    return a.cartesian(b);
}

} // namespace

ColoringReport verify_strong_odd(const Graph& g, const std::vector<int>& colors) {
    int n = g.order();
    if (static_cast<int>(colors.size()) != n)
        fail(ErrorCode::Param, "coloring size does not match graph order");
    ColoringReport rep;
    rep.proper = true;
    rep.ok = true;
    int palette = 0;
    for (int c : colors) {
        if (c < 0) fail(ErrorCode::Param, "colors must be nonnegative");
        palette = std::max(palette, c + 1);
    }
    rep.palette = palette;

    std::vector<int> count(palette, 0);
    std::vector<int> touched;
    for (int v = 0; v < n; ++v) {
        touched.clear();
        g.neighbors(v).for_each([&](int u) {
            if (u > v && colors[u] == colors[v]) {
                rep.proper = false;
                rep.ok = false;
                if (static_cast<int>(rep.improper_edges.size()) < kMaxListed)
                    rep.improper_edges.emplace_back(v, u);
            }
            if (count[colors[u]]++ == 0) touched.push_back(colors[u]);
        });
        for (int c : touched) {
            if (count[c] % 2 == 0) {
                rep.ok = false;
                if (static_cast<int>(rep.parity_violations.size()) < kMaxListed)
                    rep.parity_violations.emplace_back(v, c);
            }
            count[c] = 0;
        }
    }
    return rep;
}

std::vector<int> grid_5_coloring(int rows, int cols) {
    if (rows < 1 || cols < 1) fail(ErrorCode::Param, "board sides must be positive");
    Graph g = path_grid(rows, cols);
    std::vector<int> colors(g.order());
    for (int a = 0; a < rows; ++a)
        for (int b = 0; b < cols; ++b) colors[a * cols + b] = (2 * a + b) % 5;
    if (!verify_strong_odd(g, colors).ok)
        fail(ErrorCode::Construction, "grid 5-coloring failed verification");
    return colors;
}

namespace {

// Nested-frame coloring of one (2t-1) x 2t block with colors 1..4; cells left
// at 0 are the fill positions in the first and last column. The block is two
// overlapping (2s-1)-squares; the frame of each is its width-2 border ring
// restricted to one checkerboard class, and the construction recurses on the
// central subtable with the color pairs swapped.
std::vector<std::vector<int>> frame_block(int t) {
    int rows = 2 * t - 1;
    int cols = 2 * t;
    std::vector<std::vector<int>> c(rows, std::vector<int>(cols, 0));
    int top = 0;
    int left = 0;
    int r = rows;
    int level = 0;
    while (r >= 1) {
        int s = (r + 1) / 2;
        int c1 = level % 2 == 0 ? 1 : 3;
        int c2 = c1 + 1;
        auto band = [s](int z) { return z == 1 || z == 2 || z == 2 * s - 2 || z == 2 * s - 1; };
        for (int lx = 1; lx <= 2 * s - 1; ++lx) {
            for (int ly = 1; ly <= 2 * s; ++ly) {
                int x = top + lx - 1;
                int y = left + ly - 1;
                if (c[x][y] != 0) continue;
                if (ly <= 2 * s - 1 && (band(lx) || band(ly)) && (lx + ly) % 2 == 0) {
                    c[x][y] = c1;
                } else if (ly >= 2) {
                    int ry = ly - 1;
                    if ((band(lx) || band(ry)) && (lx + ry) % 2 == 0) c[x][y] = c2;
                }
            }
        }
        top += 2;
        left += 2;
        r -= 4;
        ++level;
    }
    return c;
}

// Consecutive blocks swap the color pairs {1,2} and {3,4}. Within that
// constraint the recoloring of each block still has two free choices per
// pair (keep or flip its two colors), and which combination satisfies the
// seam constraints depends on the block parity, so the construction searches
// the four candidates per block alongside the fill phases.
constexpr int kSamePairMaps[4][5] = {
    {0, 1, 2, 3, 4},
    {0, 2, 1, 3, 4},
    {0, 1, 2, 4, 3},
    {0, 2, 1, 4, 3},
};
constexpr int kCrossPairMaps[4][5] = {
    {0, 3, 4, 1, 2},
    {0, 4, 3, 1, 2},
    {0, 3, 4, 2, 1},
    {0, 4, 3, 2, 1},
};

} // namespace

std::vector<int> grid_frame_4_coloring(int t, int m) {
    if (t < 2 || m < 1) fail(ErrorCode::Param, "frame coloring needs t >= 2 and m >= 1");
    int bh = 2 * t - 1; // block height
    int rows = m * bh;
    int cols = 2 * t;
    if (static_cast<long long>(rows) * cols > kMaxVertices)
        fail(ErrorCode::Capacity, "board exceeds the vertex capacity");

    std::vector<std::vector<int>> block = frame_block(t);
    for (int x = 0; x < bh; ++x)
        for (int y = 0; y < cols; ++y)
            if (block[x][y] == 0 && !(x % 2 == 1 && (y == 0 || y == cols - 1)))
                fail(ErrorCode::Construction, "frame recursion left an unexpected gap");

    std::vector<std::vector<int>> board(rows, std::vector<int>(cols, 0));

    auto check_box = [&](int rlo, int rhi, int clo, int chi) {
        int counts[5] = {0, 0, 0, 0, 0};
        for (int x = std::max(0, rlo); x <= std::min(rows - 1, rhi); ++x) {
            for (int y = std::max(0, clo); y <= std::min(cols - 1, chi); ++y) {
                if (board[x][y] == 0) continue;
                bool decided = true;
                int deg = 0;
                int nx[4], ny[4];
                if (x > 0) { nx[deg] = x - 1; ny[deg++] = y; }
                if (x + 1 < rows) { nx[deg] = x + 1; ny[deg++] = y; }
                if (y > 0) { nx[deg] = x; ny[deg++] = y - 1; }
                if (y + 1 < cols) { nx[deg] = x; ny[deg++] = y + 1; }
                for (int k = 0; k < deg; ++k)
                    if (board[nx[k]][ny[k]] == 0) decided = false;
                if (!decided) continue;
                bool ok = true;
                for (int k = 0; k < deg; ++k) {
                    int cc = board[nx[k]][ny[k]];
                    if (cc == board[x][y]) ok = false;
                    ++counts[cc];
                }
                for (int cc = 1; cc <= 4; ++cc) {
                    if (counts[cc] > 0 && counts[cc] % 2 == 0) ok = false;
                    counts[cc] = 0;
                }
                if (!ok) return false;
            }
        }
        return true;
    };

    // Blocks are decided top to bottom. Each block picks a recoloring of the
    // base pattern (pair-swapped against its predecessor), then the fill
    // phases of its first and last column; the even local rows of those
    // columns alternate within the pair the block's frame does not use. A
    // vertex is checked as soon as its whole neighborhood is decided, so bad
    // combinations are cut at the seam where they arise.
    auto paint_frame = [&](int b, const int* map) {
        int base = b * bh;
        for (int lx = 0; lx < bh; ++lx)
            for (int y = 0; y < cols; ++y) board[base + lx][y] = map[block[lx][y]];
    };
    auto place_fills = [&](int b, int col, const int* map, int phase) {
        int base = b * bh;
        for (int lx = 1; lx < bh; lx += 2) {
            int j = (lx - 1) / 2;
            board[base + lx][col] = (j + phase) % 2 == 0 ? map[3] : map[4];
        }
    };
    auto clear_fills = [&](int b, int col) {
        int base = b * bh;
        for (int lx = 1; lx < bh; lx += 2) board[base + lx][col] = 0;
    };

    std::function<bool(int)> decide = [&](int b) {
        if (b == m) return true;
        int base = b * bh;
        for (int choice = 0; choice < (b == 0 ? 1 : 4); ++choice) {
            const int* map =
                b % 2 == 0 ? kSamePairMaps[choice] : kCrossPairMaps[choice];
            paint_frame(b, map);
            if (!check_box(base - 2, base + bh, 0, cols - 1)) continue;
            bool done = false;
            for (int pl = 0; pl < 2 && !done; ++pl) {
                place_fills(b, 0, map, pl);
                if (check_box(base - 2, base + bh, 0, 1)) {
                    for (int pr = 0; pr < 2 && !done; ++pr) {
                        place_fills(b, cols - 1, map, pr);
                        if (check_box(base - 2, base + bh, cols - 2, cols - 1) &&
                            decide(b + 1)) {
                            done = true;
                            break;
                        }
                        if (!done) clear_fills(b, cols - 1);
                    }
                }
                if (!done) clear_fills(b, 0);
            }
            if (done) return true;
            for (int lx = 0; lx < bh; ++lx)
                for (int y = 0; y < cols; ++y) board[base + lx][y] = 0;
        }
        return false;
    };
    if (!decide(0))
        fail(ErrorCode::Construction, "no consistent block layout for these dimensions");

    // The first and last row of every block must use only that block's frame
    // pair; anything else means the frame layout is broken.
    for (int b = 0; b < m; ++b) {
        int lo = b % 2 == 0 ? 1 : 3;
        for (int x : {b * bh, b * bh + bh - 1})
            for (int y = 0; y < cols; ++y)
                if (board[x][y] < lo || board[x][y] > lo + 1)
                    fail(ErrorCode::Construction, "boundary rows left the frame pair");
    }

    Graph g = path_grid(rows, cols);
    std::vector<int> colors(g.order());
    for (int x = 0; x < rows; ++x)
        for (int y = 0; y < cols; ++y) {
            if (board[x][y] == 0)
                fail(ErrorCode::Construction, "uncolored cell after fill placement");
            colors[x * cols + y] = board[x][y] - 1;
        }
    if (!verify_strong_odd(g, colors).ok)
        fail(ErrorCode::Construction, "frame coloring failed verification");
    return colors;
}

std::vector<int> king_9_coloring(int n) {
    if (n < 1) fail(ErrorCode::Param, "board side must be positive");
    Graph g = Graph::build({Family::King, n});
    std::vector<int> colors(g.order());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) colors[a * n + b] = (a % 3) + 3 * (b % 3);
    if (!verify_strong_odd(g, colors).ok)
        fail(ErrorCode::Construction, "king 9-coloring failed verification");
    return colors;
}

int LatticeColoring::color_at(const std::vector<int>& point) const {
    if (static_cast<int>(point.size()) != dim)
        fail(ErrorCode::Param, "point dimension mismatch");
    auto nonneg_mod = [](long long v, int mod) {
        int r = static_cast<int>(v % mod);
        return r < 0 ? r + mod : r;
    };
    switch (kind) {
        case LatticeKind::DGrid: {
            if (mode == LatticeMode::ProperOnSquare) {
                long long s = 0;
                for (int i = 0; i < dim; ++i)
                    s += static_cast<long long>(i + 1) * point[i];
                return nonneg_mod(s, 2 * dim + 1);
            }
            long long s = 0;
            if (dim % 2 == 1) {
                for (int x : point) s += x;
                return nonneg_mod(s, 3);
            }
            for (int i = 0; i + 1 < dim; ++i) s += point[i];
            return (nonneg_mod(s, 3) + nonneg_mod(point[dim - 1], 2)) % 3;
        }
        case LatticeKind::Triangular:
            return nonneg_mod(static_cast<long long>(point[0]) - point[1], 3);
        case LatticeKind::Hexagonal:
            return nonneg_mod(static_cast<long long>(point[0]) + point[1], 2);
    }
    fail(ErrorCode::Internal, "unhandled lattice kind");
}

LatticeColoring dgrid_3_coloring(int d) {
    if (d < 1 || d > 8) fail(ErrorCode::Param, "dimension must be in 1..8");
    LatticeColoring lc;
    lc.kind = LatticeKind::DGrid;
    lc.dim = d;
    lc.palette = 3;
    lc.mode = LatticeMode::StrongOdd;
    lc.period.assign(d, 3);
    if (d % 2 == 0) lc.period[d - 1] = 6;
    lc.name = "dgrid3_d" + std::to_string(d);
    return lc;
}

LatticeColoring dgrid_square_coloring(int d) {
    if (d < 1 || d > 8) fail(ErrorCode::Param, "dimension must be in 1..8");
    LatticeColoring lc;
    lc.kind = LatticeKind::DGrid;
    lc.dim = d;
    lc.palette = 2 * d + 1;
    lc.mode = LatticeMode::ProperOnSquare;
    lc.period.assign(d, 2 * d + 1);
    lc.name = "dgridsq_d" + std::to_string(d);
    return lc;
}

LatticeColoring triangular_3_coloring() {
    LatticeColoring lc;
    lc.kind = LatticeKind::Triangular;
    lc.dim = 2;
    lc.palette = 3;
    lc.mode = LatticeMode::StrongOdd;
    lc.period = {3, 3};
    lc.name = "triangular3";
    return lc;
}

LatticeColoring hexagonal_2_coloring() {
    LatticeColoring lc;
    lc.kind = LatticeKind::Hexagonal;
    lc.dim = 2;
    lc.palette = 2;
    lc.mode = LatticeMode::StrongOdd;
    lc.period = {2, 2};
    lc.name = "hexagonal2";
    return lc;
}

namespace {

std::vector<std::vector<int>> lattice_offsets(const LatticeColoring& lc,
                                              const std::vector<int>& point) {
    std::vector<std::vector<int>> offs;
    switch (lc.kind) {
        case LatticeKind::DGrid:
            for (int i = 0; i < lc.dim; ++i) {
                std::vector<int> e(lc.dim, 0);
                e[i] = 1;
                offs.push_back(e);
                e[i] = -1;
                offs.push_back(e);
            }
            break;
        case LatticeKind::Triangular:
            offs = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}};
            break;
        case LatticeKind::Hexagonal:
            offs = {{0, 1}, {0, -1}};
            offs.push_back((point[0] + point[1]) % 2 == 0 ? std::vector<int>{1, 0}
                                                          : std::vector<int>{-1, 0});
            break;
    }
    return offs;
}

} // namespace

LatticeReport verify_lattice_coloring(const LatticeColoring& lc, int extent) {
    int margin = lc.mode == LatticeMode::StrongOdd ? 1 : 2;
    int maxp = *std::max_element(lc.period.begin(), lc.period.end());
    if (extent < 2 * maxp + 2 * margin + 1)
        fail(ErrorCode::Param, "window must span two periods plus the margin");
    double total = 1;
    for (int i = 0; i < lc.dim; ++i) total *= extent;
    if (total > 8e6) fail(ErrorCode::Capacity, "window too large to sweep");

    LatticeReport rep;
    rep.ok = true;
    rep.window_vertices = static_cast<long long>(total);
    int span = extent - 2 * margin;
    rep.tiles_covered = span / maxp;
    for (int p : lc.period) rep.tiles_covered = std::min(rep.tiles_covered, span / p);

    // Offsets reaching graph distance 2, for properness of the square.
    std::vector<std::vector<int>> square_offs;
    if (lc.mode == LatticeMode::ProperOnSquare) {
        std::vector<int> probe(lc.dim, 0);
        auto base = lattice_offsets(lc, probe);
        auto add = [&](const std::vector<int>& o) {
            bool zero = std::all_of(o.begin(), o.end(), [](int x) { return x == 0; });
            if (zero) return;
            if (std::find(square_offs.begin(), square_offs.end(), o) == square_offs.end())
                square_offs.push_back(o);
        };
        for (const auto& a : base) {
            add(a);
            for (const auto& b : base) {
                std::vector<int> o(lc.dim);
                for (int i = 0; i < lc.dim; ++i) o[i] = a[i] + b[i];
                add(o);
            }
        }
    }

    std::vector<int> point(lc.dim, margin);
    std::vector<int> counts(lc.palette, 0);
    bool done = false;
    while (!done) {
        int own = lc.color_at(point);
        bool bad = false;
        if (lc.mode == LatticeMode::StrongOdd) {
            auto offs = lattice_offsets(lc, point);
            std::vector<int> nbr(lc.dim);
            for (const auto& o : offs) {
                for (int i = 0; i < lc.dim; ++i) nbr[i] = point[i] + o[i];
                int c = lc.color_at(nbr);
                if (c == own) bad = true;
                ++counts[c];
            }
            for (int c = 0; c < lc.palette; ++c) {
                if (counts[c] > 0 && counts[c] % 2 == 0) bad = true;
                counts[c] = 0;
            }
        } else {
            std::vector<int> nbr(lc.dim);
            for (const auto& o : square_offs) {
                for (int i = 0; i < lc.dim; ++i) nbr[i] = point[i] + o[i];
                if (lc.color_at(nbr) == own) bad = true;
            }
        }
        ++rep.checked_vertices;
        if (bad) {
            rep.ok = false;
            if (rep.violations.size() < 8) rep.violations.push_back(point);
        }
        for (int i = lc.dim - 1;; --i) {
            if (i < 0) {
                done = true;
                break;
            }
            if (++point[i] <= extent - 1 - margin) break;
            point[i] = margin;
        }
    }
    return rep;
}

} // namespace oddgrid
