#pragma once

#include <string>
#include <vector>

#include "graph.hpp"

namespace oddgrid {

// Verdict for a candidate strong odd coloring. `improper_edges` lists
// monochromatic edges; `parity_violations` lists (vertex, color) pairs where
// the color shows up a positive even number of times in the vertex's open
// neighborhood. Both lists are truncated to the first 64 offences.
struct ColoringReport {
    bool ok = false;
    bool proper = false;
    int palette = 0;
    std::vector<std::pair<int, int>> improper_edges;
    std::vector<std::pair<int, int>> parity_violations;
};

ColoringReport verify_strong_odd(const Graph& g, const std::vector<int>& colors);

// Constructive colorings. Each returns a vertex-indexed color vector for the
// stated board and re-verifies itself before returning; a Construction error
// means the pattern does not fit the requested dimensions.

// 5-coloring (2a+b) mod 5 of the rows x cols path grid. Works for every
// board size because the four neighbor offsets land on four distinct
// residues.
std::vector<int> grid_5_coloring(int rows, int cols);

// 4-coloring of the m(2t-1) x 2t path grid built from nested square frames.
// The board is m blocks of shape (2t-1) x 2t stacked along the rows; each
// block swaps the color pairs (1,2) and (3,4) of the previous one. Colors
// are returned 0-based (0..3).
std::vector<int> grid_frame_4_coloring(int t, int m);

// 9-coloring (a mod 3) + 3 (b mod 3) of the n x n king graph.
std::vector<int> king_9_coloring(int n);

// Infinite-lattice colorings are described by a periodic rule and verified
// over a finite window with enough margin that every checked vertex sees its
// full neighborhood.
enum class LatticeKind { DGrid, Triangular, Hexagonal };

enum class LatticeMode { StrongOdd, ProperOnSquare };

struct LatticeColoring {
    LatticeKind kind = LatticeKind::DGrid;
    int dim = 2;
    int palette = 0;
    LatticeMode mode = LatticeMode::StrongOdd;
    std::vector<int> period;
    std::string name;

    int color_at(const std::vector<int>& point) const;
};

// (sum a_i) mod 3 for odd d; for even d the last axis contributes its parity
// instead, giving period 6 on that axis.
LatticeColoring dgrid_3_coloring(int d);

// (sum (i+1) a_i) mod (2d+1): a proper coloring of the square of the d-grid.
LatticeColoring dgrid_square_coloring(int d);

// (i - j) mod 3 on the triangular lattice.
LatticeColoring triangular_3_coloring();

// (i + j) mod 2 on the hexagonal (brick wall) lattice.
LatticeColoring hexagonal_2_coloring();

struct LatticeReport {
    bool ok = false;
    long long checked_vertices = 0;
    long long window_vertices = 0;
    int tiles_covered = 0; // full periods spanned along the tightest axis
    std::vector<std::vector<int>> violations; // first few offending points
};

// Checks the rule over an extent^dim window. Vertices within the margin
// (1 for strong odd, 2 for square properness) of the window boundary are
// skipped since their neighborhoods are clipped. The extent must cover at
// least two periods plus the margin on every axis.
LatticeReport verify_lattice_coloring(const LatticeColoring& lc, int extent);

} // namespace oddgrid
