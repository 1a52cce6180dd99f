#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "errors.hpp"

namespace oddgrid {

// Hard cap on graph order. Desk-scale boards stay far below this; the cap
// exists so a typo in a CLI argument fails fast instead of allocating GBs.
inline constexpr int kMaxVertices = 4096;

enum class Family {
    PathGrid,       // P_k box P_k
    CylinderGrid,   // P_k box C_k, cycle on the second coordinate
    TorusGrid,      // C_k box C_k
    King,
    RKing,
    Rook,
    RRook,
    BishopComponent,
    RBishopComponent,
    Queen,
    Knight,
    TriangularPatch,
    HexagonalPatch,
    Complete,
    CompleteMultipartite,
    Path,
    Cycle,
    Product,        // result of cartesian/strong product
    Square,         // result of square()
    Custom,         // from_edges
};

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

struct FamilySpec {
    Family family = Family::Custom;
    int size = 0;           // k for grids, n for boards, order for complete/path/cycle
    int r = 0;              // range parameter for r_king / r_rook / r_bishop_component
    int component = 0;      // bishop color class: 0 = class of (0,0), 1 = the other
    std::vector<int> parts; // complete_multipartite part sizes
};

class Graph {
public:
    static Graph build(const FamilySpec& spec);

    // Disjoint union of both bishop color classes on one n x n board.
    // r = 0 means unbounded move range.
    static Graph bishop_full(int n, int r = 0);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    Graph cartesian(const Graph& h) const;
    Graph strong(const Graph& h) const;
    Graph square() const;

    int order() const { return n_; }
    long long edge_count() const { return m_; }
    int degree(int v) const { return deg_[v]; }
    bool adjacent(int u, int v) const { return adj_[u].test(v); }

    const Bits& neighbors(int v) const { return adj_[v]; }
    const Bits& closed_neighbors(int v) const { return closed_[v]; }

    // Board coordinates. Only set for families laid out on a grid.
    bool has_coords() const { return !coords_.empty(); }
    std::pair<int, int> coord(int v) const { return coords_[v]; }
    int board_rows() const { return board_rows_; }
    int board_cols() const { return board_cols_; }
    // Vertex at board cell (i, j), or -1 if the cell is absent (bishop
    // components skip half the board) or out of range.
    int vertex_at(int i, int j) const;

    // True when no vertex has r pairwise nonadjacent neighbours, i.e. the
    // graph has no induced K_{1,r}.
    bool is_claw_free(int r = 3) const;

    const FamilySpec& spec() const { return spec_; }
    std::string label() const;

private:
    Graph() = default;

    void init(int n);
    void add_edge(int u, int v);
    void finish();
    void set_board(int rows, int cols, const std::vector<std::pair<int, int>>& cells);

    FamilySpec spec_;
    int n_ = 0;
    long long m_ = 0;
    std::vector<Bits> adj_;
    std::vector<Bits> closed_;
    std::vector<int> deg_;
    std::vector<std::pair<int, int>> coords_;
    std::vector<int> cell_vertex_; // board_rows_ * board_cols_ entries, -1 = no vertex
    int board_rows_ = 0;
    int board_cols_ = 0;
};

} // namespace oddgrid
