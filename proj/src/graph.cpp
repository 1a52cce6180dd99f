#include "graph.hpp"

#include <algorithm>
#include <cstdlib>

namespace oddgrid {

const char* family_name(Family f) {
    switch (f) {
        case Family::PathGrid: return "path_grid";
        case Family::CylinderGrid: return "cylinder_grid";
        case Family::TorusGrid: return "torus_grid";
        case Family::King: return "king";
        case Family::RKing: return "r_king";
        case Family::Rook: return "rook";
        case Family::RRook: return "r_rook";
        case Family::BishopComponent: return "bishop_component";
        case Family::RBishopComponent: return "r_bishop_component";
        case Family::Queen: return "queen";
        case Family::Knight: return "knight";
        case Family::TriangularPatch: return "triangular_patch";
        case Family::HexagonalPatch: return "hexagonal_patch";
        case Family::Complete: return "complete";
        case Family::CompleteMultipartite: return "complete_multipartite";
        case Family::Path: return "path";
        case Family::Cycle: return "cycle";
        case Family::Product: return "product";
        case Family::Square: return "square";
        case Family::Custom: return "custom";
    }
    return "unknown";
}

std::optional<Family> family_from_name(const std::string& name) {
    static const std::pair<const char*, Family> table[] = {
        {"path_grid", Family::PathGrid},
        {"cylinder_grid", Family::CylinderGrid},
        {"torus_grid", Family::TorusGrid},
        {"king", Family::King},
        {"r_king", Family::RKing},
        {"rook", Family::Rook},
        {"r_rook", Family::RRook},
        {"bishop_component", Family::BishopComponent},
        {"r_bishop_component", Family::RBishopComponent},
        {"queen", Family::Queen},
        {"knight", Family::Knight},
        {"triangular_patch", Family::TriangularPatch},
        {"hexagonal_patch", Family::HexagonalPatch},
        {"complete", Family::Complete},
        {"complete_multipartite", Family::CompleteMultipartite},
        {"path", Family::Path},
        {"cycle", Family::Cycle},
    };
    for (const auto& [n, f] : table)
        if (name == n) return f;
    return std::nullopt;
}

void Graph::init(int n) {
    if (n < 0) fail(ErrorCode::Param, "graph order must be nonnegative");
    if (n > kMaxVertices)
        fail(ErrorCode::Capacity, "graph order " + std::to_string(n) + " exceeds capacity " +
                                      std::to_string(kMaxVertices));
    n_ = n;
    m_ = 0;
    adj_.assign(n, Bits(n));
    deg_.assign(n, 0);
}

void Graph::add_edge(int u, int v) {
    if (u == v) return;
    if (adj_[u].test(v)) return;
    adj_[u].set(v);
    adj_[v].set(u);
    ++deg_[u];
    ++deg_[v];
    ++m_;
}

void Graph::finish() {
    closed_ = adj_;
    for (int v = 0; v < n_; ++v) closed_[v].set(v);
}

void Graph::set_board(int rows, int cols, const std::vector<std::pair<int, int>>& cells) {
    board_rows_ = rows;
    board_cols_ = cols;
    coords_ = cells;
    cell_vertex_.assign(static_cast<size_t>(rows) * cols, -1);
    for (int v = 0; v < static_cast<int>(cells.size()); ++v)
        cell_vertex_[static_cast<size_t>(cells[v].first) * cols + cells[v].second] = v;
}

int Graph::vertex_at(int i, int j) const {
    if (cell_vertex_.empty()) return -1;
    if (i < 0 || i >= board_rows_ || j < 0 || j >= board_cols_) return -1;
    return cell_vertex_[static_cast<size_t>(i) * board_cols_ + j];
}

namespace {

int checked_square(int k, const char* what) {
    if (k < 1) fail(ErrorCode::Param, std::string(what) + " requires size >= 1");
    long long n = static_cast<long long>(k) * k;
    if (n > kMaxVertices)
        fail(ErrorCode::Capacity, std::string(what) + " board " + std::to_string(k) + "x" +
                                      std::to_string(k) + " exceeds vertex capacity");
    return static_cast<int>(n);
}

std::vector<std::pair<int, int>> full_board_cells(int k) {
    std::vector<std::pair<int, int>> cells;
    cells.reserve(static_cast<size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) cells.emplace_back(i, j);
    return cells;
}

} // namespace

Graph Graph::build(const FamilySpec& spec) {
    Graph g;
    g.spec_ = spec;
    const int k = spec.size;
    const int r = spec.r;

    auto need_r = [&](const char* fam) {
        if (r < 1) fail(ErrorCode::Param, std::string(fam) + " requires r >= 1");
    };

    switch (spec.family) {
        case Family::PathGrid:
        case Family::TorusGrid:
        case Family::CylinderGrid: {
            const char* fam = family_name(spec.family);
            bool wrap = spec.family != Family::PathGrid;
            if (wrap && k < 3) fail(ErrorCode::Param, std::string(fam) + " requires k >= 3");
            g.init(checked_square(k, fam));
            auto at = [&](int i, int j) { return i * k + j; };
            for (int i = 0; i < k; ++i) {
                for (int j = 0; j < k; ++j) {
                    // First coordinate follows the path; it wraps only on the
                    // torus. The second coordinate wraps on both cylinder and
                    // torus, so cylinder cells (i, 0) and (i, k-1) are adjacent.
                    if (i + 1 < k) g.add_edge(at(i, j), at(i + 1, j));
                    else if (spec.family == Family::TorusGrid) g.add_edge(at(i, j), at(0, j));
                    if (j + 1 < k) g.add_edge(at(i, j), at(i, j + 1));
                    else if (wrap) g.add_edge(at(i, j), at(i, 0));
                }
            }
            g.set_board(k, k, full_board_cells(k));
            break;
        }
        case Family::King:
        case Family::RKing: {
            int range = spec.family == Family::King ? 1 : r;
            if (spec.family == Family::RKing) need_r("r_king");
            g.init(checked_square(k, family_name(spec.family)));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    for (int di = -range; di <= range; ++di)
                        for (int dj = -range; dj <= range; ++dj) {
                            if (di == 0 && dj == 0) continue;
                            int a = i + di, b = j + dj;
                            if (a < 0 || a >= k || b < 0 || b >= k) continue;
                            g.add_edge(i * k + j, a * k + b);
                        }
            g.set_board(k, k, full_board_cells(k));
            break;
        }
        case Family::Rook:
        case Family::RRook: {
            int range = spec.family == Family::Rook ? k : r;
            if (spec.family == Family::RRook) need_r("r_rook");
            g.init(checked_square(k, family_name(spec.family)));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) {
                    for (int t = 1; t <= range; ++t) {
                        if (i + t < k) g.add_edge(i * k + j, (i + t) * k + j);
                        if (j + t < k) g.add_edge(i * k + j, i * k + j + t);
                    }
                }
            g.set_board(k, k, full_board_cells(k));
            break;
        }
        case Family::BishopComponent:
        case Family::RBishopComponent: {
            int range = spec.family == Family::BishopComponent ? k : r;
            if (spec.family == Family::RBishopComponent) need_r("r_bishop_component");
            if (spec.component != 0 && spec.component != 1)
                fail(ErrorCode::Param, "bishop component must be 0 or 1");
            if (k < 1) fail(ErrorCode::Param, "bishop_component requires size >= 1");
            std::vector<std::pair<int, int>> cells;
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    if ((i + j) % 2 == spec.component) cells.emplace_back(i, j);
            if (static_cast<int>(cells.size()) > kMaxVertices)
                fail(ErrorCode::Capacity, "bishop component exceeds vertex capacity");
            g.init(static_cast<int>(cells.size()));
            g.set_board(k, k, cells);
            for (int v = 0; v < g.n_; ++v) {
                auto [i, j] = cells[v];
                for (int t = 1; t <= range; ++t)
                    for (int si = -1; si <= 1; si += 2)
                        for (int sj = -1; sj <= 1; sj += 2) {
                            int u = g.vertex_at(i + si * t, j + sj * t);
                            if (u >= 0) g.add_edge(v, u);
                        }
            }
            break;
        }
        case Family::Queen: {
            g.init(checked_square(k, "queen"));
            auto at = [&](int i, int j) { return i * k + j; };
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    for (int t = 1; t < k; ++t) {
                        if (i + t < k) g.add_edge(at(i, j), at(i + t, j));
                        if (j + t < k) g.add_edge(at(i, j), at(i, j + t));
                        if (i + t < k && j + t < k) g.add_edge(at(i, j), at(i + t, j + t));
                        if (i + t < k && j - t >= 0) g.add_edge(at(i, j), at(i + t, j - t));
                    }
            g.set_board(k, k, full_board_cells(k));
            break;
        }
        case Family::Knight: {
            g.init(checked_square(k, "knight"));
            static const int moves[8][2] = {{1, 2},  {2, 1},  {-1, 2},  {-2, 1},
                                            {1, -2}, {2, -1}, {-1, -2}, {-2, -1}};
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    for (const auto& mv : moves) {
                        int a = i + mv[0], b = j + mv[1];
                        if (a < 0 || a >= k || b < 0 || b >= k) continue;
                        g.add_edge(i * k + j, a * k + b);
                    }
            g.set_board(k, k, full_board_cells(k));
            break;
        }
        case Family::TriangularPatch: {
            g.init(checked_square(k, "triangular_patch"));
            // Skew coordinates: six neighbours per interior cell.
            static const int moves[6][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}};
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    for (const auto& mv : moves) {
                        int a = i + mv[0], b = j + mv[1];
                        if (a < 0 || a >= k || b < 0 || b >= k) continue;
                        g.add_edge(i * k + j, a * k + b);
                    }
            g.set_board(k, k, full_board_cells(k));
            break;
        }
        case Family::HexagonalPatch: {
            g.init(checked_square(k, "hexagonal_patch"));
            // Brick-wall embedding: vertical edges everywhere, horizontal
            // edges only on alternating parity so every vertex has degree <= 3.
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) {
                    if (j + 1 < k) g.add_edge(i * k + j, i * k + j + 1);
                    int a = (i + j) % 2 == 0 ? i + 1 : i - 1;
                    if (a >= 0 && a < k) g.add_edge(i * k + j, a * k + j);
                }
            g.set_board(k, k, full_board_cells(k));
            break;
        }
        case Family::Complete: {
            if (k < 1) fail(ErrorCode::Param, "complete requires order >= 1");
            if (k > kMaxVertices) fail(ErrorCode::Capacity, "complete graph exceeds capacity");
            g.init(k);
            for (int u = 0; u < k; ++u)
                for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
            break;
        }
        case Family::CompleteMultipartite: {
            if (spec.parts.empty())
                fail(ErrorCode::Param, "complete_multipartite requires part sizes");
            long long total = 0;
            for (int p : spec.parts) {
                if (p < 1) fail(ErrorCode::Param, "part sizes must be >= 1");
                total += p;
            }
            if (total > kMaxVertices)
                fail(ErrorCode::Capacity, "complete_multipartite exceeds capacity");
            g.init(static_cast<int>(total));
            std::vector<int> part_of;
            part_of.reserve(total);
            for (int pi = 0; pi < static_cast<int>(spec.parts.size()); ++pi)
                for (int c = 0; c < spec.parts[pi]; ++c) part_of.push_back(pi);
            for (int u = 0; u < g.n_; ++u)
                for (int v = u + 1; v < g.n_; ++v)
                    if (part_of[u] != part_of[v]) g.add_edge(u, v);
            break;
        }
        case Family::Path: {
            if (k < 1) fail(ErrorCode::Param, "path requires order >= 1");
            g.init(k);
            for (int v = 0; v + 1 < k; ++v) g.add_edge(v, v + 1);
            break;
        }
        case Family::Cycle: {
            if (k < 3) fail(ErrorCode::Param, "cycle requires order >= 3");
            g.init(k);
            for (int v = 0; v + 1 < k; ++v) g.add_edge(v, v + 1);
            g.add_edge(k - 1, 0);
            break;
        }
        default:
            fail(ErrorCode::Param, "family cannot be built from a spec");
    }
    g.finish();
    return g;
}

Graph Graph::bishop_full(int n, int r) {
    if (n < 1) fail(ErrorCode::Param, "bishop board requires n >= 1");
    if (r < 0) fail(ErrorCode::Param, "bishop range must be >= 0");
    long long total = static_cast<long long>(n) * n;
    if (total > kMaxVertices) fail(ErrorCode::Capacity, "bishop board exceeds vertex capacity");
    Graph g;
    g.spec_.family = Family::Custom;
    g.spec_.size = n;
    g.spec_.r = r;
    g.init(static_cast<int>(total));
    int range = r == 0 ? n : r;
    auto at = [&](int i, int j) { return i * n + j; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int t = 1; t <= range; ++t)
                for (int si = -1; si <= 1; si += 2)
                    for (int sj = -1; sj <= 1; sj += 2) {
                        int a = i + si * t, b = j + sj * t;
                        if (a < 0 || a >= n || b < 0 || b >= n) continue;
                        g.add_edge(at(i, j), at(a, b));
                    }
    g.set_board(n, n, full_board_cells(n));
    g.finish();
    return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g;
    g.spec_.family = Family::Custom;
    g.spec_.size = n;
    g.init(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(ErrorCode::Param, "edge endpoint out of range");
        if (u == v) fail(ErrorCode::Param, "self-loops are not allowed");
        g.add_edge(u, v);
    }
    g.finish();
    return g;
}

Graph Graph::cartesian(const Graph& h) const {
    long long total = static_cast<long long>(n_) * h.n_;
    if (total > kMaxVertices) fail(ErrorCode::Capacity, "product exceeds vertex capacity");
    Graph g;
    g.spec_.family = Family::Product;
    g.init(static_cast<int>(total));
    auto at = [&](int a, int b) { return a * h.n_ + b; };
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < h.n_; ++b) {
            adj_[a].for_each([&](int a2) {
                if (a2 > a) g.add_edge(at(a, b), at(a2, b));
            });
            h.adj_[b].for_each([&](int b2) {
                if (b2 > b) g.add_edge(at(a, b), at(a, b2));
            });
        }
    // Products of two paths get board coordinates so the verification
    // predicates can treat them like the grid families.
    if (spec_.family == Family::Path && h.spec_.family == Family::Path) {
        std::vector<std::pair<int, int>> cells;
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < h.n_; ++b) cells.emplace_back(a, b);
        g.set_board(n_, h.n_, cells);
    }
    g.finish();
    return g;
}

Graph Graph::strong(const Graph& h) const {
    long long total = static_cast<long long>(n_) * h.n_;
    if (total > kMaxVertices) fail(ErrorCode::Capacity, "product exceeds vertex capacity");
    Graph g;
    g.spec_.family = Family::Product;
    g.init(static_cast<int>(total));
    auto at = [&](int a, int b) { return a * h.n_ + b; };
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < h.n_; ++b) {
            int v = at(a, b);
            adj_[a].for_each([&](int a2) { g.add_edge(v, at(a2, b)); });
            h.adj_[b].for_each([&](int b2) { g.add_edge(v, at(a, b2)); });
            adj_[a].for_each([&](int a2) {
                h.adj_[b].for_each([&](int b2) { g.add_edge(v, at(a2, b2)); });
            });
        }
    g.finish();
    return g;
}

Graph Graph::square() const {
    Graph g;
    g.spec_.family = Family::Square;
    g.spec_.size = spec_.size;
    g.init(n_);
    for (int v = 0; v < n_; ++v) {
        Bits reach = adj_[v];
        adj_[v].for_each([&](int u) { reach |= adj_[u]; });
        reach.reset(v);
        reach.for_each([&](int u) {
            if (u > v) g.add_edge(v, u);
        });
    }
    g.coords_ = coords_;
    g.cell_vertex_ = cell_vertex_;
    g.board_rows_ = board_rows_;
    g.board_cols_ = board_cols_;
    g.finish();
    return g;
}

bool Graph::is_claw_free(int r) const {
    if (r < 2) fail(ErrorCode::Param, "claw check requires r >= 2");
    // Look for r pairwise nonadjacent vertices inside some open neighbourhood.
    std::vector<int> chosen;
    for (int v = 0; v < n_; ++v) {
        std::vector<int> nbrs;
        nbrs.reserve(deg_[v]);
        adj_[v].for_each([&](int u) { nbrs.push_back(u); });
        chosen.clear();
        // Depth-first search over independent subsets of N(v) of size r.
        auto search = [&](auto&& self, size_t start) -> bool {
            if (static_cast<int>(chosen.size()) == r) return true;
            for (size_t idx = start; idx < nbrs.size(); ++idx) {
                int cand = nbrs[idx];
                bool ok = true;
                for (int c : chosen)
                    if (adj_[c].test(cand)) { ok = false; break; }
                if (!ok) continue;
                chosen.push_back(cand);
                if (self(self, idx + 1)) return true;
                chosen.pop_back();
            }
            return false;
        };
        if (search(search, 0)) return false;
    }
    return true;
}

std::string Graph::label() const {
    std::string s = family_name(spec_.family);
    if (spec_.family == Family::CompleteMultipartite) {
        s += "(";
        for (size_t i = 0; i < spec_.parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(spec_.parts[i]);
        }
        s += ")";
        return s;
    }
    if (spec_.size > 0) {
        s += " " + std::to_string(spec_.size);
        if (spec_.r > 0) s += " r=" + std::to_string(spec_.r);
        if (spec_.family == Family::BishopComponent ||
            spec_.family == Family::RBishopComponent)
            s += " c=" + std::to_string(spec_.component);
    }
    return s;
}

} // namespace oddgrid
