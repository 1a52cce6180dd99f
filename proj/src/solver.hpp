#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graph.hpp"

namespace oddgrid {

struct SolveOptions {
    uint64_t node_budget = 1'000'000'000;
    double time_budget_seconds = 600.0;
    int threads = 1;          // worker threads for subtree splitting
    bool deterministic = false; // force single thread, reproducible node counts
    bool count_optima = true;   // run the counting pass after the optimum is known
    int split_depth = -1;       // -1: 2*ceil(log2(threads))
};

struct SolveReport {
    int optimum = 0;
    std::vector<int> witness;      // lexicographically least maximum set when counted
    uint64_t optimum_count = 0;    // number of maximum sets, capped at 2^32
    bool count_overflow = false;
    uint64_t nodes = 0;
    double elapsed_seconds = 0.0;
    // True when the search tree was exhausted. If the optimize pass finished
    // but the counting pass ran out of budget, `optimum` is still exact and
    // `optimum_proven` stays true while proof_complete reports false.
    bool proof_complete = true;
    bool optimum_proven = true;
};

// Largest odd-independent set: independent, every outside vertex sees 0 or
// an odd number of members.
SolveReport solve_alpha_od(const Graph& g, const SolveOptions& opts = {});

// Largest internally odd-independent set on a path grid: the parity
// condition is enforced only at interior (degree 4) cells.
SolveReport solve_alpha_iod(const Graph& g, const SolveOptions& opts = {});

struct ChromReport {
    bool found = false;
    int chi_so = 0;
    std::vector<int> coloring;
    // palette_infeasible[c] == 1 means palette size c was proven infeasible.
    std::vector<uint8_t> palette_infeasible;
    uint64_t nodes = 0;
    double elapsed_seconds = 0.0;
    bool proof_complete = true; // every palette below chi_so proven infeasible
};

// Smallest palette admitting a strong odd coloring (proper, and every color
// present in an open neighbourhood appears there an odd number of times),
// searching palette sizes 1..palette_max.
ChromReport solve_chi_so(const Graph& g, int palette_max, const SolveOptions& opts = {});

struct FormulaRow {
    int size = 0;
    long long solver_value = 0;
    long long formula_value = 0;
    bool match = false;
    bool proof_complete = true;
};

// Run the exact solver across `sizes` and compare with a named closed form.
// Known formulas: king_alpha, r_king_alpha, rook_alpha_one, queen_alpha_one,
// bishop_alpha_two, king_chi_nine, r_king_chi, bishop_chi_half.
std::vector<FormulaRow> verify_formula(const std::string& formula,
                                       const std::vector<int>& sizes, int r,
                                       const SolveOptions& opts = {});

} // namespace oddgrid
