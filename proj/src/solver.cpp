#include "solver.hpp"

#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <mutex>
#include <thread>

#include "errors.hpp"

namespace oddgrid {

namespace {

using Clock = std::chrono::steady_clock;

constexpr uint64_t kCountCap = uint64_t{1} << 32;

struct Shared {
    std::atomic<int> best{-1};
    std::atomic<uint64_t> nodes{0};
    std::atomic<bool> abort{false};
    std::atomic<bool> budget_hit{false};
    uint64_t node_budget = 0;
    Clock::time_point deadline;
};

// Decided prefix handed to a worker thread.
struct Prefix {
    Bits in_set;
    Bits dominated;
    std::vector<uint16_t> cnt;
    int set_size = 0;
    int depth = 0;
};

class AlphaSearch {
public:
    AlphaSearch(const Graph& g, const Bits& parity_mask, Shared& shared, bool count_mode,
                int target)
        : g_(g),
          n_(g.order()),
          parity_(parity_mask),
          shared_(shared),
          count_mode_(count_mode),
          target_(target),
          in_set_(n_),
          dominated_(n_),
          cnt_(n_, 0),
          cands_(n_),
          clique_mask_(n_),
          set_size_(0) {
        freeze_list_.assign(n_ + 1, {});
        for (int v = 0; v < n_; ++v) {
            int last = v;
            g_.neighbors(v).for_each([&](int u) { last = std::max(last, u); });
            freeze_list_[last].push_back(v);
        }
        dom_stack_.assign(n_ + 1, Bits(n_));
    }

    void load(const Prefix& p) {
        in_set_ = p.in_set;
        dominated_ = p.dominated;
        cnt_ = p.cnt;
        set_size_ = p.set_size;
    }

    void run(int idx) { dfs(idx); }

    // Expand the tree to `depth` and collect the surviving prefixes in DFS
    // order, so prefix rank equals lexicographic subtree order. Only called
    // with depth < order, hence no leaf can be recorded while collecting.
    void collect_frontier(int depth, std::vector<Prefix>& out) {
        frontier_depth_ = depth;
        frontier_out_ = &out;
        dfs(0);
        frontier_out_ = nullptr;
        frontier_depth_ = -1;
    }

    // Counting-pass results (count_mode only).
    uint64_t local_count = 0;
    bool count_overflow = false;
    std::vector<int> first_witness;
    bool has_witness = false;
    // Optimize-pass witness: the set behind the last improvement this worker
    // made to the shared best.
    std::vector<int> improve_witness;

private:
    bool budget_ok() {
        if (shared_.abort.load(std::memory_order_relaxed)) return false;
        if (++local_nodes_ % 1024 == 0) {
            uint64_t total =
                shared_.nodes.fetch_add(1024, std::memory_order_relaxed) + 1024;
            if (total > shared_.node_budget || Clock::now() > shared_.deadline) {
                shared_.budget_hit.store(true, std::memory_order_relaxed);
                shared_.abort.store(true, std::memory_order_relaxed);
                return false;
            }
        }
        return true;
    }

    // Undecided vertices with no chosen neighbour; only these can still join.
    int candidate_count(int idx) {
        int c = 0;
        const uint64_t* dom = dominated_.data();
        int w0 = idx >> 6;
        int last = dominated_.words() - 1;
        for (int w = w0; w <= last; ++w) {
            uint64_t x = ~dom[w];
            if (w == w0) x &= ~uint64_t{0} << (idx & 63);
            if (w == last && (n_ & 63)) x &= (uint64_t{1} << (n_ & 63)) - 1;
            c += std::popcount(x);
        }
        return c;
    }

    int clique_cover_bound(int idx) {
        cands_.clear();
        const uint64_t* dom = dominated_.data();
        uint64_t* cd = cands_.data();
        int w0 = idx >> 6;
        int last = dominated_.words() - 1;
        for (int w = w0; w <= last; ++w) {
            uint64_t x = ~dom[w];
            if (w == w0) x &= ~uint64_t{0} << (idx & 63);
            if (w == last && (n_ & 63)) x &= (uint64_t{1} << (n_ & 63)) - 1;
            cd[w] = x;
        }
        int cover = 0;
        int v;
        while ((v = cands_.find_first()) < n_) {
            ++cover;
            cands_.reset(v);
            clique_mask_ = g_.neighbors(v);
            clique_mask_ &= cands_;
            int u;
            while ((u = clique_mask_.find_first()) < n_) {
                cands_.reset(u);
                clique_mask_ &= g_.neighbors(u);
            }
        }
        return cover;
    }

    void record_leaf() {
        if (count_mode_) {
            if (set_size_ != target_) return;
            if (!has_witness) {
                first_witness.clear();
                in_set_.for_each([&](int v) { first_witness.push_back(v); });
                has_witness = true;
            }
            if (local_count >= kCountCap) {
                count_overflow = true;
            } else {
                ++local_count;
            }
            return;
        }
        int cur = shared_.best.load(std::memory_order_relaxed);
        while (set_size_ > cur) {
            if (shared_.best.compare_exchange_weak(cur, set_size_,
                                                   std::memory_order_relaxed)) {
                improve_witness.clear();
                in_set_.for_each([&](int v) { improve_witness.push_back(v); });
                return;
            }
        }
    }

    void dfs(int idx) {
        if (!budget_ok()) return;

        // Parity freeze: vertices whose last neighbour is idx-1 are now fully
        // decided; an outside one with an even positive count cannot be fixed.
        if (idx > 0) {
            for (int u : freeze_list_[idx - 1]) {
                if (in_set_.test(u)) continue;
                if (!parity_.test(u)) continue;
                int c = cnt_[u];
                if (c > 0 && (c & 1) == 0) return;
            }
        }

        if (idx == n_) {
            record_leaf();
            return;
        }

        if (frontier_out_ && idx == frontier_depth_) {
            frontier_out_->push_back(Prefix{in_set_, dominated_, cnt_, set_size_, idx});
            return;
        }

        // Bound. The popcount of the candidate set is tried first; the greedy
        // clique cover runs only when that fails to prune.
        int limit = count_mode_ ? target_
                                : shared_.best.load(std::memory_order_relaxed) + 1;
        if (set_size_ + candidate_count(idx) < limit) return;
        if (set_size_ + clique_cover_bound(idx) < limit) return;

        int v = idx;
        if (!dominated_.test(v)) {
            in_set_.set(v);
            ++set_size_;
            dom_stack_[idx] = dominated_;
            dominated_ |= g_.neighbors(v);
            g_.neighbors(v).for_each([&](int u) { ++cnt_[u]; });

            dfs(idx + 1);

            g_.neighbors(v).for_each([&](int u) { --cnt_[u]; });
            dominated_ = dom_stack_[idx];
            --set_size_;
            in_set_.reset(v);
            if (count_mode_ && count_overflow) return;
        }
        dfs(idx + 1);
    }

    const Graph& g_;
    int n_;
    const Bits& parity_;
    Shared& shared_;
    bool count_mode_;
    int target_;
    Bits in_set_;
    Bits dominated_;
    std::vector<uint16_t> cnt_;
    Bits cands_;
    Bits clique_mask_;
    int set_size_;
    std::vector<Bits> dom_stack_;
    std::vector<std::vector<int>> freeze_list_;
    uint64_t local_nodes_ = 0;
    std::vector<Prefix>* frontier_out_ = nullptr;
    int frontier_depth_ = -1;
};

struct PassResult {
    uint64_t count = 0;
    bool overflow = false;
    std::vector<int> witness;
    bool has_witness = false;
};

// One full pass over the tree, split across workers at a fixed depth.
PassResult run_pass(const Graph& g, const Bits& parity, Shared& shared, bool count_mode,
                    int target, int threads, int split_depth) {
    PassResult result;
    int n = g.order();

    if (threads <= 1 || n <= split_depth + 1) {
        AlphaSearch search(g, parity, shared, count_mode, target);
        search.run(0);
        result.count = search.local_count;
        result.overflow = search.count_overflow;
        if (count_mode) {
            result.witness = search.first_witness;
            result.has_witness = search.has_witness;
        } else if (!search.improve_witness.empty() &&
                   static_cast<int>(search.improve_witness.size()) == shared.best.load()) {
            result.witness = search.improve_witness;
            result.has_witness = true;
        }
        return result;
    }

    std::vector<Prefix> frontier;
    {
        AlphaSearch gen(g, parity, shared, count_mode, target);
        gen.collect_frontier(split_depth, frontier);
    }

    std::mutex merge_mutex;
    std::atomic<size_t> next{0};
    size_t witness_rank = frontier.size();

    auto worker = [&]() {
        AlphaSearch search(g, parity, shared, count_mode, target);
        std::vector<int> local_best_witness;
        while (true) {
            size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= frontier.size()) break;
            if (shared.abort.load(std::memory_order_relaxed)) break;
            search.local_count = 0;
            search.count_overflow = false;
            search.has_witness = false;
            search.first_witness.clear();
            search.load(frontier[i]);
            search.run(frontier[i].depth);
            if (count_mode) {
                std::lock_guard<std::mutex> lock(merge_mutex);
                uint64_t room = kCountCap - std::min(kCountCap, result.count);
                if (search.count_overflow || search.local_count > room) {
                    result.count = kCountCap;
                    result.overflow = true;
                } else {
                    result.count += search.local_count;
                }
                if (search.has_witness && i < witness_rank) {
                    witness_rank = i;
                    result.witness = search.first_witness;
                    result.has_witness = true;
                }
            } else if (!search.improve_witness.empty()) {
                local_best_witness = search.improve_witness;
            }
        }
        if (!count_mode && !local_best_witness.empty()) {
            std::lock_guard<std::mutex> lock(merge_mutex);
            if (static_cast<int>(local_best_witness.size()) == shared.best.load() &&
                !result.has_witness) {
                result.witness = local_best_witness;
                result.has_witness = true;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return result;
}

SolveReport solve_alpha(const Graph& g, const Bits& parity, const SolveOptions& opts) {
    if (opts.node_budget == 0) fail(ErrorCode::Param, "node budget must be positive");
    if (opts.time_budget_seconds <= 0) fail(ErrorCode::Param, "time budget must be positive");
    int threads = opts.deterministic ? 1 : std::max(1, opts.threads);
    int split_depth = opts.split_depth;
    if (split_depth < 0) {
        int lg = 0;
        while ((1 << lg) < threads) ++lg;
        split_depth = 2 * lg;
    }

    auto start = Clock::now();
    Shared shared;
    shared.node_budget = opts.node_budget;
    shared.deadline = start + std::chrono::duration_cast<Clock::duration>(
                                  std::chrono::duration<double>(opts.time_budget_seconds));

    SolveReport rep;

    PassResult optimize =
        run_pass(g, parity, shared, /*count_mode=*/false, 0, threads, split_depth);
    bool optimize_complete = !shared.budget_hit.load();
    int best = std::max(0, shared.best.load());
    rep.optimum = best;
    rep.optimum_proven = optimize_complete;
    if (optimize.has_witness) rep.witness = optimize.witness;

    // Counting pass: visits every leaf of the proven optimal size, so it also
    // yields the lexicographically least witness (IN is explored before OUT).
    bool count_complete = false;
    if (opts.count_optima && optimize_complete) {
        PassResult counted =
            run_pass(g, parity, shared, /*count_mode=*/true, best, threads, split_depth);
        count_complete = !shared.budget_hit.load();
        if (count_complete) {
            rep.optimum_count = counted.count;
            rep.count_overflow = counted.overflow;
            if (counted.has_witness) rep.witness = counted.witness;
        } else if (counted.has_witness && rep.witness.empty()) {
            rep.witness = counted.witness;
        }
    }

    rep.proof_complete = optimize_complete && (!opts.count_optima || count_complete);
    rep.nodes = shared.nodes.load();
    rep.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return rep;
}

// ---------------------------------------------------------------------------
// Strong odd chromatic number.

class ChromSearch {
public:
    ChromSearch(const Graph& g, int palette, Shared& shared)
        : g_(g), n_(g.order()), c_(palette), shared_(shared) {
        color_.assign(n_, -1);
        mult_.assign(static_cast<size_t>(n_) * c_, 0);
        colored_nbrs_.assign(n_, 0);
        even_pos_.assign(n_, 0);
    }

    // Returns true if a strong odd coloring with <= c_ colors exists. aborted()
    // reports whether the search was cut short by the budget.
    bool search() { return assign(0, 0); }
    bool aborted() const { return aborted_; }
    const std::vector<int>& coloring() const { return color_; }

private:
    uint16_t& mult(int v, int col) { return mult_[static_cast<size_t>(v) * c_ + col]; }

    bool budget_ok() {
        if (shared_.abort.load(std::memory_order_relaxed)) return false;
        if (++local_nodes_ % 1024 == 0) {
            uint64_t total =
                shared_.nodes.fetch_add(1024, std::memory_order_relaxed) + 1024;
            if (total > shared_.node_budget || Clock::now() > shared_.deadline) {
                shared_.budget_hit.store(true, std::memory_order_relaxed);
                shared_.abort.store(true, std::memory_order_relaxed);
                return false;
            }
        }
        return true;
    }

    // Parity feasibility around u after a neighbour changed color counts:
    // every color of even positive multiplicity needs at least one more
    // occurrence, and only uncolored neighbours can provide them.
    bool feasible(int u) const {
        int uncolored = g_.degree(u) - colored_nbrs_[u];
        if (uncolored == 0) return even_pos_[u] == 0;
        return even_pos_[u] <= uncolored;
    }

    bool assign(int v, int used) {
        if (!budget_ok()) {
            aborted_ = true;
            return false;
        }
        if (v == n_) return true;
        int try_up_to = std::min(used + 1, c_);
        for (int col = 0; col < try_up_to; ++col) {
            if (mult(v, col) != 0) continue; // some neighbour already has col
            color_[v] = col;
            bool ok = true;
            g_.neighbors(v).for_each([&](int u) {
                uint16_t& m = mult(u, col);
                if (m > 0) {
                    if (m % 2 == 1) ++even_pos_[u];
                    else --even_pos_[u];
                }
                ++m;
                ++colored_nbrs_[u];
            });
            g_.neighbors(v).for_each([&](int u) {
                if (ok && !feasible(u)) ok = false;
            });
            if (ok && assign(v + 1, std::max(used, col + 1))) return true;
            g_.neighbors(v).for_each([&](int u) {
                uint16_t& m = mult(u, col);
                --m;
                if (m > 0) {
                    if (m % 2 == 1) --even_pos_[u];
                    else ++even_pos_[u];
                }
                --colored_nbrs_[u];
            });
            color_[v] = -1;
            if (aborted_) return false;
        }
        return false;
    }

    const Graph& g_;
    int n_;
    int c_;
    Shared& shared_;
    std::vector<int> color_;
    std::vector<uint16_t> mult_;
    std::vector<int> colored_nbrs_;
    std::vector<int> even_pos_;
    uint64_t local_nodes_ = 0;
    bool aborted_ = false;
};

} // namespace

SolveReport solve_alpha_od(const Graph& g, const SolveOptions& opts) {
    Bits all(g.order());
    for (int v = 0; v < g.order(); ++v) all.set(v);
    return solve_alpha(g, all, opts);
}

SolveReport solve_alpha_iod(const Graph& g, const SolveOptions& opts) {
    if (g.spec().family != Family::PathGrid)
        fail(ErrorCode::Domain, "alpha_iod is defined on path_grid boards");
    if (g.spec().size < 3)
        fail(ErrorCode::Domain, "alpha_iod needs k >= 3 so interior cells exist");
    Bits interior(g.order());
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 4) interior.set(v);
    return solve_alpha(g, interior, opts);
}

ChromReport solve_chi_so(const Graph& g, int palette_max, const SolveOptions& opts) {
    if (palette_max < 1) fail(ErrorCode::Param, "palette_max must be >= 1");
    if (palette_max > 1024) fail(ErrorCode::Param, "palette_max too large");
    if (opts.node_budget == 0) fail(ErrorCode::Param, "node budget must be positive");
    if (opts.time_budget_seconds <= 0) fail(ErrorCode::Param, "time budget must be positive");

    auto start = Clock::now();
    Shared shared;
    shared.node_budget = opts.node_budget;
    shared.deadline = start + std::chrono::duration_cast<Clock::duration>(
                                  std::chrono::duration<double>(opts.time_budget_seconds));

    ChromReport rep;
    rep.palette_infeasible.assign(palette_max + 1, 0);
    bool all_below_proven = true;
    for (int c = 1; c <= palette_max; ++c) {
        ChromSearch search(g, c, shared);
        bool found = search.search();
        if (found) {
            rep.found = true;
            rep.chi_so = c;
            rep.coloring = search.coloring();
            break;
        }
        if (search.aborted()) {
            all_below_proven = false;
            // The budget is gone, but keep probing larger palettes cheaply:
            // a feasible larger palette still gives a useful upper bound.
            shared.abort.store(false);
            shared.budget_hit.store(false);
            uint64_t used = shared.nodes.load();
            shared.node_budget = used + std::max<uint64_t>(used / 10, 1'000'000);
            shared.deadline = Clock::now() + std::chrono::seconds(60);
        } else {
            rep.palette_infeasible[c] = 1;
        }
    }
    rep.proof_complete = rep.found && all_below_proven;
    rep.nodes = shared.nodes.load();
    rep.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return rep;
}

std::vector<FormulaRow> verify_formula(const std::string& formula,
                                       const std::vector<int>& sizes, int r,
                                       const SolveOptions& opts) {
    std::vector<FormulaRow> rows;
    auto ceil_div = [](long long a, long long b) { return (a + b - 1) / b; };
    for (int n : sizes) {
        FormulaRow row;
        row.size = n;
        if (formula == "king_alpha") {
            auto rep = solve_alpha_od(Graph::build({Family::King, n}), opts);
            row.solver_value = rep.optimum;
            row.formula_value = ceil_div(n, 3) * ceil_div(n, 3);
            row.proof_complete = rep.optimum_proven;
        } else if (formula == "r_king_alpha") {
            auto rep = solve_alpha_od(Graph::build({Family::RKing, n, r}), opts);
            row.solver_value = rep.optimum;
            long long q = ceil_div(n, 2 * r + 1);
            row.formula_value = q * q;
            row.proof_complete = rep.optimum_proven;
        } else if (formula == "rook_alpha_one") {
            auto rep = solve_alpha_od(Graph::build({Family::Rook, n}), opts);
            row.solver_value = rep.optimum;
            row.formula_value = 1;
            row.proof_complete = rep.optimum_proven;
        } else if (formula == "queen_alpha_one") {
            auto rep = solve_alpha_od(Graph::build({Family::Queen, n}), opts);
            row.solver_value = rep.optimum;
            row.formula_value = 1;
            row.proof_complete = rep.optimum_proven;
        } else if (formula == "bishop_alpha_two") {
            auto rep = solve_alpha_od(Graph::bishop_full(n), opts);
            row.solver_value = rep.optimum;
            row.formula_value = 2;
            row.proof_complete = rep.optimum_proven;
        } else if (formula == "king_chi_nine") {
            auto rep = solve_chi_so(Graph::build({Family::King, n}), 16, opts);
            row.solver_value = rep.chi_so;
            row.formula_value = 9;
            row.proof_complete = rep.proof_complete;
        } else if (formula == "r_king_chi") {
            long long side = 2LL * r + 1;
            long long expect = n >= side ? side * side : static_cast<long long>(n) * n;
            auto rep = solve_chi_so(Graph::build({Family::RKing, n, r}),
                                    static_cast<int>(expect) + 4, opts);
            row.solver_value = rep.chi_so;
            row.formula_value = expect;
            row.proof_complete = rep.proof_complete;
        } else if (formula == "bishop_chi_half") {
            long long expect = (static_cast<long long>(n) * n + 1) / 2;
            auto rep = solve_chi_so(Graph::bishop_full(n), static_cast<int>(expect) + 2, opts);
            row.solver_value = rep.chi_so;
            row.formula_value = expect;
            row.proof_complete = rep.proof_complete;
        } else {
            fail(ErrorCode::Param, "unknown formula: " + formula);
        }
        row.match = row.solver_value == row.formula_value && row.proof_complete;
        rows.push_back(row);
    }
    return rows;
}

} // namespace oddgrid
