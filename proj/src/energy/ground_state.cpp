#include "rydmis/energy.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

namespace rydmis {

std::string to_string(Strategy s) {
    switch (s) {
        case Strategy::full: return "full";
        case Strategy::is: return "is";
        case Strategy::sample: return "sample";
    }
    return "?";
}

Strategy parse_strategy(const std::string& s) {
    if (s == "full") return Strategy::full;
    if (s == "is") return Strategy::is;
    if (s == "sample") return Strategy::sample;
    throw std::invalid_argument("unknown strategy: " + s);
}

double tie_tolerance(int n) { return 1e-10 * std::max(1, n) * std::max(1, n); }

namespace {

int thread_count(const SolveOptions& opt) {
    int t = opt.threads > 0 ? opt.threads : static_cast<int>(std::thread::hardware_concurrency());
    return std::max(1, t);
}

struct Candidate {
    SpinConfig config;
    double energy = std::numeric_limits<double>::infinity();
    bool valid = false;
};

// Lower energy wins; ties within tol go to the lexicographically smaller excited list.
bool better(double e, const SpinConfig& c, const Candidate& best, double tol) {
    if (!best.valid) return true;
    if (e < best.energy - tol) return true;
    if (e > best.energy + tol) return false;
    return lex_less(c, best.config);
}

SpinConfig mask_config(std::uint64_t mask, int n) {
    SpinConfig c(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) c[i] = (mask >> i) & 1u;
    return c;
}

bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
    std::uint64_t diff = a ^ b;
    if (!diff) return false;
    int i = std::countr_zero(diff);
    bool cont = ((((a >> i) & 1u) ? b : a) >> i >> 1) != 0;
    return ((a >> i) & 1u) ? cont : !cont;
}

GroundState solve_full(const QuadraticModel& m, const SolveOptions& opt) {
    const int n = m.n;
    if (n > opt.max_full || n > 62)
        throw StageError("solve", "full enumeration budget exceeded: " + std::to_string(n) + " atoms > " +
                                      std::to_string(std::min(opt.max_full, 62)));
    const double tol = tie_tolerance(n);
    int top = 0;
    int threads = thread_count(opt);
    while (top < n && (1 << top) < 4 * threads && n - top > 10) ++top;
    const int low = n - top;
    const std::uint64_t blocks = 1ULL << top;

    struct Best {
        std::uint64_t mask = 0;
        double energy = std::numeric_limits<double>::infinity();
        bool valid = false;
    };
    std::vector<Best> results(blocks);
    auto run_block = [&](std::uint64_t b) {
        std::uint64_t mask = b << low;
        std::vector<double> field(static_cast<std::size_t>(n), 0.0);
        double e = 0;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1u) {
                e += m.linear[v];
                for (int w = 0; w < n; ++w) field[w] += m.J(v, w);
            }
        // Each excited pair appears once in each endpoint's field.
        double pairs = 0;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1u) pairs += field[v];
        e += pairs / 2;
        Best best;
        auto consider = [&](std::uint64_t mk, double en) {
            if (!best.valid || en < best.energy - tol ||
                (en <= best.energy + tol && mask_lex_less(mk, best.mask))) {
                best.mask = mk;
                best.energy = en;
                best.valid = true;
            }
        };
        consider(mask, e);
        const std::uint64_t steps = 1ULL << low;
        for (std::uint64_t s = 1; s < steps; ++s) {
            int i = std::countr_zero(s);
            const double* row = &m.pair[static_cast<std::size_t>(i) * n];
            if ((mask >> i) & 1u) {
                e -= m.linear[i] + field[i];
                for (int w = 0; w < n; ++w) field[w] -= row[w];
            } else {
                e += m.linear[i] + field[i];
                for (int w = 0; w < n; ++w) field[w] += row[w];
            }
            mask ^= 1ULL << i;
            consider(mask, e);
        }
        results[b] = best;
    };
    std::vector<std::thread> pool;
    std::atomic<std::uint64_t> next{0};
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::uint64_t b; (b = next.fetch_add(1)) < blocks;) run_block(b);
        });
    for (auto& th : pool) th.join();

    Candidate best;
    for (const auto& r : results) {
        auto c = mask_config(r.mask, n);
        double e = m.energy(c);
        if (better(e, c, best, tol)) best = {c, e, true};
    }
    GroundState gs{best.config, best.energy, {Strategy::full, true, "exhaustive enumeration of all 2^N configurations",
                                              static_cast<long long>(1ULL << n)}};
    return gs;
}

// Branch and bound over independent sets of the blockade graph.
class IsSolver {
public:
    IsSolver(const QuadraticModel& m, const Graph& g, long long budget) : m_(m), g_(g), budget_(budget) {
        for (double j : m.pair)
            if (j < 0) throw StageError("solve", "is strategy needs non-negative pair terms");
        order_ = dfs_order();
        pos_.assign(static_cast<std::size_t>(m.n), 0);
        for (int i = 0; i < m.n; ++i) pos_[order_[i]] = i;
        build_bound();
    }

    Candidate run(double tol) {
        tol_ = tol;
        cur_.assign(static_cast<std::size_t>(m_.n), 0);
        field_.assign(static_cast<std::size_t>(m_.n), 0.0);
        blocked_.assign(static_cast<std::size_t>(m_.n), 0);
        dfs(0, 0.0, 0);
        return best_;
    }

    long long nodes() const { return nodes_; }

private:
    static constexpr int kWindow = 6;

    std::vector<int> dfs_order() const {
        std::vector<int> order;
        std::vector<char> seen(static_cast<std::size_t>(m_.n), 0);
        for (int s = 0; s < m_.n; ++s) {
            if (seen[s]) continue;
            std::vector<int> stack{s};
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                if (seen[v]) continue;
                seen[v] = 1;
                order.push_back(v);
                const auto& nb = g_.neighbors(v);
                for (auto it = nb.rbegin(); it != nb.rend(); ++it)
                    if (!seen[*it]) stack.push_back(*it);
            }
        }
        return order;
    }

    // bound_[i][mask]: minimum over positions ≥ i, keeping blockade and pair terms only between
    // atoms fewer than kWindow apart in the order; mask holds the previous kWindow-1 values.
    void build_bound() {
        const int n = m_.n;
        const int states = 1 << (kWindow - 1);
        bound_.assign(static_cast<std::size_t>(n + 1) * states, 0.0);
        for (int i = n - 1; i >= 0; --i) {
            int v = order_[i];
            for (int mask = 0; mask < states; ++mask) {
                auto next = [&](int x) { return ((mask << 1) | x) & (states - 1); };
                double best = bound_[static_cast<std::size_t>(i + 1) * states + next(0)];
                bool ok = true;
                double add = m_.linear[v];
                for (int t = 1; t < kWindow && i - t >= 0; ++t) {
                    if (!((mask >> (t - 1)) & 1)) continue;
                    int w = order_[i - t];
                    if (g_.adjacent(v, w)) ok = false;
                    add += m_.J(v, w);
                }
                if (ok) best = std::min(best, add + bound_[static_cast<std::size_t>(i + 1) * states + next(1)]);
                bound_[static_cast<std::size_t>(i) * states + mask] = best;
            }
        }
    }

    void dfs(int i, double e, int mask) {
        if (++nodes_ > budget_) throw StageError("solve", "is strategy node budget exceeded");
        const int states = 1 << (kWindow - 1);
        if (best_.valid && e + bound_[static_cast<std::size_t>(i) * states + mask] > best_.energy + tol_) return;
        if (i == m_.n) {
            if (better(e, cur_, best_, tol_)) best_ = {cur_, e, true};
            return;
        }
        int v = order_[i];
        double gain = m_.linear[v] + field_[v];
        auto go = [&](int x) {
            if (x == 0) {
                dfs(i + 1, e, ((mask << 1) & (states - 1)));
                return;
            }
            cur_[v] = 1;
            for (int w = 0; w < m_.n; ++w) field_[w] += m_.J(v, w);
            for (int w : g_.neighbors(v)) ++blocked_[w];
            dfs(i + 1, e + gain, ((mask << 1) | 1) & (states - 1));
            for (int w : g_.neighbors(v)) --blocked_[w];
            for (int w = 0; w < m_.n; ++w) field_[w] -= m_.J(v, w);
            cur_[v] = 0;
        };
        bool can = blocked_[v] == 0;
        if (can && gain < 0) {
            go(1);
            go(0);
        } else {
            go(0);
            if (can) go(1);
        }
    }

    const QuadraticModel& m_;
    const Graph& g_;
    long long budget_;
    long long nodes_ = 0;
    double tol_ = 0;
    std::vector<int> order_, pos_;
    std::vector<double> bound_;
    SpinConfig cur_;
    std::vector<double> field_;
    std::vector<int> blocked_;
    Candidate best_;
};

SpinConfig random_maximal_is(const Graph* g, int n, std::mt19937_64& rng, std::vector<int>& perm) {
    SpinConfig c(static_cast<std::size_t>(n), 0);
    if (!g) {
        for (int v = 0; v < n; ++v) c[v] = static_cast<char>(rng() & 1u);
        return c;
    }
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<char> blocked(static_cast<std::size_t>(n), 0);
    for (int v : perm) {
        if (blocked[v]) continue;
        c[v] = 1;
        for (int w : g->neighbors(v)) blocked[w] = 1;
    }
    return c;
}

GroundState solve_sample(const QuadraticModel& m, const SolveOptions& opt, const Graph* g) {
    const long per_block = 10000;
    const long blocks = (opt.samples + per_block - 1) / per_block;
    const double tol = tie_tolerance(m.n);
    std::vector<Candidate> results(static_cast<std::size_t>(blocks));
    std::atomic<long> next{0};
    auto worker = [&] {
        std::vector<int> perm(static_cast<std::size_t>(m.n));
        for (long b; (b = next.fetch_add(1)) < blocks;) {
            std::iota(perm.begin(), perm.end(), 0);
            std::mt19937_64 rng(opt.seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(b + 1));
            Candidate best;
            long count = std::min(per_block, opt.samples - b * per_block);
            for (long s = 0; s < count; ++s) {
                auto c = random_maximal_is(g, m.n, rng, perm);
                double e = m.energy(c);
                if (better(e, c, best, tol)) best = {std::move(c), e, true};
            }
            results[static_cast<std::size_t>(b)] = std::move(best);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < thread_count(opt); ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    Candidate best;
    for (auto& r : results)
        if (r.valid && better(r.energy, r.config, best, tol)) best = r;
    if (!best.valid) best = {SpinConfig(static_cast<std::size_t>(m.n), 0), 0.0, true};
    return {best.config, best.energy,
            {Strategy::sample, false,
             std::string(g ? "random maximal independent sets" : "random configurations") + ", seed " +
                 std::to_string(opt.seed),
             opt.samples}};
}

}  // namespace

GroundState ground_state_exact(const QuadraticModel& m, const SolveOptions& opt, const Graph* blockade,
                               const std::string& justification) {
    switch (opt.strategy) {
        case Strategy::full: return solve_full(m, opt);
        case Strategy::is: {
            if (!blockade) throw StageError("solve", "is strategy needs a blockade graph");
            IsSolver s(m, *blockade, opt.node_budget);
            auto best = s.run(tie_tolerance(m.n));
            double e = m.energy(best.config);
            return {best.config, e, {Strategy::is, true, justification, s.nodes()}};
        }
        case Strategy::sample: return solve_sample(m, opt, blockade);
    }
    throw StageError("solve", "unknown strategy");
}

GroundState solve_instance(const DetunedInstance& inst, const SolveOptions& opt) {
    auto model = rydberg_model(inst);
    if (opt.strategy == Strategy::full) return ground_state_exact(model, opt);
    double dmax = delta_max(inst);
    auto ud = layout_udg(inst.layout);
    std::string why;
    if (opt.strategy == Strategy::is) {
        for (std::size_t v = 0; v < inst.delta.size(); ++v)
            if (!(inst.delta[v] < dmax))
                throw StageError("solve", "is restriction unjustified: delta[" + std::to_string(v) +
                                              "] = " + std::to_string(inst.delta[v]) +
                                              " >= delta_max = " + std::to_string(dmax));
        why = "every detuning is below delta_max = C/D^6 = " + std::to_string(dmax) +
              ", so excited blockade neighbours can always be lowered by de-exciting one";
    }
    return ground_state_exact(model, opt, &ud.graph, why);
}

}  // namespace rydmis
