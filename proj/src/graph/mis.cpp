#include "rydmis/graph.hpp"

#include <algorithm>
#include <string>

namespace rydmis {

namespace {

using Mask = std::vector<char>;

// Exact α over the subgraph induced by `alive`, with pendant reductions,
// component splitting and clique-cover pruning.
class AlphaSolver {
public:
    explicit AlphaSolver(const Graph& g) : g_(g) {}

    int alpha(Mask alive) {
        const int n = g_.size();
        std::vector<int> deg(static_cast<std::size_t>(n), 0);
        std::vector<int> low;
        for (int v = 0; v < n; ++v) {
            if (!alive[ix(v)]) continue;
            for (int w : g_.neighbors(v)) deg[ix(v)] += alive[ix(w)];
            if (deg[ix(v)] <= 1) low.push_back(v);
        }
        int taken = 0;
        auto remove = [&](int v) {
            alive[ix(v)] = 0;
            for (int w : g_.neighbors(v))
                if (alive[ix(w)] && --deg[ix(w)] <= 1) low.push_back(w);
        };
        while (!low.empty()) {
            int v = low.back();
            low.pop_back();
            if (!alive[ix(v)] || deg[ix(v)] > 1) continue;
            ++taken;
            int nb = -1;
            for (int w : g_.neighbors(v))
                if (alive[ix(w)]) nb = w;
            alive[ix(v)] = 0;
            if (nb >= 0) remove(nb);
        }

        auto comps = split(alive);
        if (comps.empty()) return taken;
        if (comps.size() > 1) {
            for (auto& c : comps) taken += alpha(std::move(c));
            return taken;
        }
        Mask& cur = comps.front();
        int best_v = -1;
        for (int v = 0; v < n; ++v)
            if (cur[ix(v)] && (best_v < 0 || deg[ix(v)] > deg[ix(best_v)])) best_v = v;

        Mask with = cur;
        with[ix(best_v)] = 0;
        for (int w : g_.neighbors(best_v)) with[ix(w)] = 0;
        int a = 1 + alpha(std::move(with));

        Mask without = cur;
        without[ix(best_v)] = 0;
        if (clique_cover_bound(without) > a) a = std::max(a, alpha(std::move(without)));
        return taken + a;
    }

private:
    static std::size_t ix(int v) { return static_cast<std::size_t>(v); }

    std::vector<Mask> split(const Mask& alive) const {
        const int n = g_.size();
        std::vector<Mask> out;
        Mask seen(alive.size(), 0);
        for (int s = 0; s < n; ++s) {
            if (!alive[ix(s)] || seen[ix(s)]) continue;
            Mask comp(alive.size(), 0);
            std::vector<int> stack{s};
            seen[ix(s)] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                comp[ix(v)] = 1;
                for (int w : g_.neighbors(v))
                    if (alive[ix(w)] && !seen[ix(w)]) {
                        seen[ix(w)] = 1;
                        stack.push_back(w);
                    }
            }
            out.push_back(std::move(comp));
        }
        return out;
    }

    // Greedy clique cover; the number of cliques bounds α from above.
    int clique_cover_bound(const Mask& alive) const {
        const int n = g_.size();
        std::vector<int> clique_of(static_cast<std::size_t>(n), -1);
        std::vector<std::vector<int>> cliques;
        for (int v = 0; v < n; ++v) {
            if (!alive[ix(v)]) continue;
            int chosen = -1;
            for (int w : g_.neighbors(v)) {
                int c = (w < v && alive[ix(w)]) ? clique_of[ix(w)] : -1;
                if (c < 0) continue;
                bool ok = std::all_of(cliques[ix(c)].begin(), cliques[ix(c)].end(),
                                      [&](int u) { return g_.adjacent(u, v); });
                if (ok) {
                    chosen = c;
                    break;
                }
            }
            if (chosen < 0) {
                chosen = static_cast<int>(cliques.size());
                cliques.emplace_back();
            }
            cliques[ix(chosen)].push_back(v);
            clique_of[ix(v)] = chosen;
        }
        return static_cast<int>(cliques.size());
    }

    const Graph& g_;
};

// Counts maximum independent sets by plain branching; returns (α, count).
std::pair<int, std::uint64_t> count_rec(const Graph& g, std::vector<char> alive) {
    int v = -1;
    for (int u = 0; u < g.size(); ++u)
        if (alive[static_cast<std::size_t>(u)]) {
            int d = 0;
            for (int w : g.neighbors(u)) d += alive[static_cast<std::size_t>(w)];
            if (d == 0) {
                alive[static_cast<std::size_t>(u)] = 0;
                auto r = count_rec(g, std::move(alive));
                return {r.first + 1, r.second};
            }
            if (v < 0) v = u;
        }
    if (v < 0) return {0, 1};
    auto without = alive;
    without[static_cast<std::size_t>(v)] = 0;
    auto with = without;
    for (int w : g.neighbors(v)) with[static_cast<std::size_t>(w)] = 0;
    auto a = count_rec(g, std::move(with));
    a.first += 1;
    auto b = count_rec(g, std::move(without));
    if (a.first > b.first) return a;
    if (b.first > a.first) return b;
    return {a.first, a.second + b.second};
}

}  // namespace

int mis_size(const Graph& g, int vertex_budget) {
    if (g.size() > vertex_budget)
        throw StageError("mis", "instance too large: " + std::to_string(g.size()) + " vertices > budget " +
                                    std::to_string(vertex_budget));
    AlphaSolver s(g);
    return s.alpha(std::vector<char>(static_cast<std::size_t>(g.size()), 1));
}

MisResult mis_exact(const Graph& g, const MisOptions& opt) {
    MisResult res;
    res.size = mis_size(g, opt.vertex_budget);
    AlphaSolver s(g);
    const int n = g.size();
    std::vector<char> blocked(static_cast<std::size_t>(n), 0);
    int chosen = 0;
    for (int v = 0; v < n && chosen < res.size; ++v) {
        if (blocked[static_cast<std::size_t>(v)]) continue;
        std::vector<char> rest(static_cast<std::size_t>(n), 0);
        for (int w = v + 1; w < n; ++w) rest[static_cast<std::size_t>(w)] = !blocked[static_cast<std::size_t>(w)];
        for (int w : g.neighbors(v)) rest[static_cast<std::size_t>(w)] = 0;
        if (chosen + 1 + s.alpha(std::move(rest)) == res.size) {
            res.witness.members.push_back(v);
            ++chosen;
            for (int w : g.neighbors(v)) blocked[static_cast<std::size_t>(w)] = 1;
        }
        blocked[static_cast<std::size_t>(v)] = 1;
    }
    if (opt.count && n <= opt.count_budget)
        res.count = count_rec(g, std::vector<char>(static_cast<std::size_t>(n), 1)).second;
    return res;
}

MisResult mis_exhaustive(const Graph& g) {
    const int n = g.size();
    if (n > 20) throw StageError("mis", "exhaustive oracle limited to 20 vertices");
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) adj[static_cast<std::size_t>(v)] |= 1u << w;
    MisResult res;
    std::uint32_t best = 0;
    std::uint64_t count = 0;
    int best_size = -1;
    // Lexicographically smallest sorted member list among maxima.
    auto lex_less = [](std::uint32_t a, std::uint32_t b) {
        while (a && b) {
            int la = __builtin_ctz(a), lb = __builtin_ctz(b);
            if (la != lb) return la < lb;
            a &= a - 1;
            b &= b - 1;
        }
        return a == 0 && b != 0;
    };
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        bool ok = true;
        for (std::uint32_t r = m; r && ok; r &= r - 1)
            ok = (adj[static_cast<std::size_t>(__builtin_ctz(r))] & m) == 0;
        if (!ok) continue;
        int sz = __builtin_popcount(m);
        if (sz > best_size) {
            best_size = sz;
            best = m;
            count = 1;
        } else if (sz == best_size) {
            ++count;
            if (lex_less(m, best)) best = m;
        }
    }
    res.size = best_size;
    for (int v = 0; v < n; ++v)
        if (best >> v & 1u) res.witness.members.push_back(v);
    res.count = count;
    return res;
}

bool check_mis_correspondence(const Graph& original, const Graph& ud, const std::vector<int>& k_uv,
                              int vertex_budget) {
    long sum = 0;
    for (int k : k_uv) sum += k;
    return mis_size(ud, vertex_budget) == mis_size(original, vertex_budget) + sum;
}

}  // namespace rydmis
