#include "bplab/solver.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <string>

#include <Eigen/Dense>

#include "bplab/errors.hpp"

namespace bplab {

namespace {

using Clock = std::chrono::steady_clock;

int ctz(std::uint64_t x) { return std::countr_zero(x); }

// ---- maximum clique on word-sized vertex masks ----

struct CliqueSolver {
    int n = 0;
    std::array<std::uint64_t, 64> adj{};
    std::uint64_t best_set = 0;
    int best = 0;

    void expand(std::uint64_t cand, std::uint64_t cur, int size) {
        if (cand == 0) {
            if (size > best) {
                best = size;
                best_set = cur;
            }
            return;
        }
        // greedy coloring: vertices listed color-ascending
        int order[64];
        int color[64];
        int cnt = 0;
        std::uint64_t uncolored = cand;
        int c = 0;
        while (uncolored) {
            ++c;
            std::uint64_t avail = uncolored;
            while (avail) {
                int v = ctz(avail);
                avail &= ~(1ULL << v);
                avail &= ~adj[v];
                uncolored &= ~(1ULL << v);
                order[cnt] = v;
                color[cnt] = c;
                ++cnt;
            }
        }
        std::uint64_t rest = cand;
        for (int i = cnt - 1; i >= 0; --i) {
            if (size + color[i] <= best)
                return;
            int v = order[i];
            expand(rest & adj[v], cur | (1ULL << v), size + 1);
            rest &= ~(1ULL << v);
        }
    }
};

VertexSet mask_to_set(std::uint64_t m) {
    VertexSet out;
    while (m) {
        out.push_back(ctz(m));
        m &= m - 1;
    }
    return out;
}

// ---- fixed-width edge sets for the partition searches ----

constexpr int kMaxEdges = 256;

struct EdgeSet {
    std::array<std::uint64_t, 4> w{};

    void set(int i) { w[i >> 6] |= 1ULL << (i & 63); }
    bool none() const { return !(w[0] | w[1] | w[2] | w[3]); }
    int count() const {
        return std::popcount(w[0]) + std::popcount(w[1]) + std::popcount(w[2]) +
               std::popcount(w[3]);
    }
    int first() const {
        for (int i = 0; i < 4; ++i)
            if (w[i])
                return 64 * i + ctz(w[i]);
        return -1;
    }
    friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) {
        for (int i = 0; i < 4; ++i)
            a.w[i] |= b.w[i];
        return a;
    }
    friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) {
        for (int i = 0; i < 4; ++i)
            a.w[i] &= b.w[i];
        return a;
    }
    EdgeSet andnot(const EdgeSet& b) const {
        EdgeSet r = *this;
        for (int i = 0; i < 4; ++i)
            r.w[i] &= ~b.w[i];
        return r;
    }
    bool operator==(const EdgeSet& b) const { return w == b.w; }
};

struct MaskBlock {
    std::uint64_t side1 = 0;
    std::uint64_t side2 = 0;
    EdgeSet edges;
    int edge_count = 0;
};

int inertia_bound(const Eigen::MatrixXd& a) {
    if (a.rows() == 0)
        return 0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    int pos = 0, neg = 0;
    for (int i = 0; i < a.rows(); ++i) {
        double lambda = solver.eigenvalues()(i);
        if (lambda > 1e-9)
            ++pos;
        else if (lambda < -1e-9)
            ++neg;
    }
    return std::max(pos, neg);
}

int count_positive_negative_max(int n, const EdgeSet& covered,
                                const std::vector<std::pair<int, int>>& edge_list) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    bool any = false;
    for (std::size_t e = 0; e < edge_list.size(); ++e) {
        if ((covered.w[e >> 6] >> (e & 63)) & 1)
            continue;
        auto [u, v] = edge_list[e];
        a(u, v) = a(v, u) = 1.0;
        any = true;
    }
    if (!any)
        return 0;
    return inertia_bound(a);
}

// shared search state for the partition branch and bounds
struct PartitionSearch {
    const Graph* g = nullptr;
    int n = 0;
    std::vector<std::pair<int, int>> edge_list;
    std::array<std::array<int, 64>, 64> edge_id{};
    EdgeSet all_edges;
    bool nonstar_only = false;

    int best_count = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> best_blocks;
    bool improved = false;

    long long nodes = 0;
    long long max_nodes = -1; // negative means unbounded
    Clock::time_point deadline{};
    bool has_deadline = false;
    bool budget_hit = false;

    std::vector<std::pair<std::uint64_t, std::uint64_t>> current;

    void init(const Graph& graph) {
        g = &graph;
        n = graph.n();
        if (n > 64)
            throw TooLarge("partition search requires n <= 64");
        edge_list = graph.edges();
        if (edge_list.size() > kMaxEdges)
            throw TooLarge("partition search supports at most " +
                           std::to_string(kMaxEdges) + " edges");
        for (std::size_t e = 0; e < edge_list.size(); ++e) {
            auto [u, v] = edge_list[e];
            edge_id[u][v] = edge_id[v][u] = static_cast<int>(e);
            all_edges.set(static_cast<int>(e));
        }
    }

    bool out_of_budget() {
        if (budget_hit)
            return true;
        if (max_nodes >= 0 && nodes >= max_nodes)
            budget_hit = true;
        else if (has_deadline && (nodes & 1023) == 0 && Clock::now() > deadline)
            budget_hit = true;
        return budget_hit;
    }

    // all bicliques of the uncovered subgraph containing edge (u,v),
    // u-side first; sorted most edges first, then lexicographically
    std::vector<MaskBlock> candidates(int u, int v, const EdgeSet& covered) {
        std::array<std::uint64_t, 64> unc{};
        for (std::size_t e = 0; e < edge_list.size(); ++e) {
            if ((covered.w[e >> 6] >> (e & 63)) & 1)
                continue;
            auto [a, b] = edge_list[e];
            unc[a] |= 1ULL << b;
            unc[b] |= 1ULL << a;
        }
        std::vector<MaskBlock> out;
        const std::uint64_t vbit = 1ULL << v, ubit = 1ULL << u;
        const std::uint64_t free2 = unc[u] & ~vbit;
        std::uint64_t sub2 = 0;
        while (true) {
            const std::uint64_t side2 = sub2 | vbit;
            std::uint64_t common = ~0ULL;
            for (std::uint64_t t = side2; t; t &= t - 1)
                common &= unc[ctz(t)];
            const std::uint64_t free1 = common & ~ubit;
            std::uint64_t sub1 = 0;
            while (true) {
                const std::uint64_t side1 = sub1 | ubit;
                if (!nonstar_only ||
                    (std::popcount(side1) >= 2 && std::popcount(side2) >= 2)) {
                    MaskBlock blk{side1, side2, {}, 0};
                    for (std::uint64_t s = side1; s; s &= s - 1) {
                        int a = ctz(s);
                        for (std::uint64_t t = side2; t; t &= t - 1)
                            blk.edges.set(edge_id[a][ctz(t)]);
                    }
                    blk.edge_count = std::popcount(side1) * std::popcount(side2);
                    out.push_back(blk);
                }
                if (sub1 == free1)
                    break;
                sub1 = (sub1 - free1) & free1;
            }
            if (sub2 == free2)
                break;
            sub2 = (sub2 - free2) & free2;
        }
        std::sort(out.begin(), out.end(), [](const MaskBlock& a, const MaskBlock& b) {
            if (a.edge_count != b.edge_count)
                return a.edge_count > b.edge_count;
            if (a.side1 != b.side1)
                return a.side1 < b.side1;
            return a.side2 < b.side2;
        });
        return out;
    }

    void dfs(const EdgeSet& covered, int used) {
        ++nodes;
        if (out_of_budget())
            return;
        if (covered == all_edges) {
            if (used < best_count) {
                best_count = used;
                best_blocks = current;
                improved = true;
            }
            return;
        }
        const int lb = count_positive_negative_max(n, covered, edge_list);
        if (used + lb >= best_count)
            return;
        const int branch = all_edges.andnot(covered).first();
        auto [u, v] = edge_list[branch];
        for (const MaskBlock& blk : candidates(u, v, covered)) {
            current.emplace_back(blk.side1, blk.side2);
            dfs(covered | blk.edges, used + 1);
            current.pop_back();
            if (budget_hit)
                return;
        }
    }
};

std::vector<Biclique> masks_to_blocks(
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& blocks) {
    std::vector<Biclique> out;
    out.reserve(blocks.size());
    for (auto [s1, s2] : blocks)
        out.push_back({mask_to_set(s1), mask_to_set(s2)});
    return out;
}

} // namespace

VertexSet max_independent_set(const Graph& g) {
    if (g.n() > 64)
        throw TooLarge("max_independent_set requires n <= 64");
    if (g.n() == 0)
        return {};
    const Graph cg = complement(g);
    CliqueSolver solver;
    solver.n = g.n();
    for (int v = 0; v < g.n(); ++v)
        solver.adj[v] = cg.row64(v);
    const std::uint64_t everything =
        g.n() == 64 ? ~0ULL : (1ULL << g.n()) - 1;
    solver.expand(everything, 0, 0);
    return mask_to_set(solver.best_set);
}

int eigen_lower_bound(const Graph& g) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.n(), g.n());
    for (auto [u, v] : g.edges())
        a(u, v) = a(v, u) = 1.0;
    return inertia_bound(a);
}

BpResult exact_bp(const Graph& g, const SearchBudget& budget) {
    PartitionSearch search;
    search.init(g);

    BpResult result;
    const VertexSet independent = max_independent_set(g);
    const BicliquePartition cover = star_cover(g, independent);
    search.best_count = static_cast<int>(cover.blocks.size());
    for (const Biclique& b : cover.blocks) {
        std::uint64_t s1 = 0, s2 = 0;
        for (int v : b.part1)
            s1 |= 1ULL << v;
        for (int v : b.part2)
            s2 |= 1ULL << v;
        search.best_blocks.emplace_back(s1, s2);
    }

    search.max_nodes = budget.max_nodes;
    search.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                         std::chrono::duration<double>(budget.max_seconds));
    search.has_deadline = true;

    const int root_lb = count_positive_negative_max(g.n(), EdgeSet{}, search.edge_list);
    search.nodes = 1;
    if (root_lb < search.best_count)
        search.dfs(EdgeSet{}, 0);

    result.value = search.best_count;
    result.optimal = !search.budget_hit;
    result.nodes = search.nodes;
    result.witness = {g, masks_to_blocks(search.best_blocks)};
    return result;
}

namespace {

// minimum non-star partition sharing the caller's budget; returns the block
// masks so the special-subgraph search can assemble witnesses
std::optional<std::vector<std::pair<std::uint64_t, std::uint64_t>>>
min_nonstar_blocks(const Graph& h, int r_max, PartitionSearch& search) {
    search.init(h);
    search.nonstar_only = true;
    search.best_count = r_max + 1;
    search.best_blocks.clear();
    search.improved = false;
    if (search.all_edges.none())
        return r_max >= 0 ? std::optional(std::vector<std::pair<std::uint64_t, std::uint64_t>>{})
                          : std::nullopt;
    const int root_lb = count_positive_negative_max(h.n(), EdgeSet{}, search.edge_list);
    ++search.nodes;
    if (root_lb < search.best_count)
        search.dfs(EdgeSet{}, 0);
    if (search.budget_hit)
        throw BudgetExhausted("non-star partition search budget exhausted");
    if (!search.improved)
        return std::nullopt;
    return search.best_blocks;
}

} // namespace

std::optional<int> min_nonstar_partition(const Graph& h, int r_max) {
    if (r_max < 0)
        throw BadArgs("r_max must be nonnegative");
    PartitionSearch search;
    auto blocks = min_nonstar_blocks(h, r_max, search);
    if (!blocks)
        return std::nullopt;
    return static_cast<int>(blocks->size());
}

namespace {

// lexicographically least independent set of the requested size
bool lex_independent_subset(const Graph& g, int size, int from, VertexSet& chosen) {
    if (static_cast<int>(chosen.size()) == size)
        return true;
    for (int v = from; v <= g.n() - (size - static_cast<int>(chosen.size())); ++v) {
        bool ok = true;
        for (int u : chosen)
            if (g.has_edge(u, v)) {
                ok = false;
                break;
            }
        if (!ok)
            continue;
        chosen.push_back(v);
        if (lex_independent_subset(g, size, v + 1, chosen))
            return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace

std::optional<SpecialWitness> has_special_subgraph(const Graph& g, int k,
                                                   const SearchBudget& budget) {
    const int n = g.n();
    if (k < 2 || k > n)
        throw BadArgs("order k must satisfy 2 <= k <= n");

    long long nodes_used = 0;
    const auto deadline =
        Clock::now() + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(budget.max_seconds));

    for (int r = 0; r + k <= n; ++r) {
        if (r == 0) {
            VertexSet chosen;
            ++nodes_used;
            if (lex_independent_subset(g, k, 0, chosen))
                return SpecialWitness{k, 0, chosen, {}};
            continue;
        }
        // all (k+r)-subsets in lexicographic order
        const int size = k + r;
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i)
            idx[i] = i;
        while (true) {
            ++nodes_used;
            if (nodes_used >= budget.max_nodes || Clock::now() > deadline)
                throw BudgetExhausted("special subgraph search budget exhausted");
            VertexSet subset(idx.begin(), idx.end());
            const Graph h = induced_subgraph(g, subset);
            PartitionSearch search;
            search.max_nodes = budget.max_nodes - nodes_used;
            search.deadline = deadline;
            search.has_deadline = true;
            auto blocks = min_nonstar_blocks(h, r, search);
            nodes_used += search.nodes;
            if (blocks) {
                SpecialWitness w;
                w.k = k;
                w.r = r;
                w.vertices = subset;
                for (auto [s1, s2] : *blocks) {
                    VertexSet p1, p2;
                    for (int local : mask_to_set(s1))
                        p1.push_back(subset[local]);
                    for (int local : mask_to_set(s2))
                        p2.push_back(subset[local]);
                    w.blocks.push_back({p1, p2});
                }
                return w;
            }
            // next combination
            int i = size - 1;
            while (i >= 0 && idx[i] == n - size + i)
                --i;
            if (i < 0)
                break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }
    return std::nullopt;
}

int induced_matching_complement(const Graph& g, bool exact) {
    const Graph cg = complement(g);
    const auto edge_list = cg.edges();
    const int m = static_cast<int>(edge_list.size());
    if (m == 0)
        return 0;
    if (exact && g.n() > 20)
        throw TooLarge("exact induced matching limited to n <= 20");
    if (m > kMaxEdges)
        throw TooLarge("too many complement edges");

    // compat[e] holds the edges that may join e in an induced matching
    std::vector<EdgeSet> compat(m);
    auto strongly_disjoint = [&](int e, int f) {
        auto [a, b] = edge_list[e];
        auto [c, d] = edge_list[f];
        if (a == c || a == d || b == c || b == d)
            return false;
        return !cg.has_edge(a, c) && !cg.has_edge(a, d) && !cg.has_edge(b, c) &&
               !cg.has_edge(b, d);
    };
    for (int e = 0; e < m; ++e)
        for (int f = e + 1; f < m; ++f)
            if (strongly_disjoint(e, f)) {
                compat[e].set(f);
                compat[f].set(e);
            }

    if (!exact) {
        // greedy in edge order
        std::vector<int> chosen;
        for (int e = 0; e < m; ++e) {
            bool ok = true;
            for (int f : chosen)
                if (!((compat[f].w[e >> 6] >> (e & 63)) & 1)) {
                    ok = false;
                    break;
                }
            if (ok)
                chosen.push_back(e);
        }
        return static_cast<int>(chosen.size());
    }

    // max clique in the compatibility graph
    int best = 0;
    auto dfs = [&](auto&& self, EdgeSet cand, int size) -> void {
        if (size + cand.count() <= best)
            return;
        if (cand.none()) {
            best = std::max(best, size);
            return;
        }
        const int e = cand.first();
        EdgeSet without = cand;
        without.w[e >> 6] &= ~(1ULL << (e & 63));
        self(self, cand & compat[e], size + 1); // take e
        self(self, without, size);              // skip e
    };
    EdgeSet all;
    for (int e = 0; e < m; ++e)
        all.set(e);
    dfs(dfs, all, 0);
    return best;
}

} // namespace bplab
