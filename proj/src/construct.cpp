#include "bplab/construct.hpp"

#include "bplab/errors.hpp"
#include "bplab/rng.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <set>

namespace bplab {

namespace {

using Clock = std::chrono::steady_clock;

// checks well-formedness; throws MalformedWitness otherwise
void require_well_formed(const Graph& g, const FkWitness& w) {
    std::set<int> seen_k(w.K.begin(), w.K.end());
    if (seen_k.size() != w.K.size()) throw MalformedWitness("duplicate vertex in K");
    for (int v : w.K)
        if (v < 0 || v >= g.n()) throw MalformedWitness("K vertex out of range");

    std::set<int> seen_a;
    for (const auto& pr : w.pairs) {
        if (pr[0] == pr[1]) throw MalformedWitness("pair of equal vertices");
        for (int v : pr) {
            if (!seen_k.count(v)) throw MalformedWitness("pair vertex outside K");
            if (!seen_a.insert(v).second) throw MalformedWitness("pairs overlap");
        }
    }
    std::set<int> seen_b(w.B.begin(), w.B.end());
    if (seen_b.size() != w.B.size()) throw MalformedWitness("duplicate vertex in B");
    for (int v : w.B) {
        if (!seen_k.count(v)) throw MalformedWitness("B vertex outside K");
        if (seen_a.count(v)) throw MalformedWitness("B meets a pair");
    }
    if (seen_a.size() + seen_b.size() != seen_k.size())
        throw MalformedWitness("pairs and B do not cover K");
}

std::vector<int> pair_vertices(const FkWitness& w) {
    std::vector<int> a;
    for (const auto& pr : w.pairs) {
        a.push_back(pr[0]);
        a.push_back(pr[1]);
    }
    return a;
}

std::vector<int> neighborhood_in_b(const Graph& g, const std::array<int, 2>& pr,
                                   const VertexSet& b) {
    std::vector<int> nb;
    for (int beta : b)
        if (g.has_edge(beta, pr[0])) nb.push_back(beta);
    return nb;
}

} // namespace

int fk_pair_count(const FkParams& params) {
    int r = params.generalized
                ? params.r
                : static_cast<int>(std::llround(params.a * params.k / 2.0));
    if (r < 1 || params.k < 2 * r)
        throw BadArgs("pair family needs k >= 2r >= 2");
    return r;
}

bool check_fkprime(const Graph& g, const FkWitness& w) {
    require_well_formed(g, w);
    auto a = pair_vertices(w);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (g.has_edge(a[i], a[j])) return false;
    for (std::size_t i = 0; i < w.B.size(); ++i)
        for (std::size_t j = i + 1; j < w.B.size(); ++j)
            if (g.has_edge(w.B[i], w.B[j])) return false;
    for (const auto& pr : w.pairs)
        for (int beta : w.B)
            if (g.has_edge(beta, pr[0]) != g.has_edge(beta, pr[1])) return false;
    return true;
}

bool check_fk(const Graph& g, const FkWitness& w) {
    if (!check_fkprime(g, w)) throw NotInFkPrime("structural check fails");
    auto k = static_cast<long long>(w.K.size());
    for (const auto& pr : w.pairs) {
        for (int v : pr) {
            long long deg = 0;
            for (int beta : w.B)
                if (g.has_edge(v, beta)) ++deg;
            if (20 * deg < 3 * k) return false;
        }
    }
    for (std::size_t i = 0; i < w.pairs.size(); ++i) {
        for (std::size_t j = i + 1; j < w.pairs.size(); ++j) {
            long long diff = 0;
            // members of a pair share their B-neighborhood, so one
            // representative per pair decides it
            for (int beta : w.B)
                if (g.has_edge(beta, w.pairs[i][0]) != g.has_edge(beta, w.pairs[j][0]))
                    ++diff;
            if (4 * diff < k) return false;
        }
    }
    return true;
}

BicliquePartition fk_decomposition(const Graph& g, const FkWitness& w) {
    if (!check_fkprime(g, w)) throw NotInFkPrime("witness does not check out");
    BicliquePartition part{g, {}};
    Graph remaining = g;
    for (const auto& pr : w.pairs) {
        auto nb = neighborhood_in_b(g, pr, w.B);
        if (nb.empty()) continue;
        part.blocks.push_back({{pr[0], pr[1]}, nb});
        for (int v : pr)
            for (int beta : nb) remaining.remove_edge(v, beta);
    }
    std::vector<char> in_k(static_cast<std::size_t>(g.n()), 0);
    for (int v : w.K) in_k[static_cast<std::size_t>(v)] = 1;
    for (int c = 0; c < g.n(); ++c) {
        if (in_k[static_cast<std::size_t>(c)]) continue;
        std::vector<int> leaves;
        for (int v = 0; v < g.n(); ++v)
            if (remaining.has_edge(c, v)) leaves.push_back(v);
        if (leaves.empty()) continue;
        part.blocks.push_back({{c}, leaves});
        for (int v : leaves) remaining.remove_edge(c, v);
    }
    return part;
}

namespace {

struct CandidatePair {
    int u, v;
    int twins;
};

} // namespace

std::optional<FkWitness> search_fkprime(const Graph& g, const FkParams& params,
                                        std::uint64_t seed, const SearchBudget& budget) {
    int r = fk_pair_count(params);
    int k = params.k;
    if (k > g.n()) return std::nullopt;
    int b_need = k - 2 * r;

    auto deadline = Clock::now() +
                    std::chrono::duration_cast<Clock::duration>(
                        std::chrono::duration<double>(budget.max_seconds));
    long long nodes = 0;
    auto spend = [&](long long cost) {
        nodes += cost;
        if (budget.max_nodes >= 0 && nodes > budget.max_nodes)
            throw BudgetExhausted("pair-family search budget");
        if ((nodes & 1023) == 0 && Clock::now() > deadline)
            throw BudgetExhausted("pair-family search deadline");
    };

    // non-adjacent pairs scored once by twin-set size (vertices seeing both
    // endpoints or neither can later join B)
    std::vector<CandidatePair> pool;
    for (int u = 0; u < g.n(); ++u) {
        for (int v = u + 1; v < g.n(); ++v) {
            if (g.has_edge(u, v)) continue;
            int twins = 0;
            for (int w = 0; w < g.n(); ++w)
                if (w != u && w != v && g.has_edge(w, u) == g.has_edge(w, v)) ++twins;
            spend(1);
            if (twins >= b_need) pool.push_back({u, v, twins});
        }
    }
    if (pool.empty()) return std::nullopt;
    std::sort(pool.begin(), pool.end(), [](const auto& x, const auto& y) {
        if (x.twins != y.twins) return x.twins > y.twins;
        return std::pair{x.u, x.v} < std::pair{y.u, y.v};
    });

    const int restarts = 256;
    for (int t = 0; t < restarts; ++t) {
        std::mt19937_64 rng(splitmix64(seed ^ static_cast<std::uint64_t>(t)));
        std::vector<std::array<int, 2>> pairs;
        std::vector<char> in_a(static_cast<std::size_t>(g.n()), 0);

        // grow the pair set; A must stay edgeless across pairs too
        bool ok = true;
        for (int slot = 0; slot < r && ok; ++slot) {
            bool placed = false;
            for (int attempt = 0; attempt < 64 && !placed; ++attempt) {
                // early attempts draw from the best-scored half of the pool
                auto span = std::max<std::size_t>(
                    1, attempt < 32 ? pool.size() / 2 : pool.size());
                const auto& cand = pool[rng() % span];
                spend(1);
                if (in_a[static_cast<std::size_t>(cand.u)] ||
                    in_a[static_cast<std::size_t>(cand.v)])
                    continue;
                bool clash = false;
                for (const auto& pr : pairs) {
                    for (int x : {cand.u, cand.v})
                        for (int y : pr)
                            if (g.has_edge(x, y)) clash = true;
                    if (clash) break;
                }
                if (clash) continue;
                pairs.push_back({cand.u, cand.v});
                in_a[static_cast<std::size_t>(cand.u)] = 1;
                in_a[static_cast<std::size_t>(cand.v)] = 1;
                placed = true;
            }
            ok = placed;
        }
        if (!ok) continue;

        // B candidates: all-or-nothing for every pair, outside A
        std::vector<int> cands;
        for (int w = 0; w < g.n(); ++w) {
            if (in_a[static_cast<std::size_t>(w)]) continue;
            bool fits = true;
            for (const auto& pr : pairs) {
                spend(1);
                if (w == pr[0] || w == pr[1] ||
                    g.has_edge(w, pr[0]) != g.has_edge(w, pr[1])) {
                    fits = false;
                    break;
                }
            }
            if (fits) cands.push_back(w);
        }
        std::shuffle(cands.begin(), cands.end(), rng);

        // greedy independent pick of B
        std::vector<int> b;
        for (int w : cands) {
            if (static_cast<int>(b.size()) == b_need) break;
            bool clear = true;
            for (int x : b) {
                spend(1);
                if (g.has_edge(w, x)) {
                    clear = false;
                    break;
                }
            }
            if (clear) b.push_back(w);
        }
        if (static_cast<int>(b.size()) != b_need) continue;

        FkWitness w;
        w.pairs = pairs;
        w.B = b;
        for (const auto& pr : pairs) {
            w.K.push_back(pr[0]);
            w.K.push_back(pr[1]);
        }
        w.K.insert(w.K.end(), b.begin(), b.end());
        std::sort(w.K.begin(), w.K.end());
        std::sort(w.B.begin(), w.B.end());
        if (check_fkprime(g, w)) return w;
    }
    return std::nullopt;
}

std::string to_json(const FkWitness& w) {
    nlohmann::json j;
    j["K"] = w.K;
    j["pairs"] = nlohmann::json::array();
    for (const auto& pr : w.pairs) j["pairs"].push_back({pr[0], pr[1]});
    j["B"] = w.B;
    return j.dump();
}

FkWitness fk_witness_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("witness is not valid JSON", static_cast<std::size_t>(e.byte));
    }
    try {
        FkWitness w;
        w.K = j.at("K").get<std::vector<int>>();
        for (const auto& pr : j.at("pairs")) {
            if (pr.size() != 2) throw MalformedWitness("pair is not a 2-list");
            w.pairs.push_back({pr.at(0).get<int>(), pr.at(1).get<int>()});
        }
        w.B = j.at("B").get<std::vector<int>>();
        return w;
    } catch (const nlohmann::json::exception&) {
        throw MalformedWitness("witness JSON misses required fields");
    }
}

} // namespace bplab
