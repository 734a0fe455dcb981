#include "bplab/bicliques.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "bplab/errors.hpp"

namespace bplab {

namespace {

std::pair<int, int> ordered(int u, int v) { return u < v ? std::pair{u, v} : std::pair{v, u}; }

bool well_formed(const Biclique& b, int n) {
    if (b.part1.empty() || b.part2.empty())
        return false;
    std::set<int> seen;
    for (const VertexSet* side : {&b.part1, &b.part2})
        for (int v : *side) {
            if (v < 0 || v >= n)
                return false;
            if (!seen.insert(v).second)
                return false; // repeated vertex or overlapping sides
        }
    return true;
}

} // namespace

ValidityReport validate_partition(const BicliquePartition& p) {
    ValidityReport report;
    std::map<std::pair<int, int>, int> cover;
    for (std::size_t i = 0; i < p.blocks.size(); ++i) {
        const Biclique& b = p.blocks[i];
        if (!well_formed(b, p.host.n())) {
            report.malformed_blocks.push_back(static_cast<int>(i));
            continue;
        }
        for (int u : b.part1)
            for (int v : b.part2) {
                if (!p.host.has_edge(u, v))
                    report.non_edges.push_back(ordered(u, v));
                else
                    ++cover[ordered(u, v)];
            }
    }
    for (auto [u, v] : p.host.edges()) {
        auto it = cover.find({u, v});
        if (it == cover.end())
            report.uncovered.emplace_back(u, v);
        else if (it->second > 1)
            report.doubly_covered.emplace_back(u, v);
    }
    return report;
}

bool is_star(const Biclique& b) {
    return std::min(b.part1.size(), b.part2.size()) == 1;
}

std::vector<VertexSet> base_sets(const Biclique& b) {
    if (b.part1.size() < b.part2.size())
        return {b.part1};
    if (b.part2.size() < b.part1.size())
        return {b.part2};
    return {b.part1, b.part2};
}

BicliquePartition star_cover(const Graph& g, const VertexSet& independent) {
    std::vector<bool> inside(g.n(), false);
    for (int v : independent) {
        if (v < 0 || v >= g.n())
            throw NotIndependent("vertex out of range");
        if (inside[v])
            throw NotIndependent("repeated vertex");
        inside[v] = true;
    }
    for (std::size_t i = 0; i < independent.size(); ++i)
        for (std::size_t j = i + 1; j < independent.size(); ++j)
            if (g.has_edge(independent[i], independent[j]))
                throw NotIndependent("set spans edge " +
                                     std::to_string(independent[i]) + "-" +
                                     std::to_string(independent[j]));

    BicliquePartition part{g, {}};
    std::vector<int> centers;
    for (int v = 0; v < g.n(); ++v)
        if (!inside[v])
            centers.push_back(v);
    std::vector<bool> is_later(g.n(), false);
    for (int c : centers)
        is_later[c] = true;
    for (int c : centers) {
        is_later[c] = false;
        VertexSet leaves;
        for (int v = 0; v < g.n(); ++v)
            if ((inside[v] || is_later[v]) && g.has_edge(c, v))
                leaves.push_back(v);
        if (!leaves.empty())
            part.blocks.push_back({{c}, leaves});
    }
    return part;
}

namespace {

// peeling works on mutable side sets; a block dies when a side empties
struct PeelBlock {
    std::set<int> s1, s2;
    bool alive = true;

    bool star() const { return std::min(s1.size(), s2.size()) == 1; }
    int center() const {
        if (s1.size() == 1 && s2.size() == 1)
            return std::min(*s1.begin(), *s2.begin());
        return s1.size() == 1 ? *s1.begin() : *s2.begin();
    }
    void drop_vertex(int v) {
        s1.erase(v);
        s2.erase(v);
        if (s1.empty() || s2.empty())
            alive = false;
    }
};

} // namespace

SpecialWitness star_peel(const BicliquePartition& p) {
    if (!validate_partition(p).valid())
        throw InvalidPartition("star_peel requires a valid partition");

    std::vector<PeelBlock> blocks;
    for (const Biclique& b : p.blocks)
        blocks.push_back({{b.part1.begin(), b.part1.end()},
                          {b.part2.begin(), b.part2.end()},
                          true});

    std::vector<bool> alive_vertex(p.host.n(), true);
    while (true) {
        // snapshot this round's star blocks, ordered by center id
        std::vector<std::pair<int, std::size_t>> round;
        for (std::size_t i = 0; i < blocks.size(); ++i)
            if (blocks[i].alive && blocks[i].star())
                round.emplace_back(blocks[i].center(), i);
        if (round.empty())
            break;
        std::sort(round.begin(), round.end());
        for (auto [center, idx] : round) {
            // deletions earlier in the round may have changed this block
            if (!blocks[idx].alive || !blocks[idx].star() ||
                blocks[idx].center() != center)
                continue;
            alive_vertex[center] = false;
            for (PeelBlock& b : blocks)
                if (b.alive)
                    b.drop_vertex(center);
        }
    }

    SpecialWitness w;
    w.k = p.host.n() - static_cast<int>(p.blocks.size());
    for (int v = 0; v < p.host.n(); ++v)
        if (alive_vertex[v])
            w.vertices.push_back(v);
    w.r = static_cast<int>(w.vertices.size()) - w.k;
    for (const PeelBlock& b : blocks)
        if (b.alive)
            w.blocks.push_back({VertexSet(b.s1.begin(), b.s1.end()),
                                VertexSet(b.s2.begin(), b.s2.end())});
    return w;
}

bool witness_ok(const Graph& g, const SpecialWitness& w) {
    if (w.k < 0 || w.r < 0)
        return false;
    if (static_cast<int>(w.vertices.size()) != w.k + w.r)
        return false;
    if (static_cast<int>(w.blocks.size()) > w.r)
        return false;
    std::set<int> inside(w.vertices.begin(), w.vertices.end());
    if (inside.size() != w.vertices.size())
        return false;
    for (int v : w.vertices)
        if (v < 0 || v >= g.n())
            return false;
    for (const Biclique& b : w.blocks) {
        if (is_star(b))
            return false;
        for (const VertexSet* side : {&b.part1, &b.part2})
            for (int v : *side)
                if (!inside.count(v))
                    return false;
    }
    // blocks must partition exactly the edges induced by w.vertices
    Graph induced_host(g.n());
    for (int u : w.vertices)
        for (int v : w.vertices)
            if (u < v && g.has_edge(u, v))
                induced_host.add_edge(u, v);
    return validate_partition({induced_host, w.blocks}).valid();
}

namespace {

nlohmann::json blocks_to_json(const std::vector<Biclique>& blocks) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Biclique& b : blocks)
        arr.push_back({{"a", b.part1}, {"b", b.part2}});
    return arr;
}

} // namespace

std::string to_json(const BicliquePartition& p) {
    nlohmann::json j;
    j["blocks"] = blocks_to_json(p.blocks);
    return j.dump();
}

std::string to_json(const SpecialWitness& w) {
    nlohmann::json j;
    j["blocks"] = blocks_to_json(w.blocks);
    j["vertices"] = w.vertices;
    j["k"] = w.k;
    j["r"] = w.r;
    return j.dump();
}

SpecialWitness witness_from_json(std::string_view text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, true);
    SpecialWitness w;
    w.k = j.at("k").get<int>();
    w.r = j.at("r").get<int>();
    w.vertices = j.at("vertices").get<VertexSet>();
    for (const auto& jb : j.at("blocks"))
        w.blocks.push_back({jb.at("a").get<VertexSet>(), jb.at("b").get<VertexSet>()});
    return w;
}

} // namespace bplab
