#include "bplab/experiments.hpp"

#include "bplab/bkr.hpp"
#include "bplab/construct.hpp"
#include "bplab/errors.hpp"
#include "bplab/graph_io.hpp"
#include "bplab/numerics.hpp"
#include "bplab/rng.hpp"

#include <json.hpp>

#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <iostream>
#include <sstream>
#include <thread>

namespace bplab {

namespace {

using nlohmann::json;

const char* kModes[] = {"exact-bp", "special-subgraph", "fk-search", "bounds", "bkr"};

bool known_mode(const std::string& m) {
    for (const char* s : kModes)
        if (m == s) return true;
    return false;
}

void validate(const CampaignConfig& c) {
    if (c.trials < 1) throw BadArgs("campaign needs trials >= 1");
    if (c.n_values.empty() || c.p_values.empty())
        throw BadArgs("campaign needs nonempty n_values and p_values");
    if (!known_mode(c.mode)) throw BadArgs("unknown campaign mode: " + c.mode);
    for (double p : c.p_values)
        if (!(p >= 0.0 && p <= 1.0)) throw BadArgs("campaign p outside [0,1]");
    for (int n : c.n_values) {
        if (n < 1) throw BadArgs("campaign n must be positive");
        if (c.mode == "bkr") {
            if (n > 16) throw BadArgs("bkr mode needs n <= 16 (product space 2^n)");
        } else if (n > 64) {
            throw BadArgs("graph modes need n <= 64");
        }
    }
}

TrialRecord run_exact_bp(const Graph& g, const TrialRecord& base,
                         const SearchBudget& budget) {
    TrialRecord rec = base;
    rec.alpha = static_cast<int>(max_independent_set(g).size());
    rec.star_bound = rec.n - *rec.alpha;
    rec.lb_eigen = eigen_lower_bound(g);
    try {
        BpResult res = exact_bp(g, budget);
        rec.bp = res.value;
        rec.nodes = res.nodes;
        rec.equal = (res.value == *rec.star_bound);
        rec.status = res.optimal ? "ok" : "budget";
    } catch (const TooLarge& e) {
        rec.status = std::string("error:") + e.what();
    }
    return rec;
}

TrialRecord run_special(const Graph& g, const TrialRecord& base,
                        const SearchBudget& budget) {
    TrialRecord rec = base;
    rec.alpha = static_cast<int>(max_independent_set(g).size());
    rec.star_bound = rec.n - *rec.alpha;
    rec.lb_eigen = eigen_lower_bound(g);
    try {
        int bp = rec.n - 1; // no witness at any k in [2,n] forces bp = n-1
        for (int k = rec.n; k >= 2; --k) {
            if (has_special_subgraph(g, k, budget)) {
                bp = rec.n - k;
                break;
            }
        }
        rec.bp = bp;
        rec.equal = (bp == *rec.star_bound);
        rec.status = "ok";
    } catch (const BudgetExhausted&) {
        rec.status = "budget";
    } catch (const TooLarge& e) {
        rec.status = std::string("error:") + e.what();
    }
    return rec;
}

TrialRecord run_fk_search(const Graph& g, const TrialRecord& base,
                          const SearchBudget& budget) {
    TrialRecord rec = base;
    FkParams params;
    params.k = 6;
    params.r = 1;
    params.generalized = true;
    try {
        auto w = search_fkprime(g, params, rec.seed, budget);
        rec.status = w ? "ok" : "absent";
    } catch (const BudgetExhausted&) {
        rec.status = "budget";
    }
    return rec;
}

TrialRecord run_bounds(const Graph& g, const TrialRecord& base) {
    TrialRecord rec = base;
    rec.alpha = static_cast<int>(max_independent_set(g).size());
    rec.star_bound = rec.n - *rec.alpha;
    rec.lb_eigen = eigen_lower_bound(g);
    rec.status = "ok";
    return rec;
}

TrialRecord run_bkr_trial(const TrialRecord& base) {
    TrialRecord rec = base;
    bkr::ProductSpace space(
        2, rec.n,
        std::vector<std::vector<double>>(static_cast<std::size_t>(rec.n),
                                         {1.0 - rec.p, rec.p}));
    std::mt19937_64 gen(rec.seed);
    auto random_event = [&] {
        bkr::Event e(space.outcome_count());
        for (long long i = 0; i < space.outcome_count(); ++i)
            if (gen() & 1u) e.insert(i);
        return e;
    };
    bkr::Event a = random_event();
    bkr::Event b = random_event();
    auto report = bkr::verify_bkr(space, {a, b});
    rec.status = report.holds ? "ok" : "violated";
    return rec;
}

TrialRecord run_trial(const CampaignConfig& config, int n, double p, int index) {
    TrialRecord base;
    base.n = n;
    base.p = p;
    base.seed = trial_seed(config.base_seed, static_cast<std::uint64_t>(n), p,
                           static_cast<std::uint64_t>(index));
    auto t0 = std::chrono::steady_clock::now();
    TrialRecord rec;
    try {
        if (config.mode == "bkr") {
            rec = run_bkr_trial(base);
        } else {
            Graph g = sample_gnp({n, p, base.seed});
            if (config.mode == "exact-bp")
                rec = run_exact_bp(g, base, config.budget);
            else if (config.mode == "special-subgraph")
                rec = run_special(g, base, config.budget);
            else if (config.mode == "fk-search")
                rec = run_fk_search(g, base, config.budget);
            else
                rec = run_bounds(g, base);
        }
    } catch (const std::exception& e) {
        rec = base;
        rec.status = std::string("error:") + e.what();
    }
    rec.runtime_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rec;
}

// a record violating eigen <= bp <= n - alpha exposes a solver bug; dump
// enough to replay and stop
void check_sandwich(const TrialRecord& rec) {
    if (!rec.bp) return;
    bool low_ok = !rec.lb_eigen || *rec.lb_eigen <= *rec.bp;
    bool high_ok = !rec.star_bound || *rec.bp <= *rec.star_bound;
    if (low_ok && high_ok) return;
    Graph g = sample_gnp({rec.n, rec.p, rec.seed});
    std::cerr << "sandwich invariant violated: n=" << rec.n << " p=" << rec.p
              << " seed=" << rec.seed << " eigen="
              << (rec.lb_eigen ? *rec.lb_eigen : -1) << " bp=" << *rec.bp
              << " star=" << (rec.star_bound ? *rec.star_bound : -1) << "\n"
              << serialize_graph(g, GraphFormat::edge_list) << std::flush;
    throw std::logic_error("sandwich invariant violated; diagnostic dumped");
}

} // namespace

CampaignConfig config_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("config is not valid JSON", static_cast<std::size_t>(e.byte));
    }
    CampaignConfig c;
    if (!j.is_object()) throw BadArgs("config must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (key == "n_values")
            c.n_values = value.get<std::vector<int>>();
        else if (key == "p_values") {
            for (const auto& pv : value) {
                if (pv.is_string()) {
                    if (pv.get<std::string>() != "p0")
                        throw BadArgs("the only symbolic p value is \"p0\"");
                    c.p_values.push_back(num::p0());
                } else {
                    c.p_values.push_back(pv.get<double>());
                }
            }
        } else if (key == "trials")
            c.trials = value.get<int>();
        else if (key == "base_seed")
            c.base_seed = value.get<std::uint64_t>();
        else if (key == "mode")
            c.mode = value.get<std::string>();
        else if (key == "budget") {
            if (value.contains("max_nodes"))
                c.budget.max_nodes = value.at("max_nodes").get<long long>();
            if (value.contains("max_seconds"))
                c.budget.max_seconds = value.at("max_seconds").get<double>();
        } else
            throw BadArgs("unknown config key: " + key);
    }
    validate(c);
    return c;
}

CampaignResult run_campaign(const CampaignConfig& config) {
    validate(config);
    struct Job {
        int n;
        double p;
        int index;
    };
    std::vector<Job> jobs;
    for (int n : config.n_values)
        for (double p : config.p_values)
            for (int t = 0; t < config.trials; ++t) jobs.push_back({n, p, t});

    std::vector<TrialRecord> records(jobs.size());
    unsigned workers = std::min<unsigned>(
        std::max(1u, std::thread::hardware_concurrency()), 8u);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            records[i] = run_trial(config, jobs[i].n, jobs[i].p, jobs[i].index);
        }
    };
    if (workers <= 1 || jobs.size() <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    CampaignResult result;
    result.records = std::move(records);
    for (const auto& rec : result.records) check_sandwich(rec);

    for (int n : config.n_values) {
        for (double p : config.p_values) {
            CellSummary cell;
            cell.n = n;
            cell.p = p;
            double alpha_sum = 0.0, bp_sum = 0.0;
            int alpha_cnt = 0, equal_cnt = 0;
            for (const auto& rec : result.records) {
                if (rec.n != n || rec.p != p) continue;
                ++cell.trials;
                if (rec.alpha) {
                    alpha_sum += *rec.alpha;
                    ++alpha_cnt;
                }
                if (rec.bp) {
                    bp_sum += *rec.bp;
                    ++cell.bp_records;
                    if (rec.equal && *rec.equal) ++equal_cnt;
                }
            }
            cell.mean_alpha = alpha_cnt ? alpha_sum / alpha_cnt : 0.0;
            cell.mean_bp = cell.bp_records ? bp_sum / cell.bp_records : 0.0;
            cell.equal_frequency =
                cell.bp_records ? static_cast<double>(equal_cnt) / cell.bp_records : 0.0;
            result.cells.push_back(cell);
        }
    }
    return result;
}

std::string double_text(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{}) throw BadArgs("double formatting failed");
    return std::string(buf, ptr);
}

std::string to_csv(const std::vector<TrialRecord>& records) {
    std::string out = "n,p,seed,alpha,bp,star_bound,equal,lb_eigen,nodes,ms,status\n";
    for (const auto& r : records) {
        out += std::to_string(r.n);
        out += ',';
        out += double_text(r.p);
        out += ',';
        out += std::to_string(r.seed);
        out += ',';
        if (r.alpha) out += std::to_string(*r.alpha);
        out += ',';
        if (r.bp) out += std::to_string(*r.bp);
        out += ',';
        if (r.star_bound) out += std::to_string(*r.star_bound);
        out += ',';
        if (r.equal) out += *r.equal ? "1" : "0";
        out += ',';
        if (r.lb_eigen) out += std::to_string(*r.lb_eigen);
        out += ',';
        out += std::to_string(r.nodes);
        out += ",0,"; // ms pinned for byte-identical replays
        out += r.status;
        out += '\n';
    }
    return out;
}

namespace {

json record_json(const TrialRecord& r) {
    json j;
    j["n"] = r.n;
    j["p"] = r.p;
    j["seed"] = r.seed;
    j["alpha"] = r.alpha ? json(*r.alpha) : json(nullptr);
    j["bp"] = r.bp ? json(*r.bp) : json(nullptr);
    j["star_bound"] = r.star_bound ? json(*r.star_bound) : json(nullptr);
    j["equal"] = r.equal ? json(*r.equal) : json(nullptr);
    j["lb_eigen"] = r.lb_eigen ? json(*r.lb_eigen) : json(nullptr);
    j["nodes"] = r.nodes;
    j["runtime_ms"] = r.runtime_ms;
    j["status"] = r.status;
    return j;
}

} // namespace

std::string to_jsonl(const std::vector<TrialRecord>& records) {
    std::string out;
    for (const auto& r : records) {
        out += record_json(r).dump();
        out += '\n';
    }
    return out;
}

std::string summary_json(const CampaignResult& result) {
    json cells = json::array();
    for (const auto& c : result.cells) {
        cells.push_back({{"n", c.n},
                         {"p", c.p},
                         {"trials", c.trials},
                         {"bp_records", c.bp_records},
                         {"equality_frequency", c.equal_frequency},
                         {"mean_alpha", c.mean_alpha},
                         {"mean_bp", c.mean_bp}});
    }
    json j;
    j["cells"] = cells;
    j["note"] = "equality of bp and n - alpha is an asymptotic claim; these are "
                "finite-n frequencies, not estimates of the limit";
    return j.dump();
}

} // namespace bplab
