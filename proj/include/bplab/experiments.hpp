#ifndef BPLAB_EXPERIMENTS_HPP
#define BPLAB_EXPERIMENTS_HPP

#include "bplab/solver.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bplab {

// A campaign sweeps a (n, p) grid with `trials` seeded graphs per cell.
// Modes: exact-bp (full solve), special-subgraph (bp via the largest k
// admitting a witness), fk-search (pair-family witness search), bounds
// (alpha / star / spectral bounds, no exact solve), bkr (random event
// pairs on the product space {0,1}^n with symbol weight p).
struct CampaignConfig {
    std::vector<int> n_values;
    std::vector<double> p_values; // symbolic "p0" already resolved at parse
    int trials = 1;
    std::uint64_t base_seed = 0;
    std::string mode = "exact-bp";
    SearchBudget budget;
};

// parses the JSON config; p_values entries may be numbers or the string
// "p0"; unknown keys rejected. Throws ParseError / BadArgs.
CampaignConfig config_from_json(const std::string& text);

struct TrialRecord {
    int n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    std::optional<int> alpha;
    std::optional<int> bp;
    std::optional<int> star_bound;
    std::optional<bool> equal; // bp == n - alpha
    std::optional<int> lb_eigen;
    long long nodes = 0;
    double runtime_ms = 0.0; // wall time; reported in JSONL only
    std::string status;      // ok | budget | absent | violated | error:...
};

struct CellSummary {
    int n = 0;
    double p = 0.0;
    int trials = 0;
    double equal_frequency = 0.0; // over records where bp was computed
    double mean_alpha = 0.0;
    double mean_bp = 0.0;
    int bp_records = 0;
};

struct CampaignResult {
    std::vector<TrialRecord> records;
    std::vector<CellSummary> cells;
};

// runs every (n, p, trial) job; per-trial solver errors are recorded in
// the record's status, never aborting the run. A sandwich violation
// (eigen <= bp <= n - alpha broken) aborts with a diagnostic dump, since
// it means a solver bug. Deterministic: records depend only on the config.
CampaignResult run_campaign(const CampaignConfig& config);

// fixed columns n,p,seed,alpha,bp,star_bound,equal,lb_eigen,nodes,ms,status;
// byte-deterministic (the ms column is fixed to 0; wall time lives in the
// JSONL stream, which is exempt from the byte-identity contract)
std::string to_csv(const std::vector<TrialRecord>& records);

// one JSON object per record, including runtime_ms
std::string to_jsonl(const std::vector<TrialRecord>& records);

// per-cell summaries plus the scope note that grid frequencies at fixed n
// do not estimate limiting probabilities
std::string summary_json(const CampaignResult& result);

// shortest round-trip decimal text for a double (to_chars)
std::string double_text(double v);

} // namespace bplab

#endif
