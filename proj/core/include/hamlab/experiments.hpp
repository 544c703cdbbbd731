#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hamlab/instance_spec.hpp"
#include "hamlab/solver.hpp"

namespace hamlab {

// One grid cell of a sweep: a parameter template plus the value of the swept
// parameter it represents (echoed verbatim into every result row).
struct SweepCell {
    InstanceParams params;
    double param = 0.0;
    int trials = 1;
    std::optional<std::uint64_t> node_limit;    // per-cell override
    std::optional<double> time_limit_seconds;   // per-cell override
};

struct SweepSpec {
    std::vector<SweepCell> cells;
    SearchConfig solver;
    std::uint64_t master_seed = 0;
};

enum class RunOutcome { Ham, NonHam, Timeout, Error };
std::string_view to_string(RunOutcome o);  // HC / NONHAM / TIMEOUT / ERROR

// One row of a sweep.  Timing is deliberately recorded as zero so that a
// sweep's output is byte-identical across machines and worker counts; wall
// time belongs to single-instance runs, not corpus statistics.
struct ResultRecord {
    InstanceSpec instance;
    double param = 0.0;
    int n = 0;
    long m = 0;
    RunOutcome outcome = RunOutcome::Error;
    SolvePhase phase = SolvePhase::InitialPrune;   // meaningless for Error rows
    NonHamReason reason = NonHamReason::Exhausted; // NonHam rows only
    std::uint64_t nodes = 0;
    int restarts = 0;
    double ms = 0.0;
    Hardness hardness = Hardness::Easy;
};

// Runs every (cell, trial) job.  The per-instance seed is
// mix_seed(mix_seed(master_seed, cell_index), trial_index), so results are
// reproducible and independent of both worker count and execution order; the
// callback (when given) sees records in job order, one at a time.  Generator
// failures become Error rows rather than aborting the sweep.
std::vector<ResultRecord> run_sweep(
    const SweepSpec& spec, int workers = 1,
    const std::function<void(const ResultRecord&)>& on_record = nullptr);

// --- CSV (header + LF rows; fields quoted RFC-4180 style when needed) ---

std::string csv_header();  // spec,family,n,m,param,seed,outcome,phase,nodes,node_ratio,restarts,ms,hardness
std::string csv_row(const ResultRecord& rec);
void write_csv(std::ostream& out, const std::vector<ResultRecord>& recs);
std::vector<ResultRecord> read_csv(std::istream& in);  // throws std::runtime_error on malformed input

// --- Aggregations (all group rows by `param`, ascending) ---

// Cell identity recovered from a record: the canonical spec minus its seed,
// e.g. "gnmk:n=100,k=1.05".
std::string cell_key(const ResultRecord& rec);

struct CellStats {
    std::string key;
    double param = 0.0;
    long trials = 0;
    long ham = 0, nonham = 0, timeout = 0, error = 0;
    double pct_ham = 0.0;  // 100 * ham / (ham + nonham); timeouts/errors excluded
};
std::vector<CellStats> pct_hamiltonian(const std::vector<ResultRecord>& recs);

// Parameter value at which the (isotonically smoothed) percent-Hamiltonian
// curve crosses 50, by linear interpolation between adjacent grid points.
// Throws std::runtime_error when the curve never crosses.
struct CurvePoint {
    double param = 0.0;
    double value = 0.0;  // percent, 0..100
    double weight = 1.0;
};
std::vector<CurvePoint> isotonic_increasing(std::vector<CurvePoint> pts);
double fifty_percent_point(std::vector<CurvePoint> curve);
std::vector<CurvePoint> ham_curve(const std::vector<CellStats>& table);

struct HardnessRow {
    std::string key;
    double param = 0.0;
    long trials = 0;
    long quad_ham = 0;     // quadratically hard rows that found a cycle
    long quad_nonham = 0;  // quadratically hard rows proven non-Hamiltonian
    long timeout = 0;      // reported separately, excluded from the above
};
std::vector<HardnessRow> hardness_counts(const std::vector<ResultRecord>& recs);

// Search-node-ratio histogram.  A row lands in the smallest bucket whose
// edge (in multiples of n) is >= its nodes/n ratio; ratios beyond the last
// edge land in a final overflow bucket.
struct HistogramRow {
    std::string label;  // "≤2n", "5n", ..., ">50000n"
    double edge = 0.0;
    long count = 0;
};
extern const std::vector<double> kDefaultRatioBuckets;
std::vector<HistogramRow> node_ratio_histogram(
    const std::vector<ResultRecord>& recs,
    const std::vector<double>& edges = kDefaultRatioBuckets);

// --- Analytical reference curves ---

// Asymptotic probability that a random n-vertex, m-edge graph is
// Hamiltonian: with m = n/2 (ln n + ln ln n + c), the probability tends to
// exp(-exp(-2c)).
double ham_probability_theory(int n, long m);

// Expected number of degree-3 vertices whose three neighbors all have
// degree 2, in a random graph with eps*n vertices of degree 2 and the rest
// of degree 3.  Exact hypergeometric form and its large-n simplification
// n(1-eps)*eps^3; the exact form is 0 when eps*n < 3.
double e_3d2_exact(int n, double eps);
double e_3d2_asymptotic(int n, double eps);

// Mean degree at which half of the degree-sequence-constrained graphs above
// are expected to be Hamiltonian: 3 - n^(-1/3).
double predicted_50_point(int n);

// Count of degree-3 vertices all of whose neighbors have degree 2.
long count_3d2(const Graph& g);

}  // namespace hamlab
