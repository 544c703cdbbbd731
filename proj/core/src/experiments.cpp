#include "hamlab/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "hamlab/rng.hpp"

namespace hamlab {

namespace {

template <class T>
std::string fmt_num(T x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

template <class T>
T parse_field(const std::string& val, const char* what) {
    T out{};
    auto res = std::from_chars(val.data(), val.data() + val.size(), out);
    if (res.ec != std::errc() || res.ptr != val.data() + val.size())
        throw std::runtime_error(std::string("csv: bad ") + what + " value \"" + val + "\"");
    return out;
}

}  // namespace

std::string_view to_string(RunOutcome o) {
    switch (o) {
        case RunOutcome::Ham: return "HC";
        case RunOutcome::NonHam: return "NONHAM";
        case RunOutcome::Timeout: return "TIMEOUT";
        case RunOutcome::Error: return "ERROR";
    }
    return "?";
}

std::vector<ResultRecord> run_sweep(const SweepSpec& spec, int workers,
                                    const std::function<void(const ResultRecord&)>& on_record) {
    if (spec.cells.empty()) throw std::invalid_argument("run_sweep: no cells");
    for (const SweepCell& cell : spec.cells)
        if (cell.trials < 1) throw std::invalid_argument("run_sweep: trials must be >= 1");
    if (workers < 1) throw std::invalid_argument("run_sweep: workers must be >= 1");

    struct Job {
        int cell, trial;
    };
    std::vector<Job> jobs;
    for (int ci = 0; ci < static_cast<int>(spec.cells.size()); ++ci)
        for (int ti = 0; ti < spec.cells[ci].trials; ++ti) jobs.push_back({ci, ti});

    auto run_one = [&spec](Job job) {
        const SweepCell& cell = spec.cells[job.cell];
        ResultRecord rec;
        rec.param = cell.param;
        rec.instance = {cell.params, mix_seed(mix_seed(spec.master_seed, job.cell), job.trial)};
        rec.n = instance_order(cell.params);
        try {
            Graph g = build_instance(rec.instance);
            rec.n = g.order();
            rec.m = g.edge_count();
            SearchConfig cfg = spec.solver;
            // The generator consumed an engine seeded with the instance seed;
            // give the solver an independent stream.
            cfg.seed = mix_seed(rec.instance.seed, 1);
            if (cell.node_limit) cfg.node_limit = cell.node_limit;
            if (cell.time_limit_seconds) cfg.time_limit_seconds = cell.time_limit_seconds;
            SolveResult res = solve(g, cfg);
            switch (res.outcome.kind) {
                case SolveOutcome::Kind::Hamiltonian: rec.outcome = RunOutcome::Ham; break;
                case SolveOutcome::Kind::NonHamiltonian: rec.outcome = RunOutcome::NonHam; break;
                case SolveOutcome::Kind::Timeout: rec.outcome = RunOutcome::Timeout; break;
            }
            rec.phase = res.stats.phase;
            rec.reason = res.outcome.reason;
            rec.nodes = res.stats.nodes;
            rec.restarts = res.stats.restarts;
            rec.ms = 0.0;  // kept at zero: sweep output must not depend on wall time
            rec.hardness = classify_hardness(res.stats, rec.n);
        } catch (const std::exception&) {
            rec.outcome = RunOutcome::Error;
        }
        return rec;
    };

    std::vector<ResultRecord> results(jobs.size());
    std::vector<char> done(jobs.size(), 0);
    std::atomic<std::size_t> next_job{0};
    std::mutex mu;
    std::size_t next_emit = 0;

    auto worker = [&] {
        for (;;) {
            const std::size_t j = next_job.fetch_add(1);
            if (j >= jobs.size()) return;
            ResultRecord rec = run_one(jobs[j]);
            std::lock_guard<std::mutex> lock(mu);
            results[j] = std::move(rec);
            done[j] = 1;
            // Emit the finished prefix so the callback sees job order.
            while (next_emit < jobs.size() && done[next_emit]) {
                if (on_record) on_record(results[next_emit]);
                ++next_emit;
            }
        }
    };

    const int pool_size = static_cast<int>(std::min<std::size_t>(workers, jobs.size()));
    if (pool_size <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < pool_size; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }
    return results;
}

namespace {

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::vector<std::string> split_csv_line(const std::string& line, int lineno) {
    std::vector<std::string> fields;
    std::string cur;
    std::size_t i = 0;
    auto fail = [lineno](const char* why) -> void {
        throw std::runtime_error("csv: line " + std::to_string(lineno) + ": " + why);
    };
    while (true) {
        cur.clear();
        if (i < line.size() && line[i] == '"') {
            ++i;
            for (;; ++i) {
                if (i >= line.size()) fail("unterminated quoted field");
                if (line[i] == '"') {
                    if (i + 1 < line.size() && line[i + 1] == '"') {
                        cur += '"';
                        ++i;
                    } else {
                        ++i;
                        break;
                    }
                } else {
                    cur += line[i];
                }
            }
            if (i < line.size() && line[i] != ',') fail("text after closing quote");
        } else {
            while (i < line.size() && line[i] != ',') {
                if (line[i] == '"') fail("quote inside unquoted field");
                cur += line[i++];
            }
        }
        fields.push_back(cur);
        if (i >= line.size()) break;
        ++i;  // the comma
    }
    return fields;
}

}  // namespace

std::string csv_header() {
    return "spec,family,n,m,param,seed,outcome,phase,nodes,node_ratio,restarts,ms,hardness";
}

std::string csv_row(const ResultRecord& rec) {
    const bool error = rec.outcome == RunOutcome::Error;
    std::string row = csv_quote(canonical_spec(rec.instance));
    row += ',';
    row += family_name(rec.instance.params);
    row += ',' + fmt_num(rec.n);
    row += ',' + fmt_num(rec.m);
    row += ',' + fmt_num(rec.param);
    row += ',' + fmt_num(rec.instance.seed);
    row += ',';
    row += to_string(rec.outcome);
    row += ',';
    if (!error) row += to_string(rec.phase);
    row += ',' + fmt_num(rec.nodes);
    row += ',' + fmt_num(rec.n > 0 ? static_cast<double>(rec.nodes) / rec.n : 0.0);
    row += ',' + fmt_num(rec.restarts);
    row += ',' + fmt_num(rec.ms);
    row += ',';
    if (!error) row += to_string(rec.hardness);
    return row;
}

void write_csv(std::ostream& out, const std::vector<ResultRecord>& recs) {
    out << csv_header() << '\n';
    for (const ResultRecord& rec : recs) out << csv_row(rec) << '\n';
}

std::vector<ResultRecord> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("csv: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != csv_header()) throw std::runtime_error("csv: unexpected header");

    std::vector<ResultRecord> recs;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto f = split_csv_line(line, lineno);
        if (f.size() != 13)
            throw std::runtime_error("csv: line " + std::to_string(lineno) + ": expected 13 fields");
        ResultRecord rec;
        try {
            rec.instance = parse_spec(f[0]);
        } catch (const SpecError& e) {
            throw std::runtime_error("csv: line " + std::to_string(lineno) + ": " + e.what());
        }
        rec.n = parse_field<int>(f[2], "n");
        rec.m = parse_field<long>(f[3], "m");
        rec.param = parse_field<double>(f[4], "param");
        rec.instance.seed = parse_field<std::uint64_t>(f[5], "seed");
        if (f[6] == "HC") rec.outcome = RunOutcome::Ham;
        else if (f[6] == "NONHAM") rec.outcome = RunOutcome::NonHam;
        else if (f[6] == "TIMEOUT") rec.outcome = RunOutcome::Timeout;
        else if (f[6] == "ERROR") rec.outcome = RunOutcome::Error;
        else throw std::runtime_error("csv: line " + std::to_string(lineno) + ": bad outcome");
        if (f[7] == "InitialPrune" || f[7].empty()) rec.phase = SolvePhase::InitialPrune;
        else if (f[7] == "Search") rec.phase = SolvePhase::Search;
        else if (f[7] == "Exhausted") rec.phase = SolvePhase::Exhausted;
        else if (f[7] == "LimitHit") rec.phase = SolvePhase::LimitHit;
        else throw std::runtime_error("csv: line " + std::to_string(lineno) + ": bad phase");
        rec.nodes = parse_field<std::uint64_t>(f[8], "nodes");
        rec.restarts = parse_field<int>(f[10], "restarts");
        rec.ms = parse_field<double>(f[11], "ms");
        if (f[12] == "quadratic") rec.hardness = Hardness::QuadraticallyHard;
        else if (f[12] == "easy" || f[12].empty()) rec.hardness = Hardness::Easy;
        else throw std::runtime_error("csv: line " + std::to_string(lineno) + ": bad hardness");
        recs.push_back(std::move(rec));
    }
    return recs;
}

std::string cell_key(const ResultRecord& rec) {
    std::string key = canonical_spec(rec.instance);
    const auto at = key.rfind(",seed=");
    if (at != std::string::npos) key.erase(at);
    return key;
}

std::vector<CellStats> pct_hamiltonian(const std::vector<ResultRecord>& recs) {
    std::map<std::string, CellStats> cells;
    for (const ResultRecord& rec : recs) {
        CellStats& c = cells[cell_key(rec)];
        c.param = rec.param;
        ++c.trials;
        switch (rec.outcome) {
            case RunOutcome::Ham: ++c.ham; break;
            case RunOutcome::NonHam: ++c.nonham; break;
            case RunOutcome::Timeout: ++c.timeout; break;
            case RunOutcome::Error: ++c.error; break;
        }
    }
    std::vector<CellStats> table;
    for (auto& [key, c] : cells) {
        c.key = key;
        const long decided = c.ham + c.nonham;
        c.pct_ham = decided > 0 ? 100.0 * static_cast<double>(c.ham) / decided : 0.0;
        table.push_back(std::move(c));
    }
    std::stable_sort(table.begin(), table.end(),
                     [](const CellStats& a, const CellStats& b) { return a.param < b.param; });
    return table;
}

std::vector<CurvePoint> ham_curve(const std::vector<CellStats>& table) {
    std::vector<CurvePoint> pts;
    for (const CellStats& c : table) {
        const long decided = c.ham + c.nonham;
        if (decided > 0) pts.push_back({c.param, c.pct_ham, static_cast<double>(decided)});
    }
    return pts;
}

std::vector<CurvePoint> isotonic_increasing(std::vector<CurvePoint> pts) {
    std::stable_sort(pts.begin(), pts.end(),
                     [](const CurvePoint& a, const CurvePoint& b) { return a.param < b.param; });
    // Pool adjacent violators: merge backwards whenever a block mean drops.
    struct Block {
        double sum_w, sum_wy;
        int count;
        double mean() const { return sum_wy / sum_w; }
    };
    std::vector<Block> blocks;
    for (const CurvePoint& p : pts) {
        blocks.push_back({p.weight, p.weight * p.value, 1});
        while (blocks.size() >= 2 && blocks[blocks.size() - 2].mean() > blocks.back().mean()) {
            blocks[blocks.size() - 2].sum_w += blocks.back().sum_w;
            blocks[blocks.size() - 2].sum_wy += blocks.back().sum_wy;
            blocks[blocks.size() - 2].count += blocks.back().count;
            blocks.pop_back();
        }
    }
    std::size_t at = 0;
    for (const Block& b : blocks)
        for (int i = 0; i < b.count; ++i) pts[at++].value = b.mean();
    return pts;
}

double fifty_percent_point(std::vector<CurvePoint> curve) {
    if (curve.empty()) throw std::runtime_error("fifty_percent_point: empty curve");
    const std::vector<CurvePoint> s = isotonic_increasing(std::move(curve));
    std::size_t i = 0;
    while (i < s.size() && s[i].value < 50.0) ++i;
    if (i == s.size())
        throw std::runtime_error("fifty_percent_point: curve never reaches 50%");
    if (i == 0) {
        if (s[0].value == 50.0) return s[0].param;
        throw std::runtime_error("fifty_percent_point: curve starts above 50%");
    }
    const CurvePoint& a = s[i - 1];
    const CurvePoint& b = s[i];
    return a.param + (50.0 - a.value) * (b.param - a.param) / (b.value - a.value);
}

std::vector<HardnessRow> hardness_counts(const std::vector<ResultRecord>& recs) {
    std::map<std::string, HardnessRow> cells;
    for (const ResultRecord& rec : recs) {
        HardnessRow& row = cells[cell_key(rec)];
        row.param = rec.param;
        ++row.trials;
        if (rec.outcome == RunOutcome::Timeout) {
            ++row.timeout;  // not counted as quadratically hard: unresolved
        } else if (rec.hardness == Hardness::QuadraticallyHard) {
            if (rec.outcome == RunOutcome::Ham) ++row.quad_ham;
            if (rec.outcome == RunOutcome::NonHam) ++row.quad_nonham;
        }
    }
    std::vector<HardnessRow> table;
    for (auto& [key, row] : cells) {
        row.key = key;
        table.push_back(std::move(row));
    }
    std::stable_sort(table.begin(), table.end(),
                     [](const HardnessRow& a, const HardnessRow& b) { return a.param < b.param; });
    return table;
}

const std::vector<double> kDefaultRatioBuckets = {2,    5,    10,   20,    50,    100,  200,
                                                  500,  1000, 2000, 5000,  10000, 20000, 50000};

std::vector<HistogramRow> node_ratio_histogram(const std::vector<ResultRecord>& recs,
                                               const std::vector<double>& edges) {
    if (edges.empty() || !std::is_sorted(edges.begin(), edges.end()))
        throw std::invalid_argument("node_ratio_histogram: edges must be ascending");
    std::vector<HistogramRow> rows;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const std::string tag = fmt_num(edges[i]) + "n";
        rows.push_back({i == 0 ? "≤" + tag : tag, edges[i], 0});
    }
    rows.push_back({">" + fmt_num(edges.back()) + "n", edges.back(), 0});
    for (const ResultRecord& rec : recs) {
        if (rec.n <= 0) continue;
        const double ratio = static_cast<double>(rec.nodes) / rec.n;
        const auto it = std::lower_bound(edges.begin(), edges.end(), ratio);
        rows[it - edges.begin()].count += 1;  // past-the-end lands in the overflow row
    }
    return rows;
}

double ham_probability_theory(int n, long m) {
    if (n < 3) throw std::invalid_argument("ham_probability_theory: n must be >= 3");
    const double c = 2.0 * static_cast<double>(m) / n - std::log(n) - std::log(std::log(n));
    return std::exp(-std::exp(-2.0 * c));
}

double e_3d2_exact(int n, double eps) {
    if (n < 4) throw std::invalid_argument("e_3d2: n must be >= 4");
    if (!(eps >= 0.0 && eps <= 1.0)) throw std::invalid_argument("e_3d2: eps must be in [0, 1]");
    const double en = eps * n;
    if (en < 3.0) return 0.0;
    return n * (1.0 - eps) * en * (en - 1.0) * (en - 2.0) /
           ((n - 1.0) * (n - 2.0) * (n - 3.0));
}

double e_3d2_asymptotic(int n, double eps) {
    if (n < 1) throw std::invalid_argument("e_3d2: n must be >= 1");
    if (!(eps >= 0.0 && eps <= 1.0)) throw std::invalid_argument("e_3d2: eps must be in [0, 1]");
    return n * (1.0 - eps) * eps * eps * eps;
}

double predicted_50_point(int n) {
    if (n < 1) throw std::invalid_argument("predicted_50_point: n must be >= 1");
    return 3.0 - 1.0 / std::cbrt(static_cast<double>(n));
}

long count_3d2(const Graph& g) {
    long count = 0;
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) != 3) continue;
        bool all2 = true;
        for (int w : g.neighbors(v))
            if (g.degree(w) != 2) all2 = false;
        if (all2) ++count;
    }
    return count;
}

}  // namespace hamlab
