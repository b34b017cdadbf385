// hmotif: count, enumerate and estimate hypergraph motif occurrences, and
// compare hypergraphs through significance profiles.
//
// Hyperedge ids are 1-based in every report; counts files are TSV or JSON
// and embed the hash of the run manifest that produced them.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hmotif/exact.hpp"
#include "hmotif/hypergraph.hpp"
#include "hmotif/memoized.hpp"
#include "hmotif/motif_table.hpp"
#include "hmotif/parallel.hpp"
#include "hmotif/profile.hpp"
#include "hmotif/projection.hpp"
#include "hmotif/randomize.hpp"
#include "hmotif/rng.hpp"
#include "hmotif/sampling.hpp"

using json = nlohmann::ordered_json;
using namespace hmotif;

namespace {

constexpr int kExitOk = 0, kExitUsage = 1, kExitInput = 2, kExitResource = 3;

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

// Run manifest: serialized alongside every output; replaying the recorded
// invocation reproduces the output bit for bit. Configuration keys feed the
// manifest hash; run results (timings, cache statistics) do not, so the
// hash identifies the semantic run regardless of destination or machine.
struct Manifest {
    json doc = json::object();

    Manifest(const std::string& subcommand, const std::vector<std::string>& argv_tail) {
        doc["tool"] = "hmotif";
        doc["subcommand"] = subcommand;
        doc["argv"] = argv_tail;
        doc["run"] = json::object();
    }
    template <typename T>
    void set(const std::string& key, const T& value) {
        doc[key] = value;
    }
    template <typename T>
    void set_result(const std::string& key, const T& value) {
        doc["run"][key] = value;
    }
    std::string hash() const {
        json c = doc;
        c.erase("run");
        c.erase("argv");
        return hex64(fnv1a64(c.dump()));
    }
    void write_alongside(const std::string& output_path) const {
        if (output_path.empty()) return;
        std::ofstream out(output_path + ".manifest.json");
        json c = doc;
        c["manifest_hash"] = hash();
        out << c.dump(2) << "\n";
    }
};

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start)
            .count();
    }
};

unsigned env_default_workers() {
    if (const char* env = std::getenv("HMOTIF_WORKERS")) {
        int n = std::atoi(env);
        if (n >= 1) return static_cast<unsigned>(n);
    }
    return default_workers();
}

InputFormat parse_format(const std::string& name) {
    if (name == "whitespace") return InputFormat::whitespace;
    if (name == "csv") return InputFormat::csv;
    throw CLI::ValidationError("--format", "expected whitespace or csv");
}

// output sink: file or stdout
struct Sink {
    std::ofstream file;
    std::string path;
    std::ostream& stream() { return path.empty() ? std::cout : file; }
    explicit Sink(const std::string& p) : path(p) {
        if (!p.empty()) {
            file.open(p);
            if (!file) throw std::runtime_error("cannot write output file: " + p);
        }
    }
};

void emit_counts_tsv(std::ostream& out, const std::array<double, 26>& counts, bool integral,
                     const std::string& manifest_hash) {
    out << "# manifest " << manifest_hash << "\n";
    out << "motif\topen\tcount\n";
    for (int t = 1; t <= 26; ++t) {
        out << t << '\t' << (MotifTable::is_open(t) ? "open" : "closed") << '\t';
        if (integral)
            out << static_cast<std::uint64_t>(counts[t - 1]);
        else
            out << std::setprecision(17) << counts[t - 1];
        out << '\n';
    }
}

void emit_counts_json(std::ostream& out, const std::array<double, 26>& counts, bool integral,
                      const Manifest& manifest) {
    json doc;
    doc["manifest_hash"] = manifest.hash();
    doc["kind"] = integral ? "exact" : "estimate";
    json rows = json::array();
    for (int t = 1; t <= 26; ++t) {
        json row;
        row["motif"] = t;
        row["open"] = MotifTable::is_open(t);
        if (integral)
            row["count"] = static_cast<std::uint64_t>(counts[t - 1]);
        else
            row["count"] = counts[t - 1];
        rows.push_back(row);
    }
    doc["counts"] = rows;
    out << doc.dump(2) << "\n";
}

// counts file reader: accepts the TSV and JSON layouts written by `count`.
// estimated inputs (decimal counts or kind=estimate) are reported so profile
// outputs can flag null models built from approximate counters.
struct CountsFile {
    std::array<double, 26> counts{};
    bool estimated = false;
};

CountsFile read_counts_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open counts file: " + path);
    CountsFile out;
    std::string first;
    while (std::getline(in, first) && (first.empty() || first[0] == '#')) {
    }
    if (!first.empty() && first[0] == '{') {
        std::stringstream rest;
        rest << first << in.rdbuf();
        json doc = json::parse(rest.str());
        out.estimated = doc.value("kind", "exact") == "estimate";
        for (const auto& row : doc.at("counts")) {
            int t = row.at("motif").get<int>();
            if (t < 1 || t > 26) throw std::runtime_error("bad motif id in " + path);
            out.counts[t - 1] = row.at("count").get<double>();
        }
        return out;
    }
    // header line then 26 tsv rows
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        int t;
        std::string open_flag;
        double value;
        if (!(ss >> t >> open_flag >> value)) continue;
        if (t < 1 || t > 26) throw std::runtime_error("bad motif id in " + path);
        out.counts[t - 1] = value;
        if (value != std::floor(value)) out.estimated = true;
    }
    return out;
}

std::array<double, 26> read_cp_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open cp file: " + path);
    std::array<double, 26> cp{};
    std::string line;
    bool json_mode = false;
    std::stringstream buffer;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (line[0] == '{') {
            json_mode = true;
            buffer << line << in.rdbuf();
            break;
        }
        std::istringstream ss(line);
        int t;
        std::string open_flag;
        double real, null, delta, cp_value;
        if (!(ss >> t >> open_flag >> real >> null >> delta >> cp_value)) continue;
        if (t >= 1 && t <= 26) cp[t - 1] = cp_value;
    }
    if (json_mode) {
        json doc = json::parse(buffer.str());
        for (const auto& row : doc.at("profile")) {
            int t = row.at("motif").get<int>();
            if (t >= 1 && t <= 26) cp[t - 1] = row.at("cp").get<double>();
        }
    }
    return cp;
}

std::string basename_of(const std::string& path) {
    auto slash = path.find_last_of('/');
    std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
    auto dot = name.find_last_of('.');
    return dot == std::string::npos ? name : name.substr(0, dot);
}

// shared options for subcommands that read a hypergraph
struct InputOpts {
    std::string path;
    std::string format = "whitespace";
    void attach(CLI::App* cmd) {
        cmd->add_option("input", path, "hypergraph file, one hyperedge per line")->required();
        cmd->add_option("--format", format, "input token format: whitespace or csv")
            ->capture_default_str();
    }
    Hypergraph load() const { return load_hypergraph(path, parse_format(format)); }
};

struct MemoOpts {
    std::string budget = "";
    std::string policy = "degree";
    bool enabled() const { return !budget.empty(); }
    void attach(CLI::App* cmd) {
        cmd->add_option("--memo-budget", budget,
                        "neighborhood cache budget: entry count or percent like 1%");
        cmd->add_option("--memo-policy", policy, "degree, random or lru")
            ->capture_default_str();
    }
    std::size_t resolve_entries(std::size_t total_adjacency) const {
        if (budget.empty()) return 0;
        if (budget.back() == '%') {
            double pct = std::stod(budget.substr(0, budget.size() - 1));
            return static_cast<std::size_t>(pct / 100.0 * double(total_adjacency));
        }
        return static_cast<std::size_t>(std::stoull(budget));
    }
};

int run_count(const InputOpts& input, bool exact, std::uint64_t approx_edge,
              std::uint64_t approx_wedge, std::uint64_t seed, unsigned workers,
              unsigned trials, const std::string& reference, const MemoOpts& memo,
              bool as_json, const std::string& output, Manifest& manifest) {
    Timer timer;
    Hypergraph g = input.load();
    Sink sink(output);

    manifest.set("input", input.path);
    manifest.set("workers", workers);

    if (exact) {
        ProjectedGraph p = project(g, workers);
        CountVector m = count_exact(g, p, workers);
        manifest.set("mode", "exact");
        manifest.set_result("wall_clock_ms", timer.ms());
        if (as_json)
            emit_counts_json(sink.stream(), m.as_doubles(), true, manifest);
        else
            emit_counts_tsv(sink.stream(), m.as_doubles(), true, manifest.hash());
        manifest.write_alongside(output);
        return kExitOk;
    }

    const bool wedge_mode = approx_wedge > 0;
    manifest.set("mode", wedge_mode ? "approx-wedge" : "approx-edge");
    manifest.set("samples", wedge_mode ? approx_wedge : approx_edge);
    manifest.set("seed", seed);
    manifest.set("trials", trials);

    CountVector reference_counts;
    bool have_reference = !reference.empty();
    if (have_reference) {
        auto ref = read_counts_file(reference);
        for (int t = 0; t < 26; ++t)
            reference_counts.counts[t] = static_cast<std::uint64_t>(ref.counts[t] + 0.5);
    }

    // shared structures built once; the memoized path touches only the
    // lightweight wedge index, never the full projection
    const bool use_memo = wedge_mode && memo.enabled();
    ProjectedGraph p;
    WedgeIndex idx;
    MemoConfig memo_cfg;
    if (use_memo) {
        idx = build_wedge_index(g, workers);
        std::size_t total_adj = 0;
        for (auto d : idx.degrees) total_adj += d;
        memo_cfg = {.budget_entries = memo.resolve_entries(total_adj),
                    .policy = parse_pin_policy(memo.policy),
                    .seed = seed};
    } else {
        p = project(g, workers);
        if (wedge_mode && p.wedge_count() == 0)
            std::cerr << "warning: hypergraph has no hyperwedges; estimates are all 0\n";
    }

    // trial loop: independent seeds derived from the top-level one
    std::array<double, 26> mean{}, m2{};
    std::vector<double> rel_errors;
    std::uint64_t constructed = 0, cache_hits = 0;
    std::size_t cached_entries = 0;
    std::array<double, 26> last{};
    for (unsigned trial = 0; trial < trials; ++trial) {
        SamplerConfig cfg{.sample_count = wedge_mode ? approx_wedge : approx_edge,
                          .seed = trials == 1 ? seed : derive_seed(seed, 100, trial),
                          .workers = workers};
        EstimateVector est;
        if (use_memo) {
            NeighborhoodProvider np(g, memo_cfg, &idx.degrees);
            est = wedge_sampling_with_cache(g, np, idx, cfg);
            MemoStats ms = np.stats();
            constructed += ms.constructions;
            cache_hits += ms.hits;
            cached_entries = std::max(cached_entries, ms.cached_entries);
        } else {
            est = wedge_mode ? count_approx_wedge(g, p, cfg) : count_approx_edge(g, p, cfg);
        }
        last = est.estimates;
        for (int t = 0; t < 26; ++t) {
            double d = est.estimates[t] - mean[t];
            mean[t] += d / double(trial + 1);
            m2[t] += d * (est.estimates[t] - mean[t]);
        }
        if (have_reference) rel_errors.push_back(relative_error(reference_counts, est.estimates));
    }

    if (memo.enabled()) {
        manifest.set_result("neighborhoods_constructed", constructed);
        manifest.set_result("cache_hits", cache_hits);
        // one cached adjacency entry = neighbor id + overlap, 8 bytes
        manifest.set_result("cache_bytes_equivalent", cached_entries * 8);
    }
    manifest.set_result("wall_clock_ms", timer.ms());

    std::ostream& out = sink.stream();
    if (as_json) {
        json doc;
        doc["manifest_hash"] = manifest.hash();
        doc["kind"] = "estimate";
        json rows = json::array();
        for (int t = 1; t <= 26; ++t) {
            json row;
            row["motif"] = t;
            row["open"] = MotifTable::is_open(t);
            row["count"] = trials == 1 ? last[t - 1] : mean[t - 1];
            if (trials > 1)
                row["stderr"] = std::sqrt(m2[t - 1] / double(trials - 1) / double(trials));
            rows.push_back(row);
        }
        doc["counts"] = rows;
        if (!rel_errors.empty()) {
            double re_mean = 0;
            for (double re : rel_errors) re_mean += re / double(rel_errors.size());
            doc["relative_error_mean"] = re_mean;
        }
        out << doc.dump(2) << "\n";
    } else {
        out << "# manifest " << manifest.hash() << "\n";
        out << "motif\topen\tcount";
        if (trials > 1) out << "\tstderr";
        out << "\n";
        for (int t = 1; t <= 26; ++t) {
            out << t << '\t' << (MotifTable::is_open(t) ? "open" : "closed") << '\t'
                << std::setprecision(17) << (trials == 1 ? last[t - 1] : mean[t - 1]);
            if (trials > 1)
                out << '\t' << std::sqrt(m2[t - 1] / double(trials - 1) / double(trials));
            out << '\n';
        }
        if (!rel_errors.empty()) {
            double re_mean = 0;
            for (double re : rel_errors) re_mean += re / double(rel_errors.size());
            out << "# relative_error_mean " << re_mean << "\n";
        }
    }
    manifest.write_alongside(output);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypergraph motif counting and profiling"};
    app.require_subcommand(1);

    std::vector<std::string> argv_tail(argv + 1, argv + argc);
    unsigned workers = env_default_workers();
    std::uint64_t seed = 0;
    bool as_json = false;
    std::string output;

    auto add_common = [&](CLI::App* cmd, bool with_seed) {
        cmd->add_option("--workers", workers, "worker threads (default: cores)");
        cmd->add_flag("--json", as_json, "emit JSON instead of TSV");
        cmd->add_option("-o,--output", output, "output file (default: stdout)");
        if (with_seed) cmd->add_option("--seed", seed, "top-level RNG seed");
    };

    // ------------------------------------------------------------------ stats
    auto* cmd_stats = app.add_subcommand("stats", "dataset statistics");
    InputOpts stats_in;
    stats_in.attach(cmd_stats);
    add_common(cmd_stats, false);

    // ---------------------------------------------------------------- project
    auto* cmd_project = app.add_subcommand("project", "dump the weighted projected graph");
    InputOpts project_in;
    project_in.attach(cmd_project);
    add_common(cmd_project, false);

    // ------------------------------------------------------------- motif-table
    auto* cmd_table = app.add_subcommand("motif-table", "dump the 26 motif classes");
    bool table_patterns = false;
    cmd_table->add_flag("--patterns", table_patterns, "also list all 128 patterns");
    add_common(cmd_table, false);

    // ------------------------------------------------------------------ count
    auto* cmd_count = app.add_subcommand("count", "count motif instances");
    InputOpts count_in;
    count_in.attach(cmd_count);
    bool exact = false;
    std::uint64_t approx_edge = 0, approx_wedge = 0;
    unsigned trials = 1;
    std::string reference;
    auto* flag_exact = cmd_count->add_flag("--exact", exact, "exact counts");
    auto* opt_ae = cmd_count->add_option("--approx-edge", approx_edge,
                                         "hyperedge-sampling estimate with s samples");
    auto* opt_aw = cmd_count->add_option("--approx-wedge", approx_wedge,
                                         "hyperwedge-sampling estimate with r samples");
    flag_exact->excludes(opt_ae)->excludes(opt_aw);
    opt_ae->excludes(opt_aw);
    cmd_count->add_option("--trials", trials, "independent repetitions; reports mean and stderr")
        ->capture_default_str();
    cmd_count->add_option("--reference", reference,
                          "exact counts file; adds relative error to the report");
    MemoOpts memo;
    memo.attach(cmd_count);
    add_common(cmd_count, true);

    // -------------------------------------------------------------- enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "list every motif instance");
    InputOpts enum_in;
    enum_in.attach(cmd_enum);
    add_common(cmd_enum, false);

    // --------------------------------------------------------------- features
    auto* cmd_features = app.add_subcommand("features", "per-hyperedge motif counts (HM26)");
    InputOpts features_in;
    features_in.attach(cmd_features);
    add_common(cmd_features, false);

    // -------------------------------------------------------------- randomize
    auto* cmd_random = app.add_subcommand("randomize", "degree-preserving null models");
    InputOpts random_in;
    random_in.attach(cmd_random);
    unsigned rand_trials = 5;
    std::string emit_dir;
    bool rand_count_exact = true;
    cmd_random->add_option("--trials", rand_trials, "number of randomized hypergraphs")
        ->capture_default_str();
    cmd_random->add_option("--emit-dir", emit_dir, "write each randomized hypergraph here");
    add_common(cmd_random, true);

    // --------------------------------------------------------------------- cp
    auto* cmd_cp = app.add_subcommand("cp", "significance and characteristic profile");
    std::string real_counts_path;
    std::vector<std::string> null_counts_paths;
    double epsilon = 1.0;
    cmd_cp->add_option("real", real_counts_path, "counts file for the real hypergraph")
        ->required();
    cmd_cp->add_option("null", null_counts_paths, "counts files for randomized hypergraphs")
        ->required();
    cmd_cp->add_option("--epsilon", epsilon, "significance damping constant")
        ->capture_default_str();
    add_common(cmd_cp, false);

    // ---------------------------------------------------------------- compare
    auto* cmd_compare = app.add_subcommand("compare", "correlation matrix of CP files");
    std::vector<std::string> cp_paths;
    std::vector<std::string> labels;
    cmd_compare->add_option("profiles", cp_paths, "two or more cp output files")->required();
    cmd_compare->add_option("--labels", labels, "dataset names (default: file basenames)");
    add_common(cmd_compare, false);

    // ------------------------------------------------------------------ bench
    auto* cmd_bench = app.add_subcommand("bench", "speed/accuracy sweeps, CSV output");
    InputOpts bench_in;
    bench_in.attach(cmd_bench);
    std::string bench_mode = "samples";
    std::string bench_sampler = "wedge";
    unsigned bench_trials = 5;
    cmd_bench->add_option("--mode", bench_mode, "sweep: samples, threads or memo")
        ->capture_default_str();
    cmd_bench->add_option("--sampler", bench_sampler, "edge or wedge")->capture_default_str();
    cmd_bench->add_option("--trials", bench_trials, "trials per sweep point")
        ->capture_default_str();
    add_common(cmd_bench, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_stats->parsed()) {
            Manifest manifest("stats", argv_tail);
            manifest.set("input", stats_in.path);
            Timer timer;
            Hypergraph g = stats_in.load();
            DegreeStats s = degree_stats(g);
            manifest.set_result("wall_clock_ms", timer.ms());
            Sink sink(output);
            std::ostream& out = sink.stream();
            if (as_json) {
                json doc;
                doc["manifest_hash"] = manifest.hash();
                doc["nodes"] = s.num_nodes;
                doc["edges"] = s.num_edges;
                doc["max_edge_size"] = s.max_edge_size;
                doc["duplicate_edges_dropped"] = g.duplicate_edges_dropped();
                doc["degree_distribution"] = json::object();
                for (auto [k, v] : s.degree_distribution)
                    doc["degree_distribution"][std::to_string(k)] = v;
                doc["edge_size_distribution"] = json::object();
                for (auto [k, v] : s.edge_size_distribution)
                    doc["edge_size_distribution"][std::to_string(k)] = v;
                out << doc.dump(2) << "\n";
            } else {
                out << "# manifest " << manifest.hash() << "\n";
                out << "nodes\t" << s.num_nodes << "\n";
                out << "edges\t" << s.num_edges << "\n";
                out << "max_edge_size\t" << s.max_edge_size << "\n";
                out << "duplicate_edges_dropped\t" << g.duplicate_edges_dropped() << "\n";
                out << "degree\tcount\n";
                for (auto [k, v] : s.degree_distribution) out << k << '\t' << v << '\n';
                out << "edge_size\tcount\n";
                for (auto [k, v] : s.edge_size_distribution) out << k << '\t' << v << '\n';
            }
            manifest.write_alongside(output);
            return kExitOk;
        }

        if (cmd_project->parsed()) {
            Manifest manifest("project", argv_tail);
            manifest.set("input", project_in.path);
            manifest.set("workers", workers);
            Timer timer;
            Hypergraph g = project_in.load();
            ProjectedGraph p = project(g, workers);
            manifest.set_result("wedges", p.wedge_count());
            manifest.set_result("wall_clock_ms", timer.ms());
            Sink sink(output);
            std::ostream& out = sink.stream();
            out << "# manifest " << manifest.hash() << "\n";
            // one line per hyperwedge: i j ω, 1-based, i < j
            for (auto [i, j] : p.wedges())
                out << (i + 1) << ' ' << (j + 1) << ' ' << p.overlap(i, j) << '\n';
            manifest.write_alongside(output);
            return kExitOk;
        }

        if (cmd_table->parsed()) {
            Manifest manifest("motif-table", argv_tail);
            const MotifTable& table = MotifTable::instance();
            Sink sink(output);
            std::ostream& out = sink.stream();
            if (as_json) {
                json doc;
                doc["manifest_hash"] = manifest.hash();
                json motifs = json::array();
                for (int id = 1; id <= 26; ++id) {
                    json row;
                    row["motif"] = id;
                    row["open"] = MotifTable::is_open(id);
                    row["canonical_pattern"] = table.canonical_pattern(id);
                    row["orbit"] = table.orbit(id);
                    motifs.push_back(row);
                }
                doc["motifs"] = motifs;
                if (table_patterns) {
                    json patterns = json::array();
                    for (int p = 0; p < kNumPatterns; ++p) {
                        const auto& e = table.entry(static_cast<std::uint8_t>(p));
                        json row;
                        row["pattern"] = p;
                        row["class"] = pattern_class_name(e.cls);
                        if (e.cls == PatternClass::valid) row["motif"] = e.motif_id;
                        patterns.push_back(row);
                    }
                    doc["patterns"] = patterns;
                }
                out << doc.dump(2) << "\n";
            } else {
                out << "# manifest " << manifest.hash() << "\n";
                out << "motif\topen\tcanonical_pattern\torbit\n";
                for (int id = 1; id <= 26; ++id) {
                    out << id << '\t' << (MotifTable::is_open(id) ? "open" : "closed") << '\t'
                        << int(table.canonical_pattern(id)) << '\t';
                    const auto& orbit = table.orbit(id);
                    for (std::size_t n = 0; n < orbit.size(); ++n)
                        out << (n ? "," : "") << int(orbit[n]);
                    out << '\n';
                }
                if (table_patterns) {
                    out << "pattern\tclass\tmotif\n";
                    for (int p = 0; p < kNumPatterns; ++p) {
                        const auto& e = table.entry(static_cast<std::uint8_t>(p));
                        out << p << '\t' << pattern_class_name(e.cls) << '\t';
                        if (e.cls == PatternClass::valid)
                            out << int(e.motif_id);
                        else
                            out << '-';
                        out << '\n';
                    }
                }
            }
            manifest.write_alongside(output);
            return kExitOk;
        }

        if (cmd_count->parsed()) {
            if (!exact && approx_edge == 0 && approx_wedge == 0)
                throw CLI::ValidationError("count",
                                           "pick one of --exact, --approx-edge, --approx-wedge");
            if (memo.enabled() && approx_wedge == 0)
                throw CLI::ValidationError("count",
                                           "--memo-budget applies to --approx-wedge only");
            Manifest manifest("count", argv_tail);
            return run_count(count_in, exact, approx_edge, approx_wedge, seed, workers, trials,
                             reference, memo, as_json, output, manifest);
        }

        if (cmd_enum->parsed()) {
            Manifest manifest("enumerate", argv_tail);
            manifest.set("input", enum_in.path);
            Timer timer;
            Hypergraph g = enum_in.load();
            ProjectedGraph p = project(g, workers);
            Sink sink(output);
            std::ostream& out = sink.stream();
            out << "# manifest " << manifest.hash() << "\n";
            std::uint64_t emitted = enumerate_instances(
                g, p, [&](EdgeId i, EdgeId j, EdgeId k, int t) {
                    out << (i + 1) << ' ' << (j + 1) << ' ' << (k + 1) << ' ' << t << '\n';
                    return static_cast<bool>(out);
                });
            if (!out) {
                std::cerr << "error: sink failed after " << emitted << " instances\n";
                return kExitResource;
            }
            manifest.set_result("instances", emitted);
            manifest.set_result("wall_clock_ms", timer.ms());
            manifest.write_alongside(output);
            return kExitOk;
        }

        if (cmd_features->parsed()) {
            Manifest manifest("features", argv_tail);
            manifest.set("input", features_in.path);
            Timer timer;
            Hypergraph g = features_in.load();
            ProjectedGraph p = project(g, workers);
            auto features = per_hyperedge_features(g, p, workers);
            manifest.set_result("wall_clock_ms", timer.ms());
            Sink sink(output);
            std::ostream& out = sink.stream();
            out << "# manifest " << manifest.hash() << "\n";
            out << "hyperedge";
            for (int t = 1; t <= 26; ++t) out << "\tm" << t;
            out << "\n";
            for (EdgeId i = 0; i < g.num_edges(); ++i) {
                out << (i + 1);
                for (int t = 0; t < 26; ++t) out << '\t' << features[i][t];
                out << '\n';
            }
            manifest.write_alongside(output);
            return kExitOk;
        }

        if (cmd_random->parsed()) {
            Manifest manifest("randomize", argv_tail);
            manifest.set("input", random_in.path);
            manifest.set("trials", rand_trials);
            manifest.set("seed", seed);
            Timer timer;
            Hypergraph g = random_in.load();
            auto counter = [&](const Hypergraph& h) {
                ProjectedGraph p = project(h, workers);
                return count_exact(h, p, workers).as_doubles();
            };
            (void)rand_count_exact;
            NullCounts nc = null_counts(g, {.trials = rand_trials, .seed = seed}, counter);
            if (!emit_dir.empty()) {
                for (std::size_t n = 0; n < nc.trial_seeds.size(); ++n) {
                    Hypergraph r = randomize_hypergraph(g, nc.trial_seeds[n]);
                    save_hypergraph(r, emit_dir + "/random_" + std::to_string(n) + ".txt");
                }
                manifest.set("emit_dir", emit_dir);
            }
            manifest.set_result("trial_seeds", nc.trial_seeds);
            manifest.set_result("wall_clock_ms", timer.ms());
            Sink sink(output);
            if (as_json)
                emit_counts_json(sink.stream(), nc.mean, false, manifest);
            else
                emit_counts_tsv(sink.stream(), nc.mean, false, manifest.hash());
            manifest.write_alongside(output);
            return kExitOk;
        }

        if (cmd_cp->parsed()) {
            Manifest manifest("cp", argv_tail);
            manifest.set("real", real_counts_path);
            manifest.set("null", null_counts_paths);
            manifest.set("epsilon", epsilon);
            CountsFile real_file = read_counts_file(real_counts_path);
            const auto& real = real_file.counts;
            std::array<double, 26> null_mean{};
            bool null_estimated = false;
            for (const auto& path : null_counts_paths) {
                CountsFile nc = read_counts_file(path);
                null_estimated = null_estimated || nc.estimated;
                for (int t = 0; t < 26; ++t)
                    null_mean[t] += nc.counts[t] / double(null_counts_paths.size());
            }
            manifest.set("real_counts_estimated", real_file.estimated);
            manifest.set("null_counts_estimated", null_estimated);
            SignificanceVector sig = significance(real, null_mean, epsilon);
            auto cp = characteristic_profile(sig);
            auto rc = relative_count(real, null_mean);
            auto rd = rank_difference(real, null_mean);
            Sink sink(output);
            std::ostream& out = sink.stream();
            if (as_json) {
                json doc;
                doc["manifest_hash"] = manifest.hash();
                doc["epsilon"] = epsilon;
                doc["rank_difference_orientation"] = "null_rank_minus_real_rank";
                doc["real_counts_estimated"] = real_file.estimated;
                doc["null_counts_estimated"] = null_estimated;
                json rows = json::array();
                for (int t = 1; t <= 26; ++t) {
                    json row;
                    row["motif"] = t;
                    row["open"] = MotifTable::is_open(t);
                    row["real"] = real[t - 1];
                    row["null"] = null_mean[t - 1];
                    row["delta"] = sig.delta[t - 1];
                    row["cp"] = cp[t - 1];
                    row["relative_count"] = rc[t - 1];
                    row["rank_difference"] = rd[t - 1];
                    rows.push_back(row);
                }
                doc["profile"] = rows;
                out << doc.dump(2) << "\n";
            } else {
                out << "# manifest " << manifest.hash() << "\n";
                out << "# rank_difference = rank in null - rank in real\n";
                if (real_file.estimated || null_estimated)
                    out << "# estimated inputs: real=" << (real_file.estimated ? "yes" : "no")
                        << " null=" << (null_estimated ? "yes" : "no") << "\n";
                out << "motif\topen\treal\tnull\tdelta\tcp\trelative_count\trank_difference\n";
                for (int t = 1; t <= 26; ++t)
                    out << t << '\t' << (MotifTable::is_open(t) ? "open" : "closed") << '\t'
                        << std::setprecision(17) << real[t - 1] << '\t' << null_mean[t - 1]
                        << '\t' << sig.delta[t - 1] << '\t' << cp[t - 1] << '\t' << rc[t - 1]
                        << '\t' << rd[t - 1] << '\n';
            }
            manifest.write_alongside(output);
            return kExitOk;
        }

        if (cmd_compare->parsed()) {
            Manifest manifest("compare", argv_tail);
            manifest.set("profiles", cp_paths);
            if (cp_paths.size() < 2)
                throw CLI::ValidationError("compare", "need at least two cp files");
            std::vector<std::array<double, 26>> profiles;
            std::vector<std::string> names;
            for (std::size_t n = 0; n < cp_paths.size(); ++n) {
                profiles.push_back(read_cp_file(cp_paths[n]));
                names.push_back(n < labels.size() ? labels[n] : basename_of(cp_paths[n]));
            }
            auto sim = cp_similarity_matrix(profiles);
            Sink sink(output);
            std::ostream& out = sink.stream();
            if (as_json) {
                json doc;
                doc["manifest_hash"] = manifest.hash();
                doc["labels"] = names;
                doc["correlation"] = sim;
                out << doc.dump(2) << "\n";
            } else {
                out << "# manifest " << manifest.hash() << "\n";
                out << "dataset";
                for (const auto& n : names) out << '\t' << n;
                out << '\n';
                for (std::size_t a = 0; a < names.size(); ++a) {
                    out << names[a];
                    for (std::size_t b = 0; b < names.size(); ++b)
                        out << '\t' << std::setprecision(6) << sim[a][b];
                    out << '\n';
                }
            }
            manifest.write_alongside(output);
            return kExitOk;
        }

        if (cmd_bench->parsed()) {
            Manifest manifest("bench", argv_tail);
            manifest.set("input", bench_in.path);
            manifest.set("mode", bench_mode);
            manifest.set("sampler", bench_sampler);
            manifest.set("seed", seed);
            Hypergraph g = bench_in.load();
            ProjectedGraph p = project(g, workers);
            CountVector exact_counts = count_exact(g, p, workers);
            const bool wedge_mode = bench_sampler == "wedge";
            const std::uint64_t population = wedge_mode ? p.wedge_count() : g.num_edges();

            Sink sink(output);
            std::ostream& out = sink.stream();
            out << "# manifest " << manifest.hash() << "\n";
            out << "mode,sampler,param,trial,seconds,relative_error\n";
            auto run_one = [&](std::uint64_t samples, unsigned bench_workers,
                               const MemoOpts* bench_memo, const std::string& param,
                               unsigned trial) {
                SamplerConfig cfg{.sample_count = std::max<std::uint64_t>(1, samples),
                                  .seed = derive_seed(seed, 200, trial),
                                  .workers = bench_workers};
                Timer t;
                EstimateVector est;
                if (bench_memo != nullptr) {
                    WedgeIndex idx = build_wedge_index(g, bench_workers);
                    std::size_t total_adj = 0;
                    for (auto d : idx.degrees) total_adj += d;
                    MemoConfig mc{.budget_entries = bench_memo->resolve_entries(total_adj),
                                  .policy = parse_pin_policy(bench_memo->policy),
                                  .seed = seed};
                    NeighborhoodProvider np(g, mc, &idx.degrees);
                    est = wedge_sampling_with_cache(g, np, idx, cfg);
                } else {
                    est = wedge_mode ? count_approx_wedge(g, p, cfg)
                                     : count_approx_edge(g, p, cfg);
                }
                double seconds = t.ms() / 1000.0;
                double re = relative_error(exact_counts, est.estimates);
                out << bench_mode << ',' << bench_sampler << ',' << param << ',' << trial << ','
                    << seconds << ',' << re << '\n';
            };

            if (bench_mode == "samples") {
                for (int k = 1; k <= 10; ++k) {
                    double frac = 0.025 * k;
                    auto samples = std::uint64_t(frac * double(population));
                    char label[16];
                    std::snprintf(label, sizeof label, "%g%%", 2.5 * k);
                    for (unsigned trial = 0; trial < bench_trials; ++trial)
                        run_one(samples, workers, nullptr, label, trial);
                }
            } else if (bench_mode == "threads") {
                auto samples = std::uint64_t(0.1 * double(population));
                for (unsigned t : {1u, 2u, 4u, 8u})
                    for (unsigned trial = 0; trial < bench_trials; ++trial)
                        run_one(samples, t, nullptr, std::to_string(t), trial);
            } else if (bench_mode == "memo") {
                if (!wedge_mode)
                    throw CLI::ValidationError("bench", "memo sweep needs --sampler wedge");
                auto samples = std::uint64_t(0.1 * double(population));
                for (const char* budget : {"0%", "0.1%", "1%", "10%", "100%"}) {
                    MemoOpts mo;
                    mo.budget = budget;
                    for (unsigned trial = 0; trial < bench_trials; ++trial)
                        run_one(samples, workers, &mo, budget, trial);
                }
            } else {
                throw CLI::ValidationError("bench", "mode must be samples, threads or memo");
            }
            manifest.write_alongside(output);
            return kExitOk;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::bad_alloc&) {
        std::cerr << "error: out of memory\n";
        return kExitResource;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitUsage;
}
