#include "ysup/cli.hpp"

#include "ysup/cost.hpp"
#include "ysup/distribution.hpp"
#include "ysup/error.hpp"
#include "ysup/grover.hpp"
#include "ysup/passes.hpp"
#include "ysup/text_format.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace ysup::cli {

namespace {

using nlohmann::json;

constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Circuit load_circuit(const std::string& path) {
    try {
        return parse_circuit(read_file(path));
    } catch (const Error& e) {
        throw Error(e.code(), path + ": " + e.what());
    }
}

void write_text(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
    }
    file << text;
}

std::string fmt(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

json to_json(const CostReport& r) {
    return json{{"n", r.num_qubits},
                {"total", r.total},
                {"depth", r.depth},
                {"native_total", r.native_total},
                {"non_native_total", r.non_native_total},
                {"wrapper_native_total", r.wrapper_native_total},
                {"per_kind", r.per_kind},
                {"native_by_tag", r.native_by_tag}};
}

void print_cost(const CostReport& r, std::ostream& out) {
    out << "qubits " << r.num_qubits << "\n"
        << "total " << r.total << "\n"
        << "depth " << r.depth << "\n"
        << "native_total " << r.native_total << "\n"
        << "non_native_total " << r.non_native_total << "\n"
        << "wrapper_native_total " << r.wrapper_native_total << "\n";
    for (const auto& [kind, count] : r.per_kind) {
        out << "kind " << kind << " " << count << "\n";
    }
}

struct BuildOptions {
    std::size_t qubits = 0;
    std::string marked;
    std::size_t iterations = 1;
    std::string axis = "x";
    bool measure = false;
    std::string output;
};

struct TranspileOptions {
    std::string input;
    std::string passes;
    std::string output;
    bool log = false;
};

struct SimulateOptions {
    std::string input;
    std::optional<std::uint64_t> shots;
    std::optional<std::uint64_t> seed;
    bool json = false;
};

struct CostOptions {
    std::string input;
    bool json = false;
    bool realize_mcz = false;
};

struct CompareOptions {
    std::string baseline;
    std::string candidate;
    double tolerance = 1e-9;
    bool json = false;
};

int do_build(const BuildOptions& o, std::ostream& out) {
    GroverSpec spec;
    spec.num_qubits = o.qubits;
    spec.marked = o.marked;
    spec.iterations = o.iterations;
    spec.axis = (o.axis == "y") ? Axis::Y : Axis::X;
    spec.include_measure = o.measure;
    write_text(emit_circuit(build_grover(spec)), o.output, out);
    return 0;
}

int do_transpile(const TranspileOptions& o, std::ostream& out, std::ostream& err) {
    std::vector<Pass> passes;
    try {
        passes = parse_pass_list(o.passes);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    auto [circuit, log] = pipeline(load_circuit(o.input), passes);
    if (o.log) {
        for (const auto& entry : log) {
            err << entry.pass << ": " << entry.before << " -> " << entry.after << "\n";
        }
    }
    write_text(emit_circuit(circuit), o.output, out);
    return 0;
}

int do_simulate(const SimulateOptions& o, std::ostream& out) {
    const Circuit circuit = load_circuit(o.input);
    const Distribution dist = probabilities(run(circuit));
    const bool sampled = o.shots.has_value() || o.seed.has_value();
    const std::uint64_t shots = o.shots.value_or(1024);
    const std::uint64_t seed = o.seed.value_or(1);
    Counts counts;
    if (sampled) {
        counts = sample(dist, shots, seed);
    }

    if (o.json) {
        json j{{"n", circuit.num_qubits()}, {"probabilities", dist.table()}};
        if (sampled) {
            j["shots"] = shots;
            j["seed"] = seed;
            j["counts"] = counts;
        }
        out << j.dump() << "\n";
        return 0;
    }
    out << "# exact probabilities\n";
    for (const auto& [outcome, p] : dist.table()) {
        out << outcome << " " << fmt(p) << "\n";
    }
    if (sampled) {
        out << "# counts shots=" << shots << " seed=" << seed << "\n";
        for (const auto& [outcome, c] : counts) {
            out << outcome << " " << c << "\n";
        }
    }
    return 0;
}

int do_cost(const CostOptions& o, std::ostream& out) {
    Circuit circuit = load_circuit(o.input);
    if (o.realize_mcz) {
        circuit = realize_mcz(circuit);
    }
    const CostReport r = report(circuit);
    if (o.json) {
        out << to_json(r).dump() << "\n";
    } else {
        print_cost(r, out);
    }
    return 0;
}

int do_compare(const CompareOptions& o, std::ostream& out) {
    const Circuit a = load_circuit(o.baseline);
    const Circuit b = load_circuit(o.candidate);
    const double distance = tvd(probabilities(run(a)), probabilities(run(b)));
    const CostReport ra = report(a);
    const CostReport rb = report(b);
    std::optional<double> reduction;
    if (ra.wrapper_native_total > 0) {
        reduction = compare(a, b).wrapper_reduction_percent;
    }
    const bool same = distance <= o.tolerance;

    if (o.json) {
        json j{{"tvd", distance},
               {"tolerance", o.tolerance},
               {"equivalent", same},
               {"baseline_wrapper_native_total", ra.wrapper_native_total},
               {"candidate_wrapper_native_total", rb.wrapper_native_total},
               {"wrapper_reduction_percent", reduction ? json(*reduction) : json(nullptr)}};
        out << j.dump() << "\n";
    } else {
        out << "tvd " << fmt(distance) << "\n"
            << "baseline_wrapper_native_total " << ra.wrapper_native_total << "\n"
            << "candidate_wrapper_native_total " << rb.wrapper_native_total << "\n"
            << "wrapper_reduction_percent " << (reduction ? fmt(*reduction) : std::string("n/a")) << "\n"
            << (same ? "equivalent" : "different") << "\n";
    }
    return same ? 0 : kDomainError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Grover circuit builder, native-gate rewriter and statevector checker", "ysup"};
    app.require_subcommand(1);

    BuildOptions build;
    auto* build_cmd = app.add_subcommand("build", "Emit a tagged Grover circuit");
    build_cmd->add_option("--qubits", build.qubits, "Number of search qubits (>= 2)")->required();
    build_cmd->add_option("--marked", build.marked, "Marked outcome, q0 rightmost")->required();
    build_cmd->add_option("--iterations", build.iterations, "Grover iterations")->capture_default_str();
    build_cmd->add_option("--axis", build.axis, "Superposition axis")
        ->check(CLI::IsMember({"x", "y"}))
        ->capture_default_str();
    build_cmd->add_flag("--measure", build.measure, "Append 'measure all'");
    build_cmd->add_option("-o,--output", build.output, "Output file (default stdout)");

    TranspileOptions transpile;
    auto* transpile_cmd = app.add_subcommand("transpile", "Run rewrite passes over a circuit file");
    transpile_cmd->add_option("file", transpile.input, "Circuit file ('-' for stdin)")->required();
    transpile_cmd->add_option("--passes", transpile.passes,
                              "Comma-separated passes: decompose-h-safe, decompose-h-paper, "
                              "substitute-axis, expand-x, cancel")
        ->required();
    transpile_cmd->add_option("-o,--output", transpile.output, "Output file (default stdout)");
    transpile_cmd->add_flag("--log", transpile.log, "Print per-pass instruction counts to stderr");

    SimulateOptions simulate;
    auto* simulate_cmd = app.add_subcommand("simulate", "Exact distribution and optional seeded sampling");
    simulate_cmd->add_option("file", simulate.input, "Circuit file ('-' for stdin)")->required();
    simulate_cmd->add_option("--shots", simulate.shots, "Number of shots (default 1024 when sampling)")
        ->check(CLI::PositiveNumber);
    simulate_cmd->add_option("--seed", simulate.seed, "Sampler seed (default 1 when sampling)");
    simulate_cmd->add_flag("--json", simulate.json, "Emit a single JSON object");

    CostOptions cost;
    auto* cost_cmd = app.add_subcommand("cost", "Gate counts, native classification and depth");
    cost_cmd->add_option("file", cost.input, "Circuit file ('-' for stdin)")->required();
    cost_cmd->add_flag("--json", cost.json, "Emit a single JSON object");
    cost_cmd->add_flag("--realize-mcz", cost.realize_mcz, "Expand MCZ into H, MCX, H before counting");

    CompareOptions cmp;
    auto* compare_cmd = app.add_subcommand("compare", "Distribution distance and wrapper gate reduction");
    compare_cmd->add_option("baseline", cmp.baseline, "Baseline circuit file")->required();
    compare_cmd->add_option("candidate", cmp.candidate, "Candidate circuit file")->required();
    compare_cmd->add_option("--tolerance", cmp.tolerance, "Maximum TVD for success")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    compare_cmd->add_flag("--json", cmp.json, "Emit a single JSON object");

    std::vector<std::string> storage;
    storage.reserve(args.size() + 1);
    storage.emplace_back("ysup");
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) {
        argv.push_back(s.data());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        if (build_cmd->parsed()) return do_build(build, out);
        if (transpile_cmd->parsed()) return do_transpile(transpile, out, err);
        if (simulate_cmd->parsed()) return do_simulate(simulate, out);
        if (cost_cmd->parsed()) return do_cost(cost, out);
        if (compare_cmd->parsed()) return do_compare(cmp, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    }
    return kUsageError;
}

}  // namespace ysup::cli
