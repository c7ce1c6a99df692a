// Command-line driver: reduce, solve, verify, certify, roundtrip, export.
// Reports go to stdout as JSON lines; human summaries go to stderr.

#include <l21/certify.hh>
#include <l21/errors.hh>
#include <l21/labelling.hh>
#include <l21/nae.hh>
#include <l21/reduction.hh>
#include <l21/serialization.hh>
#include <l21/witness.hh>

#include <CLI11.hpp>

#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>

using namespace l21;

namespace {

// Exit statuses shared by the commands.
constexpr int exit_ok = 0;
constexpr int exit_fail = 1;
constexpr int exit_input = 2;
constexpr int exit_invariant = 3;

void emit(const json& report) { std::cout << report.dump() << std::endl; }

struct KRange {
    int lo = 4;
    int hi = 4;
};

KRange parse_range(const std::string& text)
{
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos)
            return {std::stoi(text), std::stoi(text)};
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    }
    catch (const std::exception&) {
        throw ValidationError("k range must read lo..hi, got '" + text + "'");
    }
}

Nae3SatFormula read_formula(const std::string& path) { return parse_formula(read_file(path)); }

Instance read_instance(const std::string& path) { return instance_from_json(parse_json_text(read_file(path))); }

// ---------------------------------------------------------------- reduce

struct ReduceOptions {
    int k = 4;
    std::string input;
    std::string out = ".";
    std::string stop_at = "instance";
    std::string fault;
};

int cmd_reduce(const ReduceOptions& opt)
{
    if (opt.k < 4)
        throw ValidationError("k must be at least 4, got " + std::to_string(opt.k));
    const Stage stop = stage_from_name(opt.stop_at);
    const auto formula = read_formula(opt.input);
    const auto trace = reduce(formula, opt.k, stop);

    std::filesystem::create_directories(opt.out);
    json report{{"command", "reduce"}, {"k", opt.k}, {"input", opt.input}, {"stop_at", opt.stop_at}};
    for (Stage s : {Stage::Cubic, Stage::Planar, Stage::Aux, Stage::Instance}) {
        if (static_cast<int>(s) > static_cast<int>(stop))
            break;
        Instance inst = stage_instance(trace, s);
        if (opt.fault == "twist-rotation" && s == stop) {
            for (VertexId v = 0; v < inst.graph.num_vertices(); ++v)
                if (inst.graph.degree(v) >= 3) {
                    auto& around = inst.rot.mutable_around(v);
                    std::swap(around[0], around[1]);
                    break;
                }
        }
        if (s != Stage::Cubic && !verify_planar(inst.graph, inst.rot))
            throw InvariantError(std::string(stage_name(s)) + " stage: embedding fails the Euler check");
        const std::string path = (std::filesystem::path(opt.out) / (std::string(stage_name(s)) + ".json")).string();
        write_file(path, canonical_text(instance_to_json(inst)));
        report["stages"][std::string(stage_name(s))] = {{"path", path}, {"vertices", inst.graph.num_vertices()},
            {"edges", inst.graph.num_edges()}};
        std::cerr << stage_name(s) << ": " << inst.graph.num_vertices() << " vertices, " << inst.graph.num_edges()
                  << " edges -> " << path << "\n";
    }
    const std::string manifest = (std::filesystem::path(opt.out) / "provenance.json").string();
    write_file(manifest, canonical_text(provenance_manifest(trace)));
    report["provenance"] = manifest;
    emit(report);
    return exit_ok;
}

// ---------------------------------------------------------------- solve

struct SolveOptions {
    std::string instance;
    std::optional<int> k;
    std::int64_t budget = 10'000'000;
    std::string out;
};

int cmd_solve(const SolveOptions& opt)
{
    if (opt.budget <= 0)
        throw ValidationError("budget must be positive");
    const Instance inst = read_instance(opt.instance);
    const int k = opt.k ? *opt.k : inst.k.value_or(4);
    const auto result = solve_labelling(inst.graph, k, {}, opt.budget);
    json report{{"command", "solve"}, {"instance", opt.instance}, {"k", k}, {"budget", opt.budget},
        {"outcome", std::string(outcome_name(result.outcome))}, {"nodes", result.nodes}};
    if (!result.reason.empty())
        report["reason"] = result.reason;
    if (result.witness && !opt.out.empty()) {
        write_file(opt.out, canonical_text(labelling_to_json(*result.witness)));
        report["labelling"] = opt.out;
    }
    emit(report);
    std::cerr << "solve: " << outcome_name(result.outcome) << " after " << result.nodes << " nodes\n";
    return exit_ok;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::string& instance_path, const std::string& labelling_path)
{
    const Instance inst = read_instance(instance_path);
    const Labelling L = labelling_from_json(parse_json_text(read_file(labelling_path)), inst.graph.num_vertices());
    if (inst.k && *inst.k != L.k)
        throw ValidationError("labelling span " + std::to_string(L.k) + " differs from the instance's "
            + std::to_string(*inst.k));
    const std::string why = explain_labelling(inst.graph, L);
    emit({{"command", "verify"}, {"instance", instance_path}, {"labelling", labelling_path}, {"valid", why.empty()},
        {"reason", why}});
    std::cerr << "verify: " << (why.empty() ? "valid" : why) << "\n";
    return why.empty() ? exit_ok : exit_fail;
}

// ---------------------------------------------------------------- certify

int cmd_certify(const std::string& range_text, const std::string& fault)
{
    const KRange range = parse_range(range_text);
    if (range.lo < 4 || range.hi < range.lo)
        throw ValidationError("k range must satisfy 4 <= lo <= hi");
    if (range.hi > max_certified_edge_gadget)
        throw CapacityError("edge gadget certification is limited to k <= " + std::to_string(max_certified_edge_gadget));

    std::vector<std::function<CertReport()>> jobs;
    jobs.push_back([&] { return fault == "drop-edge" ? certify_H(without_edge(build_H(), "a", "b")) : certify_H(); });
    jobs.push_back([] { return certify_clause_gadget(); });
    jobs.push_back([] { return certify_uncrossing(); });
    for (int k = std::max(6, range.lo); k <= range.hi; ++k)
        jobs.push_back([k] { return certify_Hprime(k); });
    for (int k = range.lo; k <= range.hi; ++k)
        jobs.push_back([k] { return certify_edge_gadget(k); });

    std::optional<std::string> failed;
    for (const auto& job : jobs) {
        const CertReport report = job();
        emit(report_to_json(report));
        std::cerr << report.lemma << (report.k ? " k=" + std::to_string(*report.k) : std::string()) << ": "
                  << (report.pass ? "pass" : "FAIL " + report.detail) << "\n";
        if (!report.pass && !failed)
            failed = report.lemma + (report.k ? " (k=" + std::to_string(*report.k) + ")" : std::string());
    }
    if (failed) {
        std::cerr << "first failing lemma: " << *failed << "\n";
        return exit_fail;
    }
    return exit_ok;
}

// ---------------------------------------------------------------- roundtrip

struct RoundtripOptions {
    std::string formula;
    int k = 4;
    std::optional<std::int64_t> budget;
    bool all = false;
    std::string fault;
};

// Forward and backward chains for one assignment; returns the first failure, if any.
std::optional<std::string> run_chain(const ReductionTrace& trace, const Assignment& a, int k, const std::string& fault)
{
    try {
        TwoColouring c = assignment_to_matching(trace, a);
        if (fault == "flip-colour")
            c[trace.planar.graph.edge(trace.planar.identifying.front()).u] =
                opposite(c[trace.planar.graph.edge(trace.planar.identifying.front()).u]);
        const auto co = matching_to_good_orientation(trace.planar.graph, c, trace.aux.graph);
        Labelling L = orientation_to_labelling(trace, co, k);
        if (fault == "corrupt-label")
            L.labels[trace.instance->gadget_base.front()] = L.labels[0];
        const auto back = labelling_to_orientation(trace, L);
        const auto good = canonicalize_orientation(trace.aux.graph, back);
        const auto matching = orientation_to_matching(trace, good);
        const auto recovered = matching_to_assignment(trace, matching);
        if (!check_nae(trace.formula, recovered))
            return "recovered assignment is not NAE-satisfying";
        return std::nullopt;
    }
    catch (const InvariantError& e) {
        return std::string(e.what());
    }
    catch (const ValidationError& e) {
        return std::string(e.what());
    }
}

int cmd_roundtrip(const RoundtripOptions& opt)
{
    if (opt.k < 4)
        throw ValidationError("k must be at least 4, got " + std::to_string(opt.k));
    if (opt.budget && *opt.budget <= 0)
        throw ValidationError("budget must be positive");
    const auto formula = read_formula(opt.formula);
    const auto trace = reduce(formula, opt.k);
    const auto& K = trace.instance->graph;
    json report{{"command", "roundtrip"}, {"formula", opt.formula}, {"k", opt.k},
        {"instance", {{"vertices", K.num_vertices()}, {"edges", K.num_edges()}}}};

    const auto first = solve_nae_bruteforce(formula);
    if (first) {
        std::vector<Assignment> assignments{*first};
        if (opt.all) {
            assignments.clear();
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << formula.num_vars); ++mask) {
                Assignment a;
                for (int v = 0; v < formula.num_vars; ++v)
                    a.values.push_back((mask >> (formula.num_vars - 1 - v)) & 1);
                if (check_nae(formula, a))
                    assignments.push_back(a);
            }
        }
        int passed = 0;
        std::optional<std::string> breach;
        for (const auto& a : assignments) {
            if (auto failure = run_chain(trace, a, opt.k, opt.fault)) {
                std::string shown = format_assignment(a);
                while (!shown.empty() && shown.back() == '\n')
                    shown.pop_back();
                breach = shown + ": " + *failure;
                break;
            }
            ++passed;
        }
        report["nae"] = "sat";
        report["assignments"] = assignments.size();
        report["passed"] = passed;
        report["verdict"] = breach ? "breach" : "ok";
        if (breach)
            report["failure"] = *breach;
        emit(report);
        std::cerr << "roundtrip: " << passed << "/" << assignments.size() << " assignments through both chains"
                  << (breach ? "; failure: " + *breach : std::string()) << "\n";
        return breach ? exit_fail : exit_ok;
    }

    report["nae"] = "unsat";
    if (!opt.budget) {
        report["verdict"] = "ok";
        report["note"] = "no search requested";
        emit(report);
        return exit_ok;
    }
    const auto result = solve_labelling(K, opt.k, {}, *opt.budget);
    report["search"] = {{"outcome", std::string(outcome_name(result.outcome))}, {"nodes", result.nodes},
        {"budget", *opt.budget}};
    int status = exit_ok;
    if (result.outcome == Outcome::Sat) {
        report["verdict"] = "breach";
        status = exit_fail;
    }
    else if (result.outcome == Outcome::Unsat)
        report["verdict"] = "ok";
    else {
        report["verdict"] = "ok";
        report["note"] = "no verdict: budget exhausted";
    }
    emit(report);
    std::cerr << "roundtrip: formula unsatisfiable; labelling search " << outcome_name(result.outcome) << " after "
              << result.nodes << " nodes\n";
    return status;
}

// ---------------------------------------------------------------- export

int cmd_export(const std::string& format, const std::string& input, const std::string& out)
{
    if (format != "dot")
        throw ValidationError("unsupported export format '" + format + "'");
    const std::string dot = to_dot(read_instance(input));
    if (out.empty())
        std::cout << dot;
    else {
        write_file(out, dot);
        emit({{"command", "export"}, {"format", format}, {"input", input}, {"out", out}});
    }
    return exit_ok;
}

// Each command maps its failures to exit statuses; `invariant_status` is what an
// InvariantError means for it.
template <typename F>
int guarded(F&& body, int invariant_status, int capacity_status = exit_input)
{
    try {
        return body();
    }
    catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_input;
    }
    catch (const CapacityError& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return capacity_status;
    }
    catch (const ValidationError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return exit_input;
    }
    catch (const InvariantError& e) {
        std::cerr << "invariant violated: " << e.what() << "\n";
        return invariant_status;
    }
    catch (const std::ios_base::failure& e) {
        std::cerr << "i/o: " << e.what() << "\n";
        return exit_input;
    }
    catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "i/o: " << e.what() << "\n";
        return exit_input;
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"L(2,1)-labelling hardness reduction toolkit"};
    app.require_subcommand(1);

    ReduceOptions reduce_opt;
    auto* reduce_cmd = app.add_subcommand("reduce", "Build the reduction stages for a formula");
    reduce_cmd->add_option("--k", reduce_opt.k, "Span of the labelling instance")->capture_default_str();
    reduce_cmd->add_option("input,--input", reduce_opt.input, "DIMACS formula")->required();
    reduce_cmd->add_option("--out", reduce_opt.out, "Output directory")->capture_default_str();
    reduce_cmd->add_option("--stop-at", reduce_opt.stop_at, "cubic, planar, aux or instance")->capture_default_str();
    reduce_cmd->add_option("--inject-fault", reduce_opt.fault)->group("");

    SolveOptions solve_opt;
    auto* solve_cmd = app.add_subcommand("solve", "Search for a labelling of an instance");
    solve_cmd->add_option("--instance", solve_opt.instance)->required();
    solve_cmd->add_option("--k", solve_opt.k, "Span; defaults to the instance's");
    solve_cmd->add_option("--budget", solve_opt.budget, "Node budget")->capture_default_str();
    solve_cmd->add_option("--out", solve_opt.out, "Where to write a found labelling");

    std::string verify_instance, verify_labelling;
    auto* verify_cmd = app.add_subcommand("verify", "Check a labelling against an instance");
    verify_cmd->add_option("--instance", verify_instance)->required();
    verify_cmd->add_option("--labelling", verify_labelling)->required();

    std::string certify_range = "4..7", certify_fault;
    auto* certify_cmd = app.add_subcommand("certify", "Machine-check the gadget lemmas");
    certify_cmd->add_option("--k", certify_range, "Span range lo..hi")->capture_default_str();
    certify_cmd->add_option("--inject-fault", certify_fault)->group("");

    RoundtripOptions rt_opt;
    auto* roundtrip_cmd = app.add_subcommand("roundtrip", "Run the witness chains on a formula");
    roundtrip_cmd->add_option("formula,--formula", rt_opt.formula)->required();
    roundtrip_cmd->add_option("--k", rt_opt.k)->capture_default_str();
    roundtrip_cmd->add_option("--budget", rt_opt.budget, "Labelling search budget for unsatisfiable formulas");
    roundtrip_cmd->add_flag("--all-assignments", rt_opt.all, "Run every NAE-satisfying assignment");
    roundtrip_cmd->add_option("--inject-fault", rt_opt.fault)->group("");

    std::string export_format = "dot", export_input, export_out;
    auto* export_cmd = app.add_subcommand("export", "Render an instance");
    export_cmd->add_option("--format", export_format)->capture_default_str();
    export_cmd->add_option("input,--input", export_input)->required();
    export_cmd->add_option("--out", export_out);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? exit_ok : exit_input;
    }

    if (*reduce_cmd)
        return guarded([&] { return cmd_reduce(reduce_opt); }, exit_invariant);
    if (*solve_cmd)
        return guarded([&] { return cmd_solve(solve_opt); }, exit_invariant);
    if (*verify_cmd)
        return guarded([&] { return cmd_verify(verify_instance, verify_labelling); }, exit_invariant);
    if (*certify_cmd)
        return guarded([&] { return cmd_certify(certify_range, certify_fault); }, exit_fail);
    if (*roundtrip_cmd)
        return guarded([&] { return cmd_roundtrip(rt_opt); }, exit_fail);
    return guarded([&] { return cmd_export(export_format, export_input, export_out); }, exit_invariant);
}
