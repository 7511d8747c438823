// Command-line harness: generate instances, decompose trees, run the online
// policies, replay golden traces, compute exact optima, and sweep corpora
// into CSV reports.
//
// Exit codes: 0 success, 1 usage/input error, 2 infeasibility or invariant
// breach detected.

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include "mlapd/alg_caterpillar.hpp"
#include "mlapd/alg_depth.hpp"
#include "mlapd/checks.hpp"
#include "mlapd/generators.hpp"
#include "mlapd/hpd.hpp"
#include "mlapd/offline_opt.hpp"
#include "mlapd/trace_io.hpp"

namespace fs = std::filesystem;
using namespace mlapd;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

Decomposition make_decomposition(const RootedTree& tree, const std::string& kind) {
    if (kind == "size") return size_heavy_decomposition(tree);
    return min_caterpillar_decomposition(tree);
}

struct RunOutput {
    std::string alg;
    Rat theta1, theta2;        // theta1 doubles as theta for the depth policy
    unsigned hdim = 0;         // caterpillar only
    SimulationResult result;
    Rat bound;                 // amortized/competitive bound factor
    Rat budget_factor;         // for the accounting check
    const Decomposition* decomposition = nullptr;
};

RunOutput run_policy(const Instance& inst, const std::string& alg,
                     const std::optional<std::string>& theta_text,
                     const std::optional<std::string>& theta1_text,
                     const std::optional<std::string>& theta2_text,
                     const Decomposition* decomp) {
    RunOutput out;
    out.alg = alg;
    if (alg == "depth") {
        Rat theta = theta_text ? parse_rational(*theta_text) : default_depth_theta(inst.tree);
        DepthPolicy policy(inst.tree, DepthParams{theta});
        out.result = simulate(inst, policy);
        out.theta1 = theta;
        out.bound = depth_bound(inst.tree.depth(), theta);
        out.budget_factor = theta;
    } else if (alg == "caterpillar") {
        if (!decomp) throw std::runtime_error("caterpillar policy needs a decomposition");
        CaterpillarParams params = default_caterpillar_params(*decomp);
        if (theta1_text) params.theta1 = parse_rational(*theta1_text);
        if (theta2_text) params.theta2 = parse_rational(*theta2_text);
        out.hdim = decomp->dimension;
        out.theta1 = params.theta1;
        out.theta2 = params.theta2;
        out.bound = caterpillar_bound(out.hdim, params.theta1, params.theta2);
        out.budget_factor = params.theta1 + params.theta2;
        CaterpillarPolicy policy(inst.tree, std::move(params));
        out.result = simulate(inst, policy);
        out.decomposition = decomp;
    } else if (alg == "baseline") {
        BaselinePolicy policy;
        out.result = simulate(inst, policy);
        out.theta1 = 0;
        out.bound = 0;
        out.budget_factor = 0;
    } else {
        throw std::runtime_error("unknown policy '" + alg + "'");
    }
    return out;
}

int cmd_gen(const std::string& shape_text, std::size_t n, std::size_t m, std::uint64_t seed,
            const std::string& horizon_text, const std::string& overlap_text,
            const std::string& out_path) {
    auto shape = parse_shape(shape_text);
    if (!shape) {
        std::cerr << "unknown shape '" << shape_text << "'\n";
        return kExitUsage;
    }
    Rat horizon = horizon_text.empty() ? Rat(m == 0 ? 1 : m) : parse_rational(horizon_text);
    Rat overlap = parse_rational(overlap_text);
    RootedTree tree = gen_tree(*shape, n, seed);
    std::vector<Request> requests = gen_requests(tree, m, horizon, overlap, seed + 1);
    std::string text = serialize_instance(Instance{std::move(tree), std::move(requests)});
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
    return kExitOk;
}

int cmd_decompose(const std::string& path, const std::string& kind) {
    Instance inst = load_instance(path);
    std::cout << format_decomposition(inst.tree, make_decomposition(inst.tree, kind));
    return kExitOk;
}

int cmd_run(const std::string& path, const std::string& alg,
            const std::optional<std::string>& theta, const std::optional<std::string>& theta1,
            const std::optional<std::string>& theta2, const std::string& decomp_kind,
            const std::string& solution_path, const std::string& trace_path) {
    Instance inst = load_instance(path);
    std::optional<Decomposition> decomp;
    if (alg == "caterpillar") decomp = make_decomposition(inst.tree, decomp_kind);
    RunOutput out =
        run_policy(inst, alg, theta, theta1, theta2, decomp ? &*decomp : nullptr);

    std::cout << "alg " << alg;
    if (alg == "depth") std::cout << " theta " << format_rational(out.theta1);
    if (alg == "caterpillar")
        std::cout << " theta1 " << format_rational(out.theta1) << " theta2 "
                  << format_rational(out.theta2) << " H " << out.hdim;
    std::cout << "\ntransmissions " << out.result.trace.size() << "\n";
    for (const auto& rec : out.result.trace)
        std::cout << "t " << format_rational(rec.time) << " cost "
                  << format_rational(rec.cost_tree) << "\n";
    std::cout << "total " << format_rational(out.result.solution.total_cost) << "\n";
    std::cout << "unanticipated " << format_rational(unanticipated_total(inst.tree, out.result.trace))
              << "\n";

    if (!solution_path.empty()) write_file(solution_path, serialize_solution(out.result.solution));
    if (!trace_path.empty()) write_file(trace_path, serialize_trace(inst, out.result.trace));

    FeasibilityReport report = validate_solution(inst, out.result.solution);
    if (!report.feasible || !report.structure_ok) {
        std::cerr << "infeasible or malformed output\n";
        return kExitViolation;
    }
    return kExitOk;
}

int cmd_replay(const std::string& instance_path, const std::string& golden_path,
               const std::string& theta_text) {
    Instance inst = load_instance(instance_path);
    DepthPolicy policy(inst.tree, DepthParams{parse_rational(theta_text)});
    SimulationResult result = simulate(inst, policy);
    std::string actual = serialize_trace(inst, result.trace);

    std::ifstream in(golden_path, std::ios::binary);
    if (!in) {
        std::cerr << "cannot open golden trace " << golden_path << "\n";
        return kExitUsage;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    TraceDiff diff = diff_trace_text(buf.str(), actual);
    if (diff.identical) {
        std::cout << "replay: pass\n";
        return kExitOk;
    }
    std::cout << "replay: fail (" << diff.differences.size() << " difference(s))\n";
    std::size_t shown = 0;
    for (const auto& d : diff.differences) {
        if (shown++ == 20) {
            std::cout << "  ...\n";
            break;
        }
        std::cout << "  " << d << "\n";
    }
    return kExitViolation;
}

int cmd_opt(const std::string& path, std::size_t max_requests) {
    Instance inst = load_instance(path);
    OptResult opt = exact_opt(inst, OptLimits{max_requests});
    std::cout << "opt " << format_rational(opt.cost) << "\n";
    std::cout << serialize_solution(opt.solution);
    return kExitOk;
}

int cmd_check(const std::string& path, const std::string& alg,
              const std::optional<std::string>& theta, const std::optional<std::string>& theta1,
              const std::optional<std::string>& theta2, const std::string& decomp_kind,
              std::size_t max_requests) {
    Instance inst = load_instance(path);
    std::optional<Decomposition> decomp;
    if (alg == "caterpillar") decomp = make_decomposition(inst.tree, decomp_kind);
    RunOutput out = run_policy(inst, alg, theta, theta1, theta2, decomp ? &*decomp : nullptr);
    const auto& tree = inst.tree;

    bool violation = false;
    std::cout << "alg " << alg << "\n";
    std::cout << "n_vertices " << tree.size() << "\nD " << tree.depth() << "\n";
    if (alg == "caterpillar") std::cout << "H " << out.hdim << "\n";
    std::cout << "alg_cost " << format_rational(out.result.solution.total_cost) << "\n";

    std::optional<OptResult> opt;
    if (inst.requests.size() <= max_requests) opt = exact_opt(inst, OptLimits{max_requests});
    if (opt) {
        std::cout << "opt_cost " << format_rational(opt->cost) << "\n";
        if (opt->cost > 0) {
            Rat ratio = out.result.solution.total_cost / opt->cost;
            std::cout << "ratio " << format_rational(ratio) << " (" << decimal_approx(ratio)
                      << ")\n";
        } else {
            std::cout << "ratio -\n";
        }
    } else {
        std::cout << "opt_cost - (over request cap " << max_requests << ")\nratio -\n";
    }

    if (alg != "baseline") {
        std::cout << "bound_value " << format_rational(out.bound) << " ("
                  << decimal_approx(out.bound) << ")\n";
        double e = 2.718281828459045;
        if (alg == "depth")
            std::cout << "bound_e_form " << e * (tree.depth() + 1) << "\n";
        else
            std::cout << "bound_e_form " << e * (4.0 * out.hdim + 2.0) << "\n";
    }

    FeasibilityReport report = validate_solution(inst, out.result.solution);
    std::cout << "feasible " << (report.feasible && report.structure_ok ? "true" : "false")
              << "\n";
    violation |= !report.feasible || !report.structure_ok;

    CheckResult structure = check_structure(inst, out.result.trace);
    std::cout << "structure_ok " << (structure.ok ? "true" : "false") << "\n";
    violation |= !structure.ok;

    if (alg != "baseline") {
        if (opt) {
            LowerBoundCheck lb = unanticipated_lower_bound(tree, out.result.trace, *opt);
            std::cout << "lemma2_ok " << (lb.holds ? "true" : "false") << " ("
                      << format_rational(lb.unanticipated_total) << " <= "
                      << format_rational(lb.opt_cost) << ")\n";
            violation |= !lb.holds;
            if (opt->cost > 0 &&
                out.result.solution.total_cost > out.bound * opt->cost) {
                std::cout << "ratio_within_bound false\n";
                violation = true;
            }
        } else {
            std::cout << "lemma2_ok -\n";
        }
        AmortizedBound amortized = check_amortized_bound(tree, out.result.trace, out.bound);
        std::cout << (alg == "depth" ? "lemma3_ok " : "lemma5h_ok ")
                  << (amortized.ok ? "true" : "false") << " ("
                  << format_rational(amortized.alg_cost) << " <= " << decimal_approx(amortized.cap)
                  << ")\n";
        violation |= !amortized.ok;

        CheckResult floor =
            alg == "depth"
                ? check_budget_floor_depth(tree, out.result.trace, out.theta1)
                : check_budget_floor_caterpillar(tree, *out.decomposition, out.result.trace,
                                                 out.theta1, out.theta2);
        std::cout << "budget_floor_ok " << (floor.ok ? "true" : "false") << "\n";
        violation |= !floor.ok;

        BudgetAccounting acct =
            check_budget_accounting(tree, out.result.trace, out.budget_factor);
        std::cout << "budget_accounting_ok " << (acct.ok ? "true" : "false") << "\n";
        violation |= !acct.ok;
    }
    return violation ? kExitViolation : kExitOk;
}

struct SweepTask {
    fs::path file;
    std::string alg;
    std::optional<std::string> theta, theta1, theta2;
};

std::string sweep_row(const SweepTask& task, const std::string& decomp_kind,
                      std::size_t max_requests) {
    auto csv_escape = [](const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string quoted = "\"";
        for (char c : s) {
            if (c == '"') quoted += '"';
            quoted += c;
        }
        return quoted + "\"";
    };
    std::ostringstream row;
    row << csv_escape(task.file.filename().string()) << ',';
    try {
        Instance inst = load_instance(task.file.string());
        Decomposition decomp = make_decomposition(inst.tree, decomp_kind);
        RunOutput out = run_policy(inst, task.alg, task.theta, task.theta1, task.theta2, &decomp);

        row << inst.tree.size() << ',' << inst.tree.depth() << ',' << decomp.dimension << ','
            << inst.requests.size() << ',' << task.alg << ',';
        if (task.alg == "depth")
            row << format_rational(out.theta1) << ",,,";
        else if (task.alg == "caterpillar")
            row << ',' << format_rational(out.theta1) << ',' << format_rational(out.theta2) << ',';
        else
            row << ",,,";
        row << format_rational(out.result.solution.total_cost) << ',';

        std::optional<OptResult> opt;
        if (inst.requests.size() <= max_requests) opt = exact_opt(inst, OptLimits{max_requests});
        if (opt) {
            row << format_rational(opt->cost) << ',';
            row << (opt->cost > 0
                        ? decimal_approx(out.result.solution.total_cost / opt->cost)
                        : "") << ',';
        } else {
            row << ",,";
        }
        row << (task.alg == "baseline" ? "" : decimal_approx(out.bound)) << ',';

        if (opt && task.alg != "baseline")
            row << (unanticipated_lower_bound(inst.tree, out.result.trace, *opt).holds ? "true"
                                                                                       : "false");
        row << ',';
        if (task.alg == "depth")
            row << (check_amortized_bound(inst.tree, out.result.trace, out.bound).ok ? "true"
                                                                                     : "false");
        row << ',';
        if (task.alg == "caterpillar")
            row << (check_amortized_bound(inst.tree, out.result.trace, out.bound).ok ? "true"
                                                                                     : "false");
        row << ',';
        FeasibilityReport report = validate_solution(inst, out.result.solution);
        row << (report.feasible && report.structure_ok ? "true" : "false") << ',';
    } catch (const std::exception& e) {
        row << ",,,," << task.alg << ",,,,,,,,,,," << csv_escape(e.what());
        return row.str();
    }
    return row.str();  // empty error column already appended
}

int cmd_sweep(const std::string& dir, const std::vector<std::string>& algs,
              const std::vector<std::string>& thetas, const std::vector<std::string>& theta1s,
              const std::vector<std::string>& theta2s, const std::string& decomp_kind,
              std::size_t max_requests, unsigned workers, const std::string& out_path) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".inst")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    if (theta1s.size() != theta2s.size())
        throw std::runtime_error("--theta1 and --theta2 must be given in pairs");

    std::vector<SweepTask> tasks;
    for (const auto& file : files) {
        for (const auto& alg : algs) {
            if (alg == "depth") {
                if (thetas.empty())
                    tasks.push_back({file, alg, std::nullopt, std::nullopt, std::nullopt});
                for (const auto& theta : thetas)
                    tasks.push_back({file, alg, theta, std::nullopt, std::nullopt});
            } else if (alg == "caterpillar") {
                if (theta1s.empty())
                    tasks.push_back({file, alg, std::nullopt, std::nullopt, std::nullopt});
                for (std::size_t i = 0; i < theta1s.size(); ++i)
                    tasks.push_back({file, alg, std::nullopt, theta1s[i], theta2s[i]});
            } else {
                tasks.push_back({file, alg, std::nullopt, std::nullopt, std::nullopt});
            }
        }
    }

    std::vector<std::string> rows(tasks.size());
    std::atomic<std::size_t> cursor{0};
    auto work = [&] {
        for (std::size_t i = cursor.fetch_add(1); i < tasks.size(); i = cursor.fetch_add(1))
            rows[i] = sweep_row(tasks[i], decomp_kind, max_requests);
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& thread : pool) thread.join();
    }

    std::ostringstream csv;
    csv << "instance,n_vertices,depth,cat_dim,n_requests,alg,theta,theta1,theta2,"
           "alg_cost,opt_cost,ratio,bound_value,lemma2_ok,lemma3_ok,lemma5h_ok,feasible,error\n";
    for (const auto& row : rows) csv << row << "\n";
    if (out_path.empty())
        std::cout << csv.str();
    else
        write_file(out_path, csv.str());
    return kExitOk;
}

unsigned default_workers() {
    if (const char* env = std::getenv("MLAPD_WORKERS")) {
        long parsed = std::strtol(env, nullptr, 10);
        if (parsed > 0) return static_cast<unsigned>(parsed);
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"online multi-level aggregation with deadlines: policies, exact optimum, "
                 "decompositions, generators"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a random instance");
    std::string gen_shape = "random", gen_horizon, gen_overlap = "1/2", gen_out;
    std::size_t gen_n = 10, gen_m = 5;
    std::uint64_t gen_seed = 1;
    gen->add_option("--shape", gen_shape, "line|caterpillar|lobster|random|perfect-binary");
    gen->add_option("--n", gen_n, "number of vertices")->check(CLI::PositiveNumber);
    gen->add_option("--m", gen_m, "number of requests");
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("--horizon", gen_horizon, "arrival horizon (default: m)");
    gen->add_option("--overlap", gen_overlap, "window density parameter");
    gen->add_option("-o,--output", gen_out, "output file (default: stdout)");

    // decompose
    auto* decompose = app.add_subcommand("decompose", "print a heavy path decomposition");
    std::string dec_file, dec_kind = "min";
    decompose->add_option("instance", dec_file, "instance file")->required();
    decompose->add_option("--decomp", dec_kind, "min|size")
        ->check(CLI::IsMember({"min", "size"}));

    // run
    auto* run = app.add_subcommand("run", "run an online policy");
    std::string run_file, run_alg = "depth", run_decomp = "min", run_solution, run_trace;
    std::string run_theta_s, run_theta1_s, run_theta2_s;
    run->add_option("instance", run_file, "instance file")->required();
    run->add_option("--alg", run_alg, "depth|caterpillar|baseline")
        ->check(CLI::IsMember({"depth", "caterpillar", "baseline"}));
    run->add_option("--theta", run_theta_s, "depth policy budget factor (default: D)");
    run->add_option("--theta1", run_theta1_s, "caterpillar deep-vertex factor (default: 2H+1)");
    run->add_option("--theta2", run_theta2_s, "caterpillar factor (default: 2H)");
    run->add_option("--decomp", run_decomp, "min|size")->check(CLI::IsMember({"min", "size"}));
    run->add_option("-o,--solution", run_solution, "write the solution to this file");
    run->add_option("--trace", run_trace, "write the trace to this file");

    // replay
    auto* replay = app.add_subcommand("replay", "diff a run against a golden trace");
    std::string replay_file, replay_golden, replay_theta = "3";
    replay->add_option("instance", replay_file, "instance file")->required();
    replay->add_option("golden", replay_golden, "golden trace file")->required();
    replay->add_option("--theta", replay_theta, "depth policy budget factor");

    // opt
    auto* opt = app.add_subcommand("opt", "exact offline optimum");
    std::string opt_file;
    std::size_t opt_cap = 8;
    opt->add_option("instance", opt_file, "instance file")->required();
    opt->add_option("--max-requests", opt_cap, "search cap");

    // check
    auto* check = app.add_subcommand("check", "run a policy and verify every bound");
    std::string check_file, check_alg = "depth", check_decomp = "min";
    std::string check_theta_s, check_theta1_s, check_theta2_s;
    std::size_t check_cap = 8;
    check->add_option("instance", check_file, "instance file")->required();
    check->add_option("--alg", check_alg, "depth|caterpillar|baseline")
        ->check(CLI::IsMember({"depth", "caterpillar", "baseline"}));
    check->add_option("--theta", check_theta_s, "depth policy budget factor");
    check->add_option("--theta1", check_theta1_s, "caterpillar deep-vertex factor");
    check->add_option("--theta2", check_theta2_s, "caterpillar factor");
    check->add_option("--decomp", check_decomp, "min|size")
        ->check(CLI::IsMember({"min", "size"}));
    check->add_option("--max-requests", check_cap, "exact-opt cap");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "run policies over a corpus directory, emit CSV");
    std::string sweep_dir, sweep_decomp = "min", sweep_out;
    std::vector<std::string> sweep_algs{"depth", "caterpillar"};
    std::vector<std::string> sweep_thetas, sweep_theta1s, sweep_theta2s;
    std::size_t sweep_cap = 8;
    unsigned sweep_workers = default_workers();
    sweep->add_option("corpus", sweep_dir, "directory of .inst files")->required();
    sweep->add_option("--algs", sweep_algs, "policies to run")->delimiter(',');
    sweep->add_option("--theta", sweep_thetas, "depth theta grid (repeatable)");
    sweep->add_option("--theta1", sweep_theta1s, "caterpillar theta1 grid (paired)");
    sweep->add_option("--theta2", sweep_theta2s, "caterpillar theta2 grid (paired)");
    sweep->add_option("--decomp", sweep_decomp, "min|size")
        ->check(CLI::IsMember({"min", "size"}));
    sweep->add_option("--max-requests", sweep_cap, "exact-opt cap");
    sweep->add_option("--workers", sweep_workers, "parallel workers (env MLAPD_WORKERS)");
    sweep->add_option("-o,--output", sweep_out, "CSV file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    auto opt_arg = [](const std::string& s) {
        return s.empty() ? std::nullopt : std::optional<std::string>(s);
    };

    try {
        if (gen->parsed())
            return cmd_gen(gen_shape, gen_n, gen_m, gen_seed, gen_horizon, gen_overlap, gen_out);
        if (decompose->parsed()) return cmd_decompose(dec_file, dec_kind);
        if (run->parsed())
            return cmd_run(run_file, run_alg, opt_arg(run_theta_s), opt_arg(run_theta1_s),
                           opt_arg(run_theta2_s), run_decomp, run_solution, run_trace);
        if (replay->parsed()) return cmd_replay(replay_file, replay_golden, replay_theta);
        if (opt->parsed()) return cmd_opt(opt_file, opt_cap);
        if (check->parsed())
            return cmd_check(check_file, check_alg, opt_arg(check_theta_s),
                             opt_arg(check_theta1_s), opt_arg(check_theta2_s), check_decomp,
                             check_cap);
        if (sweep->parsed())
            return cmd_sweep(sweep_dir, sweep_algs, sweep_thetas, sweep_theta1s, sweep_theta2s,
                             sweep_decomp, sweep_cap, sweep_workers, sweep_out);
    } catch (const std::logic_error& e) {
        std::cerr << "invariant breach: " << e.what() << "\n";
        return kExitViolation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
