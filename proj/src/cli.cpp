#include "rdelab/cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "rdelab/closedform.hpp"
#include "rdelab/config.hpp"
#include "rdelab/engine.hpp"
#include "rdelab/errors.hpp"
#include "rdelab/invariants.hpp"
#include "rdelab/sampling.hpp"
#include "rdelab/symmetry.hpp"

namespace rdelab::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
    std::string command;
    std::string variant_positional;
    std::string config_path;
    std::optional<std::int64_t> steps;
    std::optional<std::int64_t> n;
    std::optional<int> j;
    std::optional<std::string> pattern;
    std::string t = "2";
    std::int64_t trials = 100;
    std::optional<std::uint64_t> seed;
    std::string format = "csv";
    int float_digits = 12;
    std::string output;
    bool inject_fault = false;
    std::string variant;
};

// Command-level failure carrying its exit code; the message goes to stderr.
struct Exit {
    int code;
    std::string message;
};

class RowWriter {
public:
    RowWriter(std::ostream& out, std::string format, int digits, std::vector<std::string> columns)
        : out_(out), format_(std::move(format)), digits_(digits), columns_(std::move(columns)) {
        if (format_ == "csv") {
            out_ << 'n';
            for (const auto& c : columns_) out_ << ',' << c;
            out_ << ",approx\n";
        }
    }

    // Exact columns, then the decimal rendering of `approx`.
    void row(std::int64_t n, const std::vector<std::string>& exact, const Rational& approx) {
        const std::string decimal = approx.to_decimal(digits_);
        if (format_ == "csv") {
            out_ << n;
            for (const auto& e : exact) out_ << ',' << e;
            out_ << ',' << decimal << '\n';
        } else {
            json line = {{"n", n}};
            for (std::size_t i = 0; i < exact.size(); ++i) line[columns_[i]] = exact[i];
            line["approx"] = decimal;
            out_ << line.dump() << '\n';
        }
    }

    void singular(const Singularity& s) {
        if (format_ == "csv") {
            out_ << s.index << ",singular," << to_string(s.reason) << '\n';
        } else {
            out_ << json{{"n", s.index}, {"singularity", to_string(s.reason)}}.dump() << '\n';
        }
    }

private:
    std::ostream& out_;
    std::string format_;
    int digits_;
    std::vector<std::string> columns_;
};

std::string spec_text(const CoefficientSpec& spec) {
    std::string text = to_string(spec.kind()) + "(";
    for (std::size_t i = 0; i < spec.values().size(); ++i) text += (i ? "," : "") + spec.values()[i].to_string();
    return text + ")";
}

std::string seeds_text(const InitialConditions& ic) {
    std::string text = "(";
    for (std::size_t i = 0; i < 5; ++i) text += (i ? "," : "") + ic.seeds()[i].to_string();
    return text + ")";
}

struct Context {
    const Options& opts;
    RunConfig config;
    bool has_config_file;
    std::ostream& out;
    std::ostream& err;

    std::int64_t steps_or(std::int64_t fallback) const {
        if (opts.steps) return *opts.steps;
        return has_config_file ? config.steps : fallback;
    }

    std::uint64_t seed() const {
        if (opts.seed) return *opts.seed;
        return config.seed.value_or(0);
    }

    RowWriter writer(std::vector<std::string> columns) const {
        return RowWriter(out, opts.format, opts.float_digits, std::move(columns));
    }
};

void report_violations(const std::vector<Violation>& violations, std::ostream& err) {
    for (const auto& v : violations) err << "forbidden: " << to_string(v.family) << ": " << v.description << '\n';
}

int cmd_iterate(const Context& ctx) {
    const auto traj = iterate(ctx.config.initial, ctx.config.a, ctx.config.b, ctx.steps_or(ctx.config.steps));
    auto writer = ctx.writer({"x_n"});
    for (std::int64_t n = Trajectory::first_index; n <= traj.last_index(); ++n) {
        writer.row(n, {traj.x(n).to_string()}, traj.x(n));
    }
    if (traj.singularity()) {
        writer.singular(*traj.singularity());
        ctx.err << "singularity at n=" << traj.singularity()->index << ": " << to_string(traj.singularity()->reason)
                << '\n';
        return exit_singular;
    }
    return exit_ok;
}

int cmd_closed_form(const Context& ctx) {
    const std::int64_t n_max = ctx.opts.n.value_or(5);
    if (n_max < 0) throw Exit{exit_usage, "--n must be nonnegative"};
    const auto& cfg = ctx.config;
    const auto violations = forbidden_check(cfg.initial, cfg.a, cfg.b, n_max);
    if (!violations.empty()) {
        report_violations(violations, ctx.err);
        return exit_singular;
    }

    GeneralSolution solution(cfg.initial, cfg.a, cfg.b);
    auto writer = ctx.writer({"x_n"});
    if (ctx.opts.j && ctx.opts.n) {
        const auto value = solution.x(*ctx.opts.n, *ctx.opts.j);
        writer.row(residue_index(*ctx.opts.n, *ctx.opts.j), {value.to_string()}, value);
        return exit_ok;
    }

    std::map<std::int64_t, Rational> values;
    for (int j = 0; j < 4; ++j) {
        if (ctx.opts.j && *ctx.opts.j != j) continue;
        const auto top = block_limit(j, n_max);
        const auto cls = solution.residue_class(j, top);
        for (std::int64_t k = 0; k <= top; ++k) values.emplace(residue_index(k, j), cls[static_cast<std::size_t>(k)]);
    }
    for (const auto& [index, value] : values) writer.row(index, {value.to_string()}, value);
    return exit_ok;
}

struct TrialOutcome {
    std::string line;
    std::optional<std::string> counterexample;
    std::int64_t failing_index = 0;
};

CoefficientSpec perturb_first(const CoefficientSpec& spec) {
    auto values = spec.values();
    values.front() += Rational(1);
    switch (spec.kind()) {
        case CoefficientSpec::Kind::constant: return CoefficientSpec::constant(values.front());
        case CoefficientSpec::Kind::periodic: return CoefficientSpec::periodic(values);
        case CoefficientSpec::Kind::explicit_list: break;
    }
    return CoefficientSpec::explicit_list(values);
}

TrialOutcome run_trial(std::uint64_t seed, std::uint64_t trial, std::int64_t max_n, bool inject_fault) {
    constexpr int max_redraws = 1000;
    const std::int64_t last = 4 * max_n + 3;
    auto rng = SeededRng::for_trial(seed, trial);

    Instance inst;
    Trajectory traj;
    int redraws = 0;
    for (;; ++redraws) {
        if (redraws == max_redraws) throw Error("trial " + std::to_string(trial) + ": no admissible instance drawn");
        inst = random_instance(rng);
        if (!forbidden_check(inst.ic, inst.a, inst.b, max_n).empty()) continue;
        traj = iterate(inst.ic, inst.a, inst.b, last);
        if (!traj.singularity()) break;
    }

    const auto a_formula = inject_fault ? perturb_first(inst.a) : inst.a;
    GeneralSolution solution(inst.ic, a_formula, inst.b);

    // Smallest disagreeing index, with both sides rendered.
    std::optional<std::int64_t> bad_index;
    std::string bad_formula;
    auto consider = [&](std::int64_t index, const std::string& formula_text, bool equal) {
        if (!equal && (!bad_index || index < *bad_index)) {
            bad_index = index;
            bad_formula = formula_text;
        }
    };
    std::int64_t compared = 0;
    for (int j = 0; j < 4; ++j) {
        std::vector<Rational> cls;
        try {
            cls = solution.residue_class(j, block_limit(j, max_n));
        } catch (const Error&) {
            cls.clear();
        }
        for (std::int64_t k = 0; k <= block_limit(j, max_n); ++k) {
            const std::int64_t index = residue_index(k, j);
            ++compared;
            if (!cls.empty()) {
                const auto& value = cls[static_cast<std::size_t>(k)];
                consider(index, value.to_string(), value == traj.x(index));
                continue;
            }
            try {
                const auto value = solution.x(k, j);
                consider(index, value.to_string(), value == traj.x(index));
            } catch (const Error& e) {
                consider(index, std::string("error: ") + e.what(), false);
            }
        }
    }

    std::ostringstream line;
    line << "trial " << trial << ": " << (bad_index ? "MISMATCH" : "ok") << " seeds=" << seeds_text(inst.ic)
         << " a=" << spec_text(inst.a) << " b=" << spec_text(inst.b) << " redraws=" << redraws
         << " compared=" << compared;
    TrialOutcome outcome{line.str(), std::nullopt, 0};
    if (bad_index) {
        RunConfig replay{inst.ic, inst.a, inst.b, last, seed};
        std::ostringstream dump;
        dump << "counterexample (trial " << trial << ")\n"
             << "  index: " << *bad_index << '\n'
             << "  iteration: " << traj.x(*bad_index).to_string() << '\n'
             << "  closed form: " << bad_formula << '\n';
        if (inject_fault) dump << "  note: fault injected, closed form used a = " << spec_text(a_formula) << '\n';
        dump << "  config:\n" << serialize_config(replay) << '\n';
        outcome.counterexample = dump.str();
        outcome.failing_index = *bad_index;
    }
    return outcome;
}

int cmd_verify(const Context& ctx) {
    const auto trials = ctx.opts.trials;
    const std::int64_t max_n = ctx.opts.n.value_or(10);
    if (trials < 1) throw Exit{exit_usage, "--trials must be at least 1"};
    if (max_n < 0) throw Exit{exit_usage, "--n must be nonnegative"};
    const auto seed = ctx.seed();

    std::vector<std::optional<TrialOutcome>> outcomes(static_cast<std::size_t>(trials));
    std::vector<std::string> errors(static_cast<std::size_t>(trials));
    std::atomic<std::int64_t> next{0};
    auto worker = [&] {
        for (auto i = next++; i < trials; i = next++) {
            try {
                outcomes[static_cast<std::size_t>(i)] =
                    run_trial(seed, static_cast<std::uint64_t>(i), max_n, ctx.opts.inject_fault);
            } catch (const std::exception& e) {
                errors[static_cast<std::size_t>(i)] = e.what();
            }
        }
    };
    const auto hw = std::max(1u, std::thread::hardware_concurrency());
    const auto workers = static_cast<std::size_t>(std::min<std::int64_t>(trials, hw));
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& thread : pool) thread.join();

    std::int64_t passed = 0;
    const TrialOutcome* first_failure = nullptr;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        if (!outcomes[i]) throw Exit{exit_usage, errors[i]};
        ctx.out << outcomes[i]->line << '\n';
        if (outcomes[i]->counterexample) {
            if (!first_failure) first_failure = &*outcomes[i];
        } else {
            ++passed;
        }
    }
    ctx.out << "verify: " << passed << "/" << trials << " trials agree (seed " << seed << ", max_n " << max_n
            << ", indices -3.." << 4 * max_n + 3 << ")\n";
    if (first_failure) {
        ctx.out << *first_failure->counterexample;
        return exit_verification;
    }
    return exit_ok;
}

int cmd_invariants(const Context& ctx) {
    const auto& cfg = ctx.config;
    const auto traj = iterate(cfg.initial, cfg.a, cfg.b, ctx.steps_or(cfg.steps));
    const auto v = v_sequence(traj);
    auto writer = ctx.writer({"V_n"});
    for (std::size_t n = 0; n < v.size(); ++n) writer.row(static_cast<std::int64_t>(n), {v.entries[n].to_string()}, v.entries[n]);

    const auto size = static_cast<std::int64_t>(v.size());
    std::int64_t residuals = 0;
    std::int64_t closed = 0;
    int code = exit_ok;
    for (std::int64_t n = 0; n + 2 < size; ++n, ++residuals) {
        const auto r = v_recurrence_residual(v, cfg.a, cfg.b, n);
        if (!r.is_zero()) {
            ctx.err << "residual V_" << n + 2 << " - a_" << n << " V_" << n << " - b_" << n << " = " << r.to_string()
                    << '\n';
            code = exit_verification;
        }
    }
    if (size >= 2) {
        for (std::int64_t n = 0; n < size; ++n, ++closed) {
            const auto value = v_closed_form(v.at(0), v.at(1), cfg.a, cfg.b, n / 2, static_cast<int>(n % 2));
            if (value != v.at(n)) {
                ctx.err << "closed form V_" << n << " = " << value.to_string() << " differs from "
                        << v.at(n).to_string() << '\n';
                code = exit_verification;
            }
        }
    }
    ctx.err << "invariants: " << residuals << " recurrence residuals, " << closed << " closed-form values checked"
            << (code == exit_ok ? ", all exact" : "") << '\n';
    if (code == exit_ok && traj.singularity()) {
        ctx.err << "singularity at n=" << traj.singularity()->index << ": " << to_string(traj.singularity()->reason)
                << '\n';
        return exit_singular;
    }
    return code;
}

int cmd_symmetry(const Context& ctx) {
    if (!ctx.opts.pattern) throw Exit{exit_usage, "symmetry requires --pattern a,b,c,d"};
    const auto pattern = ExponentPattern::parse(*ctx.opts.pattern);
    const auto t = Rational::parse(ctx.opts.t);
    const auto& cfg = ctx.config;
    const auto report = verify_group_invariance(cfg.initial, cfg.a, cfg.b, pattern, t, ctx.steps_or(40));

    ctx.out << "pattern: " << pattern.to_string() << '\n'
            << "t: " << t.to_string() << '\n'
            << "window sum: " << pattern.sum() << '\n'
            << "classification: " << (report.accepted ? "accepted" : "rejected") << '\n'
            << "compared: x_" << report.first_index << " .. x_"
            << report.first_index + static_cast<std::int64_t>(report.residuals.size()) - 1 << '\n';
    if (report.first_failure) {
        const auto index = *report.first_failure;
        ctx.out << "first nonzero residual: x_" << index << " residual "
                << report.residuals[static_cast<std::size_t>(index - report.first_index)].to_string() << '\n';
    }
    if (report.incomparable_from) ctx.out << "incomparable from: x_" << *report.incomparable_from << '\n';
    ctx.out << "status: " << to_string(report.status) << '\n';

    switch (report.status) {
        case SymmetryStatus::invariant: return exit_ok;
        case SymmetryStatus::incomparable: return exit_singular;
        case SymmetryStatus::not_a_symmetry:
        case SymmetryStatus::violated: break;
    }
    return exit_verification;
}

std::optional<std::pair<int, int>> parse_variant(std::string text) {
    // Accept the typographic minus sign as well.
    for (std::size_t pos; (pos = text.find("\xE2\x88\x92")) != std::string::npos;) text.replace(pos, 3, "-");
    static const std::map<std::string, std::pair<int, int>> table = {
        {"++", {1, 1}},  {"+-", {1, -1}}, {"-+", {-1, 1}}, {"--", {-1, -1}},
        {"pp", {1, 1}},  {"pm", {1, -1}}, {"mp", {-1, 1}}, {"mm", {-1, -1}},
    };
    const auto it = table.find(text);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

int cmd_preset(const Context& ctx) {
    const std::string text = !ctx.opts.variant.empty() ? ctx.opts.variant : ctx.opts.variant_positional;
    if (text.empty()) throw Exit{exit_usage, "preset requires --variant ++|+-|-+|--"};
    const auto variant = parse_variant(text);
    if (!variant) throw Exit{exit_usage, "unknown variant '" + text + "' (expected ++, +-, -+ or --)"};

    const Rational a(variant->first);
    const Rational b(variant->second);
    const auto& ic = ctx.config.initial;
    const auto steps = ctx.steps_or(20);
    const auto traj = iterate(ic, CoefficientSpec::constant(a), CoefficientSpec::constant(b), steps);

    auto writer = ctx.writer({"x_n", "closed_form"});
    int code = exit_ok;
    for (std::int64_t index = 1; index <= traj.last_index(); ++index) {
        const auto [n, j] = residue_of(index);
        const auto formula = x_const_coeff(ic, a, b, n, j);
        const auto& iterated = traj.x(index);
        writer.row(index, {iterated.to_string(), formula.to_string()}, iterated);
        if (formula != iterated) {
            ctx.err << "disagreement at x_" << index << ": iteration " << iterated.to_string() << ", closed form "
                    << formula.to_string() << '\n';
            code = exit_verification;
        }
    }
    if (traj.singularity()) {
        writer.singular(*traj.singularity());
        ctx.err << "singularity at n=" << traj.singularity()->index << ": " << to_string(traj.singularity()->reason)
                << '\n';
        if (code == exit_ok) code = exit_singular;
    }
    return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opts;
    CLI::App app{"Exact-arithmetic laboratory for a fifth-order rational difference equation", "rde-lab"};
    app.add_option("command", opts.command, "iterate | closed-form | verify | invariants | symmetry | preset")
        ->required()
        ->check(CLI::IsMember({"iterate", "closed-form", "verify", "invariants", "symmetry", "preset"}));
    app.add_option("preset-variant", opts.variant_positional, "preset: variant given positionally (same as --variant)");
    app.add_option("--config", opts.config_path, "JSON run configuration");
    app.add_option("--steps", opts.steps, "number of steps to iterate")->check(CLI::PositiveNumber);
    app.add_option("--n", opts.n, "closed-form block index (verify: largest n compared)");
    app.add_option("--j", opts.j, "residue class 0..3")->check(CLI::Range(0, 3));
    app.add_option("--pattern", opts.pattern, "exponent pattern p0,p1,p2,p3");
    app.add_option("--t", opts.t, "scaling parameter p/q (default 2)");
    app.add_option("--trials", opts.trials, "verify: number of random trials (default 100)");
    app.add_option("--seed", opts.seed, "seed for randomized campaigns");
    app.add_option("--format", opts.format, "csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}));
    app.add_option("--float-digits", opts.float_digits, "decimal places of the approx column (default 12)")
        ->check(CLI::Range(0, 10000));
    app.add_option("--output", opts.output, "write data to FILE instead of stdout");
    app.add_option("--variant", opts.variant, "preset: ++, +-, -+ or -- (a = +-1, b = +-1)");
    app.add_flag("--inject-fault", opts.inject_fault)->group("");

    std::vector<std::string> argv_storage{"rde-lab"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << "run 'rde-lab --help' for usage\n";
        return exit_usage;
    }

    std::ofstream file;
    if (!opts.output.empty()) {
        file.open(opts.output);
        if (!file) {
            err << "error: cannot write '" << opts.output << "'\n";
            return exit_usage;
        }
    }
    std::ostream& sink = opts.output.empty() ? out : file;

    try {
        const bool has_file = !opts.config_path.empty();
        Context ctx{opts, has_file ? load_config(opts.config_path) : default_config(), has_file, sink, err};
        if (opts.command == "iterate") return cmd_iterate(ctx);
        if (opts.command == "closed-form") return cmd_closed_form(ctx);
        if (opts.command == "verify") return cmd_verify(ctx);
        if (opts.command == "invariants") return cmd_invariants(ctx);
        if (opts.command == "symmetry") return cmd_symmetry(ctx);
        return cmd_preset(ctx);
    } catch (const Exit& e) {
        err << "error: " << e.message << '\n';
        return e.code;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const IndexBeyondExplicitData& e) {
        err << "error: " << e.what() << " (explicit coefficient list too short)\n";
        return exit_usage;
    } catch (const DegenerateScale& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_singular;
    }
}

}  // namespace rdelab::cli
