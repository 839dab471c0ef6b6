#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tjurina/corpus.hpp"
#include "tjurina/errors.hpp"
#include "tjurina/invariants.hpp"
#include "tjurina/oracle.hpp"
#include "tjurina/parse.hpp"
#include "tjurina/report.hpp"

namespace {

using namespace tjurina;

// Documented exit-code contract (also in the README):
//   0 success, 1 usage error, 2 ParseError, 3 NotHomogeneous, 4 ConeInput,
//   5 NonIsolatedOrBug / NoStabilization, 6 internal assertion or bound
//   violation, 7 other input errors (bad point, wrong dimension, ...).
int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError: return 2;
        case ErrorCode::NotHomogeneous: return 3;
        case ErrorCode::ConeInput: return 4;
        case ErrorCode::NonIsolatedOrBug:
        case ErrorCode::NoStabilization: return 5;
        case ErrorCode::Internal:
        case ErrorCode::BoundViolation: return 6;
        default: return 7;
    }
}

struct CommonOpts {
    std::string expr;
    std::string file;
    int nvars = 0;
    int cap = -1;
    std::string field = "exact";
    std::string format = "table";
    std::string checks = "all";
    bool timings = false;
};

void attach_input_options(CLI::App* cmd, CommonOpts& opts, bool with_cap = true) {
    cmd->add_option("poly", opts.expr, "polynomial expression, e.g. \"x0^5 + x1^4*x2\"");
    cmd->add_option("-f,--file", opts.file, "read the polynomial expression from a file (one expression, UTF-8)");
    cmd->add_option("--nvars", opts.nvars, "number of variables (default: 1 + largest index used)");
    cmd->add_option("--field", opts.field, "exact | fast (fast = modular prefilter with exact confirmation)");
    cmd->add_option("--format", opts.format, "table | structured (structured = fixed-key JSON)");
    if (with_cap) cmd->add_option("--cap", opts.cap, "graded-dims cap (default n(d-2)+1, must be >= n(d-2))");
}

LinOptions lin_options(const CommonOpts& opts) {
    LinOptions lin;
    if (opts.field == "exact") {
        lin.mode = FieldMode::Exact;
    } else if (opts.field == "fast") {
        lin.mode = FieldMode::FastConfirm;
    } else {
        fail(ErrorCode::BadInput, "--field must be 'exact' or 'fast'");
    }
    return lin;
}

RenderOptions render_options(const CommonOpts& opts) {
    RenderOptions render;
    if (opts.format == "table") {
        render.format = OutputFormat::Table;
    } else if (opts.format == "structured") {
        render.format = OutputFormat::Structured;
    } else {
        fail(ErrorCode::BadInput, "--format must be 'table' or 'structured'");
    }
    render.include_timings = opts.timings;
    render.checks = opts.checks;
    return render;
}

HomogeneousPoly load_poly(const CommonOpts& opts) {
    std::string text = opts.expr;
    if (!opts.file.empty()) {
        if (!text.empty()) fail(ErrorCode::BadInput, "give either an inline expression or --file, not both");
        std::ifstream in(opts.file);
        if (!in) fail(ErrorCode::BadInput, "cannot open " + opts.file);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
        while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    }
    if (text.empty()) fail(ErrorCode::BadInput, "no polynomial given (positional expression or --file)");
    std::optional<int> nvars;
    if (opts.nvars > 0) nvars = opts.nvars;
    return parse_poly(text, nvars);
}

int run_corpus(const std::string& which, const CommonOpts& opts) {
    bool all_ok = true;
    auto check = [&](const std::string& inst, const std::string& what, bool ok, const std::string& detail = "") {
        std::cout << (ok ? "[ OK ] " : "[FAIL] ") << inst << ": " << what;
        if (!detail.empty()) std::cout << " (" << detail << ")";
        std::cout << "\n";
        all_ok = all_ok && ok;
    };
    LinOptions lin = lin_options(opts);

    for (const CorpusInstance& inst : corpus()) {
        if (!which.empty() && inst.name != which) continue;
        try {
            HomogeneousPoly f = parse_poly(inst.expression);
            ReportOptions ropt;
            ropt.lin = lin;
            InvariantsReport report = full_report(f, ropt);
            check(inst.name, "report", true);
            check(inst.name, "tau matches curated local data", report.tau == inst.expected_tau(),
                  "tau=" + std::to_string(report.tau) + " expected=" + std::to_string(inst.expected_tau()));
            for (const auto& coords : inst.singular_points) {
                SingularPoint::certify(f, coords);
            }
            if (!inst.singular_points.empty()) check(inst.name, "singular points certified", true);

            if (inst.all_nodes) {
                JacobianSyzygies calc(f, lin);
                NodalConfiguration config{inst.singular_points};
                const int top = calc.stabilization_degree();
                bool dual = true;
                for (int k = 0; k <= top - 1; ++k) {
                    dual = dual && (calc.er_dim(k) == nodal_defect(config, top - 1 - k, lin));
                }
                check(inst.name, "ER/defect duality vs point-evaluation oracle", dual);
            }
            if (inst.suspension_of) {
                const CorpusInstance* parent = corpus_find(*inst.suspension_of);
                if (parent) {
                    JacobianSyzygies calc(f, lin);
                    JacobianSyzygies parent_calc(parse_poly(parent->expression), lin);
                    check(inst.name, "suspension preserves mdr",
                          calc.mdr().value == parent_calc.mdr().value);
                }
            }
            if (report.mder_gap) {
                check(inst.name, "mder exceeds n(d-2) - tau", report.mder_gap->holds);
            }
        } catch (const Error& e) {
            check(inst.name, std::string("error [") + error_code_name(e.code()) + "]", false, e.what());
        }
    }
    return all_ok ? 0 : 6;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graded Jacobian-syzygy invariants, Tjurina numbers and versality checks for projective hypersurfaces with isolated singularities"};
    app.require_subcommand(1);

    CommonOpts opts;
    int arg_a = -1;
    std::string point_text;
    std::string corpus_name;

    CLI::App* report_cmd = app.add_subcommand("report", "full invariants report");
    attach_input_options(report_cmd, opts);
    report_cmd->add_option("--checks", opts.checks, "all | comma list of verdicts to print");
    report_cmd->add_flag("--timings", opts.timings, "include wall-clock stage timings in the output");

    CLI::App* dims_cmd = app.add_subcommand("dims", "graded dimensions of AR/KR/ER");
    attach_input_options(dims_cmd, opts);

    CLI::App* witness_cmd = app.add_subcommand("witness", "topological versality witness at a singular point");
    attach_input_options(witness_cmd, opts, false);
    witness_cmd->add_option("--a", arg_a, "degree a with dim ER_a = 1")->required();
    witness_cmd->add_option("--point", point_text, "singular point, exact rationals 'a,b,...'")->required();

    CLI::App* versality_cmd = app.add_subcommand("versality", "a-versality verdict");
    attach_input_options(versality_cmd, opts, false);
    versality_cmd->add_option("--a", arg_a, "deformation degree parameter a")->required();

    CLI::App* bounds_cmd = app.add_subcommand("bounds", "du Plessis-Wall bounds on tau");
    attach_input_options(bounds_cmd, opts, false);

    CLI::App* free_cmd = app.add_subcommand("free", "freeness of a plane curve");
    attach_input_options(free_cmd, opts, false);

    CLI::App* stability_cmd = app.add_subcommand("stability", "stability hypothesis for surfaces in P^3");
    attach_input_options(stability_cmd, opts, false);

    CLI::App* torelli_cmd = app.add_subcommand("torelli", "Torelli-type hypothesis for degree >= 4");
    attach_input_options(torelli_cmd, opts, false);

    CLI::App* corpus_cmd = app.add_subcommand("corpus", "built-in instances");
    CLI::App* corpus_list = corpus_cmd->add_subcommand("list", "list instance names");
    CLI::App* corpus_run = corpus_cmd->add_subcommand("run", "run the invariant suite on the corpus");
    corpus_run->add_option("name", corpus_name, "run a single named instance");
    corpus_run->add_option("--field", opts.field, "exact | fast");
    corpus_cmd->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (corpus_list->parsed()) {
            for (const CorpusInstance& inst : corpus()) {
                std::cout << inst.name << "  " << inst.expression << "  (" << inst.description << ")\n";
            }
            return 0;
        }
        if (corpus_run->parsed()) return run_corpus(corpus_name, opts);

        RenderOptions render = render_options(opts);
        LinOptions lin = lin_options(opts);
        HomogeneousPoly f = load_poly(opts);

        if (report_cmd->parsed()) {
            ReportOptions ropt;
            ropt.lin = lin;
            if (opts.cap >= 0) ropt.cap = opts.cap;
            std::cout << render_report(full_report(f, ropt), render);
            return 0;
        }
        if (dims_cmd->parsed()) {
            JacobianSyzygies calc(f, lin);
            int cap = opts.cap >= 0 ? opts.cap : calc.stabilization_degree() + 1;
            std::cout << render_dims(calc.graded_dims(cap), render);
            return 0;
        }
        if (witness_cmd->parsed()) {
            JacobianSyzygies calc(f, lin);
            SingularPoint p = SingularPoint::certify(f, parse_point(point_text));
            WitnessVerdict v = topological_versality_witness(calc, arg_a, p);
            std::cout << render_witness(v, arg_a, render);
            return 0;
        }
        if (versality_cmd->parsed()) {
            JacobianSyzygies calc(f, lin);
            std::cout << render_versality(versality_report(calc, arg_a), render);
            return 0;
        }
        if (bounds_cmd->parsed()) {
            JacobianSyzygies calc(f, lin);
            std::cout << render_bounds(dpw_bounds(calc, global_tjurina(calc).tau), render);
            return 0;
        }
        if (free_cmd->parsed()) {
            JacobianSyzygies calc(f, lin);
            std::cout << render_freeness(is_free_curve(calc, global_tjurina(calc).tau), render);
            return 0;
        }
        if (stability_cmd->parsed()) {
            JacobianSyzygies calc(f, lin);
            std::cout << render_stability(stability_hypothesis(calc, global_tjurina(calc).tau), render);
            return 0;
        }
        if (torelli_cmd->parsed()) {
            JacobianSyzygies calc(f, lin);
            std::cout << render_torelli(torelli_hypothesis(calc, global_tjurina(calc).tau), render);
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error [Internal]: " << e.what() << "\n";
        return 6;
    }
    return 1;
}
