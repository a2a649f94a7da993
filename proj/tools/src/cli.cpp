#include "necksplit/cli.hpp"

#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "necksplit/geometry.hpp"
#include "necksplit/io.hpp"
#include "necksplit/split.hpp"
#include "necksplit/svg.hpp"
#include "necksplit/verify.hpp"

namespace necksplit::cli {

namespace {

struct Flags {
    std::string curve;
    std::string problem;
    std::string result;
    std::string colors;
    std::string shape;
    std::string window;
    std::string svg;
    std::string out;
    std::optional<int> r;
    std::optional<double> tol;
    std::uint64_t seed = 0;
    int starts = SolverOptions{}.starts;
    int max_iterations = SolverOptions{}.max_iterations;
    unsigned threads = 1;
    bool factored = false;
};

SolverOptions solver_options(const Flags& f) {
    SolverOptions o;
    o.seed = f.seed;
    o.starts = f.starts;
    o.max_iterations = f.max_iterations;
    o.threads = f.threads;
    return o;
}

std::optional<Window> parse_window(const std::string& text) {
    if (text.empty()) return std::nullopt;
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw InputError("--window expects X,Y");
    Window w;
    try {
        w.x = std::stod(text.substr(0, comma));
        w.y = std::stod(text.substr(comma + 1));
    } catch (const std::exception&) {
        throw InputError("--window expects two reals X,Y");
    }
    if (!(w.x >= 0.0 && w.x < w.y && w.y <= 1.0)) throw DomainError("--window needs 0 <= X < Y <= 1");
    return w;
}

std::shared_ptr<const Curve> load_curve(const Flags& f, std::ostream* warn = nullptr) {
    if (f.curve.empty()) throw InputError("--curve is required");
    auto curve = std::make_shared<const Curve>(curve_from_json(read_json_file(f.curve)));
    if (warn && has_self_intersection(*curve)) *warn << "necksplit: warning: curve intersects itself\n";
    return curve;
}

void emit(const Flags& f, const std::string& text, std::ostream& out) {
    if (f.out.empty()) {
        out << text;
    } else {
        write_text_file(f.out, text);
    }
}

int report_nonconvergence(const Flags& f, const NonConvergence& e, std::ostream& out, std::ostream& err) {
    const SplitResult& best = e.best();
    nlohmann::json doc = split_to_json(best.config, best.report);
    doc["converged"] = false;
    emit(f, dump_json(doc), out);
    err << "necksplit: " << e.what() << " (best max deviation " << best.report.max_abs_deviation << ")\n";
    return kNonConvergence;
}

int cmd_split_necklace(const Flags& f, std::ostream& out) {
    if (f.problem.empty()) throw InputError("--problem is required");
    ProblemFile file = problem_from_json(read_json_file(f.problem));
    SplitProblem& problem = file.problem;
    if (f.r) problem.parts = *f.r;
    if (!f.colors.empty()) problem.colors = colors_from_json(read_json_file(f.colors));
    if (f.tol) problem.tolerance = *f.tol;
    problem.validate();

    SplitResult result;
    if (f.factored && !problem.colors && !problem.cuts) {
        result = solve_split_factored(problem.features, problem.parts, problem.effective_tolerance(), solver_options(f));
    } else {
        result = solve_split(problem, solver_options(f));
    }
    emit(f, dump_json(split_to_json(result.config, result.report)), out);
    return kOk;
}

int cmd_split_loop(const Flags& f, std::ostream& out, std::ostream& err) {
    const auto curve = load_curve(f, &err);
    if (!f.r) throw InputError("--r is required");
    const double tol = f.tol.value_or(kAnalyticTolerance);
    const LoopSplit split = f.colors.empty()
                                ? split_loop(curve, *f.r, tol, solver_options(f))
                                : split_loop_colored(curve, *f.r, colors_from_json(read_json_file(f.colors)), tol,
                                                     solver_options(f));
    emit(f, dump_json(loop_split_to_json(split)), out);
    if (!f.svg.empty()) write_text_file(f.svg, svg_loop_split(*curve, split));
    return kOk;
}

int cmd_inscribe(const Flags& f, std::ostream& out, std::ostream& err) {
    const auto curve = load_curve(f, &err);
    const auto window = parse_window(f.window);
    const double tol = f.tol.value_or(kAnalyticTolerance);
    const std::string shape = f.shape.empty() ? "parallelogram" : f.shape;
    InscribedQuadrilateral quad;
    if (shape == "parallelogram") {
        quad = find_parallelogram(curve, window.value_or(Window{}), tol, solver_options(f));
    } else if (shape == "rectangle") {
        quad = find_rectangle(curve, window.value_or(Window{}), tol, solver_options(f));
    } else if (shape == "balanced-rectangle") {
        quad = find_balanced_rectangle(curve, tol, solver_options(f));
    } else {
        throw InputError("unknown --shape " + shape);
    }
    emit(f, dump_json(quadrilateral_to_json(quad)), out);
    if (!f.svg.empty()) write_text_file(f.svg, svg_quadrilateral(*curve, quad));
    return kOk;
}

int cmd_verify(const Flags& f, std::ostream& out) {
    if (f.result.empty()) throw InputError("--result is required");
    const nlohmann::json doc = read_json_file(f.result);
    VerificationReport report;

    if (!f.problem.empty()) {
        const ProblemFile file = problem_from_json(read_json_file(f.problem));
        SplitProblem problem = file.problem;
        if (f.r) problem.parts = *f.r;
        const SplitConfiguration config = split_from_json(doc);
        if (static_cast<int>(config.cuts.size()) != problem.cut_count() || config.parts != problem.parts) {
            throw ContractError("result does not match the problem's cut or part count");
        }
        report = check_split(problem.features, config, f.tol.value_or(problem.effective_tolerance()));
        if (problem.colors) {
            problem.colors->validate(config.labels.size(), problem.parts);
            report.add_flag("rainbow", problem.colors->admits(config.labels));
        }
    } else {
        const auto curve = load_curve(f);
        const double tol = f.tol.value_or(kAnalyticTolerance);
        if (doc.contains("groups")) {
            const LoopSplit split = loop_split_from_json(doc);
            if (f.r && static_cast<int>(split.groups.size()) != *f.r) {
                throw ContractError("result has a different number of groups than --r");
            }
            report = check_loop_split(*curve, split, tol);
        } else if (doc.contains("t")) {
            const InscribedQuadrilateral quad = quadrilateral_from_json(doc);
            if (quad.vertices[0].size() != curve->dimension()) {
                throw ContractError("vertex dimension does not match the curve");
            }
            const bool rectangle = f.shape.empty() ? quad.rectangle : f.shape != "parallelogram";
            report = check_quadrilateral(*curve, quad, tol, rectangle, parse_window(f.window));
        } else {
            throw InputError("result is neither a loop split nor a quadrilateral");
        }
    }
    emit(f, dump_json(report_to_json(report)), out);
    return report.passed() ? kOk : kVerificationFailed;
}

void add_solver_flags(CLI::App* cmd, Flags& f) {
    cmd->add_option("--tol", f.tol, "Residual tolerance");
    cmd->add_option("--seed", f.seed, "Seed for the multi-start generator");
    cmd->add_option("--starts", f.starts, "Starts per labeling")->check(CLI::PositiveNumber);
    cmd->add_option("--max-iter", f.max_iterations, "Iteration budget per start")->check(CLI::PositiveNumber);
    cmd->add_option("--threads", f.threads, "Worker threads (0 = hardware concurrency)");
    cmd->add_option("--out", f.out, "Output file (stdout when absent)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fair splitting of necklaces and loops, inscribed quadrilaterals"};
    app.name("necksplit");
    app.require_subcommand(1);
    Flags f;

    auto* necklace = app.add_subcommand("split-necklace", "Split [0,1] fairly among r parts");
    necklace->add_option("--problem", f.problem, "Problem file")->required();
    necklace->add_option("--r", f.r, "Override the number of parts");
    necklace->add_option("--colors", f.colors, "Color blocks file (1-based intervals)");
    necklace->add_flag("--factored", f.factored, "Compose over the prime factors of r");
    add_solver_flags(necklace, f);

    auto* loop = app.add_subcommand("split-loop", "Cut a closed curve into r closed loops of equal length");
    loop->add_option("--curve", f.curve, "Curve file")->required();
    loop->add_option("--r", f.r, "Number of loops")->required();
    loop->add_option("--colors", f.colors, "Color blocks file (1-based pieces)");
    loop->add_option("--svg", f.svg, "SVG plot of the split");
    add_solver_flags(loop, f);

    auto* inscribe = app.add_subcommand("inscribe", "Find an inscribed parallelogram or rectangle");
    inscribe->add_option("--curve", f.curve, "Curve file")->required();
    inscribe->add_option("--shape", f.shape, "parallelogram, rectangle or balanced-rectangle");
    inscribe->add_option("--window", f.window, "Parameter window X,Y");
    inscribe->add_option("--svg", f.svg, "SVG plot of the quadrilateral");
    add_solver_flags(inscribe, f);

    auto* verify = app.add_subcommand("verify", "Check a result independently of the solver");
    verify->add_option("--result", f.result, "Result file to check")->required();
    verify->add_option("--problem", f.problem, "Problem file (necklace results)");
    verify->add_option("--curve", f.curve, "Curve file (loop and quadrilateral results)");
    verify->add_option("--r", f.r, "Expected number of parts");
    verify->add_option("--shape", f.shape, "Shape to check quadrilaterals against");
    verify->add_option("--window", f.window, "Window a vertex must hit");
    verify->add_option("--tol", f.tol, "Residual tolerance");
    verify->add_option("--out", f.out, "Report file (stdout when absent)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (necklace->parsed()) return cmd_split_necklace(f, out);
        if (loop->parsed()) return cmd_split_loop(f, out, err);
        if (inscribe->parsed()) return cmd_inscribe(f, out, err);
        return cmd_verify(f, out);
    } catch (const NonConvergence& e) {
        return report_nonconvergence(f, e, out, err);
    } catch (const Error& e) {
        err << "necksplit: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        err << "necksplit: " << e.what() << '\n';
        return kInputError;
    }
}

}  // namespace necksplit::cli
