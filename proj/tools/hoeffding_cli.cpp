// Command-line surface: tail bounds, per-variable bound certification,
// Monte Carlo simulation, inversion, and improved-vs-original comparison.
// All output is CSV with headers; exit codes are 0 (success / pass),
// 1 (internal numeric error or failed certification), 2 (usage error).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hoeffding/distribution.hpp"
#include "hoeffding/io.hpp"
#include "hoeffding/tail_bounds.hpp"
#include "hoeffding/verify.hpp"

namespace {

using namespace hoeffding;

constexpr std::uint64_t kDefaultSeed = 0x5EED;

// Output sink: stdout unless --out was given.
class OutputFile {
  public:
    explicit OutputFile(const std::string& path) {
        if (!path.empty()) {
            file_.emplace(path);
            if (!*file_) {
                throw std::invalid_argument("cannot open output file \"" + path + "\"");
            }
        }
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

  private:
    std::optional<std::ofstream> file_;
};

std::vector<MgfBoundKind> requested_kinds(const std::string& kind) {
    if (kind == "both") return {MgfBoundKind::Improved, MgfBoundKind::Original};
    return {parse_kind(kind)};
}

std::vector<Sidedness> requested_sides(const std::string& sided) {
    if (sided == "both") return {Sidedness::One, Sidedness::Two};
    return {parse_sidedness(sided)};
}

struct BoundOptions {
    std::string intervals;
    double a = 0.0;
    double b = 0.0;
    std::int64_t n = 0;
    double t = 0.0;
    std::string form = "sum";
    std::string sided = "one";
    std::string kind = "improved";
    std::string out;
};

int run_bound(const BoundOptions& opt) {
    MixedScales scales;
    if (!opt.intervals.empty()) {
        if (opt.n != 0) {
            throw std::invalid_argument("--n applies only to the --a/--b form");
        }
        scales = mixed_scales(IntervalSet(read_interval_csv_file(opt.intervals)));
    } else if (opt.n > 0) {
        scales = iid_scales(Interval(opt.a, opt.b), opt.n);
    } else {
        throw std::invalid_argument("provide --intervals FILE, or --a/--b with --n");
    }
    const DeviationForm form = parse_form(opt.form);
    OutputFile out(opt.out);
    write_report_header(out.stream());
    for (Sidedness side : requested_sides(opt.sided)) {
        for (MgfBoundKind kind : requested_kinds(opt.kind)) {
            const TailBoundReport report = side == Sidedness::One
                                               ? one_sided_bound(scales, opt.t, form, kind)
                                               : two_sided_bound(scales, opt.t, form);
            write_report_row(out.stream(), report, kind);
        }
    }
    return 0;
}

struct LemmaOptions {
    double a = 0.0;
    double b = 0.0;
    double s_max = 10.0;
    std::size_t s_steps = 200;
    std::string out;
};

int run_lemma(const LemmaOptions& opt) {
    const LemmaReport report = verify_lemma(Interval(opt.a, opt.b), opt.s_max, opt.s_steps);
    OutputFile out(opt.out);
    write_lemma_report(out.stream(), report);
    if (!report.pass) {
        std::cerr << "bound violated: min margin " << format_double(report.min_margin) << "\n";
        return 1;
    }
    return 0;
}

struct SimulateOptions {
    std::string intervals;
    double t = 0.0;
    std::string form = "sum";
    std::uint64_t reps = 100000;
    std::uint64_t seed = kDefaultSeed;
    std::string dist = "two-point";
    std::string out;
};

DiscreteDistribution make_distribution(const Interval& iv, const std::string& spec) {
    if (spec == "two-point") {
        return extremal_two_point(iv);
    }
    const std::string prefix = "mixture:";
    if (spec.rfind(prefix, 0) == 0) {
        std::size_t used = 0;
        double c = 0.0;
        try {
            c = std::stod(spec.substr(prefix.size()), &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid mixture coefficient in \"" + spec + "\"");
        }
        if (used != spec.size() - prefix.size()) {
            throw std::invalid_argument("invalid mixture coefficient in \"" + spec + "\"");
        }
        return zero_mean_mixture(iv, c);
    }
    throw std::invalid_argument("dist must be \"two-point\" or \"mixture:<c>\", got \"" + spec +
                                "\"");
}

int run_simulate(const SimulateOptions& opt) {
    const IntervalSet set(read_interval_csv_file(opt.intervals));
    std::vector<DiscreteDistribution> dists;
    dists.reserve(set.size());
    for (const Interval& iv : set) {
        dists.push_back(make_distribution(iv, opt.dist));
    }
    const DeviationForm form = parse_form(opt.form);
    const TailEstimate estimate = empirical_tail(set, dists, opt.t, form, opt.reps, opt.seed);
    const TailBoundReport report = one_sided_bound(set, opt.t, form, MgfBoundKind::Improved);
    const bool pass = estimate.ci_upper_99 <= report.bound_improved;
    OutputFile out(opt.out);
    write_tail_comparison(out.stream(), estimate, report.bound_improved, pass);
    return pass ? 0 : 1;
}

struct InvertOptions {
    std::string intervals;
    double a = 0.0;
    double b = 0.0;
    bool have_endpoints = false;
    double t = 0.0;
    double delta = 0.0;
    std::string sided = "one";
    std::string kind = "improved";
    std::string out;
};

int run_invert(const InvertOptions& opt) {
    const MgfBoundKind kind = parse_kind(opt.kind);
    OutputFile out(opt.out);
    if (!opt.intervals.empty()) {
        const IntervalSet set(read_interval_csv_file(opt.intervals));
        const Sidedness sided = parse_sidedness(opt.sided);
        const double t = invert_for_t(set, opt.delta, sided, kind);
        out.stream() << "delta,sidedness,kind,t\n"
                     << format_double(opt.delta) << ',' << to_string(sided) << ','
                     << to_string(kind) << ',' << format_double(t) << '\n';
        return 0;
    }
    if (!opt.have_endpoints) {
        throw std::invalid_argument("provide --intervals FILE, or --a/--b with --t");
    }
    const Interval iv(opt.a, opt.b);
    const std::int64_t n = invert_for_n(iv, opt.t, opt.delta, kind);
    out.stream() << "a,b,t,delta,kind,n\n"
                 << format_double(opt.a) << ',' << format_double(opt.b) << ','
                 << format_double(opt.t) << ',' << format_double(opt.delta) << ','
                 << to_string(kind) << ',' << n << '\n';
    return 0;
}

struct CompareOptions {
    std::string intervals;
    std::string t_grid;
    std::string form = "sum";
    std::string out;
};

std::vector<double> parse_grid(const std::string& spec) {
    const auto c1 = spec.find(':');
    const auto c2 = c1 == std::string::npos ? std::string::npos : spec.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos ||
        spec.find(':', c2 + 1) != std::string::npos) {
        throw std::invalid_argument("t-grid must be start:stop:steps");
    }
    double start = 0.0, stop = 0.0;
    long steps = 0;
    try {
        std::size_t u1 = 0, u2 = 0, u3 = 0;
        const std::string f1 = spec.substr(0, c1);
        const std::string f2 = spec.substr(c1 + 1, c2 - c1 - 1);
        const std::string f3 = spec.substr(c2 + 1);
        start = std::stod(f1, &u1);
        stop = std::stod(f2, &u2);
        steps = std::stol(f3, &u3);
        if (u1 != f1.size() || u2 != f2.size() || u3 != f3.size()) {
            throw std::invalid_argument("");
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("t-grid must be start:stop:steps with numeric fields");
    }
    if (!(start > 0.0) || stop < start || steps < 1) {
        throw std::invalid_argument("t-grid needs 0 < start <= stop and steps >= 1");
    }
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(steps));
    for (long i = 0; i < steps; ++i) {
        grid.push_back(steps == 1 ? start
                                  : start + (stop - start) * static_cast<double>(i) /
                                                static_cast<double>(steps - 1));
    }
    return grid;
}

int run_compare(const CompareOptions& opt) {
    const IntervalSet set(read_interval_csv_file(opt.intervals));
    const DeviationForm form = parse_form(opt.form);
    const std::vector<double> grid = parse_grid(opt.t_grid);
    OutputFile out(opt.out);
    out.stream() << "t,bound_improved,bound_original,ratio\n";
    for (double t : grid) {
        const TailBoundReport r = one_sided_bound(set, t, form, MgfBoundKind::Improved);
        const double ratio = std::exp(r.log_bound_improved - r.log_bound_original);
        out.stream() << format_double(t) << ',' << format_double(r.bound_improved) << ','
                     << format_double(r.bound_original) << ',' << format_double(ratio) << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tail bounds for sums of independent bounded zero-mean random variables"};
    app.require_subcommand(1);

    BoundOptions bound_opt;
    CLI::App* bound = app.add_subcommand("bound", "One- or two-sided tail bound report");
    bound->add_option("--intervals", bound_opt.intervals, "interval-list CSV file");
    bound->add_option("--a", bound_opt.a, "lower endpoint (iid form)");
    bound->add_option("--b", bound_opt.b, "upper endpoint (iid form)");
    bound->add_option("--n", bound_opt.n, "number of iid copies (iid form)");
    bound->add_option("--t", bound_opt.t, "deviation threshold")->required();
    bound->add_option("--form", bound_opt.form, "sum|mean");
    bound->add_option("--sided", bound_opt.sided, "one|two|both");
    bound->add_option("--kind", bound_opt.kind, "improved|original|both");
    bound->add_option("--out", bound_opt.out, "output file (default stdout)");

    LemmaOptions lemma_opt;
    CLI::App* lemma = app.add_subcommand("lemma", "Certify the per-variable MGF bound");
    lemma->add_option("--a", lemma_opt.a, "lower endpoint")->required();
    lemma->add_option("--b", lemma_opt.b, "upper endpoint")->required();
    lemma->add_option("--s-max", lemma_opt.s_max, "largest Chernoff parameter");
    lemma->add_option("--s-steps", lemma_opt.s_steps, "grid size");
    lemma->add_option("--out", lemma_opt.out, "output file (default stdout)");

    SimulateOptions sim_opt;
    CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo tail vs. the bound");
    simulate->add_option("--intervals", sim_opt.intervals, "interval-list CSV file")->required();
    simulate->add_option("--t", sim_opt.t, "deviation threshold")->required();
    simulate->add_option("--form", sim_opt.form, "sum|mean");
    simulate->add_option("--reps", sim_opt.reps, "Monte Carlo replications");
    simulate->add_option("--seed", sim_opt.seed, "base seed");
    simulate->add_option("--dist", sim_opt.dist, "two-point|mixture:<c>");
    simulate->add_option("--out", sim_opt.out, "output file (default stdout)");

    InvertOptions inv_opt;
    CLI::App* invert = app.add_subcommand("invert", "Solve the bound for n or for t");
    invert->add_option("--intervals", inv_opt.intervals, "interval-list CSV (t inversion)");
    CLI::Option* inv_a = invert->add_option("--a", inv_opt.a, "lower endpoint (n inversion)");
    invert->add_option("--b", inv_opt.b, "upper endpoint (n inversion)")->needs(inv_a);
    invert->add_option("--t", inv_opt.t, "mean-form deviation (n inversion)");
    invert->add_option("--delta", inv_opt.delta, "target tail probability")->required();
    invert->add_option("--sided", inv_opt.sided, "one|two (t inversion)");
    invert->add_option("--kind", inv_opt.kind, "improved|original");
    invert->add_option("--out", inv_opt.out, "output file (default stdout)");

    CompareOptions cmp_opt;
    CLI::App* compare = app.add_subcommand("compare", "Improved vs. original across a t-grid");
    compare->add_option("--intervals", cmp_opt.intervals, "interval-list CSV file")->required();
    compare->add_option("--t-grid", cmp_opt.t_grid, "start:stop:steps")->required();
    compare->add_option("--form", cmp_opt.form, "sum|mean");
    compare->add_option("--out", cmp_opt.out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    inv_opt.have_endpoints = invert->count("--a") > 0 && invert->count("--b") > 0;

    try {
        if (bound->parsed()) return run_bound(bound_opt);
        if (lemma->parsed()) return run_lemma(lemma_opt);
        if (simulate->parsed()) return run_simulate(sim_opt);
        if (invert->parsed()) return run_invert(inv_opt);
        return run_compare(cmp_opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
