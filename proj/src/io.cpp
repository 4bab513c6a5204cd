#include "hoeffding/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace hoeffding {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_number(const std::string& field, std::size_t lineno) {
    const std::string text = trim(field);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": invalid number \"" +
                                    field + "\"");
    }
    return value;
}

}  // namespace

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::vector<Interval> read_interval_csv(std::istream& in) {
    std::vector<Interval> out;
    std::string line;
    std::size_t lineno = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;
        if (!header_seen) {
            if (stripped != "a,b") {
                throw std::invalid_argument("line " + std::to_string(lineno) +
                                            ": expected header \"a,b\"");
            }
            header_seen = true;
            continue;
        }
        const auto comma = stripped.find(',');
        if (comma == std::string::npos || stripped.find(',', comma + 1) != std::string::npos) {
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": expected two comma-separated fields");
        }
        const double a = parse_number(stripped.substr(0, comma), lineno);
        const double b = parse_number(stripped.substr(comma + 1), lineno);
        try {
            out.emplace_back(a, b);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (!header_seen) {
        throw std::invalid_argument("missing header \"a,b\"");
    }
    if (out.empty()) {
        throw std::invalid_argument("no intervals");
    }
    return out;
}

std::vector<Interval> read_interval_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open intervals file \"" + path + "\"");
    }
    return read_interval_csv(in);
}

const char* to_string(DeviationForm form) noexcept {
    return form == DeviationForm::Sum ? "sum" : "mean";
}

const char* to_string(Sidedness sidedness) noexcept {
    return sidedness == Sidedness::One ? "one" : "two";
}

const char* to_string(MgfBoundKind kind) noexcept {
    return kind == MgfBoundKind::Improved ? "improved" : "original";
}

DeviationForm parse_form(const std::string& text) {
    if (text == "sum") return DeviationForm::Sum;
    if (text == "mean") return DeviationForm::Mean;
    throw std::invalid_argument("form must be \"sum\" or \"mean\", got \"" + text + "\"");
}

Sidedness parse_sidedness(const std::string& text) {
    if (text == "one") return Sidedness::One;
    if (text == "two") return Sidedness::Two;
    throw std::invalid_argument("sided must be \"one\" or \"two\", got \"" + text + "\"");
}

MgfBoundKind parse_kind(const std::string& text) {
    if (text == "improved") return MgfBoundKind::Improved;
    if (text == "original") return MgfBoundKind::Original;
    throw std::invalid_argument("kind must be \"improved\" or \"original\", got \"" + text +
                                "\"");
}

void write_report_header(std::ostream& os) {
    os << "n,m_sq,n_sq,sum_a_sq,sum_g_sq,t,form,sidedness,kind,bound,optimal_s\n";
}

void write_report_row(std::ostream& os, const TailBoundReport& report, MgfBoundKind kind) {
    const MixedScales& ms = report.scales;
    const double t_sum =
        report.form == DeviationForm::Mean ? static_cast<double>(ms.n) * report.t : report.t;
    os << ms.n << ',' << format_double(ms.m_sq) << ',' << format_double(ms.n_sq) << ','
       << format_double(ms.sum_a_sq) << ',' << format_double(ms.sum_g_sq) << ','
       << format_double(report.t) << ',' << to_string(report.form) << ','
       << to_string(report.sidedness) << ',' << to_string(kind) << ','
       << format_double(report.bound(kind)) << ','
       << format_double(optimal_chernoff_s(ms, t_sum, kind)) << '\n';
}

void write_lemma_report(std::ostream& os, const LemmaReport& report) {
    os << "s,margin\n";
    for (std::size_t i = 0; i < report.s_grid.size(); ++i) {
        os << format_double(report.s_grid[i]) << ',' << format_double(report.margins[i]) << '\n';
    }
}

void write_tail_comparison(std::ostream& os, const TailEstimate& estimate, double bound,
                           bool pass) {
    os << "estimate,ci_upper_99,bound,pass\n"
       << format_double(estimate.estimate) << ',' << format_double(estimate.ci_upper_99) << ','
       << format_double(bound) << ',' << (pass ? 1 : 0) << '\n';
}

}  // namespace hoeffding
