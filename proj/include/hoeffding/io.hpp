#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hoeffding/interval.hpp"
#include "hoeffding/tail_bounds.hpp"
#include "hoeffding/verify.hpp"

namespace hoeffding {

// 17 significant digits: round-trip exact for 64-bit doubles.
std::string format_double(double x);

// Interval-list CSV: header line "a,b", one interval per row, '#'-prefixed
// comment lines ignored.  Errors name the offending line.
std::vector<Interval> read_interval_csv(std::istream& in);
std::vector<Interval> read_interval_csv_file(const std::string& path);

const char* to_string(DeviationForm form) noexcept;
const char* to_string(Sidedness sidedness) noexcept;
const char* to_string(MgfBoundKind kind) noexcept;

DeviationForm parse_form(const std::string& text);
Sidedness parse_sidedness(const std::string& text);
MgfBoundKind parse_kind(const std::string& text);

// Flat report row: n,m_sq,n_sq,sum_a_sq,sum_g_sq,t,form,sidedness,kind,bound,optimal_s
void write_report_header(std::ostream& os);
void write_report_row(std::ostream& os, const TailBoundReport& report, MgfBoundKind kind);

// s,margin rows
void write_lemma_report(std::ostream& os, const LemmaReport& report);

// estimate,ci_upper_99,bound,pass row
void write_tail_comparison(std::ostream& os, const TailEstimate& estimate, double bound,
                           bool pass);

}  // namespace hoeffding
