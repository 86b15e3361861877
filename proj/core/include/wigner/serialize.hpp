#pragma once

// CSV / JSON emission for the command-line tool.
//
// CSV: header row, LF line endings, numbers with 12 significant digits.
// Summary blocks (extrema, classical min/max) trail the table as lines
// starting with '#', so the table itself stays plottable as-is.
// JSON: one object per document with the same numbers, already rounded to
// 12 significant digits.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "wigner/bounds.hpp"
#include "wigner/cli.hpp"
#include "wigner/qkd.hpp"

namespace wigner {

inline constexpr int kSignificantDigits = 12;

/// "%.12g" with negative zero folded to zero.
std::string format_number(double x);
/// The double that format_number(x) denotes.
double round_to_emitted(double x);

void write_sweep(std::ostream& out, const SweepGrid& grid, OutputFormat format);
/// Reads what write_sweep produced. Throws ConfigError on malformed input.
SweepGrid read_sweep(std::istream& in, OutputFormat format);
/// Reads a sweep, choosing JSON when the first non-blank character is '{'.
SweepGrid read_sweep(std::istream& in);

void write_bounds(std::ostream& out, const BoundsResult& result, OutputFormat format);
void write_classical(std::ostream& out, const ClassicalBounds& bounds, OutputFormat format);
void write_qkd(std::ostream& out, const std::vector<QkdAssessment>& report, OutputFormat format);

std::string_view sign_symbol(BasisSign s);

}  // namespace wigner
