#pragma once
// Serialization of verification reports and distribution grids. Every
// number goes through format_number so repeated runs are byte-identical.
#include <iosfwd>
#include <string>
#include <vector>

#include "husimi/grid.hpp"
#include "husimi/limits.hpp"
#include "husimi/oracle.hpp"

namespace husimi::report {

/// 17 significant digits ("%.17g"); "inf"/"-inf"/"nan" for non-finite values.
std::string format_number(double v);

/// `PASS <name> max_abs=<..> max_rel=<..> points=<..> <notes>`
std::string to_text_line(const oracle::VerificationReport& r);

/// Report for a convergence series: passes when the series is strictly decreasing
/// and, if `last_threshold` is finite, its last entry lies below it.
oracle::VerificationReport series_report(const std::string& name, const limits::ConvergenceSeries& s,
                                         double last_threshold);

void sort_by_name(std::vector<oracle::VerificationReport>& reports);
void write_text(std::ostream& os, const std::vector<oracle::VerificationReport>& reports);
void write_document(std::ostream& os, const std::vector<oracle::VerificationReport>& reports);

/// Header `x,p,value`, one row per cell, x outer and p inner.
void write_grid_csv(std::ostream& os, const DistributionGrid& grid);
/// Metadata plus the value array in a single JSON document.
void write_grid_document(std::ostream& os, const DistributionGrid& grid);

}  // namespace husimi::report
