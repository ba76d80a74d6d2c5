#pragma once

#include "sfem/analysis.hpp"

#include <string>
#include <vector>

namespace sfem {

enum class TableFormat { csv, md };

/// Fixed CSV schema:
///   level,h_nominal,h_measured,dofs,err_l2_u,eoc_l2_u,err_h1_u,eoc_h1_u,
///   err_l2_w,eoc_l2_w,err_h1_w,eoc_h1_w,residual
/// Absent cells (first-row EOCs, the missing H1 column of the
/// point-source problem) serialize as empty strings; rows whose solve
/// failed carry FAILED in the residual column. The markdown format emits
/// one table per variable in the standard error/EOC layout. Numbers use
/// `precision` significant digits.
std::string format_convergence(const ConvergenceReport& report, TableFormat format,
                               int precision = 6);

std::string format_infsup(const std::vector<InfSupReport>& rows, TableFormat format,
                          int precision = 6);
std::string format_coercivity(const std::vector<CoercivityReport>& rows, TableFormat format,
                              int precision = 6);
std::string format_ritz(const std::vector<RitzDecayEntry>& rows, TableFormat format,
                        int precision = 6);

/// Writes `content` verbatim; throws IoError when the file cannot be
/// opened or written.
void write_text_file(const std::string& path, const std::string& content);

} // namespace sfem
