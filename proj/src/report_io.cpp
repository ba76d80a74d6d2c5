#include "sfem/report_io.hpp"

#include "sfem/errors.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace sfem {

namespace {

std::string num(double v, int precision) {
  if (std::isnan(v)) return {};
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

std::string join(const std::vector<std::string>& cells, TableFormat format) {
  std::string line;
  if (format == TableFormat::md) line += "| ";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += format == TableFormat::csv ? "," : " | ";
    line += cells[i];
  }
  if (format == TableFormat::md) line += " |";
  line += '\n';
  return line;
}

std::string md_separator(std::size_t columns) {
  std::string line = "|";
  for (std::size_t i = 0; i < columns; ++i) line += " --- |";
  line += '\n';
  return line;
}

} // namespace

std::string format_convergence(const ConvergenceReport& report, TableFormat format,
                               int precision) {
  std::string out;
  if (format == TableFormat::csv) {
    out +=
        "level,h_nominal,h_measured,dofs,err_l2_u,eoc_l2_u,err_h1_u,eoc_h1_u,"
        "err_l2_w,eoc_l2_w,err_h1_w,eoc_h1_w,residual\n";
    for (std::size_t k = 0; k < report.records.size(); ++k) {
      const ErrorRecord& r = report.records[k];
      out += join({std::to_string(r.level), num(r.nominal_h, precision),
                   num(r.measured_h, precision), std::to_string(r.dofs),
                   num(r.err_l2_u, precision), num(report.eoc_l2_u[k], precision),
                   num(r.err_h1_u, precision), num(report.eoc_h1_u[k], precision),
                   num(r.err_l2_w, precision), num(report.eoc_l2_w[k], precision),
                   num(r.err_h1_w, precision), num(report.eoc_h1_w[k], precision),
                   r.solved ? num(r.residual, precision) : "FAILED"},
                  format);
    }
    return out;
  }

  // markdown: one table per variable, columns as in standard error/EOC tables
  const bool has_h1_w = [&] {
    for (const auto& r : report.records)
      if (r.solved && !std::isnan(r.err_h1_w)) return true;
    return false;
  }();
  out += "### u\n\n";
  out += join({"h", "E_L2(h)", "EOC", "E_H1(h)", "EOC"}, format);
  out += md_separator(5);
  for (std::size_t k = 0; k < report.records.size(); ++k) {
    const ErrorRecord& r = report.records[k];
    out += join({num(r.nominal_h, precision),
                 r.solved ? num(r.err_l2_u, precision) : "FAILED",
                 num(report.eoc_l2_u[k], precision),
                 r.solved ? num(r.err_h1_u, precision) : "FAILED",
                 num(report.eoc_h1_u[k], precision)},
                format);
  }
  out += "\n### w\n\n";
  if (has_h1_w) {
    out += join({"h", "E_L2(h)", "EOC", "E_H1(h)", "EOC"}, format);
    out += md_separator(5);
  } else {
    out += join({"h", "E_L2(h)", "EOC"}, format);
    out += md_separator(3);
  }
  for (std::size_t k = 0; k < report.records.size(); ++k) {
    const ErrorRecord& r = report.records[k];
    std::vector<std::string> cells = {num(r.nominal_h, precision),
                                      r.solved ? num(r.err_l2_w, precision) : "FAILED",
                                      num(report.eoc_l2_w[k], precision)};
    if (has_h1_w) {
      cells.push_back(r.solved ? num(r.err_h1_w, precision) : "FAILED");
      cells.push_back(num(report.eoc_h1_w[k], precision));
    }
    out += join(cells, format);
  }
  return out;
}

std::string format_infsup(const std::vector<InfSupReport>& rows, TableFormat format,
                          int precision) {
  std::string out;
  if (format == TableFormat::csv) {
    out += "level,lambda,beta\n";
  } else {
    out += join({"level", "lambda", "beta"}, format);
    out += md_separator(3);
  }
  for (const auto& r : rows)
    out += join({std::to_string(r.level), num(r.lambda, precision), num(r.beta, precision)},
                format);
  return out;
}

std::string format_coercivity(const std::vector<CoercivityReport>& rows, TableFormat format,
                              int precision) {
  std::string out;
  if (format == TableFormat::csv) {
    out += "level,mu_min\n";
  } else {
    out += join({"level", "mu_min"}, format);
    out += md_separator(2);
  }
  for (const auto& r : rows)
    out += join({std::to_string(r.level), num(r.mu_min, precision)}, format);
  return out;
}

std::string format_ritz(const std::vector<RitzDecayEntry>& rows, TableFormat format,
                        int precision) {
  std::string out;
  if (format == TableFormat::csv) {
    out += "level,max_ratio\n";
  } else {
    out += join({"level", "max_ratio"}, format);
    out += md_separator(2);
  }
  for (const auto& r : rows)
    out += join({std::to_string(r.level), num(r.max_ratio, precision)}, format);
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open '" + path + "' for writing");
  os << content;
  if (!os) throw IoError("write to '" + path + "' failed");
}

} // namespace sfem
