#include "sgdol/harness/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "sgdol/core/error.hpp"

namespace sgdol {

std::string format_number(double value) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

double parse_number(std::string_view text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError(0, "bad number '" + std::string(text) + "'");
  }
  return value;
}

std::string csv_header(const OptimizerSeries& series) {
  std::string header = "t,grad_sq_norm,f_value,stepsize_mean";
  if (series.stepsize_width > 1) {
    for (std::size_t i = 1; i <= series.stepsize_width; ++i) {
      header += ",stepsize_" + std::to_string(i);
    }
  }
  if (series.has_opt_gap) header += ",opt_gap";
  return header;
}

void write_csv(const OptimizerSeries& series, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << csv_header(series) << '\n';
  for (const auto& p : series.points) {
    out << p.t << ',' << format_number(p.grad_sq_norm) << ',' << format_number(p.f_value) << ','
        << format_number(p.stepsize_mean);
    for (double s : p.stepsize) out << ',' << format_number(s);
    if (series.has_opt_gap) out << ',' << format_number(p.opt_gap.value_or(0.0));
    out << '\n';
  }
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

void write_csv(const ResultTable& table, const std::filesystem::path& directory) {
  std::error_code ec;
  std::filesystem::create_directories(directory, ec);
  if (ec) throw IoError("cannot create '" + directory.string() + "': " + ec.message());
  for (const auto& series : table.series) write_csv(series, directory / (series.name + ".csv"));
}

namespace {

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  return cells;
}

}  // namespace

OptimizerSeries read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, "missing header in " + path.string());

  const auto header = split_commas(line);
  if (header.size() < 4 || header[0] != "t") throw ParseError(1, "unexpected CSV header");
  OptimizerSeries series;
  series.has_opt_gap = header.back() == "opt_gap";
  const std::size_t coord_cols = header.size() - 4 - (series.has_opt_gap ? 1 : 0);
  series.stepsize_width = coord_cols == 0 ? 1 : coord_cols;

  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto cells = split_commas(line);
    if (cells.size() != header.size()) throw ParseError(line_no, "wrong number of columns");
    try {
      SeriesPoint p;
      p.t = static_cast<std::size_t>(parse_number(cells[0]));
      p.grad_sq_norm = parse_number(cells[1]);
      p.f_value = parse_number(cells[2]);
      p.stepsize_mean = parse_number(cells[3]);
      for (std::size_t i = 0; i < coord_cols; ++i) p.stepsize.push_back(parse_number(cells[4 + i]));
      if (series.has_opt_gap) p.opt_gap = parse_number(cells.back());
      series.points.push_back(std::move(p));
    } catch (const ParseError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return series;
}

}  // namespace sgdol
