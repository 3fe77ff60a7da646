#include "wq/ingest.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <system_error>
#include <utility>

#include <fmt/format.h>

#include "wq/error.hpp"
#include "wq/spline.hpp"

namespace wq {
namespace {

constexpr std::string_view kGropeniCsv =
    "Data,temp,pH,OD,CBO5,CCO-Mn,CCO-Cr\n"
    "9/11/2003,21,7.5,8.1,4.8,6.4,20\n"
    "10/14/2003,14,7.5,7.5,6.8,16.8,-\n"
    "11/11/2003,11,7.2,7.9,4.7,8.8,20\n"
    "12/5/2003,7,7.5,7.3,5.9,9.6,20\n"
    "1/30/2004,3,7.2,8.3,14,24,45\n"
    "2/5/2004,3,6.8,8.5,7.7,13.6,30\n"
    "3/25/2004,9,7.6,9.2,7,12.8,20\n"
    "4/30/2004,*,7.1,9.8,5.8,8,30\n"
    "5/31/2004,20,8,8,4.9,6.4,14.4\n"
    "6/28/2004,26,7.9,9,5.5,8,19.2\n"
    "7/15/2004,*,7.9,7.6,7.9,15.2,33.6\n";

std::string_view trim(std::string_view s) {
  const auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && ws(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_cells(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      cells.push_back(trim(line.substr(start)));
      break;
    }
    cells.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return cells;
}

std::optional<double> parse_cell(std::string_view cell, std::size_t line_no) {
  if (cell == "*" || cell == "-") return std::nullopt;
  double v = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  if (!cell.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (cell.empty() || ec != std::errc{} || ptr != last || !std::isfinite(v)) {
    throw Error(ErrorCode::MalformedNumber, fmt::format("line {}: '{}' is not a number", line_no, cell));
  }
  return v;
}

}  // namespace

std::size_t Dataset::column(std::string_view parameter) const {
  const auto it = std::find(parameters.begin(), parameters.end(), parameter);
  if (it == parameters.end()) {
    throw Error(ErrorCode::UnknownParameter,
                fmt::format("no column '{}' in dataset '{}'", parameter, station));
  }
  return static_cast<std::size_t>(it - parameters.begin());
}

std::vector<Sample> Dataset::samples(std::string_view parameter) const {
  const std::size_t col = column(parameter);
  std::vector<Sample> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    out.push_back({station, row.date, std::string(parameter), row.values[col]});
  }
  return out;
}

TimeSeries Dataset::series(std::string_view parameter) const {
  const auto s = samples(parameter);
  return build_series(s, station, parameter);
}

std::size_t Dataset::absent_count() const {
  std::size_t n = 0;
  for (const auto& row : rows) {
    n += static_cast<std::size_t>(std::count(row.values.begin(), row.values.end(), std::nullopt));
  }
  return n;
}

Dataset parse_csv(std::string_view text, std::string station, std::string source) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw Error(ErrorCode::HeaderMismatch, "missing header row");

  Dataset ds;
  ds.station = std::move(station);
  ds.source = std::move(source);

  auto header = split_cells(lines.front());
  if (!header.empty() && header.front().starts_with("\xEF\xBB\xBF")) header.front().remove_prefix(3);
  if (header.size() < 2 || (header.front() != "Data" && header.front() != "Date")) {
    throw Error(ErrorCode::HeaderMismatch,
                "header must start with a 'Data' or 'Date' column followed by parameters");
  }
  ds.date_header = std::string(header.front());
  for (std::size_t i = 1; i < header.size(); ++i) {
    if (header[i].empty()) throw Error(ErrorCode::HeaderMismatch, fmt::format("column {} has no name", i));
    if (std::find(ds.parameters.begin(), ds.parameters.end(), header[i]) != ds.parameters.end()) {
      throw Error(ErrorCode::HeaderMismatch, fmt::format("duplicate column '{}'", header[i]));
    }
    ds.parameters.emplace_back(header[i]);
  }

  for (std::size_t li = 1; li < lines.size(); ++li) {
    if (trim(lines[li]).empty()) continue;
    const auto cells = split_cells(lines[li]);
    if (cells.size() != header.size()) {
      throw Error(ErrorCode::MalformedRow, fmt::format("line {}: {} cells, header has {}", li + 1,
                                                       cells.size(), header.size()));
    }
    DatasetRow row{parse_date(cells.front()), {}};
    row.values.reserve(ds.parameters.size());
    for (std::size_t c = 1; c < cells.size(); ++c) row.values.push_back(parse_cell(cells[c], li + 1));
    ds.rows.push_back(std::move(row));
  }

  std::stable_sort(ds.rows.begin(), ds.rows.end(),
                   [](const DatasetRow& a, const DatasetRow& b) { return a.date < b.date; });
  for (std::size_t i = 1; i < ds.rows.size(); ++i) {
    if (ds.rows[i].date == ds.rows[i - 1].date) {
      throw Error(ErrorCode::DuplicateTimestamp,
                  fmt::format("date {} appears twice", format_date(ds.rows[i].date)));
    }
  }
  return ds;
}

std::string format_number(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

std::string serialize_csv(const Dataset& dataset) {
  std::string out = dataset.date_header;
  for (const auto& p : dataset.parameters) {
    out += ',';
    out += p;
  }
  out += '\n';
  for (const auto& row : dataset.rows) {
    out += format_date(row.date);
    for (const auto& v : row.values) {
      out += ',';
      out += v ? format_number(*v) : std::string("*");
    }
    out += '\n';
  }
  return out;
}

std::string_view gropeni_csv() { return kGropeniCsv; }

Dataset gropeni_fixture() {
  return parse_csv(kGropeniCsv, std::string(kGropeniStation), "fixture:gropeni");
}

std::string curve_to_csv(const CurveSamples& curve, Date epoch) {
  std::string out = "t_days,date,value\n";
  const long long base = day_number(epoch);
  for (const auto& p : curve.points) {
    const auto day = base + static_cast<long long>(std::floor(p.t));
    out += fmt::format("{:.6f},{},{:.10g}\n", p.t, format_date(date_from_day_number(day)), p.y);
  }
  return out;
}

}  // namespace wq
