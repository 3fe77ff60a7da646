#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wq/core_model.hpp"
#include "wq/spline.hpp"

namespace wq {

struct DatasetRow {
  Date date;
  std::vector<std::optional<double>> values;  // one per Dataset::parameters entry

  friend bool operator==(const DatasetRow&, const DatasetRow&) = default;
};

/// One station's table: a date column followed by parameter columns.
struct Dataset {
  std::string station;
  std::string date_header = "Data";  // "Data" (as in the Gropeni table) or "Date"
  std::vector<std::string> parameters;
  std::vector<DatasetRow> rows;  // sorted by date, unique dates
  std::string source;

  /// Column index of a parameter. Throws UnknownParameter.
  std::size_t column(std::string_view parameter) const;

  std::vector<Sample> samples(std::string_view parameter) const;

  /// build_series over one column.
  TimeSeries series(std::string_view parameter) const;

  std::size_t absent_count() const;

  friend bool operator==(const Dataset&, const Dataset&) = default;
};

/// Cells "*" and "-" (after trimming) are absent values. Throws HeaderMismatch,
/// MalformedRow, MalformedDate, InvalidDate, MalformedNumber and DuplicateTimestamp.
Dataset parse_csv(std::string_view text, std::string station = "unknown", std::string source = "");

/// Canonical CSV: shortest round-trip numbers, "*" for absent values, "\n" line ends.
std::string serialize_csv(const Dataset& dataset);

/// Fig. "Statistical Data Dunare-Gropeni" as CSV text.
std::string_view gropeni_csv();

inline constexpr std::string_view kGropeniStation = "Dunare-Gropeni";

Dataset gropeni_fixture();

/// Curve export with columns t_days,date,value. The date column is the calendar
/// day containing t (t measured from `epoch`).
std::string curve_to_csv(const CurveSamples& curve, Date epoch);

/// Shortest representation that parses back to the same double.
std::string format_number(double value);

}  // namespace wq
