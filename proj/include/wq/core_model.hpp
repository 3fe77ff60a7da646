#pragma once

#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wq {

using Date = std::chrono::year_month_day;

/// Parses `M/D/YYYY` (one or two digit month and day, four digit year).
/// Throws MalformedDate on a shape error and InvalidDate on a nonexistent day.
Date parse_date(std::string_view text);

/// Inverse of parse_date, without zero padding ("9/11/2003").
std::string format_date(Date date);

/// Days since 1970-01-01.
long long day_number(Date date);

Date date_from_day_number(long long days);

/// Unit for a parameter code. The registry is open: unknown codes map to "unknown".
std::string_view parameter_unit(std::string_view code);

bool is_registered_parameter(std::string_view code);

/// One dated measurement of one parameter at one station.
struct Sample {
  std::string station;
  Date date;
  std::string parameter;
  std::optional<double> value;
};

struct Knot {
  double t;
  double y;

  friend bool operator==(const Knot&, const Knot&) = default;
};

/// Strictly time-ordered knots for one station and parameter. `t` is measured
/// in days from `epoch`, the earliest retained sample.
class TimeSeries {
 public:
  /// Validates ordering and finiteness. Throws EmptySeries, DuplicateTimestamp
  /// or DimensionMismatch.
  TimeSeries(std::string station, std::string parameter, Date epoch, std::vector<Knot> knots);

  /// Convenience for synthetic data: epoch 1970-01-01.
  static TimeSeries from_points(std::span<const double> t, std::span<const double> y,
                                std::string station = "synthetic", std::string parameter = "value");

  const std::string& station() const noexcept { return station_; }
  const std::string& parameter() const noexcept { return parameter_; }
  Date epoch() const noexcept { return epoch_; }
  const std::vector<Knot>& knots() const noexcept { return knots_; }
  std::size_t size() const noexcept { return knots_.size(); }

  std::vector<double> times() const;
  std::vector<double> values() const;

  double front_t() const { return knots_.front().t; }
  double back_t() const { return knots_.back().t; }
  double span() const { return back_t() - front_t(); }

  /// Absolute day number (days since 1970-01-01) of a point on this series' axis.
  double absolute_day(double t) const { return static_cast<double>(day_number(epoch_)) + t; }

  friend bool operator==(const TimeSeries&, const TimeSeries&) = default;

 private:
  std::string station_;
  std::string parameter_;
  Date epoch_;
  std::vector<Knot> knots_;
};

/// Drops absent values, sorts by date and measures t from the earliest retained date.
/// Samples for other stations or parameters are rejected with StationMismatch /
/// UnknownParameter. Throws EmptySeries if nothing remains and
/// DuplicateTimestamp if two retained samples share a date.
TimeSeries build_series(std::span<const Sample> samples, std::string_view station,
                        std::string_view parameter);

}  // namespace wq
