#include "wq/core_model.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <utility>

#include <fmt/format.h>

#include "wq/error.hpp"

namespace wq {
namespace {

struct ParameterInfo {
  std::string_view code;
  std::string_view unit;
};

constexpr std::array<ParameterInfo, 6> kRegistry{{
    {"temp", "degC"},
    {"pH", "1"},
    {"OD", "mg/l"},
    {"CBO5", "mg/l"},
    {"CCO-Mn", "mg/l"},
    {"CCO-Cr", "mg/l"},
}};

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

int to_int(std::string_view s) {
  int v = 0;
  std::from_chars(s.data(), s.data() + s.size(), v);
  return v;
}

}  // namespace

Date parse_date(std::string_view text) {
  const auto first = text.find('/');
  const auto second = first == std::string_view::npos ? first : text.find('/', first + 1);
  if (second == std::string_view::npos || text.find('/', second + 1) != std::string_view::npos) {
    throw Error(ErrorCode::MalformedDate, fmt::format("expected M/D/YYYY, got '{}'", text));
  }
  const auto m = text.substr(0, first);
  const auto d = text.substr(first + 1, second - first - 1);
  const auto y = text.substr(second + 1);
  if (!all_digits(m) || m.size() > 2 || !all_digits(d) || d.size() > 2 || !all_digits(y) ||
      y.size() != 4) {
    throw Error(ErrorCode::MalformedDate, fmt::format("expected M/D/YYYY, got '{}'", text));
  }
  const Date date{std::chrono::year{to_int(y)}, std::chrono::month{static_cast<unsigned>(to_int(m))},
                  std::chrono::day{static_cast<unsigned>(to_int(d))}};
  if (!date.ok()) {
    throw Error(ErrorCode::InvalidDate, fmt::format("no such calendar day '{}'", text));
  }
  return date;
}

std::string format_date(Date date) {
  return fmt::format("{}/{}/{}", static_cast<unsigned>(date.month()),
                     static_cast<unsigned>(date.day()), static_cast<int>(date.year()));
}

long long day_number(Date date) {
  return std::chrono::sys_days{date}.time_since_epoch().count();
}

Date date_from_day_number(long long days) {
  return Date{std::chrono::sys_days{std::chrono::days{days}}};
}

std::string_view parameter_unit(std::string_view code) {
  for (const auto& p : kRegistry) {
    if (p.code == code) return p.unit;
  }
  return "unknown";
}

bool is_registered_parameter(std::string_view code) {
  return std::any_of(kRegistry.begin(), kRegistry.end(),
                     [&](const ParameterInfo& p) { return p.code == code; });
}

TimeSeries::TimeSeries(std::string station, std::string parameter, Date epoch,
                       std::vector<Knot> knots)
    : station_(std::move(station)),
      parameter_(std::move(parameter)),
      epoch_(epoch),
      knots_(std::move(knots)) {
  if (knots_.empty()) {
    throw Error(ErrorCode::EmptySeries, fmt::format("series {}/{} has no knots", station_, parameter_));
  }
  for (std::size_t i = 0; i < knots_.size(); ++i) {
    if (!std::isfinite(knots_[i].t) || !std::isfinite(knots_[i].y)) {
      throw Error(ErrorCode::DimensionMismatch, fmt::format("knot {} is not finite", i));
    }
    if (i > 0 && !(knots_[i].t > knots_[i - 1].t)) {
      throw Error(ErrorCode::DuplicateTimestamp,
                  fmt::format("knots {} and {} are not strictly increasing in t", i - 1, i));
    }
  }
}

TimeSeries TimeSeries::from_points(std::span<const double> t, std::span<const double> y,
                                   std::string station, std::string parameter) {
  if (t.size() != y.size()) {
    throw Error(ErrorCode::DimensionMismatch, "t and y lengths differ");
  }
  std::vector<Knot> knots(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) knots[i] = {t[i], y[i]};
  return TimeSeries(std::move(station), std::move(parameter), date_from_day_number(0),
                    std::move(knots));
}

std::vector<double> TimeSeries::times() const {
  std::vector<double> out(knots_.size());
  std::transform(knots_.begin(), knots_.end(), out.begin(), [](const Knot& k) { return k.t; });
  return out;
}

std::vector<double> TimeSeries::values() const {
  std::vector<double> out(knots_.size());
  std::transform(knots_.begin(), knots_.end(), out.begin(), [](const Knot& k) { return k.y; });
  return out;
}

TimeSeries build_series(std::span<const Sample> samples, std::string_view station,
                        std::string_view parameter) {
  std::vector<std::pair<long long, double>> present;
  for (const auto& s : samples) {
    if (s.station != station) {
      throw Error(ErrorCode::StationMismatch,
                  fmt::format("sample from station '{}' in series for '{}'", s.station, station));
    }
    if (s.parameter != parameter) {
      throw Error(ErrorCode::UnknownParameter,
                  fmt::format("sample for '{}' in series for '{}'", s.parameter, parameter));
    }
    if (s.value) present.emplace_back(day_number(s.date), *s.value);
  }
  if (present.empty()) {
    throw Error(ErrorCode::EmptySeries,
                fmt::format("no present values for {}/{}", station, parameter));
  }
  std::sort(present.begin(), present.end());
  for (std::size_t i = 1; i < present.size(); ++i) {
    if (present[i].first == present[i - 1].first) {
      throw Error(ErrorCode::DuplicateTimestamp,
                  fmt::format("two samples on {}", format_date(date_from_day_number(present[i].first))));
    }
  }
  const long long epoch = present.front().first;
  std::vector<Knot> knots;
  knots.reserve(present.size());
  for (const auto& [day, value] : present) {
    knots.push_back({static_cast<double>(day - epoch), value});
  }
  return TimeSeries(std::string(station), std::string(parameter), date_from_day_number(epoch),
                    std::move(knots));
}

}  // namespace wq
