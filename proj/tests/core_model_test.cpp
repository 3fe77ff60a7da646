#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "test_support.hpp"
#include "wq/core_model.hpp"
#include "wq/ingest.hpp"

using namespace wq;
using namespace std::chrono;
using wq::test::check_error;

TEST_SUITE("core_model") {
  TEST_CASE("parse_date accepts the table's M/D/YYYY rows") {
    CHECK(parse_date("9/11/2003") == Date{year{2003}, month{9}, day{11}});
    CHECK(parse_date("1/30/2004") == Date{year{2004}, month{1}, day{30}});
    CHECK(parse_date("02/29/2004") == Date{year{2004}, month{2}, day{29}});
    CHECK(format_date(parse_date("12/5/2003")) == "12/5/2003");
  }

  TEST_CASE("parse_date rejects bad shapes and impossible days") {
    check_error(ErrorCode::InvalidDate, [] { parse_date("2/30/2004"); });
    check_error(ErrorCode::InvalidDate, [] { parse_date("13/1/2004"); });
    check_error(ErrorCode::InvalidDate, [] { parse_date("2/29/2003"); });
    check_error(ErrorCode::InvalidDate, [] { parse_date("0/10/2003"); });
    check_error(ErrorCode::MalformedDate, [] { parse_date("2003-09-11"); });
    check_error(ErrorCode::MalformedDate, [] { parse_date("9/11/03"); });
    check_error(ErrorCode::MalformedDate, [] { parse_date("123/1/2003"); });
    check_error(ErrorCode::MalformedDate, [] { parse_date("9/11/2003/1"); });
    check_error(ErrorCode::MalformedDate, [] { parse_date(""); });
    check_error(ErrorCode::MalformedDate, [] { parse_date("a/1/2003"); });
  }

  TEST_CASE("parameter registry is open") {
    CHECK(parameter_unit("OD") == "mg/l");
    CHECK(parameter_unit("temp") == "degC");
    CHECK(is_registered_parameter("CCO-Cr"));
    CHECK_FALSE(is_registered_parameter("od"));
    CHECK(parameter_unit("NO3-N") == "unknown");
  }

  TEST_CASE("build_series on the Gropeni OD column") {
    const auto ds = gropeni_fixture();
    const auto od = ds.series("OD");
    REQUIRE(od.size() == 11);
    CHECK(od.epoch() == Date{year{2003}, month{9}, day{11}});
    const std::vector<double> days{0, 33, 61, 85, 141, 147, 196, 232, 263, 291, 308};
    const std::vector<double> values{8.1, 7.5, 7.9, 7.3, 8.3, 8.5, 9.2, 9.8, 8.0, 9.0, 7.6};
    CHECK(od.times() == days);
    CHECK(od.values() == values);
  }

  TEST_CASE("build_series drops the two starred temperatures") {
    const auto temp = gropeni_fixture().series("temp");
    CHECK(temp.size() == 9);
    CHECK(temp.front_t() == 0.0);
    CHECK(temp.back_t() == 291.0);
  }

  TEST_CASE("single sample gives a single knot at t = 0") {
    const std::vector<Sample> s{{"X", parse_date("5/5/2005"), "OD", 7.0}};
    const auto series = build_series(s, "X", "OD");
    REQUIRE(series.size() == 1);
    CHECK(series.knots()[0] == Knot{0.0, 7.0});
  }

  TEST_CASE("build_series errors") {
    const std::vector<Sample> all_missing{{"X", parse_date("5/5/2005"), "OD", std::nullopt}};
    check_error(ErrorCode::EmptySeries, [&] { build_series(all_missing, "X", "OD"); });
    const std::vector<Sample> dup{{"X", parse_date("5/5/2005"), "OD", 7.0},
                                  {"X", parse_date("5/5/2005"), "OD", 7.5}};
    check_error(ErrorCode::DuplicateTimestamp, [&] { build_series(dup, "X", "OD"); });
    const std::vector<Sample> other{{"Y", parse_date("5/5/2005"), "OD", 7.0}};
    check_error(ErrorCode::StationMismatch, [&] { build_series(other, "X", "OD"); });
  }

  TEST_CASE("absent duplicates never collide") {
    const std::vector<Sample> s{{"X", parse_date("5/5/2005"), "OD", std::nullopt},
                                {"X", parse_date("5/5/2005"), "OD", 7.5},
                                {"X", parse_date("5/6/2005"), "OD", std::nullopt}};
    CHECK(build_series(s, "X", "OD").size() == 1);
  }

  TEST_CASE("build_series is permutation invariant and preserves day differences") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> gap(1, 60);
    std::uniform_real_distribution<double> val(0.0, 20.0);
    std::bernoulli_distribution missing(0.2);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Sample> samples;
      long long day = 12000 + trial;
      for (int i = 0; i < 15; ++i) {
        day += gap(rng);
        std::optional<double> v;
        if (!missing(rng)) v = val(rng);
        samples.push_back({"S", date_from_day_number(day), "pH", v});
      }
      const auto present = std::count_if(samples.begin(), samples.end(), [](const Sample& s) { return s.value.has_value(); });
      if (present == 0) continue;
      const auto reference = build_series(samples, "S", "pH");
      CHECK(reference.size() == static_cast<std::size_t>(present));
      for (int p = 0; p < 5; ++p) {
        std::shuffle(samples.begin(), samples.end(), rng);
        CHECK(build_series(samples, "S", "pH") == reference);
      }
      const auto& k = reference.knots();
      for (std::size_t i = 0; i + 1 < k.size(); ++i) {
        const double expected = reference.absolute_day(k[i + 1].t) - reference.absolute_day(k[i].t);
        CHECK(k[i + 1].t - k[i].t == expected);
      }
    }
  }

  TEST_CASE("TimeSeries rejects unordered or non-finite knots") {
    const std::vector<double> t{0.0, 2.0, 1.0};
    const std::vector<double> y{1.0, 2.0, 3.0};
    check_error(ErrorCode::DuplicateTimestamp, [&] { TimeSeries::from_points(t, y); });
    const std::vector<double> t2{0.0, 1.0};
    const std::vector<double> y2{1.0, std::nan("")};
    check_error(ErrorCode::DimensionMismatch, [&] { TimeSeries::from_points(t2, y2); });
  }
}
