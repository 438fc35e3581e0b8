#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fxlab/errors.hpp"

namespace fxlab {

enum class Frequency { Quarterly, Annual };

inline int periods_per_year(Frequency f) {
    return f == Frequency::Quarterly ? 4 : 1;
}

// Calendar position: (year, sub-period). sub is the 1-based quarter for
// quarterly series and always 1 for annual ones. No day-level calendar logic.
struct Period {
    int year = 0;
    int sub = 1;

    bool operator==(const Period&) const = default;
};

// Linear index on the period axis, so spans can be intersected with integer
// arithmetic. Quarterly: 4*year + (sub-1); annual: year.
long period_index(Frequency f, const Period& p);
Period period_from_index(Frequency f, long idx);
Period advance(Frequency f, const Period& p, long steps);

// "1990-Q1" (quarterly) / "1990" (annual)
std::string format_period(Frequency f, const Period& p);

// Immutable dated observation sequence. One slot per period, contiguous in
// time; missing observations are allowed and stay missing through transforms.
class TimeSeries {
public:
    using Value = std::optional<double>;

    TimeSeries(std::string name, Frequency frequency, Period start,
               std::vector<Value> values);

    const std::string& name() const { return name_; }
    Frequency frequency() const { return frequency_; }
    const Period& start() const { return start_; }
    std::size_t size() const { return values_.size(); }
    const std::vector<Value>& values() const { return values_; }
    const Value& operator[](std::size_t i) const { return values_[i]; }

    Period period_at(std::size_t i) const {
        return advance(frequency_, start_, static_cast<long>(i));
    }

    std::size_t observed_count() const;

    TimeSeries renamed(std::string new_name) const {
        return TimeSeries(std::move(new_name), frequency_, start_, values_);
    }

private:
    std::string name_;
    Frequency frequency_;
    Period start_;
    std::vector<Value> values_;
};

// result[t] = s[t-k], first k slots missing, name suffixed with the lag order.
TimeSeries lag(const TimeSeries& s, int k);

// Year-over-year percent change: 100*(s[t]/s[t-m] - 1) with m = periods per
// year. Zero denominators become missing, never a crash.
TimeSeries pct_change_yoy(const TimeSeries& s);

// Natural log of positive entries; non-positive entries become missing and
// their count is reported through nonpositive_count when given.
TimeSeries natural_log(const TimeSeries& s, std::size_t* nonpositive_count = nullptr);

// Step repetition of each annual value into its 4 quarters.
TimeSeries annual_to_quarterly(const TimeSeries& s);

// Row-complete sample over the periods where every column is observed.
struct AlignedSample {
    Eigen::MatrixXd values;             // rows x columns, no missing entries
    std::vector<std::string> names;     // column order as given
    std::vector<Period> periods;        // one per kept row, chronological
    Frequency frequency = Frequency::Quarterly;
    std::size_t dropped_rows = 0;       // rows of the common span lost to missingness
};

AlignedSample align_listwise(const std::vector<TimeSeries>& columns);

} // namespace fxlab
