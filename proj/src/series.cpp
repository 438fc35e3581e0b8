#include "fxlab/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

namespace fxlab {

long period_index(Frequency f, const Period& p) {
    if (f == Frequency::Quarterly) return 4L * p.year + (p.sub - 1);
    return p.year;
}

Period period_from_index(Frequency f, long idx) {
    if (f == Frequency::Quarterly) {
        long year = idx / 4;
        long sub = idx % 4;
        if (sub < 0) { sub += 4; year -= 1; }
        return Period{static_cast<int>(year), static_cast<int>(sub) + 1};
    }
    return Period{static_cast<int>(idx), 1};
}

Period advance(Frequency f, const Period& p, long steps) {
    return period_from_index(f, period_index(f, p) + steps);
}

std::string format_period(Frequency f, const Period& p) {
    char buf[32];
    if (f == Frequency::Quarterly)
        std::snprintf(buf, sizeof(buf), "%04d-Q%d", p.year, p.sub);
    else
        std::snprintf(buf, sizeof(buf), "%04d", p.year);
    return buf;
}

TimeSeries::TimeSeries(std::string name, Frequency frequency, Period start,
                       std::vector<Value> values)
    : name_(std::move(name)),
      frequency_(frequency),
      start_(start),
      values_(std::move(values)) {
    if (values_.empty())
        throw DataError("series '" + name_ + "': length must be >= 1");
    int max_sub = periods_per_year(frequency_);
    if (start_.sub < 1 || start_.sub > max_sub)
        throw DataError("series '" + name_ + "': start sub-period out of range");
}

std::size_t TimeSeries::observed_count() const {
    std::size_t n = 0;
    for (const auto& v : values_)
        if (v.has_value()) ++n;
    return n;
}

TimeSeries lag(const TimeSeries& s, int k) {
    if (k < 1)
        throw DataError("lag: order must be a positive integer");
    if (static_cast<std::size_t>(k) >= s.size())
        throw DataError("lag: order " + std::to_string(k) +
                        " >= length of series '" + s.name() + "'");
    std::vector<TimeSeries::Value> out(s.size(), std::nullopt);
    for (std::size_t t = static_cast<std::size_t>(k); t < s.size(); ++t)
        out[t] = s[t - static_cast<std::size_t>(k)];
    return TimeSeries(s.name() + "_lag" + std::to_string(k), s.frequency(),
                      s.start(), std::move(out));
}

TimeSeries pct_change_yoy(const TimeSeries& s) {
    std::size_t m = static_cast<std::size_t>(periods_per_year(s.frequency()));
    if (s.size() <= m)
        throw DataError("pct_change_yoy: series '" + s.name() +
                        "' shorter than one year of periods");
    std::vector<TimeSeries::Value> out(s.size(), std::nullopt);
    for (std::size_t t = m; t < s.size(); ++t) {
        const auto& cur = s[t];
        const auto& base = s[t - m];
        if (!cur || !base || *base == 0.0) continue;
        out[t] = 100.0 * (*cur / *base - 1.0);
    }
    return TimeSeries(s.name() + "_yoy", s.frequency(), s.start(), std::move(out));
}

TimeSeries natural_log(const TimeSeries& s, std::size_t* nonpositive_count) {
    std::vector<TimeSeries::Value> out(s.size(), std::nullopt);
    std::size_t clipped = 0;
    for (std::size_t t = 0; t < s.size(); ++t) {
        const auto& v = s[t];
        if (!v) continue;
        if (*v > 0.0)
            out[t] = std::log(*v);
        else
            ++clipped;
    }
    if (nonpositive_count) *nonpositive_count = clipped;
    return TimeSeries("log_" + s.name(), s.frequency(), s.start(), std::move(out));
}

TimeSeries annual_to_quarterly(const TimeSeries& s) {
    if (s.frequency() != Frequency::Annual)
        throw DataError("annual_to_quarterly: series '" + s.name() + "' is not annual");
    std::vector<TimeSeries::Value> out;
    out.reserve(s.size() * 4);
    for (std::size_t t = 0; t < s.size(); ++t)
        for (int q = 0; q < 4; ++q)
            out.push_back(s[t]);
    return TimeSeries(s.name(), Frequency::Quarterly,
                      Period{s.start().year, 1}, std::move(out));
}

AlignedSample align_listwise(const std::vector<TimeSeries>& columns) {
    if (columns.empty())
        throw DataError("align_listwise: no columns given");
    Frequency freq = columns.front().frequency();
    for (const auto& c : columns)
        if (c.frequency() != freq)
            throw DataError("align_listwise: series '" + c.name() +
                            "' has a different frequency");
    {
        std::set<std::string> seen;
        for (const auto& c : columns)
            if (!seen.insert(c.name()).second)
                throw DataError("align_listwise: duplicate column name '" + c.name() + "'");
    }

    // Common calendar span.
    long lo = period_index(freq, columns.front().start());
    long hi = lo + static_cast<long>(columns.front().size()) - 1;
    for (const auto& c : columns) {
        long s = period_index(freq, c.start());
        long e = s + static_cast<long>(c.size()) - 1;
        lo = std::max(lo, s);
        hi = std::min(hi, e);
        if (lo > hi)
            throw DataError("align_listwise: no overlapping span once series '" +
                            c.name() + "' is included");
    }

    std::vector<long> kept;
    for (long idx = lo; idx <= hi; ++idx) {
        bool complete = true;
        for (const auto& c : columns) {
            long off = idx - period_index(freq, c.start());
            if (!c[static_cast<std::size_t>(off)].has_value()) {
                complete = false;
                break;
            }
        }
        if (complete) kept.push_back(idx);
    }
    if (kept.empty()) {
        // Name the column whose observed set empties the running intersection.
        std::set<long> inter;
        for (long idx = lo; idx <= hi; ++idx) inter.insert(idx);
        for (const auto& c : columns) {
            std::set<long> next;
            for (long idx : inter) {
                long off = idx - period_index(freq, c.start());
                if (c[static_cast<std::size_t>(off)].has_value()) next.insert(idx);
            }
            inter.swap(next);
            if (inter.empty())
                throw DataError("align_listwise: no period observed in every column; "
                                "series '" + c.name() + "' leaves no overlap");
        }
        throw DataError("align_listwise: no period observed in every column");
    }

    AlignedSample out;
    out.frequency = freq;
    out.names.reserve(columns.size());
    for (const auto& c : columns) out.names.push_back(c.name());
    out.values.resize(static_cast<Eigen::Index>(kept.size()),
                      static_cast<Eigen::Index>(columns.size()));
    out.periods.reserve(kept.size());
    for (std::size_t r = 0; r < kept.size(); ++r) {
        out.periods.push_back(period_from_index(freq, kept[r]));
        for (std::size_t j = 0; j < columns.size(); ++j) {
            long off = kept[r] - period_index(freq, columns[j].start());
            out.values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j)) =
                *columns[j][static_cast<std::size_t>(off)];
        }
    }
    out.dropped_rows = static_cast<std::size_t>(hi - lo + 1) - kept.size();
    return out;
}

} // namespace fxlab
