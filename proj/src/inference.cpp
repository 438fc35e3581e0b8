#include "fxlab/inference.hpp"

#include <algorithm>
#include <cctype>

#include "fxlab/dataset.hpp"
#include "fxlab/errors.hpp"
#include "fxlab/stats.hpp"

namespace fxlab {

namespace {

const TimeSeries& find_series(const SeriesMap& data, const std::string& name) {
    auto it = data.find(name);
    if (it == data.end())
        throw DataError("no series named '" + name + "' in the data set");
    return it->second;
}

// Mixed-frequency inputs are harmonized to quarterly by step repetition.
TimeSeries harmonized(const TimeSeries& s, Frequency target) {
    if (s.frequency() == target) return s;
    if (s.frequency() == Frequency::Annual && target == Frequency::Quarterly)
        return annual_to_quarterly(s);
    throw DataError("series '" + s.name() + "' cannot be harmonized to the "
                    "common frequency");
}

TimeSeries transformed_control(const ControlSpec& c, const TimeSeries& s) {
    switch (c.transform) {
        case Transform::Level:
            return s;
        case Transform::YoY:
            // Keeps the source name; the transform is declared per control,
            // so the column stays addressable by its CSV name.
            return pct_change_yoy(s).renamed(s.name());
        case Transform::Log:
            return natural_log(s);
    }
    throw DataError("unknown control transform");
}

std::string key_lag_name(const std::string& base, int j) {
    return j == 1 ? base + " lag" : base + " lag" + std::to_string(j);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

} // namespace

DesignMatrix build_ardl_design(const ArdlSpec& spec, const SeriesMap& data) {
    if (spec.ar_order < 0 || spec.key_regressor_lags < 0)
        throw DataError("build_ardl_design: lag orders must be nonnegative");
    for (const auto& c : spec.controls)
        if (c.series == spec.dependent)
            throw DataError("build_ardl_design: dependent '" + spec.dependent +
                            "' cannot appear among the controls");

    Frequency freq = Frequency::Annual;
    {
        std::vector<std::string> names{spec.dependent, spec.key_regressor};
        for (const auto& c : spec.controls) names.push_back(c.series);
        for (const auto& n : names)
            if (find_series(data, n).frequency() == Frequency::Quarterly)
                freq = Frequency::Quarterly;
    }

    TimeSeries dep = harmonized(find_series(data, spec.dependent), freq);
    TimeSeries key = harmonized(find_series(data, spec.key_regressor), freq);

    std::vector<TimeSeries> columns;
    columns.push_back(dep);
    for (const auto& c : spec.controls)
        columns.push_back(transformed_control(c, harmonized(find_series(data, c.series), freq)));
    columns.push_back(key);
    for (int j = 1; j <= spec.key_regressor_lags; ++j)
        columns.push_back(lag(key, j).renamed(key_lag_name(key.name(), j)));
    for (int j = 1; j <= spec.ar_order; ++j)
        columns.push_back(lag(dep, j).renamed("AR[" + std::to_string(j) + "]"));

    AlignedSample aligned = align_listwise(columns);

    DesignMatrix d;
    d.dependent_name = dep.name();
    d.has_intercept = spec.intercept;
    const Eigen::Index n = aligned.values.rows();
    const Eigen::Index m = aligned.values.cols() - 1;
    const Eigen::Index k = m + (spec.intercept ? 1 : 0);
    d.y = aligned.values.col(0);
    d.X.resize(n, k);
    Eigen::Index col = 0;
    if (spec.intercept) {
        d.X.col(0).setOnes();
        d.column_names.push_back("constant");
        col = 1;
    }
    for (Eigen::Index j = 0; j < m; ++j) {
        d.X.col(col + j) = aligned.values.col(j + 1);
        d.column_names.push_back(aligned.names[static_cast<std::size_t>(j + 1)]);
    }
    return d;
}

OlsFit fit_ardl(const ArdlSpec& spec, const SeriesMap& data) {
    return ols_fit(build_ardl_design(spec, data));
}

std::vector<GrangerResult> granger_test(const TimeSeries& cause,
                                        const TimeSeries& effect, int max_lag) {
    if (max_lag < 1)
        throw DataError("granger_test: max_lag must be >= 1");

    {
        AlignedSample overlap = align_listwise({effect, cause});
        if (overlap.values.rows() <= 2 * max_lag + 2)
            throw DataError("granger_test: overlap of '" + cause.name() + "' and '" +
                            effect.name() + "' too short for max_lag " +
                            std::to_string(max_lag));
    }

    std::vector<GrangerResult> out;
    out.reserve(static_cast<std::size_t>(max_lag));
    for (int p = 1; p <= max_lag; ++p) {
        std::vector<TimeSeries> columns;
        columns.push_back(effect);
        for (int j = 1; j <= p; ++j) columns.push_back(lag(effect, j));
        for (int j = 1; j <= p; ++j) columns.push_back(lag(cause, j));
        AlignedSample aligned = align_listwise(columns);

        const Eigen::Index n = aligned.values.rows();
        const int df2 = static_cast<int>(n) - 2 * p - 1;
        if (df2 < 1)
            throw DataError("granger_test: insufficient data at lag " +
                            std::to_string(p) + " (" + std::to_string(n) + " rows)");

        DesignMatrix unrestricted;
        unrestricted.dependent_name = effect.name();
        unrestricted.has_intercept = true;
        unrestricted.y = aligned.values.col(0);
        unrestricted.X.resize(n, 2 * p + 1);
        unrestricted.X.col(0).setOnes();
        unrestricted.column_names.push_back("constant");
        for (int j = 0; j < 2 * p; ++j) {
            unrestricted.X.col(j + 1) = aligned.values.col(j + 1);
            unrestricted.column_names.push_back(aligned.names[static_cast<std::size_t>(j + 1)]);
        }

        double rss_u = ols_fit(unrestricted).rss;
        std::vector<std::string> cause_lags(unrestricted.column_names.begin() + 1 + p,
                                            unrestricted.column_names.end());
        double rss_r = restricted_rss(unrestricted, cause_lags);

        double f = ((rss_r - rss_u) / static_cast<double>(p)) /
                   (rss_u / static_cast<double>(df2));
        f = std::max(f, 0.0);

        GrangerResult r;
        r.lag = p;
        r.f_stat = f;
        r.df1 = p;
        r.df2 = df2;
        r.nobs_effective = static_cast<long>(n);
        r.p_value = 1.0 - f_cdf(f, static_cast<double>(p), static_cast<double>(df2));
        out.push_back(r);
    }
    return out;
}

int default_battery_max_lag(const std::string& country) {
    std::string c = lower(country);
    if (c == "china") return 5;
    if (c == "argentina" || c == "indonesia") return 9;
    return 7;
}

std::vector<BatteryEntry> replication_battery(const std::vector<BatteryCountry>& countries) {
    std::vector<BatteryEntry> out;
    out.reserve(countries.size());
    for (const auto& c : countries) {
        BatteryEntry entry;
        entry.country = c.name;
        entry.cause = c.cause_column;
        entry.effect = c.effect_column;
        try {
            Dataset ds = load_csv(c.csv_path);
            const TimeSeries& cause = ds.column(c.cause_column);
            const TimeSeries& effect = ds.column(c.effect_column);
            int max_lag = c.max_lag > 0 ? c.max_lag : default_battery_max_lag(c.name);
            entry.results = granger_test(cause, effect, max_lag);
        } catch (const std::exception& e) {
            entry.error = e.what();
        }
        out.push_back(std::move(entry));
    }
    return out;
}

} // namespace fxlab
