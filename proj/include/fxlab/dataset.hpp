#pragma once

#include <map>
#include <string>
#include <vector>

#include "fxlab/series.hpp"

namespace fxlab {

// Columnar result of loading a CSV panel: one named series per non-period
// column, all sharing the file's frequency and start period.
class Dataset {
public:
    Dataset(std::string source, Frequency frequency,
            std::vector<std::string> column_order,
            std::map<std::string, TimeSeries> columns);

    const std::string& source() const { return source_; }
    Frequency frequency() const { return frequency_; }
    const std::vector<std::string>& column_names() const { return column_order_; }

    bool has_column(const std::string& name) const;
    const TimeSeries& column(const std::string& name) const;

private:
    std::string source_;
    Frequency frequency_;
    std::vector<std::string> column_order_;
    std::map<std::string, TimeSeries> columns_;
};

// First column holds period keys ("2004-Q3" quarterly, "2004" annual), the
// remaining columns decimal values. Empty cells and gaps in the chronology
// load as missing observations. Malformed keys, non-numeric cells, duplicate
// and out-of-order periods raise DataError naming the offending line.
Dataset load_csv(const std::string& path);

} // namespace fxlab
