#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "fxlab/series.hpp"

namespace testsup {

inline std::filesystem::path scratch_dir() {
    std::filesystem::path p(FXLAB_SCRATCH_DIR);
    std::filesystem::create_directories(p);
    return p;
}

inline std::string write_file(const std::string& name, const std::string& content) {
    const auto path = scratch_dir() / name;
    std::ofstream f(path);
    f << content;
    return path.string();
}

inline std::string read_file(const std::string& path) {
    std::ifstream f(path);
    return std::string(std::istreambuf_iterator<char>(f),
                       std::istreambuf_iterator<char>());
}

inline fxlab::TimeSeries quarterly(std::string name, std::vector<double> v,
                                   fxlab::Period start = {2000, 1}) {
    std::vector<std::optional<double>> slots(v.begin(), v.end());
    return fxlab::TimeSeries(std::move(name), fxlab::Frequency::Quarterly, start,
                             std::move(slots));
}

inline fxlab::TimeSeries quarterly_gappy(std::string name,
                                         std::vector<std::optional<double>> v,
                                         fxlab::Period start = {2000, 1}) {
    return fxlab::TimeSeries(std::move(name), fxlab::Frequency::Quarterly, start,
                             std::move(v));
}

inline fxlab::TimeSeries annual(std::string name, std::vector<double> v,
                                fxlab::Period start = {2000, 1}) {
    std::vector<std::optional<double>> slots(v.begin(), v.end());
    return fxlab::TimeSeries(std::move(name), fxlab::Frequency::Annual, start,
                             std::move(slots));
}

} // namespace testsup
