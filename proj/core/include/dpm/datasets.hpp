#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dpm {

struct IdleDataset {
    std::vector<double> lengths;
    std::vector<double> predictions;  // empty or aligned with lengths
    std::string source;               // generator name or file
    std::uint64_t seed = 0;
    double scale = 1.0;
};

// n i.i.d. lengths uniform on [0, hi].
IdleDataset gen_uniform(std::size_t n, double hi, std::uint64_t seed);

// Gaps between successive timestamps; zero gaps dropped.
std::vector<double> extract_idle(const std::vector<double>& timestamps);

// Multiplies all gaps so the empirical mean hits target_mean.
std::vector<double> rescale(std::vector<double> gaps, double target_mean);

struct TraceFormat {
    char delimiter = ',';
    std::size_t column = 0;
    double unit = 1.0;  // seconds per input unit
};

// Timestamps in seconds, sorted; throws with the offending line number on
// parse failure.
std::vector<double> load_trace(const std::string& path, const TraceFormat& fmt);

// JSONL round-trip: first record is metadata, then one {length, prediction?}
// record per period.
void save_dataset(const IdleDataset& ds, const std::string& path);
IdleDataset load_dataset(const std::string& path);

}  // namespace dpm
