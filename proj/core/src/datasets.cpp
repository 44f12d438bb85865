#include "dpm/datasets.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "dpm/rng.hpp"

namespace dpm {

using nlohmann::json;

IdleDataset gen_uniform(std::size_t n, double hi, std::uint64_t seed) {
    if (hi <= 0.0) throw std::domain_error("gen_uniform: hi must be positive");
    IdleDataset ds;
    ds.source = "uniform";
    ds.seed = seed;
    ds.lengths.resize(n);
    Rng rng(seed);
    for (auto& l : ds.lengths) l = rng.uniform(0.0, hi);
    return ds;
}

std::vector<double> extract_idle(const std::vector<double>& timestamps) {
    std::vector<double> gaps;
    for (std::size_t i = 1; i < timestamps.size(); ++i) {
        const double g = timestamps[i] - timestamps[i - 1];
        if (g < 0.0) throw std::invalid_argument("extract_idle: unsorted timestamps");
        if (g > 0.0) gaps.push_back(g);
    }
    return gaps;
}

std::vector<double> rescale(std::vector<double> gaps, double target_mean) {
    if (gaps.empty()) return gaps;
    double mean = 0.0;
    for (double g : gaps) mean += g;
    mean /= static_cast<double>(gaps.size());
    if (mean <= 0.0) throw std::domain_error("rescale: non-positive mean");
    const double f = target_mean / mean;
    for (double& g : gaps) g *= f;
    return gaps;
}

std::vector<double> load_trace(const std::string& path, const TraceFormat& fmt) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_trace: cannot open " + path);
    std::vector<double> ts;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::string field;
        if (fmt.delimiter == ' ') {
            std::istringstream ss(line);
            std::string tok;
            std::size_t col = 0;
            while (ss >> tok) {
                if (col++ == fmt.column) {
                    field = tok;
                    break;
                }
            }
        } else {
            std::istringstream ss(line);
            std::string tok;
            std::size_t col = 0;
            while (std::getline(ss, tok, fmt.delimiter)) {
                if (col++ == fmt.column) {
                    field = tok;
                    break;
                }
            }
        }
        try {
            if (field.empty()) throw std::invalid_argument("missing column");
            std::size_t pos = 0;
            const double v = std::stod(field, &pos);
            while (pos < field.size() && std::isspace(static_cast<unsigned char>(field[pos])))
                ++pos;
            if (pos != field.size()) throw std::invalid_argument("trailing junk");
            ts.push_back(v * fmt.unit);
        } catch (const std::exception&) {
            throw std::runtime_error("load_trace: " + path + ": unparseable line " +
                                     std::to_string(lineno));
        }
    }
    if (ts.empty()) throw std::runtime_error("load_trace: " + path + " is empty");
    std::sort(ts.begin(), ts.end());
    return ts;
}

void save_dataset(const IdleDataset& ds, const std::string& path) {
    if (!ds.predictions.empty() && ds.predictions.size() != ds.lengths.size())
        throw std::invalid_argument("save_dataset: misaligned predictions");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_dataset: cannot write " + path);
    json header = {{"meta", true},
                   {"source", ds.source},
                   {"seed", ds.seed},
                   {"scale", ds.scale},
                   {"count", ds.lengths.size()}};
    out << header.dump() << '\n';
    for (std::size_t i = 0; i < ds.lengths.size(); ++i) {
        json rec = {{"length", ds.lengths[i]}};
        if (!ds.predictions.empty()) rec["prediction"] = ds.predictions[i];
        out << rec.dump() << '\n';
    }
}

IdleDataset load_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_dataset: cannot open " + path);
    IdleDataset ds;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json rec = json::parse(line);
        if (!have_header) {
            if (!rec.value("meta", false))
                throw std::runtime_error("load_dataset: missing metadata record");
            ds.source = rec.value("source", std::string{});
            ds.seed = rec.value("seed", std::uint64_t{0});
            ds.scale = rec.value("scale", 1.0);
            have_header = true;
            continue;
        }
        ds.lengths.push_back(rec.at("length").get<double>());
        if (rec.contains("prediction"))
            ds.predictions.push_back(rec["prediction"].get<double>());
    }
    if (!have_header) throw std::runtime_error("load_dataset: empty file " + path);
    if (!ds.predictions.empty() && ds.predictions.size() != ds.lengths.size())
        throw std::runtime_error("load_dataset: misaligned predictions in " + path);
    return ds;
}

}  // namespace dpm
