#include "dpm/predictors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dpm {

double noisy_prediction(double length, double sigma, double z) {
    return std::max(0.0, length + sigma * z);
}

SharePredictor make_share_predictor(double max_period, double rate, double share) {
    if (max_period <= 0.0)
        throw std::domain_error("make_share_predictor: max_period must be positive");
    constexpr int kExperts = 64;
    const double lo = 0.01 * max_period;
    const double hi = 4.0 * max_period;
    SharePredictor s;
    s.durations.resize(kExperts);
    const double step = std::log(hi / lo) / (kExperts - 1);
    for (int i = 0; i < kExperts; ++i) s.durations[i] = lo * std::exp(step * i);
    s.weights.assign(kExperts, 1.0 / kExperts);
    s.rate = rate;
    s.share = share;
    s.loss_cap = hi - lo;
    return s;
}

double share_predict(const SharePredictor& s) {
    if (s.durations.empty())
        throw std::invalid_argument("share_predict: empty expert grid");
    double total = 0.0;
    for (double w : s.weights) total += w;
    double acc = 0.0;
    for (std::size_t i = 0; i < s.durations.size(); ++i) {
        acc += s.weights[i];
        if (acc >= 0.5 * total) return s.durations[i];
    }
    return s.durations.back();
}

void share_update(SharePredictor& s, double observed_length) {
    if (s.durations.empty())
        throw std::invalid_argument("share_update: empty expert grid");
    double total = 0.0;
    for (std::size_t i = 0; i < s.weights.size(); ++i) {
        const double loss =
            std::min(std::abs(s.durations[i] - observed_length), s.loss_cap);
        s.weights[i] *= std::exp(-s.rate * loss);
        total += s.weights[i];
    }
    const double pool = s.share * total / static_cast<double>(s.weights.size());
    double renorm = 0.0;
    for (double& w : s.weights) {
        w = (1.0 - s.share) * w + pool;
        renorm += w;
    }
    for (double& w : s.weights) w /= renorm;
}

}  // namespace dpm
