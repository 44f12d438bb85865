#pragma once

#include <vector>

namespace dpm {

// Noisy oracle: the true length plus Gaussian noise, clamped at zero.
double noisy_prediction(double length, double sigma, double z);

// Multiplicative-weights predictor over a fixed grid of candidate durations.
// Positive rate rewards experts close to the observed length; a negated rate
// produces an adversarially bad predictor with the same dynamics.
struct SharePredictor {
    std::vector<double> durations;  // increasing
    std::vector<double> weights;    // positive
    double rate = 0.5;
    double share = 0.05;
    double loss_cap = 0.0;  // cap on |duration - observed|
};

// 64 log-spaced durations spanning [0.01, 4] x max_period.
SharePredictor make_share_predictor(double max_period, double rate = 0.5,
                                    double share = 0.05);

// Weighted median of the candidate durations.
double share_predict(const SharePredictor& s);

void share_update(SharePredictor& s, double observed_length);

}  // namespace dpm
