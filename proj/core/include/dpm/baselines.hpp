#pragma once

#include "dpm/ski_rental.hpp"

namespace dpm {

// Follow-the-prediction: buy immediately iff the prediction says the season
// reaches the break-even point (ties buy).
BuyDistribution ftp(double tau);

// Deterministic break-even rule: buy at unit time 1.
BuyDistribution det_breakeven();

// Classical optimal randomized rule, e/(e-1)-competitive, prediction-free.
BuyDistribution rand_classic();

// Prediction-scaled randomized rule with trust parameter lambda in (0, 1]:
// density proportional to e^t on [0, lambda] when the prediction says buy,
// on [0, 1/lambda] otherwise.
BuyDistribution psk_rand(double tau, double lambda);

// Its competitive ratio on correctly-predicted buy instances.
double psk_consistency(double lambda);

// Trust parameter matching a target consistency (inverse of the above).
double psk_lambda_for(double rho);

// Deterministic prediction-scaled rule: buy at lambda if the prediction says
// buy, at 1/lambda otherwise. Consistency 1 + lambda, robustness 1 + 1/lambda.
BuyDistribution adjkr_det(double tau, double lambda);

double adjkr_lambda_for(double rho);

}  // namespace dpm
