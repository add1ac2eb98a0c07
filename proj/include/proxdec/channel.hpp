#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace proxdec {

/// One operating point of the BPSK/AWGN channel.
struct ChannelPoint {
    double ebn0_db;
    double rate;
    double sigma;  // noise standard deviation per real dimension
};

/// sigma = sqrt(1 / (2 * rate * 10^(ebn0_db/10))). Throws on rate outside (0, 1].
double ebn0_to_sigma(double ebn0_db, double rate);

ChannelPoint make_channel_point(double ebn0_db, double rate);

/// x_i = 1 - 2 c_i.
std::vector<double> bpsk_map(std::span<const std::uint8_t> c);

/// y_i = x_i + sigma * z_i, z_i i.i.d. standard normal from rng.
std::vector<double> add_awgn(std::span<const double> x, double sigma, std::mt19937_64& rng);

/// 0.5 * sum (y_i - xt_i)^2; gradient in xt is exactly xt - y. The noise
/// variance is deliberately not included, its effect lives in the step size.
double neg_log_likelihood(std::span<const double> y, std::span<const double> xt);

}  // namespace proxdec
