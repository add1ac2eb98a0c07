#include "proxdec/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace proxdec {

double ebn0_to_sigma(double ebn0_db, double rate) {
    if (!(rate > 0.0) || rate > 1.0) throw std::invalid_argument("rate must be in (0, 1]");
    return std::sqrt(1.0 / (2.0 * rate * std::pow(10.0, ebn0_db / 10.0)));
}

ChannelPoint make_channel_point(double ebn0_db, double rate) {
    return {ebn0_db, rate, ebn0_to_sigma(ebn0_db, rate)};
}

std::vector<double> bpsk_map(std::span<const std::uint8_t> c) {
    std::vector<double> x(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) x[i] = 1.0 - 2.0 * (c[i] & 1u);
    return x;
}

std::vector<double> add_awgn(std::span<const double> x, double sigma, std::mt19937_64& rng) {
    if (sigma < 0.0) throw std::invalid_argument("sigma must be >= 0");
    std::vector<double> y(x.begin(), x.end());
    if (sigma == 0.0) return y;
    std::normal_distribution<double> normal(0.0, 1.0);
    for (double& v : y) v += sigma * normal(rng);
    return y;
}

double neg_log_likelihood(std::span<const double> y, std::span<const double> xt) {
    if (y.size() != xt.size()) throw std::invalid_argument("length mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const double d = y[i] - xt[i];
        acc += d * d;
    }
    return 0.5 * acc;
}

}  // namespace proxdec
