#include "proxdec/proximal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "proxdec/channel.hpp"

namespace proxdec {

double eval_h(const ParityCheckCode& code, std::span<const double> x) {
    if (static_cast<int>(x.size()) != code.n) throw std::invalid_argument("eval_h: |x| != n");
    double acc = 0.0;
    for (double v : x) {
        const double b = v * v - 1.0;
        acc += b * b;
    }
    for (const auto& row : code.check_neighbors) {
        double p = 1.0;
        for (int i : row) p *= x[i];
        const double d = p - 1.0;
        acc += d * d;
    }
    return acc;
}

void grad_h(const ParityCheckCode& code, std::span<const double> x, std::vector<double>& out) {
    if (static_cast<int>(x.size()) != code.n) throw std::invalid_argument("grad_h: |x| != n");
    out.assign(code.n, 0.0);
    for (int i = 0; i < code.n; ++i) out[i] = 4.0 * x[i] * (x[i] * x[i] - 1.0);

    // Parity term: d/dx_i (P_j - 1)^2 = 2 (P_j - 1) * prod_{i' != i} x_{i'}.
    // Prefix/suffix products keep the exclusion product exact at zeros.
    std::vector<double> prefix, suffix;
    for (const auto& row : code.check_neighbors) {
        const std::size_t d = row.size();
        prefix.assign(d + 1, 1.0);
        suffix.assign(d + 1, 1.0);
        for (std::size_t t = 0; t < d; ++t) prefix[t + 1] = prefix[t] * x[row[t]];
        for (std::size_t t = d; t > 0; --t) suffix[t - 1] = suffix[t] * x[row[t - 1]];
        const double scale = 2.0 * (prefix[d] - 1.0);
        for (std::size_t t = 0; t < d; ++t) out[row[t]] += scale * prefix[t] * suffix[t + 1];
    }
}

std::vector<double> grad_h(const ParityCheckCode& code, std::span<const double> x) {
    std::vector<double> g;
    grad_h(code, x, g);
    return g;
}

std::vector<double> grad_L(std::span<const double> s, std::span<const double> y) {
    if (s.size() != y.size()) throw std::invalid_argument("grad_L: length mismatch");
    std::vector<double> g(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) g[i] = s[i] - y[i];
    return g;
}

std::vector<double> project_hypercube(std::span<const double> v, double eta) {
    if (!(eta > 0.0)) throw std::invalid_argument("eta must be > 0");
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::clamp(v[i], -eta, eta);
    return out;
}

BitWord hard_decision(std::span<const double> s) {
    BitWord c(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) c[i] = s[i] <= 0.0 ? 1 : 0;
    return c;
}

double objective_g(const ParityCheckCode& code, std::span<const double> y,
                   std::span<const double> x, double gamma) {
    return neg_log_likelihood(y, x) + gamma * eval_h(code, x);
}

DecodeOutcome decode_proximal(const ParityCheckCode& code, std::span<const double> y,
                              const DecoderParams& params, const TraceSink& trace) {
    if (static_cast<int>(y.size()) != code.n) throw std::invalid_argument("decode_proximal: |y| != n");
    const int n = code.n;
    std::vector<double> s(n, 0.0), r(n), gl(n), gh_prev(n, 0.0), gh(n, 0.0);

    DecodeOutcome out;
    for (int iter = 1; iter <= params.max_iters; ++iter) {
        for (int i = 0; i < n; ++i) {
            gl[i] = s[i] - y[i];
            r[i] = s[i] - params.omega * gl[i];
        }
        std::swap(gh_prev, gh);
        grad_h(code, r, gh);
        for (int i = 0; i < n; ++i)
            s[i] = std::clamp(r[i] - params.gamma * gh[i], -params.eta, params.eta);

        if (trace) trace(iter, r, s, gl, gh);

        out.c_hat = hard_decision(s);
        out.iterations = iter;
        if (in_code(code, out.c_hat)) {
            out.converged = true;
            out.s_final = std::move(s);
            return out;
        }
    }
    out.converged = false;
    out.grad_tail = GradTail{std::move(gh_prev), std::move(gh)};
    out.s_final = std::move(s);
    return out;
}

}  // namespace proxdec
