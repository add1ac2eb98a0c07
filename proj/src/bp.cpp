#include "proxdec/bp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace proxdec {

namespace {

double atanh_clipped(double t) {
    // keep atanh finite when a product saturates
    t = std::clamp(t, -1.0 + 1e-15, 1.0 - 1e-15);
    return std::atanh(t);
}

}  // namespace

DecodeOutcome decode_bp(const ParityCheckCode& code, std::span<const double> y, double sigma,
                        const BpParams& params) {
    if (static_cast<int>(y.size()) != code.n) throw std::invalid_argument("decode_bp: |y| != n");
    if (!(sigma > 0.0)) throw std::invalid_argument("decode_bp: sigma must be > 0");
    if (params.max_iters < 1 || !(params.llr_clip > 0.0))
        throw std::invalid_argument("decode_bp: bad params");

    const int n = code.n, m = code.m;
    const double clip = params.llr_clip;

    // CSR edge layout, check-major.
    std::vector<int> row_start(m + 1, 0);
    for (int j = 0; j < m; ++j) row_start[j + 1] = row_start[j] + (int)code.check_neighbors[j].size();
    const int n_edges = row_start[m];
    std::vector<int> edge_var(n_edges);
    std::vector<std::vector<int>> var_edges(n);
    for (int j = 0; j < m; ++j) {
        int e = row_start[j];
        for (int i : code.check_neighbors[j]) {
            edge_var[e] = i;
            var_edges[i].push_back(e);
            ++e;
        }
    }

    std::vector<double> channel(n);
    for (int i = 0; i < n; ++i) channel[i] = std::clamp(2.0 * y[i] / (sigma * sigma), -clip, clip);

    std::vector<double> v2c(n_edges), c2v(n_edges, 0.0);
    for (int e = 0; e < n_edges; ++e) v2c[e] = channel[edge_var[e]];
    std::vector<double> posterior = channel;

    DecodeOutcome out;
    auto decide = [&](int iter) {
        BitWord c(n);
        for (int i = 0; i < n; ++i) c[i] = posterior[i] <= 0.0 ? 1 : 0;
        if (in_code(code, c)) {
            out.c_hat = std::move(c);
            out.converged = true;
            out.iterations = iter;
            out.s_final = posterior;
            return true;
        }
        out.c_hat = std::move(c);
        return false;
    };

    std::vector<double> t, prefix, suffix;
    for (int iter = 1; iter <= params.max_iters; ++iter) {
        if (decide(iter)) return out;

        // check-node update, tanh rule with exclusion via prefix/suffix
        for (int j = 0; j < m; ++j) {
            const int lo = row_start[j], hi = row_start[j + 1], d = hi - lo;
            t.assign(d, 0.0);
            for (int k = 0; k < d; ++k) t[k] = std::tanh(0.5 * v2c[lo + k]);
            prefix.assign(d + 1, 1.0);
            suffix.assign(d + 1, 1.0);
            for (int k = 0; k < d; ++k) prefix[k + 1] = prefix[k] * t[k];
            for (int k = d; k > 0; --k) suffix[k - 1] = suffix[k] * t[k - 1];
            for (int k = 0; k < d; ++k)
                c2v[lo + k] = std::clamp(2.0 * atanh_clipped(prefix[k] * suffix[k + 1]), -clip, clip);
        }
        // variable-node update and posterior
        for (int i = 0; i < n; ++i) {
            double total = channel[i];
            for (int e : var_edges[i]) total += c2v[e];
            posterior[i] = std::clamp(total, -clip, clip);
            for (int e : var_edges[i]) v2c[e] = std::clamp(total - c2v[e], -clip, clip);
        }
    }
    if (decide(params.max_iters)) return out;

    out.converged = false;
    out.iterations = params.max_iters;
    out.s_final = posterior;
    return out;
}

}  // namespace proxdec
