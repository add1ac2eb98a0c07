#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "proxdec/ldpc_code.hpp"

namespace proxdec {

struct DecoderParams {
    double gamma = 0.05;  // code-constraint step size
    double omega = 0.05;  // channel step size
    double eta = 1.5;     // hypercube projection radius
    int max_iters = 200;
};

/// Gradients of h from the final two iterations of a non-converged decode;
/// their componentwise difference is the oscillation height.
struct GradTail {
    std::vector<double> prev;  // iteration K-1
    std::vector<double> last;  // iteration K
};

struct DecodeOutcome {
    BitWord c_hat;
    bool converged = false;
    int iterations = 0;
    std::optional<GradTail> grad_tail;  // present iff not converged
    std::vector<double> s_final;
};

/// Code-constraint polynomial: sum_i (x_i^2 - 1)^2 + sum_j (prod_{N_c(j)} x_i - 1)^2.
/// Zero exactly at bipolar images of codewords, which are its local minima.
double eval_h(const ParityCheckCode& code, std::span<const double> x);

/// Exact gradient of eval_h. The parity term uses products-with-exclusion
/// (prefix/suffix products per check), so it stays well defined when some
/// component is zero, as at the s = 0 initialization.
void grad_h(const ParityCheckCode& code, std::span<const double> x, std::vector<double>& out);
std::vector<double> grad_h(const ParityCheckCode& code, std::span<const double> x);

/// Componentwise s - y.
std::vector<double> grad_L(std::span<const double> s, std::span<const double> y);

/// Componentwise clamp to [-eta, eta]; idempotent.
std::vector<double> project_hypercube(std::span<const double> v, double eta);

/// c_i = 1 if s_i <= 0 else 0 (equality maps to 1).
BitWord hard_decision(std::span<const double> s);

/// Diagnostic objective L(y|x) + gamma h(x); never used by the iteration.
double objective_g(const ParityCheckCode& code, std::span<const double> y,
                   std::span<const double> x, double gamma);

/// Per-iteration observer: r and s after their updates, grad_L evaluated at
/// the pre-update s, grad_h evaluated at r.
using TraceSink = std::function<void(int iter, std::span<const double> r,
                                     std::span<const double> s, std::span<const double> gl,
                                     std::span<const double> gh)>;

/// Two alternating gradient steps with hypercube projection, hard decision
/// and syndrome check every iteration. Non-convergence is a normal outcome;
/// the outcome then carries the last two h-gradients.
DecodeOutcome decode_proximal(const ParityCheckCode& code, std::span<const double> y,
                              const DecoderParams& params, const TraceSink& trace = {});

}  // namespace proxdec
