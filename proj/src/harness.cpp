#include "proxdec/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "proxdec/channel.hpp"
#include "proxdec/rng.hpp"

namespace proxdec {

namespace {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

int worker_count(const SweepConfig& config) {
    if (config.threads > 0) return config.threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Runs fn(frame_index) for frames in [first, first+count) across workers.
// fn must only touch worker-local state keyed by its worker id.
template <typename Fn>
void parallel_frames(std::uint64_t first, std::uint64_t count, int workers, Fn&& fn) {
    if (workers <= 1) {
        for (std::uint64_t f = 0; f < count; ++f) fn(0, first + f);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::uint64_t f = w; f < count; f += workers) fn(w, first + f);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace

DecoderKind decoder_kind_from_string(const std::string& s) {
    if (s == "proximal") return DecoderKind::proximal;
    if (s == "improved") return DecoderKind::improved;
    if (s == "bp") return DecoderKind::bp;
    throw std::invalid_argument("unknown decoder: " + s);
}

std::string to_string(DecoderKind k) {
    switch (k) {
        case DecoderKind::proximal: return "proximal";
        case DecoderKind::improved: return "improved";
        case DecoderKind::bp: return "bp";
    }
    return "?";
}

LoadedCode prepare_code(ParityCheckCode code) {
    LoadedCode lc;
    lc.code = std::move(code);
    lc.gen = derive_generator(lc.code);
    lc.rate = lc.gen.rank_deficient ? lc.gen.true_rate() : lc.code.design_rate();
    return lc;
}

LoadedCode load_code(const std::string& path) { return prepare_code(parse_alist_file(path)); }

FrameResult simulate_frame(const LoadedCode& lc, const SweepConfig& config, double sigma,
                           std::size_t point_index, std::uint64_t frame_index) {
    std::mt19937_64 rng = frame_rng(config.master_seed, point_index, frame_index);

    FrameResult res;
    if (config.message_source == MessageSource::random_message) {
        BitWord u(lc.gen.k);
        for (auto& b : u) b = static_cast<std::uint8_t>(rng() & 1u);
        res.sent = encode(lc.gen, u);
    } else {
        res.sent.assign(lc.code.n, 0);
    }

    const std::vector<double> x = bpsk_map(res.sent);
    const std::vector<double> y = add_awgn(x, sigma, rng);

    switch (config.decoder) {
        case DecoderKind::proximal:
            res.outcome = decode_proximal(lc.code, y, config.params);
            break;
        case DecoderKind::improved:
            res.outcome = decode_improved(lc.code, y, config.params, config.list_bits);
            break;
        case DecoderKind::bp:
            res.outcome = decode_bp(lc.code, y, sigma, config.bp);
            break;
    }
    return res;
}

PointStats run_point(const LoadedCode& lc, const SweepConfig& config, double ebn0_db,
                     std::size_t point_index) {
    const double sigma = ebn0_to_sigma(ebn0_db, lc.rate);
    const int workers = worker_count(config);
    const auto t0 = std::chrono::steady_clock::now();

    PointStats stats;
    stats.ebn0_db = ebn0_db;

    struct Local {
        std::uint64_t bit_errors = 0, frame_errors = 0, failures = 0;
    };

    while (stats.frames < config.max_frames &&
           (config.min_frame_errors == 0 || stats.frame_errors < config.min_frame_errors)) {
        const std::uint64_t batch =
            std::min<std::uint64_t>(config.batch_size, config.max_frames - stats.frames);
        std::vector<Local> locals(workers);
        parallel_frames(stats.frames, batch, workers, [&](int w, std::uint64_t f) {
            const FrameResult res = simulate_frame(lc, config, sigma, point_index, f);
            std::uint64_t bits = 0;
            for (int i = 0; i < lc.code.n; ++i) bits += res.outcome.c_hat[i] != res.sent[i];
            locals[w].bit_errors += bits;
            locals[w].frame_errors += bits > 0;
            locals[w].failures += !res.outcome.converged;
        });
        for (const Local& l : locals) {
            stats.bit_errors += l.bit_errors;
            stats.frame_errors += l.frame_errors;
            stats.decoding_failures += l.failures;
        }
        stats.frames += batch;
    }

    stats.fer = static_cast<double>(stats.frame_errors) / stats.frames;
    stats.ber = static_cast<double>(stats.bit_errors) / (stats.frames * (double)lc.code.n);
    stats.dfr = static_cast<double>(stats.decoding_failures) / stats.frames;
    stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return stats;
}

SweepStats run_sweep(const SweepConfig& config) {
    return run_sweep(load_code(config.code_path), config);
}

SweepStats run_sweep(const LoadedCode& lc, const SweepConfig& config) {
    if (config.ebn0_grid.empty()) throw std::invalid_argument("empty Eb/N0 grid");
    if (config.max_frames < 1) throw std::invalid_argument("max_frames must be >= 1");
    SweepStats stats;
    for (std::size_t p = 0; p < config.ebn0_grid.size(); ++p)
        stats.points.push_back(run_point(lc, config, config.ebn0_grid[p], p));
    return stats;
}

std::string render_csv(const SweepStats& stats, bool include_timing) {
    std::ostringstream out;
    out << "ebn0_db,frames,bit_errors,frame_errors,decoding_failures,fer,ber,dfr,seconds\n";
    for (const PointStats& p : stats.points) {
        out << fmt_double(p.ebn0_db) << ',' << p.frames << ',' << p.bit_errors << ','
            << p.frame_errors << ',' << p.decoding_failures << ',' << fmt_double(p.fer) << ','
            << fmt_double(p.ber) << ',' << fmt_double(p.dfr) << ','
            << fmt_double(include_timing ? p.seconds : 0.0) << '\n';
    }
    return out.str();
}

SweepStats parse_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) ||
        line != "ebn0_db,frames,bit_errors,frame_errors,decoding_failures,fer,ber,dfr,seconds")
        throw std::runtime_error("bad sweep CSV header");
    SweepStats stats;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        PointStats p;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream row(line);
        if (!(row >> p.ebn0_db >> p.frames >> p.bit_errors >> p.frame_errors >>
              p.decoding_failures >> p.fer >> p.ber >> p.dfr >> p.seconds))
            throw std::runtime_error("bad sweep CSV row: " + line);
        stats.points.push_back(p);
    }
    return stats;
}

SweepStats parse_csv(const std::string& text) {
    std::istringstream in(text);
    return parse_csv(in);
}

ProfileStats error_position_profile(const LoadedCode& lc, const SweepConfig& config,
                                    double ebn0_db, std::uint64_t target_failures) {
    const double sigma = ebn0_to_sigma(ebn0_db, lc.rate);
    const int workers = worker_count(config);
    const int n = lc.code.n;

    SweepConfig cfg = config;
    cfg.decoder = DecoderKind::proximal;  // failures are profiled before list correction

    ProfileStats stats;
    stats.rank_errors.assign(n, 0);

    struct Local {
        std::uint64_t failures = 0;
        std::vector<std::uint64_t> rank_errors;
    };

    while (stats.frames < cfg.max_frames && stats.failures < target_failures) {
        const std::uint64_t batch =
            std::min<std::uint64_t>(cfg.batch_size, cfg.max_frames - stats.frames);
        std::vector<Local> locals(workers);
        for (auto& l : locals) l.rank_errors.assign(n, 0);
        parallel_frames(stats.frames, batch, workers, [&](int w, std::uint64_t f) {
            const FrameResult res = simulate_frame(lc, cfg, sigma, 0, f);
            if (res.outcome.converged) return;
            const std::vector<double> delta = oscillation_heights(res.outcome);
            const SuspectSet order = select_suspect_indices(delta, n);
            for (int rank = 0; rank < n; ++rank) {
                const int i = order.indices[rank];
                locals[w].rank_errors[rank] += res.outcome.c_hat[i] != res.sent[i];
            }
            ++locals[w].failures;
        });
        for (const Local& l : locals) {
            stats.failures += l.failures;
            for (int r = 0; r < n; ++r) stats.rank_errors[r] += l.rank_errors[r];
        }
        stats.frames += batch;
    }
    return stats;
}

std::string render_profile_csv(const ProfileStats& stats) {
    std::ostringstream out;
    out << "rank,errors,failures,probability\n";
    for (std::size_t r = 0; r < stats.rank_errors.size(); ++r) {
        out << r + 1 << ',' << stats.rank_errors[r] << ',' << stats.failures << ','
            << fmt_double(stats.probability(r)) << '\n';
    }
    return out.str();
}

void trace_run(const LoadedCode& lc, const SweepConfig& config, double ebn0_db,
               std::uint64_t frame_seed, const std::vector<int>& watch_indices,
               std::ostream& out) {
    for (int i : watch_indices) {
        if (i < 0 || i >= lc.code.n)
            throw std::invalid_argument("watch index out of range: " + std::to_string(i + 1));
    }
    const double sigma = ebn0_to_sigma(ebn0_db, lc.rate);
    std::mt19937_64 rng = frame_rng(config.master_seed, 0, frame_seed);

    BitWord sent;
    if (config.message_source == MessageSource::random_message) {
        BitWord u(lc.gen.k);
        for (auto& b : u) b = static_cast<std::uint8_t>(rng() & 1u);
        sent = encode(lc.gen, u);
    } else {
        sent.assign(lc.code.n, 0);
    }
    const std::vector<double> y = add_awgn(bpsk_map(sent), sigma, rng);

    out << "iteration,index,s,r,grad_L,grad_h\n";
    const TraceSink sink = [&](int iter, std::span<const double> r, std::span<const double> s,
                               std::span<const double> gl, std::span<const double> gh) {
        for (int i : watch_indices) {
            out << iter << ',' << i + 1 << ',' << fmt_double(s[i]) << ',' << fmt_double(r[i])
                << ',' << fmt_double(gl[i]) << ',' << fmt_double(gh[i]) << '\n';
        }
    };
    decode_proximal(lc.code, y, config.params, sink);
}

}  // namespace proxdec
