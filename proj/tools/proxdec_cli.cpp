#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "proxdec/channel.hpp"
#include "proxdec/harness.hpp"

namespace {

using namespace proxdec;

// Accepts "start:step:stop", a comma list, or a single value.
std::vector<double> parse_grid(const std::string& spec) {
    std::vector<double> grid;
    if (spec.find(':') != std::string::npos) {
        double start, step, stop;
        char c1, c2;
        std::istringstream in(spec);
        if (!(in >> start >> c1 >> step >> c2 >> stop) || c1 != ':' || c2 != ':' || step <= 0)
            throw CLI::ValidationError("--ebn0", "expected start:step:stop with step > 0");
        for (double v = start; v <= stop + 1e-9; v += step) grid.push_back(v);
    } else {
        std::istringstream in(spec);
        std::string tok;
        while (std::getline(in, tok, ',')) grid.push_back(std::stod(tok));
    }
    if (grid.empty()) throw CLI::ValidationError("--ebn0", "empty grid");
    return grid;
}

std::vector<int> parse_int_list(const std::string& spec) {
    std::vector<int> out;
    std::istringstream in(spec);
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

void add_decoder_params(CLI::App* cmd, SweepConfig& cfg, bool single_list_bits = true) {
    cmd->add_option("--gamma", cfg.params.gamma, "code-constraint step size")->capture_default_str();
    cmd->add_option("--omega", cfg.params.omega, "channel step size")->capture_default_str();
    cmd->add_option("--eta", cfg.params.eta, "projection radius")->capture_default_str();
    cmd->add_option("--max-iters", cfg.params.max_iters, "iteration cap K")->capture_default_str();
    if (single_list_bits)
        cmd->add_option("--list-bits", cfg.list_bits, "list size exponent N (improved)")->capture_default_str();
    cmd->add_option("--bp-iters", cfg.bp.max_iters, "BP iteration cap")->capture_default_str();
    cmd->add_option("--llr-clip", cfg.bp.llr_clip, "BP message clip")->capture_default_str();
    cmd->add_option("--threads", cfg.threads, "worker threads (0 = all cores)")->capture_default_str();
    cmd->add_option("--message-source", [&cfg](const std::vector<std::string>& v) {
            if (v[0] == "all-zero") cfg.message_source = MessageSource::all_zero;
            else if (v[0] == "random") cfg.message_source = MessageSource::random_message;
            else return false;
            return true;
        }, "all-zero | random (default random)");
}

int cmd_decode(const SweepConfig& cfg, double ebn0) {
    const LoadedCode lc = load_code(cfg.code_path);
    const double sigma = ebn0_to_sigma(ebn0, lc.rate);
    const FrameResult res = simulate_frame(lc, cfg, sigma, 0, 0);

    std::uint64_t bit_errors = 0;
    for (int i = 0; i < lc.code.n; ++i) bit_errors += res.outcome.c_hat[i] != res.sent[i];
    std::cout << "decoder: " << to_string(cfg.decoder) << "\n"
              << "n: " << lc.code.n << "  m: " << lc.code.m << "  k: " << lc.gen.k
              << "  rate: " << lc.rate << "  sigma: " << sigma << "\n"
              << "converged: " << (res.outcome.converged ? "yes" : "no")
              << "  iterations: " << res.outcome.iterations << "\n"
              << "bit errors vs sent: " << bit_errors << "\n"
              << "frame " << (bit_errors == 0 ? "correct" : "in error") << "\n";
    std::cout << "c_hat:";
    for (auto b : res.outcome.c_hat) std::cout << int(b);
    std::cout << "\n";
    return bit_errors == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Proximal, list-improved and BP decoding of LDPC codes over AWGN"};
    app.require_subcommand(1);

    SweepConfig cfg;
    std::string ebn0_spec, out_path, watch_spec = "1", nlist_spec = "4,6,8,10,12";
    std::string decoder_name = "proximal";
    std::uint64_t failures_target = 10000;
    bool timing = false;

    auto add_common = [&](CLI::App* cmd, bool needs_decoder, bool single_list_bits = true) {
        cmd->add_option("--code", cfg.code_path, "alist file")->required();
        cmd->add_option("--ebn0", ebn0_spec, "Eb/N0 in dB (start:step:stop or list)")->required();
        cmd->add_option("--seed", cfg.master_seed, "master seed")->capture_default_str();
        if (needs_decoder)
            cmd->add_option("--decoder", decoder_name, "proximal | improved | bp")->capture_default_str();
        add_decoder_params(cmd, cfg, single_list_bits);
    };

    CLI::App* decode = app.add_subcommand("decode", "decode a single simulated frame");
    add_common(decode, true);

    CLI::App* sweep = app.add_subcommand("sweep", "Monte Carlo FER/BER/DFR sweep");
    add_common(sweep, true);
    sweep->add_option("--min-frame-errors", cfg.min_frame_errors)->capture_default_str();
    sweep->add_option("--max-frames", cfg.max_frames)->capture_default_str();
    sweep->add_option("--out", out_path, "output CSV")->required();
    sweep->add_flag("--timing", timing, "include wall time in CSV (breaks byte-reproducibility)");

    CLI::App* profile = app.add_subcommand("profile", "error probability by oscillation-height rank");
    add_common(profile, false);
    profile->add_option("--failures", failures_target, "decoding failures to collect")->capture_default_str();
    profile->add_option("--max-frames", cfg.max_frames)->capture_default_str();
    profile->add_option("--out", out_path, "output CSV")->required();

    CLI::App* trace = app.add_subcommand("trace", "per-iteration trace of one proximal decode");
    add_common(trace, false);
    trace->add_option("--watch", watch_spec, "1-based variable indices, comma separated")->capture_default_str();
    trace->add_option("--out", out_path, "output CSV")->required();

    CLI::App* nsweep = app.add_subcommand("nsweep", "improved-decoder sweep over list sizes N");
    add_common(nsweep, false, /*single_list_bits=*/false);
    nsweep->add_option("--list-bits", nlist_spec, "comma list of N values")->capture_default_str();
    nsweep->add_option("--min-frame-errors", cfg.min_frame_errors)->capture_default_str();
    nsweep->add_option("--max-frames", cfg.max_frames)->capture_default_str();
    nsweep->add_option("--out", out_path, "output CSV")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        cfg.decoder = decoder_kind_from_string(decoder_name);
        const std::vector<double> grid = parse_grid(ebn0_spec);
        cfg.ebn0_grid = grid;

        if (decode->parsed()) return cmd_decode(cfg, grid.front());

        if (sweep->parsed()) {
            const SweepStats stats = run_sweep(cfg);
            write_file(out_path, render_csv(stats, timing));
            std::cout << render_csv(stats, true);
            return 0;
        }
        if (profile->parsed()) {
            const LoadedCode lc = load_code(cfg.code_path);
            const ProfileStats stats = error_position_profile(lc, cfg, grid.front(), failures_target);
            if (stats.failures < failures_target)
                std::cerr << "warning: collected only " << stats.failures << " of "
                          << failures_target << " failures within --max-frames\n";
            write_file(out_path, render_profile_csv(stats));
            std::cout << "failures: " << stats.failures << "  frames: " << stats.frames << "\n";
            return 0;
        }
        if (trace->parsed()) {
            const LoadedCode lc = load_code(cfg.code_path);
            std::vector<int> watch = parse_int_list(watch_spec);
            for (int& i : watch) --i;  // CLI is 1-based
            std::ostringstream buf;
            trace_run(lc, cfg, grid.front(), /*frame_seed=*/0, watch, buf);
            write_file(out_path, buf.str());
            return 0;
        }
        if (nsweep->parsed()) {
            const LoadedCode lc = load_code(cfg.code_path);
            cfg.decoder = DecoderKind::improved;
            std::ostringstream out;
            out << "list_bits,ebn0_db,frames,bit_errors,frame_errors,decoding_failures,fer,ber,dfr,seconds\n";
            for (int nbits : parse_int_list(nlist_spec)) {
                SweepConfig c = cfg;
                c.list_bits = nbits;
                const SweepStats stats = run_sweep(lc, c);
                std::istringstream rows(render_csv(stats));
                std::string line;
                std::getline(rows, line);  // header
                while (std::getline(rows, line))
                    if (!line.empty()) out << nbits << ',' << line << '\n';
            }
            write_file(out_path, out.str());
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
