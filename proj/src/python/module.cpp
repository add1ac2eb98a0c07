#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "proxdec/bp.hpp"
#include "proxdec/channel.hpp"
#include "proxdec/harness.hpp"
#include "proxdec/list_decoder.hpp"
#include "proxdec/proximal.hpp"
#include "proxdec/rng.hpp"

namespace py = pybind11;
using namespace proxdec;

PYBIND11_MODULE(_proxdec, m) {
    m.doc() = "Proximal, list-improved and BP decoding of LDPC codes over AWGN";

    py::class_<ParityCheckCode>(m, "ParityCheckCode")
        .def_readonly("n", &ParityCheckCode::n)
        .def_readonly("m", &ParityCheckCode::m)
        .def_readonly("check_neighbors", &ParityCheckCode::check_neighbors)
        .def_readonly("var_neighbors", &ParityCheckCode::var_neighbors)
        .def_property_readonly("design_rate", &ParityCheckCode::design_rate);

    py::class_<GeneratorMatrix>(m, "GeneratorMatrix")
        .def_readonly("n", &GeneratorMatrix::n)
        .def_readonly("k", &GeneratorMatrix::k)
        .def_readonly("rows", &GeneratorMatrix::rows)
        .def_readonly("rank_deficient", &GeneratorMatrix::rank_deficient);

    py::class_<DecoderParams>(m, "DecoderParams")
        .def(py::init<>())
        .def_readwrite("gamma", &DecoderParams::gamma)
        .def_readwrite("omega", &DecoderParams::omega)
        .def_readwrite("eta", &DecoderParams::eta)
        .def_readwrite("max_iters", &DecoderParams::max_iters);

    py::class_<BpParams>(m, "BpParams")
        .def(py::init<>())
        .def_readwrite("max_iters", &BpParams::max_iters)
        .def_readwrite("llr_clip", &BpParams::llr_clip);

    py::class_<GradTail>(m, "GradTail")
        .def_readonly("prev", &GradTail::prev)
        .def_readonly("last", &GradTail::last);

    py::class_<DecodeOutcome>(m, "DecodeOutcome")
        .def_readonly("c_hat", &DecodeOutcome::c_hat)
        .def_readonly("converged", &DecodeOutcome::converged)
        .def_readonly("iterations", &DecodeOutcome::iterations)
        .def_readonly("grad_tail", &DecodeOutcome::grad_tail)
        .def_readonly("s_final", &DecodeOutcome::s_final);

    m.def("parse_alist", py::overload_cast<const std::string&>(&parse_alist),
          py::arg("text"));
    m.def("parse_alist_file", &parse_alist_file, py::arg("path"));
    m.def("render_alist", &render_alist);
    m.def("make_code", &make_code, py::arg("n"), py::arg("check_neighbors"));
    m.def("syndrome",
          [](const ParityCheckCode& c, const BitWord& w) { return syndrome(c, w); });
    m.def("derive_generator", &derive_generator);
    m.def("encode", [](const GeneratorMatrix& g, const BitWord& u) { return encode(g, u); });
    m.def("enumerate_codewords", &enumerate_codewords);

    m.def("ebn0_to_sigma", &ebn0_to_sigma, py::arg("ebn0_db"), py::arg("rate"));
    m.def("bpsk_map", [](const BitWord& c) { return bpsk_map(c); });
    m.def("add_awgn",
          [](const std::vector<double>& x, double sigma, std::uint64_t seed) {
              std::mt19937_64 rng(seed);
              return add_awgn(x, sigma, rng);
          },
          py::arg("x"), py::arg("sigma"), py::arg("seed"));

    m.def("eval_h", [](const ParityCheckCode& c, const std::vector<double>& x) {
        return eval_h(c, x);
    });
    m.def("grad_h", [](const ParityCheckCode& c, const std::vector<double>& x) {
        return grad_h(c, x);
    });
    m.def("decode_proximal",
          [](const ParityCheckCode& c, const std::vector<double>& y, const DecoderParams& p) {
              return decode_proximal(c, y, p);
          },
          py::arg("code"), py::arg("y"), py::arg("params") = DecoderParams{});
    m.def("decode_improved",
          [](const ParityCheckCode& c, const std::vector<double>& y, const DecoderParams& p,
             int list_bits) { return decode_improved(c, y, p, list_bits); },
          py::arg("code"), py::arg("y"), py::arg("params") = DecoderParams{},
          py::arg("list_bits") = 8);
    m.def("decode_bp",
          [](const ParityCheckCode& c, const std::vector<double>& y, double sigma,
             const BpParams& p) { return decode_bp(c, y, sigma, p); },
          py::arg("code"), py::arg("y"), py::arg("sigma"), py::arg("params") = BpParams{});

    py::class_<PointStats>(m, "PointStats")
        .def_readonly("ebn0_db", &PointStats::ebn0_db)
        .def_readonly("frames", &PointStats::frames)
        .def_readonly("bit_errors", &PointStats::bit_errors)
        .def_readonly("frame_errors", &PointStats::frame_errors)
        .def_readonly("decoding_failures", &PointStats::decoding_failures)
        .def_readonly("fer", &PointStats::fer)
        .def_readonly("ber", &PointStats::ber)
        .def_readonly("dfr", &PointStats::dfr)
        .def_readonly("seconds", &PointStats::seconds);

    m.def("run_sweep",
          [](const std::string& code_path, const std::string& decoder,
             const std::vector<double>& ebn0_grid, std::uint64_t seed, std::uint64_t max_frames,
             std::uint64_t min_frame_errors, const DecoderParams& params, int list_bits,
             int threads) {
              SweepConfig cfg;
              cfg.code_path = code_path;
              cfg.decoder = decoder_kind_from_string(decoder);
              cfg.ebn0_grid = ebn0_grid;
              cfg.master_seed = seed;
              cfg.max_frames = max_frames;
              cfg.min_frame_errors = min_frame_errors;
              cfg.params = params;
              cfg.list_bits = list_bits;
              cfg.threads = threads;
              return run_sweep(cfg).points;
          },
          py::arg("code_path"), py::arg("decoder"), py::arg("ebn0_grid"), py::arg("seed") = 1,
          py::arg("max_frames") = 10'000'000, py::arg("min_frame_errors") = 100,
          py::arg("params") = DecoderParams{}, py::arg("list_bits") = 8, py::arg("threads") = 0,
          py::call_guard<py::gil_scoped_release>());

    m.def("oscillation_heights", &oscillation_heights);
}
