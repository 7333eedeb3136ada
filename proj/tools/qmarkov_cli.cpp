/* Copyright 2026 The qmarkov Authors. All Rights Reserved.
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at
    http://www.apache.org/licenses/LICENSE-2.0
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// qmarkov: command-line front-end over the qmarkov C API.
//
//   qmarkov check --input gen.json
//   qmarkov decompose --input gen.json --mode general|unital [--seed S]
//   qmarkov simulate --input gen.json --rho0 excited --tmax 5 --samples 51 [--trotter-steps 256]
//   qmarkov convert --input doc.json [--mode gks-to-affine|affine-to-gks] [--roundtrip]
//   qmarkov trotter-profile --input gen.json --tmax 1 --trotter-steps 4096 --samples 7
//
// Exit codes: 0 success, 1 invalid input semantics, 2 precondition or mode
// mismatch, 3 I/O or parse failure.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qmarkov/qmarkov.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitIo = 3;

struct Options {
  std::string input;
  std::string output;
  std::string mode;
  std::string rho0 = "ground";
  double tmax = 1.0;
  int samples = 0;
  std::size_t trotter_steps = 0;
  std::uint64_t seed = 0;
  bool roundtrip = false;
};

class Failure {
 public:
  Failure(int code, std::string message) : code_(code), message_(std::move(message)) {}
  int code() const { return code_; }
  const std::string& message() const { return message_; }

 private:
  int code_;
  std::string message_;
};

int exit_code_for(qm_status s) {
  switch (s) {
    case QM_OK: return kExitOk;
    case QM_ERR_PARSE:
    case QM_ERR_IO: return kExitIo;
    case QM_ERR_MODE_MISMATCH: return kExitPrecondition;
    default: return kExitInvalid;
  }
}

void check(qm_status s) {
  if (s != QM_OK) {
    throw Failure(exit_code_for(s), std::string(qm_status_name(s)) + ": " + qm_last_error());
  }
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using GeneratorPtr = std::unique_ptr<qm_generator, Deleter<qm_generator, qm_generator_free>>;
using AffinePtr = std::unique_ptr<qm_affine, Deleter<qm_affine, qm_affine_free>>;
using DecompositionPtr = std::unique_ptr<qm_decomposition, Deleter<qm_decomposition, qm_decomposition_free>>;
using ListPtr = std::unique_ptr<qm_generator_list, Deleter<qm_generator_list, qm_generator_list_free>>;
using StringPtr = std::unique_ptr<char, Deleter<char, qm_string_free>>;

// Shortest text that still carries 17 significant digits, independent of
// the C locale.
std::string num(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

GeneratorPtr load_generator(const std::string& path) {
  qm_generator* g = nullptr;
  check(qm_generator_load(path.c_str(), &g));
  return GeneratorPtr(g);
}

void emit(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw Failure(kExitIo, "cannot write to standard output");
    return;
  }
  std::ofstream out(opt.output, std::ios::binary);
  out << text;
  if (!out) throw Failure(kExitIo, "cannot write '" + opt.output + "'");
}

const char* basis_name(qm_basis_kind k) { return k == QM_BASIS_PAULI ? "pauli" : "gellmann"; }

int cmd_check(const Options& opt) {
  qm_generator* raw = nullptr;
  const qm_status s = qm_generator_load(opt.input.c_str(), &raw);
  if (s == QM_ERR_NOT_HERMITIAN) {
    emit(opt, std::string("valid: no (") + qm_last_error() + ")\n");
    return kExitInvalid;
  }
  check(s);
  GeneratorPtr g(raw);

  qm_check_report rep{};
  check(qm_generator_check(g.get(), &rep));
  const int n = qm_generator_size(g.get());
  std::vector<double> eig(static_cast<size_t>(n));
  check(qm_generator_gks_eigenvalues(g.get(), eig.data()));

  std::string out;
  out += "dim: " + std::to_string(qm_generator_dim(g.get())) + "\n";
  out += std::string("basis: ") + basis_name(qm_generator_basis(g.get())) + "\n";
  if (*qm_generator_metadata(g.get()) != '\0') {
    out += std::string("metadata: ") + qm_generator_metadata(g.get()) + "\n";
  }
  out += "hermiticity_defect: " + num(rep.hermiticity_defect) + "\n";
  out += "gks_eigenvalues:";
  for (double v : eig) out += " " + num(v);
  out += "\n";
  out += "min_eigenvalue: " + num(rep.min_eigenvalue) + " (eigenvalue " +
         std::to_string(rep.min_eigenvalue_index) + " of " + std::to_string(n) + ")\n";
  if (rep.valid) {
    out += "valid: yes\n";
  } else {
    out += "valid: no (eigenvalue " + std::to_string(rep.min_eigenvalue_index) + " is " +
           num(rep.min_eigenvalue) + ", negative by " + num(-rep.min_eigenvalue) + ")\n";
  }
  out += "unitality_residual: " + num(rep.unitality_residual) + "\n";
  out += std::string("unital: ") + (rep.unital ? "yes" : "no") + "\n";
  emit(opt, out);
  return rep.valid ? kExitOk : kExitInvalid;
}

nlohmann::ordered_json term_json(const qm_term_info& t) {
  nlohmann::ordered_json j;
  j["weight"] = t.weight;
  j["theta"] = t.theta;
  j["rotation"] = {{"axis", {t.axis[0], t.axis[1], t.axis[2]}}, {"angle", t.angle}};
  j["phase"] = t.phase;
  return j;
}

int cmd_decompose(const Options& opt) {
  const std::string mode = opt.mode.empty() ? "general" : opt.mode;
  if (mode != "general" && mode != "unital") {
    throw Failure(kExitPrecondition, "unknown decomposition mode '" + mode + "'");
  }
  GeneratorPtr g = load_generator(opt.input);
  qm_decomposition* raw = nullptr;
  check(mode == "unital" ? qm_decompose_unital(g.get(), &raw) : qm_decompose_general(g.get(), &raw));
  DecompositionPtr d(raw);

  nlohmann::ordered_json report;
  report["mode"] = mode;
  if (*qm_generator_metadata(g.get()) != '\0') report["metadata"] = qm_generator_metadata(g.get());
  std::vector<qm_term_info> terms(qm_decomposition_size(d.get()));
  for (size_t i = 0; i < terms.size(); ++i) check(qm_decomposition_term(d.get(), i, &terms[i]));
  if (mode == "unital") {
    double axis[3];
    double angle = 0.0;
    check(qm_decomposition_rotation(d.get(), axis, &angle));
    report["rotation"] = {{"axis", {axis[0], axis[1], axis[2]}}, {"angle", angle}};
    report["weights"] = nlohmann::ordered_json::array();
    for (const auto& t : terms) report["weights"].push_back(t.weight);
  }
  report["terms"] = nlohmann::ordered_json::array();
  for (const auto& t : terms) report["terms"].push_back(term_json(t));
  if (mode == "general") {
    constexpr int kTrials = 100;
    bool all_ok = true;
    for (size_t i = 0; i < terms.size(); ++i) {
      int ok = 0;
      check(qm_verify_canonical_uniqueness(terms[i].theta, terms[i].theta, kTrials, opt.seed + i, &ok));
      all_ok = all_ok && ok;
    }
    report["symmetry_check"] = {{"trials_per_term", kTrials}, {"seed", opt.seed}, {"passed", all_ok}};
  }
  const double residual = qm_decomposition_residual(d.get());
  report["residual"] = residual;
  emit(opt, report.dump(2) + "\n");
  if (!(residual < 1e-9)) {
    throw Failure(kExitInvalid, "reconstruction residual " + num(residual) + " exceeds 1e-9");
  }
  return kExitOk;
}

std::vector<std::string> coordinate_names(int dim) {
  if (dim == 2) return {"x", "y", "z"};
  std::vector<std::string> names;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const std::string ij = std::to_string(i) + std::to_string(j);
      names.push_back("re_" + ij);
      names.push_back("im_" + ij);
    }
  return names;
}

std::vector<double> coordinates(int dim, qm_basis_kind basis, const qm_complex* rho) {
  if (dim == 2) {
    std::vector<double> r(3);
    check(qm_bloch_vector(basis, rho, r.data()));
    return r;
  }
  std::vector<double> out;
  for (int k = 0; k < dim * dim; ++k) {
    out.push_back(rho[k].re);
    out.push_back(rho[k].im);
  }
  return out;
}

int cmd_simulate(const Options& opt) {
  if (opt.samples < 2) throw Failure(kExitPrecondition, "--samples must be at least 2");
  GeneratorPtr g = load_generator(opt.input);
  const int dim = qm_generator_dim(g.get());
  const qm_basis_kind basis = qm_generator_basis(g.get());
  const size_t d2 = static_cast<size_t>(dim * dim);

  std::vector<qm_complex> rho0(d2);
  check(qm_state_from_spec(dim, opt.rho0.c_str(), opt.seed, rho0.data()));

  std::vector<double> times(static_cast<size_t>(opt.samples));
  for (int i = 0; i < opt.samples; ++i) times[i] = opt.tmax * i / (opt.samples - 1);
  std::vector<qm_complex> states(times.size() * d2);
  check(qm_evolve(g.get(), rho0.data(), times.data(), times.size(), states.data()));

  ListPtr split;
  if (opt.trotter_steps > 0) {
    qm_generator_list* raw = nullptr;
    check(qm_primitive_split(g.get(), &raw));
    split.reset(raw);
  }

  const auto names = coordinate_names(dim);
  std::string out = "t";
  for (const auto& n : names) out += "," + n;
  if (split)
    for (const auto& n : names) out += "," + n + "_trotter";
  out += "\n";

  double max_dev = 0.0;
  std::vector<qm_complex> trotter(d2);
  for (size_t i = 0; i < times.size(); ++i) {
    const auto exact = coordinates(dim, basis, states.data() + i * d2);
    out += num(times[i]);
    for (double v : exact) out += "," + num(v);
    if (split) {
      check(qm_trotter_evolve_state(split.get(), times[i], opt.trotter_steps, rho0.data(), trotter.data()));
      const auto approx = coordinates(dim, basis, trotter.data());
      for (size_t k = 0; k < approx.size(); ++k) {
        out += "," + num(approx[k]);
        max_dev = std::max(max_dev, std::abs(approx[k] - exact[k]));
      }
    }
    out += "\n";
  }
  if (split) out += "max_deviation," + num(max_dev) + "\n";
  emit(opt, out);
  return kExitOk;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

std::vector<double> generator_entries(const qm_generator* g) {
  const int n = qm_generator_size(g);
  const int dim = qm_generator_dim(g);
  std::vector<qm_complex> a(static_cast<size_t>(n * n));
  std::vector<qm_complex> h(static_cast<size_t>(dim * dim));
  check(qm_generator_gks(g, a.data()));
  check(qm_generator_hamiltonian(g, h.data()));
  std::vector<double> out;
  for (const auto& z : a) out.insert(out.end(), {z.re, z.im});
  for (const auto& z : h) out.insert(out.end(), {z.re, z.im});
  return out;
}

std::vector<double> affine_entries(const qm_affine* a) {
  const size_t n = static_cast<size_t>(qm_affine_size(a));
  std::vector<double> out(n * n + n);
  check(qm_affine_get(a, out.data(), out.data() + n * n));
  return out;
}

StringPtr take(char* s) { return StringPtr(s); }

int cmd_convert(const Options& opt) {
  qm_document_kind kind{};
  check(qm_document_kind_of(opt.input.c_str(), &kind));
  if (!opt.mode.empty()) {
    if (opt.mode != "gks-to-affine" && opt.mode != "affine-to-gks") {
      throw Failure(kExitPrecondition, "unknown conversion '" + opt.mode + "'");
    }
    const bool want_affine_input = opt.mode == "affine-to-gks";
    if (want_affine_input != (kind == QM_DOCUMENT_AFFINE)) {
      throw Failure(kExitPrecondition, "--mode " + opt.mode + " does not match the input document");
    }
  }

  std::string text;
  double residual = 0.0;
  if (kind == QM_DOCUMENT_GKS) {
    GeneratorPtr g = load_generator(opt.input);
    qm_affine* raw = nullptr;
    check(qm_generator_to_affine(g.get(), &raw));
    AffinePtr a(raw);
    char* s = nullptr;
    check(qm_affine_to_json(a.get(), &s));
    text = take(s).get();
    if (opt.roundtrip) {
      qm_generator* back = nullptr;
      check(qm_affine_to_generator(a.get(), &back, nullptr, nullptr));
      GeneratorPtr b(back);
      residual = max_abs_diff(generator_entries(g.get()), generator_entries(b.get()));
    }
  } else {
    qm_affine* raw = nullptr;
    check(qm_affine_load(opt.input.c_str(), &raw));
    AffinePtr a(raw);
    qm_generator* gen = nullptr;
    int psd = 1;
    double fit = 0.0;
    check(qm_affine_to_generator(a.get(), &gen, &psd, &fit));
    GeneratorPtr g(gen);
    if (!psd) std::cerr << "warning: recovered GKS matrix is not positive semidefinite\n";
    char* s = nullptr;
    check(qm_generator_to_json(g.get(), &s));
    text = take(s).get();
    if (opt.roundtrip) {
      qm_affine* again = nullptr;
      check(qm_generator_to_affine(g.get(), &again));
      AffinePtr b(again);
      residual = max_abs_diff(affine_entries(a.get()), affine_entries(b.get()));
    }
  }
  emit(opt, text);
  if (opt.roundtrip) {
    std::cerr << "roundtrip residual: " << num(residual) << "\n";
    if (!(residual <= 1e-9)) {
      throw Failure(kExitInvalid, "roundtrip residual " + num(residual) + " exceeds 1e-9");
    }
  }
  return kExitOk;
}

int cmd_trotter_profile(const Options& opt) {
  const std::size_t top = opt.trotter_steps == 0 ? 4096 : opt.trotter_steps;
  const int count = opt.samples == 0 ? 7 : opt.samples;
  if (count < 3) throw Failure(kExitPrecondition, "--samples must be at least 3");
  if (count > 63 || (top >> (count - 1)) == 0) {
    throw Failure(kExitPrecondition, "--trotter-steps is too small for the requested --samples");
  }
  std::vector<std::size_t> steps;
  for (int k = count - 1; k >= 0; --k) steps.push_back(top >> k);

  GeneratorPtr g = load_generator(opt.input);
  qm_generator_list* raw = nullptr;
  check(qm_primitive_split(g.get(), &raw));
  ListPtr split(raw);
  std::vector<double> errors(steps.size());
  double slope = 0.0;
  check(qm_trotter_profile(split.get(), opt.tmax, steps.data(), steps.size(), errors.data(), &slope));

  std::string out = "n,error\n";
  for (size_t i = 0; i < steps.size(); ++i) out += std::to_string(steps[i]) + "," + num(errors[i]) + "\n";
  out += "slope," + num(slope) + "\n";
  emit(opt, out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Markovian qubit and qutrit dynamics: validation, conversion, decomposition, simulation"};
  app.require_subcommand(1);
  Options opt;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", opt.input, "Generator or affine document (JSON)")->required();
    sub->add_option("--output", opt.output, "Write results here instead of standard output");
  };

  CLI::App* check_cmd = app.add_subcommand("check", "Validate a generator document");
  add_input(check_cmd);

  CLI::App* decompose_cmd = app.add_subcommand("decompose", "Decompose into primitive terms");
  add_input(decompose_cmd);
  decompose_cmd->add_option("--mode", opt.mode, "general (default) or unital");
  decompose_cmd->add_option("--seed", opt.seed, "Seed for the per-term symmetry check");

  CLI::App* simulate_cmd = app.add_subcommand("simulate", "Trajectory of an initial state as CSV");
  add_input(simulate_cmd);
  simulate_cmd->add_option("--rho0", opt.rho0,
                           "ground, excited, plus, maxmixed, random, or comma-separated Bloch vector");
  simulate_cmd->add_option("--tmax", opt.tmax, "Final time");
  simulate_cmd->add_option("--samples", opt.samples, "Number of sample times, at least 2")->required();
  simulate_cmd->add_option("--trotter-steps", opt.trotter_steps,
                           "Also simulate the Trotterized primitive split with this many steps");
  simulate_cmd->add_option("--seed", opt.seed, "Seed for --rho0 random");

  CLI::App* convert_cmd = app.add_subcommand("convert", "Convert between GKS and affine forms");
  add_input(convert_cmd);
  convert_cmd->add_option("--mode", opt.mode, "gks-to-affine or affine-to-gks (default: from the input)");
  convert_cmd->add_flag("--roundtrip", opt.roundtrip, "Convert back and require agreement within 1e-9");

  CLI::App* profile_cmd =
      app.add_subcommand("trotter-profile", "Trotter error of the primitive split versus step count");
  add_input(profile_cmd);
  profile_cmd->add_option("--tmax", opt.tmax, "Evolution time");
  profile_cmd->add_option("--trotter-steps", opt.trotter_steps, "Largest step count (default 4096)");
  profile_cmd->add_option("--samples", opt.samples, "Number of step counts, halving each time (default 7)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitPrecondition;
  }

  try {
    if (*check_cmd) return cmd_check(opt);
    if (*decompose_cmd) return cmd_decompose(opt);
    if (*simulate_cmd) return cmd_simulate(opt);
    if (*convert_cmd) return cmd_convert(opt);
    if (*profile_cmd) return cmd_trotter_profile(opt);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message() << "\n";
    return f.code();
  }
  return kExitPrecondition;
}
