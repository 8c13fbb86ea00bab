// Copyright 2026 The qoptics Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qoptics: reproducible experiments over the library, emitting CSV or JSON
// tables. Exit codes: 0 success, 2 configuration error, 3 failed numerical
// check.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "qoptics/classical_spectra.hpp"
#include "qoptics/detection.hpp"
#include "qoptics/io.hpp"
#include "qoptics/multimode.hpp"
#include "qoptics/ordering_g2.hpp"
#include "qoptics/phase_space.hpp"

namespace fs = std::filesystem;
using namespace qoptics;

namespace {

constexpr int kConfigError = 2;
constexpr int kCheckFailed = 3;

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::uint64_t seed = 1;
  std::string out = ".";
  std::string format = "csv";
  std::string config;
  bool lenient = false;
};

// Everything needed to write self-describing outputs for one subcommand.
class Run {
 public:
  Run(const CLI::App& sub, const Common& common)
      : name_(sub.get_name()), dir_(common.out), format_(parse_format(common.format)) {
    std::string command = "qoptics " + name_;
    meta_.emplace_back("subcommand", name_);
    for (const CLI::Option* opt : sub.get_options()) {
      const std::string key = opt->get_single_name();
      if (key == "help" || key == "config" || key == "out" || opt->get_lnames().empty()) continue;
      std::string value;
      if (opt->count() > 0) {
        const auto& results = opt->results();
        for (std::size_t i = 0; i < results.size(); ++i) value += (i ? "," : "") + results[i];
      } else {
        value = opt->get_default_str();
      }
      if (opt->get_expected_max() == 0) {
        if (opt->count() == 0) continue;
        command += " --" + key;
        meta_.emplace_back(key, "true");
        continue;
      }
      if (value.empty()) continue;
      command += " --" + key + " " + value;
      meta_.emplace_back(key, value);
    }
    meta_.insert(meta_.begin(), {"command", command});
    fs::create_directories(dir_);
  }

  void write(const std::string& table_name, const Table& table, Metadata extra = {}) const {
    Metadata meta = meta_;
    meta.emplace_back("table", table_name);
    for (auto& kv : extra) meta.push_back(std::move(kv));
    const auto path = write_table(dir_ / (name_ + "_" + table_name), table, meta, format_);
    std::cout << path.string() << '\n';
  }

 private:
  std::string name_;
  fs::path dir_;
  Format format_;
  Metadata meta_;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--seed", c.seed, "Random seed");
  sub->add_option("--out", c.out, "Output directory");
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--config", c.config, "JSON file with option values keyed by long flag name");
  sub->add_flag("--lenient", c.lenient, "Report failed checks without a nonzero exit code");
}

std::vector<Real> parse_list(const std::string& text) {
  std::vector<Real> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw DomainError(fmt::format("cannot parse '{}' as a number", item));
    }
  }
  return out;
}

// Merges a JSON config file into the argument list: keys are long flag
// names, command-line values win.
std::vector<std::string> expand_config(std::vector<std::string> args,
                                       const std::vector<std::string>& subcommands) {
  auto it = std::find_if(args.begin(), args.end(),
                         [](const std::string& a) { return a == "--config" || a.rfind("--config=", 0) == 0; });
  if (it == args.end()) return args;
  std::string path = *it == "--config" ? (it + 1 != args.end() ? *(it + 1) : "") : it->substr(9);
  std::ifstream is(path);
  if (!is) throw DomainError(fmt::format("cannot read config file '{}'", path));
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(is);
  } catch (const std::exception& e) {
    throw DomainError(fmt::format("config file '{}' is not valid JSON: {}", path, e.what()));
  }
  if (!doc.is_object()) throw DomainError("config file must hold a JSON object");

  auto sub = std::find_if(args.begin() + 1, args.end(), [&](const std::string& a) {
    return std::find(subcommands.begin(), subcommands.end(), a) != subcommands.end();
  });
  if (sub == args.end()) {
    if (!doc.contains("subcommand") || !doc["subcommand"].is_string())
      throw DomainError("no subcommand given on the command line or in the config");
    sub = args.insert(args.begin() + 1, doc["subcommand"].get<std::string>());
  }
  const auto present = [&](const std::string& key) {
    return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
      return a == "--" + key || a.rfind("--" + key + "=", 0) == 0;
    });
  };
  std::vector<std::string> injected;
  for (const auto& [key, value] : doc.items()) {
    if (key == "subcommand" || key == "config" || present(key)) continue;
    if (value.is_boolean()) {
      if (value.get<bool>()) injected.push_back("--" + key);
      continue;
    }
    std::string text;
    if (value.is_string()) {
      text = value.get<std::string>();
    } else if (value.is_array()) {
      for (std::size_t i = 0; i < value.size(); ++i)
        text += (i ? "," : "") + (value[i].is_string() ? value[i].get<std::string>() : value[i].dump());
    } else {
      text = value.dump();
    }
    injected.push_back("--" + key);
    injected.push_back(text);
  }
  args.insert(sub + 1, injected.begin(), injected.end());
  return args;
}

// -- spectra -----------------------------------------------------------------

struct SpectraOptions {
  std::string model = "white-fm";
  NoiseModelParams params;
  Real seconds = 10;
  Real dt = 1e-4;
  Real carrier = 0;
  int ensemble = 100;
};

void cmd_spectra(const Run& run, const SpectraOptions& o, const Common& c) {
  const NoiseModel model = make_noise_model(o.model, o.params);
  const ComplexTimeSeries series = synthesize_field(model, o.seconds, o.dt, c.seed, o.carrier);
  run.write("timeseries", to_table(series));

  Table report{{"quantity", "value", "note"}, {}};
  report.add_row({std::string("samples"), static_cast<long long>(series.size()), std::string("")});
  report.add_row({std::string("mean_intensity"), series.samples.cwiseAbs2().mean(), std::string("")});

  const SpectralDensity field = field_spectrum(series);
  run.write("field", to_table(field));
  for (auto kind : {SpectrumKind::kIntensity, SpectrumKind::kAmplitude, SpectrumKind::kPhase,
                    SpectrumKind::kFrequency}) {
    const std::string name(to_string(kind));
    try {
      run.write(name, to_table(spectral_density(series, kind)));
      report.add_row({name, std::string("written"), std::string("")});
    } catch (const DomainError& e) {
      report.add_row({name, std::string("skipped"), std::string(e.what())});
    }
  }

  if (o.model == "white-fm") {
    const Real predicted = kPi * o.params.s_nu0;
    const SpectralDensity mean = ensemble_field_spectrum(model, o.seconds, o.dt, c.seed, o.ensemble, o.carrier);
    run.write("ensemble_field", to_table(mean), {{"members", std::to_string(o.ensemble)}});
    const LorentzianFit fit = fit_lorentzian(mean, 10 * predicted);
    Table lw{{"quantity", "fitted", "predicted", "relative_error"}, {}};
    lw.add_row({std::string("fwhm_hz"), fit.fwhm, predicted, fit.fwhm / predicted - 1});
    lw.add_row({std::string("center_hz"), fit.center, o.carrier, fit.center - o.carrier});
    run.write("linewidth", lw, {{"members", std::to_string(o.ensemble)}});
  }

  if (o.model == "e1" || o.model == "e2" || o.model == "e3") {
    std::vector<SpectralDensity> spectra;
    std::vector<CorrelationFunction> g2tp;
    for (const char* tag : {"e1", "e2", "e3"}) {
      const auto s = synthesize_field(make_noise_model(tag, o.params), o.seconds, o.dt, c.seed, o.carrier);
      spectra.push_back(field_spectrum(s));
      g2tp.push_back(correlation(s, CorrelationKind::kG2TwoPhoton, 0.2 * o.seconds));
    }
    Table eq{{"pair", "spectrum_max_diff_over_peak", "g2tp_max_diff_over_peak"}, {}};
    const char* names[] = {"e1", "e2", "e3"};
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) {
        const Real peak = std::max(spectra[a].values.maxCoeff(), spectra[b].values.maxCoeff());
        const Real ds = (spectra[a].values - spectra[b].values).cwiseAbs().maxCoeff() / peak;
        const Real gpeak = std::max(g2tp[a].values.cwiseAbs().maxCoeff(), g2tp[b].values.cwiseAbs().maxCoeff());
        const Real dg = (g2tp[a].values - g2tp[b].values).cwiseAbs().maxCoeff() / gpeak;
        eq.add_row({fmt::format("{}-{}", names[a], names[b]), ds, dg});
      }
    run.write("equality", eq);
  }
  run.write("report", report);
}

// -- wigner ------------------------------------------------------------------

struct WignerOptions {
  std::string state = "vacuum";
  int points = 201;
  Real half_width = 0;
  std::string marginals = "0";
};

void cmd_wigner(const Run& run, const WignerOptions& o) {
  const State state = make_state(parse_state_spec(o.state));
  auto [x, p] = default_axes(state, o.points);
  if (o.half_width > 0) {
    x = VectorXr::LinSpaced(o.points, -o.half_width, o.half_width);
    p = x;
  }
  const WignerGrid w = wigner(state, x, p);
  run.write("grid", to_table(w, "w"));
  run.write("husimi", to_table(to_husimi(state, x, p), "q"));
  for (Real degrees : parse_list(o.marginals)) {
    const Marginal m = marginal(w, degrees * kPi / 180);
    run.write(fmt::format("marginal_{}", format_real(degrees)), to_table(m),
              {{"theta_deg", format_real(degrees)}});
  }
  Table report{{"quantity", "value"}, {}};
  const Real origin = wigner_at(state, 0, 0);
  const Real parity = parity_wigner_origin(photon_distribution(state));
  report.add_row({std::string("w_origin"), origin});
  report.add_row({std::string("parity_w_origin"), parity});
  report.add_row({std::string("parity_difference"), parity - origin});
  report.add_row({std::string("w_min"), w.values.minCoeff()});
  report.add_row({std::string("w_max"), w.values.maxCoeff()});
  report.add_row({std::string("grid_integral"), w.integral()});
  run.write("report", report);
}

// -- tomo --------------------------------------------------------------------

struct TomoOptions {
  std::string state = "vacuum";
  int angles = 16;
  int shots = 10000;
  int points = 121;
  std::string samples;
};

void cmd_tomo(const Run& run, const TomoOptions& o, const Common& c, bool state_given) {
  TomographyDataset data;
  std::optional<State> state;
  if (!o.samples.empty()) {
    std::ifstream is(o.samples);
    if (!is) throw DomainError(fmt::format("cannot read samples file '{}'", o.samples));
    data = read_tomography_csv(is);
    if (state_given) state = make_state(parse_state_spec(o.state));
  } else {
    require(o.angles >= 8, "tomography needs --angles >= 8");
    require(o.shots >= 1000, "tomography needs --shots >= 1000");
    state = make_state(parse_state_spec(o.state));
    data = simulate_tomography(*state, o.angles, o.shots, c.seed);
    run.write("samples", to_table(data));
  }
  data.validate();
  const auto [x, p] = tomography_axes(data, o.points);
  const TomographyResult rec = reconstruct_wigner(data, x, p);
  run.write("wigner", to_table(rec.grid, "w"));

  Table report{{"quantity", "value", "reference", "relative_error"}, {}};
  const Real nan = std::numeric_limits<Real>::quiet_NaN();
  report.add_row({std::string("scale"), rec.scale, 1.0, rec.scale - 1});
  const Real origin = rec.grid.at(0, 0);
  const auto moments = grid_moments(rec.grid);
  if (state) {
    const WignerGrid truth = wigner(*state, x, p);
    report.add_row({std::string("l1_error"), l1_distance(rec.grid, truth), 0.0, nan});
    report.add_row({std::string("max_abs_error"), (rec.grid.values - truth.values).cwiseAbs().maxCoeff(), 0.0, nan});
    const Real w0 = wigner_at(*state, 0, 0);
    report.add_row({std::string("w_origin"), origin, w0, nan});
    GaussianState ref;
    if (const auto* g = std::get_if<GaussianState>(&*state))
      ref = *g;
    else
      ref = quadrature_moments(std::get<FockVector>(*state));
    const char* names[] = {"cov_xx", "cov_pp", "cov_xp"};
    const Real got[] = {moments.cov(0, 0), moments.cov(1, 1), moments.cov(0, 1)};
    const Real want[] = {ref.cov(0, 0), ref.cov(1, 1), ref.cov(0, 1)};
    for (int i = 0; i < 3; ++i)
      report.add_row({std::string(names[i]), got[i], want[i],
                      std::abs(want[i]) > 1e-12 ? got[i] / want[i] - 1 : nan});
  } else {
    report.add_row({std::string("w_origin"), origin, nan, nan});
    report.add_row({std::string("cov_xx"), moments.cov(0, 0), nan, nan});
    report.add_row({std::string("cov_pp"), moments.cov(1, 1), nan, nan});
    report.add_row({std::string("cov_xp"), moments.cov(0, 1), nan, nan});
  }
  run.write("report", report);
}

// -- g2 ----------------------------------------------------------------------

Real spec_param(const StateSpec& s) {
  switch (s.kind) {
    case StateKind::kCoherent: return std::abs(s.alpha);
    case StateKind::kThermal: return s.nbar;
    case StateKind::kSqueezedVacuum:
    case StateKind::kAdmixture: return s.epsilon;
    case StateKind::kFock: return s.n;
    case StateKind::kCat: return std::abs(s.alpha);
    case StateKind::kVacuum: return 0;
  }
  return 0;
}

void cmd_g2(const Run& run, const std::string& spec_text, const Common& c) {
  std::vector<std::string> specs = {"coherent:2", "thermal:1", "squeezed:0.5"};
  if (!spec_text.empty()) specs = {spec_text};
  Table table{{"state", "param", "sym_n", "g2", "g2_fock"}, {}};
  bool undefined = false;
  for (const auto& text : specs) {
    const StateSpec spec = parse_state_spec(text);
    const State state = make_state(spec);
    const PhotonDistribution pd = photon_distribution(state);
    const OrderingMoments m = std::holds_alternative<GaussianState>(state)
                                  ? sym_moments_gaussian(std::get<GaussianState>(state))
                                  : number_moments(pd);
    Cell g2 = std::string("undefined");
    Cell fock = std::string("undefined");
    try {
      g2 = g2_zero(m);
      fock = g2_zero_fock(pd);
    } catch (const DomainError&) {
      undefined = true;
    }
    table.add_row({text.substr(0, text.find(':')), spec_param(spec), m.sym_n, g2, fock});
  }
  run.write("table", table);
  if (undefined && !c.lenient) throw CheckFailure("g2(0) is undefined for the vacuum (use --lenient to accept)");
}

// -- channels / epr ----------------------------------------------------------

struct ChannelOptions {
  Real gmin = 1;
  Real gmax = 10;
  int steps = 10;
  Real epsilon = 0.1;
  Real carrier_hz = 3e14;
  Real sideband_hz = 1e7;
};

Table epr_table(Real epsilon) {
  const auto out = apply_beam_splitter(make_beam_splitter(BeamSplitterKind::kSymmetric, 0.5), epr_pair(epsilon));
  const Eigen::Vector4d sum_x(1, 0, 1, 0);
  const Eigen::Vector4d diff_p(0, 1, 0, -1);
  Table t{{"quantity", "value", "benchmark"}, {}};
  t.add_row({std::string("var_x3_plus_x4"), sum_x.dot(out.cov * sum_x), 0.5});
  t.add_row({std::string("var_p3_minus_p4"), diff_p.dot(out.cov * diff_p), 0.5});
  t.add_row({std::string("var_x3"), out.cov(0, 0), kVacuumVariance});
  return t;
}

void cmd_channels(const Run& run, const ChannelOptions& o) {
  require(o.gmin >= 1 && o.gmax >= o.gmin, "need 1 <= --gmin <= --gmax");
  require(o.steps >= 1, "--steps must be >= 1");
  Table nf{{"kind", "param", "nf_closed", "nf_numeric"}, {}};
  for (auto kind : {ChannelKind::kAttenuation, ChannelKind::kAmplification, ChannelKind::kPhaseSensitive,
                    ChannelKind::kPhaseConjugation, ChannelKind::kRepeater})
    for (int i = 0; i <= o.steps; ++i) {
      const Real g = o.gmin + (o.gmax - o.gmin) * i / o.steps;
      const Real param = kind == ChannelKind::kAttenuation ? 1 / g : g;
      nf.add_row({std::string(channel_name(kind)), param, noise_figure(kind, param),
                  noise_figure_numeric(make_channel(kind, param))});
    }
  run.write("nf", nf);
  run.write("epr", epr_table(o.epsilon));

  const Real omega0 = 2 * kPi * o.carrier_hz;
  const Real omega = 2 * kPi * o.sideband_hz;
  const auto len = solve_interferometer_length(omega0, omega);
  const auto rep = unbalanced_interferometer(sideband_state(1, o.epsilon), len.length, omega0, omega);
  Table t{{"output", "variance", "benchmark"}, {}};
  t.add_row({std::string("output1"), rep.variance1, rep.shot_noise});
  t.add_row({std::string("output2"), rep.variance2, rep.shot_noise});
  t.add_row({std::string("difference"), rep.difference_variance, rep.shot_noise});
  run.write("interferometer", t,
            {{"length_m", format_real(len.length)},
             {"order", std::to_string(len.order)},
             {"sideband_phase_error_rad", format_real(len.sideband_phase_error)}});
}

void cmd_epr(const Run& run, Real epsilon, int truncation) {
  run.write("report", epr_table(epsilon));
  Table t{{"commutator", "expected_re", "expected_im", "value_re", "value_im", "deviation"}, {}};
  bool ok = true;
  for (const auto& e : epr_commutator_check(truncation)) {
    t.add_row({e.name, e.expected.real(), e.expected.imag(), e.value.real(), e.value.imag(), e.deviation});
    ok = ok && e.deviation <= 1e-10;
  }
  run.write("commutators", t);
  if (!ok) throw CheckFailure("a commutator deviates from its expected value by more than 1e-10");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum-optics toolkit: spectra, phase space, tomography, g2 and channels"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  Common common;

  SpectraOptions spectra;
  auto* s = app.add_subcommand("spectra", "Synthesize a field and write its spectra");
  s->add_option("--model", spectra.model, "constant, white-fm, delta-amplitude, gaussian-amplitude-fm, thermal, e1, e2, e3");
  s->add_option("--snu0", spectra.params.s_nu0, "White frequency-noise density S_nu(0) in Hz^2/Hz")->default_val(5);
  s->add_option("--sa0", spectra.params.s_a0, "White amplitude-noise density");
  s->add_option("--gamma", spectra.params.gamma, "Pulse decay rate in 1/s");
  s->add_option("--tau", spectra.params.correlation_time, "Correlation time in s");
  s->add_option("--amplitude", spectra.params.amplitude, "Mean field amplitude");
  s->add_option("--amplitude-var", spectra.params.amplitude_var, "Amplitude variance");
  s->add_option("--seconds", spectra.seconds, "Record duration in s");
  s->add_option("--dt", spectra.dt, "Sample spacing in s");
  s->add_option("--carrier", spectra.carrier, "Carrier frequency in Hz");
  s->add_option("--ensemble", spectra.ensemble, "Records averaged for the white-fm linewidth fit")
      ->check(CLI::PositiveNumber);
  add_common(s, common);

  WignerOptions wig;
  auto* w = app.add_subcommand("wigner", "Wigner and Husimi grids, marginals and the parity check");
  w->add_option("--state", wig.state, "State spec, e.g. fock:1, cat:2, coherent:1,1");
  w->add_option("--points", wig.points, "Grid points per axis")->check(CLI::Range(3, 2001));
  w->add_option("--half-width", wig.half_width, "Grid half-width; 0 chooses from the state");
  w->add_option("--marginals", wig.marginals, "Comma-separated marginal angles in degrees");
  add_common(w, common);

  TomoOptions tomo;
  auto* t = app.add_subcommand("tomo", "Simulated homodyne tomography");
  auto* tomo_state = t->add_option("--state", tomo.state, "State spec");
  t->add_option("--angles", tomo.angles, "Number of homodyne angles");
  t->add_option("--shots", tomo.shots, "Samples per angle");
  t->add_option("--points", tomo.points, "Reconstruction grid points per axis")->check(CLI::Range(3, 1001));
  t->add_option("--samples", tomo.samples, "Reconstruct from a theta,value CSV instead of simulating");
  add_common(t, common);

  std::string g2_state;
  auto* g = app.add_subcommand("g2", "g2(0) from Wigner moments and the Fock oracle");
  g->add_option("--state", g2_state, "Single state spec instead of the reference table");
  add_common(g, common);

  ChannelOptions ch;
  auto* c = app.add_subcommand("channels", "Noise-figure sweep, EPR and sideband interferometer reports");
  c->add_option("--gmin", ch.gmin, "Smallest gain");
  c->add_option("--gmax", ch.gmax, "Largest gain");
  c->add_option("--steps", ch.steps, "Sweep intervals");
  c->add_option("--epsilon", ch.epsilon, "Squeezing for the EPR and sideband reports");
  c->add_option("--carrier-hz", ch.carrier_hz, "Optical carrier frequency in Hz");
  c->add_option("--sideband-hz", ch.sideband_hz, "Sideband offset frequency in Hz");
  add_common(c, common);

  Real epr_eps = 0.1;
  int epr_trunc = 12;
  auto* e = app.add_subcommand("epr", "EPR variances and truncated-matrix commutators");
  e->add_option("--epsilon", epr_eps, "Squeezing of both inputs");
  e->add_option("--truncation", epr_trunc, "Fock cutoff per mode")->check(CLI::Range(2, 30));
  add_common(e, common);

  try {
    std::vector<std::string> args(argv, argv + argc);
    std::vector<std::string> names;
    for (const CLI::App* sub : app.get_subcommands({})) names.push_back(sub->get_name());
    args = expand_config(std::move(args), names);
    std::vector<char*> cargs;
    for (auto& a : args) cargs.push_back(a.data());
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::CallForAllHelp& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kConfigError;
  } catch (const DomainError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kConfigError;
  }

  try {
    const CLI::App* sub = app.get_subcommands().front();
    const Run run(*sub, common);
    if (sub == s) cmd_spectra(run, spectra, common);
    if (sub == w) cmd_wigner(run, wig);
    if (sub == t) cmd_tomo(run, tomo, common, tomo_state->count() > 0);
    if (sub == g) cmd_g2(run, g2_state, common);
    if (sub == c) cmd_channels(run, ch);
    if (sub == e) cmd_epr(run, epr_eps, epr_trunc);
  } catch (const DomainError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kConfigError;
  } catch (const fs::filesystem_error& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kConfigError;
  } catch (const NumericalError& err) {
    std::cerr << "check failed: " << err.what() << '\n';
    return kCheckFailed;
  } catch (const CheckFailure& err) {
    std::cerr << "check failed: " << err.what() << '\n';
    return kCheckFailed;
  }
  return 0;
}
