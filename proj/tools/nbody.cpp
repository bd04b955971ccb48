// nbody: spectra, degeneracies, wavefunction values, verification suites and
// ground-state energy tables for N particles with harmonic pair interactions.

#include "nbody/spectrum.hpp"
#include "nbody/verify.hpp"
#include "nbody/wavefn.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using nbody::Statistics;
using nbody::SystemParams;

struct CommonOptions {
  int n = 2;
  int dim = 1;
  double hbar = 1.0;
  double mass = 1.0;
  double omega = 1.0;
  std::string format = "csv";

  SystemParams params() const {
    SystemParams p;
    p.n_particles = n;
    p.dimension = dim;
    p.hbar = hbar;
    p.mass = mass;
    p.omega = omega;
    p.validate();
    return p;
  }
};

void add_system_flags(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--n", o.n, "Number of particles")->required()->check(CLI::Range(2, 1000000));
  cmd->add_option("--dim", o.dim, "Spatial dimension")->capture_default_str()->check(CLI::Range(1, 64));
  cmd->add_option("--hbar", o.hbar, "Reduced Planck constant")->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--mass", o.mass, "Particle mass")->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--omega", o.omega, "Oscillator frequency")->capture_default_str()->check(CLI::PositiveNumber);
}

void add_format_flag(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")
      ->capture_default_str()
      ->check(CLI::IsMember({"csv", "json"}));
}

nlohmann::json degeneracy_json(const std::optional<nbody::BigInt>& d) {
  if (!d) return nullptr;
  if (*d <= std::numeric_limits<std::int64_t>::max()) return d->convert_to<std::int64_t>();
  return d->str();
}

std::string degeneracy_text(const std::optional<nbody::BigInt>& d) { return d ? d->str() : std::string(); }

int cmd_spectrum(const CommonOptions& o, const std::string& stat, int levels) {
  const auto p = o.params();
  const auto s = nbody::parse_statistics(stat);
  const auto lines = nbody::spectrum(p, s, levels);
  if (o.format == "json") {
    nlohmann::json doc;
    doc["units"] = "hbar_omega";
    doc["N"] = p.n_particles;
    doc["D"] = p.dimension;
    doc["statistics"] = nbody::to_string(s);
    doc["levels"] = nlohmann::json::array();
    for (const auto& l : lines) {
      doc["levels"].push_back({{"label", l.label},
                               {"energy", l.energy},
                               {"degeneracy", degeneracy_json(l.degeneracy)},
                               {"vanishes", l.vanishes_identically}});
    }
    std::cout << doc.dump() << '\n';
    return 0;
  }
  std::cout << "label,energy,degeneracy,vanishes\n" << std::setprecision(17);
  for (const auto& l : lines) {
    std::cout << l.label << ',' << l.energy << ',' << degeneracy_text(l.degeneracy) << ','
              << (l.vanishes_identically ? "true" : "false") << '\n';
  }
  return 0;
}

int cmd_degeneracy(const CommonOptions& o) {
  const auto p = o.params();
  const nbody::BigInt d = p.dimension == 1 ? nbody::BigInt(1) : nbody::degeneracy_ground_d(p.n_particles, p.dimension);
  if (o.format == "json") {
    nlohmann::json doc{{"N", p.n_particles}, {"D", p.dimension}, {"degeneracy", degeneracy_json(d)}};
    std::cout << doc.dump() << '\n';
  } else {
    std::cout << "N,D,degeneracy\n" << p.n_particles << ',' << p.dimension << ',' << d.str() << '\n';
  }
  return 0;
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(what) + ": '" + item + "' is not an integer");
    }
  }
  return out;
}

struct EvalOptions {
  std::string stat = "fermi";
  int excitation = 0;
  std::string selection;
  std::string points = "-";
  bool log_domain = false;
  bool unnormalized = false;
};

int cmd_eval(const CommonOptions& o, const EvalOptions& e) {
  nbody::WavefunctionDescriptor d;
  d.statistics = nbody::parse_statistics(e.stat);
  d.excitation = e.excitation;
  d.params = o.params();
  if (!e.selection.empty()) d.shell_selection = parse_int_list(e.selection, "--selection");
  d.normalized = !e.unnormalized;
  const nbody::Eigenfunction psi(d);

  std::vector<nbody::Configuration> configs;
  if (e.points == "-") {
    configs = nbody::read_configuration_batch(std::cin, o.n, o.dim);
  } else {
    std::ifstream in(e.points);
    if (!in) throw std::runtime_error("cannot open " + e.points);
    configs = nbody::read_configuration_batch(in, o.n, o.dim);
  }

  if (o.format == "json") {
    nlohmann::json doc;
    doc["statistics"] = nbody::to_string(d.statistics);
    doc["excitation"] = d.excitation;
    doc["N"] = o.n;
    doc["D"] = o.dim;
    doc["values"] = nlohmann::json::array();
    for (const auto& c : configs) {
      const auto v = psi.log_eval(c);
      if (e.log_domain) {
        doc["values"].push_back({{"log_abs", v.sign == 0 ? nlohmann::json(nullptr) : nlohmann::json(v.log_abs)},
                                 {"sign", v.sign}});
      } else {
        doc["values"].push_back(v.value());
      }
    }
    std::cout << doc.dump() << '\n';
    return 0;
  }
  std::cout << std::setprecision(17) << (e.log_domain ? "point_id,log_abs,sign\n" : "point_id,value\n");
  for (std::size_t id = 0; id < configs.size(); ++id) {
    const auto v = psi.log_eval(configs[id]);
    if (e.log_domain) std::cout << id << ',' << v.log_abs << ',' << v.sign << '\n';
    else std::cout << id << ',' << v.value() << '\n';
  }
  return 0;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, const std::string& format) {
  const auto report = nbody::verify::run_suite(suite, seed);
  if (format == "json") {
    std::cout << report.to_json().dump() << '\n';
  } else {
    std::cout << "check,parameters,metric,tolerance,pass\n" << std::setprecision(17);
    for (const auto& c : report.checks) {
      std::string params = c.parameters.dump();
      std::string quoted = "\"";
      for (char ch : params) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      quoted += '"';
      std::cout << c.check << ',' << quoted << ',' << c.metric << ',' << c.tolerance << ','
                << (c.pass ? "true" : "false") << '\n';
    }
  }
  return report.pass() ? 0 : 1;
}

int cmd_figure1(int n_max, const std::string& dims, const std::string& out, const std::string& format) {
  if (n_max < 2) throw std::invalid_argument("--n-max must be >= 2");
  const auto dimensions = parse_int_list(dims, "--dims");
  for (int d : dimensions)
    if (d < 1) throw std::invalid_argument("--dims entries must be >= 1");
  const auto rows = nbody::figure1_table(2, n_max, dimensions);
  auto write = [&](std::ostream& s) {
    if (format == "json") nbody::write_figure1_json(s, rows);
    else nbody::write_figure1_csv(s, rows);
  };
  if (out == "-") {
    write(std::cout);
    return 0;
  }
  std::ofstream file(out);
  if (!file) throw std::runtime_error("cannot write " + out);
  write(file);
  file.close();
  if (!file) throw std::runtime_error("error writing " + out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact eigenstates of N particles with harmonic pair interactions"};
  app.require_subcommand(1);

  CommonOptions spectrum_opts;
  std::string spectrum_stat = "fermi";
  int levels = 5;
  auto* spectrum = app.add_subcommand("spectrum", "Energy levels in units of hbar*omega");
  add_system_flags(spectrum, spectrum_opts);
  spectrum->add_option("--stat", spectrum_stat, "bose or fermi")
      ->capture_default_str()
      ->check(CLI::IsMember({"bose", "fermi"}));
  spectrum->add_option("--levels", levels, "Number of levels")->capture_default_str()->check(CLI::NonNegativeNumber);
  add_format_flag(spectrum, spectrum_opts.format);

  CommonOptions degeneracy_opts;
  auto* degeneracy = app.add_subcommand("degeneracy", "Fermi ground-state degeneracy");
  add_system_flags(degeneracy, degeneracy_opts);
  add_format_flag(degeneracy, degeneracy_opts.format);

  CommonOptions eval_opts;
  EvalOptions eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate an eigenfunction at configurations");
  add_system_flags(eval, eval_opts);
  eval->add_option("--stat", eval_args.stat, "bose or fermi")
      ->capture_default_str()
      ->check(CLI::IsMember({"bose", "fermi"}));
  eval->add_option("--excitation", eval_args.excitation, "Excitation label k")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  eval->add_option("--selection", eval_args.selection, "Comma-separated 1-based serials of shell-K monomials, numbered in descending lexicographic order of exponents (x^K first); D >= 2");
  eval->add_option("--points", eval_args.points,
                   "CSV of configurations, one per line, particle-major (x1,y1,...,x2,y2,...); - for stdin")
      ->capture_default_str();
  eval->add_flag("--log-domain", eval_args.log_domain, "Print log|psi| and sign");
  eval->add_flag("--unnormalized", eval_args.unnormalized, "Skip the normalization constant");
  add_format_flag(eval, eval_opts.format);

  std::string suite = "all";
  std::uint64_t seed = 42;
  std::string verify_format = "json";
  auto* verify = app.add_subcommand("verify", "Run verification suites; exit 0 iff every check passes");
  verify->add_option("--suite", suite, "Suite name")
      ->capture_default_str()
      ->check(CLI::IsMember(nbody::verify::suite_names()));
  verify->add_option("--seed", seed, "Random seed")->capture_default_str();
  add_format_flag(verify, verify_format);

  int n_max = 100;
  std::string dims = "1,2,3";
  std::string out = "-";
  std::string figure_format = "csv";
  auto* figure1 = app.add_subcommand("figure1", "Ground-state energy table N,D,E0 (hbar*omega = 1)");
  figure1->add_option("--n-max", n_max, "Largest particle number")->capture_default_str();
  figure1->add_option("--dims", dims, "Comma-separated dimensions")->capture_default_str();
  figure1->add_option("--out", out, "Output path, - for stdout")->capture_default_str();
  add_format_flag(figure1, figure_format);

  CLI11_PARSE(app, argc, argv);

  try {
    if (spectrum->parsed()) return cmd_spectrum(spectrum_opts, spectrum_stat, levels);
    if (degeneracy->parsed()) return cmd_degeneracy(degeneracy_opts);
    if (eval->parsed()) return cmd_eval(eval_opts, eval_args);
    if (verify->parsed()) return cmd_verify(suite, seed, verify_format);
    if (figure1->parsed()) return cmd_figure1(n_max, dims, out, figure_format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
