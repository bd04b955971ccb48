#include "nbody/verify.hpp"

#include "nbody/oracle.hpp"
#include "nbody/spectrum.hpp"
#include "nbody/sympoly.hpp"
#include "nbody/wavefn.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>

namespace nbody::verify {

namespace {

using oracle::QuantumNumberSet;
using Evaluator = std::function<double(const Configuration&)>;

#ifdef NBODY_FAULT_INJECTION
constexpr double kFault = 0.05;
#else
constexpr double kFault = 0.0;
#endif

// The closed-form side of every comparison goes through these, so the
// negative-control build can perturb it.
double closed(double v, const Configuration& c) { return v * (1.0 + kFault * c(0, 0)); }
double closed(double v) { return v * (1.0 + kFault); }
Rational closed(const Rational& v) { return kFault == 0.0 ? v : v + Rational(1); }

constexpr double kInf = std::numeric_limits<double>::infinity();

CheckResult make(std::string name, nlohmann::json params, double metric, double tolerance) {
  CheckResult r;
  r.check = std::move(name);
  r.parameters = std::move(params);
  r.metric = metric;
  r.tolerance = tolerance;
  r.pass = std::isfinite(metric) && metric <= tolerance;
  return r;
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

std::vector<Rational> random_point(std::mt19937_64& rng, int n) {
  std::vector<Rational> x;
  for (int i = 0; i < n; ++i) x.push_back(random_small_rational(rng));
  return x;
}

double relative_spread(const std::vector<double>& ratios) {
  if (ratios.empty()) return kInf;
  const auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
  double mean = 0.0;
  for (double r : ratios) mean += r;
  mean /= static_cast<double>(ratios.size());
  if (mean == 0.0) return kInf;
  return (*hi - *lo) / std::abs(mean);
}

std::vector<Configuration> sample_points(const SystemParams& params, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Configuration> out;
  for (int i = 0; i < count; ++i) out.push_back(oracle::sample_configuration(params, rng));
  return out;
}

double max_abs(const Evaluator& f, const std::vector<Configuration>& pts) {
  double m = 0.0;
  for (const auto& c : pts) m = std::max(m, std::abs(f(c)));
  return m;
}

// Ratio spread of closed / brute at `points` configurations where the brute
// value is clear of its nodes.
double proportionality(const Evaluator& closed_form, const Evaluator& brute, const SystemParams& params,
                       int points, std::uint64_t seed) {
  const auto probe = sample_points(params, 32, mix(seed, 1));
  const double scale = max_abs(brute, probe);
  if (scale == 0.0) return kInf;
  std::mt19937_64 rng(seed);
  std::vector<double> ratios;
  for (int attempts = 0; static_cast<int>(ratios.size()) < points && attempts < 100 * points; ++attempts) {
    const Configuration c = oracle::sample_configuration(params, rng);
    const double b = brute(c);
    if (std::abs(b) < 1e-6 * scale) continue;
    ratios.push_back(closed(closed_form(c), c) / b);
  }
  if (static_cast<int>(ratios.size()) < points) return kInf;
  return relative_spread(ratios);
}

QuantumNumberSet fermi_quanta(int n, int last) {
  QuantumNumberSet q;
  for (int i = 1; i <= n - 2; ++i) q.n.push_back(i);
  q.n.push_back(last);
  return q;
}

QuantumNumberSet bose_quanta(int n, int last) {
  QuantumNumberSet q;
  q.n.assign(static_cast<std::size_t>(n - 2), 0);
  q.n.push_back(last);
  return q;
}

nlohmann::json np(int n, int d = 1) { return {{"N", n}, {"D", d}}; }

}  // namespace

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

nlohmann::json Report::to_json() const {
  nlohmann::json doc;
  doc["suite"] = suite;
  doc["seed"] = seed;
  doc["pass"] = pass();
  doc["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    doc["checks"].push_back({{"check", c.check},
                             {"parameters", c.parameters},
                             {"metric", c.metric},
                             {"tolerance", c.tolerance},
                             {"pass", c.pass}});
  }
  return doc;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"identities", "oracle1d",  "residuals",
                                              "normalization", "symmetry", "all"};
  return names;
}

// -- identities ------------------------------------------------------------------------

std::vector<CheckResult> identity_checks(std::uint64_t seed, int inputs_per_case) {
  std::vector<CheckResult> out;
  for (int n = 2; n <= 5; ++n) {
    std::mt19937_64 rng(mix(seed, 10, static_cast<std::uint64_t>(n)));
    int hv_fail = 0;
    int vh_fail = 0;
    int sigma_fail = 0;
    for (int t = 0; t < inputs_per_case; ++t) {
      const auto x = random_point(rng, n);
      const SymmetricContext<Rational> ctx(x);
      for (int gamma = 0; gamma <= 10; ++gamma) {
        const Rational by_sum = oracle::hyper_vandermonde_exchange_sum(x, gamma);
        const Rational by_det = oracle::hyper_vandermonde_matrix(x, gamma);
        const Rational factored = closed(hyper_vandermonde(ctx, gamma));
        if (by_sum != by_det || by_det != factored) ++hv_fail;
      }
      const auto v = v_table(10, ctx);
      for (int i = 0; i <= 10; ++i)
        if (closed(v[static_cast<std::size_t>(i)]) != oracle::complete_homogeneous_bruteforce(i, x)) ++vh_fail;
      for (int i = 0; i <= n; ++i)
        if (closed(ctx.sigma(i)) != oracle::elementary_symmetric_bruteforce(i, x)) ++sigma_fail;
    }
    out.push_back(make("hyper_vandermonde", {{"N", n}, {"gamma_max", 10}, {"inputs", inputs_per_case}},
                       hv_fail, 0.0));
    out.push_back(make("v_equals_complete_homogeneous", {{"N", n}, {"i_max", 10}, {"inputs", inputs_per_case}},
                       vh_fail, 0.0));
    out.push_back(make("elementary_symmetric", {{"N", n}, {"inputs", inputs_per_case}}, sigma_fail, 0.0));
  }
  for (int n = 2; n <= 6; ++n) {
    std::mt19937_64 rng(mix(seed, 11, static_cast<std::uint64_t>(n)));
    int fail = 0;
    for (int t = 0; t < inputs_per_case; ++t) {
      const auto x = random_point(rng, n);
      const SymmetricContext<Rational> ctx(x);
      for (int l = 0; l <= n + 4; ++l)
        if (closed(antisym_power_sum(ctx, l)) != oracle::antisym_power_direct(x, l)) ++fail;
    }
    out.push_back(make("antisymmetrized_power", {{"N", n}, {"l_max", n + 4}, {"inputs", inputs_per_case}},
                       fail, 0.0));
  }
  return out;
}

// -- closed forms vs permutation sums ---------------------------------------------------

std::vector<CheckResult> closed_form_checks(std::uint64_t seed, int points) {
  constexpr double kSpreadTol = 1e-9;
  constexpr double kZeroTol = 1e-12;
  std::vector<CheckResult> out;
  for (int n = 2; n <= 5; ++n) {
    const auto p = SystemParams::natural(n);
    const auto probe = sample_points(p, points, mix(seed, 20, static_cast<std::uint64_t>(n)));
    std::uint64_t tag = 100;
    auto seed_for = [&] { return mix(seed, static_cast<std::uint64_t>(n), ++tag); };

    // Bose ground and excited states.
    out.push_back(make(
        "bose_ground_vs_permutation_sum", np(n),
        proportionality([&](const Configuration& c) { return eval_bose_ground(c, p, false); },
                        [&](const Configuration& c) {
                          return oracle::antisymmetrize_product(bose_quanta(n, 0), c, Statistics::Bose, p);
                        },
                        p, points, seed_for()),
        kSpreadTol));
    for (int k = 1; k <= 4; ++k) {
      const Evaluator cf = [&, k](const Configuration& c) { return eval_bose_excited(k, c, p); };
      const Evaluator bf = [&, k](const Configuration& c) {
        return oracle::antisymmetrize_product(bose_quanta(n, k + 1), c, Statistics::Bose, p);
      };
      nlohmann::json params = np(n);
      params["k"] = k;
      if (closed_form_vanishes(Statistics::Bose, n, k)) {
        const Evaluator ground = [&](const Configuration& c) {
          return oracle::antisymmetrize_product(bose_quanta(n, 0), c, Statistics::Bose, p);
        };
        const Evaluator neighbour = [&, k](const Configuration& c) { return eval_bose_excited(k - 1, c, p); };
        out.push_back(make("bose_excited_bruteforce_vanishes", params, max_abs(bf, probe) / max_abs(ground, probe),
                           kZeroTol));
        out.push_back(make("bose_excited_closed_form_vanishes", params,
                           max_abs([&](const Configuration& c) { return closed(cf(c), c); }, probe) /
                               max_abs(neighbour, probe),
                           kZeroTol));
      } else {
        out.push_back(make("bose_excited_vs_permutation_sum", params, proportionality(cf, bf, p, points, seed_for()),
                           kSpreadTol));
      }
    }

    // Fermi ground and excited states.
    const Evaluator fermi_ground_bf = [&](const Configuration& c) {
      return oracle::antisymmetrize_product(fermi_quanta(n, n - 1), c, Statistics::Fermi, p);
    };
    out.push_back(make("fermi_ground_vs_permutation_sum", np(n),
                       proportionality([&](const Configuration& c) { return eval_fermi_ground_1d(c, p, false); },
                                       fermi_ground_bf, p, points, seed_for()),
                       kSpreadTol));
    for (int i = 1; i <= 4; ++i) {
      const Evaluator cf = [&, i](const Configuration& c) { return eval_fermi_excited_1d(i, c, p); };
      const Evaluator bf = [&, i](const Configuration& c) {
        return oracle::antisymmetrize_product(fermi_quanta(n, n + i), c, Statistics::Fermi, p);
      };
      nlohmann::json params = np(n);
      params["k"] = i;
      if (closed_form_vanishes(Statistics::Fermi, n, i)) {
        const Evaluator neighbour = [&, i](const Configuration& c) { return eval_fermi_excited_1d(i - 1, c, p); };
        out.push_back(make("fermi_excited_bruteforce_vanishes", params,
                           max_abs(bf, probe) / max_abs(fermi_ground_bf, probe), kZeroTol));
        out.push_back(make("fermi_excited_closed_form_vanishes", params,
                           max_abs([&](const Configuration& c) { return closed(cf(c), c); }, probe) /
                               max_abs(neighbour, probe),
                           kZeroTol));
      } else {
        out.push_back(make("fermi_excited_vs_permutation_sum", params, proportionality(cf, bf, p, points, seed_for()),
                           kSpreadTol));
      }
    }

    // Two-step exchange: against the full sum and against the general closed form.
    const auto prefix = [n] {
      QuantumNumberSet q;
      for (int i = 1; i <= n - 2; ++i) q.n.push_back(i);
      return q;
    }();
    for (int lambda = 0; lambda <= n + 4; ++lambda) {
      const Evaluator two_step = [&, lambda](const Configuration& c) {
        return oracle::two_step_exchange(prefix, lambda, c, p);
      };
      const Evaluator full = [&, lambda](const Configuration& c) {
        return oracle::antisymmetrize_product(fermi_quanta(n, lambda), c, Statistics::Fermi, p);
      };
      nlohmann::json params = np(n);
      params["lambda"] = lambda;
      const int lp = lambda - n + 1;
      const bool vanishes = lambda < n - 1 || lp == 1 || (lp >= 1 && closed_form_vanishes(Statistics::Fermi, n, lp - 1));
      if (vanishes) {
        out.push_back(make("two_step_exchange_vanishes", params,
                           max_abs(two_step, probe) / max_abs(fermi_ground_bf, probe), kZeroTol));
        if (lp >= 0) {
          const Evaluator cf = [&, lp](const Configuration& c) { return eval_psi_lambda_appendix(lp, c, p); };
          const Evaluator ref = [&](const Configuration& c) { return eval_psi_lambda_appendix(0, c, p); };
          out.push_back(make("general_closed_form_vanishes", params,
                             max_abs([&](const Configuration& c) { return closed(cf(c), c); }, probe) /
                                 max_abs(ref, probe),
                             kZeroTol));
        }
        continue;
      }
      out.push_back(make("two_step_vs_permutation_sum", params,
                         proportionality(two_step, full, p, points, seed_for()), kSpreadTol));
      if (lp <= 4) {
        out.push_back(make("general_closed_form_vs_two_step", params,
                           proportionality([&, lp](const Configuration& c) { return eval_psi_lambda_appendix(lp, c, p); },
                                           two_step, p, points, seed_for()),
                           kSpreadTol));
      }
    }
  }
  return out;
}

// -- grid spectra ----------------------------------------------------------------------------

std::vector<CheckResult> grid_checks() {
  std::vector<CheckResult> out;
  for (int n : {2, 3}) {
    const auto p = SystemParams::natural(n);
    const int levels = n == 2 ? 4 : 3;
    const double tol = n == 2 ? 1e-4 : 1e-3;
    for (Statistics s : {Statistics::Bose, Statistics::Fermi}) {
      const auto grid = oracle::grid_diagonalize(p, s, oracle::default_grid(n), levels + 2);
      std::vector<double> formula;
      std::vector<double> vanished;
      for (int k = 0; static_cast<int>(formula.size()) < levels + 2; ++k) {
        const auto line = s == Statistics::Bose ? energy_1d_bose(k, p) : energy_1d_fermi(k, p);
        (line.vanishes_identically ? vanished : formula).push_back(closed(line.energy));
      }
      double worst = 0.0;
      for (int k = 0; k < levels; ++k) {
        worst = std::max(worst, std::abs(grid[static_cast<std::size_t>(k)] - formula[static_cast<std::size_t>(k)]) /
                                    formula[static_cast<std::size_t>(k)]);
      }
      nlohmann::json params = np(n);
      params["statistics"] = to_string(s);
      params["levels"] = levels;
      out.push_back(make("grid_spectrum", params, worst, tol));

      const double gap = (grid[1] - grid[0]) / (2.0 * std::sqrt(static_cast<double>(n)));
      out.push_back(make("grid_first_gap_doubled", params, std::abs(closed(gap) - 1.0), tol));

      // A level flagged as vanishing must not be present in the sector.
      int matched = 0;
      for (double e : vanished)
        for (double g : grid)
          if (std::abs(g - e) < 1e-2 * e) ++matched;
      params["vanishing_levels"] = vanished.size();
      out.push_back(make("grid_vanishing_levels_absent", params, matched, 0.0));
    }
  }
  return out;
}

// -- residuals ---------------------------------------------------------------------------------

std::vector<CheckResult> residual_checks(std::uint64_t seed, int points) {
  std::vector<CheckResult> out;
  std::uint64_t tag = 0;
  auto run = [&](const WavefunctionDescriptor& d, double tol, nlohmann::json params) {
    const Eigenfunction psi(d);
    const double energy = closed(psi.energy()) * d.params.hbar_omega();
    const auto sum = oracle::sample_residuals([&psi](const Configuration& c) { return psi.log_eval(c); }, energy,
                                              d.params, points, mix(seed, 30, ++tag));
    params["statistics"] = to_string(d.statistics);
    params["excitation"] = d.excitation;
    params["points"] = sum.points;
    params["resampled"] = sum.resampled;
    out.push_back(make("hamiltonian_residual", params, sum.max_residual, tol));
  };
  auto desc = [](Statistics s, int k, SystemParams p) {
    WavefunctionDescriptor d;
    d.statistics = s;
    d.excitation = k;
    d.params = p;
    d.normalized = false;
    return d;
  };

  for (int n = 2; n <= 5; ++n) {
    const auto p = SystemParams::natural(n);
    run(desc(Statistics::Fermi, 0, p), 1e-6, np(n));
    run(desc(Statistics::Bose, 0, p), 1e-6, np(n));
    for (int k = 1; k <= 3; ++k) {
      if (!closed_form_vanishes(Statistics::Fermi, n, k)) run(desc(Statistics::Fermi, k, p), 1e-6, np(n));
      if (!closed_form_vanishes(Statistics::Bose, n, k)) run(desc(Statistics::Bose, k, p), 1e-6, np(n));
    }
  }
  {
    SystemParams p;
    p.n_particles = 3;
    p.mass = 1.3;
    p.omega = 0.7;
    p.hbar = 1.1;
    nlohmann::json params = np(3);
    params["mass"] = p.mass;
    params["omega"] = p.omega;
    params["hbar"] = p.hbar;
    run(desc(Statistics::Fermi, 0, p), 1e-6, params);
    run(desc(Statistics::Fermi, 1, p), 1e-6, params);
  }
  for (auto [n, d] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}, std::pair{3, 3}, std::pair{4, 2},
                      std::pair{4, 3}}) {
    const auto p = SystemParams::natural(n, d);
    for (const auto& sel : shell_selections(n, d)) {
      auto w = desc(Statistics::Fermi, 0, p);
      w.shell_selection = sel;
      nlohmann::json params = np(n, d);
      params["selection"] = sel;
      run(w, 1e-5, params);
    }
  }

  // Negative control: a wrong energy must be detected.
  {
    const auto p = SystemParams::natural(3);
    const Eigenfunction psi(desc(Statistics::Fermi, 0, p));
    const double e = psi.energy();
    const auto sum = oracle::sample_residuals([&psi](const Configuration& c) { return psi.log_eval(c); }, e + 1.0,
                                              p, points, mix(seed, 31));
    // residual ~ 1/(E+1); report how far below that the detection fell
    const double expected = 1.0 / (e + 1.0);
    nlohmann::json params = np(3);
    params["energy_offset_hbar_omega"] = 1.0;
    out.push_back(make("wrong_energy_detected", params,
                       std::abs(sum.max_residual - closed(expected)) / expected, 1e-3));
  }
  return out;
}

// -- normalization ---------------------------------------------------------------------------

std::vector<CheckResult> normalization_checks(std::uint64_t seed, std::size_t samples) {
  std::vector<CheckResult> out;
  for (int n : {2, 3}) {
    const auto p = SystemParams::natural(n);
    const auto ground = oracle::mc_normalize(
        [&](const Configuration& c) {
          auto v = eval_fermi_ground_1d_log(c, p, true);
          v.log_abs += std::log(closed(1.0));
          return v;
        },
        p, samples, mix(seed, 40, static_cast<std::uint64_t>(n)));
    nlohmann::json params = np(n);
    params["samples"] = samples;
    params["std_error"] = ground.std_error;
    out.push_back(make("fermi_ground_norm", params, std::abs(ground.value - 1.0), 0.02));

    const auto excited = oracle::mc_normalize(
        [&](const Configuration& c) {
          auto v = eval_fermi_excited_1d_log(1, c, p, true);
          v.log_abs += std::log(closed(1.0));
          return v;
        },
        p, samples, mix(seed, 41, static_cast<std::uint64_t>(n)));
    params["std_error"] = excited.std_error;
    out.push_back(make("fermi_first_excited_norm", params, std::abs(excited.value - 1.0), 0.02));
  }

  const auto p = SystemParams::natural(3);
  const auto base_psi = [&](const Configuration& c) { return eval_fermi_ground_1d_log(c, p, true); };
  const auto base = oracle::mc_normalize(base_psi, p, 20000, mix(seed, 42));
  const auto doubled = oracle::mc_normalize(
      [&](const Configuration& c) {
        auto v = base_psi(c);
        v.log_abs += std::log(2.0 * closed(1.0));
        return v;
      },
      p, 20000, mix(seed, 42));
  out.push_back(make("norm_quadratic_scaling", np(3), std::abs(doubled.value / (4.0 * base.value) - 1.0), 1e-12));

  // Standard error ~ samples^(-1/2): quadrupling the samples halves it.
  double worst = 0.0;
  double prev = 0.0;
  for (std::size_t m : {std::size_t{16384}, std::size_t{65536}, std::size_t{262144}}) {
    const auto e = oracle::mc_normalize(base_psi, p, m, mix(seed, 43, m));
    if (prev > 0.0) worst = std::max(worst, std::abs(prev / e.std_error / 2.0 - 1.0));
    prev = e.std_error;
  }
  out.push_back(make("std_error_scaling", np(3), worst, 0.25));
  return out;
}

// -- exchange symmetry ------------------------------------------------------------------------

std::vector<CheckResult> symmetry_checks(std::uint64_t seed, int points) {
  constexpr double kTol = 1e-11;
  std::vector<CheckResult> out;
  std::uint64_t tag = 0;

  auto check = [&](const std::string& name, nlohmann::json params, const SystemParams& p, Statistics s,
                   const std::function<LogAmplitude(const Configuration&)>& f) {
    const auto pts = sample_points(p, points, mix(seed, 50, ++tag));
    double worst = 0.0;
    const int n = p.n_particles;
    for (const auto& c : pts) {
      const LogAmplitude base = f(c);
      if (base.sign == 0) continue;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          const Configuration moved = apply_permutation(Permutation::transposition(n, a, b), c);
          LogAmplitude v = f(moved);
          v.log_abs += std::log(std::abs(closed(1.0, moved) / closed(1.0, c)));
          const int expected_sign = s == Statistics::Fermi ? -base.sign : base.sign;
          const double dev = v.sign != expected_sign ? 2.0 : std::abs(std::expm1(v.log_abs - base.log_abs));
          worst = std::max(worst, dev);
        }
    }
    params["statistics"] = to_string(s);
    params["points"] = points;
    out.push_back(make(name, params, worst, kTol));
  };

  for (int n = 2; n <= 6; ++n) {
    const auto p = SystemParams::natural(n);
    for (Statistics s : {Statistics::Bose, Statistics::Fermi}) {
      for (int k = 0; k <= 4; ++k) {
        if (closed_form_vanishes(s, n, k)) continue;
        WavefunctionDescriptor d;
        d.statistics = s;
        d.excitation = k;
        d.params = p;
        d.normalized = false;
        const Eigenfunction psi(d);
        nlohmann::json params = np(n);
        params["excitation"] = k;
        check("exchange_symmetry", params, p, s, [&psi](const Configuration& c) { return psi.log_eval(c); });
      }
    }
    for (int lp : {0, 2, 3, 4}) {
      if (lp >= 1 && closed_form_vanishes(Statistics::Fermi, n, lp - 1)) continue;
      nlohmann::json params = np(n);
      params["lambda_prime"] = lp;
      check("exchange_symmetry_general_form", params, p, Statistics::Fermi,
            [&, lp](const Configuration& c) { return eval_psi_lambda_appendix_log(lp, c, p); });
    }
    for (int d = 2; d <= 3; ++d) {
      const auto pd = SystemParams::natural(n, d);
      {
        WavefunctionDescriptor w;
        w.statistics = Statistics::Bose;
        w.params = pd;
        w.normalized = false;
        const Eigenfunction psi(w);
        check("exchange_symmetry", np(n, d), pd, Statistics::Bose,
              [&psi](const Configuration& c) { return psi.log_eval(c); });
      }
      const auto selections = shell_selections(n, d);
      const std::size_t count = n == 3 ? selections.size() : 1;
      for (std::size_t i = 0; i < count; ++i) {
        WavefunctionDescriptor w;
        w.statistics = Statistics::Fermi;
        w.params = pd;
        w.shell_selection = selections[i];
        w.normalized = false;
        const Eigenfunction psi(w);
        nlohmann::json params = np(n, d);
        params["selection"] = selections[i];
        check("exchange_symmetry", params, pd, Statistics::Fermi,
              [&psi](const Configuration& c) { return psi.log_eval(c); });
      }
    }
  }
  return out;
}

// -- suites -------------------------------------------------------------------------------------

Report run_suite(const std::string& suite, std::uint64_t seed) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  Report r;
  r.suite = suite;
  r.seed = seed;
  auto add = [&r](std::vector<CheckResult> more) {
    for (auto& c : more) r.checks.push_back(std::move(c));
  };
  const bool all = suite == "all";
  if (all || suite == "identities") add(identity_checks(seed));
  if (all || suite == "oracle1d") {
    add(grid_checks());
    add(closed_form_checks(seed));
  }
  if (all || suite == "residuals") add(residual_checks(seed));
  if (all || suite == "normalization") add(normalization_checks(seed));
  if (all || suite == "symmetry") add(symmetry_checks(seed));
  return r;
}

}  // namespace nbody::verify
