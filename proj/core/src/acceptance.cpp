#include "pdimer/acceptance.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <tuple>

#include "pdimer/analytic.hpp"
#include "pdimer/correlations.hpp"
#include "pdimer/dynamics.hpp"
#include "pdimer/error.hpp"
#include "pdimer/parallel.hpp"
#include "pdimer/random.hpp"
#include "pdimer/scenarios.hpp"

namespace pdimer {

namespace {

std::string g(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    ok = ok && cond;
    if (!detail.empty()) detail += "; ";
    detail += what;
    if (!cond) detail += " [FAIL]";
  }
};

struct Context {
  std::size_t workers;
  unsigned long long seed;
};

ScenarioConfig catalog(const char* name) { return *find_scenario(name); }

double max_state_diff(const std::vector<DensityMatrix4>& a, const std::vector<DensityMatrix4>& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, max_abs_diff(a[k].matrix(), b[k].matrix()));
  return worst;
}

// Discord of every state of a trajectory whose time lies in [lo, hi].
double mean_discord(const Trajectory& traj, double lo, double hi) {
  double sum = 0.0;
  int n = 0;
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    const double t = traj.times[k];
    if (t < lo - 1e-12 || t > hi + 1e-12) continue;
    sum += correlation_report(traj.states[k]).discord;
    ++n;
  }
  return n ? sum / n : 0.0;
}

Check oracle_equivalence(const Context& ctx) {
  Check c;

  const ScenarioConfig fig1b = catalog("fig1b");
  const PointSetup p = resolve_point(fig1b, 0.0);
  const auto analytic = point_states(fig1b, p, choose_method(p));
  const auto numeric = point_states(fig1b, p, SolutionMethod::Integrator);
  const double d1b = max_state_diff(analytic, numeric);
  c.require(d1b < 1e-6, "fig1b max|analytic - RK4| = " + g(d1b));

  const std::vector<double> times{0.0, 0.5, 1.0, 2.0, 5.0, 10.0};
  const WaveguideParams w;
  constexpr int kDraws = 50;
  std::array<double, 3> worst{};
  std::mutex mu;

  parallel_for(3 * kDraws, ctx.workers, [&](std::size_t job) {
    const std::size_t family = job / kDraws;
    Rng rng(ctx.seed + 1000 * family + job);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    DriveConfig drive;
    CollectiveParams cp;
    XStateParams x;
    std::vector<DensityMatrix4> closed;
    if (family == 0) {
      cp = collective_params(w, 0.3 + 1.7 * u(rng));
      x = random_x_params(rng, false);
      const ResonantSolutionParams rp{x, cp.decay_rate, cp.collective_decay, cp.coupling};
      for (double t : times) closed.push_back(resonant_solution(t, rp));
    } else if (family == 1) {
      cp = collective_params(w, 0.75 + 0.5 * std::floor(3.0 * u(rng)));
      x = random_x_params(rng, true);
      for (double t : times) closed.push_back(gamma_zero_solution(t, x, cp.decay_rate));
    } else {
      cp.decay_rate = 1.0;
      cp.collective_decay = 0.0;
      cp.coupling = 2.0 * u(rng) - 1.0;
      drive.molecular_detuning = 0.1 + 1.9 * u(rng);
      if (u(rng) < 0.5) drive.molecular_detuning = -drive.molecular_detuning;
      x = random_x_params(rng, true);
      for (double t : times) {
        closed.push_back(detuned_solution(t, x, cp.decay_rate, cp.coupling, drive.molecular_detuning));
      }
    }
    const auto traj = evolve(x_state(x), cp, drive, times);
    const double d = max_state_diff(closed, traj.states);
    std::lock_guard lock(mu);
    worst[family] = std::max(worst[family], d);
  });

  const char* names[] = {"resonant", "gamma=0", "detuned"};
  for (int f = 0; f < 3; ++f) c.require(worst[f] < 1e-6, std::string(names[f]) + " x50 max diff " + g(worst[f]));
  return c;
}

Check fig1a_classical(const Context& ctx) {
  Check c;
  const auto res = run_scenario(catalog("fig1a"), {ctx.workers, {}});
  const auto& recs = res.blocks.front().records;
  const auto& r0 = recs.front().report;
  const double e0 = std::max({std::abs(r0.mutual_information - 1.0), std::abs(r0.classical - 1.0), std::abs(r0.discord)});
  c.require(e0 < 1e-6, "t=0: I=" + g(r0.mutual_information) + " C=" + g(r0.classical) + " D=" + g(r0.discord));
  double max_c = 0.0, max_gap = 0.0;
  for (const auto& rec : recs) {
    if (rec.t <= 10.0) continue;
    max_c = std::max(max_c, rec.report.classical);
    max_gap = std::max(max_gap, std::abs(rec.report.discord - rec.report.mutual_information));
  }
  c.require(max_c < 1e-3, "t>10 max C = " + g(max_c));
  c.require(max_gap < 1e-3, "t>10 max|D - I| = " + g(max_gap));
  return c;
}

Check fig2a_bound(const Context& ctx) {
  Check c;
  const auto res = run_scenario(catalog("fig2a"), {ctx.workers, {}});
  const auto& recs = res.blocks.front().records;
  double lowest = recs.front().report.bound_lhs;
  for (const auto& rec : recs) lowest = std::min(lowest, rec.report.bound_lhs);
  c.require(lowest >= -1e-6, "min bound_lhs = " + g(lowest));
  const double b0 = recs.front().report.bound_lhs;
  c.require(std::abs(b0) < 1e-6, "bound_lhs(0) = " + g(b0));
  return c;
}

Check fig2b_xi(const Context& ctx) {
  Check c;
  const auto res = run_scenario(catalog("fig2b"), {ctx.workers, {}});
  double worst = 0.0;
  for (const auto& b : res.blocks)
    for (const auto& rec : b.records) worst = std::max(worst, rec.report.mutual_information);
  c.require(worst < 1e-8, "max I over " + std::to_string(res.row_count()) + " samples = " + g(worst));
  return c;
}

Check fig3_driven(const Context& ctx) {
  Check c;
  const ScenarioConfig cfg = catalog("fig3");
  const double t_off = *cfg.drive.switch_off;

  const PointSetup p = resolve_point(cfg, 1.5);
  const auto times = uniform_times(cfg.t_max, cfg.samples);
  const auto traj = evolve(p.initial_state, p.collective, p.drive, times, EvolveOptions{cfg.dt});

  const double mean = mean_discord(traj, 8.0, 10.0);
  c.require(std::abs(mean - 0.06) <= 0.03, "l=1.5 mean D[8,10] = " + g(mean));

  double crossing = -1.0, d15 = -1.0, ground15 = 0.0;
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (times[k] <= t_off) continue;
    const double d = correlation_report(traj.states[k]).discord;
    if (crossing < 0.0 && d < 1e-3) crossing = times[k];
    if (std::abs(times[k] - 15.0) < 1e-9) {
      d15 = d;
      ground15 = traj.states[k].population(0);
    }
  }
  c.require(crossing >= 0.0 && crossing <= 15.0, "first D < 1e-3 after switch-off at t = " + g(crossing));
  c.require(ground15 > 0.99, "ground population(15) = " + g(ground15) + " (D(15) = " + g(d15) + ")");

  std::vector<double> amplitudes;
  for (double l : cfg.sweep.values())
    if (l >= 1.5 - 1e-12) amplitudes.push_back(l);
  const auto steady_times = uniform_times(10.0, 1001);
  std::vector<double> worst(amplitudes.size(), 0.0);
  parallel_for(amplitudes.size(), ctx.workers, [&](std::size_t i) {
    const PointSetup q = resolve_point(cfg, amplitudes[i]);
    const auto tr = evolve(q.initial_state, q.collective, q.drive, steady_times, EvolveOptions{cfg.dt});
    for (std::size_t k = 0; k < steady_times.size(); ++k) {
      if (steady_times[k] < 8.0 - 1e-12) continue;
      worst[i] = std::max(worst[i], entanglement_of_formation(tr.states[k]));
    }
  });
  const double ef = *std::max_element(worst.begin(), worst.end());
  c.require(ef <= 1e-9, "max E_F[8,10] over " + std::to_string(amplitudes.size()) + " amplitudes >= 1.5 = " + g(ef));
  return c;
}

Check collective_zeros(const Context&) {
  Check c;
  const WaveguideParams w;
  const auto one = collective_params(w, 1.0);
  const auto three_quarters = collective_params(w, 0.75);
  c.require(one.coupling == 0.0, "V(1) = " + g(one.coupling));
  c.require(three_quarters.collective_decay == 0.0, "gamma(3/4) = " + g(three_quarters.collective_decay));
  c.require(std::abs(one.collective_decay - 0.8209) <= 1e-4, "gamma(1) = " + std::to_string(one.collective_decay));
  return c;
}

double fitted_rate(const std::vector<double>& t, const std::vector<double>& pop) {
  double st = 0, sy = 0, stt = 0, sty = 0;
  const double n = static_cast<double>(t.size());
  for (std::size_t k = 0; k < t.size(); ++k) {
    const double y = std::log(pop[k]);
    st += t[k];
    sy += y;
    stt += t[k] * t[k];
    sty += t[k] * y;
  }
  return -(n * sty - st * sy) / (n * stt - st * st);
}

Check decay_rates(const Context&) {
  Check c;
  const auto cp = collective_params(WaveguideParams{}, 1.0);
  const auto times = uniform_times(3.0, 301);
  for (auto [which, name, expected] : {std::tuple{BellState::PsiMinus, "Psi-", cp.decay_rate - cp.collective_decay},
                                       std::tuple{BellState::PsiPlus, "Psi+", cp.decay_rate + cp.collective_decay}}) {
    const auto traj = evolve(bell_state(which), cp, DriveConfig{}, times);
    std::vector<double> pop;
    for (const auto& s : traj.states) {
      const auto b = bell_populations(s);
      pop.push_back(which == BellState::PsiMinus ? b.psi_minus : b.psi_plus);
    }
    const double rate = fitted_rate(times, pop);
    const double rel = std::abs(rate - expected) / expected;
    c.require(rel < 5e-3, std::string(name) + " rate " + std::to_string(rate) + " vs " + std::to_string(expected));
  }
  return c;
}

Check property_suite(const Context& ctx) {
  Check c;
  constexpr int kMixed = 1000, kPure = 200;
  struct Worst {
    double identity = 0, negative = 0, pure = 0, unitary = 0;
  };
  std::vector<Worst> per(kMixed + kPure);

  parallel_for(per.size(), ctx.workers, [&](std::size_t i) {
    Rng rng(ctx.seed + 7919 * i);
    Worst& w = per[i];
    if (i < kMixed) {
      const auto rho = random_density_matrix(rng);
      const auto r = correlation_report(rho);
      w.identity = std::abs(r.mutual_information - r.classical - r.discord);
      w.negative = std::max(0.0, -std::min(r.classical, r.discord));
      const auto r2 = correlation_report(apply_random_local_unitary(rho, rng));
      w.unitary = std::max({std::abs(r.mutual_information - r2.mutual_information), std::abs(r.classical - r2.classical),
                            std::abs(r.discord - r2.discord), std::abs(r.concurrence - r2.concurrence)});
    } else {
      const auto rho = random_pure_state(rng);
      const double sb = von_neumann_entropy(partial_trace(rho, Subsystem::B));
      w.pure = std::abs(correlation_report(rho).discord - sb);
    }
  });

  Worst m;
  for (const auto& w : per) {
    m.identity = std::max(m.identity, w.identity);
    m.negative = std::max(m.negative, w.negative);
    m.pure = std::max(m.pure, w.pure);
    m.unitary = std::max(m.unitary, w.unitary);
  }
  c.require(m.identity < 2e-6, "max|I - C - D| = " + g(m.identity));
  c.require(m.negative <= 1e-6, "min(C, D) floor violation = " + g(m.negative));
  c.require(m.pure < 1e-5, "pure max|D - S_B| = " + g(m.pure));
  c.require(m.unitary < 1e-6, "local-unitary max change = " + g(m.unitary));
  double bell = 0.0;
  for (auto b : {BellState::PsiPlus, BellState::PsiMinus, BellState::PhiPlus, BellState::PhiMinus}) {
    bell = std::max(bell, std::abs(concurrence(bell_state(b)) - 1.0));
  }
  c.require(bell < 1e-9, "Bell max|C - 1| = " + g(bell));
  return c;
}

Check noninteracting_control(const Context& ctx) {
  Check c;
  const auto res = run_scenario(catalog("fig3-noninteracting"), {ctx.workers, {}});
  double worst = 0.0;
  for (const auto& b : res.blocks)
    for (const auto& rec : b.records) worst = std::max(worst, rec.report.discord);
  c.require(worst < 1e-6, "max D over " + std::to_string(res.row_count()) + " samples = " + g(worst));
  return c;
}

Check numerical_hygiene(const Context& ctx) {
  Check c;

  // Step halving on representative driven and undriven points.
  struct Probe {
    const char* scenario;
    double value;
  };
  double halving = 0.0;
  for (auto [name, value] : {Probe{"fig3", 1.5}, Probe{"fig3", 3.6}, Probe{"fig4", 2.0}, Probe{"fig1b", 0.0}}) {
    const ScenarioConfig cfg = catalog(name);
    const PointSetup p = resolve_point(cfg, value);
    const auto times = uniform_times(cfg.t_max, 201);
    const auto a = evolve(p.initial_state, p.collective, p.drive, times, EvolveOptions{cfg.dt});
    const auto b = evolve(p.initial_state, p.collective, p.drive, times, EvolveOptions{cfg.dt / 2});
    halving = std::max(halving, max_state_diff(a.states, b.states));
  }
  c.require(halving < 1e-8, "step-halving max diff = " + g(halving));

  // Diagnostics over every point of every catalog scenario.
  struct Job {
    const ScenarioConfig* cfg;
    double value;
  };
  std::vector<Job> jobs;
  for (const auto& cfg : scenario_catalog())
    for (double v : cfg.sweep.values()) jobs.push_back({&cfg, v});
  struct Diag {
    double trace = 0, herm = 0, min_eig = 0;
    std::string error;
  };
  std::vector<Diag> diags(jobs.size());
  parallel_for(jobs.size(), ctx.workers, [&](std::size_t i) {
    const auto& cfg = *jobs[i].cfg;
    try {
      const PointSetup p = resolve_point(cfg, jobs[i].value);
      const auto times = uniform_times(cfg.t_max, cfg.samples);
      const auto tr = evolve(p.initial_state, p.collective, p.drive, times, EvolveOptions{cfg.dt});
      diags[i] = {tr.max_trace_drift, tr.max_hermiticity_defect, tr.min_eigenvalue, {}};
    } catch (const Error& e) {
      diags[i].error = cfg.name + ": " + e.what();
    }
  });
  Diag m;
  for (const auto& d : diags) {
    m.trace = std::max(m.trace, d.trace);
    m.herm = std::max(m.herm, d.herm);
    m.min_eig = std::min(m.min_eig, d.min_eig);
    if (m.error.empty()) m.error = d.error;
  }
  c.require(m.error.empty(), std::to_string(jobs.size()) + " trajectories" + (m.error.empty() ? "" : " (" + m.error + ")"));
  c.require(m.trace < 1e-10, "max trace drift = " + g(m.trace));
  c.require(m.herm < 1e-10, "max Hermiticity defect = " + g(m.herm));
  c.require(m.min_eig >= -1e-8, "min eigenvalue = " + g(m.min_eig));
  return c;
}

Check fig4_monotonicity(const Context&) {
  Check c;
  const ScenarioConfig cfg = catalog("fig4");
  const auto times = uniform_times(10.0, 1001);
  double steady[2];
  const double deltas[2] = {0.0, 2.0};
  for (int i = 0; i < 2; ++i) {
    const PointSetup p = resolve_point(cfg, deltas[i]);
    steady[i] = mean_discord(evolve(p.initial_state, p.collective, p.drive, times, EvolveOptions{cfg.dt}), 8.0, 10.0);
  }
  c.require(steady[1] < steady[0], "mean D[8,10]: delta=0 " + g(steady[0]) + ", delta=2 " + g(steady[1]));
  return c;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts) {
  const Context ctx{opts.workers ? opts.workers : worker_count(), opts.seed};
  struct Entry {
    const char* id;
    const char* title;
    Check (*fn)(const Context&);
  };
  const Entry entries[] = {
      {"1", "closed forms match the master equation", oracle_equivalence},
      {"2", "rho_C: C = I = 1 at t = 0, discord carries I later", fig1a_classical},
      {"3", "entropy bound D - C >= 0 for rho_MM", fig2a_bound},
      {"4", "Xi family stays uncorrelated", fig2b_xi},
      {"5", "driven dimer: steady discord, decay after switch-off, no entanglement", fig3_driven},
      {"6", "collective parameter zeros", collective_zeros},
      {"7", "Psi+/Psi- decay at Gamma +/- gamma", decay_rates},
      {"8", "correlation measure properties", property_suite},
      {"9", "V = 0 control stays uncorrelated under the laser", noninteracting_control},
      {"10", "integrator hygiene", numerical_hygiene},
      {"4b", "detuning lowers the steady discord", fig4_monotonicity},
  };

  std::vector<CriterionResult> out;
  for (const auto& e : entries) {
    CriterionResult r{e.id, e.title, false, {}, 0.0};
    const auto start = std::chrono::steady_clock::now();
    try {
      const Check c = e.fn(ctx);
      r.passed = c.ok;
      r.detail = c.detail;
    } catch (const std::exception& ex) {
      r.detail = std::string("exception: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (opts.on_result) opts.on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

void print_criterion(std::ostream& out, const CriterionResult& r) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.1f s", r.seconds);
  out << (r.passed ? "PASS  " : "FAIL  ") << r.id << "  " << r.title << ": " << r.detail << " (" << secs << ")\n";
}

}  // namespace pdimer
