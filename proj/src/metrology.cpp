// Copyright 2026 The spinlv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spinlv/metrology.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "spinlv/constants.hpp"
#include "spinlv/rng.hpp"

namespace spinlv {
namespace {

constexpr std::uint64_t kTrialStreamTag = 0xE57;
constexpr std::uint64_t kSqlStreamTag = 0x5CA7;
constexpr double kProbFloor = 1e-300;

void check_bipartite(const BipartiteState& state) {
  if (state.d1 == 0 || state.d2 == 0 ||
      state.amplitudes.size() != state.d1 * state.d2) {
    throw std::invalid_argument("bipartite state dimensions are inconsistent");
  }
  if (std::abs(norm(state.amplitudes) - 1.0) > 1e-12) {
    throw std::invalid_argument("bipartite state must be normalized");
  }
}

double entropy_of_density(const CMatrix& rho) {
  EighResult eg = eigh(rho, 1e-9);
  double s = 0.0;
  for (double lambda : eg.values) {
    if (lambda > 1e-15) {
      s -= lambda * std::log(lambda);
    }
  }
  return s;
}

// counts[point][outcome]; weights may be fractional (exact path).
double log_likelihood(const FringeModel& model, const std::vector<double>& phi_grid,
                      const std::vector<std::vector<double>>& weights, double kappa) {
  double ll = 0.0;
  for (std::size_t i = 0; i < phi_grid.size(); ++i) {
    const std::vector<double> p = model.probabilities(phi_grid[i], kappa);
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (weights[i][k] > 0.0) {
        ll += weights[i][k] * std::log(std::max(p[k], kProbFloor));
      }
    }
  }
  return ll;
}

// Golden-section maximization of the log likelihood on [lo, hi], followed
// by a short Newton polish on the score. Golden section alone stalls at
// sqrt(eps |L| / L'') because the likelihood is flat at its peak; the
// finite-difference score is linear there and localizes the root far below
// that floor.
double golden_max(const FringeModel& model, const std::vector<double>& phi_grid,
                  const std::vector<std::vector<double>>& weights, double lo,
                  double hi, double window) {
  constexpr double kInvPhi = 0.6180339887498949;
  const double tol = window * 1e-8;
  double a = lo, b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = log_likelihood(model, phi_grid, weights, x1);
  double f2 = log_likelihood(model, phi_grid, weights, x2);
  int guard = 0;
  while (b - a > tol && guard++ < 200) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = log_likelihood(model, phi_grid, weights, x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = log_likelihood(model, phi_grid, weights, x1);
    }
  }
  double x = 0.5 * (a + b);

  const double h = window * 1e-6;
  for (int it = 0; it < 4; ++it) {
    const double lm = log_likelihood(model, phi_grid, weights, x - h);
    const double lc = log_likelihood(model, phi_grid, weights, x);
    const double lp = log_likelihood(model, phi_grid, weights, x + h);
    const double d1 = (lp - lm) / (2.0 * h);
    const double d2 = (lp - 2.0 * lc + lm) / (h * h);
    if (!(d2 < 0.0)) {
      break; // not locally concave; keep the golden-section result
    }
    const double step = -d1 / d2;
    if (std::abs(step) > hi - lo) {
      break;
    }
    x = std::min(std::max(x + step, lo), hi);
    if (std::abs(step) < window * 1e-13) {
      break;
    }
  }
  return x;
}

} // namespace

double qfi_pure(const CVector& state, const CMatrix& generator) {
  if (state.size() != generator.dim()) {
    throw std::invalid_argument("qfi_pure: dimension mismatch");
  }
  if (hermiticity_error(generator) > 1e-10) {
    throw std::invalid_argument("qfi_pure: generator must be Hermitian");
  }
  const CVector gs = generator * state;
  const double mean = inner(state, gs).real();
  double second = 0.0;
  for (const cplx& v : gs) {
    second += v.real() * v.real() + v.imag() * v.imag();
  }
  return 4.0 * (second - mean * mean);
}

CfiResult cfi_fringe(const FringeRecord& minus, const FringeRecord& center,
                     const FringeRecord& plus, double dkappa) {
  if (!(dkappa > 0.0)) {
    throw std::invalid_argument("dkappa must be positive");
  }
  const std::size_t n = center.phi_rad.size();
  if (minus.phi_rad.size() != n || plus.phi_rad.size() != n) {
    throw std::invalid_argument("cfi_fringe: grids do not match");
  }
  CfiResult res;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& pm = minus.probabilities[i];
    const auto& pc = center.probabilities[i];
    const auto& pp = plus.probabilities[i];
    for (std::size_t k = 0; k < pc.size(); ++k) {
      if (pc[k] < 1e-12) {
        ++res.excluded_outcomes;
        continue;
      }
      const double dp = (pp[k] - pm[k]) / (2.0 * dkappa);
      res.value += dp * dp / pc[k];
    }
  }
  return res;
}

CMatrix reduced_density(const BipartiteState& state, int subsystem) {
  check_bipartite(state);
  const std::size_t d1 = state.d1;
  const std::size_t d2 = state.d2;
  const CVector& psi = state.amplitudes;
  if (subsystem == 1) {
    CMatrix rho(d1);
    for (std::size_t a = 0; a < d1; ++a) {
      for (std::size_t b = 0; b < d1; ++b) {
        cplx acc{0.0, 0.0};
        for (std::size_t c = 0; c < d2; ++c) {
          acc += psi[a * d2 + c] * std::conj(psi[b * d2 + c]);
        }
        rho(a, b) = acc;
      }
    }
    return rho;
  }
  if (subsystem == 2) {
    CMatrix rho(d2);
    for (std::size_t a = 0; a < d2; ++a) {
      for (std::size_t b = 0; b < d2; ++b) {
        cplx acc{0.0, 0.0};
        for (std::size_t c = 0; c < d1; ++c) {
          acc += psi[c * d2 + a] * std::conj(psi[c * d2 + b]);
        }
        rho(a, b) = acc;
      }
    }
    return rho;
  }
  throw std::invalid_argument("subsystem must be 1 or 2");
}

double entanglement_entropy(const BipartiteState& state) {
  return entropy_of_density(reduced_density(state, 1));
}

BipartiteState apply_local_lv(const BipartiteState& state, SpinQuantumNumber j,
                              double kappa, double t) {
  check_bipartite(state);
  const std::size_t d = j.dimension();
  if (state.d1 != d || state.d2 != d) {
    throw std::invalid_argument("state subsystems must both have dimension 2j+1");
  }
  BipartiteState out = state;
  const double kt = kappa * t;
  for (std::size_t a = 0; a < d; ++a) {
    const double ma = j.m_value(a);
    for (std::size_t b = 0; b < d; ++b) {
      const double mb = j.m_value(b);
      const double angle = -kt * (ma * ma + mb * mb);
      out.amplitudes[a * d + b] *= cplx{std::cos(angle), std::sin(angle)};
    }
  }
  return out;
}

BipartiteState apply_collective_control(const BipartiteState& state,
                                        SpinQuantumNumber j, double kappa,
                                        double t) {
  check_bipartite(state);
  const std::size_t d = j.dimension();
  if (state.d1 != d || state.d2 != d) {
    throw std::invalid_argument("state subsystems must both have dimension 2j+1");
  }
  BipartiteState out = state;
  const double kt = kappa * t;
  for (std::size_t a = 0; a < d; ++a) {
    const double ma = j.m_value(a);
    for (std::size_t b = 0; b < d; ++b) {
      const double mb = j.m_value(b);
      const double msum = ma + mb;
      const double angle = -kt * msum * msum;
      out.amplitudes[a * d + b] *= cplx{std::cos(angle), std::sin(angle)};
    }
  }
  return out;
}

LocalityResult locality_check(const BipartiteState& state, SpinQuantumNumber j,
                              double kappa, double t) {
  LocalityResult res;
  res.s_before = entanglement_entropy(state);
  res.s_after_local = entanglement_entropy(apply_local_lv(state, j, kappa, t));
  res.s_after_nonlocal =
      entanglement_entropy(apply_collective_control(state, j, kappa, t));
  return res;
}

FringeModel protocol_model(const EstimationProtocol& proto, double kappa) {
  return FringeModel(make_spin_ops(proto.j),
                     free_precession_sequence(proto.t_s, kappa),
                     superposition_state(proto.j, proto.m1, proto.m2),
                     pair_readout_basis(proto.j, proto.m1, proto.m2));
}

std::vector<double> protocol_phi_grid(const EstimationProtocol& proto) {
  if (proto.phi_points < 3) {
    throw std::invalid_argument("protocol needs at least 3 phase points");
  }
  std::vector<double> grid(proto.phi_points);
  for (int i = 0; i < proto.phi_points; ++i) {
    grid[i] = 2.0 * constants::kPi * i / proto.phi_points;
  }
  return grid;
}

EstimationResult estimate_kappa(const EstimationProtocol& proto, double true_kappa,
                                int n_atoms, int trials, std::uint64_t seed) {
  if (trials < 2) {
    throw std::invalid_argument("estimate_kappa needs at least 2 trials");
  }
  if (n_atoms < 1) {
    throw std::invalid_argument("estimate_kappa needs at least 1 atom");
  }
  if (!(proto.kappa_max > proto.kappa_min)) {
    throw std::invalid_argument("kappa search window is empty");
  }
  if (proto.kappa_grid_points < 3) {
    throw std::invalid_argument("kappa grid needs at least 3 points");
  }

  const FringeModel model = protocol_model(proto, true_kappa);
  const std::vector<double> phi_grid = protocol_phi_grid(proto);
  const std::size_t n_phi = phi_grid.size();
  const std::size_t dim = model.dim();

  // Exact single-atom probabilities at the true kappa, shared by all atoms.
  std::vector<std::vector<double>> p_true(n_phi);
  for (std::size_t i = 0; i < n_phi; ++i) {
    p_true[i] = model.probabilities(phi_grid[i], true_kappa);
  }

  // Likelihood table over the search grid, shared by all trials.
  const int n_grid = proto.kappa_grid_points;
  std::vector<double> kappa_grid(n_grid);
  for (int g = 0; g < n_grid; ++g) {
    kappa_grid[g] = proto.kappa_min +
                    (proto.kappa_max - proto.kappa_min) * g / (n_grid - 1);
  }
  std::vector<std::vector<std::vector<double>>> p_grid(n_grid);
  for (int g = 0; g < n_grid; ++g) {
    p_grid[g].resize(n_phi);
    for (std::size_t i = 0; i < n_phi; ++i) {
      p_grid[g][i] = model.probabilities(phi_grid[i], kappa_grid[g]);
    }
  }

  const double window = proto.kappa_max - proto.kappa_min;

  EstimationResult res;
  res.trials = trials;
  res.n_atoms = n_atoms;
  res.seed = seed;
  res.kappa_hats.reserve(trials);

  for (int trial = 0; trial < trials; ++trial) {
    // Pooled weights: multinomial counts, or the exact probabilities when
    // shots_per_atom == 0 (noise-free inversion).
    std::vector<std::vector<double>> weights(n_phi, std::vector<double>(dim, 0.0));
    if (proto.shots_per_atom == 0) {
      weights = p_true;
    } else {
      for (int atom = 0; atom < n_atoms; ++atom) {
        auto gen = rng::engine(seed, {kTrialStreamTag,
                                      static_cast<std::uint64_t>(trial),
                                      static_cast<std::uint64_t>(atom)});
        for (std::size_t i = 0; i < n_phi; ++i) {
          const std::vector<std::uint64_t> counts = sample_multinomial(
              gen, static_cast<std::uint64_t>(proto.shots_per_atom), p_true[i]);
          for (std::size_t k = 0; k < dim; ++k) {
            weights[i][k] += static_cast<double>(counts[k]);
          }
        }
      }
    }

    // Degenerate likelihood: every observed count in a single outcome.
    int outcomes_hit = 0;
    for (std::size_t k = 0; k < dim; ++k) {
      double col = 0.0;
      for (std::size_t i = 0; i < n_phi; ++i) {
        col += weights[i][k];
      }
      if (col > 0.0) {
        ++outcomes_hit;
      }
    }
    if (outcomes_hit <= 1) {
      ++res.degenerate_trials;
    }

    // Grid search on the shared table.
    int best = 0;
    double best_ll = -1e308;
    for (int g = 0; g < n_grid; ++g) {
      double ll = 0.0;
      for (std::size_t i = 0; i < n_phi; ++i) {
        for (std::size_t k = 0; k < dim; ++k) {
          if (weights[i][k] > 0.0) {
            ll += weights[i][k] * std::log(std::max(p_grid[g][i][k], kProbFloor));
          }
        }
      }
      if (ll > best_ll) {
        best_ll = ll;
        best = g;
      }
    }
    const double lo = kappa_grid[std::max(0, best - 1)];
    const double hi = kappa_grid[std::min(n_grid - 1, best + 1)];
    res.kappa_hats.push_back(golden_max(model, phi_grid, weights, lo, hi, window));
  }

  double mean = 0.0;
  for (double k : res.kappa_hats) {
    mean += k;
  }
  mean /= trials;
  double var = 0.0;
  for (double k : res.kappa_hats) {
    var += (k - mean) * (k - mean);
  }
  res.kappa_hat = mean;
  res.sigma = std::sqrt(var / (trials - 1));
  return res;
}

SqlScanResult sql_scan(const EstimationProtocol& proto, double true_kappa,
                       const std::vector<int>& n_list, int trials,
                       std::uint64_t seed) {
  std::set<int> distinct(n_list.begin(), n_list.end());
  if (distinct.size() < 4) {
    throw std::invalid_argument("sql_scan needs at least 4 distinct N values");
  }

  SqlScanResult res;
  res.trials = trials;
  res.seed = seed;
  for (int n_atoms : n_list) {
    const std::uint64_t seed_n = rng::substream(
        seed, {kSqlStreamTag, static_cast<std::uint64_t>(n_atoms)});
    const EstimationResult est =
        estimate_kappa(proto, true_kappa, n_atoms, trials, seed_n);
    res.points.push_back(SqlPoint{n_atoms, est.sigma});
  }

  // Least squares of log sigma against log N.
  const std::size_t n = res.points.size();
  double sx = 0, sy = 0;
  for (const SqlPoint& p : res.points) {
    sx += std::log(static_cast<double>(p.n_atoms));
    sy += std::log(p.sigma);
  }
  const double mx = sx / n;
  const double my = sy / n;
  double sxx = 0, sxy = 0;
  for (const SqlPoint& p : res.points) {
    const double dx = std::log(static_cast<double>(p.n_atoms)) - mx;
    const double dy = std::log(p.sigma) - my;
    sxx += dx * dx;
    sxy += dx * dy;
  }
  res.slope = sxy / sxx;
  res.intercept = my - res.slope * mx;
  double ss_res = 0.0;
  for (const SqlPoint& p : res.points) {
    const double x = std::log(static_cast<double>(p.n_atoms));
    const double r = std::log(p.sigma) - (res.intercept + res.slope * x);
    ss_res += r * r;
  }
  res.slope_stderr =
      n > 2 ? std::sqrt(ss_res / static_cast<double>(n - 2) / sxx) : 0.0;
  return res;
}

} // namespace spinlv
