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

#pragma once

#include <cstdint>
#include <vector>

#include "spinlv/cmatrix.hpp"
#include "spinlv/fringe.hpp"
#include "spinlv/spin_ops.hpp"

// Fisher-information analytics, Monte-Carlo estimation of the kappa
// coupling from simulated interferometer counts, standard-quantum-limit
// scaling scans, and entanglement checks for the locality of kappa Jz^2.

namespace spinlv {

// 4 (<G^2> - <G>^2) for a pure state and Hermitian generator.
double qfi_pure(const CVector& state, const CMatrix& generator);

struct CfiResult {
  double value = 0.0;
  int excluded_outcomes = 0; // outcomes skipped because p < 1e-12
};

// Classical Fisher information per grid point summed over the grid, from
// exact fringes at kappa - dkappa, kappa, kappa + dkappa (central
// differences). All three records must share the same grid.
CfiResult cfi_fringe(const FringeRecord& minus, const FringeRecord& center,
                     const FringeRecord& plus, double dkappa);

struct BipartiteState {
  std::size_t d1 = 0;
  std::size_t d2 = 0;
  CVector amplitudes; // length d1 * d2, index a * d2 + b
};

CMatrix reduced_density(const BipartiteState& state, int subsystem /* 1 or 2 */);

// Von Neumann entropy of the reduced state of subsystem 1, in nats.
double entanglement_entropy(const BipartiteState& state);

// exp(-i kappa t (J1z^2 + J2z^2)): a product of single-atom phase factors.
BipartiteState apply_local_lv(const BipartiteState& state, SpinQuantumNumber j,
                              double kappa, double t);
// Contrast case exp(-i kappa t (J1z + J2z)^2); not a physical model here,
// only the nonlocal control for the entanglement-invariance check.
BipartiteState apply_collective_control(const BipartiteState& state,
                                        SpinQuantumNumber j, double kappa, double t);

struct LocalityResult {
  double s_before = 0.0;
  double s_after_local = 0.0;
  double s_after_nonlocal = 0.0;
};

LocalityResult locality_check(const BipartiteState& state, SpinQuantumNumber j,
                              double kappa, double t);

// Reference estimation protocol: per-atom Ramsey on the superposition of
// two Jz projections, free evolution for time t with the scanned analysis
// phase, readout in the pair +/- basis.
struct EstimationProtocol {
  SpinQuantumNumber j = SpinQuantumNumber(3.5);
  double m1 = -3.5;
  double m2 = -0.5;
  double t_s = 1.0;
  int phi_points = 16;      // uniform grid over [0, 2 pi)
  int shots_per_atom = 50;  // per grid point; 0 = exact-probability path
  double kappa_min = 0.0;
  double kappa_max = 0.3;
  int kappa_grid_points = 96;
};

FringeModel protocol_model(const EstimationProtocol& proto, double kappa);
std::vector<double> protocol_phi_grid(const EstimationProtocol& proto);

struct EstimationResult {
  double kappa_hat = 0.0; // mean over trials, rad/s
  double sigma = 0.0;     // standard deviation over trials, rad/s
  int trials = 0;
  int n_atoms = 0;
  std::uint64_t seed = 0;
  int degenerate_trials = 0; // trials whose pooled counts hit one outcome only
  std::vector<double> kappa_hats;
};

// Per trial: N independent single-atom fringes are sampled at the true
// kappa, counts are pooled, and kappa is fitted by maximum likelihood
// (grid search plus golden-section refinement).
EstimationResult estimate_kappa(const EstimationProtocol& proto, double true_kappa,
                                int n_atoms, int trials, std::uint64_t seed);

struct SqlPoint {
  int n_atoms = 0;
  double sigma = 0.0;
};

struct SqlScanResult {
  std::vector<SqlPoint> points;
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
  int trials = 0;
  std::uint64_t seed = 0;
};

// Runs estimate_kappa for every N and fits log sigma against log N.
// Requires at least 4 distinct N values.
SqlScanResult sql_scan(const EstimationProtocol& proto, double true_kappa,
                       const std::vector<int>& n_list, int trials,
                       std::uint64_t seed);

} // namespace spinlv
