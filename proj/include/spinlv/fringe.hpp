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
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "spinlv/cmatrix.hpp"
#include "spinlv/pulses.hpp"
#include "spinlv/spin_ops.hpp"

// Fringe generation: exact Born probabilities over a phase grid, optional
// multinomial shot sampling with per-grid-point substreams, CSV/JSON
// serialization and least-squares phase extraction.

namespace spinlv {

struct FringeMeta {
  double j = 0.5;
  double kappa_rad_s = 0.0;
  double t_s = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t shots = 0;
  std::string sequence;
  std::string initial_label;
  std::string basis_label;
};

struct FringeRecord {
  std::vector<double> phi_rad;
  // probabilities[point][outcome]
  std::vector<std::vector<double>> probabilities;
  // counts[point][outcome]; empty when shots == 0
  std::vector<std::vector<std::uint64_t>> counts;
  FringeMeta meta;
};

// Precompiled fringe evaluator. Rotations adjacent in the sequence are
// merged; leading rotations are folded into the initial state and trailing
// ones into the measurement basis, so a Ramsey evaluation is one diagonal
// phase pass plus one matvec.
class FringeModel {
public:
  // basis rows are the measurement bras; pass the identity for a Jz readout.
  // Throws on dimension mismatch or non-normalized initial state.
  FringeModel(const SpinOperators& ops, const PulseSequence& seq, CVector initial,
              CMatrix basis);

  std::size_t dim() const { return m_.size(); }
  double total_free_time() const { return total_time_; }
  double sequence_kappa() const { return sequence_kappa_; }
  const std::string& sequence_label() const { return label_; }

  // Born probabilities with the scanned phase phi; scan-marked segments use
  // phi in place of phi_rate * duration. The override, when given, replaces
  // every free segment's kappa.
  std::vector<double> probabilities(double phi) const;
  std::vector<double> probabilities(double phi, double kappa_override) const;

private:
  struct DiagStep {
    double duration_s;
    double phi_rate_rad_s;
    double kappa_rad_s;
    bool scan;
  };
  struct Step {
    bool is_diag;
    DiagStep diag;
    CMatrix u;
  };

  std::vector<double> eval(double phi, const double* kappa_override) const;

  std::vector<double> m_;  // Jz diagonal
  CVector initial_;
  std::vector<Step> steps_;
  CMatrix basis_;          // effective basis (includes trailing rotations)
  bool has_basis_ = false;
  double total_time_ = 0.0;
  double sequence_kappa_ = 0.0;
  std::string label_;
};

// Measurement basis whose rows at the two projection indices are
// (<m1| +- <m2|)/sqrt(2); all other rows stay Jz bras.
CMatrix pair_readout_basis(SpinQuantumNumber j, double m1, double m2);

// shots == 0 records exact probabilities only. Counts are multinomial with
// one substream per grid point derived from (seed, point index).
FringeRecord generate_fringe(const FringeModel& model,
                             const std::vector<double>& phi_grid,
                             std::uint64_t shots, std::uint64_t seed);

std::vector<std::uint64_t> sample_multinomial(std::mt19937_64& gen,
                                              std::uint64_t shots,
                                              const std::vector<double>& p);

// CSV columns: phi_rad,outcome_index,probability[,count].
void write_fringe_csv(const FringeRecord& rec, std::ostream& out);
nlohmann::json fringe_json(const FringeRecord& rec);

// Least-squares fit of p(phi) = a cos(h phi) + b sin(h phi) + c for one
// outcome; returns the phase psi of cos(h phi + psi).
double extract_fringe_phase(const FringeRecord& rec, std::size_t outcome,
                            int harmonic);

} // namespace spinlv
