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

#include "spinlv/fringe.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "spinlv/kernels.hpp"
#include "spinlv/rng.hpp"

namespace spinlv {
namespace {

constexpr std::uint64_t kFringeStreamTag = 0xF214;

void format_double(std::string& line, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  line += buf;
}

} // namespace

FringeModel::FringeModel(const SpinOperators& ops, const PulseSequence& seq,
                         CVector initial, CMatrix basis) {
  validate(seq);
  const std::size_t d = ops.j.dimension();
  if (initial.size() != d) {
    throw std::invalid_argument("initial state dimension does not match j");
  }
  if (std::abs(norm(initial) - 1.0) > 1e-10) {
    throw std::invalid_argument("initial state must be normalized");
  }
  if (!basis.empty() && basis.dim() != d) {
    throw std::invalid_argument("measurement basis dimension does not match j");
  }

  m_.resize(d);
  for (std::size_t k = 0; k < d; ++k) {
    m_[k] = ops.j.m_value(k);
  }
  label_ = seq.label;

  // Compile: merge adjacent rotations, keep free segments symbolic.
  for (const PulseElement& el : seq.elements) {
    if (const auto* rot = std::get_if<Rotation>(&el)) {
      CMatrix u = rotation(ops, rot->axis, rot->angle_rad);
      if (!steps_.empty() && !steps_.back().is_diag) {
        steps_.back().u = u * steps_.back().u;
      } else {
        steps_.push_back(Step{false, {}, std::move(u)});
      }
    } else {
      const auto& free = std::get<FreeEvolution>(el);
      steps_.push_back(Step{true,
                            DiagStep{free.duration_s, free.phi_rate_rad_s,
                                     free.kappa_rad_s, free.scan_phi},
                            CMatrix{}});
      total_time_ += free.duration_s;
      if (sequence_kappa_ == 0.0) {
        sequence_kappa_ = free.kappa_rad_s;
      }
    }
  }

  // Fold leading rotations into the initial state.
  initial_ = std::move(initial);
  if (!steps_.empty() && !steps_.front().is_diag) {
    initial_ = steps_.front().u * initial_;
    steps_.erase(steps_.begin());
  }
  // Fold trailing rotations into the measurement basis.
  if (!steps_.empty() && !steps_.back().is_diag) {
    if (basis.empty()) {
      basis = steps_.back().u;
    } else {
      basis = basis * steps_.back().u;
    }
    steps_.pop_back();
  }
  if (!basis.empty()) {
    basis_ = std::move(basis);
    has_basis_ = true;
  }
}

std::vector<double> FringeModel::eval(double phi, const double* kappa_override) const {
  CVector state = initial_;
  CVector phases(state.size());
  for (const Step& step : steps_) {
    if (step.is_diag) {
      const double seg_phi = step.diag.scan
                                 ? phi
                                 : step.diag.phi_rate_rad_s * step.diag.duration_s;
      const double kappa =
          kappa_override != nullptr ? *kappa_override : step.diag.kappa_rad_s;
      const double kappa_t = kappa * step.diag.duration_s;
      for (std::size_t k = 0; k < state.size(); ++k) {
        const double angle = seg_phi * m_[k] - kappa_t * m_[k] * m_[k];
        phases[k] = cplx{std::cos(angle), std::sin(angle)};
      }
      CVector next(state.size());
      kernels::active().cmul(phases.data(), state.data(), next.data(), state.size());
      state = std::move(next);
    } else {
      state = step.u * state;
    }
  }
  if (has_basis_) {
    state = basis_ * state;
  }
  return born_probabilities(state);
}

std::vector<double> FringeModel::probabilities(double phi) const {
  return eval(phi, nullptr);
}

std::vector<double> FringeModel::probabilities(double phi, double kappa_override) const {
  return eval(phi, &kappa_override);
}

CMatrix pair_readout_basis(SpinQuantumNumber j, double m1, double m2) {
  const std::size_t i1 = j.basis_index(m1);
  const std::size_t i2 = j.basis_index(m2);
  if (i1 == i2) {
    throw std::invalid_argument("pair readout needs two distinct projections");
  }
  CMatrix b = CMatrix::identity(j.dimension());
  const double amp = 1.0 / std::sqrt(2.0);
  b(i1, i1) = cplx{amp, 0.0};
  b(i1, i2) = cplx{amp, 0.0};
  b(i2, i1) = cplx{amp, 0.0};
  b(i2, i2) = cplx{-amp, 0.0};
  return b;
}

std::vector<std::uint64_t> sample_multinomial(std::mt19937_64& gen,
                                              std::uint64_t shots,
                                              const std::vector<double>& p) {
  std::vector<std::uint64_t> counts(p.size(), 0);
  double total = 0.0;
  for (double v : p) {
    total += v;
  }
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = rng::uniform01(gen) * total;
    double acc = 0.0;
    std::size_t pick = p.size() - 1;
    for (std::size_t k = 0; k < p.size(); ++k) {
      acc += p[k];
      if (u < acc) {
        pick = k;
        break;
      }
    }
    ++counts[pick];
  }
  return counts;
}

FringeRecord generate_fringe(const FringeModel& model,
                             const std::vector<double>& phi_grid,
                             std::uint64_t shots, std::uint64_t seed) {
  FringeRecord rec;
  rec.phi_rad = phi_grid;
  rec.probabilities.reserve(phi_grid.size());
  if (shots > 0) {
    rec.counts.reserve(phi_grid.size());
  }
  for (std::size_t i = 0; i < phi_grid.size(); ++i) {
    std::vector<double> p = model.probabilities(phi_grid[i]);
    double total = 0.0;
    for (double v : p) {
      total += v;
    }
    if (std::abs(total - 1.0) > 1e-10) {
      throw std::runtime_error("fringe probabilities do not sum to 1");
    }
    if (shots > 0) {
      auto gen = rng::engine(seed, {kFringeStreamTag, i});
      rec.counts.push_back(sample_multinomial(gen, shots, p));
    }
    rec.probabilities.push_back(std::move(p));
  }
  rec.meta.seed = seed;
  rec.meta.shots = shots;
  rec.meta.t_s = model.total_free_time();
  rec.meta.kappa_rad_s = model.sequence_kappa();
  rec.meta.sequence = model.sequence_label();
  return rec;
}

void write_fringe_csv(const FringeRecord& rec, std::ostream& out) {
  const bool with_counts = !rec.counts.empty();
  out << (with_counts ? "phi_rad,outcome_index,probability,count\n"
                      : "phi_rad,outcome_index,probability\n");
  for (std::size_t i = 0; i < rec.phi_rad.size(); ++i) {
    for (std::size_t k = 0; k < rec.probabilities[i].size(); ++k) {
      std::string line;
      format_double(line, rec.phi_rad[i]);
      line += ',';
      line += std::to_string(k);
      line += ',';
      format_double(line, rec.probabilities[i][k]);
      if (with_counts) {
        line += ',';
        line += std::to_string(rec.counts[i][k]);
      }
      line += '\n';
      out << line;
    }
  }
}

nlohmann::json fringe_json(const FringeRecord& rec) {
  nlohmann::json j;
  j["meta"] = {
      {"j", rec.meta.j},
      {"kappa_rad_s", rec.meta.kappa_rad_s},
      {"t_s", rec.meta.t_s},
      {"seed", rec.meta.seed},
      {"shots", rec.meta.shots},
      {"sequence", rec.meta.sequence},
      {"initial", rec.meta.initial_label},
      {"basis", rec.meta.basis_label},
  };
  j["phi_rad"] = rec.phi_rad;
  j["probabilities"] = rec.probabilities;
  if (!rec.counts.empty()) {
    j["counts"] = rec.counts;
  }
  return j;
}

double extract_fringe_phase(const FringeRecord& rec, std::size_t outcome,
                            int harmonic) {
  if (rec.phi_rad.size() < 3) {
    throw std::invalid_argument("need at least 3 grid points for a phase fit");
  }
  // Normal equations for p = a cos(h phi) + b sin(h phi) + c.
  double scc = 0, css = 0, scs = 0, sc = 0, ss = 0, s1 = 0;
  double pc = 0, ps = 0, p1 = 0;
  for (std::size_t i = 0; i < rec.phi_rad.size(); ++i) {
    if (outcome >= rec.probabilities[i].size()) {
      throw std::invalid_argument("outcome index out of range");
    }
    const double c = std::cos(harmonic * rec.phi_rad[i]);
    const double s = std::sin(harmonic * rec.phi_rad[i]);
    const double p = rec.probabilities[i][outcome];
    scc += c * c;
    css += s * s;
    scs += c * s;
    sc += c;
    ss += s;
    s1 += 1.0;
    pc += p * c;
    ps += p * s;
    p1 += p;
  }
  // Solve the 3x3 system [scc scs sc; scs css ss; sc ss s1] [a b c] = [pc ps p1].
  const double det = scc * (css * s1 - ss * ss) - scs * (scs * s1 - ss * sc) +
                     sc * (scs * ss - css * sc);
  if (std::abs(det) < 1e-14) {
    throw std::runtime_error("degenerate phase-fit grid");
  }
  const double a = (pc * (css * s1 - ss * ss) - scs * (ps * s1 - ss * p1) +
                    sc * (ps * ss - css * p1)) /
                   det;
  const double b = (scc * (ps * s1 - ss * p1) - pc * (scs * s1 - ss * sc) +
                    sc * (scs * p1 - ps * sc)) /
                   det;
  // p = A cos(h phi + psi) + c with A cos(psi) = a, -A sin(psi) = b.
  return std::atan2(-b, a);
}

} // namespace spinlv
