// Copyright 2026 The unipart Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Reference numbers are the published H2 tables.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "h2.hpp"
#include "oracle.hpp"
#include "unipart/gatecost.hpp"
#include "unipart/harness.hpp"
#include "unipart/io.hpp"
#include "unipart/kernels.hpp"

using namespace unipart;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void run(int id, const std::string& title, double budget_s, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail << " [exception: " << e.what() << "]";
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs >= budget_s) {
    c.ok = false;
    c.detail << " [over time budget " << budget_s << " s]";
  }
  if (!c.ok) ++failures;
  std::printf("%s  %d  %s (%.2f s)%s\n", c.ok ? "PASS" : "FAIL", id, title.c_str(), secs,
              c.detail.str().c_str());
  std::fflush(stdout);
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

WeightedPauliSum load_h2() {
  return io::parse_hamiltonian(io::read_text(UNIPART_DATA_DIR "/h2.ham"));
}

double seqrot_dense_error(const SeqRotPlan& plan, const AnticommutingSet& set) {
  const Eigen::Index dim = Eigen::Index{1} << set.num_qubits();
  oracle::Mat r = oracle::Mat::Identity(dim, dim);
  for (const auto& step : plan.steps) r = oracle::rotation(oracle::word(step.generator), step.angle) * r;
  return (r * oracle::sum(set.normalized()) * r.adjoint() - oracle::word(plan.target)).norm();
}

const LcuTerm* term_with(const LcuPlan& plan, const std::string& letters) {
  for (const auto& t : plan.terms) {
    if (t.word.letters() == letters) return &t;
  }
  return nullptr;
}

// Members of a set as (letters, coefficient) for order-free comparison.
std::map<std::string, double> members_of(const AnticommutingSet& s) {
  std::map<std::string, double> m;
  for (const auto& x : s.members) m[x.word.letters()] = s.gamma * x.beta;
  return m;
}

struct Run {
  Method method;
  std::uint64_t seed;
  EstimateStats stats;
};

}  // namespace

int main() {
  kernels::configure_threads_from_env();
  std::printf("unipart acceptance suite (%d OpenMP threads)\n", kernels::max_threads());

  const WeightedPauliSum h = load_h2();
  std::vector<Run> h2_runs;
  double exact_energy = 0.0;

  run(1, "exact diagonalization of the bundled H2 Hamiltonian", 1.0, [&](Check& c) {
    const auto g = exact_ground_state(h);
    exact_energy = g.energy;
    const double a01 = std::abs(g.state.amplitude(0b01));
    const double a10 = std::abs(g.state.amplitude(0b10));
    c.detail << " E0=" << io::format_double(g.energy) << " |01|=" << a01 << " |10|=" << a10;
    c.require(near(g.energy, h2::kTableEnergy, 5e-4), "E0 within 5e-4 of -1.1373");
    c.require(near(a01, 0.1125, 1e-3), "|<01|psi>| within 1e-3 of 0.1125");
    c.require(near(a10, 0.9936, 1e-3), "|<10|psi>| within 1e-3 of 0.9936");
  });

  run(2, "H2 clique cover matches the published four sets", 1.0, [&](Check& c) {
    const auto cover = clique_cover(h);
    c.detail << " cliques=" << cover.clique_count();
    c.require(cover.clique_count() == 4, "4 cliques");
    c.require(cover.has_identity_term && near(cover.identity_offset, h2::kIdentity, 1e-15),
              "identity clique 0.2460355896585992 I");
    const std::set<std::map<std::string, double>> expected = {
        {{"ZZ", h2::kZZ}},
        {{"IZ", h2::kZ1}, {"XX", h2::kXX}},
        {{"ZI", h2::kZ0}, {"YY", h2::kYY}},
    };
    std::set<std::map<std::string, double>> got;
    for (const auto& s : cover.sets) {
      auto m = members_of(s);
      // Snap reconstructed coefficients onto the table values within 1e-12.
      for (auto& [w, v] : m) {
        for (const auto& e : expected) {
          if (e.count(w) && near(e.at(w), v, 1e-12)) v = e.at(w);
        }
      }
      got.insert(m);
      if (m.count("IZ")) {
        c.detail << " gamma2=" << io::format_double(s.gamma);
        c.require(near(s.gamma, h2::kGamma2, 1e-9), "gamma_2");
      }
      if (m.count("ZI")) {
        c.detail << " gamma3=" << io::format_double(s.gamma);
        c.require(near(s.gamma, h2::kGamma3, 1e-9), "gamma_3");
      }
    }
    c.require(got == expected, "set membership and coefficients");
  });

  run(3, "SeqRot angles and conjugation onto P_n (H2 + 200 random sets)", 30.0, [&](Check& c) {
    const auto cover = clique_cover(h);
    double worst = 0.0;
    for (const auto& s : cover.sets) {
      const auto plan = build_seqrot_plan(s);
      worst = std::max(worst, seqrot_dense_error(plan, s));
      const auto m = members_of(s);
      if (m.count("IZ")) {
        c.detail << " theta2=" << io::format_double(plan.steps.at(0).angle);
        c.require(near(plan.steps.at(0).angle, h2::kTheta2, 1e-9), "theta_2");
      }
      if (m.count("ZI")) {
        c.detail << " theta3=" << io::format_double(plan.steps.at(0).angle);
        c.require(near(plan.steps.at(0).angle, h2::kTheta3, 1e-9), "theta_3");
      }
    }
    std::mt19937_64 rng(2024);
    for (int k = 0; k < 200; ++k) {
      const auto s = oracle::random_set(rng, 5, 6);
      worst = std::max(worst, seqrot_dense_error(build_seqrot_plan(s), s));
    }
    c.detail << " max_frobenius=" << worst;
    c.require(worst <= 1e-10, "Frobenius error <= 1e-10");
  });

  run(4, "LCU table numbers and block encoding (H2 + 200 random sets)", 60.0, [&](Check& c) {
    const auto cover = clique_cover(h);
    double worst = 0.0;
    int matched = 0;
    for (const auto& s : cover.sets) {
      const auto plan = build_lcu_plan(s);
      worst = std::max(worst, block_encoding_check(plan));
      const auto m = members_of(s);
      const bool set2 = m.count("IZ") > 0;
      const bool set3 = m.count("ZI") > 0;
      if (!set2 && !set3) continue;
      const LcuTerm* id = term_with(plan, "II");
      const LcuTerm* xy = term_with(plan, "XY");
      c.require(id && xy && plan.terms.size() == 2, "R_l = a I + b X0Y1");
      if (!id || !xy) continue;
      const double a = set2 ? h2::kLcuI2 : h2::kLcuI3;
      const double b = set2 ? h2::kLcuXY2 : h2::kLcuXY3;
      const double* g = set2 ? h2::kG2 : h2::kG3;
      const int phase = set2 ? 1 : 3;
      c.require(near(id->alpha, a, 1e-9) && id->word.phase() == 0, "identity coefficient");
      c.require(near(xy->alpha, b, 1e-9) && xy->word.phase() == phase, "X0Y1 coefficient");
      c.require(near(plan.g_amplitudes.at(0), g[0], 1e-9), "g_0");
      c.require(near(plan.g_amplitudes.at(1), g[1], 1e-9), "g_1");
      matched += 4;
    }
    std::mt19937_64 rng(4048);
    for (int k = 0; k < 200; ++k) {
      worst = std::max(worst, block_encoding_check(build_lcu_plan(oracle::random_set(rng, 5, 6))));
    }
    c.detail << " table_numbers=" << matched << "/8 max_block_error=" << worst;
    c.require(matched == 8, "all eight numbers compared");
    c.require(worst <= 1e-10, "block encoding error <= 1e-10");
  });

  run(5, "noise-free single-shot estimation, 1e6 calls per method, seeds 1-5", 300.0,
      [&](Check& c) {
        const auto cover = clique_cover(h);
        const auto ground = exact_ground_state(h);
        const std::map<Method, double> sigma_ref = {{Method::Standard, h2::kSigmaStandard},
                                                    {Method::SeqRot, h2::kSigmaSeqRot},
                                                    {Method::Lcu, h2::kSigmaLcu}};
        std::map<Method, double> worst_z, worst_rel;
        bool ordering = true;
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
          EstimateOptions o;
          o.shots = 1000000;
          o.seed = seed;
          std::map<Method, double> sigma;
          for (auto m : {Method::Standard, Method::SeqRot, Method::Lcu}) {
            auto s = estimate(m, cover, ground.state, o);
            const double z = std::abs(s.mean - h2::kTableEnergy) / s.sem;
            const double rel = std::abs(s.sigma / sigma_ref.at(m) - 1.0);
            worst_z[m] = std::max(worst_z[m], z);
            worst_rel[m] = std::max(worst_rel[m], rel);
            sigma[m] = s.sigma;
            c.require(z <= 3.0, to_string(m) + " mean within 3 SEM, seed " + std::to_string(seed));
            c.require(rel <= 0.2, to_string(m) + " sigma within 20%, seed " + std::to_string(seed));
            h2_runs.push_back({m, seed, std::move(s)});
          }
          ordering = ordering && sigma[Method::SeqRot] < sigma[Method::Standard];
        }
        for (auto m : {Method::Standard, Method::SeqRot, Method::Lcu}) {
          c.detail << ' ' << to_string(m) << ":max|z|=" << worst_z[m]
                   << ",max_sigma_dev=" << worst_rel[m];
        }
        c.require(ordering, "sigma(seqrot) < sigma(standard) in all runs");
      });

  run(6, "LCU acceptance per H2 set within 3 binomial sigma of 1/l1^2", 1.0, [&](Check& c) {
    // Pooled over the LCU runs of criterion 5; each set sees >= 1e5 calls per run.
    const double l1_2 = h2::kLcuI2 + h2::kLcuXY2;
    const double l1_3 = h2::kLcuI3 + h2::kLcuXY3;
    const auto cover = clique_cover(h);
    double accepted[3] = {0, 0, 0};
    double calls[3] = {0, 0, 0};
    for (const auto& r : h2_runs) {
      if (r.method != Method::Lcu) continue;
      for (std::size_t l = 0; l < 3; ++l) {
        const double n = static_cast<double>(r.stats.circuit_calls.at(l));
        accepted[l] += r.stats.set_accepted_fraction.at(l) * n;
        calls[l] += n;
      }
    }
    c.require(calls[0] >= 1e5, "at least 1e5 trials");
    for (std::size_t l = 0; l < 3; ++l) {
      const auto m = members_of(cover.sets[l]);
      double p = 1.0;
      if (m.count("IZ")) p = 1.0 / (l1_2 * l1_2);
      if (m.count("ZI")) p = 1.0 / (l1_3 * l1_3);
      const double frac = std::round(accepted[l]) / calls[l];
      const double sd = std::sqrt(p * (1 - p) / calls[l]);
      const double z = sd > 0 ? std::abs(frac - p) / sd : (frac == p ? 0.0 : 1e9);
      c.detail << " set" << l << ":p=" << p << ",observed=" << frac << ",|z|=" << z;
      c.require(z <= 3.0, "set " + std::to_string(l));
    }
  });

  run(7, "gate-cost closed forms pinned at integer points", 1.0, [&](Check& c) {
    int n = 0;
    const auto eq = [&](std::uint64_t got, std::uint64_t want, const char* what) {
      ++n;
      c.require(got == want, what);
    };
    eq(seqrot_cost(2, 2).single_qubit, 5, "seqrot(2,2) single");
    eq(seqrot_cost(2, 2).cnot, 2, "seqrot(2,2) cnot");
    eq(seqrot_cost(1, 3).single_qubit, 6, "seqrot(1,3) single");
    eq(seqrot_cost(1, 3).cnot, 0, "seqrot(1,3) cnot");
    eq(seqrot_cost(4, 5).single_qubit, 36, "seqrot(4,5) single");
    eq(seqrot_cost(4, 5).cnot, 24, "seqrot(4,5) cnot");
    eq(seqrot_cost(3, 1).single_qubit + seqrot_cost(3, 1).cnot, 0, "seqrot singleton");
    eq(lcu_cascade_cost(4, 3).single_qubit, 143, "cascade(4,3) single");
    eq(lcu_cascade_cost(4, 3).cnot, 105, "cascade(4,3) cnot");
    eq(lcu_cascade_cost(1, 3).single_qubit, 95, "cascade(1,3) single");
    eq(lcu_cascade_cost(1, 3).cnot, 57, "cascade(1,3) cnot");
    eq(lcu_cascade_cost(2, 4).single_qubit, 267, "cascade(2,4) single");
    eq(lcu_cascade_cost(2, 4).cnot, 177, "cascade(2,4) cnot");
    eq(lcu_direct_cost(4, 3).single_qubit, 95, "direct(4,3) single");
    eq(lcu_direct_cost(4, 3).cnot, 81, "direct(4,3) cnot");
    eq(lcu_direct_cost(1, 3).single_qubit, 71, "direct(1,3) single");
    eq(lcu_direct_cost(1, 3).cnot, 57, "direct(1,3) cnot");
    eq(lcu_direct_cost(3, 5).single_qubit, 483, "direct(3,5) single");
    eq(lcu_direct_cost(3, 5).cnot, 385, "direct(3,5) cnot");
    eq(toffoli_counts(3, false).toffoli, 32, "unreduced Nc=3");
    eq(toffoli_counts(2, false).toffoli, 8, "unreduced Nc=2");
    eq(toffoli_counts(4, false).toffoli, 96, "unreduced Nc=4");
    eq(toffoli_counts(3, true).toffoli, 7, "reduced Nc=3");
    eq(toffoli_counts(3, true).extra_cnot, 7, "reduced Nc=3 cnot");
    eq(toffoli_counts(2, true).toffoli, 1, "reduced Nc=2");
    eq(toffoli_counts(2, true).extra_cnot, 3, "reduced Nc=2 cnot");
    eq(toffoli_counts(4, true).toffoli, 19, "reduced Nc=4");
    eq(toffoli_counts(4, true).extra_cnot, 15, "reduced Nc=4 cnot");
    CostReport seven;
    seven.toffoli = 7;
    eq(decompose_toffolis(seven).single_qubit, 63, "7 Toffoli -> 63 single");
    eq(decompose_toffolis(seven).cnot, 42, "7 Toffoli -> 42 cnot");
    eq(kToffoliSingle, 9, "9 single per Toffoli");
    eq(kToffoliCnot, 6, "6 cnot per Toffoli");
    eq(special_cost(2, 1, LcuMode::Cascade).single_qubit, 8, "Nc=1 single");
    eq(special_cost(2, 1, LcuMode::Cascade).cnot, 4, "Nc=1 cnot");
    eq(special_cost(3, 1, LcuMode::Direct).single_qubit, 12, "Nc=1 Ns=3 single");
    eq(special_cost(5, 1, LcuMode::Direct).cnot, 10, "Nc=1 Ns=5 cnot");
    eq(special_cost(2, 2, LcuMode::Direct).toffoli, 8, "Nc=2 direct toffoli");
    eq(special_cost(2, 2, LcuMode::Direct).single_qubit, 16, "Nc=2 direct single");
    eq(special_cost(3, 2, LcuMode::Direct).toffoli, 12, "Nc=2 direct Ns=3");
    eq(special_cost(5, 2, LcuMode::Direct).single_qubit, 40, "Nc=2 direct Ns=5");
    eq(special_cost(2, 2, LcuMode::Cascade).single_qubit, 16, "Nc=2 cascade single");
    eq(special_cost(2, 2, LcuMode::Cascade).cnot, 16, "Nc=2 cascade cnot");
    eq(special_cost(2, 2, LcuMode::Cascade).toffoli, 4, "Nc=2 cascade toffoli");
    eq(special_cost(3, 2, LcuMode::Cascade).cnot, 24, "Nc=2 cascade Ns=3");
    eq(special_cost(7, 2, LcuMode::Cascade).toffoli, 4, "Nc=2 cascade Ns=7");
    c.detail << " checks=" << n;
  });

  run(8, "bootstrap CI width on normal samples; every H2 run's CI brackets E0", 60.0,
      [&](Check& c) {
        std::mt19937_64 rng(8);
        std::normal_distribution<double> g(0.0, 1.0);
        std::vector<double> x(10000);
        for (auto& v : x) v = g(rng);
        const auto ci = bootstrap_ci(x, 2000, 0.95, 8);
        const double analytic = 2 * 1.96 / std::sqrt(10000.0);
        const double rel = std::abs((ci.high - ci.low) / analytic - 1.0);
        c.detail << " width_dev=" << rel;
        c.require(rel <= 0.15, "width within 15% of 2*1.96/sqrt(N)");

        int bracketed = 0;
        for (const auto& r : h2_runs) {
          if (r.stats.ci95.contains(exact_energy)) {
            ++bracketed;
          } else {
            c.require(false, to_string(r.method) + " seed " + std::to_string(r.seed) + " CI [" +
                                 io::format_double(r.stats.ci95.low) + ", " +
                                 io::format_double(r.stats.ci95.high) + "]");
          }
        }
        c.detail << " bracketed=" << bracketed << "/" << h2_runs.size();
        c.require(h2_runs.size() == 15, "15 H2 runs from criterion 5");
      });

  std::printf("%s: %d failing criteria\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}
