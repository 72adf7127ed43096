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

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "unipart/error.hpp"
#include "unipart/gatecost.hpp"
#include "unipart/harness.hpp"
#include "unipart/io.hpp"
#include "unipart/kernels.hpp"

namespace fs = std::filesystem;
using namespace unipart;
using io::json;

namespace {

// Whatever the input file held, resolved to a cover and optional plans.
struct Input {
  std::optional<io::HamiltonianFile> ham;
  CliqueCover cover;
  std::optional<Method> plan_method;
  json plans;
};

bool looks_like_json(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text[pos] == '{';
}

ColoringStrategy parse_strategy(const std::string& s) {
  if (s == "largest-first") return ColoringStrategy::LargestFirst;
  if (s == "sequential") return ColoringStrategy::Sequential;
  throw Error(ErrorKind::Usage, "unknown strategy '" + s + "'");
}

Input load(const fs::path& path, const std::string& strategy, std::size_t split_at) {
  const std::string text = io::read_text(path);
  Input in;
  if (looks_like_json(text)) {
    const json j = io::parse_json(text);
    in.cover = io::cover_from_json(j);
    if (j.contains("plans")) {
      in.plan_method = parse_method(j.at("method").get<std::string>());
      in.plans = j.at("plans");
    }
  } else {
    in.ham = io::parse_hamiltonian_file(text);
    in.cover = clique_cover(in.ham->hamiltonian, parse_strategy(strategy));
  }
  if (split_at > 0) {
    const bool any = std::any_of(in.cover.sets.begin(), in.cover.sets.end(),
                                 [&](const auto& s) { return s.size() > split_at; });
    if (any) {
      in.cover = split_large_cliques(in.cover, split_at);
      in.plan_method.reset();
    }
  }
  return in;
}

WeightedPauliSum hamiltonian_of(const Input& in) {
  return in.ham ? in.ham->hamiltonian : in.cover.reconstruct();
}

std::vector<SeqRotPlan> seqrot_plans(const Input& in) {
  std::vector<SeqRotPlan> plans;
  if (in.plan_method == Method::SeqRot) {
    for (const auto& p : in.plans) plans.push_back(io::seqrot_plan_from_json(p, in.cover.n_qubits));
  } else {
    for (const auto& s : in.cover.sets) plans.push_back(build_seqrot_plan(s));
  }
  return plans;
}

std::vector<LcuPlan> lcu_plans(const Input& in) {
  std::vector<LcuPlan> plans;
  if (in.plan_method == Method::Lcu) {
    for (const auto& p : in.plans) plans.push_back(io::lcu_plan_from_json(p, in.cover.n_qubits));
  } else {
    for (const auto& s : in.cover.sets) plans.push_back(build_lcu_plan(s));
  }
  return plans;
}

EstimateStats run_estimate(Method method, const Input& in, const Statevector& state,
                           const EstimateOptions& opts) {
  switch (method) {
    case Method::Standard: return estimate_standard(hamiltonian_of(in), state, opts);
    case Method::SeqRot: return estimate_seqrot(in.cover, seqrot_plans(in), state, opts);
    case Method::Lcu: return estimate_lcu(in.cover, lcu_plans(in), state, opts);
  }
  throw Error(ErrorKind::Usage, "unknown method");
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::cout << text;
  } else {
    io::write_text(out, text);
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string csv_header() {
  return "molecule,method,backend,N,mean,mean_ci_low,mean_ci_high,sigma,sigma_ci_low,"
         "sigma_ci_high,sem,sem_ci_low,sem_ci_high,total_calls,accepted_fraction\n";
}

std::string csv_row(const std::string& molecule, const EstimateStats& s) {
  using io::format_double;
  std::ostringstream r;
  r << molecule << ',' << to_string(s.method) << ",simulator," << s.n_samples << ','
    << format_double(s.mean) << ',' << format_double(s.ci95.low) << ','
    << format_double(s.ci95.high) << ',' << format_double(s.sigma) << ','
    << format_double(s.sigma_ci.low) << ',' << format_double(s.sigma_ci.high) << ','
    << format_double(s.sem) << ',' << format_double(s.sem_ci.low) << ','
    << format_double(s.sem_ci.high) << ',' << s.total_calls << ','
    << (s.accepted_fraction ? format_double(*s.accepted_fraction) : "") << '\n';
  return r.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Unitary partitioning of qubit Hamiltonians: clique covers, rotation and LCU "
               "reductions, single-shot energy estimation, gate costs"};
  app.require_subcommand(1);

  std::string input;
  std::string out;
  std::string strategy = "largest-first";
  std::size_t split_at = 0;
  std::string method_name;
  std::size_t shots = 0;
  std::uint64_t seed = 0;
  std::string allocation = "even";
  bool retry = false;
  std::size_t resamples = 1000;
  std::size_t top = 4;
  std::string histogram;
  std::size_t bins = 50;

  const auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", input, "Hamiltonian (.ham text) or partition/reduce JSON")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--out,-o", out, "Write output here instead of stdout");
    sub->add_option("--strategy", strategy, "Coloring order: largest-first | sequential");
  };

  auto* exact = app.add_subcommand("exact", "Ground state by dense diagonalization");
  add_input(exact);
  exact->add_option("--top", top, "Number of largest amplitudes to list");

  auto* partition = app.add_subcommand("partition", "Anticommuting clique cover (JSON)");
  add_input(partition);
  partition->add_option("--split-at", split_at, "Split cliques larger than this size");

  auto* reduce = app.add_subcommand("reduce", "SeqRot or LCU plans for every clique (JSON)");
  add_input(reduce);
  reduce->add_option("--method", method_name, "seqrot | lcu")->required();
  reduce->add_option("--split-at", split_at, "Split cliques larger than this size");

  auto* estimate_cmd = app.add_subcommand("estimate", "Single-shot energy estimate (JSON)");
  add_input(estimate_cmd);
  estimate_cmd->add_option("--method", method_name, "standard | seqrot | lcu")->required();
  estimate_cmd->add_option("--shots", shots, "Total device calls")->required();
  estimate_cmd->add_option("--seed", seed, "RNG seed")->required();
  estimate_cmd->add_option("--allocation", allocation, "even | weighted");
  estimate_cmd->add_flag("--retry-rejected", retry, "LCU: rerun rejected shots");
  estimate_cmd->add_option("--resamples", resamples, "Bootstrap resamples");

  auto* compare = app.add_subcommand("compare", "All three methods as CSV rows");
  add_input(compare);
  compare->add_option("--shots", shots, "Total device calls per method")->required();
  compare->add_option("--seed", seed, "RNG seed")->required();
  compare->add_option("--allocation", allocation, "even | weighted");
  compare->add_flag("--retry-rejected", retry, "LCU: rerun rejected shots");
  compare->add_option("--resamples", resamples, "Bootstrap resamples");
  compare->add_option("--histogram", histogram, "Write per-sample energy histograms (CSV)");
  compare->add_option("--bins", bins, "Histogram bins")->check(CLI::PositiveNumber);

  auto* cost = app.add_subcommand("cost", "Analytic gate counts per clique (CSV)");
  add_input(cost);
  cost->add_option("--method", method_name, "seqrot | lcu-cascade | lcu-direct")->required();
  cost->add_option("--split-at", split_at, "Split cliques larger than this size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ErrorKind::Usage);
  }

  try {
    kernels::configure_threads_from_env();
    const Input in = load(input, strategy, split_at);

    if (exact->parsed()) {
      const GroundState g = exact_ground_state(hamiltonian_of(in));
      emit(out, dump(io::exact_to_json(g, top)));
    } else if (partition->parsed()) {
      emit(out, dump(io::cover_to_json(in.cover)));
    } else if (reduce->parsed()) {
      const Method m = parse_method(method_name);
      json plans = json::array();
      if (m == Method::SeqRot) {
        for (const auto& p : seqrot_plans(in)) plans.push_back(io::plan_to_json(p));
      } else if (m == Method::Lcu) {
        for (const auto& p : lcu_plans(in)) plans.push_back(io::plan_to_json(p));
      } else {
        throw Error(ErrorKind::Usage, "reduce needs --method seqrot or lcu");
      }
      const json j = {{"format", "unipart.reduce"},
                      {"method", to_string(m)},
                      {"cover", io::cover_to_json(in.cover)},
                      {"plans", plans}};
      emit(out, dump(j));
    } else if (estimate_cmd->parsed() || compare->parsed()) {
      EstimateOptions opts;
      opts.shots = shots;
      opts.seed = seed;
      opts.allocation = parse_allocation(allocation);
      opts.retry_rejected = retry;
      opts.resamples = resamples;
      const GroundState g = exact_ground_state(hamiltonian_of(in));

      if (estimate_cmd->parsed()) {
        const EstimateStats s = run_estimate(parse_method(method_name), in, g.state, opts);
        json j = io::stats_to_json(s);
        j["shots"] = shots;
        j["seed"] = seed;
        j["allocation"] = to_string(opts.allocation);
        j["retry_rejected"] = retry;
        j["resamples"] = resamples;
        j["exact_energy"] = g.energy;
        emit(out, dump(j));
      } else {
        const std::string molecule =
            in.ham && in.ham->molecule ? *in.ham->molecule : std::string("unknown");
        std::string csv = csv_header();
        std::ostringstream hist;
        hist << "method,bin,low,high,count\n";
        for (const Method m : {Method::Lcu, Method::SeqRot, Method::Standard}) {
          const EstimateStats s = run_estimate(m, in, g.state, opts);
          csv += csv_row(molecule, s);
          const Histogram h = make_histogram(s.samples, bins);
          for (std::size_t b = 0; b < h.counts.size(); ++b) {
            hist << to_string(m) << ',' << b << ',' << io::format_double(h.edges[b]) << ','
                 << io::format_double(h.edges[b + 1]) << ',' << h.counts[b] << '\n';
          }
        }
        emit(out, csv);
        if (!histogram.empty()) io::write_text(histogram, hist.str());
      }
    } else if (cost->parsed()) {
      const CoverCost c = cover_cost(in.cover, parse_cost_method(method_name));
      emit(out, io::cover_cost_csv(c));
    }
  } catch (const Error& e) {
    std::cerr << "unipart: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "unipart: " << e.what() << '\n';
    return static_cast<int>(ErrorKind::Numeric);
  }
  return 0;
}
