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

#include "unipart/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "unipart/error.hpp"

namespace unipart::io {
namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::optional<double> parse_double(std::string_view token) {
  double v = 0.0;
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

std::optional<std::size_t> parse_size(std::string_view token) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  return v;
}

struct RawTerm {
  std::size_t line = 0;
  double coeff = 0.0;
  std::string paulis;
};

// Largest qubit index named in a Pauli string; malformed tokens are left for
// PauliWord::parse to report.
std::optional<std::size_t> max_index(std::string_view paulis) {
  std::optional<std::size_t> best;
  std::istringstream in{std::string(paulis)};
  std::string token;
  while (in >> token) {
    if (token.size() < 2) continue;
    if (auto idx = parse_size(std::string_view(token).substr(1))) {
      best = std::max(best.value_or(0), *idx);
    }
  }
  return best;
}

template <typename F>
auto with_json_errors(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

json interval_to_json(const Interval& i) { return json::array({i.low, i.high}); }

}  // namespace

std::string format_double(double v) {
  std::ostringstream out;
  out << std::setprecision(17) << v;
  return out.str();
}

HamiltonianFile parse_hamiltonian_file(std::string_view text) {
  HamiltonianFile file;
  std::optional<std::size_t> declared_qubits;
  std::vector<RawTerm> raw;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }

    const std::size_t split = line.find_first_of(" \t");
    const std::string_view head = line.substr(0, split);
    const std::string_view rest =
        split == std::string_view::npos ? std::string_view{} : trim(line.substr(split));

    if (head.back() == ':') {
      const std::string_view key = head.substr(0, head.size() - 1);
      if (key == "qubits") {
        const auto n = parse_size(rest);
        if (!n || *n == 0) throw ParseError(line_no, "bad qubit count '" + std::string(rest) + "'");
        declared_qubits = *n;
      } else if (key == "molecule") {
        file.molecule = std::string(rest);
      } else if (key == "bond_length") {
        const auto v = parse_double(rest);
        if (!v) throw ParseError(line_no, "bad bond length '" + std::string(rest) + "'");
        file.bond_length = *v;
      } else if (key == "units") {
        file.units = std::string(rest);
      } else {
        throw ParseError(line_no, "unknown header '" + std::string(key) + "'");
      }
    } else {
      const auto coeff = parse_double(head);
      if (!coeff) throw ParseError(line_no, "malformed coefficient '" + std::string(head) + "'");
      std::string paulis(rest);
      if (paulis == "[]" || paulis == "[ ]") paulis.clear();
      raw.push_back({line_no, *coeff, std::move(paulis)});
    }
    if (end == text.size()) break;
  }

  if (raw.empty()) throw ParseError("Hamiltonian has no terms");
  std::size_t n = 1;
  for (const auto& t : raw) {
    if (auto idx = max_index(t.paulis)) n = std::max(n, *idx + 1);
  }
  if (declared_qubits) {
    if (*declared_qubits < n) {
      throw ParseError("qubits: " + std::to_string(*declared_qubits) +
                       " is smaller than the highest qubit index + 1 (" + std::to_string(n) + ")");
    }
    n = *declared_qubits;
  }
  if (n > PauliWord::kMaxQubits) {
    throw ParseError("at most " + std::to_string(PauliWord::kMaxQubits) + " qubits supported");
  }

  WeightedPauliSum h(n);
  for (const auto& t : raw) {
    try {
      h.add(t.coeff, PauliWord::parse(t.paulis, n));
    } catch (const Error& e) {
      throw ParseError(t.line, e.what());
    }
  }
  file.hamiltonian = h.canonical();
  return file;
}

WeightedPauliSum parse_hamiltonian(std::string_view text) {
  return parse_hamiltonian_file(text).hamiltonian;
}

std::string print_hamiltonian(const HamiltonianFile& file) {
  std::ostringstream out;
  out << "qubits: " << file.hamiltonian.num_qubits() << '\n';
  if (file.molecule) out << "molecule: " << *file.molecule << '\n';
  if (file.bond_length) out << "bond_length: " << format_double(*file.bond_length) << '\n';
  if (file.units) out << "units: " << *file.units << '\n';
  for (const auto& t : file.hamiltonian.canonical().terms()) {
    out << format_double(t.coeff.real()) << ' ' << t.word.to_string() << '\n';
  }
  return out.str();
}

std::string print_hamiltonian(const WeightedPauliSum& h) {
  HamiltonianFile file;
  file.hamiltonian = h;
  return print_hamiltonian(file);
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Usage, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Usage, "cannot write '" + path.string() + "'");
  out << text;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(e.what());
  }
}

json word_to_json(const PauliWord& w) {
  return {{"word", w.to_string()}, {"phase", w.phase()}};
}

PauliWord word_from_json(const json& j, std::size_t n_qubits) {
  return PauliWord::parse(j.at("word").get<std::string>(), n_qubits)
      .with_phase(j.value("phase", 0));
}

json cover_to_json(const CliqueCover& cover) {
  json sets = json::array();
  for (const auto& set : cover.sets) {
    json members = json::array();
    for (const auto& m : set.members) {
      members.push_back({{"word", m.word.to_string()},
                         {"beta", m.beta},
                         {"coefficient", set.gamma * m.beta}});
    }
    sets.push_back({{"index", set.index}, {"gamma", set.gamma}, {"members", members}});
  }
  if (cover.has_identity_term) {
    const double c = cover.identity_offset;
    sets.push_back({{"index", cover.sets.size()},
                    {"identity", true},
                    {"gamma", std::abs(c)},
                    {"members", json::array({{{"word", "I"},
                                              {"beta", c < 0 ? -1.0 : 1.0},
                                              {"coefficient", c}}})}});
  }
  return {{"format", "unipart.partition"},
          {"n_qubits", cover.n_qubits},
          {"clique_count", cover.clique_count()},
          {"identity_offset", cover.identity_offset},
          {"sets", sets}};
}

CliqueCover cover_from_json(const json& root) {
  return with_json_errors("partition", [&] {
    const json& j = root.contains("cover") ? root.at("cover") : root;
    CliqueCover cover;
    cover.n_qubits = j.at("n_qubits").get<std::size_t>();
    if (cover.n_qubits == 0 || cover.n_qubits > PauliWord::kMaxQubits) {
      throw ParseError("bad n_qubits in partition JSON");
    }
    for (const auto& s : j.at("sets")) {
      if (s.value("identity", false)) {
        for (const auto& m : s.at("members")) {
          cover.identity_offset += m.at("coefficient").get<double>();
        }
        cover.has_identity_term = true;
        continue;
      }
      AnticommutingSet set;
      set.index = s.at("index").get<std::size_t>();
      set.gamma = s.at("gamma").get<double>();
      for (const auto& m : s.at("members")) {
        set.members.push_back({m.at("beta").get<double>(),
                               PauliWord::parse(m.at("word").get<std::string>(), cover.n_qubits)});
      }
      if (set.members.empty()) throw ParseError("empty set in partition JSON");
      cover.sets.push_back(std::move(set));
    }
    if (!cover.has_identity_term) cover.identity_offset = j.value("identity_offset", 0.0);
    return cover;
  });
}

json plan_to_json(const SeqRotPlan& plan) {
  json steps = json::array();
  for (const auto& s : plan.steps) {
    steps.push_back({{"generator", word_to_json(s.generator)},
                     {"angle", s.angle},
                     {"removed_index", s.removed_index}});
  }
  json exps = json::array();
  for (const auto& r : plan_as_exponentials(plan)) {
    exps.push_back({{"generator", r.generator.to_string()}, {"angle", r.angle}});
  }
  return {{"set_index", plan.set_index},
          {"target_index", plan.target_index},
          {"target", word_to_json(plan.target)},
          {"gamma", plan.gamma},
          {"steps", steps},
          {"exponentials", exps}};
}

SeqRotPlan seqrot_plan_from_json(const json& j, std::size_t n_qubits) {
  return with_json_errors("seqrot plan", [&] {
    SeqRotPlan plan;
    plan.set_index = j.at("set_index").get<std::size_t>();
    plan.target_index = j.at("target_index").get<std::size_t>();
    plan.target = word_from_json(j.at("target"), n_qubits);
    plan.gamma = j.at("gamma").get<double>();
    for (const auto& s : j.at("steps")) {
      plan.steps.push_back({word_from_json(s.at("generator"), n_qubits),
                            s.at("angle").get<double>(),
                            s.at("removed_index").get<std::size_t>()});
    }
    return plan;
  });
}

json plan_to_json(const LcuPlan& plan) {
  json terms = json::array();
  for (const auto& t : plan.terms) {
    json term = {{"alpha", t.alpha}, {"word", t.word.to_string()}, {"phase", t.word.phase()}};
    if (t.unit != complex(1.0, 0.0)) term["unit"] = json::array({t.unit.real(), t.unit.imag()});
    terms.push_back(term);
  }
  return {{"set_index", plan.set_index},
          {"target_index", plan.target_index},
          {"target", word_to_json(plan.target)},
          {"gamma", plan.gamma},
          {"phi", plan.phi},
          {"omega", plan.residual.omega},
          {"residual_indices", plan.residual.indices},
          {"delta", plan.residual.delta},
          {"terms", terms},
          {"l1", plan.l1},
          {"ancilla_count", plan.ancilla_count},
          {"g_amplitudes", plan.g_amplitudes},
          {"success_probability", success_probability(plan)}};
}

LcuPlan lcu_plan_from_json(const json& j, std::size_t n_qubits) {
  return with_json_errors("lcu plan", [&] {
    LcuPlan plan;
    plan.set_index = j.at("set_index").get<std::size_t>();
    plan.target_index = j.at("target_index").get<std::size_t>();
    plan.target = word_from_json(j.at("target"), n_qubits);
    plan.gamma = j.at("gamma").get<double>();
    plan.phi = j.at("phi").get<double>();
    plan.residual.omega = j.value("omega", 0.0);
    plan.residual.indices = j.value("residual_indices", std::vector<std::size_t>{});
    plan.residual.delta = j.value("delta", std::vector<double>{});
    for (const auto& t : j.at("terms")) {
      LcuTerm term;
      term.alpha = t.at("alpha").get<double>();
      term.word = word_from_json(t, n_qubits);
      if (t.contains("unit")) {
        term.unit = {t.at("unit").at(0).get<double>(), t.at("unit").at(1).get<double>()};
      }
      plan.terms.push_back(std::move(term));
    }
    plan.l1 = j.at("l1").get<double>();
    plan.ancilla_count = j.at("ancilla_count").get<std::size_t>();
    plan.g_amplitudes = j.at("g_amplitudes").get<std::vector<double>>();
    return plan;
  });
}

json stats_to_json(const EstimateStats& stats) {
  json j = {{"method", to_string(stats.method)},
            {"n_samples", stats.n_samples},
            {"total_calls", stats.total_calls},
            {"circuits", stats.circuits},
            {"circuit_calls", stats.circuit_calls},
            {"mean", stats.mean},
            {"sigma", stats.sigma},
            {"sem", stats.sem},
            {"ci95", interval_to_json(stats.ci95)},
            {"sigma_ci", interval_to_json(stats.sigma_ci)},
            {"sem_ci", interval_to_json(stats.sem_ci)}};
  if (stats.accepted_fraction) {
    j["accepted_fraction"] = *stats.accepted_fraction;
    j["set_accepted_fraction"] = stats.set_accepted_fraction;
  }
  return j;
}

json exact_to_json(const GroundState& ground, std::size_t top_k) {
  const auto amps = ground.state.amplitudes();
  const std::size_t n = ground.state.num_qubits();
  std::vector<std::size_t> order(amps.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(amps[a]) > std::abs(amps[b]);
  });
  order.resize(std::min(top_k, order.size()));
  json list = json::array();
  for (const std::size_t idx : order) {
    std::string label(n, '0');
    for (std::size_t q = 0; q < n; ++q) {
      if ((idx >> (n - 1 - q)) & 1u) label[q] = '1';
    }
    list.push_back({{"basis", label},
                    {"index", idx},
                    {"re", amps[idx].real()},
                    {"im", amps[idx].imag()},
                    {"abs", std::abs(amps[idx])}});
  }
  return {{"energy", ground.energy}, {"n_qubits", n}, {"amplitudes", list}};
}

std::string cover_cost_csv(const CoverCost& cost) {
  std::ostringstream out;
  out << "# " << cost.label << ", method " << to_string(cost.method) << ", N_s "
      << cost.n_system << '\n';
  if (cost.split_recommended) {
    out << "# some set exceeds " << cost.split_threshold
        << " members; split it (--split-at) to avoid work qubits\n";
  }
  out << "set,size,single_qubit,cnot,toffoli,ancilla,work,control_bits\n";
  const auto row = [&](const std::string& name, std::size_t size, const CostReport& r) {
    out << name << ',' << size << ',' << r.single_qubit << ',' << r.cnot << ',' << r.toffoli
        << ',' << r.ancilla << ',' << r.work << ',' << r.control_bits << '\n';
  };
  std::size_t terms = 0;
  for (const auto& s : cost.sets) {
    row(std::to_string(s.set_index), s.set_size, s.report);
    terms += s.set_size;
  }
  row("total", terms, cost.total);
  return out.str();
}

}  // namespace unipart::io
