// Copyright 2026 The Accredia Authors
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

#include "accredia/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "accredia/errors.hpp"

namespace accredia::io {
namespace {

std::string child(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

std::string item(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

const Json& require(const Json& j, std::string_view key, const std::string& path) {
  if (!j.is_object()) throw ParameterError(path, "expected an object");
  auto it = j.find(std::string(key));
  if (it == j.end()) throw ParameterError(child(path, key), "missing");
  return *it;
}

double as_double(const Json& j, const std::string& path) {
  if (!j.is_number()) throw ParameterError(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParameterError(path, "must be finite");
  return v;
}

std::uint64_t as_u64(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<std::int64_t>() < 0)) {
    throw ParameterError(path, "expected a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw ParameterError(path, "expected a string");
  return j.get<std::string>();
}

double number_or(const Json& j, std::string_view key, double fallback, const std::string& path) {
  auto it = j.find(std::string(key));
  return it == j.end() ? fallback : as_double(*it, child(path, key));
}

Json layer_json(const GateLayer& layer) {
  Json arr = Json::array();
  for (const auto& seq : layer.gates) arr.push_back(format_gate_sequence(seq));
  return arr;
}

std::vector<GateSequence> layer_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParameterError(path, "expected an array of gate names");
  std::vector<GateSequence> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    try {
      out.push_back(parse_gate_sequence(as_string(j[i], item(path, i))));
    } catch (const ParseError& e) {
      throw ParameterError(item(path, i), e.what());
    }
  }
  return out;
}

Json location_json(const NoiseLocation& where) {
  Json j;
  j["kind"] = std::string(location_name(where.kind));
  if (where.first) j["first"] = *where.first;
  if (where.last) j["last"] = *where.last;
  return j;
}

NoiseLocation location_from_json(const Json& j, const std::string& path) {
  auto kind_of = [&](const std::string& name, const std::string& p) {
    if (name == "prep") return LocationKind::prep;
    if (name == "measurement") return LocationKind::measurement;
    if (name == "gate_layer") return LocationKind::gate_layer;
    if (name == "evolution_slice") return LocationKind::evolution_slice;
    throw ParameterError(p, "unknown location '" + name + "'");
  };
  if (j.is_string()) return {kind_of(j.get<std::string>(), path), {}, {}};
  reject_unknown(j, {"kind", "first", "last", "index"}, path);
  NoiseLocation where{kind_of(as_string(require(j, "kind", path), child(path, "kind")),
                              child(path, "kind")),
                      {},
                      {}};
  if (j.contains("index")) {
    where.first = where.last = as_u64(j["index"], child(path, "index"));
  }
  if (j.contains("first")) where.first = as_u64(j["first"], child(path, "first"));
  if (j.contains("last")) where.last = as_u64(j["last"], child(path, "last"));
  return where;
}

Json channel_json(const Channel& ch) {
  Json j;
  j["kind"] = std::string(channel_kind(ch));
  if (const auto* c = std::get_if<StochasticPauli>(&ch)) {
    Json rates = Json::object();
    for (const auto& [word, r] : c->rates) rates[word.word()] = r;
    j["rates"] = rates;
  } else if (const auto* c = std::get_if<Depolarizing>(&ch)) {
    j["p"] = c->p;
  } else if (const auto* c = std::get_if<CoherentOverrotation>(&ch)) {
    j["axis"] = c->axis.word();
    j["angle"] = c->angle;
  } else if (const auto* c = std::get_if<AmplitudeDamping>(&ch)) {
    j["gamma"] = c->gamma;
  }
  return j;
}

Channel channel_from_json(const Json& j, const std::string& path) {
  const std::string kind = as_string(require(j, "kind", path), child(path, "kind"));
  if (kind == "stochastic_pauli") {
    reject_unknown(j, {"kind", "rates"}, path);
    const Json& rates = require(j, "rates", path);
    if (!rates.is_object()) throw ParameterError(child(path, "rates"), "expected a word -> rate map");
    StochasticPauli c;
    for (auto it = rates.begin(); it != rates.end(); ++it) {
      const std::string p = child(child(path, "rates"), it.key());
      c.rates.emplace_back(pauli_from_json(it.key(), p), as_double(it.value(), p));
    }
    return c;
  }
  if (kind == "depolarizing") {
    reject_unknown(j, {"kind", "p"}, path);
    return Depolarizing{as_double(require(j, "p", path), child(path, "p"))};
  }
  if (kind == "coherent_overrotation") {
    reject_unknown(j, {"kind", "axis", "angle"}, path);
    return CoherentOverrotation{pauli_from_json(require(j, "axis", path), child(path, "axis")),
                                as_double(require(j, "angle", path), child(path, "angle"))};
  }
  if (kind == "amplitude_damping") {
    reject_unknown(j, {"kind", "gamma"}, path);
    return AmplitudeDamping{as_double(require(j, "gamma", path), child(path, "gamma"))};
  }
  throw ParameterError(child(path, "kind"), "unknown channel '" + kind + "'");
}

Drift drift_from_json(const Json& j, const std::string& path) {
  const std::string kind = as_string(require(j, "kind", path), child(path, "kind"));
  if (kind == "uniform") {
    reject_unknown(j, {"kind", "low", "high"}, path);
    return {Drift::Kind::uniform, as_double(require(j, "low", path), child(path, "low")),
            as_double(require(j, "high", path), child(path, "high"))};
  }
  if (kind == "gaussian") {
    reject_unknown(j, {"kind", "mean", "stddev"}, path);
    return {Drift::Kind::gaussian, as_double(require(j, "mean", path), child(path, "mean")),
            as_double(require(j, "stddev", path), child(path, "stddev"))};
  }
  throw ParameterError(child(path, "kind"), "unknown drift '" + kind + "'");
}

}  // namespace

void reject_unknown(const Json& j, std::initializer_list<std::string_view> allowed,
                    const std::string& path, std::initializer_list<std::string_view> extra) {
  if (!j.is_object()) throw ParameterError(path.empty() ? "config" : path, "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    const bool known = std::find(allowed.begin(), allowed.end(), key) != allowed.end() ||
                       std::find(extra.begin(), extra.end(), key) != extra.end();
    if (!known) throw ParameterError(child(path, key), "unknown field");
  }
}

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) return "nan";
  return std::string(buf, end);
}

Json to_json(const PauliString& p) { return p.to_string(); }

PauliString pauli_from_json(const Json& j, const std::string& path) {
  try {
    return PauliString::parse(as_string(j, path));
  } catch (const ParseError& e) {
    throw ParameterError(path, e.what());
  }
}

Json to_json(const WeightedHamiltonian& h) {
  Json arr = Json::array();
  for (const auto& term : h.terms()) {
    arr.push_back(Json{{"coeff", term.coeff}, {"pauli", term.pauli.word()}});
  }
  return arr;
}

WeightedHamiltonian hamiltonian_from_json(const Json& j, const std::string& path) {
  const Json* terms = &j;
  if (j.is_object()) {
    reject_unknown(j, {"terms"}, path);
    terms = &require(j, "terms", path);
  }
  if (!terms->is_array() || terms->empty()) {
    throw ParameterError(path, "expected a non-empty list of {coeff, pauli} terms");
  }
  std::vector<PauliTerm> parsed;
  std::size_t n = 0;
  for (std::size_t i = 0; i < terms->size(); ++i) {
    const std::string p = item(path, i);
    const Json& t = (*terms)[i];
    reject_unknown(t, {"coeff", "pauli"}, p);
    PauliString word = pauli_from_json(require(t, "pauli", p), child(p, "pauli"));
    if (i == 0) n = word.n_qubits();
    if (word.n_qubits() != n) throw ParameterError(child(p, "pauli"), "word width differs from term 0");
    parsed.push_back({as_double(require(t, "coeff", p), child(p, "coeff")), std::move(word)});
  }
  try {
    return WeightedHamiltonian(n, std::move(parsed));
  } catch (const ParameterError& e) {
    throw ParameterError(path, e.what());
  }
}

Json to_json(const Hypergraph& g) {
  Json j;
  j["n_vertices"] = g.n_vertices;
  j["edges"] = g.edges;
  j["identity_only"] = g.identity_only;
  return j;
}

Json to_json(const Coloring& c) {
  Json j;
  j["n_colors"] = c.n_colors;
  j["colors"] = c.colors;
  return j;
}

Json to_json(const InversionGroup& g) {
  Json j;
  Json gens = Json::array();
  for (const auto& w : g.generators()) gens.push_back(w.word());
  Json elems = Json::array();
  for (const auto& w : g.elements()) elems.push_back(w.word());
  j["L"] = g.size();
  j["generators"] = gens;
  j["elements"] = elems;
  return j;
}

Json to_json(const HybridCircuit& c, std::string_view hamiltonian_ref) {
  Json j;
  j["n_qubits"] = c.n_qubits;
  j["kind"] = std::string(circuit_kind_name(c.kind));
  if (c.seed) j["seed"] = *c.seed;
  if (c.expected_outcome) j["expected_outcome"] = *c.expected_outcome;
  if (c.hamiltonian) j["hamiltonians"] = Json{{std::string(hamiltonian_ref), to_json(*c.hamiltonian)}};
  j["prep"] = layer_json(c.prep);
  Json body = Json::array();
  for (const Segment& seg : c.body) {
    if (const auto* layer = std::get_if<GateLayer>(&seg)) {
      body.push_back(layer_json(*layer));
    } else {
      body.push_back(Json{{"hamiltonian_ref", std::string(hamiltonian_ref)},
                          {"duration", std::get<Evolution>(seg).duration}});
    }
  }
  j["body"] = body;
  j["meas"] = layer_json(c.meas);
  return j;
}

HybridCircuit circuit_from_json(const Json& j) {
  const std::string path = "circuit";
  reject_unknown(j, {"n_qubits", "kind", "seed", "expected_outcome", "hamiltonians", "prep", "body", "meas"},
                 path);
  HybridCircuit c;
  c.n_qubits = as_u64(require(j, "n_qubits", path), "n_qubits");
  std::map<std::string, std::shared_ptr<const WeightedHamiltonian>> hams;
  if (j.contains("hamiltonians")) {
    const Json& hs = j["hamiltonians"];
    if (!hs.is_object()) throw ParameterError("hamiltonians", "expected a ref -> terms map");
    for (auto it = hs.begin(); it != hs.end(); ++it) {
      hams[it.key()] = std::make_shared<const WeightedHamiltonian>(
          hamiltonian_from_json(it.value(), "hamiltonians." + it.key()));
    }
  }
  if (j.contains("kind")) {
    const std::string k = as_string(j["kind"], "kind");
    if (k == "bare") c.kind = CircuitKind::bare;
    else if (k == "target") c.kind = CircuitKind::target;
    else if (k == "trap") c.kind = CircuitKind::trap;
    else throw ParameterError("kind", "unknown circuit kind '" + k + "'");
  }
  if (j.contains("seed")) c.seed = as_u64(j["seed"], "seed");
  if (j.contains("expected_outcome")) c.expected_outcome = as_string(j["expected_outcome"], "expected_outcome");
  c.prep.gates = j.contains("prep") ? layer_from_json(j["prep"], "prep")
                                    : GateLayer::identity(c.n_qubits).gates;
  c.meas.gates = j.contains("meas") ? layer_from_json(j["meas"], "meas")
                                    : GateLayer::identity(c.n_qubits).gates;
  if (j.contains("body")) {
    const Json& body = j["body"];
    if (!body.is_array()) throw ParameterError("body", "expected an array");
    for (std::size_t i = 0; i < body.size(); ++i) {
      const std::string p = item("body", i);
      if (body[i].is_array()) {
        c.body.emplace_back(GateLayer{layer_from_json(body[i], p)});
        continue;
      }
      reject_unknown(body[i], {"hamiltonian_ref", "duration"}, p);
      const std::string ref = as_string(require(body[i], "hamiltonian_ref", p), child(p, "hamiltonian_ref"));
      auto it = hams.find(ref);
      if (it == hams.end()) throw ParameterError(child(p, "hamiltonian_ref"), "unknown ref '" + ref + "'");
      if (c.hamiltonian && c.hamiltonian != it->second) {
        throw ParameterError(child(p, "hamiltonian_ref"), "a circuit uses a single Hamiltonian");
      }
      c.hamiltonian = it->second;
      c.body.emplace_back(Evolution{as_double(require(body[i], "duration", p), child(p, "duration"))});
    }
  }
  if (!c.hamiltonian && hams.size() == 1) c.hamiltonian = hams.begin()->second;
  c.validate();
  return c;
}

Json to_json(const NoiseBinding& b) {
  Json j;
  j["where"] = location_json(b.where);
  j["channel"] = channel_json(b.channel);
  if (b.drift) {
    if (b.drift->kind == Drift::Kind::uniform) {
      j["drift"] = Json{{"kind", "uniform"}, {"low", b.drift->a}, {"high", b.drift->b}};
    } else {
      j["drift"] = Json{{"kind", "gaussian"}, {"mean", b.drift->a}, {"stddev", b.drift->b}};
    }
  }
  return j;
}

Json to_json(const NoiseModel& m) {
  Json arr = Json::array();
  for (const auto& b : m.bindings()) arr.push_back(to_json(b));
  return arr;
}

NoiseModel noise_from_json(const Json& j, std::size_t n_qubits, const std::string& path) {
  if (j.is_null()) return {};
  if (!j.is_array()) throw ParameterError(path, "expected a list of bindings");
  NoiseModel model;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = item(path, i);
    reject_unknown(j[i], {"where", "channel", "drift"}, p);
    NoiseLocation where = location_from_json(require(j[i], "where", p), child(p, "where"));
    Channel ch = channel_from_json(require(j[i], "channel", p), child(p, "channel"));
    std::optional<Drift> drift;
    if (j[i].contains("drift")) drift = drift_from_json(j[i]["drift"], child(p, "drift"));
    model.add(where, std::move(ch), drift);
    try {
      NoiseModel({model.bindings().back()}).validate(n_qubits);
    } catch (const ParameterError& e) {
      const bool binding_level = e.field() == "where" || e.field() == "drift";
      throw ParameterError(child(binding_level ? p : child(p, "channel"), e.field()), e.what());
    }
  }
  return model;
}

Json to_json(const ProtocolConfig& cfg) {
  Json j;
  if (cfg.hamiltonian) j["hamiltonian"] = to_json(*cfg.hamiltonian);
  j["t"] = cfg.t;
  j["eps"] = cfg.eps;
  j["alpha"] = cfg.alpha;
  j["theta"] = cfg.theta;
  j["seed"] = cfg.seed;
  j["prep"] = layer_json(GateLayer{cfg.prep});
  j["meas"] = layer_json(GateLayer{cfg.meas});
  j["parallelism"] = cfg.parallelism;
  j["target_shots"] = cfg.target_shots;
  return j;
}

ProtocolConfig protocol_config_from_json(const Json& j, std::initializer_list<std::string_view> extra) {
  reject_unknown(j,
                 {"hamiltonian", "t", "eps", "alpha", "theta", "seed", "prep", "meas", "parallelism",
                  "target_shots"},
                 "", extra);
  ProtocolConfig cfg;
  cfg.hamiltonian = std::make_shared<const WeightedHamiltonian>(
      hamiltonian_from_json(require(j, "hamiltonian", ""), "hamiltonian"));
  const std::size_t n = cfg.hamiltonian->n_qubits();
  cfg.t = number_or(j, "t", cfg.t, "");
  cfg.eps = number_or(j, "eps", cfg.eps, "");
  cfg.alpha = number_or(j, "alpha", cfg.alpha, "");
  cfg.theta = number_or(j, "theta", cfg.theta, "");
  if (j.contains("seed")) cfg.seed = as_u64(j["seed"], "seed");
  if (j.contains("parallelism")) cfg.parallelism = as_u64(j["parallelism"], "parallelism");
  if (j.contains("target_shots")) cfg.target_shots = as_u64(j["target_shots"], "target_shots");
  cfg.prep = j.contains("prep") ? layer_from_json(j["prep"], "prep") : GateLayer::identity(n).gates;
  cfg.meas = j.contains("meas") ? layer_from_json(j["meas"], "meas") : GateLayer::identity(n).gates;
  cfg.validate();
  return cfg;
}

Json to_json(const ProtocolResult& r) {
  Json j;
  j["complete"] = r.complete;
  j["seed"] = r.seed;
  j["theta"] = r.theta;
  j["alpha"] = r.alpha;
  j["eps"] = r.eps;
  j["group_size"] = r.group_size;
  j["slices"] = r.slices;
  j["n_traps"] = r.n_traps;
  j["n_traps_failed"] = r.n_traps_failed;
  j["failed_fraction"] = r.failed_fraction();
  j["epsilon_vd"] = r.epsilon_vd;
  j["target_position"] = r.target_position;
  j["target_outcomes"] = r.target_outcomes;
  Json traps = Json::array();
  for (const auto& t : r.traps) {
    traps.push_back(Json{{"position", t.position}, {"seed", t.seed}, {"outcome", t.outcome},
                         {"passed", t.passed}});
  }
  j["traps"] = traps;
  return j;
}

std::string summary_csv(const ProtocolResult& r) {
  std::ostringstream os;
  os << "seed,n_traps,n_traps_failed,failed_fraction,epsilon_vd,target_position,target_outcome\n";
  os << r.seed << ',' << r.n_traps << ',' << r.n_traps_failed << ',' << format_double(r.failed_fraction())
     << ',' << format_double(r.epsilon_vd) << ',' << r.target_position << ','
     << (r.target_outcomes.empty() ? "" : r.target_outcomes.front()) << '\n';
  return os.str();
}

std::string executions_csv(const ProtocolResult& r) {
  std::ostringstream os;
  os << "execution_id,kind,seed,bitstring,passed\n";
  std::size_t last = r.target_outcomes.empty() ? 0 : r.target_position;
  for (const auto& t : r.traps) last = std::max(last, t.position);
  auto trap = r.traps.begin();
  for (std::size_t pos = 1; pos <= last; ++pos) {
    if (pos == r.target_position) {
      for (const auto& s : r.target_outcomes) os << pos << ",target,," << s << ",\n";
    } else if (trap != r.traps.end() && trap->position == pos) {
      os << pos << ",trap," << trap->seed << ',' << trap->outcome << ','
         << (trap->passed ? "true" : "false") << '\n';
      ++trap;
    }
  }
  return os.str();
}

}  // namespace accredia::io
