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

#pragma once

#include <initializer_list>
#include <memory>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "accredia/accreditor.hpp"
#include "accredia/circuit.hpp"
#include "accredia/hamiltonian.hpp"
#include "accredia/hypergraph.hpp"
#include "accredia/noise.hpp"
#include "accredia/pauli.hpp"

namespace accredia::io {

// Insertion-ordered so emitted documents read in schema order.
using Json = nlohmann::ordered_json;

// All readers throw ParameterError whose field() is the dotted path of the
// offending key, e.g. "noise[0].channel.p".

Json to_json(const PauliString& p);
PauliString pauli_from_json(const Json& j, const std::string& path = "pauli");

// [{"coeff": 1.0, "pauli": "ZZ"}, ...]
Json to_json(const WeightedHamiltonian& h);
WeightedHamiltonian hamiltonian_from_json(const Json& j, const std::string& path = "hamiltonian");

Json to_json(const Hypergraph& g);
Json to_json(const Coloring& c);
Json to_json(const InversionGroup& g);

// Layers are arrays of per-qubit gate sequences ("ZH" = Z then H);
// evolutions are {"hamiltonian_ref", "duration"}. The Hamiltonian is
// embedded under "hamiltonians" keyed by the ref.
Json to_json(const HybridCircuit& c, std::string_view hamiltonian_ref = "H");
HybridCircuit circuit_from_json(const Json& j);

Json to_json(const NoiseBinding& b);
Json to_json(const NoiseModel& m);
NoiseModel noise_from_json(const Json& j, std::size_t n_qubits, const std::string& path = "noise");

Json to_json(const ProtocolConfig& cfg);
// Keys outside the protocol schema are rejected unless listed in `extra`.
ProtocolConfig protocol_config_from_json(const Json& j,
                                         std::initializer_list<std::string_view> extra = {});

Json to_json(const ProtocolResult& r);

// One header line plus one summary record.
std::string summary_csv(const ProtocolResult& r);
// execution_id,kind,seed,bitstring,passed; one record per execution.
std::string executions_csv(const ProtocolResult& r);

// Shortest round-trip decimal form.
std::string format_double(double v);

// Throws ParameterError(path) when `j` has a key outside `allowed`.
void reject_unknown(const Json& j, std::initializer_list<std::string_view> allowed,
                    const std::string& path,
                    std::initializer_list<std::string_view> extra = {});

}  // namespace accredia::io
