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

#include <cstddef>
#include <vector>

#include "accredia/hamiltonian.hpp"
#include "accredia/pauli.hpp"

namespace accredia {

// Vertices are 0..n_vertices-1. Hyperedges are stored sorted and
// deduplicated in first-seen order.
struct Hypergraph {
  std::size_t n_vertices = 0;
  std::vector<std::vector<std::size_t>> edges;
  // Set when built from a Hamiltonian that has only identity terms.
  bool identity_only = false;

  // Maximum number of hyperedges containing any single vertex. Diagnostic.
  std::size_t max_degree() const;
};

// Canonicalizes edges. Throws ParameterError on empty or out-of-range edges.
Hypergraph make_hypergraph(std::size_t n_vertices,
                           std::vector<std::vector<std::size_t>> edges);

// One hyperedge per non-identity term: the qubits the term acts on.
Hypergraph build_interaction_hypergraph(const WeightedHamiltonian& h);

// Clique-per-hyperedge reduction; adjacency lists sorted ascending.
std::vector<std::vector<std::size_t>> auxiliary_graph(const Hypergraph& g);

struct Coloring {
  std::vector<int> colors;  // colors[v] in 1..n_colors
  int n_colors = 0;

  bool is_valid_for(const Hypergraph& g) const;
  // chromatic_subsets()[c-1] holds the vertices of color c.
  std::vector<std::vector<std::size_t>> chromatic_subsets() const;
};

// Greedy coloring of the auxiliary graph, vertices in ascending index,
// each taking the smallest color unused among already-colored neighbors.
Coloring color_hypergraph(const Hypergraph& g);

// A multiplication-closed set of phase-free Pauli words such that every
// non-identity Hamiltonian term anticommutes with exactly half of it.
class InversionGroup {
 public:
  InversionGroup(std::size_t n_qubits, std::vector<PauliString> generators);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  // Identity first, then in the order closure discovered them.
  const std::vector<PauliString>& elements() const noexcept { return elements_; }
  const std::vector<PauliString>& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return elements_.size(); }

  // Elements without the identity word (the conjugation set for inversion).
  std::vector<PauliString> non_identity() const;
  bool contains(const PauliString& word) const;
  std::size_t count_anticommuting(const PauliString& term) const;

 private:
  std::size_t n_qubits_;
  std::vector<PauliString> generators_;
  std::vector<PauliString> elements_;
};

// Term by term, if nothing in the current group anticommutes with the term,
// take its lowest-index non-I qubit v and the chromatic subset containing v
// (under color_hypergraph of the interaction hypergraph), and add the
// generator that places X (if the term's letter at v is Z or Y) or Z
// (otherwise) on every qubit of that subset. The subset meets the term only
// at v, so the new generator anticommutes with it.
//
// Throws ParameterError("hamiltonian", "nothing to invert") when every term
// is the identity.
InversionGroup build_inversion_group(const WeightedHamiltonian& h);

// max |sum_{s in G} s H s - (L Tr(H) / 2^N) I| over dense entries.
double twirl_check(const InversionGroup& group, const WeightedHamiltonian& h);

}  // namespace accredia
