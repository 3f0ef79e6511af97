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

#include "accredia/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <unordered_set>

#include "accredia/errors.hpp"
#include "accredia/limits.hpp"

namespace accredia {

std::size_t Hypergraph::max_degree() const {
  std::vector<std::size_t> degree(n_vertices, 0);
  for (const auto& e : edges) {
    for (auto v : e) ++degree[v];
  }
  return degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());
}

Hypergraph make_hypergraph(std::size_t n_vertices,
                           std::vector<std::vector<std::size_t>> edges) {
  Hypergraph g;
  g.n_vertices = n_vertices;
  std::set<std::vector<std::size_t>> seen;
  for (auto& e : edges) {
    if (e.empty()) throw ParameterError("edges", "hyperedge is empty");
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (e.back() >= n_vertices) {
      throw ParameterError("edges", "vertex " + std::to_string(e.back()) +
                                        " out of range for " +
                                        std::to_string(n_vertices) + " vertices");
    }
    if (seen.insert(e).second) g.edges.push_back(std::move(e));
  }
  return g;
}

Hypergraph build_interaction_hypergraph(const WeightedHamiltonian& h) {
  std::vector<std::vector<std::size_t>> edges;
  for (const auto& term : h.terms()) {
    if (!term.pauli.is_identity()) edges.push_back(term.pauli.support());
  }
  Hypergraph g = make_hypergraph(h.n_qubits(), std::move(edges));
  g.identity_only = g.edges.empty();
  return g;
}

std::vector<std::vector<std::size_t>> auxiliary_graph(const Hypergraph& g) {
  std::vector<std::set<std::size_t>> adj(g.n_vertices);
  for (const auto& e : g.edges) {
    for (auto a : e) {
      for (auto b : e) {
        if (a != b) adj[a].insert(b);
      }
    }
  }
  std::vector<std::vector<std::size_t>> out(g.n_vertices);
  for (std::size_t v = 0; v < g.n_vertices; ++v) out[v].assign(adj[v].begin(), adj[v].end());
  return out;
}

bool Coloring::is_valid_for(const Hypergraph& g) const {
  if (colors.size() != g.n_vertices) return false;
  for (auto c : colors) {
    if (c < 1 || c > n_colors) return false;
  }
  for (const auto& e : g.edges) {
    std::set<int> used;
    for (auto v : e) {
      if (!used.insert(colors[v]).second) return false;
    }
  }
  return true;
}

std::vector<std::vector<std::size_t>> Coloring::chromatic_subsets() const {
  std::vector<std::vector<std::size_t>> out(static_cast<std::size_t>(n_colors));
  for (std::size_t v = 0; v < colors.size(); ++v) {
    out[static_cast<std::size_t>(colors[v] - 1)].push_back(v);
  }
  return out;
}

Coloring color_hypergraph(const Hypergraph& g) {
  const auto adj = auxiliary_graph(g);
  Coloring out;
  out.colors.assign(g.n_vertices, 0);
  std::vector<char> taken;
  for (std::size_t v = 0; v < g.n_vertices; ++v) {
    taken.assign(adj[v].size() + 2, 0);
    for (auto k : adj[v]) {
      const int c = out.colors[k];
      if (c > 0 && static_cast<std::size_t>(c) < taken.size()) taken[static_cast<std::size_t>(c)] = 1;
    }
    int chosen = 1;
    while (taken[static_cast<std::size_t>(chosen)]) ++chosen;
    out.colors[v] = chosen;
    out.n_colors = std::max(out.n_colors, chosen);
  }
  return out;
}

InversionGroup::InversionGroup(std::size_t n_qubits, std::vector<PauliString> generators)
    : n_qubits_(n_qubits), generators_(std::move(generators)) {
  std::unordered_set<PauliString, PauliWordHash> members;
  const PauliString identity(n_qubits);
  elements_.push_back(identity);
  members.insert(identity);
  for (auto& g : generators_) {
    if (g.n_qubits() != n_qubits) throw DimensionError("generator width mismatch");
    g = g.without_phase();
    if (members.contains(g)) continue;
    // The current set is a group, so {e * g} is a disjoint coset.
    const std::size_t existing = elements_.size();
    for (std::size_t i = 0; i < existing; ++i) {
      PauliString product = multiply(elements_[i], g).without_phase();
      members.insert(product);
      elements_.push_back(std::move(product));
    }
  }
}

std::vector<PauliString> InversionGroup::non_identity() const {
  return {elements_.begin() + 1, elements_.end()};
}

bool InversionGroup::contains(const PauliString& word) const {
  return std::any_of(elements_.begin(), elements_.end(),
                     [&](const PauliString& e) { return e.same_word(word.without_phase()); });
}

std::size_t InversionGroup::count_anticommuting(const PauliString& term) const {
  return static_cast<std::size_t>(std::count_if(
      elements_.begin(), elements_.end(),
      [&](const PauliString& e) { return anticommutes(e, term); }));
}

InversionGroup build_inversion_group(const WeightedHamiltonian& h) {
  if (h.non_identity_count() == 0) {
    throw ParameterError("hamiltonian", "nothing to invert");
  }
  const Hypergraph graph = build_interaction_hypergraph(h);
  const Coloring coloring = color_hypergraph(graph);
  const auto subsets = coloring.chromatic_subsets();
  const std::size_t n = h.n_qubits();

  std::vector<PauliString> generators;
  InversionGroup group(n, {});
  for (const auto& term : h.terms()) {
    if (term.pauli.is_identity()) continue;
    if (group.count_anticommuting(term.pauli) > 0) continue;
    const std::size_t v = term.pauli.support().front();
    const PauliLetter at_v = term.pauli.letter(v);
    const PauliLetter placed =
        (at_v == PauliLetter::Z || at_v == PauliLetter::Y) ? PauliLetter::X : PauliLetter::Z;
    PauliString generator(n);
    for (auto q : subsets[static_cast<std::size_t>(coloring.colors[v] - 1)]) {
      generator = generator.with_letter(q, placed);
    }
    generators.push_back(std::move(generator));
    group = InversionGroup(n, generators);
  }
  return group;
}

double twirl_check(const InversionGroup& group, const WeightedHamiltonian& h) {
  if (group.n_qubits() != h.n_qubits()) {
    throw DimensionError("inversion group and Hamiltonian widths differ");
  }
  require_dense(h.n_qubits(), "twirl check");
  const Matrix hm = h.to_matrix();
  Matrix sum = Matrix::Zero(hm.rows(), hm.cols());
  for (const auto& s : group.elements()) {
    const Matrix sm = to_matrix(s);
    sum.noalias() += sm * hm * sm;
  }
  const double dim = static_cast<double>(hm.rows());
  const double shift = static_cast<double>(group.size()) * hm.trace().real() / dim;
  sum.diagonal().array() -= shift;
  return sum.cwiseAbs().maxCoeff();
}

}  // namespace accredia
