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

#include "accredia/limits.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "accredia/errors.hpp"

namespace accredia {

std::size_t dense_qubit_limit() {
  const char* env = std::getenv("ACCREDIA_MAX_QUBITS");
  if (env == nullptr || *env == '\0') return kDefaultDenseQubitLimit;
  char* end = nullptr;
  const unsigned long value = std::strtoul(env, &end, 10);
  if (end == env || *end != '\0' || value == 0 || value > 30) {
    throw ParameterError("ACCREDIA_MAX_QUBITS",
                         "expected an integer in [1, 30], got '" +
                             std::string(env) + "'");
  }
  return static_cast<std::size_t>(value);
}

std::size_t choi_qubit_limit() {
  return std::min(kDefaultChoiQubitLimit, dense_qubit_limit());
}

void require_dense(std::size_t n_qubits, const char* what) {
  const std::size_t limit = dense_qubit_limit();
  if (n_qubits > limit) {
    throw CapacityError(std::string(what) + " exceeds dense qubit limit",
                        n_qubits, limit);
  }
}

void require_choi(std::size_t n_qubits, const char* what) {
  const std::size_t limit = choi_qubit_limit();
  if (n_qubits > limit) {
    throw CapacityError(std::string(what) + " exceeds Choi qubit limit",
                        n_qubits, limit);
  }
}

}  // namespace accredia
