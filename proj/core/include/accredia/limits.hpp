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

namespace accredia {

inline constexpr std::size_t kDefaultDenseQubitLimit = 10;
inline constexpr std::size_t kDefaultChoiQubitLimit = 6;

// Largest register simulated densely. ACCREDIA_MAX_QUBITS overrides the
// default; the variable is re-read on every call.
std::size_t dense_qubit_limit();

// Largest system register whose Choi state (2N qubits) is formed.
std::size_t choi_qubit_limit();

// Throws CapacityError naming `what` when n exceeds the limit.
void require_dense(std::size_t n_qubits, const char* what);
void require_choi(std::size_t n_qubits, const char* what);

}  // namespace accredia
