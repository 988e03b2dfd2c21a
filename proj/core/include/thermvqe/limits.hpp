// Copyright 2026 The thermvqe Authors
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

namespace thermvqe {

/// Largest register the dense statevector will allocate.
inline constexpr int kMaxQubits = 24;

/// Largest system handled by dense matrices (to_dense, exact_solve).
inline constexpr int kMaxDenseQubits = 12;

/// Largest total register for reduced density matrices.
inline constexpr int kMaxDensityQubits = 14;

} // namespace thermvqe
