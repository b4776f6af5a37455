// Copyright 2026 The qec513 Authors
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

#include "qec513/core/types.hpp"

namespace qec513 {

/// Frobenius-nearest positive semidefinite unit-trace matrix: eigenvalues
/// are projected onto the probability simplex, eigenvectors kept. Throws if
/// the input is not Hermitian within 1e-10.
ComplexMatrix mle_physical(const ComplexMatrix& m);

}  // namespace qec513
