// Copyright 2026 The QET Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>

namespace qet {

// Invalid inputs are reported with std::invalid_argument. NumericalError is reserved for
// failures of the numerics themselves: corrupted states, failed decompositions,
// singular calibration matrices.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qet
