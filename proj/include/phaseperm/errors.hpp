/*
 * Copyright 2026 The phaseperm Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace phaseperm {

/// Raised on dimension or squareness mismatches.
class shape_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class invalid_permutation : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Photon configuration does not sum to the photon number, or n exceeds m.
class configuration_mismatch : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Input exceeds a cost guard (factorial, exponential or table-size limit).
class size_guard_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A Monte-Carlo sample evaluated to NaN or Inf.
class non_finite_sample : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace phaseperm
