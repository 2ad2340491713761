/*
 * Copyright 2026 The ovalcode Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>

namespace ovalcode {

// Parameter-level failures. The CLI maps these (and std::invalid_argument /
// std::domain_error in general) to exit code 2.
struct invalid_degree_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct unsupported_parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct malformed_family_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Mathematical failures on otherwise well-formed inputs; CLI exit code 1.
struct no_unique_solution_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct inconsistent_system_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct inconsistent_seed_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct inconsistent_input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct insufficient_data_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct no_local_repair_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A bucket or case analysis that must be exhaustive saw an input it cannot
// place. Indicates a bug, not bad input.
struct internal_consistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Work would exceed the configured enumeration cap; CLI exit code 3.
struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ovalcode
