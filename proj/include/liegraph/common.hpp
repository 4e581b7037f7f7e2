/* Copyright 2026 The liegraph authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#ifndef LIEGRAPH_COMMON_HPP
#define LIEGRAPH_COMMON_HPP

#include <stdexcept>
#include <string>

namespace liegraph {

/// Malformed or inconsistent input: bad graph file, unknown vertex,
/// invalid descent datum, unparsable flag value.  CLI exit code 1.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Well-formed input that exceeds a configured computational bound.
/// CLI exit code 2.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace liegraph

#endif  // LIEGRAPH_COMMON_HPP
