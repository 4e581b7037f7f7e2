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

#ifndef LIEGRAPH_RATIONAL_HPP
#define LIEGRAPH_RATIONAL_HPP

#include <gmpxx.h>

#include <Eigen/Core>
#include <string>

#include "liegraph/common.hpp"

namespace Eigen {

// mpq_class as an Eigen scalar.  All arithmetic is exact, so epsilon and
// dummy_precision are zero.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    typedef mpq_class Real;
    typedef mpq_class NonInteger;
    typedef mpq_class Nested;
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 150,
        MulCost = 100,
    };
};

}  // namespace Eigen

namespace liegraph {

using Rational = mpq_class;
using MatQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Canonical "p" / "p/q" rendering.
std::string rational_string(const Rational& q);

/// Parses "p" or "p/q"; throws ValidationError on malformed text or a zero
/// denominator.
Rational parse_rational(const std::string& text);

}  // namespace liegraph

#endif  // LIEGRAPH_RATIONAL_HPP
