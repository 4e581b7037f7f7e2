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

#include "liegraph/rational.hpp"

namespace liegraph {

std::string rational_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
    if (text.empty())
        throw ValidationError("empty rational literal");
    for (char ch : text) {
        if (ch != '-' && ch != '/' && !(ch >= '0' && ch <= '9'))
            throw ValidationError("malformed rational literal '" + text + "'");
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw ValidationError("malformed rational literal '" + text + "'");
    if (q.get_den() == 0)
        throw ValidationError("zero denominator in rational literal '" + text + "'");
    q.canonicalize();
    return q;
}

}  // namespace liegraph
