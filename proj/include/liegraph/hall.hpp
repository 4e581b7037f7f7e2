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

#ifndef LIEGRAPH_HALL_HPP
#define LIEGRAPH_HALL_HPP

#include <map>
#include <string>
#include <vector>

#include "liegraph/rational.hpp"

namespace liegraph {

/// Word over generator indices.  Within one degree all words have the same
/// length, so std::map keys compare in plain lexicographic order.
using Word = std::vector<int>;

/// Element of the free associative envelope, sparse by word.
using Poly = std::map<Word, Rational>;

/// A Lyndon word with its standard bracketing.  Children are referenced as
/// (degree, index) into the owning HallSet; degree 0 marks a letter.
struct HallWord {
    Word word;
    int left_deg = 0, left_idx = -1;
    int right_deg = 0, right_idx = -1;
    bool is_letter() const { return word.size() == 1; }
};

/// Dimension of the degree-m slice of the free Lie algebra on `alphabet`
/// generators (Moebius / necklace count).
long long witt_dimension(int alphabet, int degree);

/// Lyndon words of length 1..max_degree with standard bracketings and
/// eagerly cached envelope expansions.  Lex-sorted within each degree; that
/// order is the canonical basis order everywhere downstream.
class HallSet {
public:
    HallSet(int alphabet, int max_degree);

    int alphabet() const { return alphabet_; }
    int max_degree() const { return max_degree_; }
    const std::vector<HallWord>& words(int degree) const;
    int count(int degree) const { return static_cast<int>(words(degree).size()); }
    /// -1 when w is not Lyndon of this degree.
    int index_of(int degree, const Word& w) const;
    const Poly& envelope(int degree, int index) const;
    /// Nested bracket rendering, e.g. "[a,[a,b]]".
    std::string bracket_label(int degree, int index,
                              const std::vector<std::string>& names) const;

    /// Coordinates of a Lie element over the degree's Lyndon basis.  The
    /// expansion of a Lyndon bracketing starts at its own word, so repeated
    /// leading-term elimination terminates; throws std::logic_error when the
    /// input is not in the Lie span.
    VecQ to_basis(int degree, Poly p) const;

private:
    int alphabet_;
    int max_degree_;
    std::vector<std::vector<HallWord>> words_;        // by degree
    std::vector<std::map<Word, int>> index_;          // by degree
    std::vector<std::vector<Poly>> envelopes_;        // by degree
};

Poly poly_mul(const Poly& a, const Poly& b);
/// p += c * q, erasing cancelled terms.
void poly_axpy(Poly& p, const Rational& c, const Poly& q);
/// a*b - b*a in the envelope.
Poly bracket_poly(const Poly& a, const Poly& b);
/// Letterwise relabeling of every monomial.
Poly poly_relabel(const Poly& p, const std::vector<int>& relabel);

}  // namespace liegraph

#endif  // LIEGRAPH_HALL_HPP
