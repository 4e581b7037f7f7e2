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

#include "liegraph/hall.hpp"

#include <stdexcept>

namespace liegraph {

namespace {

long long ipow(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

int moebius(int n) {
    int mu = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

}  // namespace

long long witt_dimension(int alphabet, int degree) {
    if (degree < 1) return 0;
    long long sum = 0;
    for (int d = 1; d <= degree; ++d) {
        if (degree % d) continue;
        sum += moebius(d) * ipow(alphabet, degree / d);
    }
    return sum / degree;
}

HallSet::HallSet(int alphabet, int max_degree)
    : alphabet_(alphabet), max_degree_(max_degree) {
    if (alphabet < 1) throw std::logic_error("empty generating set");
    if (max_degree < 1) throw std::logic_error("degree bound below 1");
    words_.resize(max_degree + 1);
    index_.resize(max_degree + 1);
    envelopes_.resize(max_degree + 1);

    // Duval's generation of all Lyndon words of length <= max_degree, in
    // lexicographic order across lengths.
    Word w{0};
    for (;;) {
        if (static_cast<int>(w.size()) <= max_degree) {
            int d = static_cast<int>(w.size());
            index_[d].emplace(w, static_cast<int>(words_[d].size()));
            words_[d].push_back(HallWord{w, 0, -1, 0, -1});
        }
        Word t = w;
        t.resize(max_degree);
        for (int i = static_cast<int>(w.size()); i < max_degree; ++i)
            t[i] = t[i - static_cast<int>(w.size())];
        while (!t.empty() && t.back() == alphabet - 1) t.pop_back();
        if (t.empty()) break;
        ++t.back();
        w = std::move(t);
    }

    // Standard factorization w = u v with v the lexicographically smallest
    // proper suffix; both factors are Lyndon.
    for (int d = 2; d <= max_degree; ++d) {
        for (HallWord& hw : words_[d]) {
            const Word& w2 = hw.word;
            int best = 1;
            for (int s = 2; s < d; ++s) {
                if (std::lexicographical_compare(w2.begin() + s, w2.end(),
                                                 w2.begin() + best, w2.end()))
                    best = s;
            }
            Word u(w2.begin(), w2.begin() + best);
            Word v(w2.begin() + best, w2.end());
            hw.left_deg = best;
            hw.left_idx = index_of(best, u);
            hw.right_deg = d - best;
            hw.right_idx = index_of(d - best, v);
            if (hw.left_idx < 0 || hw.right_idx < 0)
                throw std::logic_error("standard factorization left a non-Lyndon factor");
        }
    }

    // Eager envelope expansions, lowest degrees first.
    for (int d = 1; d <= max_degree; ++d) {
        envelopes_[d].resize(words_[d].size());
        for (std::size_t i = 0; i < words_[d].size(); ++i) {
            const HallWord& hw = words_[d][i];
            if (hw.is_letter()) {
                envelopes_[d][i] = Poly{{hw.word, Rational(1)}};
            } else {
                envelopes_[d][i] =
                    bracket_poly(envelopes_[hw.left_deg][hw.left_idx],
                                 envelopes_[hw.right_deg][hw.right_idx]);
            }
        }
    }
}

const std::vector<HallWord>& HallSet::words(int degree) const {
    return words_.at(degree);
}

int HallSet::index_of(int degree, const Word& w) const {
    const auto& idx = index_.at(degree);
    auto it = idx.find(w);
    return it == idx.end() ? -1 : it->second;
}

const Poly& HallSet::envelope(int degree, int index) const {
    return envelopes_.at(degree).at(index);
}

std::string HallSet::bracket_label(int degree, int index,
                                   const std::vector<std::string>& names) const {
    const HallWord& hw = words_.at(degree).at(index);
    if (hw.is_letter()) return names.at(hw.word[0]);
    return "[" + bracket_label(hw.left_deg, hw.left_idx, names) + "," +
           bracket_label(hw.right_deg, hw.right_idx, names) + "]";
}

VecQ HallSet::to_basis(int degree, Poly p) const {
    VecQ out = VecQ::Zero(count(degree));
    while (!p.empty()) {
        auto it = p.begin();  // lex-least monomial
        if (it->second == 0) {
            p.erase(it);
            continue;
        }
        int idx = index_of(degree, it->first);
        if (idx < 0)
            throw std::logic_error("leading monomial is not a Lyndon word; input is outside the Lie span");
        Rational c = it->second;
        out(idx) += c;
        poly_axpy(p, -c, envelope(degree, idx));
    }
    return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [wa, ca] : a) {
        for (const auto& [wb, cb] : b) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            Rational& slot = out[w];
            slot += ca * cb;
            if (slot == 0) out.erase(w);
        }
    }
    return out;
}

void poly_axpy(Poly& p, const Rational& c, const Poly& q) {
    if (c == 0) return;
    for (const auto& [w, coef] : q) {
        Rational& slot = p[w];
        slot += c * coef;
        if (slot == 0) p.erase(w);
    }
}

Poly bracket_poly(const Poly& a, const Poly& b) {
    Poly out = poly_mul(a, b);
    poly_axpy(out, Rational(-1), poly_mul(b, a));
    return out;
}

Poly poly_relabel(const Poly& p, const std::vector<int>& relabel) {
    Poly out;
    for (const auto& [w, c] : p) {
        Word r(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) r[i] = relabel.at(w[i]);
        out[r] = c;
    }
    return out;
}

}  // namespace liegraph
