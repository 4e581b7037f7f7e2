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

#include "liegraph/field.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace liegraph {

long long squarefree_part(long long n) {
    if (n == 0) return 0;
    long long sign = n < 0 ? -1 : 1;
    long long v = n < 0 ? -n : n;
    long long out = 1;
    for (long long p = 2; p * p <= v; ++p) {
        if (v % p) continue;
        int e = 0;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        if (e & 1) out *= p;
    }
    return sign * out * v;
}

QuadraticTower::QuadraticTower(std::vector<long long> radicands)
    : radicands_(std::move(radicands)) {
    for (long long d : radicands_) {
        if (d == 0 || d == 1)
            throw ValidationError("radicand " + std::to_string(d) + " is not allowed");
        if (squarefree_part(d) != d)
            throw ValidationError("radicand " + std::to_string(d) + " is not squarefree");
    }
    radical_.assign(basis_size(), 1);
    for (int mask = 1; mask < basis_size(); ++mask) {
        int low = mask & -mask;
        int j = 0;
        while (!((low >> j) & 1)) ++j;
        long long prod = radical_[mask ^ low];
        // multiplying two squarefree values and reducing keeps everything small
        radical_[mask] = squarefree_part(prod * radicands_[j]);
        if (radical_[mask] == 1)
            throw ValidationError(
                "radicands are multiplicatively dependent; drop the redundant generator");
    }
    std::set<long long> distinct(radical_.begin(), radical_.end());
    if (static_cast<int>(distinct.size()) != basis_size())
        throw ValidationError("radicands are multiplicatively dependent");

    mul_coef_ = MatQ::Zero(basis_size(), basis_size());
    for (int a = 0; a < basis_size(); ++a) {
        for (int b = 0; b < basis_size(); ++b) {
            long long ma = radical_[a], mb = radical_[b];
            long long gab = std::gcd(ma < 0 ? -ma : ma, mb < 0 ? -mb : mb);
            long long coef = (ma < 0 && mb < 0) ? -gab : gab;
            mul_coef_(a, b) = Rational(static_cast<long>(coef));
            // sanity: (sqrt(ma) sqrt(mb))^2 == coef^2 * m_{a xor b}
            if (ma * mb != coef * coef * radical_[a ^ b])
                throw std::logic_error("inconsistent radical product table");
        }
    }
}

bool QuadraticTower::is_real() const {
    for (long long d : radicands_)
        if (d < 0) return false;
    return true;
}

VecQ QuadraticTower::from_rational(const Rational& q) const {
    VecQ v = zero();
    v(0) = q;
    return v;
}

VecQ QuadraticTower::multiply(const VecQ& a, const VecQ& b) const {
    VecQ out = zero();
    for (int i = 0; i < basis_size(); ++i) {
        if (a(i) == 0) continue;
        for (int j = 0; j < basis_size(); ++j) {
            if (b(j) == 0) continue;
            out(i ^ j) += a(i) * b(j) * mul_coef_(i, j);
        }
    }
    return out;
}

VecQ QuadraticTower::conjugate(const VecQ& a, int generator) const {
    VecQ out = a;
    for (int mask = 0; mask < basis_size(); ++mask)
        if ((mask >> generator) & 1) out(mask) = -out(mask);
    return out;
}

bool QuadraticTower::is_rational_element(const VecQ& a) const {
    for (int mask = 1; mask < basis_size(); ++mask)
        if (a(mask) != 0) return false;
    return true;
}

std::vector<long long> QuadraticTower::closure_values() const {
    std::vector<long long> vals(radical_.begin(), radical_.end());
    std::sort(vals.begin(), vals.end());
    return vals;
}

namespace {

// |value| ascending, positive before negative at equal magnitude
bool canonical_less(long long a, long long b) {
    long long aa = a < 0 ? -a : a, ab = b < 0 ? -b : b;
    if (aa != ab) return aa < ab;
    return a > b;
}

}  // namespace

std::vector<long long> QuadraticTower::canonical_generators() const {
    std::vector<long long> candidates(radical_.begin(), radical_.end());
    std::sort(candidates.begin(), candidates.end(), canonical_less);
    std::vector<long long> gens;
    std::set<long long> generated{1};
    for (long long cand : candidates) {
        if (cand == 1 || generated.count(cand)) continue;
        std::set<long long> extended = generated;
        for (long long v : generated) extended.insert(squarefree_part(v * cand));
        generated = std::move(extended);
        gens.push_back(cand);
        if (static_cast<int>(generated.size()) == basis_size()) break;
    }
    return gens;
}

int QuadraticTower::canonical_mask(long long value) const {
    const std::vector<long long> gens = canonical_generators();
    std::map<long long, int> table{{1, 0}};
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::map<long long, int> next = table;
        for (const auto& [v, mask] : table)
            next[squarefree_part(v * gens[i])] = mask | (1 << i);
        table = std::move(next);
    }
    auto it = table.find(value);
    if (it == table.end())
        throw ValidationError("value " + std::to_string(value) +
                              " does not lie in the field");
    return it->second;
}

std::string QuadraticTower::radical_label(int mask) const {
    if (mask == 0) return "1";
    return "sqrt(" + std::to_string(radical_.at(mask)) + ")";
}

}  // namespace liegraph
