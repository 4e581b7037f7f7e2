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

#include "liegraph/linalg.hpp"

#include <algorithm>

namespace liegraph {

bool Echelon::is_pivot(int column) const {
    return std::find(pivots.begin(), pivots.end(), column) != pivots.end();
}

namespace {

Echelon rref_scan(MatQ m, const std::vector<int>& column_order) {
    const int rows = static_cast<int>(m.rows());
    std::vector<int> pivots;
    int r = 0;
    for (int c : column_order) {
        if (r >= rows) break;
        int p = -1;
        for (int i = r; i < rows; ++i) {
            if (m(i, c) != 0) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        if (p != r) m.row(r).swap(m.row(p));
        const Rational piv = m(r, c);
        m.row(r) /= piv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Rational f = m(i, c);
            m.row(i) -= f * m.row(r);
        }
        pivots.push_back(c);
        ++r;
    }
    Echelon e;
    e.reduced = m.topRows(r);
    e.pivots = pivots;
    return e;
}

}  // namespace

Echelon rref(MatQ m) {
    std::vector<int> order(m.cols());
    for (int c = 0; c < m.cols(); ++c) order[c] = c;
    return rref_scan(std::move(m), order);
}

Echelon rref_last(MatQ m) {
    std::vector<int> order(m.cols());
    for (int c = 0; c < m.cols(); ++c) order[c] = static_cast<int>(m.cols()) - 1 - c;
    return rref_scan(std::move(m), order);
}

void reduce_against(const Echelon& e, VecQ& v) {
    for (int r = 0; r < e.rank(); ++r) {
        const Rational c = v(e.pivots[r]);
        if (c == 0) continue;
        v -= c * e.reduced.row(r).transpose();
    }
}

std::vector<VecQ> kernel_basis(const MatQ& m) {
    const Echelon e = rref(m);
    const int cols = static_cast<int>(m.cols());
    std::vector<bool> pivot(cols, false);
    for (int p : e.pivots) pivot[p] = true;
    std::vector<VecQ> basis;
    for (int f = 0; f < cols; ++f) {
        if (pivot[f]) continue;
        VecQ x = VecQ::Zero(cols);
        x(f) = 1;
        for (int r = 0; r < e.rank(); ++r) x(e.pivots[r]) = -e.reduced(r, f);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<VecQ> solve(const MatQ& a, const VecQ& b) {
    MatQ aug(a.rows(), a.cols() + 1);
    aug.leftCols(a.cols()) = a;
    aug.col(a.cols()) = b;
    const Echelon e = rref(std::move(aug));
    VecQ x = VecQ::Zero(a.cols());
    for (int r = 0; r < e.rank(); ++r) {
        if (e.pivots[r] == a.cols()) return std::nullopt;  // 0 = 1 row
        x(e.pivots[r]) = e.reduced(r, a.cols());
    }
    return x;
}

int rank(const MatQ& m) { return rref(m).rank(); }

}  // namespace liegraph
