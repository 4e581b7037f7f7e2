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

#ifndef LIEGRAPH_LINALG_HPP
#define LIEGRAPH_LINALG_HPP

#include <optional>
#include <vector>

#include "liegraph/rational.hpp"

namespace liegraph {

/// Exact reduced row echelon form.  Every pivot coefficient is 1 and pivot
/// columns are cleared everywhere else, so reducing a vector against the
/// rows is a single pass.
struct Echelon {
    MatQ reduced;             // rank() many rows
    std::vector<int> pivots;  // pivot column of each row, in scan order

    int rank() const { return static_cast<int>(pivots.size()); }
    bool is_pivot(int column) const;
};

/// RREF scanning columns left to right (pivots at the earliest columns).
Echelon rref(MatQ m);

/// RREF scanning columns right to left.  Pivots land on the latest possible
/// columns, so earlier columns survive as free coordinates.
Echelon rref_last(MatQ m);

/// Subtracts the projection onto the row space: afterwards v vanishes on
/// every pivot column of e.
void reduce_against(const Echelon& e, VecQ& v);

/// Canonical basis of the right kernel, one vector per free column.
std::vector<VecQ> kernel_basis(const MatQ& m);

/// Exact solution of a x = b; empty when the system is inconsistent.  Free
/// coordinates are set to zero.
std::optional<VecQ> solve(const MatQ& a, const VecQ& b);

int rank(const MatQ& m);

/// Exact zero test for any matrix expression over Rational.
template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
    for (Eigen::Index c = 0; c < m.cols(); ++c)
        for (Eigen::Index r = 0; r < m.rows(); ++r)
            if (m(r, c) != 0) return false;
    return true;
}

}  // namespace liegraph

#endif  // LIEGRAPH_LINALG_HPP
