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

#include "liegraph/algebra.hpp"

#include <algorithm>

namespace liegraph {

int GradedAlgebra::degree_dim(int d) const {
    if (d < 1 || d > c_) return 0;
    int end = (d == c_) ? dim() : degree_start_.at(d + 1);
    return end - degree_start_.at(d);
}

const Word& GradedAlgebra::basis_word(int i) const {
    auto [d, idx] = word_ref_.at(i);
    return hall_->words(d).at(idx).word;
}

std::vector<int> GradedAlgebra::graded_dimensions() const {
    std::vector<int> dims;
    for (int d = 1; d <= c_; ++d) dims.push_back(degree_dim(d));
    return dims;
}

std::vector<int> GradedAlgebra::lower_central_dimensions() const {
    std::vector<int> dims(c_);
    int acc = 0;
    for (int d = c_; d >= 1; --d) {
        acc += degree_dim(d);
        dims[d - 1] = acc;
    }
    return dims;
}

const SparseVec& GradedAlgebra::structure(int i, int j) const {
    static const SparseVec empty;
    if (i >= j) throw std::logic_error("structure constants are stored for i < j");
    const SparseVec& row = table_.at(i).at(j - i - 1);
    return row.empty() ? empty : row;
}

VecQ GradedAlgebra::bracket(const VecQ& v, const VecQ& w) const {
    VecQ out = VecQ::Zero(dim());
    std::vector<int> vi, wi;
    for (int i = 0; i < dim(); ++i) {
        if (v(i) != 0) vi.push_back(i);
        if (w(i) != 0) wi.push_back(i);
    }
    for (int i : vi) {
        for (int j : wi) {
            if (i == j) continue;
            Rational c = v(i) * w(j);
            const SparseVec& sc = (i < j) ? structure(i, j) : structure(j, i);
            if (i > j) c = -c;
            for (const auto& [t, r] : sc) out(t) += c * r;
        }
    }
    return out;
}

VecQ GradedAlgebra::reduce_to_basis(int degree, VecQ free_coords) const {
    reduce_against(relations_.at(degree), free_coords);
    VecQ out = VecQ::Zero(dim());
    for (int idx = 0; idx < free_coords.size(); ++idx) {
        if (free_coords(idx) == 0) continue;
        int g = global_of_lyndon_.at(degree).at(idx);
        if (g < 0) throw std::logic_error("nonzero coordinate on an eliminated Lyndon word");
        out(g) = free_coords(idx);
    }
    return out;
}

GradedAlgebra build_algebra(const Graph& g, int c, const BuildOptions& opts) {
    if (c < 1) throw ValidationError("nilpotency class must be at least 1");
    const int n = g.vertex_count();
    for (int d = 1; d <= c; ++d) {
        if (witt_dimension(n, d) > opts.max_free_dimension)
            throw BudgetError("free Lie dimension in degree " + std::to_string(d) +
                              " exceeds the configured cap of " +
                              std::to_string(opts.max_free_dimension));
    }

    GradedAlgebra a(g, c);
    a.hall_ = std::make_shared<const HallSet>(n, c);
    const HallSet& hs = *a.hall_;

    // Per-degree relation spans: degree 2 holds the non-edge brackets, each
    // higher degree is the bracket of the vertex span with the previous one.
    a.relations_.resize(c + 1);
    a.survivors_.resize(c + 1);
    a.global_of_lyndon_.resize(c + 1);
    a.relations_[1] = Echelon{MatQ(0, n), {}};
    a.survivors_[1].resize(n);
    for (int v = 0; v < n; ++v) a.survivors_[1][v] = v;

    // Lie elements of the previous degree's relation basis, as envelope
    // polynomials, for building the next degree.
    std::vector<Poly> prev_polys;
    for (int d = 2; d <= c; ++d) {
        const int dim_free = hs.count(d);
        std::vector<VecQ> rows;
        if (d == 2) {
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                    if (g.adjacent(u, v)) continue;
                    Poly p = bracket_poly(Poly{{Word{u}, 1}}, Poly{{Word{v}, 1}});
                    rows.push_back(hs.to_basis(2, std::move(p)));
                }
            }
        } else {
            for (const Poly& rel : prev_polys) {
                for (int v = 0; v < n; ++v) {
                    Poly p = bracket_poly(Poly{{Word{v}, 1}}, rel);
                    rows.push_back(hs.to_basis(d, std::move(p)));
                }
            }
        }
        MatQ m(static_cast<int>(rows.size()), dim_free);
        for (std::size_t r = 0; r < rows.size(); ++r) m.row(r) = rows[r].transpose();
        a.relations_[d] = rref_last(std::move(m));

        for (int idx = 0; idx < dim_free; ++idx)
            if (!a.relations_[d].is_pivot(idx)) a.survivors_[d].push_back(idx);

        prev_polys.clear();
        for (int r = 0; r < a.relations_[d].rank(); ++r) {
            Poly p;
            for (int idx = 0; idx < dim_free; ++idx) {
                const Rational& coef = a.relations_[d].reduced(r, idx);
                if (coef != 0) poly_axpy(p, coef, hs.envelope(d, idx));
            }
            prev_polys.push_back(std::move(p));
        }
    }

    // Global basis: degrees ascending, Lyndon order inside each degree.
    a.degree_start_.assign(c + 1, 0);
    std::vector<std::string> names = g.vertices();
    for (int d = 1; d <= c; ++d) {
        a.degree_start_[d] = static_cast<int>(a.labels_.size());
        a.global_of_lyndon_[d].assign(hs.count(d), -1);
        for (int idx : a.survivors_[d]) {
            a.global_of_lyndon_[d][idx] = static_cast<int>(a.labels_.size());
            a.labels_.push_back(hs.bracket_label(d, idx, names));
            a.degree_of_.push_back(d);
            a.word_ref_.emplace_back(d, idx);
        }
    }

    // Structure constants of all basis pairs within the class bound.
    const int N = a.dim();
    a.table_.resize(N);
    for (int i = 0; i < N; ++i) a.table_[i].resize(N - i - 1);
    for (int i = 0; i < N; ++i) {
        auto [di, wi] = a.word_ref_[i];
        for (int j = i + 1; j < N; ++j) {
            auto [dj, wj] = a.word_ref_[j];
            int d = di + dj;
            if (d > c) continue;
            Poly p = bracket_poly(hs.envelope(di, wi), hs.envelope(dj, wj));
            VecQ coords = a.reduce_to_basis(d, hs.to_basis(d, std::move(p)));
            SparseVec sv;
            for (int t = 0; t < N; ++t)
                if (coords(t) != 0) sv.emplace_back(t, coords(t));
            a.table_[i][j - i - 1] = std::move(sv);
        }
    }
    return a;
}

LinearMap induced_automorphism(const GradedAlgebra& a, const Perm& vertex_perm) {
    if (!is_graph_automorphism(a.graph(), vertex_perm))
        throw ValidationError("vertex permutation is not a graph automorphism");
    const int N = a.dim();
    MatQ m = MatQ::Zero(N, N);
    for (int i = 0; i < N; ++i) {
        int d = a.degree_of(i);
        if (d == 1) {
            m(vertex_perm[a.basis_word(i)[0]], i) = 1;
            continue;
        }
        const int idx = a.hall().index_of(d, a.basis_word(i));
        Poly p = poly_relabel(a.hall().envelope(d, idx), vertex_perm);
        m.col(i) = a.reduce_to_basis(d, a.hall().to_basis(d, std::move(p)));
    }
    return LinearMap{std::move(m), true};
}

LinearMap vertex_diagonal(const GradedAlgebra& a, const std::vector<Rational>& scale) {
    if (static_cast<int>(scale.size()) != a.graph().vertex_count())
        throw ValidationError("one scale value per vertex required");
    for (const Rational& s : scale)
        if (s == 0) throw ValidationError("vertex scale values must be nonzero");
    const int N = a.dim();
    MatQ m = MatQ::Zero(N, N);
    for (int i = 0; i < N; ++i) {
        Rational f(1);
        for (int leaf : a.basis_word(i)) f *= scale[leaf];
        m(i, i) = f;
    }
    return LinearMap{std::move(m), true};
}

std::vector<int> center_projection(const GradedAlgebra& a) {
    const int N = a.dim();
    const int n = a.graph().vertex_count();
    // Stack the adjoint maps of the generators; their common kernel is the
    // centre since the vertices generate.
    MatQ stacked = MatQ::Zero(n * N, N);
    for (int v = 0; v < n; ++v) {
        for (int i = 0; i < N; ++i) {
            if (i == v) continue;
            const SparseVec& sc = (i < v) ? a.structure(i, v) : a.structure(v, i);
            const int sign = (i < v) ? 1 : -1;
            for (const auto& [t, r] : sc) stacked(v * N + t, i) = sign * r;
        }
    }
    std::vector<VecQ> center = kernel_basis(stacked);
    if (center.empty()) return {};
    MatQ proj(static_cast<int>(center.size()), n);
    for (std::size_t r = 0; r < center.size(); ++r)
        proj.row(r) = center[r].head(n).transpose();
    Echelon e = rref(std::move(proj));
    std::vector<int> verts;
    for (int r = 0; r < e.rank(); ++r) {
        for (int v = 0; v < n; ++v) {
            if (e.reduced(r, v) == 0) continue;
            if (v != e.pivots[r] || e.reduced(r, v) != 1)
                throw std::logic_error("centre projection is not spanned by vertices");
        }
        verts.push_back(e.pivots[r]);
    }
    std::sort(verts.begin(), verts.end());
    return verts;
}

}  // namespace liegraph
