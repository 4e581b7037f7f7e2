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

#include "liegraph/descent.hpp"

#include <algorithm>
#include <set>

namespace liegraph {

void validate_datum(const QuotientGraph& q, const DescentDatum& datum) {
    const int k = datum.field.generator_count();
    if (static_cast<int>(datum.images.size()) != k)
        throw ValidationError("need exactly one Galois image per radicand, got " +
                              std::to_string(datum.images.size()) + " for " +
                              std::to_string(k));
    for (const Perm& phi : datum.images) {
        if (!is_quotient_automorphism(q, phi))
            throw ValidationError("image is not an automorphism of the quotient graph");
        if (!is_involution(phi))
            throw ValidationError("image is not an involution");
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (compose(datum.images[i], datum.images[j]) !=
                compose(datum.images[j], datum.images[i]))
                throw ValidationError("images do not commute");
    std::set<Perm> products;
    for (int mask = 0; mask < (1 << k); ++mask) {
        Perm p = identity_perm(q.component_count());
        for (int j = 0; j < k; ++j)
            if ((mask >> j) & 1) p = compose(p, datum.images[j]);
        products.insert(std::move(p));
    }
    if (static_cast<int>(products.size()) != (1 << k))
        throw ValidationError(
            "images generate a subgroup of order below 2^k, so the morphism is "
            "not injective; shrink the field to the fixed field of the kernel");
}

LVec bracket_over(const GradedAlgebra& a, const QuadraticTower& f,
                  const LVec& v, const LVec& w) {
    const int n = a.dim();
    LVec out = MatQ::Zero(n, f.basis_size());
    std::vector<int> vi, wi;
    for (int i = 0; i < n; ++i) {
        if (!is_zero(v.row(i))) vi.push_back(i);
        if (!is_zero(w.row(i))) wi.push_back(i);
    }
    for (int i : vi) {
        for (int j : wi) {
            if (i == j) continue;
            VecQ c = f.multiply(v.row(i).transpose(), w.row(j).transpose());
            const SparseVec& sc = (i < j) ? a.structure(i, j) : a.structure(j, i);
            if (sc.empty()) continue;
            if (i > j) c = -c;
            for (const auto& [t, r] : sc) out.row(t) += r * c.transpose();
        }
    }
    return out;
}

LVec semilinear_apply(const GradedAlgebra& a, const QuotientGraph& q,
                      const DescentDatum& datum, int generator, const LVec& v) {
    if (generator < 0 || generator >= datum.field.generator_count())
        throw ValidationError("generator index out of range");
    const MatQ induced =
        induced_automorphism(a, splitting_lift(q, datum.images.at(generator))).matrix;
    LVec conj = v;
    for (int mask = 0; mask < datum.field.basis_size(); ++mask)
        if ((mask >> generator) & 1) conj.col(mask) = -conj.col(mask);
    return induced * conj;
}

std::vector<int> FormPresentation::graded_dimensions() const {
    std::vector<int> dims(nil_class, 0);
    for (int d : degrees) ++dims.at(d - 1);
    return dims;
}

namespace {

FormPresentation standard_form(const GradedAlgebra& a) {
    FormPresentation form;
    form.nil_class = a.nil_class();
    form.algebra_labels.reserve(a.dim());
    for (int i = 0; i < a.dim(); ++i) form.algebra_labels.push_back(a.label(i));
    form.labels = form.algebra_labels;
    for (int i = 0; i < a.dim(); ++i) {
        form.degrees.push_back(a.degree_of(i));
        LVec v = MatQ::Zero(a.dim(), 1);
        v(i, 0) = 1;
        form.basis.push_back(std::move(v));
    }
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i + 1; j < a.dim(); ++j)
            if (a.degree_of(i) + a.degree_of(j) <= a.nil_class() &&
                !a.structure(i, j).empty())
                form.table[{i, j}] = a.structure(i, j);
    return form;
}

struct SignedTarget {
    int target;
    int sign;  // +1 or -1
};

// The induced map as a signed permutation of basis elements; empty when a
// column is not of that shape.
std::optional<std::vector<SignedTarget>> signed_permutation(const MatQ& m) {
    std::vector<SignedTarget> out;
    for (int c = 0; c < m.cols(); ++c) {
        SignedTarget st{-1, 0};
        for (int r = 0; r < m.rows(); ++r) {
            if (m(r, c) == 0) continue;
            if (st.target >= 0) return std::nullopt;
            if (m(r, c) == 1)
                st = {r, 1};
            else if (m(r, c) == -1)
                st = {r, -1};
            else
                return std::nullopt;
        }
        if (st.target < 0) return std::nullopt;
        out.push_back(st);
    }
    return out;
}

std::string group_letter(int group) {
    static const char* pool[] = {"X", "Y", "U", "V", "W", "S", "T", "P", "Q", "R"};
    if (group < 10) return pool[group];
    return "V" + std::to_string(group + 1) + "_";
}

}  // namespace

FormPresentation compute_fixed_form(const GradedAlgebra& a, const QuotientGraph& q,
                                    const DescentDatum& datum, FormMode mode) {
    validate_datum(q, datum);
    const QuadraticTower& f = datum.field;
    const int k = f.generator_count();
    if (k == 0) return standard_form(a);

    const int K = f.basis_size();
    const int N = a.dim();
    const int c = a.nil_class();

    std::vector<MatQ> induced;
    induced.reserve(k);
    for (const Perm& phi : datum.images)
        induced.push_back(induced_automorphism(a, splitting_lift(q, phi)).matrix);

    FormPresentation form;
    form.radicands = f.radicands();
    form.images = datum.images;
    form.nil_class = c;
    for (int i = 0; i < N; ++i) form.algebra_labels.push_back(a.label(i));

    if (mode == FormMode::paper_basis) {
        if (k != 1)
            throw ValidationError("paper-basis mode needs a single quadratic generator");
        auto sp = signed_permutation(induced[0]);
        if (!sp)
            throw ValidationError(
                "the induced map does not permute the basis up to sign; "
                "use echelon mode for this graph");
        int z_counter = 0;
        int letter_group = 0;
        for (int d = 1; d <= c; ++d) {
            const int start = a.degree_start(d);
            const int nd = a.degree_dim(d);
            std::vector<int> fixed, antifixed;
            std::vector<std::pair<int, int>> pairs;  // (i, epsilon applies to target)
            std::vector<bool> consumed(nd, false);
            for (int l = 0; l < nd; ++l) {
                if (consumed[l]) continue;
                int i = start + l;
                const SignedTarget st = (*sp)[i];
                if (st.target == i) {
                    (st.sign == 1 ? fixed : antifixed).push_back(i);
                    continue;
                }
                if (a.degree_of(st.target) != d)
                    throw std::logic_error("induced map is not graded");
                consumed[st.target - start] = true;
                pairs.emplace_back(i, st.sign);
            }
            auto emit = [&](LVec v, int degree) {
                std::string label;
                if (degree == 1) {
                    label = group_letter(letter_group) + "1";
                } else {
                    label = "Z" + std::to_string(++z_counter);
                }
                form.labels.push_back(label);
                form.degrees.push_back(degree);
                form.basis.push_back(std::move(v));
            };
            for (auto [i, eps] : pairs) {
                const int t = (*sp)[i].target;
                // a pair of words crossing coherent components takes the
                // opposite orientation on its plain sum
                std::set<int> comps;
                for (int leaf : a.basis_word(i)) comps.insert(q.component_of(leaf));
                const int s = (d >= 2 && comps.size() > 1) ? -1 : 1;
                LVec sum = MatQ::Zero(N, K);
                sum(i, 0) = s;
                sum(t, 0) = s * eps;
                LVec diff = MatQ::Zero(N, K);
                diff(i, 1) = 1;
                diff(t, 1) = -eps;
                if (d == 1) {
                    form.labels.push_back(group_letter(letter_group) + "1");
                    form.degrees.push_back(1);
                    form.basis.push_back(std::move(sum));
                    form.labels.push_back(group_letter(letter_group) + "2");
                    form.degrees.push_back(1);
                    form.basis.push_back(std::move(diff));
                    ++letter_group;
                } else {
                    form.labels.push_back("Z" + std::to_string(++z_counter));
                    form.degrees.push_back(d);
                    form.basis.push_back(std::move(sum));
                    form.labels.push_back("Z" + std::to_string(++z_counter));
                    form.degrees.push_back(d);
                    form.basis.push_back(std::move(diff));
                }
            }
            for (int i : fixed) {
                LVec v = MatQ::Zero(N, K);
                v(i, 0) = 1;
                emit(std::move(v), d);
                if (d == 1) ++letter_group;
            }
            for (int i : antifixed) {
                LVec v = MatQ::Zero(N, K);
                v(i, 1) = -2;
                emit(std::move(v), d);
                if (d == 1) ++letter_group;
            }
        }
    } else {
        // Per degree and per radical mask the fixed-point conditions
        // decouple: a column vector x must satisfy (s A_j - I) x = 0 for
        // every generator j, with s the sign of the mask under sigma_j.
        for (int d = 1; d <= c; ++d) {
            const int start = a.degree_start(d);
            const int nd = a.degree_dim(d);
            if (nd == 0) continue;
            int emitted = 0;
            for (int mask = 0; mask < K; ++mask) {
                MatQ stacked(k * nd, nd);
                for (int j = 0; j < k; ++j) {
                    const int s = ((mask >> j) & 1) ? -1 : 1;
                    stacked.middleRows(j * nd, nd) =
                        s * induced[j].block(start, start, nd, nd) -
                        MatQ::Identity(nd, nd);
                }
                for (const VecQ& x : kernel_basis(stacked)) {
                    LVec v = MatQ::Zero(N, K);
                    for (int r = 0; r < nd; ++r) v(start + r, mask) = x(r);
                    form.labels.push_back("v" + std::to_string(form.dim() + 1));
                    form.degrees.push_back(d);
                    form.basis.push_back(std::move(v));
                    ++emitted;
                }
            }
            if (emitted != nd)
                throw std::logic_error("fixed-point space has the wrong dimension");
        }
    }

    if (form.dim() != N)
        throw std::logic_error("fixed-point space has the wrong dimension");

    // every emitted vector must actually be fixed by all semilinear steps
    for (const LVec& v : form.basis) {
        for (int j = 0; j < k; ++j) {
            LVec conj = v;
            for (int mask = 0; mask < K; ++mask)
                if ((mask >> j) & 1) conj.col(mask) = -conj.col(mask);
            if (!is_zero((induced[j] * conj - v).eval()))
                throw std::logic_error("presentation vector is not Galois-fixed");
        }
    }

    // Bracket table over the form basis; every bracket must solve exactly
    // with rational coefficients.
    std::vector<std::vector<int>> per_degree(c + 1);
    for (int i = 0; i < form.dim(); ++i) per_degree[form.degrees[i]].push_back(i);
    for (int x = 0; x < form.dim(); ++x) {
        for (int y = x + 1; y < form.dim(); ++y) {
            const int d = form.degrees[x] + form.degrees[y];
            if (d > c) continue;
            LVec w = bracket_over(a, f, form.basis[x], form.basis[y]);
            if (is_zero(w)) continue;
            const auto& cols = per_degree[d];
            const int start = a.degree_start(d);
            const int nd = a.degree_dim(d);
            MatQ b(nd * K, static_cast<int>(cols.size()));
            for (std::size_t t = 0; t < cols.size(); ++t)
                for (int mask = 0; mask < K; ++mask)
                    b.block(mask * nd, t, nd, 1) =
                        form.basis[cols[t]].block(start, mask, nd, 1);
            VecQ rhs(nd * K);
            for (int mask = 0; mask < K; ++mask)
                rhs.segment(mask * nd, nd) = w.block(start, mask, nd, 1);
            auto sol = solve(b, rhs);
            if (!sol || !is_zero((b * *sol - rhs).eval()))
                throw std::logic_error("form basis is not closed under the bracket");
            SparseVec sv;
            for (std::size_t t = 0; t < cols.size(); ++t)
                if ((*sol)(t) != 0) sv.emplace_back(cols[t], (*sol)(t));
            if (!sv.empty()) form.table[{x, y}] = std::move(sv);
        }
    }
    return form;
}

std::vector<std::pair<Perm, FormPresentation>> enumerate_real_forms(
    const Graph& g, int c, const AutSearchOptions& aopts, const BuildOptions& bopts) {
    QuotientGraph q(g);
    FiniteGroup aut = quotient_automorphisms(q, aopts);
    GradedAlgebra a = build_algebra(g, c, bopts);
    std::vector<std::pair<Perm, FormPresentation>> out;
    for (const Perm& rep : involution_class_representatives(aut)) {
        DescentDatum datum = is_identity(rep)
                                 ? DescentDatum{QuadraticTower({}), {}}
                                 : DescentDatum{QuadraticTower({-1}), {rep}};
        out.emplace_back(rep, compute_fixed_form(a, q, datum, FormMode::echelon));
    }
    return out;
}

RationalFormCount rational_form_count(const Graph& g, const AutSearchOptions& aopts) {
    return quotient_automorphisms(QuotientGraph(g), aopts).order() == 1
               ? RationalFormCount::one
               : RationalFormCount::infinite;
}

namespace {

// Images of the canonical sign-flip generators: generator i flips the sign
// of exactly the i-th canonical radical, which as an automorphism of the
// presented field multiplies out to the product of the presentation's
// flips at every radicand containing that radical.
std::vector<Perm> canonical_images(const QuotientGraph& q, const DescentDatum& datum) {
    const auto gens = datum.field.canonical_generators();
    std::vector<Perm> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        Perm p = identity_perm(q.component_count());
        for (std::size_t j = 0; j < datum.field.radicands().size(); ++j) {
            const int mask = datum.field.canonical_mask(datum.field.radicands()[j]);
            if ((mask >> i) & 1) p = compose(p, datum.images[j]);
        }
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

ClassifiedData classify_rational_data(const Graph& g,
                                      const std::vector<DescentDatum>& data,
                                      const AutSearchOptions& aopts) {
    QuotientGraph q(g);
    FiniteGroup aut = quotient_automorphisms(q, aopts);
    for (const DescentDatum& d : data) validate_datum(q, d);

    struct ClassInfo {
        std::vector<long long> field_key;
        std::vector<Perm> images;
        std::vector<int> members;
        bool real = false;
    };
    std::vector<ClassInfo> classes;
    for (std::size_t i = 0; i < data.size(); ++i) {
        const auto key = data[i].field.closure_values();
        const auto imgs = canonical_images(q, data[i]);
        bool placed = false;
        for (ClassInfo& cls : classes) {
            if (cls.field_key != key) continue;
            if (!conjugate_data(aut, cls.images, imgs)) continue;
            cls.members.push_back(static_cast<int>(i));
            placed = true;
            break;
        }
        if (!placed)
            classes.push_back(ClassInfo{key, imgs, {static_cast<int>(i)},
                                        data[i].field.is_real()});
    }
    ClassifiedData out;
    for (const ClassInfo& cls : classes) {
        out.classes.push_back(cls.members);
        out.real_descending.push_back(cls.real);
    }
    return out;
}

bool is_indecomposable(const Graph& g, const DescentDatum& datum,
                       const AutSearchOptions& aopts) {
    (void)aopts;
    QuotientGraph q(g);
    validate_datum(q, datum);
    const auto connected = g.connected_components();
    const int m = static_cast<int>(connected.size());
    std::vector<Perm> gens;
    for (const Perm& phi : datum.images)
        gens.push_back(chi_action(g, q, connected, phi));
    std::vector<bool> seen(m, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const Perm& p : gens) {
            if (!seen[p[v]]) {
                seen[p[v]] = true;
                ++count;
                stack.push_back(p[v]);
            }
        }
    }
    return count == m;
}

}  // namespace liegraph
