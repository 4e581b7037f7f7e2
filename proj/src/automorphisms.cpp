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

#include "liegraph/automorphisms.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_set>

namespace liegraph {

Perm identity_perm(int n) {
    Perm p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return p;
}

Perm compose(const Perm& f, const Perm& g) {
    assert(f.size() == g.size());
    Perm out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[g[i]];
    return out;
}

Perm inverse(const Perm& f) {
    Perm out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[f[i]] = static_cast<int>(i);
    return out;
}

bool is_identity(const Perm& f) {
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i] != static_cast<int>(i)) return false;
    return true;
}

bool is_involution(const Perm& f) {
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[f[i]] != static_cast<int>(i)) return false;
    return true;
}

std::string cycle_string(const Perm& f) {
    const int n = static_cast<int>(f.size());
    std::ostringstream out;
    std::vector<bool> seen(n, false);
    bool any = false;
    for (int start = 0; start < n; ++start) {
        if (seen[start] || f[start] == start) continue;
        out << '(';
        int v = start;
        bool first = true;
        do {
            seen[v] = true;
            if (!first) out << ' ';
            out << (v + 1);
            first = false;
            v = f[v];
        } while (v != start);
        out << ')';
        any = true;
    }
    return any ? out.str() : "()";
}

Perm parse_cycles(const std::string& text, int n) {
    Perm p = identity_perm(n);
    std::vector<bool> used(n, false);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    bool any = false;
    while (i < text.size()) {
        if (text[i] != '(')
            throw ValidationError("malformed cycle notation '" + text + "'");
        ++i;
        std::vector<int> cycle;
        for (;;) {
            skip_ws();
            if (i < text.size() && text[i] == ')') {
                ++i;
                break;
            }
            std::size_t j = i;
            while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])))) ++j;
            if (j == i)
                throw ValidationError("malformed cycle notation '" + text + "'");
            int v = std::stoi(text.substr(i, j - i)) - 1;
            if (v < 0 || v >= n)
                throw ValidationError("cycle index " + std::to_string(v + 1) +
                                      " out of range 1.." + std::to_string(n));
            if (used[v])
                throw ValidationError("cycles are not disjoint in '" + text + "'");
            used[v] = true;
            cycle.push_back(v);
            i = j;
            if (i < text.size() && text[i] == ',') ++i;
        }
        for (std::size_t t = 0; t < cycle.size(); ++t)
            p[cycle[t]] = cycle[(t + 1) % cycle.size()];
        any = true;
        skip_ws();
    }
    if (!any)
        throw ValidationError("malformed cycle notation '" + text + "'");
    return p;
}

FiniteGroup::FiniteGroup(int degree, std::vector<Perm> elements)
    : degree_(degree), elements_(std::move(elements)) {
    if (elements_.empty())
        throw ValidationError("group needs at least the identity");
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    id_ = identity_perm(degree_);
    bool has_id = false;
    for (const Perm& p : elements_) {
        if (static_cast<int>(p.size()) != degree_)
            throw ValidationError("group element of wrong degree");
        if (p == id_) has_id = true;
    }
    if (!has_id) throw ValidationError("group is missing the identity");
    for (const Perm& p : elements_) {
        if (!contains(inverse(p)))
            throw ValidationError("group is missing an inverse");
    }
}

bool FiniteGroup::contains(const Perm& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
}

namespace {

struct PermHash {
    std::size_t operator()(const Perm& p) const {
        std::size_t h = 1469598103934665603ull;
        for (int v : p) {
            h ^= static_cast<std::size_t>(v);
            h *= 1099511628211ull;
        }
        return h;
    }
};

std::vector<Perm> closure_elements(int degree, const std::vector<Perm>& generators,
                                   const std::vector<Perm>& seed) {
    std::unordered_set<Perm, PermHash> seen(seed.begin(), seed.end());
    std::vector<Perm> frontier(seed.begin(), seed.end());
    Perm id = identity_perm(degree);
    if (!seen.count(id)) {
        seen.insert(id);
        frontier.push_back(id);
    }
    while (!frontier.empty()) {
        Perm e = std::move(frontier.back());
        frontier.pop_back();
        for (const Perm& g : generators) {
            Perm h = compose(g, e);
            if (seen.insert(h).second) frontier.push_back(h);
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace

FiniteGroup FiniteGroup::closure(int degree, const std::vector<Perm>& generators) {
    return FiniteGroup(degree, closure_elements(degree, generators, {}));
}

FiniteGroup FiniteGroup::symmetric(int n) {
    std::vector<Perm> all;
    Perm p = identity_perm(n);
    do {
        all.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return FiniteGroup(n, std::move(all));
}

std::vector<Perm> FiniteGroup::small_generating_set() const {
    std::vector<Perm> gens;
    std::unordered_set<Perm, PermHash> have;
    have.insert(id_);
    while (have.size() < order()) {
        // least element not yet generated
        const Perm* next = nullptr;
        for (const Perm& p : elements_) {
            if (!have.count(p)) {
                next = &p;
                break;
            }
        }
        gens.push_back(*next);
        std::vector<Perm> seed(have.begin(), have.end());
        auto closed = closure_elements(degree_, gens, seed);
        have = std::unordered_set<Perm, PermHash>(closed.begin(), closed.end());
    }
    return gens;
}

namespace {

// Shared backtracking core.  `adjacent` must be symmetric; `signature`
// prunes candidate images (equal signatures are necessary for any
// automorphism).  Self-adjacency (loops) is handled by the u == v check.
template <typename AdjFn>
std::vector<Perm> search_automorphisms(int n, AdjFn adjacent,
                                       const std::vector<std::string>& signature) {
    std::vector<Perm> found;
    Perm image(n, -1);
    std::vector<bool> used(n, false);

    auto consistent = [&](int v, int w) {
        for (int u = 0; u <= v; ++u) {
            if (image[u] < 0) continue;
            if (adjacent(v, u) != adjacent(w, image[u])) return false;
        }
        return true;
    };

    std::vector<int> stack;
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            found.push_back(image);
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w] || signature[v] != signature[w]) continue;
            image[v] = w;
            if (consistent(v, w)) {
                used[w] = true;
                self(self, v + 1);
                used[w] = false;
            }
            image[v] = -1;
        }
    };
    rec(rec, 0);
    std::sort(found.begin(), found.end());
    return found;
}

std::string degree_signature(int n, const std::vector<int>& degrees, int v,
                             const std::function<bool(int, int)>& adjacent) {
    std::vector<int> nbr;
    for (int u = 0; u < n; ++u)
        if (u != v && adjacent(v, u)) nbr.push_back(degrees[u]);
    std::sort(nbr.begin(), nbr.end());
    std::ostringstream out;
    out << degrees[v] << ':';
    for (int d : nbr) out << d << ',';
    return out.str();
}

}  // namespace

FiniteGroup graph_automorphisms(const Graph& g, const AutSearchOptions& opts) {
    const int n = g.vertex_count();
    if (n > opts.max_vertices)
        throw BudgetError("graph has " + std::to_string(n) +
                          " vertices, automorphism bound is " +
                          std::to_string(opts.max_vertices));
    std::function<bool(int, int)> adj = [&](int u, int v) { return g.adjacent(u, v); };
    std::vector<int> degs(n);
    for (int v = 0; v < n; ++v) degs[v] = g.degree(v);
    std::vector<std::string> sig(n);
    for (int v = 0; v < n; ++v) sig[v] = degree_signature(n, degs, v, adj);
    return FiniteGroup(n, search_automorphisms(n, adj, sig));
}

FiniteGroup quotient_automorphisms(const QuotientGraph& q,
                                   const AutSearchOptions& opts) {
    const int n = q.component_count();
    if (n > opts.max_vertices)
        throw BudgetError("quotient graph has " + std::to_string(n) +
                          " components, automorphism bound is " +
                          std::to_string(opts.max_vertices));
    std::function<bool(int, int)> adj = [&](int u, int v) { return q.adjacent(u, v); };
    std::vector<int> degs(n);
    for (int v = 0; v < n; ++v) {
        int d = 0;
        for (int u = 0; u < n; ++u)
            if (u != v && q.adjacent(v, u)) ++d;
        degs[v] = d;
    }
    std::vector<std::string> sig(n);
    for (int v = 0; v < n; ++v) {
        std::ostringstream s;
        s << 'w' << q.weight(v) << 'l' << (q.has_loop(v) ? 1 : 0) << ';'
          << degree_signature(n, degs, v, adj);
        sig[v] = s.str();
    }
    return FiniteGroup(n, search_automorphisms(n, adj, sig));
}

bool is_graph_automorphism(const Graph& g, const Perm& p) {
    const int n = g.vertex_count();
    if (static_cast<int>(p.size()) != n) return false;
    std::vector<bool> used(n, false);
    for (int v : p) {
        if (v < 0 || v >= n || used[v]) return false;
        used[v] = true;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) != g.adjacent(p[u], p[v])) return false;
    return true;
}

bool is_quotient_automorphism(const QuotientGraph& q, const Perm& p) {
    const int n = q.component_count();
    if (static_cast<int>(p.size()) != n) return false;
    std::vector<bool> used(n, false);
    for (int v : p) {
        if (v < 0 || v >= n || used[v]) return false;
        used[v] = true;
    }
    for (int u = 0; u < n; ++u) {
        if (q.weight(u) != q.weight(p[u])) return false;
        for (int v = u; v < n; ++v)
            if (q.adjacent(u, v) != q.adjacent(p[u], p[v])) return false;
    }
    return true;
}

Perm splitting_lift(const QuotientGraph& q, const Perm& phi) {
    if (static_cast<int>(phi.size()) != q.component_count())
        throw ValidationError("quotient permutation has wrong degree");
    Perm out(q.source_vertex_count(), -1);
    for (int c = 0; c < q.component_count(); ++c) {
        const auto& src = q.components()[c];
        const auto& dst = q.components()[phi[c]];
        if (src.size() != dst.size())
            throw ValidationError("quotient permutation does not preserve weights");
        for (std::size_t i = 0; i < src.size(); ++i) out[src[i]] = dst[i];
    }
    return out;
}

Perm project_automorphism(const QuotientGraph& q, const Perm& theta) {
    Perm out(q.component_count(), -1);
    for (int c = 0; c < q.component_count(); ++c) {
        const auto& verts = q.components()[c];
        int target = q.component_of(theta.at(verts[0]));
        for (int v : verts) {
            if (q.component_of(theta.at(v)) != target)
                throw std::logic_error("vertex permutation does not respect coherent components");
        }
        out[c] = target;
    }
    return out;
}

std::vector<Perm> involution_class_representatives(const FiniteGroup& g) {
    std::vector<Perm> involutions;
    for (const Perm& p : g.elements())
        if (is_involution(p)) involutions.push_back(p);

    const std::vector<Perm> gens = g.small_generating_set();
    std::vector<Perm> gen_inv;
    gen_inv.reserve(gens.size());
    for (const Perm& p : gens) gen_inv.push_back(inverse(p));

    std::vector<Perm> reps;
    std::set<Perm> visited;
    for (const Perm& x : involutions) {  // sorted, so first hit is the least
        if (visited.count(x)) continue;
        reps.push_back(x);
        std::vector<Perm> frontier{x};
        visited.insert(x);
        while (!frontier.empty()) {
            Perm e = std::move(frontier.back());
            frontier.pop_back();
            for (std::size_t i = 0; i < gens.size(); ++i) {
                Perm c = compose(gens[i], compose(e, gen_inv[i]));
                if (visited.insert(c).second) frontier.push_back(std::move(c));
            }
        }
    }
    return reps;
}

bool conjugate_data(const FiniteGroup& g, const std::vector<Perm>& rho,
                    const std::vector<Perm>& eta) {
    if (rho.size() != eta.size())
        throw ValidationError("generator image lists differ in length");
    for (const Perm& phi : g.elements()) {
        Perm phi_inv = inverse(phi);
        bool ok = true;
        for (std::size_t i = 0; i < rho.size() && ok; ++i)
            ok = compose(phi, compose(rho[i], phi_inv)) == eta[i];
        if (ok) return true;
    }
    return false;
}

Perm chi_action(const Graph& g, const QuotientGraph& q,
                const std::vector<std::vector<int>>& connected,
                const Perm& phi) {
    const int m = static_cast<int>(connected.size());
    std::vector<int> connected_of(g.vertex_count(), -1);
    for (int c = 0; c < m; ++c)
        for (int v : connected[c]) connected_of[v] = c;

    Perm out(m, -1);
    for (int c = 0; c < m; ++c) {
        if (connected[c].size() == 1) {
            out[c] = c;
            continue;
        }
        std::set<int> pieces;
        for (int v : connected[c]) pieces.insert(q.component_of(v));
        int target = -1;
        for (int lam : pieces) {
            for (int v : q.components()[phi.at(lam)]) {
                if (target < 0) target = connected_of[v];
                if (connected_of[v] != target)
                    throw std::logic_error("quotient automorphism splits a connected component");
            }
        }
        out[c] = target;
    }
    std::vector<bool> used(m, false);
    for (int v : out) {
        if (v < 0 || used[v])
            throw std::logic_error("chi action is not a permutation");
        used[v] = true;
    }
    return out;
}

AutDescription describe_linear_group(const Graph& g, const AutSearchOptions& opts) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && g.precedes(u, v) && !g.precedes(v, u))
                pairs.emplace_back(u, v);

    QuotientGraph q(g);
    std::vector<int> blocks;
    long long reductive = 0;
    for (int c = 0; c < q.component_count(); ++c) {
        blocks.push_back(q.weight(c));
        reductive += static_cast<long long>(q.weight(c)) * q.weight(c);
    }
    AutDescription d{std::move(pairs), std::move(blocks),
                     quotient_automorphisms(q, opts), reductive, 0};
    d.dim_unipotent = static_cast<long long>(d.m_pairs.size());
    return d;
}

bool transpositions_generate(const Graph& g, const AutSearchOptions& opts) {
    return quotient_automorphisms(QuotientGraph(g), opts).order() == 1;
}

}  // namespace liegraph
