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

// End-to-end acceptance suite.  Each criterion prints exactly one line and
// carries a hard wall-clock budget; any failure or overrun fails the run.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "liegraph/checks.hpp"
#include "liegraph/descent.hpp"
#include "liegraph/report.hpp"
#include "oracles.hpp"

using namespace liegraph;
using Clock = std::chrono::steady_clock;

namespace {

std::string g_cli;
int g_failures = 0;

void report(const std::string& name, bool ok, double seconds, double budget,
            const std::string& detail = "") {
    const bool in_budget = seconds < budget;
    std::printf("[%s] %-28s %6.2f s (budget %g s)%s%s\n",
                ok && in_budget ? "PASS" : "FAIL", name.c_str(), seconds, budget,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok || !in_budget) ++g_failures;
}

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = "'" + g_cli + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {127, ""};
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    return {WEXITSTATUS(pclose(pipe)), out};
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

std::set<std::string> bracket_section(const std::string& output) {
    std::set<std::string> lines;
    std::istringstream in(output);
    std::string line;
    bool active = false;
    while (std::getline(in, line)) {
        if (line == "brackets:") {
            active = true;
            continue;
        }
        if (!active) continue;
        if (line.empty() || line[0] != ' ') break;
        lines.insert(line.substr(2));
    }
    return lines;
}

// ---- criteria --------------------------------------------------------------

void criterion_twisted_pair_tables() {
    auto t0 = Clock::now();
    write_file("acc_pair.graph", "a1 b1\na2 b2\n");
    bool ok = true;
    std::string detail;
    double worst = 0;
    for (long long d : {-1LL, 2LL, 3LL, 5LL}) {
        auto s0 = Clock::now();
        RunResult r = run_cli("form --input acc_pair.graph --class 2 --d " +
                              std::to_string(d) + " --image '(1 2)' --paper-basis");
        worst = std::max(worst, std::chrono::duration<double>(Clock::now() - s0).count());
        std::string dz1 = (d == -1 ? "-Z1" : std::to_string(d) + " Z1");
        std::set<std::string> expected{"[X1, Y1] = Z1", "[X1, Y2] = Z2",
                                       "[X2, Y1] = Z2", "[X2, Y2] = " + dz1};
        if (r.exit_code != 0 || bracket_section(r.output) != expected) {
            ok = false;
            detail = "table mismatch at d = " + std::to_string(d);
        }
    }
    if (ok && worst >= 1.0) {
        ok = false;
        detail = "a single invocation exceeded 1 s";
    }
    report("twisted-pair-tables", ok,
           std::chrono::duration<double>(Clock::now() - t0).count(), 4.0, detail);
}

void criterion_complement_table() {
    auto t0 = Clock::now();
    write_file("acc_complement.graph",
               "vertex a1\nvertex b1\nvertex a2\nvertex b2\n"
               "a1 a2\na1 b2\na2 b1\nb1 b2\n");
    RunResult r = run_cli(
        "form --input acc_complement.graph --class 2 --d -1 --image '(1 2)' "
        "--paper-basis");
    std::set<std::string> expected{"[X1, X2] = Z3", "[X1, Y1] = -Z1",
                                   "[X1, Y2] = -Z2", "[X2, Y1] = Z2",
                                   "[X2, Y2] = -Z1", "[Y1, Y2] = Z4"};
    bool ok = r.exit_code == 0 && bracket_section(r.output) == expected;
    report("complement-table", ok,
           std::chrono::duration<double>(Clock::now() - t0).count(), 1.0);
}

void criterion_real_form_counts() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    double worst = 0;
    AutSearchOptions wide{16};
    for (int n = 2; n <= 6 && ok; ++n) {
        for (bool spider : {false, true}) {
            Graph g = spider ? oracles::make_spider(n) : oracles::make_matching(n);
            auto s0 = Clock::now();
            std::size_t count = enumerate_real_forms(g, 2, wide).size();
            worst = std::max(worst,
                             std::chrono::duration<double>(Clock::now() - s0).count());
            if (count != static_cast<std::size_t>(n / 2 + 1)) {
                ok = false;
                detail = (spider ? std::string("spider ") : std::string("matching ")) +
                         std::to_string(n) + " gave " + std::to_string(count);
            }
        }
    }
    if (ok && worst >= 5.0) {
        ok = false;
        detail = "a single family member exceeded 5 s";
    }
    report("real-form-counts", ok,
           std::chrono::duration<double>(Clock::now() - t0).count(), 50.0, detail);
}

void criterion_one_vs_infinite() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    double worst = 0;
    auto expect = [&](const Graph& g, RationalFormCount want, const std::string& name) {
        auto s0 = Clock::now();
        if (rational_form_count(g, AutSearchOptions{16}) != want) {
            ok = false;
            detail = name;
        }
        worst = std::max(worst, std::chrono::duration<double>(Clock::now() - s0).count());
    };
    for (int p : {0, 1, 2})
        for (int q : {2, 3})
            expect(oracles::make_magnet(p, q), RationalFormCount::one,
                   "magnet(" + std::to_string(p) + "," + std::to_string(q) + ")");
    for (int n = 2; n <= 5; ++n)
        expect(oracles::make_complete(n), RationalFormCount::one,
               "complete " + std::to_string(n));
    expect(oracles::make_cycle(4), RationalFormCount::infinite, "4-cycle");
    for (int n = 2; n <= 6; ++n)
        expect(oracles::make_matching(n), RationalFormCount::infinite,
               "matching " + std::to_string(n));
    if (ok && worst >= 1.0) {
        ok = false;
        detail = "a single graph exceeded 1 s";
    }
    report("one-vs-infinite", ok,
           std::chrono::duration<double>(Clock::now() - t0).count(), 17.0, detail);
}

void criterion_jacobi_grading_corpus() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;

    std::vector<Graph> corpus = oracles::representatives_up_to(5);
    if (corpus.size() != 52) {
        ok = false;
        detail = "expected 52 representatives on up to 5 vertices";
    }
    std::vector<Graph> six;
    for (Graph& g : oracles::representatives(6))
        if (oracles::is_connected(g)) six.push_back(std::move(g));
    if (six.size() != 112) {
        ok = false;
        detail = "expected 112 connected representatives on 6 vertices";
    }
    for (Graph& g : six) corpus.push_back(std::move(g));

    for (const Graph& g : corpus) {
        if (!ok) break;
        for (int c : {2, 3}) {
            GradedAlgebra a = build_algebra(g, c);
            if (a.degree_dim(2) != g.edge_count()) {
                ok = false;
                detail = "degree-2 dimension mismatch";
                break;
            }
            // the class bound truncates every overflow bracket
            for (int i = 0; i < a.dim(); ++i)
                for (int j = i + 1; j < a.dim(); ++j)
                    if (a.degree_of(i) + a.degree_of(j) > c &&
                        !a.structure(i, j).empty()) {
                        ok = false;
                        detail = "bracket escapes the nilpotency class";
                    }
            CheckResult jac = check_table_jacobi(algebra_table(a));
            if (!jac.passed) {
                ok = false;
                detail = jac.detail;
                break;
            }
        }
    }
    report("jacobi-grading-corpus", ok,
           std::chrono::duration<double>(Clock::now() - t0).count(), 60.0, detail);
}

void criterion_witt_oracle() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    for (int n = 2; n <= 4 && ok; ++n) {
        for (int c = 2; c <= 4 && ok; ++c) {
            GradedAlgebra a = build_algebra(oracles::make_complete(n), c);
            for (int d = 1; d <= c; ++d) {
                int oracle = oracles::brute_force_free_rank(n, d);
                if (a.degree_dim(d) != oracle ||
                    a.degree_dim(d) != witt_dimension(n, d)) {
                    ok = false;
                    detail = "free dimensions diverge at n=" + std::to_string(n) +
                             " degree " + std::to_string(d);
                }
            }
        }
    }
    report("witt-oracle", ok,
           std::chrono::duration<double>(Clock::now() - t0).count(), 30.0, detail);
}

void criterion_descent_properties() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    std::mt19937 rng(424243);
    auto corpus = oracles::representatives_up_to(5);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(corpus.size()) - 1);
    std::uniform_int_distribution<long long> rad(-30, 30);
    int done = 0;
    while (done < 20 && ok) {
        const Graph& g = corpus[pick(rng)];
        QuotientGraph q(g);
        FiniteGroup aut = quotient_automorphisms(q);
        std::vector<Perm> involutions;
        for (const Perm& p : aut.elements())
            if (is_involution(p) && !is_identity(p)) involutions.push_back(p);

        // k up to 2 as far as the symmetry allows; pairs of commuting
        // independent involutions first, then single ones, then trivial
        DescentDatum datum{QuadraticTower({}), {}};
        int want_k = static_cast<int>(rng() % 3);
        auto random_radicand = [&]() -> long long {
            for (;;) {
                long long d = squarefree_part(rad(rng));
                if (d != 0 && d != 1) return d;
            }
        };
        if (want_k == 2) {
            bool found = false;
            for (std::size_t i = 0; i < involutions.size() && !found; ++i)
                for (std::size_t j = i + 1; j < involutions.size() && !found; ++j) {
                    const Perm &a = involutions[i], &b = involutions[j];
                    if (compose(a, b) != compose(b, a) || compose(a, b) == identity_perm(a.size()))
                        continue;
                    long long d1 = random_radicand();
                    long long d2 = random_radicand();
                    if (d1 == d2 || squarefree_part(d1 * d2) == 1) continue;
                    datum = DescentDatum{QuadraticTower({d1, d2}), {a, b}};
                    found = true;
                }
            if (!found) want_k = involutions.empty() ? 0 : 1;
        }
        if (want_k == 1) {
            if (involutions.empty()) continue;
            datum = DescentDatum{QuadraticTower({random_radicand()}),
                                 {involutions[rng() % involutions.size()]}};
        }
        int c = 2 + static_cast<int>(rng() % 2);
        GradedAlgebra a = build_algebra(g, c);
        FormPresentation form = compute_fixed_form(a, q, datum, FormMode::echelon);
        if (form.dim() != a.dim() ||
            form.graded_dimensions() != a.graded_dimensions()) {
            ok = false;
            detail = "fixed-point dimension mismatch";
            break;
        }
        AlgebraTable t;
        t.basis.resize(form.nil_class);
        for (int i = 0; i < form.dim(); ++i)
            t.basis[form.degrees[i] - 1].push_back(form.labels[i]);
        t.brackets = form.table;
        for (const CheckResult& r : run_table_checks(t)) {
            if (!r.passed) {
                ok = false;
                detail = r.name + ": " + r.detail;
            }
        }
        ++done;
    }
    report("descent-properties", ok,
           std::chrono::duration<double>(Clock::now() - t0).count(), 60.0, detail);
}

void criterion_classification() {
    auto t0 = Clock::now();
    Graph g = oracles::make_matching(2);
    Perm swap{1, 0};
    std::vector<DescentDatum> data;
    data.push_back({QuadraticTower({2}), {swap}});
    data.push_back({QuadraticTower({3}), {swap}});
    data.push_back({QuadraticTower({2}), {swap}});
    data.push_back({QuadraticTower({-1}), {swap}});
    ClassifiedData out = classify_rational_data(g, data);
    bool ok = out.classes.size() == 3 &&
              out.classes[0] == std::vector<int>{0, 2} &&
              out.real_descending == std::vector<bool>{true, true, false};
    report("rational-classification", ok,
           std::chrono::duration<double>(Clock::now() - t0).count(), 1.0);
}

void criterion_indecomposability() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    Graph m2 = oracles::make_matching(2);
    for (long long d : {2LL, 7LL, -1LL})
        if (!is_indecomposable(m2, {QuadraticTower({d}), {Perm{1, 0}}})) {
            ok = false;
            detail = "twisted matching datum";
        }
    for (const Graph& g : oracles::representatives_up_to(5)) {
        const bool connected = oracles::is_connected(g);
        if (connected) {
            QuotientGraph q(g);
            if (!is_indecomposable(g, {QuadraticTower({}), {}})) {
                ok = false;
                detail = "trivial datum on a connected graph";
            }
            FiniteGroup aut = quotient_automorphisms(q);
            for (const Perm& p : aut.elements()) {
                if (!is_involution(p) || is_identity(p)) continue;
                if (!is_indecomposable(g, {QuadraticTower({2}), {p}})) {
                    ok = false;
                    detail = "involution datum on a connected graph";
                }
            }
        } else if (is_indecomposable(g, {QuadraticTower({}), {}})) {
            ok = false;
            detail = "trivial datum on a disconnected graph";
        }
    }
    report("indecomposability", ok,
           std::chrono::duration<double>(Clock::now() - t0).count(), 10.0, detail);
}

void criterion_structural_suites() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    for (const Graph& g : oracles::representatives_up_to(6)) {
        QuotientGraph q(g);
        FiniteGroup aut = quotient_automorphisms(q);
        for (const Perm& phi : aut.elements()) {
            Perm lift = splitting_lift(q, phi);
            if (!is_graph_automorphism(g, lift) ||
                project_automorphism(q, lift) != phi) {
                ok = false;
                detail = "splitting section failure";
            }
            for (int c = 0; c < q.component_count(); ++c)
                if (phi[c] == c)
                    for (int v : q.components()[c])
                        if (lift[v] != v) ok = false, detail = "fixed-component identity";
        }
        for (const Perm& phi : aut.elements())
            for (const Perm& psi : aut.elements())
                if (splitting_lift(q, compose(phi, psi)) !=
                    compose(splitting_lift(q, phi), splitting_lift(q, psi)))
                    ok = false, detail = "splitting homomorphism";

        unsigned long long expected = aut.order();
        for (int c = 0; c < q.component_count(); ++c)
            for (int i = 2; i <= q.weight(c); ++i) expected *= i;
        if (graph_automorphisms(g).order() != expected)
            ok = false, detail = "automorphism order product";

        for (int c : {2, 3}) {
            GradedAlgebra a = build_algebra(g, c);
            std::vector<int> degree0;
            for (int v = 0; v < g.vertex_count(); ++v)
                if (g.degree(v) == 0) degree0.push_back(v);
            if (center_projection(a) != degree0)
                ok = false, detail = "centre projection";
            CheckResult jac = check_table_jacobi(algebra_table(a));
            if (!jac.passed) ok = false, detail = "jacobi on the 6-vertex corpus";
        }
        if (!ok) break;
    }
    for (int n = 2; n <= 9 && ok; ++n) {
        std::size_t count =
            involution_class_representatives(FiniteGroup::symmetric(n)).size();
        if (count != static_cast<std::size_t>(n / 2 + 1)) {
            ok = false;
            detail = "involution classes of the symmetric group on " +
                     std::to_string(n);
        }
    }
    report("structural-suites", ok,
           std::chrono::duration<double>(Clock::now() - t0).count(), 120.0, detail);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli>\n";
        return 2;
    }
    g_cli = argv[1];

    criterion_twisted_pair_tables();
    criterion_complement_table();
    criterion_real_form_counts();
    criterion_one_vs_infinite();
    criterion_jacobi_grading_corpus();
    criterion_witt_oracle();
    criterion_descent_properties();
    criterion_classification();
    criterion_indecomposability();
    criterion_structural_suites();

    if (g_failures) {
        std::cout << g_failures << " criterion(s) FAILED\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}
