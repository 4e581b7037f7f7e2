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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "liegraph/checks.hpp"
#include "liegraph/descent.hpp"
#include "oracles.hpp"

using namespace liegraph;

TEST_CASE("graph JSON round trip") {
    Graph g = parse_graph("a b\nb c\nvertex z\n");
    Graph back = graph_from_json(graph_to_json(g));
    CHECK(back.vertices() == g.vertices());
    CHECK(back.edges() == g.edges());
}

TEST_CASE("quotient JSON export shape") {
    Graph g = oracles::make_matching(2);
    Json j = quotient_to_json(QuotientGraph(g), g);
    CHECK(j["components"].size() == 2);
    CHECK(j["weights"] == Json::array({2, 2}));
    CHECK(j["loops"] == Json::array({0, 1}));
    CHECK(j["edges"].empty());
}

TEST_CASE("algebra table JSON round trip") {
    for (const Graph& g : {oracles::make_matching(2), oracles::make_complete(3)}) {
        AlgebraTable t = algebra_table(build_algebra(g, 3));
        CHECK(algebra_from_json(algebra_to_json(t)) == t);
    }
}

TEST_CASE("corrupted table fails the named invariants") {
    AlgebraTable t = algebra_table(build_algebra(oracles::make_complete(3), 2));
    // break grading: point a degree-2 bracket at a degree-1 element
    AlgebraTable broken = t;
    broken.brackets[{0, 1}] = SparseVec{{0, Rational(1)}};
    bool failed = false;
    for (const CheckResult& r : run_table_checks(broken))
        if (!r.passed && r.name == "grading-additivity") failed = true;
    CHECK(failed);

    // break Jacobi while keeping the grading intact; class 2 tables satisfy
    // it vacuously, so corrupt a class 3 table
    AlgebraTable t3 = algebra_table(build_algebra(oracles::make_complete(3), 3));
    auto it = t3.brackets.find({1, 2});
    REQUIRE(it != t3.brackets.end());
    for (auto& [idx, coef] : it->second) coef *= 2;
    bool jacobi_failed = false;
    for (const CheckResult& r : run_table_checks(t3))
        if (!r.passed && r.name == "jacobi") jacobi_failed = true;
    CHECK(jacobi_failed);
}

TEST_CASE("form JSON round trip") {
    Graph g = oracles::make_matching(2);
    QuotientGraph q(g);
    GradedAlgebra a = build_algebra(g, 2);
    for (FormMode mode : {FormMode::echelon, FormMode::paper_basis}) {
        FormPresentation f = compute_fixed_form(
            a, q, {QuadraticTower({-6}), {Perm{1, 0}}}, mode);
        CHECK(forms_equal(form_from_json(form_to_json(f)), f));
    }
    FormPresentation std_form =
        compute_fixed_form(a, q, {QuadraticTower({}), {}}, FormMode::echelon);
    CHECK(forms_equal(form_from_json(form_to_json(std_form)), std_form));
}

TEST_CASE("malformed JSON is rejected with a validation error") {
    CHECK_THROWS_AS(graph_from_json(Json::parse("{}")), ValidationError);
    CHECK_THROWS_AS(algebra_from_json(Json::parse(R"({"basis": []})")),
                    ValidationError);
    CHECK_THROWS_AS(
        algebra_from_json(Json::parse(
            R"({"basis": [["a","b"]], "brackets": [{"i":0,"j":5,"coeffs":{}}]})")),
        ValidationError);
}

// ---- CLI surface ----------------------------------------------------------

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

std::string cli_path() {
    const char* env = std::getenv("LIEGRAPH_CLI");
    REQUIRE_MESSAGE(env != nullptr, "LIEGRAPH_CLI must point at the CLI binary");
    return env;
}

RunResult run_cli(const std::string& args) {
    std::string cmd = "'" + cli_path() + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const std::string& text) {
    std::string path = "interface_" + name;
    std::ofstream out(path);
    out << text;
    return path;
}

}  // namespace

TEST_CASE("cli analyze: text and determinism") {
    std::string path = write_temp("pair.graph", "a1 b1\na2 b2\n");
    RunResult r1 = run_cli("analyze --input " + path);
    CHECK(r1.exit_code == 0);
    CHECK(r1.output.find("|Aut(graph)| = 8") != std::string::npos);
    CHECK(r1.output.find("rational forms: infinitely many") != std::string::npos);
    CHECK(r1.output.find("real forms: 2") != std::string::npos);
    RunResult r2 = run_cli("analyze --input " + path);
    CHECK(r1.output == r2.output);
}

TEST_CASE("cli analyze: single vertex") {
    std::string path = write_temp("one.graph", "vertex x\n");
    RunResult r = run_cli("analyze --input " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("abelian") != std::string::npos);
    CHECK(r.output.find("real forms: 1") != std::string::npos);
    CHECK(r.output.find("rational forms: one") != std::string::npos);
}

TEST_CASE("cli analyze: magnet graphs have one rational form") {
    std::string path = write_temp("magnet.graph",
                                  "c1 c2\nc1 s1\nc1 s2\nc1 s3\nc2 s1\nc2 s2\nc2 s3\n");
    RunResult r = run_cli("analyze --input " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("rational forms: one") != std::string::npos);
    CHECK(r.output.find("generated by transpositions: true") != std::string::npos);
}

TEST_CASE("cli algebra: bracket lines") {
    std::string path = write_temp("edge.graph", "a b\n");
    RunResult r = run_cli("algebra --input " + path + " --class 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("[a, b] = [a,b]") != std::string::npos);
    RunResult again = run_cli("algebra --input " + path + " --class 2");
    CHECK(r.output == again.output);
}

TEST_CASE("cli json outputs parse") {
    std::string path = write_temp("pair2.graph", "a1 b1\na2 b2\n");
    for (std::string sub : {"analyze", "algebra", "realforms"}) {
        RunResult r = run_cli(sub + " --input " + path + " --format json");
        CHECK(r.exit_code == 0);
        CHECK_NOTHROW(Json::parse(r.output));
    }
    RunResult form = run_cli("form --input " + path +
                             " --d 3 --image '(1 2)' --format json");
    CHECK(form.exit_code == 0);
    Json parsed = Json::parse(form.output);
    CHECK(parsed["indecomposable"] == true);
    CHECK(parsed["real"] == true);
}

TEST_CASE("cli dot output") {
    std::string path = write_temp("dot.graph", "a b\nvertex z\n");
    RunResult r = run_cli("analyze --input " + path + " --format dot");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("graph Gamma {") != std::string::npos);
    CHECK(r.output.find("\"a\" -- \"b\";") != std::string::npos);
    CHECK(r.output.find("graph QuotientGamma {") != std::string::npos);
}

TEST_CASE("cli exit codes") {
    CHECK(run_cli("analyze --input does_not_exist.graph").exit_code == 1);
    std::string bad = write_temp("bad.graph", "a a\n");
    CHECK(run_cli("analyze --input " + bad).exit_code == 1);
    std::string big = write_temp("big.graph", [] {
        std::string text;
        for (int i = 0; i < 12; ++i) text += "vertex v" + std::to_string(i) + "\n";
        return text;
    }());
    CHECK(run_cli("analyze --input " + big).exit_code == 2);
    std::string pair = write_temp("pair3.graph", "a1 b1\na2 b2\n");
    CHECK(run_cli("form --input " + pair + " --d 4 --image '(1 2)'").exit_code == 1);
    CHECK(run_cli("form --input " + pair + " --d 2").exit_code == 1);
    CHECK(run_cli("check --input " + pair).exit_code == 0);
}

TEST_CASE("cli check flags a corrupted table file") {
    std::string pair = write_temp("pair4.graph", "a1 b1\na2 b2\n");
    RunResult algebra = run_cli("algebra --input " + pair + " --format json");
    REQUIRE(algebra.exit_code == 0);
    Json j = Json::parse(algebra.output);
    j["brackets"][0]["coeffs"] = {{"0", "1"}};  // degree-2 bracket hits degree 1
    std::string corrupted = write_temp("corrupt.json", j.dump());
    RunResult check = run_cli("check --input " + corrupted);
    CHECK(check.exit_code == 1);
    CHECK(check.output.find("FAIL grading-additivity") != std::string::npos);
}

TEST_CASE("cli classify") {
    std::string pair = write_temp("pair5.graph", "a1 b1\na2 b2\n");
    std::string spec = write_temp(
        "spec.json",
        R"json([{"d":[2],"images":["(1 2)"]},{"d":[3],"images":["(1 2)"]},
                {"d":[2],"images":["(1 2)"]},{"d":[-1],"images":["(1 2)"]}])json");
    RunResult r = run_cli("classify --input " + pair + " --spec " + spec +
                          " --format json");
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.output);
    CHECK(j["class_count"] == 3);
    CHECK(j["classes"][0]["data"] == Json::array({1, 3}));
    CHECK(j["classes"][2]["real"] == false);
}
