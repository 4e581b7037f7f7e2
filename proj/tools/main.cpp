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

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "liegraph/checks.hpp"
#include "liegraph/report.hpp"

namespace lg = liegraph;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw lg::ValidationError("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct CommonArgs {
    std::string input;
    int nil_class = 2;
    std::string format = "text";
    int bound = 10;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool with_dot = false) {
    cmd->add_option("--input", args.input, "graph file (edge list)")->required();
    cmd->add_option("--class", args.nil_class, "nilpotency class")
        ->check(CLI::Range(1, 32));
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember(with_dot
                                  ? std::vector<std::string>{"text", "json", "dot"}
                                  : std::vector<std::string>{"text", "json"}));
    cmd->add_option("--bound", args.bound,
                    "vertex/component bound for automorphism searches")
        ->check(CLI::Range(1, 64));
}

void emit_json(const lg::Json& j) { std::cout << j.dump(2) << '\n'; }

int run_analyze(const CommonArgs& args) {
    lg::Graph g = lg::parse_graph(read_file(args.input));
    lg::AutSearchOptions opts{args.bound};
    if (args.format == "dot") {
        lg::AnalyzeReport quick{g, lg::QuotientGraph(g), g.connected_components(),
                               0,  0, lg::describe_linear_group(g, opts), false,
                               lg::RationalFormCount::one, 0};
        std::cout << lg::dot_graph(g) << lg::dot_quotient(quick.quotient, g);
        return 0;
    }
    lg::AnalyzeReport r = lg::analyze(g, opts);
    if (args.format == "json")
        emit_json(lg::render_analyze_json(r));
    else
        std::cout << lg::render_analyze_text(r);
    return 0;
}

int run_algebra(const CommonArgs& args) {
    lg::Graph g = lg::parse_graph(read_file(args.input));
    lg::GradedAlgebra a = lg::build_algebra(g, args.nil_class);
    if (args.format == "json")
        emit_json(lg::algebra_to_json(lg::algebra_table(a)));
    else
        std::cout << lg::render_algebra_text(a);
    return 0;
}

lg::DescentDatum parse_datum(const lg::QuotientGraph& q,
                             const std::string& d_list,
                             const std::vector<std::string>& images) {
    std::vector<long long> radicands;
    if (!d_list.empty()) {
        std::istringstream in(d_list);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            try {
                radicands.push_back(std::stoll(tok));
            } catch (const std::exception&) {
                throw lg::ValidationError("malformed radicand '" + tok + "'");
            }
        }
    }
    lg::DescentDatum datum{lg::QuadraticTower{radicands}, {}};
    for (const std::string& text : images)
        datum.images.push_back(lg::parse_cycles(text, q.component_count()));
    return datum;
}

int run_form(const CommonArgs& args, const std::string& d_list,
             const std::vector<std::string>& images, bool paper) {
    lg::Graph g = lg::parse_graph(read_file(args.input));
    lg::QuotientGraph q(g);
    lg::DescentDatum datum = parse_datum(q, d_list, images);
    lg::GradedAlgebra a = lg::build_algebra(g, args.nil_class);
    lg::FormMode mode = paper && datum.field.generator_count() == 1
                            ? lg::FormMode::paper_basis
                            : lg::FormMode::echelon;
    if (paper && datum.field.generator_count() > 1)
        throw lg::ValidationError("paper-basis mode needs a single quadratic generator");
    lg::FormPresentation form = lg::compute_fixed_form(a, q, datum, mode);
    bool indecomposable = lg::is_indecomposable(g, datum);
    bool real = datum.field.is_real();
    if (args.format == "json")
        emit_json(lg::render_form_json(form, indecomposable, real));
    else
        std::cout << lg::render_form_text(form, indecomposable, real, mode);
    return 0;
}

int run_realforms(const CommonArgs& args) {
    lg::Graph g = lg::parse_graph(read_file(args.input));
    auto forms = lg::enumerate_real_forms(g, args.nil_class,
                                          lg::AutSearchOptions{args.bound});
    if (args.format == "json")
        emit_json(lg::render_realforms_json(forms));
    else
        std::cout << lg::render_realforms_text(forms);
    return 0;
}

int run_classify(const CommonArgs& args, const std::string& spec_path) {
    lg::Graph g = lg::parse_graph(read_file(args.input));
    lg::QuotientGraph q(g);
    lg::Json spec;
    try {
        spec = lg::Json::parse(read_file(spec_path));
    } catch (const nlohmann::json::exception& e) {
        throw lg::ValidationError(std::string("cannot parse data spec: ") + e.what());
    }
    if (!spec.is_array())
        throw lg::ValidationError("data spec must be a JSON array");
    std::vector<lg::DescentDatum> data;
    for (const lg::Json& entry : spec) {
        std::vector<long long> radicands;
        for (const lg::Json& d : entry.at("d")) radicands.push_back(d.get<long long>());
        lg::DescentDatum datum{lg::QuadraticTower{radicands}, {}};
        if (entry.contains("images"))
            for (const lg::Json& im : entry.at("images"))
                datum.images.push_back(
                    lg::parse_cycles(im.get<std::string>(), q.component_count()));
        data.push_back(std::move(datum));
    }
    lg::ClassifiedData classes =
        lg::classify_rational_data(g, data, lg::AutSearchOptions{args.bound});
    if (args.format == "json") {
        lg::Json out;
        out["class_count"] = classes.classes.size();
        lg::Json arr = lg::Json::array();
        for (std::size_t i = 0; i < classes.classes.size(); ++i) {
            lg::Json cls;
            lg::Json members = lg::Json::array();
            for (int m : classes.classes[i]) members.push_back(m + 1);
            cls["data"] = std::move(members);
            cls["real"] = classes.real_descending[i];
            arr.push_back(std::move(cls));
        }
        out["classes"] = std::move(arr);
        emit_json(out);
    } else {
        std::cout << "classes: " << classes.classes.size() << '\n';
        for (std::size_t i = 0; i < classes.classes.size(); ++i) {
            std::cout << "class " << (i + 1) << ": data [";
            for (std::size_t m = 0; m < classes.classes[i].size(); ++m) {
                if (m) std::cout << ", ";
                std::cout << (classes.classes[i][m] + 1);
            }
            std::cout << "]  real: " << (classes.real_descending[i] ? "yes" : "no")
                      << '\n';
        }
    }
    return 0;
}

int run_check(const CommonArgs& args) {
    const std::string text = read_file(args.input);
    std::vector<lg::CheckResult> results;
    // a JSON document is checked at the table level, a graph file end to end
    bool as_json = false;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        as_json = (ch == '{');
        break;
    }
    if (as_json) {
        lg::Json j;
        try {
            j = lg::Json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw lg::ValidationError(std::string("cannot parse JSON input: ") +
                                      e.what());
        }
        results = lg::run_table_checks(lg::algebra_from_json(j));
    } else {
        lg::Graph g = lg::parse_graph(text);
        results = lg::run_graph_checks(g, args.nil_class,
                                       lg::AutSearchOptions{args.bound});
    }
    bool all = true;
    for (const lg::CheckResult& r : results) {
        std::cout << (r.passed ? "ok   " : "FAIL ") << r.name;
        if (!r.detail.empty()) std::cout << ": " << r.detail;
        std::cout << '\n';
        all = all && r.passed;
    }
    std::cout << (all ? "all checks passed" : "checks FAILED") << '\n';
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nilpotent Lie algebras from graphs: exact structure constants "
                 "and form classification"};
    app.require_subcommand(1);

    CommonArgs analyze_args, algebra_args, form_args, realforms_args,
        classify_args, check_args;
    std::string d_list, spec_path;
    std::vector<std::string> images;
    bool paper = false;

    CLI::App* analyze = app.add_subcommand(
        "analyze", "coherent components, quotient graph, symmetry summary");
    add_common(analyze, analyze_args, /*with_dot=*/true);

    CLI::App* algebra = app.add_subcommand(
        "algebra", "graded basis and exact structure constants");
    add_common(algebra, algebra_args);

    CLI::App* realforms = app.add_subcommand(
        "realforms", "one presentation per real form of the complexified algebra");
    add_common(realforms, realforms_args);

    CLI::App* form = app.add_subcommand(
        "form", "rational form of a quadratic descent datum");
    add_common(form, form_args);
    form->add_option("--d", d_list, "comma-separated squarefree radicands");
    form->add_option("--image", images,
                     "Galois image in cycle notation, once per radicand");
    form->add_flag("--paper-basis", paper, "sum/difference basis (one radicand)");

    CLI::App* classify = app.add_subcommand(
        "classify", "partition descent data into isomorphism classes");
    add_common(classify, classify_args);
    classify->add_option("--spec", spec_path, "JSON list of data")->required();

    CLI::App* check = app.add_subcommand(
        "check", "invariant suite over a graph file or exported algebra JSON");
    add_common(check, check_args);

    try {
        app.parse(argc, argv);
        if (analyze->parsed()) return run_analyze(analyze_args);
        if (algebra->parsed()) return run_algebra(algebra_args);
        if (realforms->parsed()) return run_realforms(realforms_args);
        if (form->parsed()) return run_form(form_args, d_list, images, paper);
        if (classify->parsed()) return run_classify(classify_args, spec_path);
        if (check->parsed()) return run_check(check_args);
    } catch (const CLI::ParseError& e) {
        // flag misuse is a validation error; --help stays success
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const lg::BudgetError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const lg::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
