#include <bergekit/acceptance.hpp>
#include <bergekit/classifier.hpp>
#include <bergekit/constructions.hpp>
#include <bergekit/containment.hpp>
#include <bergekit/graph.hpp>
#include <bergekit/matrix_io.hpp>
#include <bergekit/named.hpp>
#include <bergekit/report_json.hpp>
#include <bergekit/solver.hpp>
#include <bergekit/transform.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace bergekit;
namespace fs = std::filesystem;

namespace {

int env_threads() {
    const char* value = std::getenv("BERGEKIT_THREADS");
    if (!value) {
        return 1;
    }
    const int n = std::atoi(value);
    if (n < 1) {
        throw Error("BERGEKIT_THREADS must be a positive integer");
    }
    return n;
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

std::vector<int> parse_parts(const std::string& text) {
    std::vector<int> parts;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        parts.push_back(std::stoi(item));
    }
    return parts;
}

std::vector<BitMatrix> read_family(const std::string& dir) {
    if (!fs::is_directory(dir)) {
        throw Error("family directory '" + dir + "' not found");
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file()) {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    std::vector<BitMatrix> family;
    for (const auto& path : files) {
        family.push_back(read_matrix_file(path.string()));
    }
    if (family.empty()) {
        throw Error("family directory '" + dir + "' has no matrix files");
    }
    return family;
}

struct ContainsArgs {
    std::string f;
    std::string a;
    std::string mode = "berge";
    bool json = false;
};

int cmd_contains(const ContainsArgs& args) {
    const BitMatrix f = resolve_matrix_arg(args.f);
    const BitMatrix a = resolve_matrix_arg(args.a);
    const ContainMode mode = args.mode == "config" ? ContainMode::Configuration : ContainMode::Berge;
    const auto e = find_embedding(f, a, mode);
    if (args.json) {
        nlohmann::json j{{"schema", kJsonSchema}, {"mode", args.mode}, {"present", e.has_value()}};
        j["embedding"] = e ? embedding_json(*e) : nlohmann::json(nullptr);
        print_json(j);
    } else {
        std::cout << (e ? "present" : "absent") << '\n';
        if (e) {
            std::cout << "rows:";
            for (int r : e->row_map) {
                std::cout << ' ' << r;
            }
            std::cout << "\ncolumns:";
            for (int c : e->col_map) {
                std::cout << ' ' << c;
            }
            std::cout << '\n';
        }
    }
    return 0;
}

struct ConstructArgs {
    std::string kind;
    int p = 1;
    int k = 0;
    int t = 1;
    int m = 0;
    std::string parts;
    std::string name;
    std::string verify;
};

int cmd_construct(const ConstructArgs& args) {
    BitMatrix out;
    if (args.kind == "product") {
        out = expand_product(args.p, args.m);
    } else if (args.kind == "H") {
        out = make_H(args.p, args.k, args.t);
    } else if (args.kind == "generalH") {
        out = make_generalH(parse_parts(args.parts), args.t);
    } else if (args.kind == "extremal") {
        if (args.name == "ik") {
            out = ik_extremal(args.k, args.m);
        } else if (args.name == "g1") {
            out = g1_extremal(args.m);
        } else if (args.name == "h2") {
            out = h2_extremal(args.m);
        } else if (args.name == "h8") {
            out = h8_extremal(args.m);
        } else {
            throw Error("unknown extremal construction '" + args.name + "' (ik, g1, h2, h8)");
        }
    } else {
        throw Error("unknown construction '" + args.kind + "' (product, H, generalH, extremal)");
    }
    write_matrix(std::cout, out);
    if (!args.verify.empty()) {
        const BitMatrix f = resolve_matrix_arg(args.verify);
        const bool avoided = !berge_contains(f, out);
        std::cout << (avoided ? "verified: F is avoided" : "verification failed: F is contained") << '\n';
        return avoided ? 0 : 1;
    }
    return 0;
}

struct ClassifyArgs {
    std::string f;
    std::string graph;
    bool forb = false;
    bool json = false;
};

int cmd_classify(const ClassifyArgs& args) {
    BitMatrix f;
    if (!args.graph.empty()) {
        f = incidence_matrix(parse_graph(args.graph));
    } else if (!args.f.empty()) {
        f = resolve_matrix_arg(args.f);
    } else {
        throw Error("classify needs a matrix argument or --graph");
    }
    const AsymptoticClass c = args.forb ? classify_treeforb(f) : classify_bh(f);
    if (args.json) {
        nlohmann::json j = class_json(c);
        j["schema"] = kJsonSchema;
        print_json(j);
        return 0;
    }
    std::cout << (args.forb ? "forb(m,F) is " : "Bh(m,F) is ") << c.label() << (c.conditional ? " (conditional)" : "")
              << '\n';
    for (const auto& r : c.rules) {
        std::cout << "  rule " << r.name << " [" << r.anchor << "]\n";
    }
    if (c.lower_witness) {
        std::cout << "  lower witness " << c.lower_witness->describe() << '\n';
    }
    for (const auto& n : c.notes) {
        std::cout << "  note: " << n << '\n';
    }
    return 0;
}

struct VerifyArgs {
    std::string only;
    std::optional<int> k;
    std::optional<int> m;
    std::uint64_t seed = AcceptanceConfig{}.seed;
    bool json = false;
};

int cmd_verify(const VerifyArgs& args) {
    AcceptanceConfig config;
    config.seed = args.seed;
    config.solve.threads = env_threads();
    std::vector<CriterionResult> results;
    if (args.m) {
        if (args.only.empty()) {
            throw Error("--m needs --only with one of ik, g1, h8, h2");
        }
        results.push_back(check_formula(args.only, args.k, *args.m, config));
    } else if (!args.only.empty()) {
        results.push_back(run_criterion(args.only, config));
    } else {
        results = run_acceptance(config);
    }
    int failed = 0;
    auto items = nlohmann::json::array();
    for (const auto& r : results) {
        failed += !r.passed;
        if (args.json) {
            items.push_back({{"id", r.id}, {"key", r.key}, {"passed", r.passed}, {"detail", r.detail}});
        } else {
            std::cout << format_result(r) << '\n';
        }
    }
    if (args.json) {
        print_json({{"schema", kJsonSchema}, {"seed", args.seed}, {"failed", failed}, {"items", items}});
    }
    return failed ? 1 : 0;
}

int cmd_catalog() {
    for (const auto& e : catalog()) {
        std::cout << e.name << "  " << e.matrix.rows() << "x" << e.matrix.cols() << "  " << to_literal(e.matrix)
                  << "  [" << e.anchor << "]\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Berge hypergraph extremal problems for small (0,1)-matrices"};
    app.require_subcommand(1);
    std::function<int()> action;

    ContainsArgs contains;
    auto* c = app.add_subcommand("contains", "Test F << A (Berge) or F < A (configuration)");
    c->add_option("F", contains.f, "Forbidden matrix: file, @name or literal")->required();
    c->add_option("A", contains.a, "Host matrix: file, @name or literal")->required();
    c->add_option("--mode", contains.mode)->check(CLI::IsMember({"berge", "config"}));
    c->add_flag("--json", contains.json);
    c->callback([&] { action = [&] { return cmd_contains(contains); }; });

    std::string shift_input;
    auto* s = app.add_subcommand("shift", "Print the shifted downset of a simple matrix");
    s->add_option("A", shift_input)->required();
    s->callback([&] {
        action = [&] {
            write_matrix(std::cout, shift_fixpoint(resolve_matrix_arg(shift_input)).members());
            return 0;
        };
    });

    ConstructArgs construct;
    auto* k = app.add_subcommand("construct", "Build a lower-bound construction");
    k->add_option("kind", construct.kind, "product, H, generalH or extremal")->required();
    k->add_option("--p", construct.p, "Exponent p (product, H)");
    k->add_option("--k", construct.k, "Rows k of H, or k for extremal ik");
    k->add_option("--t", construct.t, "Block repetition t");
    k->add_option("--m", construct.m, "Rows of the construction");
    k->add_option("--parts", construct.parts, "Comma-separated part sizes for generalH");
    k->add_option("--name", construct.name, "ik, g1, h2 or h8 for extremal");
    k->add_option("--verify", construct.verify, "Check that this matrix is avoided");
    k->callback([&] { action = [&] { return cmd_construct(construct); }; });

    std::string bh_f;
    int bh_m = 0;
    std::string bh_mode = "downset";
    auto* b = app.add_subcommand("bh-exact", "Exact Bh(m,F)");
    b->add_option("F", bh_f)->required();
    b->add_option("--m", bh_m, "Rows m, 1..6")->required();
    b->add_option("--mode", bh_mode)->check(CLI::IsMember({"downset", "unrestricted"}));
    b->callback([&] {
        action = [&] {
            const BitMatrix f = resolve_matrix_arg(bh_f);
            print_json(solve_json(bh_mode == "downset" ? solve_bh(f, bh_m, SolveOptions{env_threads()})
                                                       : solve_bh_unrestricted(f, bh_m)));
            return 0;
        };
    });

    std::string family_dir;
    int forb_m = 0;
    auto* fo = app.add_subcommand("forb-exact", "Exact forb(m, family) for the matrices in a directory");
    fo->add_option("--family", family_dir)->required();
    fo->add_option("--m", forb_m, "Rows m")->required();
    fo->callback([&] {
        action = [&] {
            print_json(solve_json(solve_forb_family(read_family(family_dir), forb_m)));
            return 0;
        };
    });

    std::string rel_f;
    std::string rel_p;
    auto* r = app.add_subcommand("f-rel", "Exact f(F,P)");
    r->add_option("F", rel_f)->required();
    r->add_option("P", rel_p)->required();
    r->callback([&] {
        action = [&] {
            print_json(solve_json(solve_relative(resolve_matrix_arg(rel_f), resolve_matrix_arg(rel_p))));
            return 0;
        };
    });

    ClassifyArgs classify;
    auto* cl = app.add_subcommand("classify", "Asymptotic class of Bh(m,F), or of forb(m,F) for forests");
    cl->add_option("F", classify.f);
    cl->add_option("--graph", classify.graph, "Use the incidence matrix of this graph (\"m;u-v,...\")");
    cl->add_flag("--forb", classify.forb, "Classify forb(m,F) for a forest incidence matrix");
    cl->add_flag("--json", classify.json);
    cl->callback([&] { action = [&] { return cmd_classify(classify); }; });

    int corpus_k = 3;
    int corpus_cols = 4;
    std::string corpus_out;
    auto* cc = app.add_subcommand("classify-corpus", "Classify every small k-rowed matrix");
    cc->add_option("--k", corpus_k)->required();
    cc->add_option("--max-cols", corpus_cols)->required();
    cc->add_option("--out", corpus_out, "Write the JSON report here instead of stdout");
    cc->callback([&] {
        action = [&] {
            const CorpusReport report = classify_corpus(corpus_k, corpus_cols);
            const nlohmann::json j = corpus_json(report);
            if (corpus_out.empty()) {
                print_json(j);
            } else {
                std::ofstream out(corpus_out);
                if (!out) {
                    throw Error("cannot write '" + corpus_out + "'");
                }
                out << j.dump(2) << '\n';
                std::cout << report.entries.size() << " matrices, " << report.failures() << " failed cross-checks\n";
            }
            return report.failures() ? 1 : 0;
        };
    });

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify-theorems", "Run the acceptance suite");
    v->add_option("--only", verify.only, "One item: " + [] {
        std::string keys;
        for (const auto& key : criterion_keys()) {
            keys += (keys.empty() ? "" : ", ") + key;
        }
        return keys;
    }());
    v->add_option("--k", verify.k, "Single k for ik");
    v->add_option("--m", verify.m, "Single m for ik, g1, h8 or h2");
    v->add_option("--seed", verify.seed);
    v->add_flag("--json", verify.json);
    v->callback([&] { action = [&] { return cmd_verify(verify); }; });

    auto* cat = app.add_subcommand("catalog", "List the named matrices");
    cat->callback([&] { action = cmd_catalog; });

    try {
        app.parse(argc, argv);
        return action();
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
