// innerq: command line front end for the innerideal library.
//
// Exit codes: 0 success, 1 violation found, 2 usage or precondition error,
// 3 parse error.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "innerideal.h"

namespace {

int status_to_exit(iiq_status st) {
    switch (st) {
        case IIQ_OK:
            return 0;
        case IIQ_VIOLATION:
            return 1;
        case IIQ_PRECONDITION:
            return 2;
        case IIQ_PARSE:
            return 3;
        default:
            return 2;
    }
}

int fail_with(iiq_status st) {
    std::cerr << "error: " << iiq_last_error() << "\n";
    return status_to_exit(st);
}

struct Handle {
    iiq_algebra* a = nullptr;
    ~Handle() { iiq_algebra_free(a); }
};

int load(const std::string& path, Handle& h) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        return 3;
    }
    std::ostringstream text;
    text << in.rdbuf();
    iiq_status st = iiq_algebra_parse(text.str().c_str(), &h.a);
    if (st != IIQ_OK) return fail_with(st);
    return 0;
}

void print_string(char* s, std::ostream& out) {
    if (!s) return;
    out << s;
    iiq_string_free(s);
}

int env_int(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (!v) return fallback;
    try {
        return std::stoi(v);
    } catch (...) {
        return fallback;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with inner ideals of finite dimensional algebras"};
    app.require_subcommand(1);

    std::string path, subspace, out_path, out_dir, field;
    int k = 1;
    int budget = 256;
    bool emit_witness = false;
    bool inject_mutant = false;
    std::uint64_t seed = 42;
    int count = 100;
    int max_dim = env_int("INNERQ_MAX_DIM", 12);
    const char* env_field = std::getenv("INNERQ_FIELD");
    field = env_field ? env_field : "Q";

    auto* analyze = app.add_subcommand("analyze", "full predicate report for a subspace");
    analyze->add_option("path", path, "algebra file")->required();
    analyze->add_option("--subspace", subspace, "named subspace")->required();
    analyze->add_option("--k", k, "derived series index (default 1)");

    auto* reduce = app.add_subcommand("reduce", "bar-minimal reduction of a subspace");
    reduce->add_option("path", path, "algebra file")->required();
    reduce->add_option("--subspace", subspace, "named subspace")->required();
    reduce->add_option("--k", k, "derived series index (default 1)");
    reduce->add_flag("--emit-witness", emit_witness, "emit the pair and conjugator chain");

    auto* fuzz = app.add_subcommand("fuzz", "seeded conformance run over generated algebras");
    fuzz->add_option("--seed", seed, "generator seed");
    fuzz->add_option("--count", count, "number of algebras");
    fuzz->add_option("--max-dim", max_dim, "dimension cap (env INNERQ_MAX_DIM)");
    fuzz->add_option("--field", field, "Q or F<p> (env INNERQ_FIELD)");
    fuzz->add_option("--out", out_dir, "directory for counterexample files");
    fuzz->add_flag("--inject-mutant", inject_mutant,
                   "corrupt one structure constant per algebra (self test)");

    auto* poset = app.add_subcommand("poset", "DOT graph of the idempotent pair poset");
    poset->add_option("path", path, "algebra file")->required();
    poset->add_option("--budget", budget, "enumeration budget");
    poset->add_option("--out", out_path, "write the graph here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (analyze->parsed()) {
        Handle h;
        if (int rc = load(path, h)) return rc;
        char* json = nullptr;
        iiq_status st = iiq_analyze(h.a, subspace.c_str(), k, &json);
        if (st != IIQ_OK) return fail_with(st);
        print_string(json, std::cout);
        return 0;
    }
    if (reduce->parsed()) {
        Handle h;
        if (int rc = load(path, h)) return rc;
        char* json = nullptr;
        char* fragment = nullptr;
        iiq_status st =
            iiq_reduce(h.a, subspace.c_str(), k, emit_witness ? 1 : 0, &json, &fragment);
        if (st != IIQ_OK) return fail_with(st);
        print_string(json, std::cout);
        print_string(fragment, std::cout);
        return 0;
    }
    if (fuzz->parsed()) {
        char* summary = nullptr;
        iiq_status st = iiq_fuzz(seed, count, max_dim, field.c_str(),
                                 out_dir.empty() ? nullptr : out_dir.c_str(),
                                 inject_mutant ? 1 : 0, &summary);
        print_string(summary, std::cout);
        if (st != IIQ_OK) {
            std::cerr << "error: " << iiq_last_error() << "\n";
            return status_to_exit(st);
        }
        return 0;
    }
    if (poset->parsed()) {
        Handle h;
        if (int rc = load(path, h)) return rc;
        char* dot = nullptr;
        iiq_status st = iiq_poset(h.a, budget, &dot);
        if (st != IIQ_OK) return fail_with(st);
        if (out_path.empty()) {
            print_string(dot, std::cout);
        } else {
            std::ofstream out(out_path);
            out << dot;
            iiq_string_free(dot);
        }
        return 0;
    }
    return 2;
}
