#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "klr/cellular.hpp"
#include "klr/dimension.hpp"
#include "klr/nilhecke.hpp"
#include "klr/oracle.hpp"
#include "klr/parser.hpp"

namespace {

struct Options {
    std::string alpha;
    bool json = false;
    int threads = 1;
    size_t cache_limit = size_t(1) << 20;
    std::string out;
    long cutoff = 6;
    long degree = 0;
    bool cellular = false;
    bool pbw = false;
    std::string suite = "all";
    std::string expr;
};

void emit(const Options& opt, const std::string& text) {
    std::cout << text;
    if (!opt.out.empty()) {
        std::ofstream f(opt.out);
        f << text;
    }
}

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--alpha", opt.alpha, "vertex:multiplicity pairs, e.g. 1:2,2:1")->required();
    cmd->add_flag("--json", opt.json, "machine-readable output");
    cmd->add_option("--threads", opt.threads, "worker threads for verification");
    cmd->add_option("--cache-limit", opt.cache_limit, "normalization cache entry bound");
    cmd->add_option("--out", opt.out, "also write output to this file");
}

int run_verify(const Options& opt) {
    klr::RootVector alpha = klr::RootVector::parse(opt.alpha);
    klr::Context ctx(alpha, opt.cache_limit);
    std::vector<klr::CheckResult> rs;
    auto want = [&](const std::string& s) { return opt.suite == "all" || opt.suite == s; };

    if (want("relations")) {
        auto r = klr::verify_relations(ctx);
        rs.insert(rs.end(), r.begin(), r.end());
    }
    if (want("nilhecke")) {
        if (alpha.mults().size() == 1) {
            int a = alpha.height();
            auto r = klr::verify_nilhecke(a, opt.cutoff, opt.threads);
            rs.insert(rs.end(), r.begin(), r.end());
        } else if (opt.suite == "nilhecke") {
            std::cerr << "suite nilhecke requires a single-vertex alpha (a*alpha_i)\n";
            return 2;
        } else {
            rs.push_back(klr::CheckResult{"nilhecke", "skipped: alpha is not single-vertex",
                                          alpha.to_text(), "", std::nullopt, true, ""});
        }
    }
    if (want("cells")) {
        auto r1 = klr::verify_cell_chain(ctx, opt.cutoff, opt.threads);
        auto r2 = klr::verify_cellular_basis(ctx, opt.cutoff, opt.threads);
        rs.insert(rs.end(), r1.begin(), r1.end());
        rs.insert(rs.end(), r2.begin(), r2.end());
    }
    if (want("quotients")) {
        auto r = klr::verify_quotient_structure(ctx, opt.cutoff, opt.threads);
        rs.insert(rs.end(), r.begin(), r.end());
    }
    if (want("cellularity")) {
        auto r = klr::verify_affine_cellularity(ctx, opt.cutoff, opt.threads);
        rs.insert(rs.end(), r.begin(), r.end());
    }
    klr::sort_results(rs);
    bool ok = klr::all_ok(rs);
    std::string text = opt.json ? klr::render_json(rs) + "\n"
                                : klr::render_text(rs) +
                                      (ok ? "all checks passed\n" : "CHECKS FAILED\n");
    emit(opt, text);
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computation in KLR algebras of type A (PBW normal forms, "
                 "graded dimensions, affine cellular structure)"};
    app.require_subcommand(1);
    Options opt;

    auto* roots = app.add_subcommand("roots", "positive roots fitting inside alpha, in order");
    add_common(roots, opt);

    auto* partitions = app.add_subcommand("partitions", "root partitions of alpha, descending");
    add_common(partitions, opt);

    auto* dim = app.add_subcommand("dim", "graded dimension via PBW count, closed formula and "
                                          "cellular count");
    add_common(dim, opt);
    dim->add_option("--cutoff", opt.cutoff, "largest exponent compared")->default_val(8);

    auto* eval = app.add_subcommand("eval", "normalize a generator expression");
    add_common(eval, opt);
    eval->add_option("expr", opt.expr, "expression, e.g. \"s1*y2*e(1,1)\"")->required();

    auto* verify = app.add_subcommand("verify", "run verification suites");
    add_common(verify, opt);
    verify->add_option("--cutoff", opt.cutoff, "largest degree verified")->default_val(6);
    verify->add_option("--suite", opt.suite,
                       "relations|nilhecke|cells|quotients|cellularity|all")
        ->default_val("all")
        ->check(CLI::IsMember({"relations", "nilhecke", "cells", "quotients", "cellularity",
                               "all"}));

    auto* basis = app.add_subcommand("basis", "dump a degree component basis");
    add_common(basis, opt);
    basis->add_option("--degree", opt.degree, "degree to dump")->required();
    basis->add_flag("--cellular", opt.cellular, "cellular basis");
    basis->add_flag("--pbw", opt.pbw, "PBW basis (default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (roots->parsed()) {
            klr::RootVector alpha = klr::RootVector::parse(opt.alpha);
            std::string text;
            if (opt.json) {
                nlohmann::json j = nlohmann::json::array();
                for (const auto& r : klr::positive_roots_below(alpha)) j.push_back(r.to_text());
                text = j.dump(2) + "\n";
            } else {
                for (const auto& r : klr::positive_roots_below(alpha)) text += r.to_text() + "\n";
            }
            emit(opt, text);
            return 0;
        }
        if (partitions->parsed()) {
            klr::RootVector alpha = klr::RootVector::parse(opt.alpha);
            std::string text;
            if (opt.json) {
                nlohmann::json j = nlohmann::json::array();
                for (const auto& pi : klr::root_partitions(alpha)) {
                    nlohmann::json item;
                    item["pi"] = pi.to_text();
                    std::string w;
                    for (size_t k = 0; k < pi.word().size(); ++k)
                        w += (k ? "," : "") + std::to_string(pi.word()[k]);
                    item["i_pi"] = w;
                    j.push_back(std::move(item));
                }
                text = j.dump(2) + "\n";
            } else {
                for (const auto& pi : klr::root_partitions(alpha)) text += pi.to_text() + "\n";
            }
            emit(opt, text);
            return 0;
        }
        if (dim->parsed()) {
            klr::RootVector alpha = klr::RootVector::parse(opt.alpha);
            klr::Context ctx(alpha, opt.cache_limit);
            auto rep = klr::dim_check(ctx, opt.cutoff);
            emit(opt, opt.json ? rep.to_json() + "\n" : rep.to_text());
            return rep.agree ? 0 : 1;
        }
        if (eval->parsed()) {
            klr::RootVector alpha = klr::RootVector::parse(opt.alpha);
            klr::Context ctx(alpha, opt.cache_limit);
            try {
                klr::Element e = klr::eval(klr::parse(opt.expr), ctx);
                emit(opt, (opt.json ? e.to_json() : e.to_text()) + "\n");
                return 0;
            } catch (const klr::ParseError& pe) {
                std::cerr << pe.what() << "\n";
                return 2;
            } catch (const klr::EvalError& ee) {
                std::cerr << ee.what() << "\n";
                return 2;
            }
        }
        if (verify->parsed()) return run_verify(opt);
        if (basis->parsed()) {
            klr::RootVector alpha = klr::RootVector::parse(opt.alpha);
            klr::Context ctx(alpha, opt.cache_limit);
            std::string text;
            if (opt.cellular) {
                auto dump = klr::cellular_basis(ctx, opt.degree);
                if (opt.json) {
                    nlohmann::json j;
                    j["degree"] = opt.degree;
                    j["square"] = dump.square;
                    j["unimodular"] = dump.unimodular;
                    j["labels"] = dump.labels;
                    nlohmann::json elts = nlohmann::json::array();
                    for (const auto& e : dump.elements)
                        elts.push_back(nlohmann::json::parse(e.to_json()));
                    j["elements"] = std::move(elts);
                    text = j.dump(2) + "\n";
                } else {
                    for (const auto& e : dump.elements) text += e.to_text() + "\n";
                }
            } else {
                if (opt.json) {
                    nlohmann::json elts = nlohmann::json::array();
                    for (const auto& m : klr::pbw_basis_at_degree(ctx, opt.degree))
                        elts.push_back(nlohmann::json::parse(
                            ctx.monomial(m.perm, m.dots, m.word).to_json()));
                    text = elts.dump(2) + "\n";
                } else {
                    for (const auto& m : klr::pbw_basis_at_degree(ctx, opt.degree))
                        text += ctx.monomial(m.perm, m.dots, m.word).to_text() + "\n";
                }
            }
            emit(opt, text);
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
