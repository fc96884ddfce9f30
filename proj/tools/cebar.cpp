#include "cebar/ce.hpp"
#include "cebar/expr.hpp"
#include "cebar/suite.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace cebar;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

LieAlgebra load_algebra(const std::string& source) {
    if (std::filesystem::exists(source)) {
        try {
            return lie_from_json(read_file(source));
        } catch (const SchemaError& e) {
            throw SchemaError(source + ": " + e.what());
        }
    }
    return catalog(source);
}

std::vector<LieAlgebra> algebras(const std::string& source) {
    std::vector<LieAlgebra> out;
    if (source.empty())
        for (auto& n : catalog_names()) out.push_back(catalog(n));
    else
        out.push_back(load_algebra(source));
    return out;
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("not an integer list: '" + s + "'");
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks for Chevalley-Eilenberg, Koszul and bar constructions of Lie algebras"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string algebra, variant_text = "actual", out_path;
    bool no_timestamps = false, as_json = false;
    app.add_option("--algebra", algebra, "catalog name or JSON file");
    app.add_option("--variant", variant_text, "actual | modified");
    app.add_flag("--no-timestamps", no_timestamps, "omit timings and generation time from reports");
    app.add_flag("--json", as_json, "print the JSON report instead of summary lines");
    app.add_option("--out", out_path, "write the JSON report (and F.md) here");

    auto* validate = app.add_subcommand("validate", "Jacobi identity of the structure constants");
    auto* cat = app.add_subcommand("catalog", "list catalog algebras or print one as JSON");

    auto* star = app.add_subcommand("star", "star product of expressions, or its property checks");
    std::vector<std::string> exprs;
    int star_deg = 3;
    star->add_option("exprs", exprs, "expressions to multiply");
    star->add_option("--max-degree", star_deg);

    auto* duflo = app.add_subcommand("duflo", "log coefficients of the Duflo series and sqrt(J)");
    int duflo_order = 6;
    duflo->add_option("--order", duflo_order);

    auto* ce = app.add_subcommand("ce-check", "d^2 = 0, Leibniz rule and the twisted-derivation form");
    int ce_n = 4;
    ce->add_option("--max-filtration", ce_n);

    auto* coh = app.add_subcommand("cohomology", "truncated cohomology of the Chevalley-Eilenberg complex");
    int coh_n = 3;
    coh->add_option("--max-filtration", coh_n);

    auto* kq = app.add_subcommand("koszul-quadratic", "Koszul complex of quadratic data");
    std::string kq_spec;
    int kq_m = 3, kq_dim = 0;
    kq->add_option("--spec", kq_spec, "quadratic data JSON file");
    kq->add_option("--dim", kq_dim, "symmetric data on this many generators when no spec is given");
    kq->add_option("--max-arity", kq_m);

    auto* bar = app.add_subcommand("bar-check", "deformed bar complex");
    int bar_q = 3, bar_deg = 2;
    bar->add_option("--max-q", bar_q);
    bar->add_option("--max-degree", bar_deg);

    auto* phi = app.add_subcommand("phi-check", "skew map into the bar complex");
    int phi_n = 4;
    phi->add_option("--max-filtration", phi_n);

    auto* ainf = app.add_subcommand("ainf-identities", "bimodule identities for the skew map");
    int ainf_p = 3, ainf_n = 4;
    ainf->add_option("--pmax", ainf_p);
    ainf->add_option("--max-filtration", ainf_n);

    auto* gf = app.add_subcommand("graph-filter", "admissible graph degree filter");
    std::string gf_type, gf_adeg, gf_bdeg;
    gf->add_option("--type", gf_type, "n,k,l")->required();
    gf->add_option("--adeg", gf_adeg, "A-argument degrees");
    gf->add_option("--bdeg", gf_bdeg, "B-argument degrees");

    auto* rep = app.add_subcommand("report", "run every check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::vector<CheckRecord> records;
    try {
        Variant v = parse_variant(variant_text);
        auto weights = [&]() {
            std::vector<int> w;
            records.push_back(check_calibration(3, w));
            return w;
        };

        if (validate->parsed()) {
            for (auto& g : algebras(algebra)) records.push_back(check_jacobi(g));
        } else if (cat->parsed()) {
            if (algebra.empty()) {
                for (auto& n : catalog_names()) std::cout << n << "\n";
            } else {
                std::cout << lie_to_json(load_algebra(algebra)) << "\n";
            }
            return 0;
        } else if (star->parsed()) {
            if (exprs.size() == 1) throw UsageError("star needs at least two expressions");
            if (!exprs.empty()) {
                auto g = load_algebra(algebra.empty() ? "heisenberg3" : algebra);
                StarAlgebra S(g, v);
                Sparse acc = parse_expression(exprs[0], g);
                for (std::size_t i = 1; i < exprs.size(); ++i) acc = S.star(acc, parse_expression(exprs[i], g));
                std::cout << render(acc, g) << "\n";
                return 0;
            }
            for (auto& g : algebras(algebra)) {
                records.push_back(check_star(g, v, star_deg));
                records.push_back(check_c1_lemma(g, v, star_deg));
                records.push_back(check_variant_conjugation(g, star_deg));
            }
        } else if (duflo->parsed()) {
            auto r = check_duflo_series(duflo_order);
            if (!as_json)
                for (std::size_t k = 0; k < r.data["c"].size(); ++k)
                    std::cout << "c" << k + 1 << " = " << r.data["c"][k].get<std::string>() << "\n";
            records.push_back(r);
            if (!algebra.empty()) {
                auto o = check_duflo_operator(load_algebra(algebra), v, duflo_order);
                if (!as_json) std::cout << "sqrtJ = " << o.data["sqrtJ"].get<std::string>() << "\n";
                records.push_back(o);
            }
        } else if (ce->parsed()) {
            for (auto& g : algebras(algebra)) {
                records.push_back(check_cochain_square(g));
                records.push_back(check_ce_square(g, ce_n));
                records.push_back(check_leibniz(g, 3));
                records.push_back(check_dk_hat(g, std::min(ce_n, 5)));
            }
        } else if (coh->parsed()) {
            for (auto& g : algebras(algebra)) {
                auto r = check_cohomology(g, coh_n);
                if (!as_json) {
                    std::cout << g.name() << " N=" << coh_n << "\n";
                    std::cout << "degree dim rank_in rank_out dim_H stable\n";
                    for (auto& row : r.data["rows"])
                        std::cout << row["degree"] << " " << row["dim"] << " " << row["rank_in"] << " "
                                  << row["rank_out"] << " " << row["dim_H"] << " " << row["stable"] << "\n";
                }
                records.push_back(r);
            }
        } else if (kq->parsed()) {
            QuadraticData q;
            if (!kq_spec.empty()) {
                try {
                    q = quadratic_from_json(read_file(kq_spec));
                } catch (const SchemaError& e) {
                    throw SchemaError(kq_spec + ": " + e.what());
                }
            } else if (kq_dim > 0) {
                q = symmetric_data(kq_dim);
            } else {
                throw UsageError("koszul-quadratic needs --spec or --dim");
            }
            auto r = check_koszul(q, kq_m);
            if (!as_json) std::cout << "dual dimensions " << r.data["dual_dims"].dump() << "\n";
            records.push_back(r);
            if (quadratic_to_json(q) == quadratic_to_json(symmetric_data(q.dimV)))
                records.push_back(check_koszul_ce(q.dimV, std::min(kq_m, q.dimV)));
        } else if (bar->parsed()) {
            auto w = weights();
            for (auto& g : algebras(algebra)) {
                Brane br(g, v, w);
                records.push_back(check_bar_square(br, bar_q, bar_deg));
                records.push_back(check_bar_tensor(br, std::min(bar_q, 2)));
                records.push_back(check_mu_phi(br, 3));
            }
        } else if (phi->parsed()) {
            auto w = weights();
            for (auto& g : algebras(algebra)) {
                Brane br(g, v, w);
                records.push_back(check_phi_chain(br, phi_n));
                records.push_back(check_phi_left(br, std::max(phi_n - 1, 0)));
                auto lit = check_literal_differential(br, phi_n);
                if (!as_json) {
                    std::cout << "literal differential " << g.name() << " " << variant_name(v) << ": "
                              << (lit.data["agrees"].get<bool>() ? "agrees with the pullback" : "differs from the pullback")
                              << "\n";
                    for (auto& d : lit.data["discrepancies"])
                        std::cout << "  " << d["input"].get<std::string>() << " -> "
                                  << d["literal_minus_pullback"].get<std::string>() << "\n";
                }
                records.push_back(lit);
            }
        } else if (ainf->parsed()) {
            std::vector<int> w;
            records.push_back(check_calibration(ainf_p, w));
            if (!as_json && !w.empty()) {
                std::cout << "w =";
                for (int x : w) std::cout << " " << x;
                std::cout << "\n";
            }
            if (records.back().pass())
                for (auto& g : algebras(algebra)) {
                    Brane br(g, v, w);
                    records.push_back(check_ainf1(br, ainf_n));
                    records.push_back(check_ainf2(br, ainf_p, 2));
                }
            records.push_back(check_degree_certificates(4, ainf_p));
        } else if (gf->parsed()) {
            auto t = parse_ints(gf_type);
            if (t.size() != 3 || t[0] < 0 || t[1] < 0 || t[2] < 0) throw UsageError("--type expects n,k,l");
            if (t[0] > 4 || t[1] > 5 || t[2] > 5) throw UsageError("--type too large for enumeration");
            if (!gf_adeg.empty() || !gf_bdeg.empty()) {
                auto a = parse_ints(gf_adeg), b = parse_ints(gf_bdeg);
                if (static_cast<int>(a.size()) != t[1] || static_cast<int>(b.size()) != t[2])
                    throw UsageError("--adeg/--bdeg lengths must match k and l");
                auto gs = graph_filter(t[0], t[1], t[2], a, b);
                for (auto& G : gs) std::cout << render_graph(G) << "\n";
                std::cout << gs.size() << " graphs\n";
                return 0;
            }
            auto r = check_graph_filter(t[0], t[1], t[2]);
            if (!as_json) {
                for (auto& s : r.data["graphs"]) std::cout << s.get<std::string>() << "\n";
                std::cout << r.data["count"] << " graphs\n";
            }
            records.push_back(r);
        } else if (rep->parsed()) {
            if (out_path.empty()) throw UsageError("report needs --out");
            records = full_report();
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const LookupError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ComponentUnavailable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    const bool ts = !no_timestamps;
    std::string descriptor = std::string(app.get_subcommands().front()->get_name()) +
                             (algebra.empty() ? "" : " algebra=" + algebra);
    if (!rep->parsed()) descriptor += " variant=" + variant_text;  // report runs both
    auto j = report_json(records, descriptor, ts);
    if (as_json) std::cout << j.dump(2) << "\n";
    else
        for (auto& r : records) std::cout << summary_lines(r);
    if (!out_path.empty()) {
        write_file(out_path, j.dump(2) + "\n");
        write_file(out_path + ".md", report_markdown(records, descriptor, ts));
    }
    for (auto& r : records)
        if (!r.pass()) return 1;
    return 0;
}
