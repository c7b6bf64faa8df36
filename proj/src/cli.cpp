#include "kingdon/cli.hpp"

#include "kingdon/cayley_dickson.hpp"
#include "kingdon/checks.hpp"
#include "kingdon/errors.hpp"
#include "kingdon/json_io.hpp"
#include "kingdon/structure.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace kingdon {

namespace {

std::vector<Scalar> parse_csv_scalars(const std::string& text) {
    std::vector<Scalar> out;
    if (text.empty())
        return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(parse_scalar(item));
    return out;
}

Matrix parse_form(const std::string& text) {
    if (text == "zero3")
        return Matrix::diagonal({Scalar(0), Scalar(0), Scalar(0)});
    if (text == "oct")
        return Matrix::diagonal({Scalar(-2), Scalar(-2), Scalar(-2)});
    if (text == "split-oct")
        return Matrix::diagonal({Scalar(-2), Scalar(-2), Scalar(2)});
    if (text.rfind("diag:", 0) == 0)
        return Matrix::diagonal(parse_csv_scalars(text.substr(5)));
    std::string doc = text;
    if (!text.empty() && text[0] == '@') {
        std::ifstream in(text.substr(1));
        if (!in)
            throw ParseError("cannot open form file '" + text.substr(1) + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        doc = buf.str();
    }
    nlohmann::json j = nlohmann::json::parse(doc, nullptr, false);
    if (j.is_discarded())
        throw ParseError("form is neither a preset, diag:..., nor a JSON matrix");
    return gram_from_json(j);
}

Signature parse_signature(const std::string& text) {
    std::vector<Scalar> parts = parse_csv_scalars(text);
    if (parts.size() != 3)
        throw ParseError("signature must be b0,b1,b-1");
    Signature s;
    int* slots[3] = {&s.b0, &s.b1, &s.bneg1};
    for (int h = 0; h < 3; ++h) {
        if (denominator(parts[h]) != 1 || parts[h] < 0)
            throw ParseError("signature entries must be nonnegative integers");
        *slots[h] = static_cast<int>(numerator(parts[h]));
    }
    if (s.b0 + s.b1 + s.bneg1 != 3)
        throw ParseError("signature must sum to 3");
    return s;
}

std::string cell_text(const Algebra& a, int i, int j) {
    const auto& entry = a.table(i, j);
    int idx = -1;
    int nonzeros = 0;
    for (int r = 0; r < a.dim(); ++r)
        if (entry[r] != 0) {
            ++nonzeros;
            idx = r;
        }
    if (nonzeros == 0)
        return "0";
    if (nonzeros > 1)
        return to_string(a.element(entry));
    const Scalar& c = entry[idx];
    if (idx == 0)
        return format_scalar(c);
    if (c == 1)
        return a.basis_names()[idx];
    if (c == -1)
        return "-" + a.basis_names()[idx];
    return format_scalar(c) + a.basis_names()[idx];
}

}  // namespace

std::string table_markdown(const Algebra& a) {
    std::ostringstream out;
    out << "|";
    for (int m = 0; m < a.dim(); ++m)
        out << " " << a.basis_names()[m] << " |";
    out << "\n|";
    for (int m = 0; m < a.dim(); ++m)
        out << "---|";
    out << "\n";
    for (int i = 1; i < a.dim(); ++i) {
        out << "| " << a.basis_names()[i] << " |";
        for (int j = 1; j < a.dim(); ++j)
            out << " " << cell_text(a, i, j) << " |";
        out << "\n";
    }
    return out.str();
}

std::string table_csv(const Algebra& a) {
    std::ostringstream out;
    for (int m = 0; m < a.dim(); ++m)
        out << (m ? "," : "") << a.basis_names()[m];
    out << "\n";
    for (int i = 1; i < a.dim(); ++i) {
        out << a.basis_names()[i];
        for (int j = 1; j < a.dim(); ++j)
            out << "," << cell_text(a, i, j);
        out << "\n";
    }
    return out.str();
}

namespace {

int run_verify(const KingdonAlgebra& ka, const std::string& suite, uint64_t seed,
               std::ostream& out) {
    std::vector<std::pair<std::string, CheckResult>> results;
    if (suite == "alternativity") {
        results.emplace_back("alternativity (exhaustive basis triples)",
                             check_alternativity(ka.algebra));
    } else if (suite == "moufang") {
        results.emplace_back("moufang (500 seeded triples)", check_moufang(ka.algebra, 500, seed));
        results.emplace_back("diassociativity (100 seeded pairs, words of length <= 4)",
                             check_diassociativity(ka.algebra, 100, seed + 1));
    } else if (suite == "palindromic") {
        results.emplace_back("palindromic relation (uv)w = w(vu)", check_palindromic(ka));
        results.emplace_back("clifford relation uv + vu = B(u,v)", check_clifford_relation(ka));
        results.emplace_back("reduce_word vs table on words of length <= 3",
                             check_reduce_word_agreement(ka));
        if (ka.dim_v() == 3)
            results.emplace_back("volume element forms", forms_of_omega_check(ka));
    } else if (suite == "quadratic") {
        results.emplace_back("x^2 - T(x)x + N(x) = 0 (basis + 200 seeded)",
                             check_quadratic(ka.algebra, 200, seed));
        if (ka.dim_v() == 3) {
            results.emplace_back("norm expansion agreement (basis + 200 seeded)",
                                 check_kingdon_norm_agreement(ka, 200, seed + 1));
            results.emplace_back("norm multiplicativity (500 seeded pairs)",
                                 check_norm_multiplicative(ka, 500, seed + 2));
        }
    } else if (suite == "grading") {
        if (ka.dim_v() != 3)
            throw ParseError("the grading suite needs a 3-dimensional form");
        results.emplace_back("Z/2 grading and main automorphism", grading_check(ka));
    } else if (suite == "fano") {
        AdmissibleTriples adm = admissible_triples(ka);
        results.emplace_back("admissible triples (42 product checks)", adm.verdict);
    } else {
        throw ParseError("unknown suite '" + suite + "'");
    }

    bool all_pass = true;
    for (const auto& [name, res] : results) {
        out << "  " << (res.pass ? "PASS" : "FAIL") << "  " << name << "  [" << res.checks
            << " checks]\n";
        if (!res.pass) {
            out << "        counterexample: " << res.detail << "\n";
            all_pass = false;
        }
    }
    out << (all_pass ? "PASS" : "FAIL") << "\n";
    return all_pass ? 0 : 1;
}

int run_isomorphic(const Signature& sa, const Signature& sb, std::ostream& out) {
    std::string la = iso_class_label(sa), lb = iso_class_label(sb);
    if (sa == sb) {
        out << "yes  identical signatures K" << to_string(sa) << "\n";
        return 0;
    }
    if (la == lb) {
        out << "yes  both have iso class " << la;
        bool explicit_pair = (sa.b0 == 1 && sb.b0 == 1);
        if (explicit_pair) {
            ExplicitIso iso = explicit_iso_111_120();
            out << "; explicit basis isomorphism verified on all 64 products\n";
        } else {
            out << " (identified through the classification table)\n";
        }
        return 0;
    }
    out << "no   iso classes differ: " << la << " vs " << lb << "\n";
    KingdonAlgebra a = build_kingdon(FormedSpace::from_gram(canonical_gram(sa)));
    KingdonAlgebra b = build_kingdon(FormedSpace::from_gram(canonical_gram(sb)));
    size_t na = nucleus_basis(a.algebra).size(), nb = nucleus_basis(b.algebra).size();
    if (na != nb) {
        out << "     nucleus dimensions differ: " << na << " vs " << nb << "\n";
        return 0;
    }
    bool wa = split_complex_witness(a).has_value(), wb = split_complex_witness(b).has_value();
    if (wa != wb) {
        out << "     a traceless square root of 1 exists only in K" << to_string(wa ? sa : sb)
            << "\n";
        return 0;
    }
    bool qa = split_quaternion_witness(a).has_value(), qb = split_quaternion_witness(b).has_value();
    if (qa != qb) {
        out << "     a split-quaternion plane exists only in K" << to_string(qa ? sa : sb) << "\n";
        return 0;
    }
    if (is_simple(a) != is_simple(b))
        out << "     exactly one of the two is simple\n";
    return 0;
}

int run_fano(const KingdonAlgebra& ka, std::ostream& out) {
    AdmissibleTriples adm = admissible_triples(ka);
    const auto& names = ka.algebra->basis_names();
    for (size_t t = 0; t < adm.triples.size(); ++t) {
        const auto& tr = adm.triples[t];
        out << "  (" << names[tr[0]] << ", " << names[tr[1]] << ", " << names[tr[2]] << ")"
            << (t % 3 == 0 ? "" : "  [cyclic]") << "\n";
    }
    out << (adm.verdict.pass ? "PASS" : "FAIL") << "  xy = z and yx = -z for all "
        << adm.verdict.checks << " checks\n";
    if (!adm.verdict.pass)
        out << "  counterexample: " << adm.verdict.detail << "\n";
    return adm.verdict.pass ? 0 : 1;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact construction, verification and classification of the alternative "
                 "Clifford-like (Kingdon) algebras"};
    app.name("kingdon");
    app.require_subcommand(1);

    std::string form, format = "md", suite, gammas, sig_a, sig_b, name;
    uint64_t seed = 0;

    CLI::App* cmd_build = app.add_subcommand("build", "build K(V,B) and emit it as JSON");
    cmd_build->add_option("--form", form, "zero3|oct|split-oct, diag:a,b,c, or a JSON matrix")
        ->required();

    CLI::App* cmd_table = app.add_subcommand("table", "print the structure table");
    cmd_table->add_option("--form", form)->required();
    cmd_table->add_option("--format", format)->check(CLI::IsMember({"md", "csv", "json"}));

    CLI::App* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    cmd_verify->add_option("--form", form)->required();
    cmd_verify->add_option("--suite", suite)
        ->required()
        ->check(CLI::IsMember(
            {"alternativity", "moufang", "palindromic", "quadratic", "grading", "fano"}));
    cmd_verify->add_option("--seed", seed);

    CLI::App* cmd_classify = app.add_subcommand("classify", "signature and iso class of K(V,B)");
    cmd_classify->add_option("--form", form)->required();

    CLI::App* cmd_structure =
        app.add_subcommand("structure", "commutant, nucleus, center, simplicity, zero divisors");
    cmd_structure->add_option("--form", form)->required();
    cmd_structure->add_option("--seed", seed);

    CLI::App* cmd_cd = app.add_subcommand("cd", "iterated Cayley-Dickson doubling, JSON output");
    cmd_cd->add_option("--gammas", gammas, "comma-separated rationals, applied left to right");

    CLI::App* cmd_iso = app.add_subcommand("isomorphic", "compare two signatures");
    cmd_iso->add_option("--a", sig_a, "signature b0,b1,b-1")->required();
    cmd_iso->add_option("--b", sig_b, "signature b0,b1,b-1")->required();

    CLI::App* cmd_fano = app.add_subcommand("fano", "admissible triples of the octonions");
    cmd_fano->add_option("--form", form)->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(cmd_build)) {
            KingdonAlgebra ka = build_kingdon(FormedSpace::from_gram(parse_form(form)));
            out << algebra_to_json(*ka.algebra).dump(2) << "\n";
            return 0;
        }
        if (app.got_subcommand(cmd_table)) {
            KingdonAlgebra ka = build_kingdon(FormedSpace::from_gram(parse_form(form)));
            if (format == "md")
                out << table_markdown(*ka.algebra);
            else if (format == "csv")
                out << table_csv(*ka.algebra);
            else
                out << algebra_to_json(*ka.algebra).dump(2) << "\n";
            return 0;
        }
        if (app.got_subcommand(cmd_verify)) {
            KingdonAlgebra ka = build_kingdon(FormedSpace::from_gram(parse_form(form)));
            out << "suite " << suite << " on " << ka.algebra->name() << " (seed " << seed << ")\n";
            return run_verify(ka, suite, seed, out);
        }
        if (app.got_subcommand(cmd_classify)) {
            Classification c = classify(FormedSpace::from_gram(parse_form(form)));
            out << to_string(c.signature) << " " << c.iso_class << "\n";
            return 0;
        }
        if (app.got_subcommand(cmd_structure)) {
            StructureReport rep = structure_report(FormedSpace::from_gram(parse_form(form)), seed);
            out << structure_report_to_json(rep).dump(2) << "\n";
            return 0;
        }
        if (app.got_subcommand(cmd_cd)) {
            AlgebraPtr a = cd_tower(parse_csv_scalars(gammas));
            out << algebra_to_json(*a).dump(2) << "\n";
            return 0;
        }
        if (app.got_subcommand(cmd_iso))
            return run_isomorphic(parse_signature(sig_a), parse_signature(sig_b), out);
        if (app.got_subcommand(cmd_fano)) {
            std::string f = form.empty() ? "oct" : form;
            KingdonAlgebra ka = build_kingdon(FormedSpace::from_gram(parse_form(f)));
            return run_fano(ka, out);
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const NonSymmetric& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const DimensionTooLarge& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const TowerTooTall& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotOctonions& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace kingdon
