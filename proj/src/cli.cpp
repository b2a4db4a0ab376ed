#include "lscat/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "lscat/category_engine.hpp"
#include "lscat/cohomology_ring.hpp"
#include "lscat/delta_complex.hpp"
#include "lscat/error.hpp"
#include "lscat/exact_algebra.hpp"
#include "lscat/manifold_algebra.hpp"
#include "lscat/pi1.hpp"

namespace lscat::cli {

namespace {

const char* const kGrammar =
    "expressions: summand (\" # \" summand)*, summand one of S3, S1xS2, S1~S2, T3, RP2xS1, RP3, Q8, Poinc, L(p,q)";

// Usage mistakes detected after CLI11 has parsed the arguments.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Input {
    std::string text;
    bool is_file = false;

    std::string space() const { return is_file ? "file:" + text : text; }
};

Input classify_input(const std::string& text, const std::string& format) {
    if (format == "dcx") return {text, true};
    if (format == "expr") return {text, false};
    const bool file = std::filesystem::is_regular_file(text) ||
                      (text.size() > 4 && text.compare(text.size() - 4, 4, ".dcx") == 0);
    return {text, file};
}

DeltaComplex load_complex(const Input& in) {
    if (in.is_file) return read_dcx_file(in.text);
    return triangulate_expr(normalize(parse_expr(in.text)));
}

ManifoldExpr need_expr(const Input& in, const std::string& verb) {
    if (in.is_file) throw UsageError(verb + " needs a manifold expression, not a file");
    return normalize(parse_expr(in.text));
}

std::uint32_t modulus(int coeffs, bool allow_integral) {
    if (coeffs == 0 && allow_integral) return 0;
    if (coeffs < 2 || coeffs > 65535) {
        throw UsageError("--coeffs must be in [2, 65535]" + std::string(allow_integral ? " or 0 for Z" : ""));
    }
    return static_cast<std::uint32_t>(coeffs);
}

int report_certificate(const Certificate& cert, bool show, bool verify, int jobs, std::ostream& out) {
    if (show) out << cert.to_text();
    if (!verify) return kOk;
    const CheckReport r = check_certificate(cert, jobs);
    if (!r.ok) {
        out << "certificate REJECTED\n";
        for (const auto& e : r.errors) out << "  error: " << e << '\n';
        return kCertificate;
    }
    out << "certificate verified (" << cert.premises.size() << " premises recomputed, " << r.catalog_facts.size()
        << " catalog facts)\n";
    for (const auto& f : r.catalog_facts) out << "  catalog fact: " << f << '\n';
    return kOk;
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct Options {
    std::vector<std::string> inputs;
    std::string format = "auto";
    int coeffs = 2;
    int n = 1;
    int jobs = 1;
    bool cert = false;
    bool verify = false;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lusternik-Schnirelmann category of closed 3-manifolds", "lscat"};
    app.require_subcommand(1);
    Options o;

    auto input_opt = [&](CLI::App* sub, const std::string& what) {
        sub->add_option("input", o.inputs, what)->required()->expected(1);
        sub->add_option("--format", o.format, "input kind")
            ->check(CLI::IsMember({"auto", "expr", "dcx"}))
            ->capture_default_str();
    };
    auto cert_opts = [&](CLI::App* sub) {
        sub->add_flag("--cert", o.cert, "print the full certificate");
        sub->add_flag("--verify", o.verify, "re-check the certificate");
        sub->add_option("--jobs", o.jobs, "parallel premise checks")->check(CLI::Range(1, 64));
    };

    auto* cat = app.add_subcommand("cat", "category with upper and lower traces");
    input_opt(cat, "expression or DCX file");
    cert_opts(cat);
    auto* detect = app.add_subcommand("detect", "detecting-element verdict");
    input_opt(detect, "expression or DCX file");
    auto* ganea = app.add_subcommand("ganea", "verify cat(M x S^n) = cat(M) + 1");
    input_opt(ganea, "expression");
    ganea->add_option("--n", o.n, "sphere dimension")->check(CLI::Range(1, 64))->capture_default_str();
    cert_opts(ganea);
    auto* homology_cmd = app.add_subcommand("homology", "homology groups");
    input_opt(homology_cmd, "expression or DCX file");
    homology_cmd->add_option("--coeffs", o.coeffs, "modulus, 0 for Z");
    auto* ring = app.add_subcommand("ring", "cohomology ring table over Z/p");
    input_opt(ring, "expression or DCX file");
    ring->add_option("--coeffs", o.coeffs, "prime modulus")->capture_default_str();
    auto* cuplength = app.add_subcommand("cuplength", "cup-length with witness");
    input_opt(cuplength, "expression or DCX file");
    cuplength->add_option("--coeffs", o.coeffs, "prime modulus")->capture_default_str();
    auto* pi1 = app.add_subcommand("pi1", "fundamental group presentation and class");
    input_opt(pi1, "expression or DCX file");
    auto* degree1 = app.add_subcommand("degree1", "consequences of a degree-one map source -> target");
    degree1->add_option("manifolds", o.inputs, "source and target expressions")->required()->expected(2);
    auto* check = app.add_subcommand("check", "check a certificate file");
    check->add_option("file", o.inputs, "certificate file")->required()->expected(1);
    check->add_option("--jobs", o.jobs, "parallel premise checks")->check(CLI::Range(1, 64));
    auto* gen = app.add_subcommand("gen", "print a generator triangulation as DCX");
    gen->add_option("name", o.inputs, "generator name then integer parameters, or an expression")
        ->required()
        ->expected(1, 3);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n' << kGrammar << '\n' << "run with --help for the command list\n";
        return kUsage;
    }

    try {
        const auto in = [&] { return classify_input(o.inputs.at(0), o.format); };
        if (cat->parsed()) {
            const Input i = in();
            const CatResult r = i.is_file ? ls_category(read_dcx_file(i.text), i.space()) : ls_category(need_expr(i, "cat"));
            out << format_summary(r.cert);
            return report_certificate(r.cert, o.cert, o.verify, o.jobs, out);
        }
        if (detect->parsed()) {
            const Input i = in();
            const Detection d =
                i.is_file ? ls_category(read_dcx_file(i.text), i.space()).detect : detectability(need_expr(i, "detect"));
            out << format_detection(d);
            return kOk;
        }
        if (ganea->parsed()) {
            const CatResult r = verify_ganea(need_expr(in(), "ganea"), o.n);
            out << format_summary(r.cert, "cat(M x S^" + std::to_string(o.n) + ")");
            return report_certificate(r.cert, o.cert, o.verify, o.jobs, out);
        }
        if (homology_cmd->parsed()) {
            const bool given = homology_cmd->count("--coeffs") > 0;
            out << homology(load_complex(in()), given ? modulus(o.coeffs, true) : 0).to_string();
            return kOk;
        }
        if (ring->parsed()) {
            out << format_ring(ring_table(load_complex(in()), modulus(o.coeffs, false)));
            return kOk;
        }
        if (cuplength->parsed()) {
            const CohomologyRing table = ring_table(load_complex(in()), modulus(o.coeffs, false));
            const CupLengthWitness w = cup_length(table);
            out << "cl = " << w.length << '\n';
            if (w.length > 0) out << "witness: " << format_witness(table, w) << '\n';
            return kOk;
        }
        if (pi1->parsed()) {
            const Input i = in();
            if (!i.is_file) {
                const ManifoldExpr e = normalize(parse_expr(i.text));
                out << "catalog: " << facts(e).pi1_text() << '\n';
                if (!facts(e).triangulable) return kOk;
            }
            const GroupPresentation p = tietze_simplify(edge_path_presentation(load_complex(i)));
            const Pi1Class c = classify(p);
            out << "presentation: " << p.to_string() << '\n';
            out << "class: " << c.to_string() << '\n';
            out << "evidence: " << c.evidence << '\n';
            return kOk;
        }
        if (degree1->parsed()) {
            const auto r = degree_one_consequences(parse_expr(o.inputs.at(0)), parse_expr(o.inputs.at(1)));
            out << (r.verdict == DegreeOneVerdict::Consistent ? "Consistent" : "NoDegreeOneMap") << '\n';
            out << "  cat(source) = " << r.cat_source << ", cat(target) = " << r.cat_target << '\n';
            out << "  " << r.explanation << '\n';
            return kOk;
        }
        if (check->parsed()) {
            Certificate c;
            try {
                // Saved `cat --cert` output starts with the summary lines; skip them.
                std::string text = read_text(o.inputs.at(0));
                if (text.rfind("certificate ", 0) != 0) {
                    const auto at = text.find("\ncertificate ");
                    if (at != std::string::npos) text.erase(0, at + 1);
                }
                c = parse_certificate(text);
            } catch (const lscat::ParseError& e) {
                out << "certificate REJECTED\n  error: " << e.what() << '\n';
                return kCertificate;
            }
            out << "subject: " << c.subject << '\n';
            return report_certificate(c, false, true, o.jobs, out);
        }
        if (gen->parsed()) {
            const std::string& name = o.inputs.at(0);
            if (name.find_first_of("(# ") != std::string::npos) {
                if (o.inputs.size() > 1) throw UsageError("gen: parameters go inside the expression");
                write_dcx(out, triangulate_expr(normalize(parse_expr(name))));
                return kOk;
            }
            std::vector<int> params;
            for (std::size_t k = 1; k < o.inputs.size(); ++k) {
                try {
                    std::size_t used = 0;
                    params.push_back(std::stoi(o.inputs[k], &used));
                    if (used != o.inputs[k].size()) throw std::invalid_argument("trailing");
                } catch (const std::logic_error&) {
                    throw UsageError("gen: parameter '" + o.inputs[k] + "' is not an integer");
                }
            }
            write_dcx(out, generator(name, params));
            return kOk;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const lscat::ParseError& e) {
        err << "parse error: " << e.what() << '\n' << kGrammar << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kComputation;
    }
    return kUsage;
}

}  // namespace lscat::cli
