// schemebounds: eigenvalue bounds on independent sets in association-scheme
// graphs, in exact rational arithmetic.
//
// Exit codes: 0 success, 1 validation failure, 2 usage or parse error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "schemebounds/schemebounds.hpp"

namespace {

using namespace schemebounds;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw usage_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Bounds are exact rationals; table mode appends the integer cardinality
// they imply, e.g. "27/2 (<= 13)".
std::string render_value(const Rational& v, bool machine) {
    if (machine || is_integer(v)) return to_string(v);
    return to_string(v) + " (<= " + floor_to_integer(v).str() + ")";
}

std::string render_relations(const RelationSet& rel, bool machine) {
    std::string out;
    for (unsigned i : rel.members()) {
        if (!out.empty()) out += machine ? "," : ", ";
        out += std::to_string(i);
    }
    return machine ? out : "{" + out + "}";
}

std::string render_spectrum(const UnionSpectrum& sp, bool machine) {
    std::string out;
    for (const auto& [value, mult] : sp.pairs) {
        if (!out.empty()) out += machine ? "," : ", ";
        out += to_string(value);
        out += machine ? ":" + mult.str() : " (x" + mult.str() + ")";
    }
    return out;
}

std::string render_vector(const std::vector<Rational>& v) {
    std::string out;
    for (const Rational& x : v) {
        if (!out.empty()) out += ",";
        out += to_string(x);
    }
    return out;
}

void print_row(const std::string& key, const std::string& value, bool machine) {
    if (machine) {
        std::cout << key << " " << value << "\n";
    } else {
        std::cout << key << std::string(key.size() < 15 ? 15 - key.size() : 1, ' ') << value
                  << "\n";
    }
}

SchemeParameters load_validated(const std::string& path) {
    const SchemeParameters s = parse_scheme_text(read_file(path));
    const ValidationReport rep = validate_parameters(s);
    if (!rep.passed()) {
        for (const ValidationIssue& f : rep.failures) {
            std::cerr << "invalid: " << f.check << ": " << f.detail << "\n";
        }
        std::exit(kExitInvalid);
    }
    return s;
}

RelationSet make_relations(const std::vector<unsigned>& raw, std::size_t classes) {
    const RelationSet rel(raw);
    if (rel.max_index() > classes) {
        throw usage_error("relation index " + std::to_string(rel.max_index()) +
                          " out of range; scheme has classes 1.." + std::to_string(classes));
    }
    return rel;
}

struct FamilyRequest {
    std::string family;
    unsigned t = 0, q = 0, d = 0, n = 0;
};

SchemeFamily family_of(const std::string& name) {
    const std::optional<SchemeFamily> fam = parse_family(name);
    if (!fam) throw usage_error("unknown family '" + name + "'");
    return *fam;
}

SchemeParameters build_family(const FamilyRequest& r) {
    switch (family_of(r.family)) {
        case SchemeFamily::cameron_seidel:
            if (r.t < 1) throw usage_error("cameron-seidel requires --t >= 1");
            return cameron_seidel(r.t);
        case SchemeFamily::gq:
            if (r.q < 2) throw usage_error("gq requires --q >= 2");
            if (!is_prime_power(r.q)) {
                std::cerr << "warning: q = " << r.q
                          << " is not a prime power; these are feasible parameters of a"
                             " geometry that does not exist\n";
            }
            return gq_point_graph(r.q);
        case SchemeFamily::hamming:
            if (r.d < 1) throw usage_error("hamming requires --d >= 1");
            return hamming(r.d);
        case SchemeFamily::complete:
            if (r.n < 2) throw usage_error("complete requires --n >= 2");
            return complete_graph(r.n);
        case SchemeFamily::pentagon:
            throw usage_error(
                "the pentagon has irrational eigenvalues and no rational eigenmatrix pair;"
                " it is available only through the alpha command");
    }
    throw usage_error("unknown family '" + r.family + "'");
}

void print_family_summary(const SchemeParameters& s, bool machine) {
    print_row("name", s.name, machine);
    print_row("classes", std::to_string(s.classes), machine);
    print_row("order", s.order.str(), machine);
    std::vector<Rational> k, f;
    for (std::size_t i = 0; i <= s.classes; ++i) {
        k.push_back(s.valency(i));
        f.push_back(s.multiplicity(i));
    }
    print_row("valencies", render_vector(k), machine);
    print_row("multiplicities", render_vector(f), machine);
}

int cmd_family(const FamilyRequest& req, const std::string& out_path, bool machine) {
    const SchemeParameters s = build_family(req);
    const ValidationReport rep = validate_parameters(s);
    if (!rep.passed()) {
        for (const ValidationIssue& f : rep.failures) {
            std::cerr << "invalid: " << f.check << ": " << f.detail << "\n";
        }
        return kExitInvalid;
    }
    const std::string text = write_scheme_text(s);
    if (out_path.empty()) {
        std::cout << text;
        std::cerr << "name " << s.name << ", classes " << s.classes << ", order "
                  << s.order.str() << "\n";
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw usage_error("cannot write '" + out_path + "'");
        out << text;
        print_family_summary(s, machine);
    }
    return kExitOk;
}

int cmd_validate(const std::string& path) {
    const SchemeParameters s = parse_scheme_text(read_file(path));
    const ValidationReport rep = validate_parameters(s);
    for (const ValidationIssue& w : rep.warnings) {
        std::cerr << "warning: " << w.check << ": " << w.detail << "\n";
    }
    if (!rep.passed()) {
        for (const ValidationIssue& f : rep.failures) {
            std::cout << "failed: " << f.check << ": " << f.detail << "\n";
        }
        return kExitInvalid;
    }
    std::cout << "ok: " << s.name << " satisfies all parameter identities\n";
    return kExitOk;
}

int cmd_bounds(const std::string& path, const std::vector<unsigned>& raw, bool machine) {
    const SchemeParameters s = load_validated(path);
    const RelationSet rel = make_relations(raw, s.classes);
    const BoundsReport r = bounds_report(s, rel);
    print_row("scheme", r.scheme_name, machine);
    print_row("relations", render_relations(rel, machine), machine);
    print_row("order", r.n.str(), machine);
    print_row("valency", to_string(r.spectrum.valency), machine);
    print_row("lp", render_value(r.lp_bound, machine), machine);
    print_row("inertia", r.inertia.str(), machine);
    print_row("ratio", render_value(r.ratio, machine), machine);
    print_row("spectrum", render_spectrum(r.spectrum, machine), machine);
    return kExitOk;
}

int cmd_lp(const std::string& path, const std::vector<unsigned>& raw, bool machine) {
    const SchemeParameters s = load_validated(path);
    const RelationSet rel = make_relations(raw, s.classes);
    const DelsarteOptimum opt = delsarte_lp_bound(s, rel);
    print_row("scheme", s.name, machine);
    print_row("relations", render_relations(rel, machine), machine);
    print_row("optimum", render_value(opt.value, machine), machine);
    print_row("optimizer", render_vector(opt.distribution), machine);
    std::string tight;
    for (std::size_t j : opt.tight) {
        if (!tight.empty()) tight += machine ? "," : ", ";
        tight += std::to_string(j);
    }
    print_row("tight", machine ? tight : "{" + tight + "}", machine);
    print_row("dual", render_vector(opt.dual), machine);
    return kExitOk;
}

int cmd_alpha(const FamilyRequest& req, const std::vector<unsigned>& raw, bool machine) {
    const SchemeFamily fam = family_of(req.family);
    ExplicitScheme e;
    switch (fam) {
        case SchemeFamily::hamming:
            if (req.d < 1 || req.d > 6) throw usage_error("alpha hamming requires 1 <= --d <= 6");
            e = hamming_matrices(req.d);
            break;
        case SchemeFamily::complete:
            if (req.n < 2 || req.n > 64) {
                throw usage_error("alpha complete requires 2 <= --n <= 64");
            }
            e = complete_graph_matrices(req.n);
            break;
        case SchemeFamily::pentagon:
            e = pentagon_matrices();
            break;
        case SchemeFamily::cameron_seidel:
        case SchemeFamily::gq:
            throw usage_error("no explicit realization of '" + req.family +
                              "' is bundled; alpha supports hamming, complete, pentagon");
    }
    const RelationSet rel = make_relations(raw, e.classes());
    const std::size_t alpha = brute_force_alpha(e, rel);
    print_row("alpha", std::to_string(alpha), machine);
    if (fam == SchemeFamily::pentagon) {
        std::cerr << "note: the pentagon's eigenvalues are irrational, so the exact"
                     " parameter bounds are not defined here\n";
        return kExitOk;
    }
    const SchemeParameters s = fam == SchemeFamily::hamming ? hamming(req.d)
                                                            : complete_graph(req.n);
    const BoundsReport r = bounds_report(s, rel);
    if (machine) {
        print_row("inertia", r.inertia.str(), true);
        print_row("ratio", to_string(r.ratio), true);
        print_row("lp", to_string(r.lp_bound), true);
    } else {
        std::cout << "alpha " << alpha << " <= inertia " << r.inertia.str() << " / ratio "
                  << render_value(r.ratio, false) << " / lp " << render_value(r.lp_bound, false)
                  << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact eigenvalue bounds on independent sets in association-scheme graphs"};
    app.require_subcommand(1);

    FamilyRequest req;
    std::string out_path;
    std::string file_path;
    std::vector<unsigned> relations;
    bool machine = false;

    const auto add_family_flags = [&](CLI::App* cmd) {
        cmd->add_option("family", req.family, "cameron-seidel | gq | hamming | complete | pentagon")
            ->required();
        cmd->add_option("--t", req.t, "cameron-seidel parameter");
        cmd->add_option("--q", req.q, "gq order");
        cmd->add_option("--d", req.d, "hamming length");
        cmd->add_option("--n", req.n, "complete graph size");
    };
    const auto add_relations_flag = [&](CLI::App* cmd) {
        cmd->add_option("--relations", relations, "relation indices, e.g. 1,3")
            ->required()
            ->delimiter(',');
    };

    CLI::App* family = app.add_subcommand("family", "emit a built-in scheme's parameter file");
    add_family_flags(family);
    family->add_option("--out", out_path, "write the file here instead of stdout");
    family->add_flag("--machine", machine, "plain key-value output");

    CLI::App* validate = app.add_subcommand("validate", "check a scheme file's identities");
    validate->add_option("file", file_path, "scheme file")->required();

    CLI::App* bounds = app.add_subcommand("bounds", "lp, inertia, and ratio bounds");
    bounds->add_option("file", file_path, "scheme file")->required();
    add_relations_flag(bounds);
    bounds->add_flag("--machine", machine, "plain key-value output, exact rationals only");

    CLI::App* lp = app.add_subcommand("lp", "Delsarte optimum with optimizer and certificate");
    lp->add_option("file", file_path, "scheme file")->required();
    add_relations_flag(lp);
    lp->add_flag("--machine", machine, "plain key-value output, exact rationals only");

    CLI::App* alpha = app.add_subcommand("alpha", "exact independence number of a fixture");
    add_family_flags(alpha);
    add_relations_flag(alpha);
    alpha->add_flag("--machine", machine, "plain key-value output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (family->parsed()) return cmd_family(req, out_path, machine);
        if (validate->parsed()) return cmd_validate(file_path);
        if (bounds->parsed()) return cmd_bounds(file_path, relations, machine);
        if (lp->parsed()) return cmd_lp(file_path, relations, machine);
        if (alpha->parsed()) return cmd_alpha(req, relations, machine);
    } catch (const singular_matrix_error& e) {
        std::cerr << "invalid: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const scheme_parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
