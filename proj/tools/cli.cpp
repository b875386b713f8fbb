#include "cli.hpp"

#include <CLI11.hpp>

#include <regex>
#include <sstream>

#include "bca/dimension.hpp"
#include "bca/errors.hpp"
#include "bca/relation_enumeration.hpp"
#include "bca/text_format.hpp"
#include "bca/topology.hpp"
#include "bca/weight.hpp"

namespace bca::cli {
namespace {

struct Options {
    int cap_atoms = kDefaultAtomCap;
    std::string close;
    int max_n = kDefaultDimensionCap;
    std::string subset;
    bool allow_invalid = false;
    std::string at;
    int search_atoms = 3;
    std::string contact_class = "reflexive-symmetric";
    std::vector<std::string> files;
    std::string space_kind;
};

std::string join_masks(const std::vector<Mask>& xs) {
    std::string out;
    for (Mask x : xs) {
        if (!out.empty()) out += ' ';
        out += format_atoms(x);
    }
    return out;
}

std::string join_elements(const std::vector<Element>& xs) {
    std::vector<Mask> masks;
    for (const Element& e : xs) masks.push_back(e.atoms);
    return join_masks(masks);
}

/// Accumulates PROP lines and remembers whether any failed.
class Report {
  public:
    explicit Report(std::ostream& out) : out_(out) {}

    void prop(std::string_view name, bool pass, const std::string& detail = {}) {
        out_ << "PROP " << name << (pass ? " PASS" : " FAIL");
        if (!detail.empty()) out_ << ' ' << detail;
        out_ << '\n';
        failed_ = failed_ || !pass;
    }
    int status() const { return failed_ ? kPropertyFailure : kOk; }

  private:
    std::ostream& out_;
    bool failed_ = false;
};

LocalContactAlgebra load_algebra(const std::string& path, const Options& opt) {
    if (!opt.close.empty() && opt.close != "rs") throw InputError("--close accepts only 'rs'");
    AlgebraText parsed = parse_algebra_text(read_text_file(path), opt.cap_atoms);
    return build_lca(parsed, opt.close == "rs", opt.cap_atoms);
}

FiniteSpace load_space(const std::string& path) { return parse_space_text(read_text_file(path)); }

/// "{} {0} {0,1}" -> elements of the algebra.
std::vector<Element> parse_subset(const std::string& text, const FiniteBooleanAlgebra& algebra) {
    static const std::regex set_re(R"(\{[^}]*\})");
    std::vector<Element> out;
    std::string rest = text;
    for (std::sregex_iterator it(text.begin(), text.end(), set_re), end; it != end; ++it) {
        out.push_back(algebra.element(parse_atoms(it->str(), algebra.atom_count())));
        rest.replace(static_cast<std::size_t>(it->position()), static_cast<std::size_t>(it->length()),
                     static_cast<std::size_t>(it->length()), ' ');
    }
    if (rest.find_first_not_of(" \t,;") != std::string::npos) throw InputError("--subset: expected atom sets like {0,1}");
    return out;
}

std::string_view strongest_bundle(const ContactStructure& ca) {
    for (Bundle b : {Bundle::normal, Bundle::extensional, Bundle::contact, Bundle::precontact})
        if (ca.satisfies(b)) return bundle_name(b);
    return "none";
}

int cmd_check(const Options& opt, std::ostream& out) {
    LocalContactAlgebra lca = load_algebra(opt.files.at(0), opt);
    Report report(out);
    for (Axiom a : kAllAxioms) {
        const AxiomVerdict& v = lca.ca().verdict(a);
        report.prop(axiom_name(a), v.holds, join_elements(v.witness));
    }
    out << "bundle = " << strongest_bundle(lca.ca()) << '\n';
    const LawVerdict& v = lca.verdict();
    report.prop("LCA", v.holds, v.holds ? std::string{} : v.law + (v.witness.empty() ? "" : " " + join_elements(v.witness)));
    return report.status();
}

int cmd_dim(const Options& opt, std::ostream& out) {
    LocalContactAlgebra lca = load_algebra(opt.files.at(0), opt);
    if (opt.max_n < -1) throw InputError("--max-n must be at least -1");
    DimensionQuery q = opt.subset.empty()
                           ? DimensionQuery::full(lca.ca(), opt.max_n)
                           : DimensionQuery::over(lca.ca(), parse_subset(opt.subset, lca.algebra()), opt.max_n);
    DimResult r = dim_a(q);
    bool witness_shown = false;
    for (int n = -1; n <= opt.max_n; ++n) {
        bool holds = r.verdicts[static_cast<std::size_t>(n + 1)];
        out << "dim_leq(" << n << ") = " << (holds ? "true" : "false") << '\n';
        if (!holds && n >= 0 && !witness_shown) {
            DimVerdict v = dim_leq(q, n);
            out << "counterexample n=" << n << " a=" << join_elements(v.a) << " b=" << join_elements(v.b) << '\n';
            witness_shown = true;
        }
    }
    out << "dim_a = " << r.to_string() << '\n';
    if (r.non_monotone.empty()) return kOk;
    Report report(out);
    std::ostringstream pairs;
    for (auto [a, b] : r.non_monotone) pairs << '(' << a << ',' << b << ')';
    report.prop("dim-monotone", false, pairs.str());
    return report.status();
}

int cmd_weight(const Options& opt, std::ostream& out) {
    LocalContactAlgebra lca = load_algebra(opt.files.at(0), opt);
    if (lca.is_valid()) {
        BaseResult r = weight_w_a(lca);
        out << "w_a = " << r.cardinality << '\n' << "base = " << join_elements(r.witness) << '\n';
        return kOk;
    }
    if (!opt.allow_invalid)
        throw InputError("w_a is defined for valid LCAs only (" + lca.verdict().law +
                         " fails); --allow-invalid reports the minimum base instead");
    BaseResult r = minimum_base(lca);
    out << "note: not a valid LCA (" << lca.verdict().law << " fails)\n";
    out << "minimum_base = " << r.cardinality << '\n' << "base = " << join_elements(r.witness) << '\n';
    return kOk;
}

int cmd_piweight(const Options& opt, std::ostream& out) {
    LocalContactAlgebra lca = load_algebra(opt.files.at(0), opt);
    DenseSetResult r = pi_weight_a(lca);
    out << "pi_w_a = " << r.cardinality << '\n' << "dense = " << join_elements(r.witness) << '\n';
    return kOk;
}

int cmd_product(const Options& opt, std::ostream& out) {
    std::vector<LocalContactAlgebra> factors;
    for (const auto& f : opt.files) factors.push_back(load_algebra(f, opt));
    out << emit_algebra(product_lca(factors).product);
    return kOk;
}

int cmd_relative(const Options& opt, std::ostream& out) {
    LocalContactAlgebra lca = load_algebra(opt.files.at(0), opt);
    Mask m = parse_atoms(opt.at, lca.atom_count());
    out << emit_algebra(relative_lca(lca, m).lca);
    return kOk;
}

void emit_atom_dictionary(std::ostream& out, const std::vector<Mask>& atom_sets) {
    for (std::size_t i = 0; i < atom_sets.size(); ++i)
        out << "# atom " << i << " = " << format_atoms(atom_sets[i]) << '\n';
}

std::string dim_text(std::optional<int> d) { return d ? std::to_string(*d) : "> " + std::to_string(kDefaultPointCap); }

int cmd_space(const Options& opt, std::ostream& out) {
    const std::string& kind = opt.space_kind;
    FiniteSpace x = load_space(opt.files.at(0));
    if (kind == "rc" || (kind == "lambda-t" && opt.files.size() == 1)) {
        RcAlgebra rc = rc_algebra(x);
        emit_atom_dictionary(out, rc.atom_sets);
        out << emit_algebra(rc.lca);
        return kOk;
    }
    if (kind == "ro") {
        RoAlgebra ro = ro_algebra(rc_algebra(x));
        emit_atom_dictionary(out, ro.atom_sets);
        out << emit_algebra(LocalContactAlgebra(ro.ca));
        return kOk;
    }
    if (kind == "dim") {
        out << "dim_cl = " << dim_text(dim_cl(x)) << '\n';
        return kOk;
    }
    if (kind == "weight" || kind == "piweight") {
        SpaceWeight w = kind == "weight" ? weight_of_space(x) : pi_weight_of_space(x);
        out << (kind == "weight" ? "w = " : "pi_w = ") << w.cardinality << '\n';
        out << "base = " << join_masks(w.witness) << '\n';
        return kOk;
    }
    if (kind == "connected") {
        out << "connected = " << (is_connected_space(x) ? "true" : "false") << '\n';
        return kOk;
    }
    if (kind == "lambda-t") {
        if (opt.files.size() != 3) throw InputError("space lambda-t <source> [<map> <target>]");
        FiniteSpace y = load_space(opt.files[2]);
        ContinuousMap f(x, y, parse_map_text(read_text_file(opt.files[1])));
        RcAlgebra rx = rc_algebra(x), ry = rc_algebra(y);
        LcaMorphismTable t = lambda_t_map(f, rx, ry);
        for (Mask g = 0; g <= ry.lca.universe(); ++g)
            out << "lambda_t " << format_atoms(ry.element_sets[g]) << " -> " << format_atoms(rx.element_sets[t(g)]) << '\n';
        Report report(out);
        LawVerdict v = check_dhlc_morphism(t);
        report.prop("DHLC", v.holds, v.holds ? std::string{} : v.law + " " + join_elements(v.witness));
        return report.status();
    }
    throw InputError("unknown space command '" + kind + "'");
}

int cmd_search(const Options& opt, std::ostream& out) {
    RelationClass cls;
    if (opt.contact_class == "reflexive-symmetric")
        cls = RelationClass::reflexive_symmetric;
    else if (opt.contact_class == "all")
        cls = RelationClass::all;
    else
        throw InputError("--contact-class must be reflexive-symmetric or all");
    if (opt.search_atoms > opt.cap_atoms) throw InputError("--atoms exceeds --cap-atoms");
    out << "# relation\tbundle\tlca\tdim_a\tmin_base\n";
    for (const auto& rows : enumerate_relations(opt.search_atoms, cls)) {
        ContactStructure ca(FiniteBooleanAlgebra(opt.search_atoms), rows);
        LocalContactAlgebra lca(ca);
        std::string rel;
        for (Mask r : rows) rel += (rel.empty() ? "" : "/") + format_atoms(r);
        out << (rel.empty() ? "-" : rel) << '\t' << strongest_bundle(ca) << '\t' << (lca.is_valid() ? "valid" : "invalid")
            << '\t' << dim_a(DimensionQuery::full(ca, opt.max_n)).to_string() << '\t'
            << minimum_base(lca).cardinality << '\n';
    }
    return kOk;
}

int cmd_crosscheck(const Options& opt, std::ostream& out) {
    FiniteSpace x = load_space(opt.files.at(0));
    Report report(out);
    RcAlgebra rc = rc_algebra(x);
    const LocalContactAlgebra& lca = rc.lca;

    RoAlgebra ro = ro_algebra(rc);
    report.prop("ro-rc-isomorphism", is_ca_isomorphism(ro.nu, ro.ca, lca.ca()));

    bool space_conn = is_connected_space(x);
    bool alg_conn = is_connected(lca.ca());
    report.prop("connectedness", space_conn == alg_conn,
                std::string("space=") + (space_conn ? "true" : "false") + " algebra=" + (alg_conn ? "true" : "false"));

    report.prop("lambda-t-identity", lambda_t_map(ContinuousMap::identity(x), rc, rc) == LcaMorphismTable::identity(lca));

    if (x.is_t1()) {
        std::optional<int> top = dim_cl(x);
        DimResult alg = dim_a(lca);
        report.prop("dimension", top == alg.value, "dim_cl=" + dim_text(top) + " dim_a=" + alg.to_string());
        RegularShrinkingReport rs = regular_shrinking_dim_check(x, 0);
        bool expect = top.has_value() && *top <= 0;
        report.prop("regular-shrinking", rs.shrinking_predicate == expect && rs.interior_predicate == expect);
        report.prop("zero-dim-criterion", zero_dim_criterion(lca) == expect);
    } else {
        out << "NOTE dimension checks skipped: space is not T1\n";
    }

    if (is_pi_semiregular(x)) {
        std::size_t top = pi_weight_of_space(x).cardinality;
        std::size_t alg = pi_weight_a(lca.algebra()).cardinality;
        report.prop("pi-weight", top == alg, "pi_w=" + std::to_string(top) + " pi_w_a=" + std::to_string(alg));
    } else {
        out << "NOTE pi-weight check skipped: space is not pi-semiregular\n";
    }

    out << "w = " << weight_of_space(x).cardinality << '\n';
    if (lca.is_valid())
        out << "w_a = " << weight_w_a(lca).cardinality << '\n';
    else
        out << "NOTE w_a undefined: " << lca.verdict().law << " fails\n";
    return report.status();
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite contact algebras, local contact algebras and finite spaces"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--cap-atoms", opt.cap_atoms, "Largest accepted atom count")->check(CLI::Range(0, 62));
    app.add_option("--close", opt.close, "Close contact pairs: 'rs' adds reflexive and symmetric pairs");

    auto* check = app.add_subcommand("check", "Contact axioms, way-below axioms and LCA axioms");
    check->add_option("algebra", opt.files)->required()->expected(1);

    auto* dim = app.add_subcommand("dim", "Algebraic dimension");
    dim->add_option("algebra", opt.files)->required()->expected(1);
    dim->add_option("--max-n", opt.max_n, "Largest n tested");
    dim->add_option("--subset", opt.subset, "Quantifier set D as atom sets, e.g. \"{} {0} {0,1}\"");

    auto* weight = app.add_subcommand("weight", "Algebraic weight w_a");
    weight->add_option("algebra", opt.files)->required()->expected(1);
    weight->add_flag("--allow-invalid", opt.allow_invalid, "Report the minimum base of an invalid LCA");

    auto* piweight = app.add_subcommand("piweight", "Algebraic pi-weight");
    piweight->add_option("algebra", opt.files)->required()->expected(1);

    auto* product = app.add_subcommand("product", "Product of LCAs, as an algebra file");
    product->add_option("algebras", opt.files)->required();

    auto* relative = app.add_subcommand("relative", "Relative LCA at an element, as an algebra file");
    relative->add_option("algebra", opt.files)->required()->expected(1);
    relative->add_option("--at", opt.at, "Element as an atom set")->required();

    auto* space = app.add_subcommand("space", "Finite space computations");
    space->add_option("kind", opt.space_kind)
        ->required()
        ->check(CLI::IsMember({"rc", "ro", "dim", "weight", "piweight", "connected", "lambda-t"}));
    space->add_option("files", opt.files, "Space file; lambda-t also takes <map> <target>")->required();

    auto* search = app.add_subcommand("search", "Tabulate all atom relations up to relabelling");
    search->add_option("--atoms", opt.search_atoms, "Atom count")->check(CLI::Range(0, 6));
    search->add_option("--contact-class", opt.contact_class, "reflexive-symmetric or all");
    search->add_option("--max-n", opt.max_n, "Largest n tested");

    auto* crosscheck = app.add_subcommand("crosscheck", "Space against its regular closed algebra");
    crosscheck->add_option("space", opt.files)->required()->expected(1);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (check->parsed()) return cmd_check(opt, out);
        if (dim->parsed()) return cmd_dim(opt, out);
        if (weight->parsed()) return cmd_weight(opt, out);
        if (piweight->parsed()) return cmd_piweight(opt, out);
        if (product->parsed()) return cmd_product(opt, out);
        if (relative->parsed()) return cmd_relative(opt, out);
        if (space->parsed()) return cmd_space(opt, out);
        if (search->parsed()) return cmd_search(opt, out);
        if (crosscheck->parsed()) return cmd_crosscheck(opt, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const InternalInconsistency& e) {
        out << "PROP internal FAIL " << e.what() << '\n';
        err << "internal inconsistency: " << e.what() << '\n';
        return kPropertyFailure;
    }
    return kInputError;
}

} // namespace bca::cli
