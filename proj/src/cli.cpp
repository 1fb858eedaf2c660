#include "corings/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <regex>

#include "CLI11.hpp"

namespace corings::cli {

namespace {

struct Report {
    explicit Report(std::string name) : command(std::move(name)) {}

    std::string command;
    std::vector<std::string> prose;
    ValidationReport checks;
    bool undecided = false;
    json result = json::object();

    std::string status() const {
        if (!checks.ok()) return "fail";
        return undecided ? "undecided" : "pass";
    }
    int exit_code() const {
        if (!checks.ok()) return exit_fail;
        return undecided ? exit_undecided : exit_pass;
    }
    json machine() const {
        json cs = json::array();
        for (const auto& c : checks.checks()) {
            const char* s = c.status == CheckStatus::pass ? "pass" : c.status == CheckStatus::fail ? "fail" : "skipped";
            cs.push_back({{"name", c.name}, {"status", s}, {"witness", c.witness}});
        }
        return {{"command", command}, {"status", status()}, {"checks", cs}, {"result", result}};
    }
    void print(std::ostream& out, double millis) const {
        out << command << "\n";
        for (const auto& line : prose) out << "  " << line << "\n";
        for (const auto& c : checks.checks()) {
            out << "  [" << (c.status == CheckStatus::pass ? "pass" : c.status == CheckStatus::fail ? "FAIL" : "SKIP")
                << "] " << c.name;
            if (!c.witness.empty()) out << ": " << c.witness;
            out << "\n";
        }
        out << "status: " << status() << " (" << static_cast<long long>(millis) << " ms)\n";
        out << "=== machine ===\n" << machine().dump(2) << "\n";
    }
};

struct Options {
    std::uint64_t budget = default_budget().max_points;
    std::uint64_t seed = 0;
    bool cross_check = false;
};

json certainty_json(const Certainty& c) {
    return {{"deterministic", c.deterministic}, {"failure-bound", c.failure_bound}};
}

// Shared reporting of an inner / kernel-membership result, with the optional
// cross-check against the generic test.
void report_inner(Report& r, const InnerTestResult& res, const Options& o, const char* generic_name,
                  const std::function<InnerStatus()>& generic) {
    r.prose.push_back("verdict: " + to_string(res.status));
    r.prose.push_back("candidate space dimension: " + std::to_string(res.space_dim));
    r.result["verdict"] = to_string(res.status);
    r.result["space-dim"] = res.space_dim;
    r.result["certainty"] = certainty_json(res.certainty);
    r.result["witness"] = res.witness ? to_json(*res.witness) : json();
    if (res.witness) r.prose.push_back("witness p (dim A x dim C): " + to_json(*res.witness).dump());
    r.undecided = res.status == InnerStatus::undecided;
    if (!o.cross_check) return;
    InnerStatus other = generic();
    r.result["cross-check"] = to_string(other);
    r.prose.push_back(std::string(generic_name) + ": " + to_string(other));
    if (other == InnerStatus::undecided || res.status == InnerStatus::undecided) {
        r.undecided = true;
        return;
    }
    r.checks.record("cross-check agreement", other == res.status,
                    to_string(res.status) + " versus " + to_string(other) + " from " + generic_name);
}

InnerStatus status_of(SearchStatus s) {
    switch (s) {
        case SearchStatus::witness: return InnerStatus::inner;
        case SearchStatus::certified_none: return InnerStatus::not_inner;
        case SearchStatus::undecided: break;
    }
    return InnerStatus::undecided;
}

AlgebraPtr algebra_spec(Field f, const std::string& spec) {
    static const std::regex re("(ground|truncated|matrix|group)(:([0-9]+))?");
    std::smatch m;
    if (!std::regex_match(spec, m, re)) throw ParseError("unknown algebra \"" + spec + "\"");
    const std::string kind = m[1].str();
    if (kind == "ground") return share(Algebra::ground(f));
    if (!m[3].matched) throw ParseError("algebra \"" + spec + "\" needs a size, e.g. " + kind + ":2");
    const std::size_t n = std::stoul(m[3].str());
    if (n == 0) throw ParseError("algebra size must be positive");
    if (kind == "truncated") return share(truncated_polynomial_algebra(f, n));
    if (kind == "matrix") return share(matrix_algebra(f, n));
    return share(group_algebra(f, GroupTable::cyclic(n)).algebra);
}

GroupTable group_spec(const std::string& spec) {
    if (spec == "S3") return GroupTable::symmetric3();
    static const std::regex re("Z([0-9]+)");
    std::smatch m;
    if (std::regex_match(spec, m, re) && std::stoul(m[1].str()) > 0) return GroupTable::cyclic(std::stoul(m[1].str()));
    throw ParseError("unknown group \"" + spec + "\" (expected Zn or S3)");
}

GradedData graded_spec(Field f, const std::string& group, const std::string& gset) {
    GroupTable g = group_spec(group);
    if (gset != "regular" && gset != "point") throw ParseError("unknown G-set \"" + gset + "\"");
    return {group_algebra(f, g), gset == "regular" ? GSet::regular(g) : GSet::point(g)};
}

void record_report(Report& r, const ValidationReport& v, const std::string& prefix = {}) { r.checks.merge(v, prefix); }

Report cmd_validate(const std::string& path, const std::string& coring_path) {
    Report r{"validate"};
    Document d = read_document(path);
    r.result["kind"] = d.kind;
    r.result["field"] = d.field.name();
    r.prose.push_back("document " + path + ": " + d.kind + " over " + d.field.name());
    if (d.kind == "algebra") {
        auto a = algebra_from_document(d);
        r.result["dim"] = a->dim();
        record_report(r, check_algebra(*a));
    } else if (d.kind == "coring") {
        auto c = coring_from_document(d);
        r.result["dim"] = c->dim();
        record_report(r, check_coring(*c));
    } else if (d.kind == "comodule") {
        Bicomodule m = comodule_from_document(d);
        r.result["dim"] = m.dim();
        const CoringPtr& c = m.left_trivial() ? m.right_coring() : m.left_coring();
        record_report(r, check_coring(*c), "coring: ");
        if (r.checks.ok()) record_report(r, check_comodule(m));
    } else if (d.kind == "entwining") {
        EntwiningStructure e = entwining_from_document(d);
        record_report(r, check_algebra(*e.algebra), "algebra: ");
        record_report(r, check_coring(*e.coalgebra), "coalgebra: ");
        if (r.checks.ok()) {
            record_report(r, check_entwining(e));
            Coring ac = coring_from_entwining(e);
            r.result["dim"] = ac.dim();
            record_report(r, check_coring(ac), "A⊗C: ");
        }
    } else if (d.kind == "dk") {
        DKStructure k = dk_from_document(d);
        record_report(r, check_dk(k));
    } else if (d.kind == "graded") {
        GradedData g = graded_from_document(d);
        r.result["dim"] = g.algebra.algebra.dim() * g.gset.size;
        record_report(r, check_graded(g));
    } else {
        if (coring_path.empty()) throw ParseError(path + ": validating a " + d.kind + " needs --coring");
        CoringPtr c = coring_from_document(read_document(coring_path));
        if (d.kind == "morphism") {
            CoringMorphism f = morphism_from_document(d, c);
            record_report(r, check_coring_morphism(f));
            r.result["bijective"] = is_isomorphism(f);
        } else {
            Matrix p = matrix_field(d, "p", c->base()->dim(), c->dim());
            r.checks.record("right A-linear", right_dual_algebra(c)->coordinates(p).has_value(),
                            "p(ca) != p(c)a for some basis pair");
        }
    }
    return r;
}

Report cmd_build(const std::string& family, Field f, const std::string& algebra, std::size_t n,
                 const std::string& group, const std::string& gset, const std::string& psi, const std::string& output,
                 std::ostream& out) {
    Document d;
    if (family == "trivial") {
        d = coring_document(trivial_coring(algebra_spec(f, algebra)));
    } else if (family == "matrix") {
        d = coring_document(matrix_coring(algebra_spec(f, algebra), n));
    } else if (family == "grouplike") {
        d = coring_document(grouplike_coalgebra(f, n));
    } else if (family == "entwining") {
        if (psi == "flip") {
            AlgebraPtr a = algebra_spec(f, algebra);
            d = entwining_document({a, share(grouplike_coalgebra(f, n)), flip_psi(*a, n)});
        } else if (psi == "graded") {
            d = entwining_document(entwining_from_dk(dk_from_graded(graded_spec(f, group, gset))));
        } else {
            throw ParseError("unknown psi \"" + psi + "\" (expected flip or graded)");
        }
    } else if (family == "graded-coring") {
        d = coring_document(graded_coring(graded_spec(f, group, gset)));
    } else if (family == "graded") {
        d = graded_document(graded_spec(f, group, gset));
    } else if (family == "dk") {
        d = dk_document(dk_from_graded(graded_spec(f, group, gset)));
    } else {
        throw ParseError("unknown family \"" + family + "\"");
    }
    Report r{"build"};
    r.result = {{"family", family}, {"kind", d.kind}, {"field", f.name()}};
    if (d.payload.contains("dim")) r.result["dim"] = d.payload["dim"];
    const std::string text = write_document(d);
    if (output.empty() || output == "-") {
        out << text;
        return r;
    }
    std::ofstream file(output);
    if (!file) throw ParseError(output + ": cannot write");
    file << text;
    r.prose.push_back("wrote " + d.kind + " document for family " + family + " to " + output);
    return r;
}

Report cmd_inner(const std::string& coring_path, const std::string& morphism_path, const Options& o) {
    Report r{"inner"};
    CoringPtr c = coring_from_document(read_document(coring_path));
    CoringMorphism f = morphism_from_document(read_document(morphism_path), c);
    ValidationReport v = check_coring_morphism(f);
    record_report(r, v, "morphism: ");
    r.checks.record("morphism: bijective", is_isomorphism(f), "φ or ρ is singular");
    if (!r.checks.ok()) return r;
    InnerTestResult res = is_inner(f, {o.budget}, o.seed);
    report_inner(r, res, o, "bicomodule search",
                 [&] { return status_of(inner_via_bicomodule(f, {o.budget}, o.seed).status); });
    return r;
}

Report cmd_exactseq(const std::string& coring_path, bool enumerate, bool rho_identity,
                    const std::vector<std::string>& morphisms, const Options& o) {
    Report r{"exactseq"};
    CoringPtr c = coring_from_document(read_document(coring_path));
    AutomorphismSet auts{c, {}, false};
    if (!enumerate && morphisms.empty()) throw ParseError("exactseq needs --enumerate or --morphisms");
    if (enumerate) {
        if (!c->field().is_prime_field()) throw ParseError("--enumerate needs a finite field");
        auts = enumerate_automorphisms(c, rho_identity, {o.budget});
    } else {
        for (const auto& path : morphisms) {
            CoringMorphism f = morphism_from_document(read_document(path), c);
            ValidationReport v = check_coring_morphism(f);
            record_report(r, v, path + ": ");
            r.checks.record(path + ": bijective", is_isomorphism(f), "φ or ρ is singular");
            auts.elements.push_back(std::move(f));
        }
        if (!r.checks.ok()) return r;
    }
    ExactSequenceReport rep = verify_exact_sequence(auts, {o.budget}, o.seed);
    record_report(r, rep.report);
    r.undecided = rep.undecided || !auts.complete;
    json inner = json::array();
    for (auto s : rep.inner) inner.push_back(to_string(s));
    r.result = {{"aut", rep.aut},
                {"inn", rep.inn},
                {"out", rep.out ? json(*rep.out) : json()},
                {"complete", auts.complete},
                {"rho-identity-only", enumerate && rho_identity},
                {"agreement", rep.agreement},
                {"inner", inner},
                {"coset-representatives", rep.coset_representatives}};
    r.prose.push_back("|Aut| = " + std::to_string(rep.aut) + (auts.complete ? "" : " (enumeration incomplete)"));
    r.prose.push_back("|Inn| = " + std::to_string(rep.inn));
    r.prose.push_back("|Out^r| = " + (rep.out ? std::to_string(*rep.out) : std::string("unknown")));
    r.prose.push_back(std::string("oracle agreement: ") + (rep.agreement ? "yes" : "NO"));
    return r;
}

Report cmd_dual(const std::string& coring_path, const std::string& side) {
    Report r{"dual"};
    CoringPtr c = coring_from_document(read_document(coring_path));
    if (side != "right" && side != "left") throw ParseError("--side must be right or left");
    DualPtr d = side == "right" ? right_dual_algebra(c) : left_dual_algebra(c);
    record_report(r, check_algebra(*d->algebra), "dual algebra: ");
    r.checks.record("unit is ε", d->element(d->algebra->unit()) == c->epsilon(), "unit differs from ε");
    json basis = json::array(), products = json::array();
    for (const auto& b : d->basis) basis.push_back(to_json(b));
    for (std::size_t i = 0; i < d->dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < d->dim(); ++j) row.push_back(to_json(d->algebra->product(i, j)));
        products.push_back(row);
    }
    r.result = {{"side", side}, {"dim", d->dim()}, {"basis", basis}, {"products", products},
                {"unit", to_json(d->algebra->unit())}};
    r.prose.push_back((side == "right" ? std::string("C*") : std::string("*C")) + " has dimension " +
                      std::to_string(d->dim()));
    return r;
}

Report cmd_convinv(const std::string& coring_path, const std::string& element_path) {
    Report r{"convinv"};
    CoringPtr c = coring_from_document(read_document(coring_path));
    Matrix p = matrix_field(read_document(element_path), "p", c->base()->dim(), c->dim());
    const bool linear = right_dual_algebra(c)->coordinates(p).has_value();
    r.checks.record("right A-linear", linear, "p is not in C*");
    if (!linear) return r;
    auto q = convolution_inverse(c, p);
    r.result = {{"invertible", q.has_value()}, {"inverse", q ? to_json(*q) : json()}};
    r.prose.push_back(q ? "p is convolution-invertible" : "p is not convolution-invertible");
    if (q) r.prose.push_back("inverse: " + to_json(*q).dump());
    return r;
}

Report cmd_cotensor(const std::string& m_path, const std::string& n_path) {
    Report r{"cotensor"};
    Bicomodule m = comodule_from_document(read_document(m_path));
    Bicomodule n = comodule_from_document(read_document(n_path));
    record_report(r, check_comodule(m), "M: ");
    record_report(r, check_comodule(n), "N: ");
    if (!r.checks.ok()) return r;
    CotensorResult t = cotensor(m, n);
    record_report(r, check_bicomodule(t.induced), "M□N: ");
    r.result = {{"dim-m", m.dim()},
                {"dim-n", n.dim()},
                {"dim-tensor", t.tensor->dim()},
                {"dim-cotensor", t.induced.dim()},
                {"embedding", to_json(t.embedding)}};
    r.prose.push_back("dim M = " + std::to_string(m.dim()) + ", dim N = " + std::to_string(n.dim()) +
                      ", dim M⊗N = " + std::to_string(t.tensor->dim()) + ", dim M□N = " + std::to_string(t.induced.dim()));
    return r;
}

Report cmd_cointegral(const std::string& coring_path) {
    Report r{"cointegral"};
    CoringPtr c = coring_from_document(read_document(coring_path));
    auto d = find_cointegral(c);
    r.result = {{"found", d.has_value()}, {"delta", d ? to_json(d->delta) : json()}};
    if (d) record_report(r, check_cointegral(*d), "cointegral: ");
    r.prose.push_back(d ? "cointegral found: the coring is coseparable" : "no cointegral: the coring is not coseparable");
    return r;
}

Report cmd_graded_ker(const std::string& data_path, const std::string& morphism_path, const Options& o) {
    Report r{"graded-ker"};
    GradedData g = graded_from_document(read_document(data_path));
    ValidationReport v = check_graded(g);
    record_report(r, v, "graded data: ");
    if (!r.checks.ok()) return r;
    CoringPtr c = share(graded_coring(g));
    CoringMorphism f = morphism_from_document(read_document(morphism_path), c);
    record_report(r, check_coring_morphism(f), "morphism: ");
    r.checks.record("morphism: bijective", is_isomorphism(f), "φ or ρ is singular");
    if (!r.checks.ok()) return r;
    report_inner(r, graded_ker_omega(g, f, {o.budget}, o.seed), o, "generic is_inner",
                 [&] { return is_inner(f, {o.budget}, o.seed).status; });
    return r;
}

Report entwining_ker(const char* name, const EntwiningStructure& e, const Document& mdoc, const Options& o,
                     const std::function<InnerTestResult(const CoringPtr&, const Matrix&, const Matrix&)>& fast) {
    Report r{name};
    record_report(r, check_entwining(e), "entwining: ");
    if (!r.checks.ok()) return r;
    CoringPtr ac = share(coring_from_entwining(e));
    const std::size_t da = e.algebra->dim(), dc = e.coalgebra->dim();
    Matrix alpha = matrix_field(mdoc, "alpha", da, da), gamma = matrix_field(mdoc, "gamma", dc, dc);
    InnerTestResult res = fast(ac, alpha, gamma);
    report_inner(r, res, o, "generic is_inner", [&] {
        return is_inner(entwining_induced(e, ac, alpha, gamma), {o.budget}, o.seed).status;
    });
    return r;
}

Report cmd_entwining_ker(const std::string& path, const std::string& morphism_path, const Options& o) {
    EntwiningStructure e = entwining_from_document(read_document(path));
    Document m = read_document(morphism_path);
    return entwining_ker("entwining-ker", e, m, o, [&](const CoringPtr& ac, const Matrix& a, const Matrix& g) {
        return entwining_ker_membership(e, ac, a, g, {o.budget}, o.seed);
    });
}

Report cmd_dk_ker(const std::string& path, const std::string& morphism_path, const Options& o) {
    DKStructure d = dk_from_document(read_document(path));
    ValidationReport v = check_dk(d);
    if (!v.ok()) {
        Report r{"dk-ker"};
        record_report(r, v, "dk: ");
        return r;
    }
    Document m = read_document(morphism_path);
    Matrix hbar = matrix_field(m, "hbar", d.h_algebra->dim(), d.h_algebra->dim());
    return entwining_ker("dk-ker", entwining_from_dk(d), m, o, [&](const CoringPtr& ac, const Matrix& a, const Matrix& g) {
        return dk_ker_membership(d, ac, hbar, a, g, {o.budget}, o.seed);
    });
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with finite-dimensional corings"};
    app.require_subcommand(1);
    Options o;
    auto add_search = [&](CLI::App* sub) {
        sub->add_option("--budget", o.budget, "maximum evaluation points per search (default from CORINGS_BUDGET)");
        sub->add_option("--seed", o.seed, "seed for sampled searches");
    };
    std::string a1, a2, coring_path, side = "right";
    std::function<Report()> action;

    auto* validate = app.add_subcommand("validate", "run the axiom checker for a document");
    validate->add_option("file", a1)->required();
    validate->add_option("--coring", coring_path, "coring for morphism and dual-element documents");
    validate->callback([&] { action = [&] { return cmd_validate(a1, coring_path); }; });

    std::string family, field = "F2", algebra = "ground", group = "Z2", gset = "regular", psi = "flip", output;
    std::size_t n = 2;
    auto* build = app.add_subcommand("build", "emit a document for a standard family");
    build->add_option("family", family, "trivial | matrix | grouplike | entwining | graded-coring | graded | dk")->required();
    build->add_option("--field", field, "Q or F<p>");
    build->add_option("--algebra", algebra, "ground | truncated:n | matrix:n | group:n");
    build->add_option("--n", n, "matrix size or number of group-likes");
    build->add_option("--group", group, "Zn or S3");
    build->add_option("--gset", gset, "regular | point");
    build->add_option("--psi", psi, "flip | graded");
    build->add_option("-o,--output", output, "output file (stdout when omitted)");
    build->callback([&] {
        action = [&] { return cmd_build(family, parse_field(field), algebra, n, group, gset, psi, output, out); };
    });

    auto* inner = app.add_subcommand("inner", "decide whether an automorphism is inner");
    inner->add_option("coring", a1)->required();
    inner->add_option("morphism", a2)->required();
    inner->add_flag("--cross-check", o.cross_check, "also search for a bicomodule isomorphism");
    add_search(inner);
    inner->callback([&] { action = [&] { return cmd_inner(a1, a2, o); }; });

    bool enumerate = false, rho_identity = false;
    std::vector<std::string> morphisms;
    auto* exactseq = app.add_subcommand("exactseq", "check 1 -> Inn -> Aut -> Pic on automorphisms");
    exactseq->add_option("coring", a1)->required();
    auto* en = exactseq->add_flag("--enumerate", enumerate, "enumerate all automorphisms");
    exactseq->add_flag("--rho-identity", rho_identity, "only automorphisms over the identity of A")->needs(en);
    auto* ms = exactseq->add_option("--morphisms", morphisms, "morphism documents");
    en->excludes(ms);
    add_search(exactseq);
    exactseq->callback([&] { action = [&] { return cmd_exactseq(a1, enumerate, rho_identity, morphisms, o); }; });

    auto* dual = app.add_subcommand("dual", "structure constants of C* or *C");
    dual->add_option("coring", a1)->required();
    dual->add_option("--side", side, "right (C*) or left (*C)");
    dual->callback([&] { action = [&] { return cmd_dual(a1, side); }; });

    auto* convinv = app.add_subcommand("convinv", "convolution inverse of an element of C*");
    convinv->add_option("coring", a1)->required();
    convinv->add_option("element", a2)->required();
    convinv->callback([&] { action = [&] { return cmd_convinv(a1, a2); }; });

    auto* cot = app.add_subcommand("cotensor", "M□N for a right comodule M and a left comodule N");
    cot->add_option("right-comodule", a1)->required();
    cot->add_option("left-comodule", a2)->required();
    cot->callback([&] { action = [&] { return cmd_cotensor(a1, a2); }; });

    auto* coint = app.add_subcommand("cointegral", "search for a cointegral");
    coint->add_option("coring", a1)->required();
    coint->callback([&] { action = [&] { return cmd_cointegral(a1); }; });

    struct Ker {
        const char* name;
        const char* help;
        Report (*fn)(const std::string&, const std::string&, const Options&);
    };
    for (const Ker& k : {Ker{"graded-ker", "graded kernel membership", cmd_graded_ker},
                         Ker{"entwining-ker", "entwining kernel membership", cmd_entwining_ker},
                         Ker{"dk-ker", "Doi-Koppinen kernel membership", cmd_dk_ker}}) {
        auto* sub = app.add_subcommand(k.name, k.help);
        sub->add_option("structure", a1)->required();
        sub->add_option("morphism", a2)->required();
        sub->add_flag("--cross-check", o.cross_check, "compare with the generic test");
        add_search(sub);
        auto fn = k.fn;
        sub->callback([&, fn] { action = [&, fn] { return fn(a1, a2, o); }; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_parse;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return exit_parse;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        Report r = action();
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (r.command == "build" && r.prose.empty()) return exit_pass;
        r.print(out, ms);
        return r.exit_code();
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return exit_parse;
    } catch (const DimensionError& e) {
        err << "parse error: " << e.what() << "\n";
        return exit_parse;
    } catch (const std::invalid_argument& e) {
        // StructureError, ArithmeticError and invalid group tables: the input is
        // well formed but violates the structure it claims to be.
        err << "error: " << e.what() << "\n";
        Report r{app.get_subcommands().front()->get_name()};
        r.checks.fail("input structure", e.what());
        r.print(out, 0);
        return exit_fail;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        Report r{app.get_subcommands().front()->get_name()};
        r.checks.fail("input structure", e.what());
        r.print(out, 0);
        return exit_fail;
    } catch (const std::bad_alloc&) {
        err << "error: out of memory (the structure is too large for dense exact linear algebra)\n";
        return exit_fail;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_fail;
    }
}

}  // namespace corings::cli
