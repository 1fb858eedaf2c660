#include "corings/cli.hpp"

#include <fstream>
#include <regex>
#include <sstream>

namespace corings::cli {

namespace {

// A position inside a parsed document, for error messages.
class Node {
public:
    Node(const json& j, std::string path, const std::string& source) : j_(j), path_(std::move(path)), source_(source) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(source_ + ": at " + (path_.empty() ? "/" : path_) + ": " + msg);
    }
    const json& raw() const { return j_; }
    bool has(const std::string& key) const { return j_.is_object() && j_.contains(key); }

    Node operator[](const std::string& key) const {
        if (!j_.is_object()) fail("expected an object");
        auto it = j_.find(key);
        if (it == j_.end()) fail("missing field \"" + key + "\"");
        return {*it, path_ + "/" + key, source_};
    }
    Node operator[](std::size_t i) const { return {j_.at(i), path_ + "/" + std::to_string(i), source_}; }

    std::size_t array(std::optional<std::size_t> expected = std::nullopt) const {
        if (!j_.is_array()) fail("expected an array");
        if (expected && j_.size() != *expected)
            fail("expected " + std::to_string(*expected) + " entries, found " + std::to_string(j_.size()));
        return j_.size();
    }
    std::size_t count() const {
        if (!j_.is_number_unsigned()) fail("expected a nonnegative integer");
        return j_.get<std::size_t>();
    }
    std::string string() const {
        if (!j_.is_string()) fail("expected a string");
        return j_.get<std::string>();
    }

    Scalar scalar(Field f) const {
        std::string s;
        if (j_.is_string()) s = j_.get<std::string>();
        else if (j_.is_number_integer()) s = j_.dump();
        else fail("expected an exact scalar string");
        if (f.is_prime_field()) {
            static const std::regex residue("[0-9]+");
            if (!std::regex_match(s, residue)) fail("\"" + s + "\" is not a residue");
            mpz_class v(s);
            if (v >= f.characteristic()) fail("residue " + s + " is not in [0, " + std::to_string(f.characteristic()) + ")");
            return Scalar::residue(f.characteristic(), v.get_ui());
        }
        static const std::regex rational("(-?[0-9]+)(/([0-9]+))?");
        std::smatch m;
        if (!std::regex_match(s, m, rational)) fail("\"" + s + "\" is not a rational");
        mpz_class num(m[1].str()), den(m[3].matched ? m[3].str() : "1");
        if (den == 0) fail("zero denominator in \"" + s + "\"");
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if (g != 1 && !(num == 0 && den == 1)) fail("\"" + s + "\" is not in lowest terms");
        return Scalar::rational(mpq_class(num, den));
    }

    Vector vector(Field f, std::size_t n) const {
        array(n);
        Vector v;
        for (std::size_t i = 0; i < n; ++i) v.push_back((*this)[i].scalar(f));
        return v;
    }
    Matrix matrix(Field f, std::size_t rows, std::size_t cols) const {
        array(rows);
        Matrix m(f, rows, cols);
        for (std::size_t r = 0; r < rows; ++r) {
            Vector row = (*this)[r].vector(f, cols);
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
        }
        return m;
    }
    std::vector<Matrix> matrices(Field f, std::size_t count, std::size_t rows, std::size_t cols) const {
        array(count);
        std::vector<Matrix> out;
        for (std::size_t i = 0; i < count; ++i) out.push_back((*this)[i].matrix(f, rows, cols));
        return out;
    }
    std::vector<std::size_t> indices(std::size_t n, std::size_t bound) const {
        array(n);
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t v = (*this)[i].count();
            if (v >= bound) (*this)[i].fail("index " + std::to_string(v) + " out of range");
            out.push_back(v);
        }
        return out;
    }
    std::vector<std::string> names() const {
        std::vector<std::string> out;
        for (std::size_t i = 0, n = array(); i < n; ++i) out.push_back((*this)[i].string());
        return out;
    }

private:
    const json& j_;
    std::string path_;
    const std::string& source_;
};

// Documents keep their source name in the payload so errors can point at it.
std::string source_of(const Document& d) {
    return d.payload.is_object() && d.payload.contains("$source") ? d.payload["$source"].get<std::string>()
                                                                   : "<document>";
}

template <class F>
auto with_payload(const Document& d, const std::string& kind, F&& f) {
    const std::string src = source_of(d);
    if (d.kind != kind) throw ParseError(src + ": expected a document of kind " + kind + ", found " + d.kind);
    try {
        return f(Node(d.payload, "/payload", src));
    } catch (const DimensionError& e) {
        throw ParseError(src + ": " + e.what());
    }
}

AlgebraPtr algebra_from(const Node& n, Field f) {
    const std::size_t dim = n["dim"].count();
    if (dim == 0) n["dim"].fail("an algebra has positive dimension");
    Node prod = n["products"];
    prod.array(dim);
    std::vector<Vector> products;
    for (std::size_t i = 0; i < dim; ++i) {
        prod[i].array(dim);
        for (std::size_t j = 0; j < dim; ++j) products.push_back(prod[i][j].vector(f, dim));
    }
    std::vector<std::string> names = n.has("names") && !n["names"].raw().is_null() ? n["names"].names() : std::vector<std::string>{};
    return share(Algebra(f, dim, std::move(products), n["unit"].vector(f, dim), std::move(names)));
}

CoringPtr coring_from(const Node& n, Field f, std::vector<std::string> names) {
    AlgebraPtr a = algebra_from(n["algebra"], f);
    const std::size_t d = n["dim"].count(), da = a->dim();
    Bimodule carrier(a, a, d, n["left-action"].matrices(f, da, d, d), n["right-action"].matrices(f, da, d, d));
    Matrix delta = n["delta"].matrix(f, d * d, d);
    Matrix eps = n["epsilon"].matrix(f, da, d);
    return share(Coring::from_ambient(std::move(carrier), delta, std::move(eps), std::move(names)));
}

json matrices_json(const std::vector<Matrix>& ms) {
    json out = json::array();
    for (const auto& m : ms) out.push_back(to_json(m));
    return out;
}

json group_json(const GroupTable& g) { return {{"order", g.order()}, {"table", g.table()}}; }

GroupTable group_from(const Node& n) {
    const std::size_t order = n["order"].count();
    if (order == 0) n["order"].fail("a group is nonempty");
    return GroupTable(order, n["table"].indices(order * order, order));
}

}  // namespace

Field parse_field(const std::string& s) {
    if (s == "Q") return Field::rationals();
    static const std::regex fp("F([0-9]{1,10})");
    std::smatch m;
    if (std::regex_match(s, m, fp)) {
        std::uint64_t p = std::stoull(m[1].str());
        if (is_prime(p) && p < (1ull << 31)) return Field::prime(p);
    }
    throw ParseError("unknown field \"" + s + "\" (expected Q or F<p> with p prime)");
}

json to_json(const Scalar& s) { return s.to_string(); }

json to_json(const Vector& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

json to_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
    return out;
}

json algebra_to_json(const Algebra& a) {
    json prod = json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < a.dim(); ++j) row.push_back(to_json(a.product(i, j)));
        prod.push_back(row);
    }
    json out = {{"dim", a.dim()}, {"unit", to_json(a.unit())}, {"products", prod}};
    if (!a.names().empty()) out["names"] = a.names();
    return out;
}

json coring_to_json(const Coring& c) {
    const std::size_t d = c.dim();
    Matrix delta(c.field(), d * d, d);
    for (std::size_t k = 0; k < d; ++k) delta.set_column(k, c.delta_ambient(unit_vector(c.field(), d, k)));
    return {{"algebra", algebra_to_json(*c.base())},
            {"dim", d},
            {"left-action", matrices_json(c.carrier().left_actions())},
            {"right-action", matrices_json(c.carrier().right_actions())},
            {"delta", to_json(delta)},
            {"epsilon", to_json(c.epsilon())}};
}

json comodule_to_json(const Bicomodule& m) {
    const bool right = m.left_trivial();
    if (right == m.right_trivial()) throw StructureError("only one-sided comodules are serialized");
    const CoringPtr& c = right ? m.right_coring() : m.left_coring();
    const TensorProduct& t = right ? m.right_tensor() : m.left_tensor();
    const Matrix& coaction = right ? m.rho() : m.lambda();
    Matrix amb(m.field(), t.ambient_dim(), m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) amb.set_column(i, t.lift(coaction.column(i)));
    return {{"side", right ? "right" : "left"},
            {"coring", coring_to_json(*c)},
            {"dim", m.dim()},
            {"action", matrices_json(right ? m.carrier().right_actions() : m.carrier().left_actions())},
            {"coaction", to_json(amb)}};
}

json entwining_to_json(const EntwiningStructure& e) {
    return {{"algebra", algebra_to_json(*e.algebra)}, {"coalgebra", coring_to_json(*e.coalgebra)}, {"psi", to_json(e.psi)}};
}

json dk_to_json(const DKStructure& d) {
    return {{"h-algebra", algebra_to_json(*d.h_algebra)},
            {"h-coalgebra", coring_to_json(*d.h_coalgebra)},
            {"algebra", algebra_to_json(*d.algebra)},
            {"algebra-coaction", to_json(d.algebra_coaction)},
            {"coalgebra", coring_to_json(*d.coalgebra)},
            {"coalgebra-action", matrices_json(d.coalgebra_action)}};
}

json graded_to_json(const GradedData& g) {
    return {{"algebra", algebra_to_json(g.algebra.algebra)},
            {"degrees", g.algebra.degree},
            {"group", group_json(g.gset.group)},
            {"gset", {{"size", g.gset.size}, {"action", g.gset.action}}}};
}

Document algebra_document(const Algebra& a) { return {format_version, a.field(), "algebra", algebra_to_json(a), a.names()}; }
Document coring_document(const Coring& c) { return {format_version, c.field(), "coring", coring_to_json(c), c.names()}; }
Document comodule_document(const Bicomodule& m) { return {format_version, m.field(), "comodule", comodule_to_json(m), {}}; }
Document entwining_document(const EntwiningStructure& e) {
    return {format_version, e.algebra->field(), "entwining", entwining_to_json(e), {}};
}
Document dk_document(const DKStructure& d) { return {format_version, d.algebra->field(), "dk", dk_to_json(d), {}}; }
Document graded_document(const GradedData& g) {
    return {format_version, g.algebra.algebra.field(), "graded", graded_to_json(g), {}};
}

Document parse_document(const std::string& text, const std::string& source) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(source + ": " + e.what());
    }
    Node n(root, "", source);
    if (!root.is_object()) n.fail("a document is a JSON object");
    for (const auto& [key, value] : root.items())
        if (key != "format-version" && key != "field" && key != "p" && key != "kind" && key != "payload" &&
            key != "names")
            n.fail("unknown field \"" + key + "\"");
    Document d;
    d.version = static_cast<int>(n["format-version"].count());
    if (d.version != format_version) n["format-version"].fail("unsupported format version " + std::to_string(d.version));
    const std::string field = n["field"].string();
    if (field == "Q") {
        d.field = Field::rationals();
    } else if (field == "Fp") {
        const std::size_t p = n["p"].count();
        if (!is_prime(p) || p >= (1ull << 31)) n["p"].fail(std::to_string(p) + " is not a prime below 2^31");
        d.field = Field::prime(p);
    } else {
        n["field"].fail("expected \"Q\" or \"Fp\"");
    }
    static const std::vector<std::string> kinds = {"algebra", "coring", "comodule", "entwining",
                                                   "dk", "graded", "morphism", "dual-element"};
    d.kind = n["kind"].string();
    if (std::find(kinds.begin(), kinds.end(), d.kind) == kinds.end()) n["kind"].fail("unknown kind \"" + d.kind + "\"");
    d.payload = n["payload"].raw();
    if (!d.payload.is_object()) n["payload"].fail("expected an object");
    if (root.contains("names") && !root["names"].is_null()) d.names = n["names"].names();
    d.payload["$source"] = source;
    return d;
}

Document read_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str(), path);
}

std::string write_document(const Document& d) {
    json root;
    root["format-version"] = d.version;
    if (d.field.is_rational()) {
        root["field"] = "Q";
    } else {
        root["field"] = "Fp";
        root["p"] = d.field.characteristic();
    }
    root["kind"] = d.kind;
    json payload = d.payload;
    if (payload.is_object()) payload.erase("$source");
    root["payload"] = payload;
    if (!d.names.empty()) root["names"] = d.names;
    return root.dump(2) + "\n";
}

AlgebraPtr algebra_from_document(const Document& d) {
    return with_payload(d, "algebra", [&](const Node& n) {
        AlgebraPtr a = algebra_from(n, d.field);
        if (d.names.empty()) return a;
        if (d.names.size() != a->dim()) throw ParseError(source_of(d) + ": names do not match the dimension");
        std::vector<Vector> products;
        for (std::size_t i = 0; i < a->dim(); ++i)
            for (std::size_t j = 0; j < a->dim(); ++j) products.push_back(a->product(i, j));
        return share(Algebra(d.field, a->dim(), std::move(products), a->unit(), d.names));
    });
}

CoringPtr coring_from_document(const Document& d) {
    return with_payload(d, "coring", [&](const Node& n) {
        CoringPtr c = coring_from(n, d.field, d.names);
        if (!d.names.empty() && d.names.size() != c->dim())
            throw ParseError(source_of(d) + ": names do not match the dimension");
        return c;
    });
}

Bicomodule comodule_from_document(const Document& d) {
    return with_payload(d, "comodule", [&](const Node& n) {
        const std::string side = n["side"].string();
        if (side != "right" && side != "left") n["side"].fail("expected \"right\" or \"left\"");
        CoringPtr c = coring_from(n["coring"], d.field, {});
        const std::size_t dm = n["dim"].count(), da = c->base()->dim();
        auto actions = n["action"].matrices(d.field, da, dm, dm);
        if (side == "right") {
            Bimodule carrier = Bimodule::right_module(c->base(), dm, std::move(actions));
            TensorProduct t(carrier, c->carrier());
            Matrix rho = t.project() * n["coaction"].matrix(d.field, t.ambient_dim(), dm);
            return Bicomodule::right_comodule(c, std::move(carrier), std::move(rho));
        }
        Bimodule carrier = Bimodule::left_module(c->base(), dm, std::move(actions));
        TensorProduct t(c->carrier(), carrier);
        Matrix lambda = t.project() * n["coaction"].matrix(d.field, t.ambient_dim(), dm);
        return Bicomodule::left_comodule(c, std::move(carrier), std::move(lambda));
    });
}

EntwiningStructure entwining_from_document(const Document& d) {
    return with_payload(d, "entwining", [&](const Node& n) {
        AlgebraPtr a = algebra_from(n["algebra"], d.field);
        CoringPtr c = coring_from(n["coalgebra"], d.field, {});
        if (c->base()->dim() != 1) n["coalgebra"].fail("expected a coalgebra over the ground field");
        Matrix psi = n["psi"].matrix(d.field, a->dim() * c->dim(), c->dim() * a->dim());
        return EntwiningStructure{a, c, std::move(psi)};
    });
}

DKStructure dk_from_document(const Document& d) {
    return with_payload(d, "dk", [&](const Node& n) {
        AlgebraPtr h = algebra_from(n["h-algebra"], d.field);
        CoringPtr hc = coring_from(n["h-coalgebra"], d.field, {});
        AlgebraPtr a = algebra_from(n["algebra"], d.field);
        CoringPtr c = coring_from(n["coalgebra"], d.field, {});
        if (hc->dim() != h->dim()) n["h-coalgebra"].fail("H has different algebra and coalgebra dimensions");
        Matrix coaction = n["algebra-coaction"].matrix(d.field, a->dim() * h->dim(), a->dim());
        auto action = n["coalgebra-action"].matrices(d.field, h->dim(), c->dim(), c->dim());
        return DKStructure{h, hc, a, std::move(coaction), c, std::move(action)};
    });
}

GradedData graded_from_document(const Document& d) {
    return with_payload(d, "graded", [&](const Node& n) {
        AlgebraPtr a = algebra_from(n["algebra"], d.field);
        GroupTable g = group_from(n["group"]);
        auto degrees = n["degrees"].indices(a->dim(), g.order());
        Node gs = n["gset"];
        const std::size_t size = gs["size"].count();
        auto action = gs["action"].indices(size * g.order(), size);
        return GradedData{GradedAlgebra{*a, std::move(degrees)}, GSet{g, size, std::move(action)}};
    });
}

Matrix matrix_field(const Document& d, const std::string& key, std::size_t rows, std::size_t cols) {
    const std::string src = source_of(d);
    if (d.kind != "morphism" && d.kind != "dual-element")
        throw ParseError(src + ": expected a morphism or dual-element document, found " + d.kind);
    return Node(d.payload, "/payload", src)[key].matrix(d.field, rows, cols);
}

CoringMorphism morphism_from_document(const Document& d, const CoringPtr& c) {
    if (d.kind != "morphism") throw ParseError(source_of(d) + ": expected a morphism document, found " + d.kind);
    if (d.field != c->field()) throw ParseError(source_of(d) + ": field differs from the coring's");
    const std::size_t n = c->dim(), da = c->base()->dim();
    return {c, c, matrix_field(d, "phi", n, n), AlgebraMorphism{c->base(), c->base(), matrix_field(d, "rho", da, da)}};
}

}  // namespace corings::cli
