#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "corings/cli.hpp"

using namespace corings;
using namespace corings::cli;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;

    json machine() const {
        auto pos = out.find("=== machine ===\n");
        REQUIRE(pos != std::string::npos);
        return json::parse(out.substr(pos + 16));
    }
    std::string machine_text() const { return out.substr(out.find("=== machine ===")); }
};

Run run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "corings");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() : path_(fs::temp_directory_path() / ("corings-cli-" + std::to_string(counter_++) + "-" +
                                                   std::to_string(reinterpret_cast<std::uintptr_t>(this)))) {
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string file(const std::string& name) const { return (path_ / name).string(); }
    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(file(name)) << text;
        return file(name);
    }

private:
    static inline int counter_ = 0;
    fs::path path_;
};

std::string morphism_text(const std::string& field, const json& payload) {
    json root = {{"format-version", 1}, {"kind", "morphism"}, {"payload", payload}};
    if (field == "Q") {
        root["field"] = "Q";
    } else {
        root["field"] = "Fp";
        root["p"] = std::stoi(field.substr(1));
    }
    return root.dump();
}

json rows(const std::vector<std::vector<std::string>>& m) {
    json out = json::array();
    for (const auto& r : m) out.push_back(r);
    return out;
}

json identity_json(std::size_t n) {
    json m = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < n; ++j) row.push_back(i == j ? "1" : "0");
        m.push_back(row);
    }
    return m;
}

}  // namespace

TEST_CASE("build then validate round-trips for every family") {
    TempDir dir;
    const std::vector<std::vector<std::string>> cases = {
        {"trivial", "--field", "Q"},
        {"trivial", "--field", "F2", "--algebra", "truncated:2"},
        {"trivial", "--field", "F3", "--algebra", "matrix:2"},
        {"matrix", "--field", "F2", "--n", "2"},
        {"matrix", "--field", "Q", "--n", "3"},
        {"matrix", "--field", "F2", "--n", "2", "--algebra", "truncated:2"},
        {"grouplike", "--field", "F5", "--n", "3"},
        {"grouplike", "--field", "Q", "--n", "2"},
        {"entwining", "--field", "F2", "--algebra", "truncated:2", "--n", "2"},
        {"entwining", "--field", "F3", "--psi", "graded", "--group", "Z2"},
        {"graded-coring", "--field", "F3", "--group", "Z2"},
        {"graded-coring", "--field", "F2", "--group", "Z3", "--gset", "point"},
        {"graded-coring", "--field", "Q", "--group", "Z3"},
        {"graded", "--field", "F3"},
        {"dk", "--field", "F3"},
    };
    int i = 0;
    for (auto args : cases) {
        const std::string path = dir.file("doc" + std::to_string(i++) + ".json");
        args.insert(args.begin(), "build");
        args.push_back("-o");
        args.push_back(path);
        Run b = run_cli(args);
        CAPTURE(b.out);
        CHECK(b.code == exit_pass);
        Run v = run_cli({"validate", path});
        CAPTURE(v.out);
        CHECK(v.code == exit_pass);
        CHECK(v.machine()["status"] == "pass");
    }
}

TEST_CASE("documents round-trip in memory") {
    Field f = Field::prime(3);
    GroupTable z2 = GroupTable::cyclic(2);
    Coring c = graded_coring({group_algebra(f, z2), GSet::regular(z2)});
    Document d = parse_document(write_document(coring_document(c)));
    CoringPtr back = coring_from_document(d);
    CHECK(back->delta() == c.delta());
    CHECK(back->epsilon() == c.epsilon());
    CHECK(same_coring(back, share(c)));
    CHECK(write_document(coring_document(*back)) == write_document(coring_document(c)));

    Coring q = matrix_coring(share(truncated_polynomial_algebra(Field::rationals(), 2)), 2);
    CoringPtr qb = coring_from_document(parse_document(write_document(coring_document(q))));
    CHECK(qb->delta() == q.delta());

    auto g = share(grouplike_coalgebra(f, 2));
    Bicomodule m = Bicomodule::regular_right(g);
    Bicomodule mb = comodule_from_document(parse_document(write_document(comodule_document(m))));
    CHECK(mb.rho() == m.rho());
    CHECK(check_comodule(mb).ok());
}

TEST_CASE("scalar parsing is exact and strict") {
    const std::string head = R"({"format-version":1,"field":"Q","kind":"algebra","payload":{"dim":1,"unit":[)";
    const std::string tail = R"(],"products":[[["1"]]]}})";
    CHECK_NOTHROW(parse_document(head + "\"1\"" + tail));
    for (const char* bad : {"\"3/0\"", "\"2/4\"", "\"1.5\"", "1.5", "\"x\"", "\"1/-2\""}) {
        CAPTURE(bad);
        Document d = parse_document(head + bad + tail);
        CHECK_THROWS_AS(algebra_from_document(d), ParseError);
    }
    const std::string fp = R"({"format-version":1,"field":"Fp","p":3,"kind":"algebra","payload":{"dim":1,"unit":[)";
    CHECK_NOTHROW(algebra_from_document(parse_document(fp + "\"1\"" + tail)));
    CHECK_THROWS_AS(algebra_from_document(parse_document(fp + "\"3\"" + tail)), ParseError);
    CHECK_THROWS_AS(algebra_from_document(parse_document(fp + "\"-1\"" + tail)), ParseError);
    CHECK_THROWS_AS(parse_document("{\"format-version\":1,"), ParseError);
    CHECK_THROWS_AS(parse_document(R"({"format-version":2,"field":"Q","kind":"algebra","payload":{}})"), ParseError);
    CHECK_THROWS_AS(parse_document(R"({"format-version":1,"field":"Fp","p":4,"kind":"algebra","payload":{}})"),
                    ParseError);
    CHECK_THROWS_AS(parse_document(R"({"format-version":1,"field":"Q","kind":"ring","payload":{}})"), ParseError);
    try {
        algebra_from_document(parse_document(head + "\"3/0\"" + tail, "doc.json"));
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("doc.json: at /payload/unit/0") != std::string::npos);
    }
}

TEST_CASE("exit codes") {
    TempDir dir;
    REQUIRE(run_cli({"build", "matrix", "--field", "F2", "-o", dir.file("m2.json")}).code == exit_pass);

    std::ifstream in(dir.file("m2.json"));
    json doc = json::parse(in);
    doc["payload"]["epsilon"][0][0] = "0";
    Run broken = run_cli({"validate", dir.write("broken.json", doc.dump())});
    CHECK(broken.code == exit_fail);
    CHECK(broken.out.find("left counit") != std::string::npos);
    json m = broken.machine();
    CHECK(m["status"] == "fail");

    doc["payload"]["epsilon"][0][0] = "3/0";
    Run malformed = run_cli({"validate", dir.write("malformed.json", doc.dump())});
    CHECK(malformed.code == exit_parse);
    CHECK(malformed.err.find("/payload/epsilon/0/0") != std::string::npos);

    CHECK(run_cli({"validate", dir.file("missing.json")}).code == exit_parse);
    CHECK(run_cli({"frobnicate"}).code == exit_parse);
    CHECK(run_cli({"build", "nonsense"}).code == exit_parse);
    CHECK(run_cli({"exactseq", dir.file("m2.json")}).code == exit_parse);

    const std::string id = dir.write("id.json", morphism_text("F2", {{"phi", identity_json(4)}, {"rho", identity_json(1)}}));
    Run undecided = run_cli({"inner", dir.file("m2.json"), id, "--budget", "1", "--seed", "0"});
    CHECK(undecided.code == exit_undecided);
    CHECK(undecided.machine()["result"]["verdict"] == "undecided");
    Run decided = run_cli({"inner", dir.file("m2.json"), id});
    CHECK(decided.code == exit_pass);
    CHECK(decided.machine()["result"]["verdict"] == "inner");
    CHECK(decided.machine()["result"]["witness"] == json::array({json::array({"1", "0", "0", "1"})}));

    json zero = identity_json(4);
    zero[0][0] = "0";
    const std::string singular = dir.write("sing.json", morphism_text("F2", {{"phi", zero}, {"rho", identity_json(1)}}));
    CHECK(run_cli({"inner", dir.file("m2.json"), singular}).code == exit_fail);
}

TEST_CASE("inner and exactseq commands") {
    TempDir dir;
    REQUIRE(run_cli({"build", "grouplike", "--field", "F2", "--n", "2", "-o", dir.file("z2.json")}).code == 0);
    json swap = rows({{"0", "1"}, {"1", "0"}});
    const std::string sw = dir.write("swap.json", morphism_text("F2", {{"phi", swap}, {"rho", identity_json(1)}}));
    Run r = run_cli({"inner", dir.file("z2.json"), sw, "--cross-check"});
    CHECK(r.code == exit_pass);
    CHECK(r.machine()["result"]["verdict"] == "not-inner");
    CHECK(r.machine()["result"]["cross-check"] == "not-inner");

    struct Case {
        std::vector<std::string> build;
        int aut, inn, out;
    };
    for (const Case& c : {Case{{"matrix", "--field", "F2"}, 6, 6, 1}, Case{{"grouplike", "--field", "F2", "--n", "3"}, 6, 1, 6},
                          Case{{"trivial", "--field", "F2", "--algebra", "truncated:2"}, 1, 1, 1}}) {
        auto args = c.build;
        args.insert(args.begin(), "build");
        args.push_back("-o");
        args.push_back(dir.file("c.json"));
        REQUIRE(run_cli(args).code == 0);
        Run e = run_cli({"exactseq", dir.file("c.json"), "--enumerate"});
        CAPTURE(e.out);
        CHECK(e.code == exit_pass);
        json res = e.machine()["result"];
        CHECK(res["aut"] == c.aut);
        CHECK(res["inn"] == c.inn);
        CHECK(res["out"] == c.out);
        CHECK(res["agreement"] == true);
    }

    const std::string id = dir.write("id.json", morphism_text("F2", {{"phi", identity_json(2)}, {"rho", identity_json(1)}}));
    Run listed = run_cli({"exactseq", dir.file("z2.json"), "--morphisms", id, sw});
    CHECK(listed.code == exit_undecided);
    CHECK(listed.machine()["result"]["inn"] == 1);
    CHECK(listed.machine()["result"]["out"].is_null());
}

TEST_CASE("machine blocks are deterministic") {
    TempDir dir;
    REQUIRE(run_cli({"build", "matrix", "--field", "F2", "-o", dir.file("m2.json")}).code == 0);
    const std::string id = dir.write("id.json", morphism_text("F2", {{"phi", identity_json(4)}, {"rho", identity_json(1)}}));
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"exactseq", dir.file("m2.json"), "--enumerate"},
          std::vector<std::string>{"inner", dir.file("m2.json"), id, "--budget", "1", "--seed", "7"},
          std::vector<std::string>{"inner", dir.file("m2.json"), id, "--budget", "1", "--seed", "2"},
          std::vector<std::string>{"dual", dir.file("m2.json"), "--side", "left"},
          std::vector<std::string>{"validate", dir.file("m2.json")}}) {
        Run a = run_cli(args), b = run_cli(args);
        CHECK(a.code == b.code);
        CHECK(a.machine_text() == b.machine_text());
    }
    Run b1 = run_cli({"build", "graded-coring", "--field", "F3"});
    Run b2 = run_cli({"build", "graded-coring", "--field", "F3"});
    CHECK(b1.out == b2.out);
    CHECK(parse_document(b1.out).kind == "coring");
}

TEST_CASE("dual, convinv, cotensor and cointegral commands") {
    TempDir dir;
    Field f = Field::prime(3);
    auto g = share(grouplike_coalgebra(f, 2));
    const std::string gpath = dir.write("g.json", write_document(coring_document(*g)));
    Run d = run_cli({"dual", gpath});
    CHECK(d.code == exit_pass);
    CHECK(d.machine()["result"]["dim"] == 2);

    json p = rows({{"1", "2"}});
    json doc = {{"format-version", 1}, {"field", "Fp"}, {"p", 3}, {"kind", "dual-element"}, {"payload", {{"p", p}}}};
    const std::string ppath = dir.write("p.json", doc.dump());
    Run inv = run_cli({"convinv", gpath, ppath});
    CHECK(inv.code == exit_pass);
    CHECK(inv.machine()["result"]["invertible"] == true);
    CHECK(inv.machine()["result"]["inverse"] == rows({{"1", "2"}}));
    CHECK(run_cli({"validate", ppath, "--coring", gpath}).code == exit_pass);
    doc["payload"]["p"] = rows({{"1", "0"}});
    Run not_inv = run_cli({"convinv", gpath, dir.write("p0.json", doc.dump())});
    CHECK(not_inv.machine()["result"]["invertible"] == false);

    Bicomodule right = Bicomodule::regular_right(g);
    Bimodule left_carrier = g->carrier().forget_right();
    TensorProduct t(g->carrier(), left_carrier);
    Matrix lambda(f, t.dim(), 2);
    for (std::size_t k = 0; k < 2; ++k) lambda.set_column(k, t.project(g->delta_ambient(unit_vector(f, 2, k))));
    Bicomodule left = Bicomodule::left_comodule(g, left_carrier, lambda);
    REQUIRE(check_comodule(left).ok());
    const std::string mr = dir.write("mr.json", write_document(comodule_document(right)));
    const std::string ml = dir.write("ml.json", write_document(comodule_document(left)));
    CHECK(run_cli({"validate", ml}).code == exit_pass);
    Run cot = run_cli({"cotensor", mr, ml});
    CAPTURE(cot.out);
    CHECK(cot.code == exit_pass);
    CHECK(cot.machine()["result"]["dim-cotensor"] == 2);
    CHECK(cot.machine()["result"]["dim-tensor"] == 4);

    REQUIRE(run_cli({"build", "graded-coring", "--field", "F3", "-o", dir.file("gc.json")}).code == 0);
    Run ci = run_cli({"cointegral", dir.file("gc.json")});
    CHECK(ci.code == exit_pass);
    CHECK(ci.machine()["result"]["found"] == true);
}

TEST_CASE("fast-path kernel commands agree with the generic test") {
    TempDir dir;
    REQUIRE(run_cli({"build", "graded", "--field", "F3", "-o", dir.file("g.json")}).code == 0);
    REQUIRE(run_cli({"build", "entwining", "--field", "F3", "--psi", "graded", "-o", dir.file("e.json")}).code == 0);
    REQUIRE(run_cli({"build", "dk", "--field", "F3", "-o", dir.file("dk.json")}).code == 0);
    json id2 = identity_json(2), swap = rows({{"0", "1"}, {"1", "0"}});
    json id4 = identity_json(4);
    // a ⊗ x -> a ⊗ x·1, the identity, and the X-translation a ⊗ x -> a ⊗ x g.
    json shift = json::array();
    for (std::size_t r = 0; r < 4; ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < 4; ++c) row.push_back((r / 2 == c / 2 && r % 2 != c % 2) ? "1" : "0");
        shift.push_back(row);
    }
    for (const json& phi : {id4, shift}) {
        const std::string m = dir.write("m.json", morphism_text("F3", {{"phi", phi}, {"rho", id2}}));
        Run r = run_cli({"graded-ker", dir.file("g.json"), m, "--cross-check"});
        CAPTURE(r.out);
        CHECK(r.code == exit_pass);
        CHECK(r.machine()["result"]["verdict"] == r.machine()["result"]["cross-check"]);
    }
    for (const json& gamma : {id2, swap}) {
        const std::string m = dir.write("t.json", morphism_text("F3", {{"alpha", id2}, {"gamma", gamma}, {"hbar", id2}}));
        Run e = run_cli({"entwining-ker", dir.file("e.json"), m, "--cross-check"});
        CAPTURE(e.out);
        CHECK(e.code == exit_pass);
        Run k = run_cli({"dk-ker", dir.file("dk.json"), m, "--cross-check"});
        CAPTURE(k.out);
        CHECK(k.code == exit_pass);
        CHECK(e.machine()["result"]["verdict"] == k.machine()["result"]["verdict"]);
    }
}
