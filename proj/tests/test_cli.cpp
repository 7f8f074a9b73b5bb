#include <catch2/catch_amalgamated.hpp>

#include <adcat/cli.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace adcat;
namespace fs = std::filesystem;

namespace {

struct run_result {
    int code = 0;
    std::string out;
    json doc;
};

run_result run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out;
    run_result r;
    r.code = cli_run(std::move(args), in, out);
    r.out = out.str();
    if (!r.out.empty()) r.doc = json::parse(r.out);
    return r;
}

const fs::path& fixture_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "adcat_cli_fixtures";
        fs::create_directories(d);
        auto put = [&](const char* name, const std::string& text) {
            std::ofstream(d / name) << text;
        };
        put("D0.json", R"({"name":"D0","basis":{"0":["x0"]},"aug":{"x0":1}})");
        put("D1.json", R"({"name":"D1","basis":{"0":["x0s","x0t"],"1":["x1"]},)"
                       R"("d":{"x1":{"x0t":1,"x0s":-1}},"aug":{"x0s":1,"x0t":1}})");
        put("g.json", R"({"source":"D0","target":"D1","maps":{"x0":{"x0s":1}}})");
        put("gp.json", R"({"source":"D0","target":"D1","maps":{"x0":{"x0t":1}}})");
        put("f.json", R"({"source":"D0","target":"D0","maps":{"x0":{"x0":1}}})");
        put("h.json", R"({"components":{"x0":{"x1":1}},"variance":"anti","level":1})");
        put("k.json", R"({"components":{},"variance":"anti","level":1})");
        put("H2.json", R"({"components":{},"variance":"anti","level":2})");
        put("bad.json", "{\"name\": \"broken\"");
        return d;
    }();
    return dir;
}

std::string fx(const char* name) { return (fixture_dir() / name).string(); }

} // namespace

TEST_CASE("complex constructors print valid workspace files", "[cli]") {
    run_result r = run({"simplex", "2"});
    REQUIRE(r.code == 0);
    REQUIRE(r.doc.at("name") == "Delta2");
    REQUIRE(r.doc.at("basis").at("0").size() == 3);
    REQUIRE(r.doc.at("basis").at("2") == json::array({"(0,1,2)"}));

    run_result d = run({"disk", "3"});
    REQUIRE(d.code == 0);
    REQUIRE(d.doc.at("name") == "D3");
    REQUIRE(d.doc.at("basis").at("3") == json::array({"x3"}));

    run_result t = run({"theta", "1 0 1"});
    REQUIRE(t.code == 0);
    REQUIRE(t.doc.at("basis").at("1").size() == 2);
}

TEST_CASE("the output bytes are deterministic", "[cli]") {
    run_result a = run({"join", fx("D1.json"), fx("D1.json")});
    run_result b = run({"join", fx("D1.json"), fx("D1.json")});
    REQUIRE(a.code == 0);
    REQUIRE(a.out == b.out);
}

TEST_CASE("subcommands chain through standard input", "[cli]") {
    run_result s2 = run({"simplex", "2"});
    run_result chk = run({"check-steiner", "-"}, s2.out);
    REQUIRE(chk.code == 0);
    REQUIRE(chk.doc.at("strong_steiner") == true);

    run_result s0 = run({"simplex", "0"});
    std::ofstream(fixture_dir() / "s0.json") << s0.out;
    run_result s1 = run({"simplex", "1"});
    std::ofstream(fixture_dir() / "s1.json") << s1.out;
    run_result j = run({"join", fx("s0.json"), fx("s1.json")});
    REQUIRE(j.code == 0);
    run_result info = run({"info", "-"}, j.out);
    REQUIRE(info.code == 0);
    REQUIRE(info.doc.at("basis_sizes") == json::array({3, 3, 1}));
    REQUIRE(info.doc.at("decent") == true);
}

TEST_CASE("malformed and missing files exit with the parse code", "[cli]") {
    run_result bad = run({"validate", fx("bad.json")});
    REQUIRE(bad.code == 2);
    REQUIRE(bad.doc.contains("error"));

    run_result missing = run({"info", fx("no_such_file.json")});
    REQUIRE(missing.code == 2);

    run_result usage = run({"no-such-command"});
    REQUIRE(usage.code == 1);
}

TEST_CASE("validation separates structural failure from parse failure", "[cli]") {
    std::ofstream(fixture_dir() / "cycle.json")
        << R"({"name":"c","basis":{"0":["v"],"1":["a"]},"d":{"a":{"v":1}},"aug":{"v":1}})";
    run_result r = run({"validate", fx("cycle.json")});
    REQUIRE(r.code == 0);   /* a verdict, not an error */
    REQUIRE(r.doc.at("ok") == false);
    REQUIRE_FALSE(r.doc.at("violations").empty());

    run_result good = run({"validate", fx("D1.json")});
    REQUIRE(good.code == 0);
    REQUIRE(good.doc.at("ok") == true);
}

TEST_CASE("atom tables are reported row by row", "[cli]") {
    run_result s2 = run({"simplex", "2"});
    std::ofstream(fixture_dir() / "s2.json") << s2.out;
    run_result r = run({"atoms", fx("s2.json"), "(0,1,2)"});
    REQUIRE(r.code == 0);
    REQUIRE(r.doc.is_array());
    REQUIRE(r.doc.size() == 1);
    const json& rows = r.doc.at(0).at("table").at("rows");
    REQUIRE(rows.at(0) == json::array({json{{"(0)", 1}}, json{{"(2)", 1}}}));
}

TEST_CASE("duality keywords and degree lists both parse", "[cli]") {
    run_result all = run({"dual", fx("D1.json"), "op"});
    REQUIRE(all.code == 0);
    REQUIRE(all.doc.at("d").at("x1") == json({{"x0s", 1}, {"x0t", -1}}));

    run_result odd = run({"dual", fx("D1.json"), "1"});
    REQUIRE(odd.code == 0);
    REQUIRE(odd.doc.at("d") == all.doc.at("d"));

    run_result bad = run({"dual", fx("D1.json"), "0"});
    REQUIRE(bad.code == 1);
    REQUIRE(bad.doc.contains("error"));
}

TEST_CASE("truncation reports quotients it cannot rebase", "[cli]") {
    run_result d3 = run({"disk", "3"});
    std::ofstream(fixture_dir() / "D3.json") << d3.out;
    run_result j = run({"join", fx("D1.json"), fx("D3.json")});
    REQUIRE(j.code == 0);
    std::ofstream(fixture_dir() / "J13.json") << j.out;

    run_result t1 = run({"trunc", fx("J13.json"), "1"});
    REQUIRE(t1.code == 0);

    run_result t2 = run({"trunc", fx("J13.json"), "2"});
    REQUIRE(t2.code == 1);
    REQUIRE(t2.doc.contains("error"));

    run_result plain = run({"trunc", fx("J13.json"), "2", "--bete"});
    REQUIRE(plain.code == 0);
}

TEST_CASE("towers assemble from workspace morphisms and homotopies", "[cli]") {
    std::vector<std::string> loads = {"--load", fx("D0.json"), "--load", fx("D1.json")};

    std::vector<std::string> pb = {"pullback", fx("f.json"), fx("h.json"),
                                   fx("g.json"), fx("gp.json")};
    pb.insert(pb.end(), loads.begin(), loads.end());
    run_result r = run(pb);
    REQUIRE(r.code == 0);
    REQUIRE(r.doc.at("operator") == "pullback");
    REQUIRE(r.doc.at("matrices").at(0).at("degree") == 0);
    REQUIRE(r.doc.at("matrices").at(0).at("columns").size() == 3);

    std::vector<std::string> cn = {"cone",      fx("k.json"),  fx("H2.json"), fx("f.json"),
                                   fx("f.json"), fx("g.json"), fx("gp.json"), fx("h.json"),
                                   fx("h.json")};
    cn.insert(cn.end(), loads.begin(), loads.end());
    run_result c = run(cn);
    REQUIRE(c.code == 0);
    REQUIRE(c.doc.at("operator") == "cone");
    REQUIRE(c.doc.at("matrices").at(0).at("image_degree") == 1);
}

TEST_CASE("slices report ranks and optionally enumerate", "[cli]") {
    std::vector<std::string> loads = {"--load", fx("D0.json"), "--load", fx("D1.json")};
    std::vector<std::string> args = {"slice", fx("D1.json"), fx("g.json"), "--enumerate"};
    args.insert(args.end(), loads.begin(), loads.end());
    run_result r = run(args);
    REQUIRE(r.code == 0);
    REQUIRE(r.doc.at("ranks") == json::array({3, 1, 0}));
    REQUIRE(r.doc.at("ok") == true);
    REQUIRE(r.doc.contains("positive_counts"));

    std::vector<std::string> cargs = {"coslice", fx("D1.json"), fx("gp.json")};
    cargs.insert(cargs.end(), loads.begin(), loads.end());
    run_result co = run(cargs);
    REQUIRE(co.code == 0);
    REQUIRE(co.doc.at("ranks") == json::array({3, 1, 0}));
    REQUIRE(co.doc.at("ok") == true);
}

TEST_CASE("nerve and cell counts match the library enumerations", "[cli]") {
    std::ofstream(fixture_dir() / "s1.json") << run({"simplex", "1"}).out;
    run_result n0 = run({"nerve", fx("s1.json"), "0"});
    run_result n1 = run({"nerve", fx("s1.json"), "1"});
    run_result n2 = run({"nerve", fx("s1.json"), "2"});
    REQUIRE(n0.doc.at("count") == 2);
    REQUIRE(n1.doc.at("count") == 3);
    REQUIRE(n2.doc.at("count") == 4);

    run_result plain = run({"cells", fx("s1.json"), "1"});
    REQUIRE(plain.doc.at("count") == 3);
    run_result under = run({"cells", fx("s1.json"), "1", "--slice", "(0)"});
    REQUIRE(under.doc.at("count") == 3);
    run_result cyl = run({"cells", fx("s1.json"), "1", "--cylinder", "--cap", "1"});
    REQUIRE(cyl.doc.at("count") == 6);
    run_result both = run({"cells", fx("s1.json"), "1", "--slice", "(0)", "--cylinder"});
    REQUIRE(both.code == 1);
}

TEST_CASE("the crosscheck subcommand reports agreement", "[cli]") {
    std::ofstream(fixture_dir() / "s1.json") << run({"simplex", "1"}).out;
    run_result r = run({"crosscheck", fx("s1.json"), "(0)", "--max-dim", "2"});
    REQUIRE(r.code == 0);
    REQUIRE(r.doc.at("ok") == true);
}

TEST_CASE("pushouts report their legs and the glued object", "[cli]") {
    run_result r = run({"pushout", fx("g.json"), fx("gp.json"), "--load", fx("D0.json"),
                        "--load", fx("D1.json")});
    REQUIRE(r.code == 0);
    REQUIRE(r.doc.at("ok") == true);
    REQUIRE(r.doc.at("strongly_loop_free") == true);
    REQUIRE(r.doc.at("pushout").at("basis").at("0").size() == 3);
}

TEST_CASE("checking a morphism file resolves endpoints by name", "[cli]") {
    run_result r = run({"check-rigid", fx("g.json"), "--load", fx("D0.json"), "--load",
                        fx("D1.json")});
    REQUIRE(r.code == 0);
    REQUIRE(r.doc.at("rigid") == true);
    REQUIRE(r.doc.at("monomorphism") == true);
}

TEST_CASE("standard input is only granted once per invocation", "[cli]") {
    run_result r = run({"join", "-", "-"}, run({"simplex", "0"}).out);
    REQUIRE(r.code != 0);
}

TEST_CASE("complexes survive a serialization round trip", "[cli]") {
    complex K = join_complex(disk_complex(2), simplex_complex(1));
    complex back = complex_from_json(complex_to_json(K));
    REQUIRE(back == K);
    REQUIRE(back.name() == K.name());
}

TEST_CASE("degree keys and coefficients are checked while parsing", "[cli]") {
    REQUIRE_THROWS_AS(complex_from_json(json::parse(R"({"basis":{"x":["a"]}})")), parse_error);
    REQUIRE_THROWS_AS(complex_from_json(json::parse(R"({"basis":{"0":["a"]},"aug":{"a":"one"}})")),
                      parse_error);
    /* a generator name in two degrees cannot anchor a differential */
    json two = json::parse(R"({"basis":{"0":["a"],"2":["a"],"1":["b"]},"d":{"a":{"b":1}}})");
    REQUIRE_THROWS_AS(complex_from_json(two), parse_error);
    /* values are resolved later: a phantom target parses but fails validation */
    json ghost = json::parse(R"({"basis":{"0":["a"],"1":["b"]},"d":{"b":{"c":1}},"aug":{"a":1}})");
    REQUIRE_FALSE(validate_complex(complex_from_json(ghost)).ok());
}

TEST_CASE("morphisms serialize with their endpoint names", "[cli]") {
    auto S = share(disk_complex(0));
    auto T = share(disk_complex(1));
    morphism g(S, T);
    g.set_image(0, "x0", chain::unit(0, "x0s"));
    json o = morphism_to_json(g);
    REQUIRE(o.at("source") == "D0");
    REQUIRE(o.at("target") == "D1");
    REQUIRE(morphism_from_json(o, S, T) == g);
}

TEST_CASE("homotopy files rebuild against their endpoints", "[cli]") {
    auto D0 = share(disk_complex(0));
    auto D1 = share(disk_complex(1));
    morphism g(D0, D1), gp(D0, D1);
    g.set_image(0, "x0", chain::unit(0, "x0s"));
    gp.set_image(0, "x0", chain::unit(0, "x0t"));
    json o = json::parse(R"({"components":{"x0":{"x1":1}},"variance":"anti","level":1})");
    homotopy h = build_homotopy(homotopy_file_from_json(o), D0, D1,
                                std::make_shared<const homotopy>(from_morphism(g)),
                                std::make_shared<const homotopy>(from_morphism(gp)));
    REQUIRE(validate_homotopy(h).ok());
    REQUIRE(homotopy_to_json(h).at("components") == o.at("components"));

    json badkey = json::parse(R"({"components":{"y9":{"x1":1}},"variance":"anti","level":1})");
    REQUIRE_THROWS_AS(build_homotopy(homotopy_file_from_json(badkey), D0, D1, nullptr, nullptr),
                      parse_error);
    json badvar = json::parse(R"({"components":{},"variance":"sideways","level":1})");
    REQUIRE_THROWS_AS(homotopy_file_from_json(badvar), parse_error);
}
