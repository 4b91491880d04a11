#include <catch2/catch_amalgamated.hpp>

#include <metriclab/io.hpp>

#include <cstdio>
#include <fstream>

using namespace metriclab;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = "/tmp/metriclab-io-" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("numbers serialize with infinities as strings") {
    CHECK(num_json(0.25) == json(0.25));
    CHECK(num_json(kInf) == json("infinity"));
    CHECK(num_json(-kInf) == json("-infinity"));
    CHECK(num_from(json(2.5)) == 2.5);
    CHECK(num_from(json("infinity")) == kInf);
    CHECK(num_from(json("-infinity")) == -kInf);
    CHECK_THROWS_AS(num_from(json("three")), std::invalid_argument);
}

TEST_CASE("space files round trip through the matrix form") {
    auto s = build_space_from_matrix({"a", "b", "c"}, {{0, 1, 3}, {1, 0, 2}, {3, 2, 0}}, 0.0);
    json j = space_to_json(s);
    CHECK(j.at("labels") == json::array({"a", "b", "c"}));
    CHECK(j.at("axiom_tol") == json(0.0));
    CHECK(j.at("matrix")[0] == json::array({0.0, 1.0, 3.0}));

    auto back = space_from_json(j);
    CHECK(back.flat() == s.flat());
    CHECK(back.labels() == s.labels());
    CHECK(back.axiom_tol() == s.axiom_tol());
}

TEST_CASE("matrix defaults: generated labels and scaled tolerance") {
    json j = {{"matrix", {{0.0, 2.0}, {2.0, 0.0}}}};
    auto s = space_from_json(j);
    CHECK(s.labels() == std::vector<std::string>{"p0", "p1"});
    CHECK(s.axiom_tol() == default_axiom_tol(2.0));
}

TEST_CASE("point-cloud space files") {
    json j = {{"points", {{0.0, 0.0}, {3.0, 4.0}}}};
    auto s = space_from_json(j);  // euclidean is the default metric
    CHECK(s.d(0, 1) == 5.0);
    CHECK(s.axiom_tol() == default_axiom_tol(5.0));

    json l1 = {{"points", {{0.0, 0.0}, {3.0, 4.0}}}, {"metric", "l1"}, {"axiom_tol", 0.0}};
    auto t = space_from_json(l1);
    CHECK(t.d(0, 1) == 7.0);
    CHECK(t.axiom_tol() == 0.0);

    json cheb = {{"points", {{0.0, 0.0}, {3.0, 4.0}}}, {"metric", "chebyshev"}};
    CHECK(space_from_json(cheb).d(0, 1) == 4.0);

    json bad = {{"points", {{0.0}, {1.0}}}, {"metric", "manhattan"}};
    CHECK_THROWS_AS(space_from_json(bad), std::invalid_argument);
    CHECK_THROWS_AS(space_from_json(json{{"labels", {"a"}}}), std::invalid_argument);
    CHECK_THROWS_AS(space_from_json(json::array()), std::invalid_argument);
}

TEST_CASE("cover files round trip with every member kind") {
    auto s = build_space_from_matrix({"a", "b", "c"}, {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}, 0.0);
    Cover c;
    c.elements.push_back(ball_element(1, 1.5, false));
    CoverElement ex = explicit_element({0, 2});
    ex.label = "ends";
    c.elements.push_back(ex);
    c.elements.push_back(complement_element({1}));
    ParametricBallFamily fam;
    fam.range = 2;
    fam.centers = {0, 2};
    fam.radius = {RadiusFormula::Type::constant, 1.25};
    fam.open = false;
    fam.label = "pair";
    c.families.push_back(fam);
    c.target = {0, 1, 2};

    json j = cover_to_json(c);
    auto back = cover_from_json(j, s);
    REQUIRE(back.elements.size() == 3);
    CHECK(back.elements[0].kind == CoverElement::Kind::open_ball);
    CHECK(back.elements[0].center == 1);
    CHECK(back.elements[0].radius == 1.5);
    CHECK_FALSE(back.elements[0].open);
    CHECK(back.elements[1].label == "ends");
    CHECK(back.elements[1].points == PointSet{0, 2});
    CHECK(back.elements[2].kind == CoverElement::Kind::complement_of);
    REQUIRE(back.families.size() == 1);
    CHECK(back.families[0].range == 2);
    CHECK(back.families[0].centers == std::vector<int>{0, 2});
    CHECK(back.families[0].radius.type == RadiusFormula::Type::constant);
    CHECK(back.families[0].radius.c == 1.25);
    CHECK_FALSE(back.families[0].open);
    CHECK(back.families[0].label == "pair");
    CHECK(back.target == c.target);

    auto before = realize(s, c);
    auto after = realize(s, back);
    REQUIRE(before.size() == after.size());
    for (std::size_t i = 0; i < before.size(); ++i) {
        CHECK(before[i].label == after[i].label);
        CHECK(before[i].points == after[i].points);
    }
}

TEST_CASE("a cover without a target spans the whole space") {
    auto s = build_space_from_matrix({"a", "b", "c"}, {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}, 0.0);
    json j = {{"elements", {{{"kind", "explicit"}, {"points", {0, 1, 2}}}}}};
    auto c = cover_from_json(j, s);
    CHECK(c.target == PointSet{0, 1, 2});

    json bad_kind = {{"elements", {{{"kind", "disk"}, {"points", {0}}}}}};
    CHECK_THROWS_AS(cover_from_json(bad_kind, s), std::invalid_argument);
}

TEST_CASE("radius formula parsing") {
    auto f = radius_formula_from_json(json{{"type", "harmonic"}});
    CHECK(f.type == RadiusFormula::Type::harmonic);
    CHECK(f.c == 0.0);
    auto g = radius_formula_from_json(json{{"type", "scaled"}, {"c", 0.5}});
    CHECK(g.c == 0.5);
    CHECK_THROWS_AS(radius_formula_from_json(json{{"type", "cubic"}}), std::invalid_argument);
    CHECK_THROWS(radius_formula_from_json(json::object()));
}

TEST_CASE("file loading distinguishes missing, malformed, and valid input") {
    auto good = write_temp("good.json", "{\"matrix\": [[0, 1], [1, 0]]}");
    auto s = load_space(good);
    CHECK(s.n() == 2);

    auto broken = write_temp("broken.json", "{\"matrix\": [[0, 1],");
    CHECK_THROWS_AS(load_json_file(broken), std::invalid_argument);
    CHECK_THROWS_AS(load_json_file("/tmp/metriclab-io-does-not-exist.json"), std::invalid_argument);

    auto cover_path = write_temp("cover.json", "{\"elements\": [{\"kind\": \"explicit\", \"points\": [0, 1]}]}");
    auto c = load_cover(cover_path, s);
    CHECK(c.target == PointSet{0, 1});
    std::remove(good.c_str());
    std::remove(broken.c_str());
    std::remove(cover_path.c_str());
}

TEST_CASE("report payload shapes") {
    auto s = build_space_from_matrix({"a", "b", "c"}, {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}, 0.0);

    SECTION("axiom violations carry kind, magnitude, witness") {
        try {
            build_space_from_matrix({"a", "b"}, {{0, 1}, {2, 0}}, 0.0);
            FAIL("expected MetricError");
        } catch (const MetricError& e) {
            json j = to_json(e.violations);
            REQUIRE(j.is_array());
            REQUIRE(!j.empty());
            CHECK(j[0].contains("kind"));
            CHECK(j[0].contains("magnitude"));
            CHECK(j[0].at("witness").is_array());
        }
    }

    SECTION("complete and bracketed Lebesgue reports differ in keys") {
        Cover c;
        for (int i = 0; i < 3; ++i) c.elements.push_back(explicit_element({i}));
        c.target = {0, 1, 2};
        json complete = to_json(lebesgue_exact(s, c));
        CHECK(complete.contains("exact"));
        CHECK_FALSE(complete.contains("lower"));
        CHECK(complete.at("witness") == json::array({0, 1}));
        CHECK(complete.at("method") == "minimal-bad-set-search");

        json bracket = to_json(lebesgue_exact(s, c, 0));
        CHECK_FALSE(bracket.contains("exact"));
        CHECK(bracket.at("lower") == json(0.0));
        CHECK(bracket.at("upper") == json(1.0));
        CHECK(bracket.at("witness").is_null());
        CHECK(bracket.at("complete") == json(false));
    }

    SECTION("infinite values appear as strings") {
        Cover whole;
        whole.elements.push_back(explicit_element({0, 1, 2}));
        whole.target = {0, 1, 2};
        json j = to_json(lebesgue_exact(s, whole));
        CHECK(j.at("exact") == json("infinity"));
        auto two = build_space_from_matrix({"a", "b"}, {{0, 1}, {1, 0}}, 0.0);
        json conv = to_json(metric_convexity_check(two, 0.0));
        CHECK(conv.at("violations")[0].at("value") == json("infinity"));
    }

    SECTION("chain, component, and net payloads") {
        auto chain = eps_chain(s, 0, 2, 1.0);
        REQUIRE(chain.has_value());
        json cj = to_json(*chain);
        CHECK(cj.at("length") == json(2));
        CHECK(cj.at("points") == json::array({0, 1, 2}));

        json comps = components_json(eps_components(s, 1.0));
        CHECK(comps.at("count") == json(1));

        json net = to_json(greedy_eps_net(s, {0, 1, 2}, 1.0));
        CHECK(net.at("centers") == json::array({0, 2}));
        REQUIRE(net.at("assignment").is_array());
        CHECK(net.at("assignment")[0] == json{{"center", 0}, {"point", 0}});

        auto fc = finite_chainability_check(s, {0, 1, 2}, 1.0, 2, {0}, ChainThrough::whole_space);
        json fj = to_json(fc);
        CHECK(fj.at("ok") == json(true));
        CHECK(fj.at("unreachable").is_null());
    }

    SECTION("subcover, spectrum, incidence, and expectation payloads") {
        Cover c;
        c.elements.push_back(explicit_element({0, 1}));
        c.elements.push_back(explicit_element({1, 2}));
        c.target = {0, 1, 2};
        json sub = to_json(finite_subcover(s, c, {1}));
        CHECK(sub.at("ok") == json(true));
        CHECK(sub.at("labels") == json::array({"elem-000"}));
        CHECK(sub.at("uncovered").is_null());

        json spec = to_json(spectrum(s, 0));
        CHECK(spec.at("sup") == json(2.0));
        CHECK(spec.at("sorted_distances") == json::array({0.0, 1.0, 2.0}));

        json inc = to_json(local_finiteness_profile(s, c, 0.5));
        CHECK(inc.at("max_incidence") == json(2));
        REQUIRE(inc.at("incidence").is_array());
        CHECK(inc.at("incidence")[1] == json{{"count", 2}, {"point", 1}});

        json exp = to_json(std::vector<ExpectationResult>{{"demo/claim", true, "fine"}});
        CHECK(exp[0] == json{{"claim", "demo/claim"}, {"details", "fine"}, {"pass", true}});

        json real = to_json(realize(s, c));
        CHECK(real[0].at("label") == "elem-000");
        CHECK(real[0].at("points") == json::array({0, 1}));
    }
}
