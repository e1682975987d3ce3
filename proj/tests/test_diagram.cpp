#include <doctest.h>

#include "hfk11/builtins.hpp"
#include "hfk11/diagram.hpp"
#include "hfk11/errors.hpp"

using namespace hfk;

TEST_CASE("every builtin diagram is valid") {
    for (const auto& name : builtin_names()) {
        CAPTURE(name);
        auto d = builtin_diagram(name);
        auto violations = validate(d);
        for (const auto& v : violations) {
            CAPTURE(to_string(v.code));
            CAPTURE(v.detail);
        }
        CHECK(violations.empty());
    }
    CHECK_THROWS_AS(builtin_diagram("nope"), UnknownDiagram);
}

TEST_CASE("geometric intersection counts") {
    CHECK(geometric_intersection_count(builtin_diagram("unknot")) == 1);
    CHECK(geometric_intersection_count(builtin_diagram("trefoil_right")) == 3);
    CHECK(geometric_intersection_count(builtin_diagram("trefoil_left")) == 3);
    CHECK(geometric_intersection_count(builtin_diagram("figure_eight")) == 5);
    CHECK(geometric_intersection_count(builtin_diagram("knot_9_42")) == 9);
}

TEST_CASE("serialization round trip is exact and deterministic") {
    for (const auto& name : builtin_names()) {
        CAPTURE(name);
        auto d = builtin_diagram(name);
        auto text = serialize_diagram(d);
        auto d2 = parse_diagram(text);
        CHECK(serialize_diagram(d2) == text);
    }
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(parse_diagram("not json"), ParseError);
    CHECK_THROWS_AS(parse_diagram("{}"), ParseError);
    CHECK_THROWS_AS(parse_diagram(R"({"alpha": [["1/2","bogus"]], "alpha_period": [0,1],
        "beta": [["0","0"]], "beta_period": [1,0], "w": ["1/4","1/4"], "z": ["3/4","1/4"]})"),
                    ParseError);
}

TEST_CASE("validation failures carry reason codes") {
    auto base = builtin_diagram("unknot");

    SUBCASE("coincident basepoints") {
        auto d = base;
        d.z = d.w;
        auto v = validate(d);
        REQUIRE_FALSE(v.empty());
        CHECK(v.front().code == ViolationCode::DuplicateBasepoint);
        CHECK_THROWS_AS(parse_diagram(serialize_diagram(d)), ValidationError);
    }

    SUBCASE("basepoint on a curve") {
        auto d = base;
        d.w = {Rational(1, 2), Rational(1, 8)};  // on alpha
        auto v = validate(d);
        REQUIRE_FALSE(v.empty());
        CHECK(v.front().code == ViolationCode::BasepointOnCurve);
    }

    SUBCASE("parallel curves have intersection number zero") {
        auto d = base;
        d.beta.vertices = {{Rational(0), Rational(0)}};
        d.beta.period = {0, 1};  // parallel to alpha
        bool found = false;
        for (const auto& v : validate(d))
            if (v.code == ViolationCode::IntersectionNumberNotUnit) found = true;
        CHECK(found);
    }

    SUBCASE("null-homotopic curve") {
        auto d = base;
        d.alpha.period = {0, 0};
        bool found = false;
        for (const auto& v : validate(d))
            if (v.code == ViolationCode::NullHomotopicCurve) found = true;
        CHECK(found);
    }

    SUBCASE("self-intersecting alpha") {
        auto d = base;
        // a zig that recrosses its own column on the torus
        d.alpha.vertices = {{Rational(1, 2), Rational(0)},
                            {Rational(1, 2), Rational(3, 4)},
                            {Rational(1, 4), Rational(3, 4)},
                            {Rational(1, 4), Rational(1, 4)},
                            {Rational(3, 4), Rational(1, 4)},
                            {Rational(3, 4), Rational(1, 2)}};
        // last vertex connects to (1/2, 1): the horizontal at 1/4 crosses the
        // first column segment
        bool found = false;
        for (const auto& v : validate(d))
            if (v.code == ViolationCode::SelfIntersecting) found = true;
        CHECK(found);
    }

    SUBCASE("tangential contact is rejected as non-transverse") {
        auto d = base;
        // beta with a vertex exactly on alpha's column
        d.beta.vertices = {{Rational(0), Rational(1, 2)}, {Rational(1, 2), Rational(1, 2)}};
        bool found = false;
        for (const auto& v : validate(d))
            if (v.code == ViolationCode::NotTransverse) found = true;
        CHECK(found);
    }
}

TEST_CASE("reflection flips the vertical coordinate and swaps basepoints") {
    auto d = builtin_diagram("trefoil_right");
    auto m = reflect_diagram(d);
    CHECK(m.alpha.period.second == -d.alpha.period.second);
    CHECK(m.w.x == d.z.x);
    CHECK(m.w.y == -d.z.y);
    CHECK(validate(m).empty());
}
