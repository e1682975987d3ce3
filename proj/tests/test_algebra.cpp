#include <doctest.h>

#include "fixtures.hpp"
#include "hfk11/bigraded.hpp"
#include "hfk11/errors.hpp"
#include "hfk11/laurent.hpp"

using namespace hfk;

namespace {

BigradedComplex hat_part(const KnotComplex& c) {
    BigradedComplex b;
    b.coeffs = c.coeffs;
    for (size_t i = 0; i < c.generators.size(); ++i)
        b.generators.push_back({std::to_string(i), c.generators[i].alexander,
                                c.generators[i].maslov});
    for (const auto& a : c.arrows)
        if (a.n_w == 0 && a.n_z == 0) b.arrows.push_back({a.from, a.to, a.coefficient});
    return b;
}

}  // namespace

TEST_CASE("homology of a single generator") {
    BigradedComplex c;
    c.generators.push_back({"a", 0, 0});
    auto h = homology(c);
    CHECK(h.rank(0, 0) == 1);
    CHECK(h.total_rank() == 1);
}

TEST_CASE("acyclic pair has no homology") {
    BigradedComplex c;
    c.generators.push_back({"a", 0, 1});
    c.generators.push_back({"b", 0, 0});
    c.arrows.push_back({0, 1, 1});
    CHECK(homology(c).total_rank() == 0);
}

TEST_CASE("the transcribed nine-generator complex has the published hat homology") {
    auto hat = homology(hat_part(fixtures::nine_forty_two()));
    auto expect = fixtures::ranks(
        {{2, 3, 1}, {1, 2, 2}, {0, 1, 2}, {0, 0, 1}, {-1, 0, 2}, {-2, -1, 1}});
    CHECK(hat.same_free_ranks(expect));
}

TEST_CASE("verify_d_squared") {
    BigradedComplex empty;
    CHECK(verify_d_squared(empty));

    BigradedComplex single;
    single.generators.push_back({"a", 0, 1});
    single.generators.push_back({"b", 0, 0});
    single.arrows.push_back({0, 1, 1});
    CHECK(verify_d_squared(single));

    BigradedComplex chain;
    chain.generators.push_back({"a", 0, 2});
    chain.generators.push_back({"b", 0, 1});
    chain.generators.push_back({"c", 0, 0});
    chain.arrows.push_back({0, 1, 1});
    chain.arrows.push_back({1, 2, 1});
    CHECK_FALSE(verify_d_squared(chain));
    CHECK_THROWS_AS(homology(chain), DifferentialNotSquareZero);
}

TEST_CASE("integer homology reports torsion") {
    BigradedComplex c;
    c.coeffs = Coefficients::Integer;
    c.generators.push_back({"a", 0, 1});
    c.generators.push_back({"b", 0, 0});
    c.arrows.push_back({0, 1, 2});
    auto h = homology(c);
    CHECK(h.total_rank() == 0);
    REQUIRE(h.torsion.size() == 1);
    CHECK(h.torsion[0].alexander == 0);
    CHECK(h.torsion[0].maslov == 0);
    CHECK(h.torsion[0].order == 2);

    // universal coefficients: mod-2 ranks dominate integer free ranks
    BigradedComplex m = c;
    m.coeffs = Coefficients::Mod2;
    auto h2 = homology(m);
    CHECK(h2.rank(0, 0) >= h.rank(0, 0));
    CHECK(h2.rank(0, 1) >= h.rank(0, 1));
}

TEST_CASE("tensor with the one-generator complex is the identity on ranks") {
    BigradedComplex unit;
    unit.generators.push_back({"u", 0, 0});
    auto c = hat_part(fixtures::nine_forty_two());
    auto t = tensor_complex(unit, c);
    CHECK(homology(t).same_free_ranks(homology(c)));
}

TEST_CASE("tensor square of the trefoil table") {
    // associated graded of the right trefoil: three generators, no arrows
    BigradedComplex tref;
    tref.generators.push_back({"top", 1, 0});
    tref.generators.push_back({"mid", 0, -1});
    tref.generators.push_back({"bot", -1, -2});
    auto square = tensor_complex(tref, tref);
    CHECK(square.generators.size() == 9);
    auto h = homology(square);
    CHECK(h.rank(2, 0) == 1);
    // rank generating function multiplies: total rank 9, corners rank 1
    CHECK(h.total_rank() == 9);
    CHECK(h.rank(-2, -4) == 1);
    CHECK(h.rank(0, -2) == 3);
}

TEST_CASE("tensor is associative at the level of rank summaries") {
    auto a = hat_part(fixtures::nine_forty_two());
    BigradedComplex b;
    b.generators.push_back({"p", 1, 0});
    b.generators.push_back({"q", 0, -1});
    BigradedComplex c;
    c.generators.push_back({"r", 0, 1});
    c.generators.push_back({"s", 0, 0});
    c.arrows.push_back({0, 1, 1});
    auto left = homology(tensor_complex(tensor_complex(a, b), c));
    auto right = homology(tensor_complex(a, tensor_complex(b, c)));
    CHECK(left.same_free_ranks(right));
}

TEST_CASE("euler characteristic") {
    HomologySummary unknot;
    unknot.add_rank(0, 0, 1);
    CHECK(euler_characteristic(unknot) == LaurentPolynomial(1));

    HomologySummary tref = fixtures::ranks({{1, 0, 1}, {0, -1, 1}, {-1, -2, 1}});
    LaurentPolynomial want;
    want.add_term(2, 1);
    want.add_term(0, -1);
    want.add_term(-2, 1);
    CHECK(euler_characteristic(tref) == want);

    HomologySummary towered = unknot;
    towered.towers.push_back({0, 0});
    CHECK_THROWS_AS(euler_characteristic(towered), std::invalid_argument);
}

TEST_CASE("euler characteristic is multiplicative under tensor") {
    auto a = hat_part(fixtures::nine_forty_two());
    BigradedComplex b;
    b.generators.push_back({"p", 1, 0});
    b.generators.push_back({"q", -1, 0});
    auto chi_a = euler_characteristic(homology(a));
    auto chi_b = euler_characteristic(homology(b));
    auto chi_ab = euler_characteristic(homology(tensor_complex(a, b)));
    CHECK(chi_ab == chi_a * chi_b);
}

TEST_CASE("laurent polynomial basics") {
    LaurentPolynomial p;
    p.add_term(2, 1);
    p.add_term(0, -1);
    p.add_term(-2, 1);
    CHECK(p.is_symmetric());
    CHECK(p.evaluate_at_one() == 1);
    CHECK(p.evaluate_at_minus_one() == -3);
    CHECK(p.str() == "T - 1 + T^-1");
    CHECK_FALSE(p.has_half_integer_exponents());

    LaurentPolynomial h = LaurentPolynomial::term(1, 1);  // T^(1/2)
    CHECK(h.has_half_integer_exponents());
    CHECK_THROWS_AS(h.evaluate_at_minus_one(), std::domain_error);
    CHECK((h * h) == LaurentPolynomial::term(1, 2));

    LaurentPolynomial q = p;
    q.add_term(2, -1);
    q.add_term(-2, -1);
    CHECK(q == LaurentPolynomial(-1));
}
