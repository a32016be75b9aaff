#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "errors.hpp"
#include "manifold.hpp"

using namespace ks;

TEST_CASE("lens parameters normalize modulo p") {
    CHECK(Manifold::lens(Int(7), Int(9)) == Manifold::lens(Int(7), Int(2)));
    CHECK(Manifold::lens(Int(7), Int(-5)) == Manifold::lens(Int(7), Int(2)));
    CHECK(Manifold::lens(Int(-7), Int(2)).key() == Manifold::lens(Int(-7), Int(2)).key());
    CHECK(Manifold::lens(Int(2), Int(1)).key() != Manifold::lens(Int(3), Int(1)).key());
}

TEST_CASE("lens_oriented_homeo is an equivalence relation on a parameter grid") {
    std::vector<Manifold> spaces;
    for (long p = 2; p <= 30; ++p)
        for (long q = 1; q < p; ++q)
            if (std::gcd(p, q) == 1) spaces.push_back(Manifold::lens(Int(p), Int(q)));
    // reflexive + symmetric
    for (size_t i = 0; i < spaces.size(); ++i) {
        CHECK(lens_oriented_homeo(spaces[i], spaces[i]));
        for (size_t j = i + 1; j < spaces.size(); ++j)
            CHECK(lens_oriented_homeo(spaces[i], spaces[j]) ==
                  lens_oriented_homeo(spaces[j], spaces[i]));
    }
    // known classifications
    CHECK(lens_oriented_homeo(Manifold::lens(Int(7), Int(2)), Manifold::lens(Int(7), Int(4))));
    CHECK(!lens_oriented_homeo(Manifold::lens(Int(7), Int(2)), Manifold::lens(Int(7), Int(5))));
    CHECK(!lens_oriented_homeo(Manifold::lens(Int(7), Int(2)), Manifold::lens(Int(5), Int(2))));
    CHECK(lens_oriented_homeo(Manifold::lens(Int(5), Int(2)), Manifold::lens(Int(5), Int(3))));
}

TEST_CASE("sfs multiplicities are kept sorted") {
    Manifold a = Manifold::sfs({Int(5), Int(2)}, 1);
    Manifold b = Manifold::sfs({Int(2), Int(5)}, 1);
    CHECK(a == b);
    CHECK(a.key() == b.key());
}

TEST_CASE("graph flattens nested graphs and sorts pieces") {
    Manifold inner = Manifold::graph({Manifold::cable_space(3, 2), Manifold::torus_exterior(2, 3)}, 1);
    Manifold outer1 = Manifold::graph({inner, Manifold::sfs({Int(2), Int(3)}, 1)}, 2);
    Manifold outer2 = Manifold::graph(
        {Manifold::sfs({Int(2), Int(3)}, 1), Manifold::torus_exterior(2, 3), Manifold::cable_space(3, 2)},
        2);
    CHECK(outer1 == outer2);
}

TEST_CASE("distinguish is sound on equal descriptors") {
    Manifold a = Manifold::graph({Manifold::torus_exterior(2, 3), Manifold::sfs({Int(2), Int(3)}, 1)}, 1);
    DistinguishVerdict v = distinguish(a, a);
    CHECK(!v.distinct);
    CHECK(!v.reason.has_value());
}

TEST_CASE("distinguish separates reducible from irreducible") {
    Manifold sum = Manifold::connected_sum(
        {Manifold::surgery_atom("T(2,3)", Slope::make(3, 2), false), Manifold::lens(Int(2), Int(1))});
    Manifold irr = Manifold::graph({Manifold::torus_exterior(2, 3), Manifold::sfs({Int(2), Int(3)}, 1)}, 1);
    DistinguishVerdict v = distinguish(sum, irr);
    CHECK(v.distinct);
    CHECK(*v.reason == Reason::Reducibility);
    DistinguishVerdict w = distinguish(irr, sum);
    CHECK(w.distinct);
    CHECK(*w.reason == Reason::Reducibility);
}

TEST_CASE("distinguish separates lens spaces by oriented invariants") {
    DistinguishVerdict v = distinguish(Manifold::lens(Int(7), Int(2)), Manifold::lens(Int(7), Int(5)));
    CHECK(v.distinct);
    CHECK(*v.reason == Reason::LensInvariants);
    // L(7,2) = L(7,4) with orientation.
    DistinguishVerdict w = distinguish(Manifold::lens(Int(7), Int(2)), Manifold::lens(Int(7), Int(4)));
    CHECK(!w.distinct);
}

TEST_CASE("distinguish separates connected sums by lens summands") {
    auto atom = Manifold::surgery_atom("K", Slope::make(3, 2), false);
    Manifold s1 = Manifold::connected_sum({atom, Manifold::lens(Int(7), Int(2))});
    Manifold s2 = Manifold::connected_sum({atom, Manifold::lens(Int(7), Int(5))});
    Manifold s3 = Manifold::connected_sum({atom, Manifold::lens(Int(7), Int(4))});
    CHECK(distinguish(s1, s2).distinct);
    CHECK(!distinguish(s1, s3).distinct);
}

TEST_CASE("distinguish separates by JSJ torus count") {
    Manifold g1 = Manifold::graph({Manifold::torus_exterior(2, 3), Manifold::sfs({Int(2), Int(3)}, 1)}, 1);
    Manifold g2 = Manifold::graph({Manifold::torus_exterior(2, 3), Manifold::sfs({Int(2), Int(3)}, 1)}, 0);
    DistinguishVerdict v = distinguish(g1, g2);
    CHECK(v.distinct);
    CHECK(*v.reason == Reason::JSJTorusCount);
    CHECK(jsj_torus_count(g1) == 1);
    CHECK(jsj_torus_count(g2) == 0);
}

TEST_CASE("distinguish separates by fiber multiplicities") {
    Manifold g1 = Manifold::graph({Manifold::torus_exterior(2, 3), Manifold::sfs({Int(2), Int(3)}, 1)}, 1);
    Manifold g2 = Manifold::graph({Manifold::torus_exterior(2, 3), Manifold::sfs({Int(2), Int(9)}, 1)}, 1);
    DistinguishVerdict v = distinguish(g1, g2);
    CHECK(v.distinct);
    CHECK(*v.reason == Reason::FiberMultiplicities);
}

TEST_CASE("same-knot different-slope surgery atoms are not declared distinct") {
    Manifold a = Manifold::surgery_atom("K(x)", Slope::make(13, 8), true);
    Manifold b = Manifold::surgery_atom("K(x)", Slope::make(-13, 8), true);
    DistinguishVerdict v = distinguish(a, b);
    CHECK(!v.distinct);  // soundness first: slopes alone do not separate
}

TEST_CASE("different atoms are distinct") {
    Manifold a = Manifold::surgery_atom("K(x)", Slope::make(13, 8), true);
    Manifold b = Manifold::surgery_atom("K(y)", Slope::make(13, 8), true);
    DistinguishVerdict v = distinguish(a, b);
    CHECK(v.distinct);
    CHECK(*v.reason == Reason::AtomMismatch);
}

TEST_CASE("jsj_torus_count requires the annotation") {
    CHECK_THROWS_AS(jsj_torus_count(Manifold::lens(Int(5), Int(2))), input_error);
}

TEST_CASE("descriptor keys are stable and json round-trips through the key") {
    Manifold g = Manifold::graph({Manifold::cable_space(5, 2), Manifold::sfs({Int(2), Int(7)}, 1)}, 1);
    CHECK(g.key() == g.key());
    CHECK(!g.json().empty());
    Manifold h = Manifold::graph({Manifold::sfs({Int(7), Int(2)}, 1), Manifold::cable_space(5, 2)}, 1);
    CHECK(g.key() == h.key());
}
