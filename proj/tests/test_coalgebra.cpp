#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coringlab/coalgebra.hpp"

using namespace coringlab;

namespace {

Field Q = Field::rationals();

Coalgebra grouplike_coalgebra(int n) {
    VectorSpace C = VectorSpace::make("e", n);
    Mat comul(n * n, n), counit(1, n);
    for (int i = 0; i < n; ++i) {
        comul.at(i * n + i, i) = 1;
        counit.at(0, i) = 1;
    }
    return Coalgebra{C, LinearMap(Q, C, tensor_space(C, C), comul),
                     LinearMap(Q, C, unit_space(), counit)};
}

}  // namespace

TEST_CASE("grouplike coalgebras pass for n = 1, 2, 3") {
    for (int n : {1, 2, 3}) CHECK(check_coalgebra(grouplike_coalgebra(n), "gl").ok());
}

TEST_CASE("C over itself is a right, left and bicomodule") {
    Coalgebra C = grouplike_coalgebra(3);
    Bicomodule reg = regular_bicomodule(C);
    CHECK(check_right_comodule(C, right_copart(reg), "C").ok());
    CHECK(check_left_comodule(C, left_copart(reg), "C").ok());
    CHECK(check_bicomodule(C, reg, "C").ok());
}

TEST_CASE("mutated coproduct fails the checker with witness e0") {
    // Delta(e0) = e0 (x) e1 alone stays coassociative (it breaks counitality),
    // so also keep the grouplike term to break coassociativity itself
    Coalgebra C = grouplike_coalgebra(2);
    C.comul.m.at(1, 0) = 1;  // Delta(e0) = e0 (x) e0 + e0 (x) e1
    Report rep = check_coalgebra(C, "bad");
    CHECK_FALSE(rep.ok());
    REQUIRE_FALSE(rep.checks.empty());
    CHECK(rep.checks[0].id == "coalgebra.coassoc");
    CHECK_FALSE(rep.checks[0].pass);
    CHECK(rep.checks[0].witness.find("e0") != std::string::npos);
}

TEST_CASE("cotensor with C itself is the whole comodule") {
    Coalgebra C = grouplike_coalgebra(2);
    RightComodule M = cofree_right_comodule(C, VectorSpace::make("v", 2));  // dim 4
    CotensorSpace t = cotensor(C, M, left_copart(regular_bicomodule(C)));
    CHECK(t.sub.repr.dim == M.space.dim);
    // canonical maps: coaction into M box C, and M (x) counit back
    auto into = corestrict(M.coact, t.sub);
    REQUIRE(into.has_value());
    LinearMap back = compose(kron(identity_map(Q, M.space), C.counit), t.sub.incl);
    LinearMap back2(Q, t.sub.repr, M.space, back.m);
    CHECK(equal(compose(back2, *into), identity_map(Q, M.space)));
    CHECK(equal(compose(*into, back2), identity_map(Q, t.sub.repr)));
}

TEST_CASE("C box C of the dim-2 grouplike coalgebra has dim 2") {
    Coalgebra C = grouplike_coalgebra(2);
    Bicomodule reg = regular_bicomodule(C);
    CotensorSpace t = cotensor(C, reg, reg);
    CHECK(t.sub.repr.dim == 2);
    REQUIRE(t.right_coact.has_value());
    REQUIRE(t.left_coact.has_value());
    // attached right coaction passes the comodule axioms
    RightComodule MC{t.sub.repr, *t.right_coact};
    CHECK(check_right_comodule(C, MC, "CboxC").ok());
}

TEST_CASE("cotensor with the zero comodule is zero") {
    Coalgebra C = grouplike_coalgebra(2);
    VectorSpace z = VectorSpace::named({});
    RightComodule M{z, zero_map(Q, z, tensor_space(z, C.space))};
    CotensorSpace t = cotensor(C, M, left_copart(regular_bicomodule(C)));
    CHECK(t.sub.repr.dim == 0);
}

TEST_CASE("induce_map_cotensor") {
    Coalgebra C = grouplike_coalgebra(2);
    Bicomodule reg = regular_bicomodule(C);
    CotensorSpace t = cotensor(C, reg, reg);
    LinearMap id = identity_map(Q, C.space);

    SUBCASE("id box id = id") {
        CHECK(equal(induce_map_cotensor(id, id, t, t), identity_map(Q, t.sub.repr)));
    }

    SUBCASE("rho box N = M box rho as restrictions") {
        LinearMap lhs = compose(kron(C.comul, id), t.sub.incl);
        LinearMap rhs = compose(kron(id, C.comul), t.sub.incl);
        CHECK(equal(lhs, rhs));
    }

    SUBCASE("non-colinear map is rejected") {
        LinearMap f = zero_map(Q, C.space, C.space);
        f.m.at(0, 1) = 1;  // e1 -> e0 is not colinear
        CHECK_THROWS_AS(induce_map_cotensor(f, id, t, t), Error);
    }
}

TEST_CASE("cointegrals") {
    SUBCASE("grouplike cointegral passes both axioms") {
        Coalgebra C = grouplike_coalgebra(2);
        CHECK(check_cointegral(C, grouplike_cointegral(Q, C.space), "delta").ok());
        Coalgebra C3 = grouplike_coalgebra(3);
        CHECK(check_cointegral(C3, grouplike_cointegral(Q, C3.space), "delta3").ok());
    }

    SUBCASE("counit (x) counit fails colinearity off the diagonal for n >= 2") {
        Coalgebra C = grouplike_coalgebra(2);
        Cointegral d{kron(C.counit, C.counit)};
        d.delta = LinearMap(Q, tensor_space(C.space, C.space), unit_space(), d.delta.m);
        Report rep = check_cointegral(C, d, "epseps");
        CHECK_FALSE(rep.ok());
        CHECK(rep.checks[0].id == "cointegral.colinear");
        CHECK_FALSE(rep.checks[0].pass);
        CHECK(rep.checks[1].pass);  // delta.comul = counit still holds
    }

    SUBCASE("dim 1: the scalar 1 is a cointegral") {
        Coalgebra C = grouplike_coalgebra(1);
        CHECK(check_cointegral(C, grouplike_cointegral(Q, C.space), "one").ok());
    }
}

TEST_CASE("counit kernel") {
    Coalgebra C2 = grouplike_coalgebra(2);
    CounitKernel k2 = counit_kernel(C2);
    CHECK(k2.sub.repr.dim == 1);
    // basis spans e0 - e1 up to sign and pivot convention
    CHECK(k2.sub.incl.m.at(0, 0) == -k2.sub.incl.m.at(1, 0));
    CHECK(counit_kernel(grouplike_coalgebra(1)).sub.repr.dim == 0);
    CHECK(counit_kernel(grouplike_coalgebra(4)).sub.repr.dim == 3);

    Coalgebra bad = grouplike_coalgebra(2);
    bad.counit = zero_map(Q, bad.space, unit_space());
    CHECK_THROWS_AS(counit_kernel(bad), Error);
}
