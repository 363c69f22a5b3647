#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coringlab/catalog.hpp"
#include "coringlab/comodule_connection.hpp"

using namespace coringlab;
using namespace coringlab::catalog;

namespace {
Field Q = Field::rationals();

// basis of the solution space of bicomodule maps (L box L).repr -> L
std::vector<Mat> bicolinear_maps(const Coderivation& D) {
    const Field& F = Q;
    LinearMap idC = identity_map(F, D.C.space);
    auto op = [&](const Mat& x) {
        Mat r1 = mat_sub(F, mat_mul(F, D.L.lcoact.m, x),
                         mat_mul(F, mat_kron(F, idC.m, x), D.LL.left_coact->m));
        Mat r2 = mat_sub(F, mat_mul(F, D.L.rcoact.m, x),
                         mat_mul(F, mat_kron(F, x, idC.m), D.LL.right_coact->m));
        Mat out(static_cast<int>(r1.a.size() + r2.a.size()), 1);
        int k = 0;
        for (const auto& v : r1.a) out.at(k++, 0) = v;
        for (const auto& v : r2.a) out.at(k++, 0) = v;
        return out;
    };
    Mat zero_probe = op(Mat(D.L.space.dim, D.LL.sub.repr.dim));
    Mat rhs(zero_probe.rows, 1);
    AffineSolutions sols = solve_operator(F, D.L.space.dim, D.LL.sub.repr.dim, op, rhs);
    REQUIRE(sols.solvable);
    return sols.basis;
}

}  // namespace

TEST_CASE("zero coderivation with zero extension passes") {
    Coalgebra C = grouplike_coalgebra(Q, 2);
    Bicomodule L = regular_bicomodule(C);
    Coderivation D0 = make_coderivation(C, L, zero_map(Q, C.space, C.space));
    Coderivation D = make_extended_coderivation(
        C, L, zero_map(Q, C.space, C.space), zero_map(Q, D0.LL.sub.repr, C.space));
    CHECK(check_coderivation(D, "zero").ok());
}

TEST_CASE("universal coderivation of kC2") {
    Coalgebra C = grouplike_coalgebra(Q, 2);
    UniversalCoderivation U = universal_coderivation(C);
    CHECK(U.D.L.space.dim == 2);
    CHECK_FALSE(is_zero(U.D.lambda));
    CHECK(check_bicomodule(C, U.D.L, "L(C)").ok());
    CHECK(check_coderivation(U.D, "universal").ok());
    // phi_inv is (L (x) counit (x) C+) restricted
    LinearMap expl = compose(kron(identity_map(Q, U.D.L.space),
                                  kron(C.counit, identity_map(Q, U.cplus.repr))),
                             U.D.LL.sub.incl);
    CHECK(mat_equal(expl.m, U.phi_inv.m));
}

TEST_CASE("dim-1 coalgebra has trivial universal coderivation") {
    Coalgebra C = grouplike_coalgebra(Q, 1);
    UniversalCoderivation U = universal_coderivation(C);
    CHECK(U.D.L.space.dim == 0);
    CHECK(check_coderivation(U.D, "universal1").ok());
}

TEST_CASE("sign error in the right coaction breaks the base identity") {
    Coalgebra C = grouplike_coalgebra(Q, 2);
    UniversalCoderivation U = universal_coderivation(C);
    Bicomodule L = U.D.L;
    L.rcoact = neg(L.rcoact);
    Coderivation bad = make_coderivation(C, L, U.D.lambda);
    Report rep = check_coderivation(bad, "bad");
    CHECK_FALSE(rep.ok());
    CHECK(rep.checks[0].id == "coderivation.base");
    CHECK_FALSE(rep.checks[0].pass);
}

TEST_CASE("coker(comul) identification is constructed and mutually inverse") {
    for (int n : {2, 3}) {
        Coalgebra C = grouplike_coalgebra(Q, n);
        UniversalCoderivation U = universal_coderivation(C);
        CHECK(U.cokd.repr.dim == U.D.L.space.dim);
        CHECK(equal(compose(U.to_cokd, U.from_cokd), identity_map(Q, U.cokd.repr)));
        CHECK(equal(compose(U.from_cokd, U.to_cokd), identity_map(Q, U.D.L.space)));
    }
}

TEST_CASE("coseparable connection pair on grouplike coalgebras") {
    for (int n : {2, 3}) {
        Coalgebra C = grouplike_coalgebra(Q, n);
        UniversalCoderivation U = universal_coderivation(C);
        Cointegral delta = grouplike_cointegral(Q, C.space);
        BicomoduleConnection bc = coseparable_right_connection(C, delta, U);
        CHECK(check_bicomodule_connection(U.D, bc, "cosep").ok());
        // the displayed left connection agrees with lambda' + nabla_r
        CHECK(mat_equal(bc.nabla_l.m, left_from_right(U.D, bc.nabla_r).m));
        // and with its own closed formula
        LinearMap idC = identity_map(Q, C.space);
        LinearMap embed = kron(std::vector<LinearMap>{idC, U.cplus.incl, U.cplus.incl});
        LinearMap t1 = compose(kron(std::vector<LinearMap>{idC, idC, delta.delta}),
                               kron(std::vector<LinearMap>{idC, C.comul, idC}));
        LinearMap t2 = kron(C.comul, delta.delta);
        Mat core = mat_sub(Q, t1.m, t2.m);
        Mat cc = mat_mul(Q, core, embed.m);
        // eps (x) C+ (x) C+ lands in C+ (x) C+ inside L
        LinearMap head = kron(kron(C.counit, U.cplus.incl), identity_map(Q, U.cplus.repr));
        Mat disp(U.D.L.space.dim, U.phi_inv.dst.dim);
        // assemble: project the C(x)C value to L coordinates via (C (x) retr+)
        Mat proj_plus = mat_kron(Q, idC.m, U.cplus.retr.m);
        Mat tail = mat_mul(Q, proj_plus, cc);
        disp = mat_add(Q, head.m, tail);
        LinearMap displayed(Q, U.phi_inv.dst, U.D.L.space, mat_mul(Q, disp, U.phi_inv.m));
        CHECK(mat_equal(bc.nabla_l.m, displayed.m));
        // torsion vanishes
        TorsionValue tv = torsion(U.D, bc);
        CHECK(tv.zero);
        // round trips
        CHECK(mat_equal(right_from_left(U.D, bc.nabla_l).m, bc.nabla_r.m));
    }
}

TEST_CASE("dim-1 coalgebra: everything vacuous") {
    Coalgebra C = grouplike_coalgebra(Q, 1);
    UniversalCoderivation U = universal_coderivation(C);
    Cointegral delta = grouplike_cointegral(Q, C.space);
    BicomoduleConnection bc = coseparable_right_connection(C, delta, U);
    CHECK(check_bicomodule_connection(U.D, bc, "cosep1").ok());
    CHECK(torsion(U.D, bc).zero);
}

TEST_CASE("perturbed pair: torsion nonzero yet bicolinear (dim 3), empty space in dim 2") {
    Coalgebra C2 = grouplike_coalgebra(Q, 2);
    UniversalCoderivation U2 = universal_coderivation(C2);
    CHECK(bicolinear_maps(U2.D).empty());  // no nonzero bicolinear torsion can exist

    Coalgebra C3 = grouplike_coalgebra(Q, 3);
    UniversalCoderivation U3 = universal_coderivation(C3);
    auto basis = bicolinear_maps(U3.D);
    REQUIRE_FALSE(basis.empty());
    Cointegral delta = grouplike_cointegral(Q, C3.space);
    BicomoduleConnection bc = coseparable_right_connection(C3, delta, U3);
    BicomoduleConnection perturbed = bc;
    perturbed.nabla_l = LinearMap(Q, bc.nabla_l.src, bc.nabla_l.dst,
                                  mat_add(Q, bc.nabla_l.m, basis[0]));
    TorsionValue tv = torsion(U3.D, perturbed);  // verifies bicolinearity
    CHECK_FALSE(tv.zero);
    // the perturbed nabla_l is still a left connection (difference is bicolinear)
    Report rep = check_bicomodule_connection(U3.D, perturbed, "perturbed");
    CHECK(rep.ok());
}

TEST_CASE("zero map is not a connection when lambda is nonzero") {
    Coalgebra C = grouplike_coalgebra(Q, 2);
    UniversalCoderivation U = universal_coderivation(C);
    RightComodule M = right_copart(regular_bicomodule(C));
    ComoduleConnection zero = make_right_connection(U.D, M, LinearMap(Q, cotensor(C, M, U.D.L).sub.repr, M.space));
    Report rep = check_connection(U.D, zero, "zero");
    CHECK_FALSE(rep.ok());
}

TEST_CASE("retraction <-> connection round trips over a coseparable coalgebra") {
    for (int n : {2, 3}) {
        Coalgebra C = grouplike_coalgebra(Q, n);
        UniversalCoderivation U = universal_coderivation(C);
        Cointegral delta = grouplike_cointegral(Q, C.space);
        // sigma from the cointegral on M = C
        RightComodule M = right_copart(regular_bicomodule(C));
        LinearMap sigma = compose(kron(delta.delta, identity_map(Q, C.space)),
                                  kron(identity_map(Q, C.space), C.comul));
        sigma = LinearMap(Q, tensor_space(C.space, C.space), C.space, sigma.m);
        ComoduleConnection conn = connection_from_retraction(U, M, sigma);
        CHECK(check_connection(U.D, conn, "from_sigma").ok());
        LinearMap sigma2 = retraction_from_connection(U, M, conn);
        CHECK(mat_equal(sigma2.m, sigma.m));
        ComoduleConnection conn2 = connection_from_retraction(U, M, sigma2);
        CHECK(mat_equal(conn2.nabla.m, conn.nabla.m));
        // curvature machinery runs and the containment holds
        CurvatureCC cv = curvature_cc(U.D, conn);
        CHECK(cv.F.src.dim == cv.MLL.repr.dim);
    }
}

TEST_CASE("a non-retraction or non-colinear map is rejected") {
    Coalgebra C = grouplike_coalgebra(Q, 2);
    UniversalCoderivation U = universal_coderivation(C);
    RightComodule M = right_copart(regular_bicomodule(C));
    LinearMap bad = zero_map(Q, tensor_space(C.space, C.space), C.space);
    CHECK_THROWS_AS(connection_from_retraction(U, M, bad), Error);
}

TEST_CASE("injectivity by exact solve: S1 over the path coalgebra is not injective") {
    Coalgebra P = path_coalgebra_one_arrow(Q);
    CHECK(check_coalgebra(P, "path").ok());
    VectorSpace V = VectorSpace::named({"v"});
    // S1: v -> v (x) e1
    Mat r1(3, 1);
    r1.at(0, 0) = 1;
    RightComodule S1{V, LinearMap(Q, V, tensor_space(V, P.space), r1)};
    CHECK(check_right_comodule(P, S1, "S1").ok());
    CHECK_FALSE(solve_colinear_retraction(P, S1).has_value());
    // S2: v -> v (x) e2 is injective
    Mat r2(3, 1);
    r2.at(1, 0) = 1;
    RightComodule S2{V, LinearMap(Q, V, tensor_space(V, P.space), r2)};
    CHECK(check_right_comodule(P, S2, "S2").ok());
    auto sigma = solve_colinear_retraction(P, S2);
    REQUIRE(sigma.has_value());
    UniversalCoderivation U = universal_coderivation(P);
    ComoduleConnection conn = connection_from_retraction(U, S2, *sigma);
    CHECK(check_connection(U.D, conn, "S2conn").ok());
}

TEST_CASE("coseparable coalgebras: every catalog comodule admits a retraction") {
    Coalgebra C = grouplike_coalgebra(Q, 3);
    UniversalCoderivation U = universal_coderivation(C);
    RightComodule M = cofree_right_comodule(C, VectorSpace::make("v", 2));
    auto sigma = solve_colinear_retraction(C, M);
    REQUIRE(sigma.has_value());
    ComoduleConnection conn = connection_from_retraction(U, M, *sigma);
    CHECK(check_connection(U.D, conn, "cofree").ok());
}
