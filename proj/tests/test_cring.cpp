#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coringlab/catalog.hpp"
#include "coringlab/cring.hpp"

using namespace coringlab;
using namespace coringlab::catalog;

namespace {
Field Q = Field::rationals();

// the aYD module (kC_n with regular action, trivial coaction) as a C-ring module
CRingModule ayd_trivial_module(const Entwining& E, const CRing& R) {
    const VectorSpace& V = E.A.space;
    LinearMap triv = kron(identity_map(Q, V), E.A.unit);
    EntwinedModule M{RightModule{V, E.A.mul},
                     RightComodule{V, LinearMap(Q, V, tensor_space(V, V), triv.m)}};
    return entwined_to_cring_module(E, R, M);
}

}  // namespace

TEST_CASE("C (x) C over kC2 is a C-ring with character counit (x) counit") {
    Coalgebra C = grouplike_coalgebra(Q, 2);
    CRingWithCharacter R = cring_cc(C);
    CHECK(check_cring(R.ring, "CC").ok());
    REQUIRE(R.kappa.has_value());
    CHECK(check_character(R.ring, *R.kappa, "epseps").ok());

    // C is a module through the character
    CRingModule M = module_from_character(R.ring, *R.kappa);
    CHECK(check_cring_module(R.ring, M, "C_kappa").ok());
}

TEST_CASE("mutated unit fails a unit square with witness") {
    Coalgebra C = grouplike_coalgebra(Q, 2);
    CRingWithCharacter R = cring_cc(C);
    CRing bad = R.ring;
    bad.unit = zero_map(Q, C.space, bad.carrier.space);
    Report rep = check_cring(bad, "bad");
    CHECK_FALSE(rep.ok());
    bool unit_failed = false;
    for (const auto& c : rep.checks)
        if (c.id.rfind("cring.unit", 0) == 0 && !c.pass) unit_failed = true;
    CHECK(unit_failed);
}

TEST_CASE("cring_from_entwining over the aYD entwinings") {
    SUBCASE("kC2 with chi = counit") {
        HopfAlgebra H = hopf_cyclic(Q, 2);
        Entwining E = ayd_entwining(H);
        CRingWithCharacter R = cring_from_entwining(E, H.b.coalg.counit);
        CHECK(R.ring.carrier.space.dim == 4);
        CHECK(check_cring(R.ring, "ayd_kc2").ok());
        REQUIRE(R.kappa.has_value());
        CHECK(check_character(R.ring, *R.kappa, "kappa").ok());
    }

    SUBCASE("H4 with chi = counit") {
        HopfAlgebra H = hopf_sweedler_h4(Q);
        Entwining E = ayd_entwining(H);
        CRingWithCharacter R = cring_from_entwining(E, H.b.coalg.counit);
        CHECK(check_cring(R.ring, "ayd_h4").ok());
        CHECK(check_character(R.ring, *R.kappa, "kappa").ok());
    }

    SUBCASE("A = k gives the trivial C-ring") {
        Algebra k = base_field_algebra(Q);
        Coalgebra C = grouplike_coalgebra(Q, 2);
        LinearMap psi = permute_factors(Q, {C.space, k.space}, {1, 0});
        Entwining E{k, C, LinearMap(Q, tensor_space(C.space, k.space),
                                    tensor_space(k.space, C.space), psi.m)};
        CRingWithCharacter R = cring_from_entwining(E, k.mul);  // chi = id on k
        CHECK(R.ring.carrier.space.dim == C.space.dim);
        CHECK(check_cring(R.ring, "trivial").ok());
    }

    SUBCASE("a non-character chi is rejected") {
        HopfAlgebra H = hopf_cyclic(Q, 2);
        Entwining E = ayd_entwining(H);
        LinearMap bad = zero_map(Q, H.b.alg.space, unit_space());
        CHECK_THROWS_AS(cring_from_entwining(E, bad), Error);
    }
}

TEST_CASE("coderivation complex of the aYD C-rings") {
    SUBCASE("kC2: lambda vanishes and the complex passes at cap 3") {
        HopfAlgebra H = hopf_cyclic(Q, 2);
        Entwining E = ayd_entwining(H);
        CRingWithCharacter R = cring_from_entwining(E, H.b.coalg.counit);
        CoderivationComplex X = coderivation_complex(R.ring, *R.kappa, 3);
        CHECK(is_zero(X.lambda[1]));  // commutative Hopf algebra
        CHECK(check_complex(X, "ayd_kc2").ok());
    }

    SUBCASE("H4: lambda nonzero, lambda.lambda = 0, extension verified") {
        HopfAlgebra H = hopf_sweedler_h4(Q);
        Entwining E = ayd_entwining(H);
        CRingWithCharacter R = cring_from_entwining(E, H.b.coalg.counit);
        CoderivationComplex X = coderivation_complex(R.ring, *R.kappa, 3);
        CHECK_FALSE(is_zero(X.lambda[1]));
        CHECK(check_complex(X, "ayd_h4").ok());

        // entwining-side formula: lambda(pi(c (x) a)) = chi(a_psi) c^psi - chi(a) c
        LinearMap chi = H.b.coalg.counit;
        LinearMap t1 = compose(kron(chi, identity_map(Q, H.b.alg.space)), E.psi);
        LinearMap t2 = kron(identity_map(Q, H.b.alg.space), chi);
        LinearMap expected(Q, R.ring.carrier.space, H.b.alg.space, mat_sub(Q, t1.m, t2.m));
        CHECK(mat_equal(compose(X.lambda[1], X.Abar.proj).m, expected.m));

        // Hopf-side formula: lambda(pi(c (x) a)) = S^{-1}(a_1) c a_2 - eps(a) c
        const VectorSpace& V = H.b.alg.space;
        LinearMap id = identity_map(Q, V);
        LinearMap perm = permute_factors(Q, {V, V, V}, {1, 0, 2});
        LinearMap mul3 = compose(H.b.alg.mul, kron(H.b.alg.mul, id));
        LinearMap first = compose(mul3, compose(kron(std::vector<LinearMap>{H.antipode_inv, id, id}),
                                                compose(perm, kron(id, H.b.coalg.comul))));
        LinearMap second = kron(id, H.b.coalg.counit);
        LinearMap expected2(Q, R.ring.carrier.space, V, mat_sub(Q, first.m, second.m));
        CHECK(mat_equal(compose(X.lambda[1], X.Abar.proj).m, expected2.m));
    }

    SUBCASE("C (x) C over kC2 carries the universal complex") {
        Coalgebra C = grouplike_coalgebra(Q, 2);
        CRingWithCharacter R = cring_cc(C);
        CoderivationComplex X = coderivation_complex(R.ring, *R.kappa, 3);
        CHECK(check_complex(X, "cc_kc2").ok());
        CHECK(X.Abar.repr.dim == C.space.dim * (C.space.dim - 1));
    }

    SUBCASE("cap below 2 is rejected") {
        Coalgebra C = grouplike_coalgebra(Q, 2);
        CRingWithCharacter R = cring_cc(C);
        CHECK_THROWS_AS(coderivation_complex(R.ring, *R.kappa, 1), Error);
    }
}

TEST_CASE("theorem-style action <-> connection conversions on the aYD module") {
    HopfAlgebra H = hopf_cyclic(Q, 2);
    Entwining E = ayd_entwining(H);
    CRingWithCharacter R = cring_from_entwining(E, H.b.coalg.counit);
    CoderivationComplex X = coderivation_complex(R.ring, *R.kappa, 2);
    CRingModule M = ayd_trivial_module(E, R.ring);
    REQUIRE(check_cring_module(R.ring, M, "aydmod").ok());

    ComoduleConnection conn = connection_from_action(R.ring, *R.kappa, X, M);
    CHECK(check_connection(X.D, conn, "nabla").ok());
    CurvatureCC cv = curvature_cc(X.D, conn);
    CHECK(cv.flat);

    // nabla(m (x) abar) = m.a - m eps(a), through Abar = H (x) Abar_A
    const VectorSpace& V = H.b.alg.space;
    QuotientSpace AbarA = cokernel(H.b.alg.unit);
    LinearMap G = compose(X.Abar.proj, kron(identity_map(Q, V), AbarA.sect));
    REQUIRE(inverse(G).has_value());
    LinearMap strip = kron(H.b.coalg.counit, identity_map(Q, AbarA.repr));
    LinearMap lift = compose(strip, *inverse(G));  // Abar -> Abar_A
    LinearMap t1 = compose(E.A.mul, kron(identity_map(Q, V), AbarA.sect));
    LinearMap t2 = kron(identity_map(Q, V), compose(H.b.coalg.counit, AbarA.sect));
    LinearMap core(Q, tensor_space(V, AbarA.repr), V, mat_sub(Q, t1.m, t2.m));
    LinearMap expected =
        compose(core, compose(kron(identity_map(Q, V), lift), conn.ML.sub.incl));
    CHECK(mat_equal(conn.nabla.m, expected.m));

    // round trips
    CRingModule back = action_from_connection(R.ring, *R.kappa, X, conn);
    CHECK(mat_equal(back.action.m, M.action.m));
    ComoduleConnection conn2 = connection_from_action(R.ring, *R.kappa, X, back);
    CHECK(mat_equal(conn2.nabla.m, conn.nabla.m));
}

TEST_CASE("nabla = 0 recovers the kappa-weighted action on the trivial C-ring") {
    Algebra k = base_field_algebra(Q);
    Coalgebra C = grouplike_coalgebra(Q, 2);
    LinearMap psi = permute_factors(Q, {C.space, k.space}, {1, 0});
    Entwining E{k, C, LinearMap(Q, tensor_space(C.space, k.space),
                                tensor_space(k.space, C.space), psi.m)};
    CRingWithCharacter R = cring_from_entwining(E, k.mul);
    CoderivationComplex X = coderivation_complex(R.ring, *R.kappa, 2);
    CHECK(X.Abar.repr.dim == 0);  // the unit is an isomorphism here
    RightComodule M = right_copart(regular_bicomodule(C));
    CotensorSpace MB = cotensor(R.ring.C, M, X.Abar_bi);
    ComoduleConnection conn;
    conn.side = ComoduleConnection::Side::right;
    conn.mspace = M.space;
    conn.coact = M.coact;
    conn.ML = MB;
    conn.nabla = zero_map(Q, MB.sub.repr, M.space);
    CRingModule back = action_from_connection(R.ring, *R.kappa, X, conn);
    CHECK(check_cring_module(R.ring, back, "kappa_action").ok());
}

TEST_CASE("flatness mirrors associativity on solved module candidates") {
    HopfAlgebra H = hopf_cyclic(Q, 2);
    Entwining E = ayd_entwining(H);
    CRingWithCharacter R = cring_from_entwining(E, H.b.coalg.counit);
    CoderivationComplex X = coderivation_complex(R.ring, *R.kappa, 2);
    CRingModule M0 = ayd_trivial_module(E, R.ring);
    ModuleCandidates cands = solve_module_linear_system(R.ring, M0.comodule);
    REQUIRE(cands.solvable);

    std::mt19937_64 rng(7777);
    std::uniform_int_distribution<int> coeff(-2, 2);
    int flat_assoc = 0, curved_nonassoc = 0, total = 0;
    for (int trial = 0; trial < 12; ++trial) {
        Mat a = (trial == 0) ? M0.action.m : cands.particular;
        if (trial > 0)
            for (const auto& b : cands.basis) {
                int c = coeff(rng);
                if (c != 0) a = mat_add(Q, a, mat_scale(Q, Rat(c), b));
            }
        CRingModule cand = make_cring_module(R.ring, M0.comodule,
                                             LinearMap(Q, cands.MA.sub.repr, M0.comodule.space, a));
        bool assoc = check_cring_module(R.ring, cand, "cand").ok();
        ComoduleConnection conn = connection_from_action(R.ring, *R.kappa, X, cand);
        CurvatureCC cv = curvature_cc(X.D, conn);
        CHECK(cv.flat == assoc);
        ++total;
        if (assoc && cv.flat) ++flat_assoc;
        if (!assoc && !cv.flat) ++curved_nonassoc;
    }
    CHECK(total >= 10);
    CHECK(flat_assoc >= 1);
    CHECK(curved_nonassoc >= 3);
}

TEST_CASE("free modules and character modules over the catalog C-rings") {
    HopfAlgebra H = hopf_cyclic(Q, 2);
    Entwining E = ayd_entwining(H);
    CRingWithCharacter R = cring_from_entwining(E, H.b.coalg.counit);
    CHECK(check_cring_module(R.ring, free_module(R.ring, VectorSpace::make("v", 1)), "A").ok());
    CHECK(check_cring_module(R.ring, free_module(R.ring, VectorSpace::make("v", 2)), "VA").ok());
    CHECK(check_cring_module(R.ring, module_from_character(R.ring, *R.kappa), "C").ok());
}

TEST_CASE("entwined modules correspond to C-ring modules both ways") {
    HopfAlgebra H = hopf_cyclic(Q, 2);
    Entwining E = ayd_entwining(H);
    Coring EC = coring_from_entwining(E);
    CRingWithCharacter R = cring_from_entwining(E, H.b.coalg.counit);
    const VectorSpace& V = H.b.alg.space;

    // positive instance: regular action with trivial coaction
    LinearMap triv = kron(identity_map(Q, V), H.b.alg.unit);
    EntwinedModule good{RightModule{V, H.b.alg.mul},
                        RightComodule{V, LinearMap(Q, V, tensor_space(V, V), triv.m)}};
    bool pent = check_entwined_module(E, EC, good, "good").ok();
    bool mod = check_cring_module(R.ring, entwined_to_cring_module(E, R.ring, good), "good").ok();
    CHECK(pent);
    CHECK(pent == mod);

    // regular action with regular coaction: NOT entwined here, and the checks agree
    EntwinedModule reg{RightModule{V, H.b.alg.mul}, RightComodule{V, H.b.coalg.comul}};
    bool pent_reg = false;
    {
        Report rep = check_entwined_module(E, EC, reg, "reg");
        for (const auto& c : rep.checks)
            if (c.id == "entwined.pentagon") pent_reg = c.pass;
    }
    bool mod_reg =
        check_cring_module(R.ring, entwined_to_cring_module(E, R.ring, reg), "reg").ok();
    CHECK(pent_reg == mod_reg);

    // negative instance: conjugated action
    Mat shear = Mat::identity(V.dim);
    shear.at(0, 1) = 1;
    LinearMap phi(Q, V, V, shear);
    EntwinedModule badm{RightModule{V, compose(phi, compose(H.b.alg.mul,
                                                            kron(*inverse(phi),
                                                                 identity_map(Q, V))))},
                        RightComodule{V, H.b.coalg.comul}};
    badm.module.act = LinearMap(Q, tensor_space(V, V), V, badm.module.act.m);
    bool pent2 = false;
    {
        Report rep = check_entwined_module(E, EC, badm, "bad");
        for (const auto& c : rep.checks)
            if (c.id == "entwined.pentagon") pent2 = c.pass;
    }
    bool mod2 = check_cring_module(R.ring, entwined_to_cring_module(E, R.ring, badm), "bad").ok();
    CHECK_FALSE(pent2);
    CHECK(pent2 == mod2);
}
