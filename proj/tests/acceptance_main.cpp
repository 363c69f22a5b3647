// Acceptance suite: one verdict line per criterion, exact arithmetic
// throughout, zero tolerance on every comparison.
#include <algorithm>
#include <chrono>
#include <functional>
#include <tuple>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "coringlab/catalog.hpp"
#include "coringlab/cring.hpp"
#include "coringlab/document.hpp"

using namespace coringlab;
using namespace coringlab::catalog;

namespace {

Field Q = Field::rationals();

struct Checker {
    std::ostringstream log;
    bool ok = true;
    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            log << "      failed: " << what << "\n";
        }
    }
};

struct AydData {
    HopfAlgebra H;
    Entwining E;
    Coring coring;
    std::vector<Rat> g;
};

AydData ayd(int which) {  // 2, 3 = cyclic orders; 4 = Sweedler H4
    HopfAlgebra H = which == 4 ? hopf_sweedler_h4(Q) : hopf_cyclic(Q, which);
    Entwining E = ayd_entwining(H);
    Coring C = coring_from_entwining(E);
    std::vector<Rat> g = entwined_coring_grouplike(E, algebra_one(H.b.alg));
    return AydData{H, E, C, g};
}

// canonical comodule catalog for a coring with a group-like element
std::vector<CoringComodule> comodule_family(const Coring& C, const std::vector<Rat>& g) {
    std::vector<CoringComodule> out;
    out.push_back(comodule_from_grouplike(C, g));
    // the carrier itself with its coproduct
    out.push_back(make_coring_comodule_repr(C, right_part(C.carrier), C.cop, true));
    // direct sum of two copies of the canonical comodule
    {
        const CoringComodule& M = out[0];
        int n = M.module.space.dim, dA = C.A.space.dim, dC = C.carrier.space.dim;
        VectorSpace two = tensor_space(VectorSpace::make("s", 2), M.module.space);
        Mat act(2 * n, 2 * n * dA), coamb(2 * n * dC, 2 * n);
        LinearMap amb = compose(M.MC.sect, M.coact);
        for (int s = 0; s < 2; ++s)
            for (int i = 0; i < n; ++i) {
                for (int a = 0; a < dA; ++a)
                    for (int r = 0; r < n; ++r)
                        act.at(s * n + r, (s * n + i) * dA + a) = M.module.act.m.at(r, i * dA + a);
                for (int r = 0; r < n * dC; ++r) {
                    int rm = r / dC, rc = r % dC;
                    coamb.at((s * n + rm) * dC + rc, s * n + i) = amb.m.at(r, i);
                }
            }
        RightModule mm{two, LinearMap(Q, tensor_space(two, C.A.space), two, act)};
        out.push_back(make_coring_comodule(
            C, mm, LinearMap(Q, two, tensor_space(two, C.carrier.space), coamb), true));
    }
    // cofree-style V (x) C; keep V small when the carrier is already large
    int vmax = C.carrier.space.dim > 8 ? 1 : 2;
    for (int v = 1; v <= vmax; ++v) {
        VectorSpace V = VectorSpace::make("v", v);
        LinearMap idV = identity_map(Q, V);
        VectorSpace M = tensor_space(V, C.carrier.space);
        LinearMap act = kron(idV, C.carrier.ract);
        LinearMap coamb = kron(idV, compose(C.W2.sect, C.cop));
        RightModule mm{M, LinearMap(Q, tensor_space(M, C.A.space), M, act.m)};
        out.push_back(make_coring_comodule(
            C, mm, LinearMap(Q, M, tensor_space(M, C.carrier.space), coamb.m), true));
    }
    // zero comodule
    {
        VectorSpace z = VectorSpace::named({});
        RightModule mm{z, zero_map(Q, tensor_space(z, C.A.space), z)};
        out.push_back(make_coring_comodule(
            C, mm, zero_map(Q, z, tensor_space(z, C.carrier.space)), true));
    }
    return out;
}

// basis of right-linear, counital perturbation directions of a coaction
std::vector<Mat> perturbation_basis(const Coring& C, const CoringComodule& M) {
    LinearMap tri = compose(M.module.act,
                            compose(kron(identity_map(Q, M.module.space), C.cou), M.MC.sect));
    int dA = C.A.space.dim;
    auto op = [&](const Mat& x) {
        Mat t1 = mat_mul(Q, x, M.module.act.m);
        Mat t2 = mat_mul(Q, M.MC_ract.m, mat_kron(Q, x, Mat::identity(dA)));
        Mat lin = mat_sub(Q, t1, t2);
        Mat cou = mat_mul(Q, tri.m, x);
        Mat out(static_cast<int>(lin.a.size() + cou.a.size()), 1);
        int k = 0;
        for (const auto& v : lin.a) out.at(k++, 0) = v;
        for (const auto& v : cou.a) out.at(k++, 0) = v;
        return out;
    };
    Mat rhs(M.MC.repr.dim * M.module.space.dim * dA +
                M.module.space.dim * M.module.space.dim,
            1);
    AffineSolutions sols = solve_operator(Q, M.MC.repr.dim, M.module.space.dim, op, rhs);
    return sols.solvable ? sols.basis : std::vector<Mat>{};
}

void criterion_roiter_round_trip(Checker& c) {
    for (const Algebra& A : {dual_numbers(Q), cyclic_group_algebra(Q, 2)}) {
        Coring C = sweedler_coring(A);
        std::vector<Rat> g = one_tensor_one(A);
        RoiterData R = roiter_dga(C, g, 3);
        CoringWithGrouplike back = coring_from_dga(R.dga);
        c.expect(check_coring(back.coring, "rebuilt").ok(), "rebuilt coring fails its axioms");
        c.expect(verify_grouplike(back.coring, back.g.g, GrouplikeFlavor::grouplike).ok(),
                 "rebuilt group-like fails");
        int dA = A.space.dim, dW = R.dga.omega[1].dim;
        LinearMap gmap = vec_as_map(Q, C.carrier.space, g);
        LinearMap aglift = compose(C.carrier.lact, kron(identity_map(Q, A.space), gmap));
        Mat phi(C.carrier.space.dim, dA + dW);
        for (int j = 0; j < dA; ++j)
            for (int r = 0; r < C.carrier.space.dim; ++r) phi.at(r, j) = aglift.m.at(r, j);
        for (int j = 0; j < dW; ++j)
            for (int r = 0; r < C.carrier.space.dim; ++r)
                phi.at(r, dA + j) = R.omega1_sub.incl.m.at(r, j);
        LinearMap phimap(Q, back.coring.carrier.space, C.carrier.space, phi);
        c.expect(verify_coring_morphism(back.coring, C, phimap, "canonical").ok(),
                 "canonical coring comparison map fails");
        c.expect(apply_map(phimap, back.g.g) == g, "comparison map does not match group-likes");

        // DGA -> coring -> DGA through the canonical degree-one map
        TruncatedDGA env = universal_envelope(A, 3);
        CoringWithGrouplike cg = coring_from_dga(env);
        RoiterData R2 = roiter_dga(cg.coring, cg.g.g, 3);
        int n = cg.coring.carrier.space.dim;
        Mat embw(n, env.omega[1].dim);
        for (int j = 0; j < env.omega[1].dim; ++j) embw.at(dA + j, j) = 1;
        LinearMap embW(Q, env.omega[1], cg.coring.carrier.space, embw);
        auto psi1 = corestrict(embW, R2.omega1_sub);
        c.expect(psi1.has_value(), "one-forms do not land in ker(cou) of the rebuilt coring");
        if (psi1) {
            LinearMap p1(Q, env.omega[1], R2.dga.omega[1], psi1->m);
            c.expect(verify_dga_isomorphism(env, R2.dga, p1, "dga_compare").ok(),
                     "degreewise DGA comparison fails");
        }
    }
}

void criterion_d_squared_leibniz(Checker& c) {
    for (const Algebra& A :
         {base_field_algebra(Q), dual_numbers(Q), cyclic_group_algebra(Q, 2),
          cyclic_group_algebra(Q, 3), hopf_sweedler_h4(Q).b.alg}) {
        Report rep = check_dga(universal_envelope(A, 3), "envelope");
        c.expect(rep.ok(), "universal envelope fails at cap 3:\n" + rep.text());
    }
    for (int which : {2, 3, 4}) {
        AydData D = ayd(which);
        RoiterData R = roiter_dga(D.coring, D.g, 3);
        Report rep = check_dga(R.dga, "roiter");
        c.expect(rep.ok(), "aYD Roiter DGA fails at cap 3:\n" + rep.text());
    }
}

void criterion_connection_bijection(Checker& c) {
    std::vector<std::pair<Coring, std::vector<Rat>>> corings;
    for (const Algebra& A : {dual_numbers(Q), cyclic_group_algebra(Q, 2)})
        corings.emplace_back(sweedler_coring(A), one_tensor_one(A));
    for (int which : {2, 3, 4}) {
        AydData D = ayd(which);
        corings.emplace_back(D.coring, D.g);
    }
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<int> coeff(-2, 2);
    for (const auto& [C, g] : corings) {
        RoiterData R = roiter_dga(C, g, 2);
        std::vector<CoringComodule> family = comodule_family(C, g);
        c.expect(family.size() >= 5, "fewer than 5 comodules in the family");
        for (const auto& M : family) {
            c.expect(check_coring_comodule(C, M, "family").ok(), "family member is not a comodule");
            ModuleConnection conn = connection_from_coaction(R, M);
            c.expect(check_module_connection(R.dga, conn, "conn").ok(),
                     "derived connection violates the Leibniz rule");
            CurvatureValue cv = curvature(R.dga, conn);
            c.expect(cv.flat, "comodule-derived connection has nonzero curvature");
            CoringComodule back = coaction_from_connection(R, conn);
            c.expect(mat_equal(back.coact.m, M.coact.m), "coaction round trip drifts");
            ModuleConnection conn2 = connection_from_coaction(R, back);
            c.expect(mat_equal(conn2.nabla.m, conn.nabla.m), "connection round trip drifts");
        }
        // >= 20 non-coassociative perturbations with exactly nonzero curvature
        const CoringComodule& M = family[0];
        std::vector<Mat> basis = perturbation_basis(C, M);
        c.expect(!basis.empty(), "no perturbation directions available");
        int found = 0;
        for (int trial = 0; trial < 400 && found < 20; ++trial) {
            Mat delta(M.MC.repr.dim, M.module.space.dim);
            for (const auto& b : basis) {
                int k = coeff(rng);
                if (k != 0) delta = mat_add(Q, delta, mat_scale(Q, Rat(k), b));
            }
            if (mat_is_zero(delta)) continue;
            CoringComodule P = M;
            P.coact = LinearMap(Q, M.module.space, M.MC.repr, mat_add(Q, M.coact.m, delta));
            if (check_coring_comodule(C, P, "p").ok()) continue;
            ModuleConnection conn = connection_from_coaction(R, P);
            CurvatureValue cv = curvature(R.dga, conn);
            c.expect(!cv.flat, "non-coassociative perturbation produced a flat connection");
            ++found;
        }
        c.expect(found >= 20, "fewer than 20 usable perturbations (got " +
                                  std::to_string(found) + ")");
    }
}

void criterion_bowtie(Checker& c) {
    for (int which : {2, 3, 4}) {
        AydData D = ayd(which);
        Report rep = check_bowtie(D.E, "ayd");
        c.expect(rep.ok(), "aYD entwining fails the compatibility identities");
    }
    // Targeted single-entry mutations on the H4 entwining map. An exhaustive
    // scan shows no +-1 single-entry mutation can fail exactly one identity
    // (perturbing psi feeds every identity it appears in), so each target is
    // exhibited by the mutation with the smallest failure set containing it,
    // and the four targets are pinpointed with witnesses.
    Entwining E = ayd(4).E;
    const char* axiom_ids[4] = {"bowtie.mult", "bowtie.comult", "bowtie.counit", "bowtie.unit"};
    struct Candidate {
        int r = -1, col = -1, delta = 0, fail_count = 5;
        std::string witness;
    };
    std::vector<std::vector<Candidate>> candidates(4);
    bool any_exact_single = false;
    for (int r = 0; r < E.psi.m.rows; ++r)
        for (int col = 0; col < E.psi.m.cols; ++col)
            for (int delta : {1, -1}) {
                Entwining M = E;
                M.psi.m.at(r, col) = M.psi.m.at(r, col) + delta;
                Report rep = check_bowtie(M, "mutated");
                int fails = 0;
                for (const auto& ch : rep.checks)
                    if (!ch.pass) ++fails;
                if (fails == 1) any_exact_single = true;
                for (int target = 0; target < 4; ++target)
                    for (const auto& ch : rep.checks)
                        if (ch.id == axiom_ids[target] && !ch.pass)
                            candidates[target].push_back(Candidate{r, col, delta, fails,
                                                                   ch.witness});
            }
    c.expect(!any_exact_single,
             "an exact single-axiom mutation exists after all; use it directly");
    // assign one mutation per axiom, distinct, smallest failure sets first
    std::vector<Candidate> chosen;
    for (int target = 0; target < 4; ++target) {
        std::sort(candidates[target].begin(), candidates[target].end(),
                  [](const Candidate& x, const Candidate& y) {
                      return std::tie(x.fail_count, x.r, x.col, x.delta) <
                             std::tie(y.fail_count, y.r, y.col, y.delta);
                  });
        bool placed = false;
        for (const auto& cand : candidates[target]) {
            bool used = false;
            for (const auto& u : chosen)
                used = used || (u.r == cand.r && u.col == cand.col && u.delta == cand.delta);
            if (!used) {
                chosen.push_back(cand);
                placed = true;
                break;
            }
        }
        c.expect(placed, std::string("no distinct single-entry mutation fails ") +
                             axiom_ids[target]);
        if (placed)
            c.expect(!chosen.back().witness.empty(),
                     std::string("missing witness for ") + axiom_ids[target]);
    }
}

void criterion_cocommutative_vanishing(Checker& c) {
    for (int which : {2, 3}) {
        AydData D = ayd(which);
        RoiterData R = roiter_dga(D.coring, D.g, 1);
        c.expect(is_zero(R.dga.diff[0]),
                 "degree-0 differential should vanish for the cocommutative case");
    }
    AydData D = ayd(4);
    RoiterData R = roiter_dga(D.coring, D.g, 1);
    c.expect(!is_zero(R.dga.diff[0]), "degree-0 differential should be nonzero for H4");
}

void criterion_complex(Checker& c) {
    std::vector<std::pair<CRing, Character>> rings;
    for (int which : {2, 4}) {
        AydData D = ayd(which);
        CRingWithCharacter R = cring_from_entwining(D.E, D.H.b.coalg.counit);
        rings.emplace_back(R.ring, *R.kappa);
    }
    {
        CRingWithCharacter R = cring_cc(grouplike_coalgebra(Q, 2));
        rings.emplace_back(R.ring, *R.kappa);
    }
    for (const auto& [R, k] : rings) {
        CoderivationComplex X = coderivation_complex(R, k, 3);
        Report rep = check_complex(X, "complex");
        c.expect(rep.ok(), "coderivation complex fails:\n" + rep.text());
    }
}

void criterion_action_bijection(Checker& c) {
    AydData D = ayd(2);
    CRingWithCharacter R = cring_from_entwining(D.E, D.H.b.coalg.counit);
    CoderivationComplex X = coderivation_complex(R.ring, *R.kappa, 2);
    const VectorSpace& V = D.H.b.alg.space;
    LinearMap triv = kron(identity_map(Q, V), D.H.b.alg.unit);
    EntwinedModule em{RightModule{V, D.H.b.alg.mul},
                      RightComodule{V, LinearMap(Q, V, tensor_space(V, V), triv.m)}};
    CRingModule M = entwined_to_cring_module(D.E, R.ring, em);
    c.expect(check_cring_module(R.ring, M, "ayd_module").ok(), "aYD module fails its axioms");

    ComoduleConnection conn = connection_from_action(R.ring, *R.kappa, X, M);
    c.expect(check_connection(X.D, conn, "conn").ok(), "derived map is not a connection");
    c.expect(curvature_cc(X.D, conn).flat, "derived connection is not flat");

    // nabla(m (x) abar) = m.a - m eps(a) through Abar = H (x) Abar_A
    QuotientSpace AbarA = cokernel(D.H.b.alg.unit);
    LinearMap G = compose(X.Abar.proj, kron(identity_map(Q, V), AbarA.sect));
    auto Ginv = inverse(G);
    c.expect(Ginv.has_value(), "Abar does not identify with H (x) Abar_A");
    if (Ginv) {
        LinearMap strip = kron(D.H.b.coalg.counit, identity_map(Q, AbarA.repr));
        LinearMap lift(Q, X.Abar.repr, AbarA.repr, mat_mul(Q, strip.m, Ginv->m));
        LinearMap t1 = compose(D.E.A.mul, kron(identity_map(Q, V), AbarA.sect));
        LinearMap t2 = kron(identity_map(Q, V), compose(D.H.b.coalg.counit, AbarA.sect));
        LinearMap core(Q, tensor_space(V, AbarA.repr), V, mat_sub(Q, t1.m, t2.m));
        LinearMap expected =
            compose(core, compose(kron(identity_map(Q, V), lift), conn.ML.sub.incl));
        c.expect(mat_equal(conn.nabla.m, expected.m),
                 "connection differs from the displayed formula");
    }

    CRingModule back = action_from_connection(R.ring, *R.kappa, X, conn);
    c.expect(mat_equal(back.action.m, M.action.m), "action round trip drifts");
    ComoduleConnection conn2 = connection_from_action(R.ring, *R.kappa, X, back);
    c.expect(mat_equal(conn2.nabla.m, conn.nabla.m), "connection round trip drifts");

    // flatness mirrors associativity on solved-for candidates
    ModuleCandidates cands = solve_module_linear_system(R.ring, M.comodule);
    c.expect(cands.solvable, "linear module system is unsolvable");
    std::mt19937_64 rng(99991);
    std::uniform_int_distribution<int> coeff(-2, 2);
    int total = 0, flat_count = 0, curved_count = 0;
    for (int trial = 0; trial < 12; ++trial) {
        Mat a = (trial == 0) ? M.action.m : cands.particular;
        if (trial > 0)
            for (const auto& b : cands.basis) {
                int k = coeff(rng);
                if (k != 0) a = mat_add(Q, a, mat_scale(Q, Rat(k), b));
            }
        CRingModule cand =
            make_cring_module(R.ring, M.comodule, LinearMap(Q, cands.MA.sub.repr, V, a));
        bool assoc = check_cring_module(R.ring, cand, "cand").ok();
        ComoduleConnection cc = connection_from_action(R.ring, *R.kappa, X, cand);
        bool flat = curvature_cc(X.D, cc).flat;
        c.expect(flat == assoc, "flatness and associativity disagree on a candidate");
        ++total;
        (assoc ? flat_count : curved_count) += 1;
    }
    c.expect(total >= 10, "fewer than 10 candidates");
    c.expect(flat_count >= 1 && curved_count >= 1, "candidate classes not both populated");
}

void criterion_coseparable(Checker& c) {
    for (int n : {2, 3}) {
        Coalgebra C = grouplike_coalgebra(Q, n);
        UniversalCoderivation U = universal_coderivation(C);
        Cointegral delta = grouplike_cointegral(Q, C.space);
        BicomoduleConnection bc = coseparable_right_connection(C, delta, U);
        c.expect(check_bicomodule_connection(U.D, bc, "cosep").ok(),
                 "displayed pair fails the connection checks");
        c.expect(mat_equal(bc.nabla_l.m, left_from_right(U.D, bc.nabla_r).m),
                 "left_from_right does not reproduce the displayed left connection");
        c.expect(torsion(U.D, bc).zero, "displayed pair has nonzero torsion");
    }
    // perturbed pair: nonzero yet bicolinear torsion exists exactly in dim 3
    {
        Coalgebra C2 = grouplike_coalgebra(Q, 2);
        UniversalCoderivation U2 = universal_coderivation(C2);
        LinearMap idC = identity_map(Q, C2.space);
        auto op = [&](const Mat& x) {
            Mat r1 = mat_sub(Q, mat_mul(Q, U2.D.L.lcoact.m, x),
                             mat_mul(Q, mat_kron(Q, idC.m, x), U2.D.LL.left_coact->m));
            Mat r2 = mat_sub(Q, mat_mul(Q, U2.D.L.rcoact.m, x),
                             mat_mul(Q, mat_kron(Q, x, idC.m), U2.D.LL.right_coact->m));
            Mat out(static_cast<int>(r1.a.size() + r2.a.size()), 1);
            int k = 0;
            for (const auto& v : r1.a) out.at(k++, 0) = v;
            for (const auto& v : r2.a) out.at(k++, 0) = v;
            return out;
        };
        Mat rhs(op(Mat(U2.D.L.space.dim, U2.D.LL.sub.repr.dim)).rows, 1);
        AffineSolutions sols =
            solve_operator(Q, U2.D.L.space.dim, U2.D.LL.sub.repr.dim, op, rhs);
        c.expect(sols.solvable && sols.basis.empty(),
                 "dim 2 unexpectedly admits a nonzero bicolinear perturbation");
    }
    {
        Coalgebra C3 = grouplike_coalgebra(Q, 3);
        UniversalCoderivation U3 = universal_coderivation(C3);
        Cointegral delta = grouplike_cointegral(Q, C3.space);
        BicomoduleConnection bc = coseparable_right_connection(C3, delta, U3);
        LinearMap idC = identity_map(Q, C3.space);
        auto op = [&](const Mat& x) {
            Mat r1 = mat_sub(Q, mat_mul(Q, U3.D.L.lcoact.m, x),
                             mat_mul(Q, mat_kron(Q, idC.m, x), U3.D.LL.left_coact->m));
            Mat r2 = mat_sub(Q, mat_mul(Q, U3.D.L.rcoact.m, x),
                             mat_mul(Q, mat_kron(Q, x, idC.m), U3.D.LL.right_coact->m));
            Mat out(static_cast<int>(r1.a.size() + r2.a.size()), 1);
            int k = 0;
            for (const auto& v : r1.a) out.at(k++, 0) = v;
            for (const auto& v : r2.a) out.at(k++, 0) = v;
            return out;
        };
        Mat rhs(op(Mat(U3.D.L.space.dim, U3.D.LL.sub.repr.dim)).rows, 1);
        AffineSolutions sols =
            solve_operator(Q, U3.D.L.space.dim, U3.D.LL.sub.repr.dim, op, rhs);
        c.expect(sols.solvable && !sols.basis.empty(),
                 "dim 3 lacks a bicolinear perturbation direction");
        if (!sols.basis.empty()) {
            BicomoduleConnection perturbed = bc;
            perturbed.nabla_l =
                LinearMap(Q, bc.nabla_l.src, bc.nabla_l.dst, mat_add(Q, bc.nabla_l.m, sols.basis[0]));
            TorsionValue tv = torsion(U3.D, perturbed);  // bicolinearity verified inside
            c.expect(!tv.zero, "perturbed pair has zero torsion");
        }
    }
}

void criterion_injectivity(Checker& c) {
    for (int n : {2, 3}) {
        Coalgebra C = grouplike_coalgebra(Q, n);
        UniversalCoderivation U = universal_coderivation(C);
        Cointegral delta = grouplike_cointegral(Q, C.space);
        RightComodule M = right_copart(regular_bicomodule(C));
        LinearMap sigma = compose(kron(delta.delta, identity_map(Q, C.space)),
                                  kron(identity_map(Q, C.space), C.comul));
        sigma = LinearMap(Q, tensor_space(C.space, C.space), C.space, sigma.m);
        ComoduleConnection conn = connection_from_retraction(U, M, sigma);
        c.expect(check_connection(U.D, conn, "conn").ok(), "retraction-built map not a connection");
        LinearMap sigma2 = retraction_from_connection(U, M, conn);
        c.expect(mat_equal(sigma2.m, sigma.m), "retraction round trip drifts");
        ComoduleConnection conn2 = connection_from_retraction(U, M, sigma2);
        c.expect(mat_equal(conn2.nabla.m, conn.nabla.m), "connection round trip drifts");
    }
    Coalgebra P = path_coalgebra_one_arrow(Q);
    VectorSpace V = VectorSpace::named({"v"});
    Mat r1(3, 1);
    r1.at(0, 0) = 1;
    RightComodule S1{V, LinearMap(Q, V, tensor_space(V, P.space), r1)};
    c.expect(check_right_comodule(P, S1, "S1").ok(), "S1 is not a comodule");
    c.expect(!solve_colinear_retraction(P, S1).has_value(),
             "non-injective comodule unexpectedly admits a colinear retraction");
}

void criterion_three_formulations(Checker& c) {
    for (int which : {2, 3, 4}) {
        AydData D = ayd(which);
        Coring EC = D.coring;
        CRingWithCharacter R = cring_from_entwining(D.E, D.H.b.coalg.counit);
        const VectorSpace& V = D.H.b.alg.space;
        LinearMap idV = identity_map(Q, V);

        std::vector<EntwinedModule> instances;
        // positive: regular action with trivial coaction
        LinearMap triv = kron(idV, D.H.b.alg.unit);
        instances.push_back(EntwinedModule{
            RightModule{V, D.H.b.alg.mul},
            RightComodule{V, LinearMap(Q, V, tensor_space(V, V), triv.m)}});
        // positive: the canonical comodule of the coring, a -> psi(1 (x) a)
        LinearMap one_ins = vec_as_map(Q, D.E.C.space, algebra_one(D.H.b.alg));
        LinearMap can = compose(D.E.psi, kron(one_ins, idV));
        instances.push_back(EntwinedModule{
            RightModule{V, D.H.b.alg.mul},
            RightComodule{V, LinearMap(Q, V, tensor_space(V, V), can.m)}});
        // negatives: conjugate the action, keep the coaction; and vice versa
        Mat sh = Mat::identity(V.dim);
        sh.at(0, 1) = 1;
        LinearMap phi(Q, V, V, sh);
        LinearMap conj_act = compose(phi, compose(D.H.b.alg.mul, kron(*inverse(phi), idV)));
        instances.push_back(EntwinedModule{
            RightModule{V, LinearMap(Q, tensor_space(V, V), V, conj_act.m)},
            RightComodule{V, D.H.b.coalg.comul}});
        instances.push_back(EntwinedModule{RightModule{V, D.H.b.alg.mul},
                                           RightComodule{V, D.H.b.coalg.comul}});

        int positives = 0, negatives = 0;
        for (size_t i = 0; i < instances.size(); ++i) {
            const EntwinedModule& M = instances[i];
            Report rep = check_entwined_module(D.E, EC, M, "inst");
            bool halves = true, pentagon = false, agrees = false;
            for (const auto& ch : rep.checks) {
                if (ch.id == "entwined.pentagon") pentagon = ch.pass;
                else if (ch.id == "entwined.coring_agrees") agrees = ch.pass;
                else halves = halves && ch.pass;
            }
            c.expect(halves, "instance halves are invalid");
            c.expect(agrees, "pentagon and coring-comodule checks disagree");
            bool cring_ok =
                check_cring_module(R.ring, entwined_to_cring_module(D.E, R.ring, M), "inst").ok();
            c.expect(pentagon == cring_ok,
                     "pentagon and C-ring module checks disagree on instance " +
                         std::to_string(i));
            bool coring_ok =
                check_coring_comodule(EC, entwined_to_coring_comodule(D.E, EC, M), "inst").ok();
            c.expect(pentagon == coring_ok,
                     "pentagon and coring comodule checks disagree on instance " +
                         std::to_string(i));
            (pentagon ? positives : negatives) += 1;
            // the canonical comodule of the coring is always a positive instance;
            // the trivial coaction is one exactly in the cocommutative cases
            if (i == 1) c.expect(pentagon, "canonical instance fails the pentagon");
            if (i == 0 && which != 4) c.expect(pentagon, "trivial coaction fails for kC_n");
            if (i == 0 && which == 4)
                c.expect(!pentagon, "trivial coaction should fail for H4 (not cocommutative)");
        }
        c.expect(positives >= 1 && negatives >= 1,
                 "instances do not cover both outcomes");
    }
}

}  // namespace

int main() {
    struct Item {
        int id;
        std::string title;
        std::function<void(Checker&)> run;
    };
    std::vector<Item> items = {
        {1, "Roiter round trip on the Sweedler corings of k[x]/(x^2) and kC2",
         criterion_roiter_round_trip},
        {2, "d.d = 0 and graded Leibniz to degree 3 for all catalog DGAs",
         criterion_d_squared_leibniz},
        {3, "coaction <-> flat connection bijection with exact curvature signals",
         criterion_connection_bijection},
        {4, "entwining compatibility for kC2, kC3, H4 and targeted mutations",
         criterion_bowtie},
        {5, "degree-0 differential vanishes exactly for the cocommutative Hopf algebras",
         criterion_cocommutative_vanishing},
        {6, "lambda.lambda = 0 and the full extended-coderivation axioms at degree 3",
         criterion_complex},
        {7, "action <-> flat connection bijection with flatness matching associativity",
         criterion_action_bijection},
        {8, "cointegral connection pair: checks, torsion zero, bicolinear perturbation",
         criterion_coseparable},
        {9, "retraction <-> connection round trips and the exact non-injectivity witness",
         criterion_injectivity},
        {10, "entwined module = C-ring module = coring comodule on all instances",
         criterion_three_formulations},
    };
    int failures = 0;
    for (auto& item : items) {
        Checker c;
        auto t0 = std::chrono::steady_clock::now();
        try {
            item.run(c);
        } catch (const Error& e) {
            c.ok = false;
            c.log << "      error [" << e.code << "]: " << e.what() << "\n";
        } catch (const std::exception& e) {
            c.ok = false;
            c.log << "      error: " << e.what() << "\n";
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::cout << (c.ok ? "[PASS] " : "[FAIL] ") << item.id << ". " << item.title << " ("
                  << ms << " ms)\n";
        if (!c.ok) {
            std::cout << c.log.str();
            ++failures;
        }
    }
    std::cout << (failures == 0 ? "all criteria passed"
                                : std::to_string(failures) + " criteria failed")
              << "\n";
    return failures == 0 ? 0 : 1;
}
