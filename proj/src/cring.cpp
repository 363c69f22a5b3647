#include "coringlab/cring.hpp"

#include "coringlab/dga.hpp"  // mat_apply_kron

namespace coringlab {

namespace {

// induced right coaction on a cotensor stage X box B inside X (x) B
LinearMap stage_right_coact(const Field& F, const SubSpace& stage, const VectorSpace& xspace,
                            const LinearMap& rcoactB, const VectorSpace& cspace) {
    LinearMap amb = compose(kron(identity_map(F, xspace), rcoactB), stage.incl);
    auto co = corestrict(amb, tensor_sub_right(stage, cspace));
    require(co.has_value(), "cring.stage", "right coaction does not preserve the stage");
    return *co;
}

}  // namespace

CRing make_cring(const Coalgebra& C, const Bicomodule& carrier, const LinearMap& mul_repr,
                 const LinearMap& unit) {
    const Field& F = C.comul.F;
    CRing R;
    R.C = C;
    R.carrier = carrier;
    R.AA = cotensor(C, carrier, carrier);
    require(mul_repr.src.dim == R.AA.sub.repr.dim && mul_repr.dst.dim == carrier.space.dim,
            "cring.shape", "multiplication must go from (A box A).repr to A");
    require(unit.src.dim == C.space.dim && unit.dst.dim == carrier.space.dim, "cring.shape",
            "unit must go from C to A");
    R.mul = LinearMap(F, R.AA.sub.repr, carrier.space, mul_repr.m);
    R.unit = LinearMap(F, C.space, carrier.space, unit.m);
    R.AAA = cotensor_sub(F, R.AA.sub.repr, carrier.space, *R.AA.right_coact, carrier.lcoact);
    // presentation of the triple cotensor inside A (x) (A box A)
    Mat flat = mat_kron_apply(F, R.AA.sub.incl.m, Mat::identity(carrier.space.dim), R.AAA.incl.m);
    Mat to_aa = mat_kron_apply(F, Mat::identity(carrier.space.dim), R.AA.sub.retr.m, flat);
    Mat back = mat_kron_apply(F, Mat::identity(carrier.space.dim), R.AA.sub.incl.m, to_aa);
    require(mat_equal(back, flat), "cring.stage",
            "triple cotensor does not sit inside A (x) (A box A)");
    R.AAA_into_ALL = LinearMap(F, R.AAA.repr, tensor_space(carrier.space, R.AA.sub.repr),
                               std::move(to_aa));
    return R;
}

CRing make_cring_ambient(const Coalgebra& C, const Bicomodule& carrier,
                         const LinearMap& mul_ambient, const LinearMap& unit) {
    CotensorSpace AA = cotensor(C, carrier, carrier);
    require(mul_ambient.src.dim == carrier.space.dim * carrier.space.dim &&
                mul_ambient.dst.dim == carrier.space.dim,
            "cring.shape", "ambient multiplication shape mismatch");
    LinearMap mul_repr = compose(mul_ambient, AA.sub.incl);
    return make_cring(C, carrier, mul_repr, unit);
}

Report check_cring(const CRing& R, const std::string& name) {
    Report rep;
    rep.object = name;
    const Field& F = R.C.comul.F;
    const VectorSpace& As = R.carrier.space;
    LinearMap idC = identity_map(F, R.C.space), idA = identity_map(F, As);

    check_equal_maps(rep, "cring.mul_left_colinear", "lcoact.mul = (C(x)mul).(lcoact box A)",
                     compose(R.carrier.lcoact, R.mul),
                     compose(kron(idC, R.mul), *R.AA.left_coact));
    check_equal_maps(rep, "cring.mul_right_colinear", "rcoact.mul = (mul(x)C).(A box rcoact)",
                     compose(R.carrier.rcoact, R.mul),
                     compose(kron(R.mul, idC), *R.AA.right_coact));
    check_equal_maps(rep, "cring.unit_left_colinear", "lcoact.unit = (C(x)unit).comul",
                     compose(R.carrier.lcoact, R.unit), compose(kron(idC, R.unit), R.C.comul));
    check_equal_maps(rep, "cring.unit_right_colinear", "rcoact.unit = (unit(x)C).comul",
                     compose(R.carrier.rcoact, R.unit), compose(kron(R.unit, idC), R.C.comul));

    // associativity on the triple cotensor
    LinearMap mul_first_amb = compose(kron(R.mul, idA), R.AAA.incl);  // -> A (x) A
    auto mf = corestrict(mul_first_amb, R.AA.sub);
    LinearMap mul_second_amb(F, R.AAA.repr, tensor_space(As, As),
                             mat_kron_apply(F, Mat::identity(As.dim), R.mul.m,
                                            R.AAA_into_ALL.m));
    auto ms = corestrict(mul_second_amb, R.AA.sub);
    check_flag(rep, "cring.assoc_welldef",
               "both bracketings land in A box A", mf.has_value() && ms.has_value());
    if (mf && ms) {
        check_equal_maps(rep, "cring.assoc", "mul.(mul box A) = mul.(A box mul)",
                         compose(R.mul, *mf), compose(R.mul, *ms));
    }

    // unit squares through A box C and C box A
    {
        CotensorSpace AC = cotensor(R.C, right_copart(R.carrier),
                                    left_copart(regular_bicomodule(R.C)));
        auto rho_in = corestrict(R.carrier.rcoact, AC.sub);
        LinearMap eta_amb = compose(kron(idA, R.unit), AC.sub.incl);
        auto eta_in = corestrict(eta_amb, R.AA.sub);
        check_flag(rep, "cring.unit_right_welldef",
                   "rcoact lands in A box C and A box unit lands in A box A",
                   rho_in.has_value() && eta_in.has_value());
        if (rho_in && eta_in)
            check_equal_maps(rep, "cring.unit_right_square", "mul.(A box unit).rcoact = A",
                             compose(R.mul, compose(*eta_in, *rho_in)), idA);
    }
    {
        CotensorSpace CA = cotensor(R.C, right_copart(regular_bicomodule(R.C)),
                                    left_copart(R.carrier));
        auto rho_in = corestrict(R.carrier.lcoact, CA.sub);
        LinearMap eta_amb = compose(kron(R.unit, idA), CA.sub.incl);
        auto eta_in = corestrict(eta_amb, R.AA.sub);
        check_flag(rep, "cring.unit_left_welldef",
                   "lcoact lands in C box A and unit box A lands in A box A",
                   rho_in.has_value() && eta_in.has_value());
        if (rho_in && eta_in)
            check_equal_maps(rep, "cring.unit_left_square", "mul.(unit box A).lcoact = A",
                             compose(R.mul, compose(*eta_in, *rho_in)), idA);
    }
    return rep;
}

Report check_character(const CRing& R, const Character& k, const std::string& name) {
    Report rep;
    rep.object = name;
    const Field& F = R.C.comul.F;
    LinearMap kk = compose(kron(k.kappa, k.kappa), R.AA.sub.incl);
    check_equal_maps(rep, "character.mult", "kappa.mul = kappa box kappa",
                     compose(k.kappa, R.mul), LinearMap(F, R.AA.sub.repr, unit_space(), kk.m));
    check_equal_maps(rep, "character.unit", "kappa.unit = counit", compose(k.kappa, R.unit),
                     R.C.counit);
    rep.notes.push_back(
        "kappa box kappa is read as evaluating kappa (x) kappa on the cotensor inclusion and "
        "identifying k (x) k with k");
    return rep;
}

CRingModule make_cring_module(const CRing& R, const RightComodule& M,
                              const LinearMap& action_repr) {
    const Field& F = R.C.comul.F;
    CRingModule out;
    out.comodule = M;
    out.MA = cotensor(R.C, M, R.carrier);
    require(action_repr.src.dim == out.MA.sub.repr.dim && action_repr.dst.dim == M.space.dim,
            "cring.shape", "action must go from (M box A).repr to M");
    out.action = LinearMap(F, out.MA.sub.repr, M.space, action_repr.m);
    return out;
}

CRingModule make_cring_module_ambient(const CRing& R, const RightComodule& M,
                                      const LinearMap& action_ambient) {
    CotensorSpace MA = cotensor(R.C, M, R.carrier);
    require(action_ambient.src.dim == M.space.dim * R.carrier.space.dim &&
                action_ambient.dst.dim == M.space.dim,
            "cring.shape", "ambient action shape mismatch");
    return make_cring_module(R, M, compose(action_ambient, MA.sub.incl));
}

Report check_cring_module(const CRing& R, const CRingModule& M, const std::string& name) {
    Report rep;
    rep.object = name;
    const Field& F = R.C.comul.F;
    const VectorSpace& As = R.carrier.space;
    const VectorSpace& Ms = M.comodule.space;
    LinearMap idC = identity_map(F, R.C.space), idA = identity_map(F, As);
    LinearMap idM = identity_map(F, Ms);

    check_equal_maps(rep, "cringmodule.colinear", "coact.action = (action(x)C).(M box rcoact)",
                     compose(M.comodule.coact, M.action),
                     compose(kron(M.action, idC), *M.MA.right_coact));

    // associativity on M box A box A
    SubSpace MAA = cotensor_sub(F, M.MA.sub.repr, As, *M.MA.right_coact, R.carrier.lcoact);
    LinearMap act_first_amb = compose(kron(M.action, idA), MAA.incl);
    auto af = corestrict(act_first_amb, M.MA.sub);
    Mat flat = mat_kron_apply(F, M.MA.sub.incl.m, Mat::identity(As.dim), MAA.incl.m);
    Mat to_aa = mat_kron_apply(F, Mat::identity(Ms.dim), R.AA.sub.retr.m, flat);
    Mat back = mat_kron_apply(F, Mat::identity(Ms.dim), R.AA.sub.incl.m, to_aa);
    bool inside = mat_equal(back, flat);
    std::optional<LinearMap> as_;
    if (inside) {
        LinearMap second_amb(F, MAA.repr, tensor_space(Ms, As),
                             mat_kron_apply(F, Mat::identity(Ms.dim), R.mul.m, to_aa));
        as_ = corestrict(second_amb, M.MA.sub);
    }
    check_flag(rep, "cringmodule.assoc_welldef", "both bracketings land in M box A",
               inside && af.has_value() && as_.has_value());
    if (inside && af && as_)
        check_equal_maps(rep, "cringmodule.assoc", "action.(action box A) = action.(M box mul)",
                         compose(M.action, *af), compose(M.action, *as_));

    // unit square through M box C
    CotensorSpace MC = cotensor(R.C, M.comodule, left_copart(regular_bicomodule(R.C)));
    auto rho_in = corestrict(M.comodule.coact, MC.sub);
    LinearMap eta_amb = compose(kron(idM, R.unit), MC.sub.incl);
    auto eta_in = corestrict(eta_amb, M.MA.sub);
    check_flag(rep, "cringmodule.unit_welldef",
               "coact lands in M box C and M box unit lands in M box A",
               rho_in.has_value() && eta_in.has_value());
    if (rho_in && eta_in)
        check_equal_maps(rep, "cringmodule.unit", "action.(M box unit).coact = M",
                         compose(M.action, compose(*eta_in, *rho_in)), idM);
    return rep;
}

CRingModule free_module(const CRing& R, const VectorSpace& V) {
    const Field& F = R.C.comul.F;
    const VectorSpace& As = R.carrier.space;
    LinearMap idV = identity_map(F, V);
    RightComodule M{tensor_space(V, As),
                    LinearMap(F, tensor_space(V, As), tensor_space(tensor_space(V, As), R.C.space),
                              kron(idV, R.carrier.rcoact).m)};
    CotensorSpace MA = cotensor(R.C, M, R.carrier);
    // (V (x) A) box A sits inside V (x) (A box A); multiply there
    Mat to_aa = mat_kron_apply(F, Mat::identity(V.dim), R.AA.sub.retr.m, MA.sub.incl.m);
    Mat back = mat_kron_apply(F, Mat::identity(V.dim), R.AA.sub.incl.m, to_aa);
    require(mat_equal(back, MA.sub.incl.m), "cring.free",
            "free module cotensor does not sit inside V (x) (A box A)");
    Mat act = mat_kron_apply(F, Mat::identity(V.dim), R.mul.m, to_aa);
    return make_cring_module(R, M, LinearMap(F, MA.sub.repr, M.space, std::move(act)));
}

CRingModule module_from_character(const CRing& R, const Character& k) {
    const Field& F = R.C.comul.F;
    RightComodule M = right_copart(regular_bicomodule(R.C));
    CotensorSpace MA = cotensor(R.C, M, R.carrier);
    // sum c (x) x -> sum counit(c) kappa(x_0) x_1; the naive c.kappa(x) is not
    // colinear unless the coderivation vanishes
    LinearMap e = compose(kron(k.kappa, identity_map(F, R.C.space)), R.carrier.rcoact);
    LinearMap act = compose(kron(R.C.counit, LinearMap(F, R.carrier.space, R.C.space, e.m)),
                            MA.sub.incl);
    return make_cring_module(R, M, LinearMap(F, MA.sub.repr, R.C.space, act.m));
}

CRingWithCharacter cring_from_entwining(const Entwining& E,
                                        const std::optional<LinearMap>& chi) {
    const Field& F = E.psi.F;
    Report bt = check_bowtie(E, "entwining");
    if (!bt.ok()) throw Error("entwining.bowtie", "entwining identities fail:\n" + bt.text());
    const VectorSpace& A = E.A.space;
    const VectorSpace& C = E.C.space;
    LinearMap idA = identity_map(F, A), idC = identity_map(F, C);
    VectorSpace carrier_space = tensor_space(C, A);
    LinearMap lcoact = kron(E.C.comul, idA);
    lcoact = LinearMap(F, carrier_space, tensor_space(C, carrier_space), lcoact.m);
    LinearMap rcoact = compose(kron(idC, E.psi), kron(E.C.comul, idA));
    rcoact = LinearMap(F, carrier_space, tensor_space(carrier_space, C), rcoact.m);
    Bicomodule carrier{carrier_space, lcoact, rcoact};
    Report bi = check_bicomodule(E.C, carrier, "carrier");
    if (!bi.ok())
        throw Error("cring.carrier", "entwined carrier is not a bicomodule:\n" + bi.text());

    CotensorSpace AA = cotensor(E.C, carrier, carrier);
    // identification C (x) A (x) A = (C (x) A) box (C (x) A) via the right coaction
    LinearMap j_amb = kron(rcoact, idA);  // (C(x)A)(x)A -> (C(x)A)(x)(C(x)A)
    j_amb = LinearMap(F, tensor_space(carrier_space, A),
                      tensor_space(carrier_space, carrier_space), j_amb.m);
    auto j = corestrict(j_amb, AA.sub);
    require(j.has_value() && j->src.dim == AA.sub.repr.dim, "cring.identification",
            "C (x) A (x) A does not identify with the cotensor square");
    auto j_inv = inverse(*j);
    require(j_inv.has_value(), "cring.identification", "identification is not bijective");
    LinearMap mul = compose(kron(std::vector<LinearMap>{idC, E.A.mul}), *j_inv);
    LinearMap unit = kron(idC, E.A.unit);
    unit = LinearMap(F, C, carrier_space, unit.m);
    CRingWithCharacter out{
        make_cring(E.C, carrier, LinearMap(F, AA.sub.repr, carrier_space, mul.m), unit),
        std::nullopt};
    if (chi) {
        require(chi->src.dim == A.dim && chi->dst.dim == 1, "cring.shape",
                "character of A has wrong shape");
        bool mult = equal(compose(*chi, E.A.mul), kron(*chi, *chi));
        bool unital = equal(compose(*chi, E.A.unit), identity_map(F, unit_space()));
        require(mult && unital, "cring.bad_character",
                "chi is not an algebra character (multiplicativity or unitality fails)");
        LinearMap kappa = kron(E.C.counit, *chi);
        out.kappa = Character{LinearMap(F, carrier_space, unit_space(), kappa.m)};
    }
    return out;
}

CRingWithCharacter cring_cc(const Coalgebra& C) {
    const Field& F = C.comul.F;
    const VectorSpace& Cs = C.space;
    LinearMap idC = identity_map(F, Cs);
    VectorSpace carrier_space = tensor_space(Cs, Cs);
    LinearMap lcoact = kron(C.comul, idC);
    lcoact = LinearMap(F, carrier_space, tensor_space(Cs, carrier_space), lcoact.m);
    LinearMap rcoact = kron(idC, C.comul);
    rcoact = LinearMap(F, carrier_space, tensor_space(carrier_space, Cs), rcoact.m);
    Bicomodule carrier{carrier_space, lcoact, rcoact};
    CotensorSpace AA = cotensor(C, carrier, carrier);
    LinearMap j_amb = kron(rcoact, idC);
    j_amb = LinearMap(F, tensor_space(carrier_space, Cs),
                      tensor_space(carrier_space, carrier_space), j_amb.m);
    auto j = corestrict(j_amb, AA.sub);
    require(j.has_value() && j->src.dim == AA.sub.repr.dim, "cring.identification",
            "C (x) C (x) C does not identify with the cotensor square");
    auto j_inv = inverse(*j);
    require(j_inv.has_value(), "cring.identification", "identification is not bijective");
    LinearMap mul = compose(kron(std::vector<LinearMap>{idC, C.counit, idC}), *j_inv);
    CRingWithCharacter out{
        make_cring(C, carrier, LinearMap(F, AA.sub.repr, carrier_space, mul.m), C.comul),
        std::nullopt};
    LinearMap kappa = kron(C.counit, C.counit);
    out.kappa = Character{LinearMap(F, carrier_space, unit_space(), kappa.m)};
    return out;
}

CRingModule entwined_to_cring_module(const Entwining& E, const CRing& R,
                                     const EntwinedModule& M) {
    const Field& F = E.psi.F;
    LinearMap idM = identity_map(F, M.module.space);
    CotensorSpace MA = cotensor(R.C, M.comodule, R.carrier);
    // M box (C (x) A) -> M (x) A by stripping the coacting C leg, then act
    LinearMap strip = kron(idM, kron(E.C.counit, identity_map(F, E.A.space)));
    LinearMap act = compose(M.module.act, compose(LinearMap(F, MA.sub.incl.dst,
                                                            tensor_space(M.module.space, E.A.space),
                                                            strip.m),
                                                  MA.sub.incl));
    return make_cring_module(R, M.comodule, LinearMap(F, MA.sub.repr, M.module.space, act.m));
}

CoderivationComplex coderivation_complex(const CRing& R, const Character& k, int cap) {
    const Field& F = R.C.comul.F;
    require(cap >= 2, "cring.cap", "the complex needs homological degree at least 2");
    {
        Report rr = check_cring(R, "input");
        if (!rr.ok()) throw Error("cring.invalid", "C-ring axioms fail:\n" + rr.text());
        Report kr = check_character(R, k, "kappa");
        if (!kr.ok()) throw Error("cring.bad_character", "character fails:\n" + kr.text());
    }
    const VectorSpace& As = R.carrier.space;
    LinearMap idC = identity_map(F, R.C.space), idA = identity_map(F, As);
    CoderivationComplex X;
    X.cap = cap;
    X.Abar = cokernel(R.unit);
    const VectorSpace& Bs = X.Abar.repr;

    // specific left-colinear section: sigma.pi = A - (unit (x) kappa).lcoact
    LinearMap strip = kron(R.unit, k.kappa);  // C (x) A -> A (x) k = A
    strip = LinearMap(F, tensor_space(R.C.space, As), As, strip.m);
    LinearMap P = sub(idA, compose(strip, R.carrier.lcoact));
    X.sigma = compose(P, X.Abar.sect);
    require(equal(compose(X.sigma, X.Abar.proj), P), "cring.section",
            "canonical section does not factor the projector");

    // induced coactions on Abar
    LinearMap lc_amb = compose(kron(idC, X.Abar.proj), R.carrier.lcoact);
    LinearMap lcoactB = compose(lc_amb, X.Abar.sect);
    require(equal(compose(lcoactB, X.Abar.proj), lc_amb), "cring.section",
            "left coaction does not descend to Abar");
    LinearMap rc_amb = compose(kron(X.Abar.proj, idC), R.carrier.rcoact);
    LinearMap rcoactB = compose(rc_amb, X.Abar.sect);
    require(equal(compose(rcoactB, X.Abar.proj), rc_amb), "cring.section",
            "right coaction does not descend to Abar");
    X.Abar_bi = Bicomodule{Bs, LinearMap(F, Bs, tensor_space(R.C.space, Bs), lcoactB.m),
                           LinearMap(F, Bs, tensor_space(Bs, R.C.space), rcoactB.m)};
    require(equal(compose(R.carrier.lcoact, X.sigma),
                  compose(kron(idC, X.sigma), X.Abar_bi.lcoact)),
            "cring.section", "canonical section is not left colinear");

    // cotensor power stages of A and Abar with flattenings
    X.Sn.assign(cap + 1, SubSpace{});
    X.Sn_rcoact.assign(cap + 1, LinearMap{});
    X.Tn.assign(cap + 1, SubSpace{});
    X.Tn_rcoact.assign(cap + 1, LinearMap{});
    X.pn.assign(cap + 1, LinearMap{});
    std::vector<LinearMap> flatS(cap + 1), flatT_retr(cap + 1);
    X.Sn[2] = R.AA.sub;
    X.Sn_rcoact[2] = *R.AA.right_coact;
    flatS[2] = R.AA.sub.incl;
    X.Tn[2] = cotensor_sub(F, Bs, Bs, X.Abar_bi.rcoact, X.Abar_bi.lcoact);
    X.Tn_rcoact[2] = stage_right_coact(F, X.Tn[2], Bs, X.Abar_bi.rcoact, R.C.space);
    flatT_retr[2] = X.Tn[2].retr;
    for (int n = 3; n <= cap; ++n) {
        X.Sn[n] = cotensor_sub(F, X.Sn[n - 1].repr, As, X.Sn_rcoact[n - 1], R.carrier.lcoact);
        X.Sn_rcoact[n] = stage_right_coact(F, X.Sn[n], X.Sn[n - 1].repr, R.carrier.rcoact,
                                           R.C.space);
        Mat fs = mat_kron_apply(F, flatS[n - 1].m, idA.m, X.Sn[n].incl.m);
        flatS[n] = LinearMap(F, X.Sn[n].repr, VectorSpace::make("s", fs.rows), std::move(fs));
        X.Tn[n] = cotensor_sub(F, X.Tn[n - 1].repr, Bs, X.Tn_rcoact[n - 1], X.Abar_bi.lcoact);
        X.Tn_rcoact[n] = stage_right_coact(F, X.Tn[n], X.Tn[n - 1].repr, X.Abar_bi.rcoact,
                                           R.C.space);
        // retraction from the flat power: T[n].retr . (flatT_retr[n-1] (x) id)
        flatT_retr[n] = LinearMap(F, VectorSpace::make("t", flatT_retr[n - 1].src.dim * Bs.dim),
                                  X.Tn[n].repr,
                                  mat_apply_kron(F, X.Tn[n].retr.m, flatT_retr[n - 1].m,
                                                 Mat::identity(Bs.dim)));
    }

    // pi^{box n}
    X.pn[1] = X.Abar.proj;
    for (int n = 2; n <= cap; ++n) {
        LinearMap prev = (n == 2) ? X.Abar.proj : X.pn[n - 1];
        LinearMap amb(F, X.Sn[n].repr, tensor_space((n == 2) ? Bs : X.Tn[n - 1].repr, Bs),
                      mat_kron_apply(F, prev.m, X.Abar.proj.m, X.Sn[n].incl.m));
        auto p = corestrict(amb, X.Tn[n]);
        require(p.has_value(), "cring.pi_power", "pi^{box n} escapes the cotensor power");
        require(rank(*p) == X.Tn[n].repr.dim, "cring.pi_power", "pi^{box n} is not surjective");
        X.pn[n] = *p;
    }

    X.lambda.assign(cap + 1, LinearMap{});
    // lambda[1]: (kappa (x) C).rcoact - (C (x) kappa).lcoact, factored through pi
    {
        LinearMap t1 = compose(kron(k.kappa, idC), R.carrier.rcoact);
        LinearMap t2 = compose(kron(idC, k.kappa), R.carrier.lcoact);
        LinearMap rhs(F, As, R.C.space, mat_sub(F, t1.m, t2.m));
        X.lambda[1] = compose(rhs, X.Abar.sect);
        require(equal(compose(X.lambda[1], X.Abar.proj), rhs), "cring.lambda",
                "lambda does not descend to Abar");
    }
    // higher lambdas via the displayed alternating sum, solved through pi^{box n}
    LinearMap mul_amb = compose(R.mul, R.AA.sub.retr);  // valid on cotensor pairs
    for (int n = 2; n <= cap; ++n) {
        int dAn = 1;
        for (int i = 0; i < n; ++i) dAn *= As.dim;
        Mat acc((n == 2) ? Bs.dim : X.Tn[n - 1].repr.dim, X.Sn[n].repr.dim);
        Mat pipow = X.Abar.proj.m;  // pi^{(x)(n-1)} below
        for (int i = 1; i < n - 1; ++i) pipow = mat_kron(F, pipow, X.Abar.proj.m);
        auto project_T = [&](const Mat& flat_valued) {
            // flat_valued: Abar^{(x)(n-1)} valued; contract with flatT_retr[n-1]
            if (n == 2) return flat_valued;
            return mat_mul(F, flatT_retr[n - 1].m, flat_valued);
        };
        {
            // kappa on the first leg
            Mat y = mat_kron_apply(F, k.kappa.m, Mat::identity(dAn / As.dim), flatS[n].m);
            Mat z = mat_mul(F, pipow, y);
            acc = mat_add(F, acc, project_T(z));
        }
        for (int l = 1; l <= n - 1; ++l) {
            int pre = 1, post = 1;
            for (int i = 0; i < l - 1; ++i) pre *= As.dim;
            for (int i = 0; i < n - l - 1; ++i) post *= As.dim;
            Mat y = mat_apply_middle(F, pre, mul_amb.m, post, flatS[n].m);
            Mat z = mat_mul(F, pipow, y);
            z = project_T(z);
            acc = (l % 2 == 0) ? mat_add(F, acc, z) : mat_sub(F, acc, z);
        }
        {
            Mat y = mat_kron_apply(F, Mat::identity(dAn / As.dim), k.kappa.m, flatS[n].m);
            Mat z = mat_mul(F, pipow, y);
            z = project_T(z);
            acc = (n % 2 == 0) ? mat_add(F, acc, z) : mat_sub(F, acc, z);
        }
        VectorSpace target = (n == 2) ? Bs : X.Tn[n - 1].repr;
        LinearMap rhs(F, X.Sn[n].repr, target, std::move(acc));
        auto xinv = solve_map(X.pn[n], identity_map(F, X.Tn[n].repr));
        require(xinv.has_value(), "cring.pi_power", "no right inverse of pi^{box n}");
        X.lambda[n] = compose(rhs, *xinv);
        require(equal(compose(X.lambda[n], X.pn[n]), rhs), "cring.lambda",
                "lambda is not well defined through pi^{box n}");
    }
    X.D = make_extended_coderivation(R.C, X.Abar_bi, X.lambda[1], X.lambda[2]);
    return X;
}

Report check_complex(const CoderivationComplex& X, const std::string& name) {
    Report rep;
    rep.object = name;
    check_zero_map(rep, "complex.counit_lambda", "counit.lambda = 0",
                   compose(X.D.C.counit, X.lambda[1]));
    for (int n = 2; n <= X.cap; ++n)
        check_zero_map(rep, "complex.lambda_squared_" + std::to_string(n - 1),
                       "lambda.lambda = 0 at degree " + std::to_string(n),
                       compose(X.lambda[n - 1], X.lambda[n]));
    rep.merge(check_coderivation(X.D, name));
    return rep;
}

namespace {

// M box pi : (M box A).repr -> (M box Abar).repr, with its target cotensor
struct ProjectedCotensor {
    CotensorSpace MB;  // M box Abar
    LinearMap p;       // surjective
};

ProjectedCotensor m_box_pi(const CRing& R, const CoderivationComplex& X, const CRingModule& M) {
    const Field& F = R.C.comul.F;
    ProjectedCotensor out;
    RightComodule Mc = M.comodule;
    out.MB = cotensor(R.C, Mc, X.Abar_bi);
    LinearMap idM = identity_map(F, Mc.space);
    LinearMap amb = compose(kron(idM, X.Abar.proj), M.MA.sub.incl);
    auto p = corestrict(amb, out.MB.sub);
    require(p.has_value(), "cring.factorization", "M box pi escapes M box Abar");
    require(rank(*p) == out.MB.sub.repr.dim, "cring.factorization",
            "M box pi is not surjective");
    out.p = *p;
    return out;
}

}  // namespace

ComoduleConnection connection_from_action(const CRing& R, const Character& k,
                                          const CoderivationComplex& X, const CRingModule& M) {
    const Field& F = R.C.comul.F;
    ProjectedCotensor pc = m_box_pi(R, X, M);
    LinearMap idM = identity_map(F, M.comodule.space);
    LinearMap kappa_part = compose(kron(idM, k.kappa), M.MA.sub.incl);
    LinearMap target(F, M.MA.sub.repr, M.comodule.space,
                     mat_sub(F, M.action.m, kappa_part.m));
    auto xinv = solve_map(pc.p, identity_map(F, pc.MB.sub.repr));
    require(xinv.has_value(), "cring.factorization", "no right inverse of M box pi");
    LinearMap nabla = compose(target, *xinv);
    if (!equal(compose(nabla, pc.p), target))
        throw Error("cring.factorization",
                    "action - M box kappa does not factor through M box pi (broken module)");
    ComoduleConnection conn;
    conn.side = ComoduleConnection::Side::right;
    conn.mspace = M.comodule.space;
    conn.coact = M.comodule.coact;
    conn.ML = pc.MB;
    conn.nabla = LinearMap(F, pc.MB.sub.repr, M.comodule.space, nabla.m);
    return conn;
}

CRingModule action_from_connection(const CRing& R, const Character& k,
                                   const CoderivationComplex& X,
                                   const ComoduleConnection& conn) {
    const Field& F = R.C.comul.F;
    CurvatureCC cv = curvature_cc(X.D, conn);
    if (!cv.flat) {
        auto w = first_nonzero(cv.F);
        throw Error("cring.curved",
                    "connection has nonzero curvature; witness: " + witness_of(*w));
    }
    RightComodule M{conn.mspace, conn.coact};
    CotensorSpace MA = cotensor(R.C, M, R.carrier);
    LinearMap idM = identity_map(F, conn.mspace);
    LinearMap amb = compose(kron(idM, X.Abar.proj), MA.sub.incl);
    auto p = corestrict(amb, conn.ML.sub);
    require(p.has_value(), "cring.factorization", "M box pi escapes M box Abar");
    LinearMap kappa_part = compose(kron(idM, k.kappa), MA.sub.incl);
    LinearMap action(F, MA.sub.repr, conn.mspace,
                     mat_add(F, compose(conn.nabla, *p).m, kappa_part.m));
    CRingModule out;
    out.comodule = M;
    out.MA = MA;
    out.action = action;
    return out;
}

ModuleCandidates solve_module_linear_system(const CRing& R, const RightComodule& M) {
    const Field& F = R.C.comul.F;
    ModuleCandidates out;
    out.MA = cotensor(R.C, M, R.carrier);
    const int rows = M.space.dim, cols = out.MA.sub.repr.dim;
    LinearMap idM = identity_map(F, M.space);
    LinearMap idC = identity_map(F, R.C.space);
    // unit square data
    CotensorSpace MC = cotensor(R.C, M, left_copart(regular_bicomodule(R.C)));
    auto rho_in = corestrict(M.coact, MC.sub);
    LinearMap eta_amb = compose(kron(idM, R.unit), MC.sub.incl);
    auto eta_in = corestrict(eta_amb, out.MA.sub);
    require(rho_in.has_value() && eta_in.has_value(), "cring.shape",
            "comodule does not reach M box A through the unit");
    LinearMap unit_path = compose(*eta_in, *rho_in);  // M -> (M box A).repr
    const Mat& rc = out.MA.right_coact->m;
    auto op = [&](const Mat& x) {
        // colinearity: coact . x - (x (x) C) . right_coact
        Mat r1 = mat_sub(F, mat_mul(F, M.coact.m, x),
                         mat_mul(F, mat_kron(F, x, idC.m), rc));
        // unit square: x . unit_path
        Mat r2 = mat_mul(F, x, unit_path.m);
        Mat outm(static_cast<int>(r1.a.size() + r2.a.size()), 1);
        int kk = 0;
        for (const auto& v : r1.a) outm.at(kk++, 0) = v;
        for (const auto& v : r2.a) outm.at(kk++, 0) = v;
        return outm;
    };
    Mat rhs(rows * R.C.space.dim * cols + rows * rows, 1);
    {
        Mat id = Mat::identity(rows);
        int kk = rows * R.C.space.dim * cols;
        for (const auto& v : id.a) rhs.at(kk++, 0) = v;
    }
    AffineSolutions sols = solve_operator(F, rows, cols, op, rhs);
    out.solvable = sols.solvable;
    if (sols.solvable) {
        out.particular = sols.particular;
        out.basis = sols.basis;
    }
    return out;
}

}  // namespace coringlab
