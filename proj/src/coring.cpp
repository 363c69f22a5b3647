#include "coringlab/coring.hpp"

namespace coringlab {

Coring make_coring_repr(const Algebra& A, const Bimodule& carrier, const LinearMap& cop,
                        const LinearMap& cou) {
    const Field& F = A.mul.F;
    Coring C;
    C.A = A;
    C.carrier = carrier;
    C.cou = cou;
    C.W2 = tensor_relations_quotient(F, carrier.space, carrier.space, carrier.ract, carrier.lact);
    require(cop.src.dim == carrier.space.dim && cop.dst.dim == C.W2.repr.dim, "coring.shape",
            "coproduct shape mismatch");
    require(cou.src.dim == carrier.space.dim && cou.dst.dim == A.space.dim, "coring.shape",
            "counit shape mismatch");
    C.cop = LinearMap(F, carrier.space, C.W2.repr, cop.m);
    C.W2_lact = induced_quotient_lact(F, C.W2, carrier.lact, A.space, carrier.space);
    C.W2_ract = induced_quotient_ract(F, C.W2, carrier.ract, carrier.space, A.space);
    // W3 = (W2 (x) C) / relations between the right action on W2 and lact
    C.W3 = tensor_relations_quotient(F, C.W2.repr, carrier.space, C.W2_ract, carrier.lact);
    return C;
}

Coring make_coring(const Algebra& A, const Bimodule& carrier, const LinearMap& cop_ambient,
                   const LinearMap& cou) {
    const Field& F = A.mul.F;
    QuotientSpace W2 =
        tensor_relations_quotient(F, carrier.space, carrier.space, carrier.ract, carrier.lact);
    require(cop_ambient.src.dim == carrier.space.dim &&
                cop_ambient.dst.dim == carrier.space.dim * carrier.space.dim,
            "coring.shape", "ambient coproduct shape mismatch");
    LinearMap cop = compose(W2.proj, cop_ambient);
    return make_coring_repr(A, carrier, cop, cou);
}

Report check_coring(const Coring& C, const std::string& name) {
    Report rep;
    rep.object = name;
    const Field& F = C.A.mul.F;
    LinearMap idA = identity_map(F, C.A.space), idC = identity_map(F, C.carrier.space);

    // counit is a bimodule map
    check_equal_maps(rep, "coring.cou_left_linear", "cou.lact = mul.(A(x)cou)",
                     compose(C.cou, C.carrier.lact), compose(C.A.mul, kron(idA, C.cou)));
    check_equal_maps(rep, "coring.cou_right_linear", "cou.ract = mul.(cou(x)A)",
                     compose(C.cou, C.carrier.ract), compose(C.A.mul, kron(C.cou, idA)));

    // coproduct is a bimodule map
    check_equal_maps(rep, "coring.cop_left_linear", "cop.lact = lact.(A(x)cop)",
                     compose(C.cop, C.carrier.lact), compose(C.W2_lact, kron(idA, C.cop)));
    check_equal_maps(rep, "coring.cop_right_linear", "cop.ract = ract.(cop(x)A)",
                     compose(C.cop, C.carrier.ract), compose(C.W2_ract, kron(C.cop, idA)));

    // coassociativity through the iterated quotient
    LinearMap lift = compose(C.W2.sect, C.cop);  // C -> C (x) C
    LinearMap lhs = compose(C.W3.proj, compose(kron(C.cop, idC), lift));
    LinearMap tilde = compose(C.W2.sect, C.cop);
    LinearMap rhs = compose(C.W3.proj,
                            compose(kron(C.W2.proj, idC), compose(kron(idC, tilde), lift)));
    check_equal_maps(rep, "coring.coassoc", "(cop (x)_A C).cop = (C (x)_A cop).cop", lhs, rhs);

    // counitality
    check_equal_maps(rep, "coring.counit_left", "lact.(cou(x)C).cop = C",
                     compose(C.carrier.lact, compose(kron(C.cou, idC), lift)), idC);
    check_equal_maps(rep, "coring.counit_right", "ract.(C(x)cou).cop = C",
                     compose(C.carrier.ract, compose(kron(idC, C.cou), lift)), idC);
    return rep;
}

Coring sweedler_coring(const Algebra& A) {
    const Field& F = A.mul.F;
    LinearMap idA = identity_map(F, A.space);
    VectorSpace AA = tensor_space(A.space, A.space);
    Bimodule carrier{AA, LinearMap(F, tensor_space(A.space, AA), AA, kron(A.mul, idA).m),
                     LinearMap(F, tensor_space(AA, A.space), AA, kron(idA, A.mul).m)};
    // a (x) a' -> (a (x) 1) (x) (1 (x) a')
    LinearMap cop_amb = kron(std::vector<LinearMap>{idA, A.unit, A.unit, idA});
    cop_amb = LinearMap(F, AA, tensor_space(AA, AA), cop_amb.m);
    LinearMap cou(F, AA, A.space, A.mul.m);
    return make_coring(A, carrier, cop_amb, cou);
}

Coring trivial_coring(const Algebra& A) {
    const Field& F = A.mul.F;
    Bimodule carrier = regular_bimodule(A);
    LinearMap idA = identity_map(F, A.space);
    // a -> a (x) 1
    LinearMap cop_amb = kron(idA, A.unit);
    cop_amb = LinearMap(F, A.space, tensor_space(A.space, A.space), cop_amb.m);
    return make_coring(A, carrier, cop_amb, identity_map(F, A.space));
}

Report verify_grouplike(const Coring& C, const std::vector<Rat>& g, GrouplikeFlavor flavor) {
    Report rep;
    rep.object = "grouplike";
    const Field& F = C.A.mul.F;
    require(static_cast<int>(g.size()) == C.carrier.space.dim, "coring.shape",
            "candidate vector has wrong length");
    std::vector<Rat> lhs = apply_map(C.cop, g);
    // g (x) g in the quotient
    std::vector<Rat> gg(static_cast<size_t>(C.carrier.space.dim) * C.carrier.space.dim, Rat(0));
    for (int i = 0; i < C.carrier.space.dim; ++i)
        for (int j = 0; j < C.carrier.space.dim; ++j)
            gg[static_cast<size_t>(i) * C.carrier.space.dim + j] = F.mul(g[i], g[j]);
    std::vector<Rat> rhs = apply_map(C.W2.proj, gg);
    bool cop_ok = true;
    std::string wit;
    for (size_t i = 0; i < lhs.size(); ++i)
        if (F.sub(lhs[i], rhs[i]) != 0) {
            cop_ok = false;
            wit = "coordinate " + C.W2.repr.labels[i] + ": " + Field::to_string(lhs[i]) +
                  " != " + Field::to_string(rhs[i]);
            break;
        }
    check_flag(rep, "grouplike.cop", "cop(g) = g (x)_A g", cop_ok, wit);
    if (flavor == GrouplikeFlavor::grouplike) {
        std::vector<Rat> eg = apply_map(C.cou, g);
        std::vector<Rat> one = apply_map(C.A.unit, {Rat(1)});
        bool cou_ok = true;
        std::string cwit;
        for (size_t i = 0; i < eg.size(); ++i)
            if (F.sub(eg[i], one[i]) != 0) {
                cou_ok = false;
                cwit = "cou(g) has coordinate " + Field::to_string(eg[i]) + " != " +
                       Field::to_string(one[i]) + " at " + C.A.space.labels[i];
                break;
            }
        check_flag(rep, "grouplike.cou", "cou(g) = 1", cou_ok, cwit);
    }
    return rep;
}

CoringComodule make_coring_comodule_repr(const Coring& C, const RightModule& M,
                                         const LinearMap& coact, bool counital) {
    const Field& F = C.A.mul.F;
    CoringComodule out;
    out.module = M;
    out.counital = counital;
    out.MC = tensor_relations_quotient(F, M.space, C.carrier.space, M.act, C.carrier.lact);
    require(coact.src.dim == M.space.dim && coact.dst.dim == out.MC.repr.dim, "coring.shape",
            "coaction shape mismatch");
    out.coact = LinearMap(F, M.space, out.MC.repr, coact.m);
    out.MC_ract = induced_quotient_ract(F, out.MC, C.carrier.ract, M.space, C.A.space);
    return out;
}

CoringComodule make_coring_comodule(const Coring& C, const RightModule& M,
                                    const LinearMap& coact_ambient, bool counital) {
    const Field& F = C.A.mul.F;
    QuotientSpace MC =
        tensor_relations_quotient(F, M.space, C.carrier.space, M.act, C.carrier.lact);
    require(coact_ambient.src.dim == M.space.dim &&
                coact_ambient.dst.dim == M.space.dim * C.carrier.space.dim,
            "coring.shape", "ambient coaction shape mismatch");
    return make_coring_comodule_repr(C, M, compose(MC.proj, coact_ambient), counital);
}

Report check_coring_comodule(const Coring& C, const CoringComodule& M, const std::string& name) {
    Report rep;
    rep.object = name;
    const Field& F = C.A.mul.F;
    LinearMap idA = identity_map(F, C.A.space), idC = identity_map(F, C.carrier.space);
    LinearMap idM = identity_map(F, M.module.space);

    check_equal_maps(rep, "coringcomodule.linear", "coact.act = ract.(coact(x)A)",
                     compose(M.coact, M.module.act), compose(M.MC_ract, kron(M.coact, idA)));

    // (coact (x)_A C).coact = (M (x)_A cop).coact inside M (x)_A C (x)_A C
    QuotientSpace MCC =
        tensor_relations_quotient(F, M.MC.repr, C.carrier.space, M.MC_ract, C.carrier.lact);
    LinearMap lift = compose(M.MC.sect, M.coact);  // M -> M (x) C
    LinearMap lhs = compose(MCC.proj, compose(kron(M.coact, idC), lift));
    LinearMap tilde = compose(C.W2.sect, C.cop);   // C -> C (x) C
    LinearMap rhs =
        compose(MCC.proj, compose(kron(M.MC.proj, idC), compose(kron(idM, tilde), lift)));
    check_equal_maps(rep, "coringcomodule.coassoc", "(coact (x)_A C).coact = (M (x)_A cop).coact",
                     lhs, rhs);

    if (M.counital) {
        check_equal_maps(rep, "coringcomodule.counit", "act.(M(x)cou).coact = M",
                         compose(M.module.act, compose(kron(idM, C.cou), lift)), idM);
    }
    return rep;
}

CoringComodule comodule_from_grouplike(const Coring& C, const std::vector<Rat>& g) {
    const Field& F = C.A.mul.F;
    RightModule M{C.A.space, C.A.mul};
    LinearMap gmap = vec_as_map(F, C.carrier.space, g);
    LinearMap gact = compose(C.carrier.ract, kron(gmap, identity_map(F, C.A.space)));
    gact = LinearMap(F, C.A.space, C.carrier.space, gact.m);  // a -> g.a
    LinearMap amb = kron(C.A.unit, gact);                     // a -> 1 (x) g.a
    amb = LinearMap(F, C.A.space, tensor_space(C.A.space, C.carrier.space), amb.m);
    return make_coring_comodule(C, M, amb, true);
}

Report verify_coring_morphism(const Coring& C1, const Coring& C2, const LinearMap& f,
                              const std::string& name) {
    Report rep;
    rep.object = name;
    const Field& F = C1.A.mul.F;
    LinearMap idA = identity_map(F, C1.A.space);
    check_flag(rep, "coringmap.bijective", "f is invertible", inverse(f).has_value());
    check_equal_maps(rep, "coringmap.left_linear", "f.lact = lact.(A(x)f)",
                     compose(f, C1.carrier.lact), compose(C2.carrier.lact, kron(idA, f)));
    check_equal_maps(rep, "coringmap.right_linear", "f.ract = ract.(f(x)A)",
                     compose(f, C1.carrier.ract), compose(C2.carrier.ract, kron(f, idA)));
    check_equal_maps(rep, "coringmap.counit", "cou2.f = cou1", compose(C2.cou, f), C1.cou);
    // f (x)_A f on the stored quotients
    LinearMap ff = compose(C2.W2.proj, compose(kron(f, f), C1.W2.sect));
    bool welldef = equal(compose(ff, C1.W2.proj), compose(C2.W2.proj, kron(f, f)));
    check_flag(rep, "coringmap.tensor_welldefined", "f (x)_A f well defined", welldef);
    check_equal_maps(rep, "coringmap.cop", "cop2.f = (f (x)_A f).cop1", compose(C2.cop, f),
                     compose(ff, C1.cop));
    return rep;
}

}  // namespace coringlab
