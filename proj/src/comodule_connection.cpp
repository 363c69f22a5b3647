#include "coringlab/comodule_connection.hpp"

namespace coringlab {

Coderivation make_coderivation(const Coalgebra& C, const Bicomodule& L, const LinearMap& lambda) {
    require(lambda.src.dim == L.space.dim && lambda.dst.dim == C.space.dim, "coderivation.shape",
            "coderivation map must go from L to C");
    Coderivation D;
    D.C = C;
    D.L = L;
    D.lambda = LinearMap(lambda.F, L.space, C.space, lambda.m);
    D.LL = cotensor(C, L, L);
    return D;
}

Coderivation make_extended_coderivation(const Coalgebra& C, const Bicomodule& L,
                                        const LinearMap& lambda, const LinearMap& lambda_prime) {
    Coderivation D = make_coderivation(C, L, lambda);
    require(lambda_prime.src.dim == D.LL.sub.repr.dim && lambda_prime.dst.dim == L.space.dim,
            "coderivation.shape", "extension must go from (L box L).repr to L");
    D.has_extension = true;
    D.lambda_prime = LinearMap(lambda.F, D.LL.sub.repr, L.space, lambda_prime.m);
    return D;
}

Report check_coderivation(const Coderivation& D, const std::string& name) {
    Report rep;
    rep.object = name;
    const Field& F = D.lambda.F;
    LinearMap idC = identity_map(F, D.C.space), idL = identity_map(F, D.L.space);
    check_equal_maps(rep, "coderivation.base",
                     "comul.lambda = (C(x)lambda).lcoact + (lambda(x)C).rcoact",
                     compose(D.C.comul, D.lambda),
                     add(compose(kron(idC, D.lambda), D.L.lcoact),
                         compose(kron(D.lambda, idC), D.L.rcoact)));
    check_zero_map(rep, "coderivation.counit", "counit.lambda = 0",
                   compose(D.C.counit, D.lambda));
    if (D.has_extension) {
        require(D.LL.left_coact.has_value() && D.LL.right_coact.has_value(), "coderivation.data",
                "cotensor coactions missing");
        check_equal_maps(rep, "coderivation.ext_left",
                         "lcoact.ext = (C(x)ext).(lcoact box L) + lambda box L",
                         compose(D.L.lcoact, D.lambda_prime),
                         add(compose(kron(idC, D.lambda_prime), *D.LL.left_coact),
                             compose(kron(D.lambda, idL), D.LL.sub.incl)));
        check_equal_maps(rep, "coderivation.ext_right",
                         "rcoact.ext = (ext(x)C).(L box rcoact) - L box lambda",
                         compose(D.L.rcoact, D.lambda_prime),
                         sub(compose(kron(D.lambda_prime, idC), *D.LL.right_coact),
                             compose(kron(idL, D.lambda), D.LL.sub.incl)));
        check_zero_map(rep, "coderivation.ext_chain", "lambda.ext = 0",
                       compose(D.lambda, D.lambda_prime));
    }
    return rep;
}

UniversalCoderivation universal_coderivation(const Coalgebra& C) {
    const Field& F = C.comul.F;
    UniversalCoderivation U;
    U.cplus = counit_kernel(C).sub;
    LinearMap idC = identity_map(F, C.space);
    LinearMap idP = identity_map(F, U.cplus.repr);
    VectorSpace Lspace = tensor_space(C.space, U.cplus.repr);

    LinearMap lcoact = kron(C.comul, idP);
    lcoact = LinearMap(F, Lspace, tensor_space(C.space, Lspace), lcoact.m);
    // right coaction: C (x) comul|_{C+} - comul (x) C+, middle leg lands in C+
    LinearMap x1 = kron(idC, compose(C.comul, U.cplus.incl));  // C(x)C+ -> C(x)C(x)C
    LinearMap x2 = kron(C.comul, U.cplus.incl);
    LinearMap v(F, Lspace, tensor_space(C.space, tensor_space(C.space, C.space)),
                mat_sub(F, x1.m, x2.m));
    SubSpace middle = tensor_sub_right(tensor_sub_left(C.space, U.cplus), C.space);
    auto rc = corestrict(v, middle);
    require(rc.has_value(), "coderivation.universal",
            "right coaction does not land in C (x) C+ (x) C");
    LinearMap rcoact(F, Lspace, tensor_space(Lspace, C.space), rc->m);
    Bicomodule L{Lspace, lcoact, rcoact};

    LinearMap lambda = kron(C.counit, U.cplus.incl);
    lambda = LinearMap(F, Lspace, C.space, lambda.m);

    Coderivation D = make_coderivation(C, L, lambda);

    // canonical identification C (x) C+ (x) C+ = L box L via the right coaction
    LinearMap phi_amb = kron(rcoact, idP);  // L (x) C+ -> (L (x) C) (x) C+ = L (x) L
    phi_amb = LinearMap(F, tensor_space(Lspace, U.cplus.repr), tensor_space(Lspace, Lspace),
                        phi_amb.m);
    auto phi = corestrict(phi_amb, D.LL.sub);
    require(phi.has_value(), "coderivation.universal", "identification misses the cotensor");
    U.phi = *phi;
    auto phi_inv = inverse(U.phi);
    require(phi_inv.has_value(), "coderivation.universal", "identification is not bijective");
    U.phi_inv = *phi_inv;

    // extension: c (x) c' (x) c'' -> counit(c) c' (x) c''
    LinearMap ext = kron(kron(C.counit, U.cplus.incl), idP);
    ext = LinearMap(F, tensor_space(Lspace, U.cplus.repr), Lspace, ext.m);
    D = make_extended_coderivation(C, L, lambda, compose(ext, U.phi_inv));
    U.D = D;

    // identification with coker(comul)
    U.cokd = cokernel(C.comul);
    LinearMap to_amb = kron(idC, U.cplus.incl);  // L -> C (x) C
    U.to_cokd = compose(U.cokd.proj, LinearMap(F, Lspace, tensor_space(C.space, C.space),
                                               to_amb.m));
    LinearMap killg = sub(identity_map(F, tensor_space(C.space, C.space)),
                          kron(C.comul, C.counit));  // c(x)d -> c(x)d - comul(c) counit(d)
    SubSpace right_plus = tensor_sub_left(C.space, U.cplus);
    auto fc = corestrict(compose(killg, U.cokd.sect), right_plus);
    require(fc.has_value(), "coderivation.universal", "inverse does not land in C (x) C+");
    U.from_cokd = LinearMap(F, U.cokd.repr, Lspace, fc->m);
    require(equal(compose(U.to_cokd, U.from_cokd), identity_map(F, U.cokd.repr)) &&
                equal(compose(U.from_cokd, U.to_cokd), identity_map(F, Lspace)),
            "coderivation.universal", "coker(comul) identification is not bijective");
    return U;
}

ComoduleConnection make_right_connection(const Coderivation& D, const RightComodule& M,
                                         const LinearMap& nabla_repr) {
    const Field& F = D.lambda.F;
    ComoduleConnection c;
    c.side = ComoduleConnection::Side::right;
    c.mspace = M.space;
    c.coact = M.coact;
    c.ML = cotensor(D.C, M, D.L);
    require(nabla_repr.src.dim == c.ML.sub.repr.dim && nabla_repr.dst.dim == M.space.dim,
            "connection.shape", "connection map shape mismatch");
    c.nabla = LinearMap(F, c.ML.sub.repr, M.space, nabla_repr.m);
    return c;
}

ComoduleConnection make_left_connection(const Coderivation& D, const LeftComodule& N,
                                        const LinearMap& nabla_repr) {
    const Field& F = D.lambda.F;
    ComoduleConnection c;
    c.side = ComoduleConnection::Side::left;
    c.mspace = N.space;
    c.coact = N.coact;
    c.ML = cotensor(D.C, D.L, N);
    require(nabla_repr.src.dim == c.ML.sub.repr.dim && nabla_repr.dst.dim == N.space.dim,
            "connection.shape", "connection map shape mismatch");
    c.nabla = LinearMap(F, c.ML.sub.repr, N.space, nabla_repr.m);
    return c;
}

Report check_connection(const Coderivation& D, const ComoduleConnection& c,
                        const std::string& name) {
    Report rep;
    rep.object = name;
    const Field& F = D.lambda.F;
    LinearMap idC = identity_map(F, D.C.space);
    LinearMap idM = identity_map(F, c.mspace);
    if (c.side == ComoduleConnection::Side::right) {
        require(c.ML.right_coact.has_value(), "connection.data", "induced coaction missing");
        check_equal_maps(rep, "connection.right",
                         "coact.nabla = (nabla(x)C).(M box rcoact) + M box lambda",
                         compose(c.coact, c.nabla),
                         add(compose(kron(c.nabla, idC), *c.ML.right_coact),
                             compose(kron(idM, D.lambda), c.ML.sub.incl)));
    } else {
        require(c.ML.left_coact.has_value(), "connection.data", "induced coaction missing");
        check_equal_maps(rep, "connection.left",
                         "coact.nabla = (C(x)nabla).(lcoact box N) + lambda box N",
                         compose(c.coact, c.nabla),
                         add(compose(kron(idC, c.nabla), *c.ML.left_coact),
                             compose(kron(D.lambda, idM), c.ML.sub.incl)));
    }
    return rep;
}

Report check_bicomodule_connection(const Coderivation& D, const BicomoduleConnection& bc,
                                   const std::string& name) {
    Report rep;
    rep.object = name;
    const Field& F = D.lambda.F;
    LinearMap idC = identity_map(F, D.C.space), idL = identity_map(F, D.L.space);
    require(D.LL.left_coact.has_value() && D.LL.right_coact.has_value(), "connection.data",
            "cotensor coactions missing");
    check_equal_maps(rep, "biconnection.right",
                     "rcoact.nabla_r = (nabla_r(x)C).(L box rcoact) + L box lambda",
                     compose(D.L.rcoact, bc.nabla_r),
                     add(compose(kron(bc.nabla_r, idC), *D.LL.right_coact),
                         compose(kron(idL, D.lambda), D.LL.sub.incl)));
    check_equal_maps(rep, "biconnection.right_left_colinear",
                     "lcoact.nabla_r = (C(x)nabla_r).(lcoact box L)",
                     compose(D.L.lcoact, bc.nabla_r),
                     compose(kron(idC, bc.nabla_r), *D.LL.left_coact));
    check_equal_maps(rep, "biconnection.left",
                     "lcoact.nabla_l = (C(x)nabla_l).(lcoact box L) + lambda box L",
                     compose(D.L.lcoact, bc.nabla_l),
                     add(compose(kron(idC, bc.nabla_l), *D.LL.left_coact),
                         compose(kron(D.lambda, idL), D.LL.sub.incl)));
    check_equal_maps(rep, "biconnection.left_right_colinear",
                     "rcoact.nabla_l = (nabla_l(x)C).(L box rcoact)",
                     compose(D.L.rcoact, bc.nabla_l),
                     compose(kron(bc.nabla_l, idC), *D.LL.right_coact));
    return rep;
}

LinearMap left_from_right(const Coderivation& D, const LinearMap& nabla_r) {
    require(D.has_extension, "connection.no_extension", "needs an extended coderivation");
    return add(D.lambda_prime, nabla_r);
}

LinearMap right_from_left(const Coderivation& D, const LinearMap& nabla_l) {
    require(D.has_extension, "connection.no_extension", "needs an extended coderivation");
    return sub(nabla_l, D.lambda_prime);
}

TorsionValue torsion(const Coderivation& D, const BicomoduleConnection& bc) {
    require(D.has_extension, "connection.no_extension", "torsion needs an extended coderivation");
    const Field& F = D.lambda.F;
    LinearMap idC = identity_map(F, D.C.space);
    TorsionValue tv;
    tv.T = sub(sub(bc.nabla_l, D.lambda_prime), bc.nabla_r);
    bool left_ok = equal(compose(D.L.lcoact, tv.T), compose(kron(idC, tv.T), *D.LL.left_coact));
    bool right_ok = equal(compose(D.L.rcoact, tv.T), compose(kron(tv.T, idC), *D.LL.right_coact));
    require(left_ok && right_ok, "connection.torsion_not_bicolinear",
            "torsion of the given pair is not a bicomodule map");
    tv.zero = is_zero(tv.T);
    return tv;
}

BicomoduleConnection coseparable_right_connection(const Coalgebra& C, const Cointegral& delta,
                                                  const UniversalCoderivation& U) {
    const Field& F = C.comul.F;
    Report dr = check_cointegral(C, delta, "delta");
    if (!dr.ok()) throw Error("connection.bad_cointegral", "cointegral fails:\n" + dr.text());
    LinearMap idC = identity_map(F, C.space);
    LinearMap embed = kron(std::vector<LinearMap>{idC, U.cplus.incl, U.cplus.incl});
    // (C (x) C (x) delta).(C (x) comul (x) C) - comul (x) delta, on C (x) C (x) C
    LinearMap t1 = compose(kron(std::vector<LinearMap>{idC, idC, delta.delta}),
                           kron(std::vector<LinearMap>{idC, C.comul, idC}));
    LinearMap t2 = kron(C.comul, delta.delta);
    VectorSpace C3 = tensor_space({C.space, C.space, C.space});
    LinearMap diff(F, C3, tensor_space(C.space, C.space), mat_sub(F, t1.m, t2.m));
    SubSpace right_plus = tensor_sub_left(C.space, U.cplus);
    auto co = corestrict(compose(diff, LinearMap(F, embed.src, C3, embed.m)), right_plus);
    require(co.has_value(), "connection.coseparable", "value does not land in C (x) C+");
    // domain: (L box L).repr via the canonical identification
    BicomoduleConnection bc;
    bc.nabla_r = compose(LinearMap(F, U.phi_inv.dst, U.D.L.space, co->m), U.phi_inv);
    bc.nabla_l = left_from_right(U.D, bc.nabla_r);
    return bc;
}

ComoduleConnection connection_from_retraction(const UniversalCoderivation& U,
                                              const RightComodule& M, const LinearMap& sigma) {
    const Field& F = U.D.lambda.F;
    const Coalgebra& C = U.D.C;
    LinearMap idM = identity_map(F, M.space), idC = identity_map(F, C.space);
    require(sigma.src.dim == M.space.dim * C.space.dim && sigma.dst.dim == M.space.dim,
            "connection.shape", "retraction has wrong shape");
    if (!equal(compose(sigma, M.coact), idM))
        throw Error("connection.bad_retraction", "sigma does not retract the coaction");
    if (!equal(compose(M.coact, sigma), compose(kron(sigma, idC), kron(idM, C.comul))))
        throw Error("connection.bad_retraction", "sigma is not right colinear");
    // nabla = sigma . (M box (counit (x) C+))
    LinearMap strip = kron(C.counit, U.cplus.incl);  // L -> C
    strip = LinearMap(F, U.D.L.space, C.space, strip.m);
    ComoduleConnection c;
    c.side = ComoduleConnection::Side::right;
    c.mspace = M.space;
    c.coact = M.coact;
    c.ML = cotensor(C, M, U.D.L);
    LinearMap nab = compose(sigma, compose(kron(idM, strip), c.ML.sub.incl));
    c.nabla = LinearMap(F, c.ML.sub.repr, M.space, nab.m);
    return c;
}

LinearMap retraction_from_connection(const UniversalCoderivation& U, const RightComodule& M,
                                     const ComoduleConnection& conn) {
    const Field& F = U.D.lambda.F;
    const Coalgebra& C = U.D.C;
    LinearMap idM = identity_map(F, M.space), idC = identity_map(F, C.space);
    // pi' : C (x) C -> L(C), c (x) d -> (C (x) retr+)(c (x) d - comul(c) counit(d))
    LinearMap killg = sub(identity_map(F, tensor_space(C.space, C.space)),
                          kron(C.comul, C.counit));
    LinearMap pi_prime = compose(kron(idC, U.cplus.retr), killg);
    pi_prime = LinearMap(F, tensor_space(C.space, C.space), U.D.L.space, pi_prime.m);
    LinearMap into = compose(kron(idM, pi_prime), kron(M.coact, idC));  // M (x) C -> M (x) L
    auto cor = corestrict(LinearMap(F, tensor_space(M.space, C.space),
                                    tensor_space(M.space, U.D.L.space), into.m),
                          conn.ML.sub);
    require(cor.has_value(), "connection.retraction",
            "projected lift does not land in M box L");
    LinearMap sigma = add(kron(idM, C.counit), compose(conn.nabla, *cor));
    return LinearMap(F, tensor_space(M.space, C.space), M.space, sigma.m);
}

std::optional<LinearMap> solve_colinear_retraction(const Coalgebra& C, const RightComodule& M) {
    const Field& F = C.comul.F;
    int dM = M.space.dim, dC = C.space.dim;
    LinearMap idC = identity_map(F, C.space);
    auto op = [&](const Mat& x) {
        // retraction residual: x . coact - id
        Mat r1 = mat_mul(F, x, M.coact.m);
        // colinearity residual: coact . x - (x (x) C).(M (x) comul)
        Mat r2 = mat_mul(F, M.coact.m, x);
        Mat rhs2 = mat_mul(F, mat_kron(F, x, idC.m),
                           mat_kron(F, Mat::identity(dM), C.comul.m));
        r2 = mat_sub(F, r2, rhs2);
        Mat out(static_cast<int>(r1.a.size() + r2.a.size()), 1);
        int k = 0;
        for (const auto& v : r1.a) out.at(k++, 0) = v;
        for (const auto& v : r2.a) out.at(k++, 0) = v;
        return out;
    };
    Mat rhs(dM * dM + dM * dC * (dM * dC), 1);
    {  // identity goes on the retraction block
        Mat id = Mat::identity(dM);
        int k = 0;
        for (const auto& v : id.a) rhs.at(k++, 0) = v;
    }
    AffineSolutions sols = solve_operator(F, dM, dM * dC, op, rhs);
    if (!sols.solvable) return std::nullopt;
    return LinearMap(F, tensor_space(M.space, C.space), M.space, sols.particular);
}

CurvatureCC curvature_cc(const Coderivation& D, const ComoduleConnection& conn) {
    require(D.has_extension, "connection.no_extension", "curvature needs an extended coderivation");
    const Field& F = D.lambda.F;
    CurvatureCC out;
    LinearMap idM = identity_map(F, conn.mspace);
    LinearMap idL = identity_map(F, D.L.space);
    if (conn.side == ComoduleConnection::Side::right) {
        require(conn.ML.right_coact.has_value(), "connection.data", "induced coaction missing");
        // T = (M box L) box L inside ML.repr (x) L
        out.MLL = cotensor_sub(F, conn.ML.sub.repr, D.L.space, *conn.ML.right_coact, D.L.lcoact);
        LinearMap t1 = compose(kron(conn.nabla, idL), out.MLL.incl);  // -> M (x) L
        // present in M (x) (L box L) and apply the extension
        Mat flat = mat_kron_apply(F, conn.ML.sub.incl.m, identity_map(F, D.L.space).m,
                                  out.MLL.incl.m);
        Mat to_ll = mat_kron_apply(F, Mat::identity(conn.mspace.dim), D.LL.sub.retr.m, flat);
        Mat back = mat_kron_apply(F, Mat::identity(conn.mspace.dim), D.LL.sub.incl.m, to_ll);
        require(mat_equal(back, flat), "connection.nabla_lambda",
                "triple cotensor does not sit inside M (x) (L box L)");
        LinearMap t2(F, out.MLL.repr, tensor_space(conn.mspace, D.L.space),
                     mat_kron_apply(F, Mat::identity(conn.mspace.dim), D.lambda_prime.m, to_ll));
        LinearMap amb = add(LinearMap(F, out.MLL.repr, t2.dst, t1.m), t2);
        auto cor = corestrict(amb, conn.ML.sub);
        require(cor.has_value(), "connection.nabla_lambda_escapes",
                "image of nabla_lambda is not contained in M box L (not a connection?)");
        out.nabla_lambda = *cor;
    } else {
        require(conn.ML.left_coact.has_value(), "connection.data", "induced coaction missing");
        // T = L box (L box N) inside L (x) LN.repr
        out.MLL = cotensor_sub(F, D.L.space, conn.ML.sub.repr, D.L.rcoact, *conn.ML.left_coact);
        LinearMap t2 = compose(kron(idL, conn.nabla), out.MLL.incl);  // L box nabla -> L (x) N
        Mat flat = mat_kron_apply(F, identity_map(F, D.L.space).m, conn.ML.sub.incl.m,
                                  out.MLL.incl.m);
        Mat to_ll2 = mat_kron_apply(F, D.LL.sub.retr.m, Mat::identity(conn.mspace.dim), flat);
        Mat back = mat_kron_apply(F, D.LL.sub.incl.m, Mat::identity(conn.mspace.dim), to_ll2);
        require(mat_equal(back, flat), "connection.nabla_lambda",
                "triple cotensor does not sit inside (L box L) (x) N");
        LinearMap t1(F, out.MLL.repr, tensor_space(D.L.space, conn.mspace),
                     mat_kron_apply(F, D.lambda_prime.m, Mat::identity(conn.mspace.dim), to_ll2));
        LinearMap amb = sub(t1, LinearMap(F, out.MLL.repr, t1.dst, t2.m));
        auto cor = corestrict(amb, conn.ML.sub);
        require(cor.has_value(), "connection.nabla_lambda_escapes",
                "image of nabla_lambda is not contained in L box N (not a connection?)");
        out.nabla_lambda = *cor;
    }
    out.F = compose(conn.nabla, out.nabla_lambda);
    out.flat = is_zero(out.F);
    return out;
}

}  // namespace coringlab
