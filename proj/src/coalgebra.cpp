#include "coringlab/coalgebra.hpp"

namespace coringlab {

RightComodule right_copart(const Bicomodule& m) { return RightComodule{m.space, m.rcoact}; }
LeftComodule left_copart(const Bicomodule& m) { return LeftComodule{m.space, m.lcoact}; }

Bicomodule regular_bicomodule(const Coalgebra& C) {
    return Bicomodule{C.space, C.comul, C.comul};
}

RightComodule cofree_right_comodule(const Coalgebra& C, const VectorSpace& V) {
    const Field& F = C.comul.F;
    LinearMap co = kron(identity_map(F, V), C.comul);
    return RightComodule{tensor_space(V, C.space),
                         LinearMap(F, tensor_space(V, C.space),
                                   tensor_space(tensor_space(V, C.space), C.space), co.m)};
}

Report check_coalgebra(const Coalgebra& C, const std::string& name) {
    Report rep;
    rep.object = name;
    const Field& F = C.comul.F;
    LinearMap id = identity_map(F, C.space);
    check_equal_maps(rep, "coalgebra.coassoc", "(comul(x)C).comul = (C(x)comul).comul",
                     compose(kron(C.comul, id), C.comul), compose(kron(id, C.comul), C.comul));
    check_equal_maps(rep, "coalgebra.counit_left", "(counit(x)C).comul = C",
                     compose(kron(C.counit, id), C.comul), id);
    check_equal_maps(rep, "coalgebra.counit_right", "(C(x)counit).comul = C",
                     compose(kron(id, C.counit), C.comul), id);
    return rep;
}

Report check_right_comodule(const Coalgebra& C, const RightComodule& M, const std::string& name) {
    Report rep;
    rep.object = name;
    const Field& F = C.comul.F;
    LinearMap idM = identity_map(F, M.space), idC = identity_map(F, C.space);
    check_equal_maps(rep, "comodule.coassoc", "(coact(x)C).coact = (M(x)comul).coact",
                     compose(kron(M.coact, idC), M.coact), compose(kron(idM, C.comul), M.coact));
    check_equal_maps(rep, "comodule.counit", "(M(x)counit).coact = M",
                     compose(kron(idM, C.counit), M.coact), idM);
    return rep;
}

Report check_left_comodule(const Coalgebra& C, const LeftComodule& M, const std::string& name) {
    Report rep;
    rep.object = name;
    const Field& F = C.comul.F;
    LinearMap idM = identity_map(F, M.space), idC = identity_map(F, C.space);
    check_equal_maps(rep, "comodule.coassoc", "(C(x)coact).coact = (comul(x)M).coact",
                     compose(kron(idC, M.coact), M.coact), compose(kron(C.comul, idM), M.coact));
    check_equal_maps(rep, "comodule.counit", "(counit(x)M).coact = M",
                     compose(kron(C.counit, idM), M.coact), idM);
    return rep;
}

Report check_bicomodule(const Coalgebra& C, const Bicomodule& M, const std::string& name) {
    Report rep;
    rep.object = name;
    const Field& F = C.comul.F;
    Report l = check_left_comodule(C, left_copart(M), name);
    Report r = check_right_comodule(C, right_copart(M), name);
    for (auto& c : l.checks) {
        c.id = "bicomodule.left_" + c.id.substr(9);
        rep.add(c);
    }
    for (auto& c : r.checks) {
        c.id = "bicomodule.right_" + c.id.substr(9);
        rep.add(c);
    }
    LinearMap idM = identity_map(F, M.space), idC = identity_map(F, C.space);
    check_equal_maps(rep, "bicomodule.compat", "(lcoact(x)C).rcoact = (C(x)rcoact).lcoact",
                     compose(kron(M.lcoact, idC), M.rcoact), compose(kron(idC, M.rcoact), M.lcoact));
    return rep;
}

Report check_coalgebra_morphism(const Coalgebra& C, const Coalgebra& D, const LinearMap& f,
                                bool anti, const std::string& name) {
    Report rep;
    rep.object = name;
    const Field& F = f.F;
    if (!anti) {
        check_equal_maps(rep, "coalgmap.comult", "comul_D.f = (f(x)f).comul_C",
                         compose(D.comul, f), compose(kron(f, f), C.comul));
    } else {
        LinearMap flip = permute_factors(F, {D.space, D.space}, {1, 0});
        check_equal_maps(rep, "coalgmap.anticomult", "comul_D.f = flip.(f(x)f).comul_C",
                         compose(D.comul, f), compose(flip, compose(kron(f, f), C.comul)));
    }
    check_equal_maps(rep, "coalgmap.counit", "counit_D.f = counit_C", compose(D.counit, f),
                     C.counit);
    return rep;
}

SubSpace cotensor_sub(const Field& F, const VectorSpace& mspace, const VectorSpace& nspace,
                      const LinearMap& rhoM, const LinearMap& lrhoN) {
    int dM = mspace.dim, dN = nspace.dim;
    int dC = dM > 0 ? rhoM.dst.dim / dM : (dN > 0 ? lrhoN.dst.dim / dN : 0);
    require(dM == 0 || rhoM.dst.dim == dM * dC, "coalgebra.shape", "right coaction shape");
    require(dN == 0 || lrhoN.dst.dim == dC * dN, "coalgebra.shape", "left coaction shape");
    VectorSpace src = tensor_space(mspace, nspace);
    RowSpace rs(F, src.dim);
    // condition rows indexed by (m, c, n)
    for (int m = 0; m < dM; ++m)
        for (int c = 0; c < dC; ++c)
            for (int n = 0; n < dN; ++n) {
                SparseVec v;  // rho^M (x) N rows: columns (m', n)
                for (int mp = 0; mp < dM; ++mp) {
                    const Rat& x = rhoM.m.at(m * dC + c, mp);
                    if (!Field::is_zero(x)) v.emplace_back(mp * dN + n, x);
                }
                SparseVec w;  // M (x) lrho^N rows: columns (m, n')
                for (int np = 0; np < dN; ++np) {
                    const Rat& x = lrhoN.m.at(c * dN + n, np);
                    if (!Field::is_zero(x)) w.emplace_back(m * dN + np, x);
                }
                SparseVec row;
                size_t i = 0, j = 0;
                while (i < v.size() || j < w.size()) {
                    if (j == w.size() || (i < v.size() && v[i].first < w[j].first))
                        row.push_back(v[i++]);
                    else if (i == v.size() || w[j].first < v[i].first) {
                        row.emplace_back(w[j].first, F.neg(w[j].second));
                        ++j;
                    } else {
                        Rat d = F.sub(v[i].second, w[j].second);
                        if (!Field::is_zero(d)) row.emplace_back(v[i].first, d);
                        ++i, ++j;
                    }
                }
                rs.insert(std::move(row));
            }
    return kernel_from_rowspace(F, src, rs);
}

SubSpace tensor_sub_right(const SubSpace& s, const VectorSpace& x) {
    const Field& F = s.incl.F;
    LinearMap idx = identity_map(F, x);
    SubSpace out;
    out.ambient = tensor_space(s.ambient, x);
    out.repr = tensor_space(s.repr, x);
    out.incl = LinearMap(F, out.repr, out.ambient, kron(s.incl, idx).m);
    out.retr = LinearMap(F, out.ambient, out.repr, kron(s.retr, idx).m);
    return out;
}

SubSpace tensor_sub_left(const VectorSpace& x, const SubSpace& s) {
    const Field& F = s.incl.F;
    LinearMap idx = identity_map(F, x);
    SubSpace out;
    out.ambient = tensor_space(x, s.ambient);
    out.repr = tensor_space(x, s.repr);
    out.incl = LinearMap(F, out.repr, out.ambient, kron(idx, s.incl).m);
    out.retr = LinearMap(F, out.ambient, out.repr, kron(idx, s.retr).m);
    return out;
}

namespace {

CotensorSpace cotensor_impl(const Coalgebra& C, const VectorSpace& mspace, const LinearMap& rhoM,
                            const VectorSpace& nspace, const LinearMap& lrhoN,
                            const LinearMap* rhoN, const LinearMap* lrhoM) {
    const Field& F = C.comul.F;
    CotensorSpace t;
    t.mspace = mspace;
    t.nspace = nspace;
    t.sub = cotensor_sub(F, mspace, nspace, rhoM, lrhoN);
    if (rhoN) {
        LinearMap amb = compose(kron(identity_map(F, mspace), *rhoN), t.sub.incl);
        auto co = corestrict(amb, tensor_sub_right(t.sub, C.space));
        require(co.has_value(), "coalgebra.cotensor",
                "induced right coaction does not preserve the cotensor subspace");
        t.right_coact = *co;
    }
    if (lrhoM) {
        LinearMap amb = compose(kron(*lrhoM, identity_map(F, nspace)), t.sub.incl);
        auto co = corestrict(amb, tensor_sub_left(C.space, t.sub));
        require(co.has_value(), "coalgebra.cotensor",
                "induced left coaction does not preserve the cotensor subspace");
        t.left_coact = *co;
    }
    return t;
}

}  // namespace

CotensorSpace cotensor(const Coalgebra& C, const RightComodule& M, const LeftComodule& N) {
    return cotensor_impl(C, M.space, M.coact, N.space, N.coact, nullptr, nullptr);
}

CotensorSpace cotensor(const Coalgebra& C, const RightComodule& M, const Bicomodule& N) {
    return cotensor_impl(C, M.space, M.coact, N.space, N.lcoact, &N.rcoact, nullptr);
}

CotensorSpace cotensor(const Coalgebra& C, const Bicomodule& M, const LeftComodule& N) {
    return cotensor_impl(C, M.space, M.rcoact, N.space, N.coact, nullptr, &M.lcoact);
}

CotensorSpace cotensor(const Coalgebra& C, const Bicomodule& M, const Bicomodule& N) {
    return cotensor_impl(C, M.space, M.rcoact, N.space, N.lcoact, &N.rcoact, &M.lcoact);
}

LinearMap induce_map_cotensor(const LinearMap& f, const LinearMap& g, const CotensorSpace& src,
                              const CotensorSpace& dst) {
    LinearMap amb = compose(kron(f, g), src.sub.incl);
    auto co = corestrict(amb, dst.sub);
    if (!co)
        throw Error("coalgebra.not_colinear",
                    "image of f (x) g escapes the target cotensor (non-colinear input)");
    return *co;
}

Report check_cointegral(const Coalgebra& C, const Cointegral& d, const std::string& name) {
    Report rep;
    rep.object = name;
    const Field& F = C.comul.F;
    LinearMap idC = identity_map(F, C.space);
    check_equal_maps(rep, "cointegral.colinear", "(delta(x)C).(C(x)comul) = (C(x)delta).(comul(x)C)",
                     compose(kron(d.delta, idC), kron(idC, C.comul)),
                     compose(kron(idC, d.delta), kron(C.comul, idC)));
    check_equal_maps(rep, "cointegral.counit", "delta.comul = counit", compose(d.delta, C.comul),
                     C.counit);
    return rep;
}

Cointegral grouplike_cointegral(const Field& F, const VectorSpace& space) {
    int n = space.dim;
    Mat m(1, n * n);
    for (int i = 0; i < n; ++i) m.at(0, i * n + i) = 1;
    return Cointegral{LinearMap(F, tensor_space(space, space), unit_space(), std::move(m))};
}

CounitKernel counit_kernel(const Coalgebra& C) {
    require(!is_zero(C.counit) || C.space.dim == 0, "coalgebra.zero_counit",
            "counit is the zero map");
    return CounitKernel{kernel(C.counit)};
}

}  // namespace coringlab
