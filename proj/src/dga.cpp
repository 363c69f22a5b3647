#include "coringlab/dga.hpp"

#include <cmath>

namespace coringlab {

Mat mat_apply_kron(const Field& F, const Mat& y, const Mat& f, const Mat& g) {
    if (y.cols != f.rows * g.rows) throw Error("linalg.shape", "apply_kron shape mismatch");
    Mat out(y.rows, f.cols * g.cols);
    std::vector<SparseVec> frows(f.rows), grows(g.rows);
    for (int i = 0; i < f.rows; ++i) frows[i] = sparse_of_row(f, i);
    for (int i = 0; i < g.rows; ++i) grows[i] = sparse_of_row(g, i);
    for (int r = 0; r < y.rows; ++r)
        for (int i1 = 0; i1 < f.rows; ++i1)
            for (int i2 = 0; i2 < g.rows; ++i2) {
                const Rat& yv = y.at(r, i1 * g.rows + i2);
                if (Field::is_zero(yv)) continue;
                for (const auto& [j1, fv] : frows[i1]) {
                    Rat yf = F.mul(yv, fv);
                    for (const auto& [j2, gv] : grows[i2]) F.acc(out.at(r, j1 * g.cols + j2), yf, gv);
                }
            }
    return out;
}

const LinearMap& dga_product(const TruncatedDGA& dga, int p, int q) {
    auto it = dga.product.find({p, q});
    require(it != dga.product.end(), "dga.missing_product",
            "no product for degrees " + std::to_string(p) + "," + std::to_string(q));
    return it->second;
}

Bimodule omega_bimodule(const TruncatedDGA& dga, int n) {
    if (n == 0) return regular_bimodule(dga.A);
    return Bimodule{dga.omega[n], dga_product(dga, 0, n), dga_product(dga, n, 0)};
}

namespace {

VectorSpace power_space(const VectorSpace& v, int n) {
    if (n == 0) return unit_space();
    std::vector<VectorSpace> fs(n, v);
    return tensor_space(fs);
}

// fills omega[2..cap], stage quotients, flat/proj and every product map
void build_chain(TruncatedDGA& dga, const Bimodule& o1) {
    const Field& F = dga.A.mul.F;
    const int N = dga.cap;
    dga.omega.assign(N + 1, VectorSpace{});
    dga.omega[0] = dga.A.space;
    dga.omega[1] = o1.space;
    dga.stageq.assign(N + 1, QuotientSpace{});
    dga.flat.assign(N + 1, LinearMap{});
    dga.proj.assign(N + 1, LinearMap{});
    dga.has_stages = true;
    dga.flat[1] = identity_map(F, o1.space);
    dga.proj[1] = identity_map(F, o1.space);
    dga.product[{0, 0}] = dga.A.mul;
    dga.product[{0, 1}] = o1.lact;
    dga.product[{1, 0}] = o1.ract;
    LinearMap id1 = identity_map(F, o1.space);
    LinearMap idA = identity_map(F, dga.A.space);
    for (int n = 2; n <= N; ++n) {
        const LinearMap prev_lact = dga_product(dga, 0, n - 1);
        const LinearMap prev_ract = dga_product(dga, n - 1, 0);
        dga.stageq[n] =
            tensor_relations_quotient(F, o1.space, dga.omega[n - 1], o1.ract, prev_lact);
        dga.omega[n] = dga.stageq[n].repr;
        VectorSpace pw = power_space(o1.space, n);
        dga.flat[n] = LinearMap(F, dga.omega[n], pw,
                                mat_kron_apply(F, id1.m, dga.flat[n - 1].m, dga.stageq[n].sect.m));
        dga.proj[n] = LinearMap(F, pw, dga.omega[n],
                                mat_apply_kron(F, dga.stageq[n].proj.m, id1.m, dga.proj[n - 1].m));
        require(mat_equal(mat_mul(F, dga.proj[n].m, dga.flat[n].m), Mat::identity(dga.omega[n].dim)),
                "dga.chain", "stage projection is not a retraction of the flattening");
        {
            Mat amb = mat_apply_kron(F, dga.stageq[n].proj.m, o1.lact.m,
                                     Mat::identity(dga.omega[n - 1].dim));
            Mat out = mat_apply_kron(F, amb, idA.m, dga.stageq[n].sect.m);
            Mat back = mat_apply_kron(F, out, idA.m, dga.stageq[n].proj.m);
            require(mat_equal(back, amb), "dga.chain", "left action does not descend");
            dga.product[{0, n}] =
                LinearMap(F, tensor_space(dga.A.space, dga.omega[n]), dga.omega[n], std::move(out));
        }
        {
            Mat amb = mat_apply_kron(F, dga.stageq[n].proj.m, id1.m, prev_ract.m);
            Mat out = mat_apply_kron(F, amb, dga.stageq[n].sect.m, idA.m);
            Mat back = mat_apply_kron(F, out, dga.stageq[n].proj.m, idA.m);
            require(mat_equal(back, amb), "dga.chain", "right action does not descend");
            dga.product[{n, 0}] =
                LinearMap(F, tensor_space(dga.omega[n], dga.A.space), dga.omega[n], std::move(out));
        }
        // graded products: p = 1 is the stage projection itself, higher p by
        // peeling one omega1 leg at a time (proj[n] = product . (proj (x) proj)
        // then holds by construction)
        for (int p = 1; p < n; ++p) {
            int q = n - p;
            Mat prod;
            if (p == 1) {
                prod = dga.stageq[n].proj.m;
            } else {
                Mat t = mat_apply_kron(F, dga.stageq[n].proj.m, Mat::identity(o1.space.dim),
                                       dga.product[{p - 1, q}].m);
                prod = mat_apply_kron(F, t, dga.stageq[p].sect.m,
                                      Mat::identity(dga.omega[q].dim));
            }
            dga.product[{p, q}] =
                LinearMap(F, tensor_space(dga.omega[p], dga.omega[q]), dga.omega[n], std::move(prod));
        }
    }
}

}  // namespace

Report check_dga(const TruncatedDGA& dga, const std::string& name) {
    Report rep;
    rep.object = name;
    const Field& F = dga.A.mul.F;
    const int N = dga.cap;
    for (int n = 0; n + 2 <= N; ++n)
        check_zero_map(rep, "dga.d_squared_" + std::to_string(n),
                       "d.d = 0 on degree " + std::to_string(n),
                       compose(dga.diff[n + 1], dga.diff[n]));
    for (int p = 0; p < N; ++p)
        for (int q = 0; p + q < N; ++q) {
            const LinearMap& prod = dga_product(dga, p, q);
            LinearMap lhs = compose(dga.diff[p + q], prod);
            VectorSpace src = tensor_space(dga.omega[p], dga.omega[q]);
            LinearMap t1(F, src, dga.omega[p + q + 1],
                         mat_apply_kron(F, dga_product(dga, p + 1, q).m, dga.diff[p].m,
                                        Mat::identity(dga.omega[q].dim)));
            LinearMap t2(F, src, dga.omega[p + q + 1],
                         mat_apply_kron(F, dga_product(dga, p, q + 1).m,
                                        Mat::identity(dga.omega[p].dim), dga.diff[q].m));
            LinearMap rhs = (p % 2 == 0) ? add(t1, t2) : sub(t1, t2);
            check_equal_maps(rep, "dga.leibniz_" + std::to_string(p) + "_" + std::to_string(q),
                             "d(w.w') = d(w).w' + (-1)^p w.d(w') on degrees (" + std::to_string(p) +
                                 "," + std::to_string(q) + ")",
                             lhs, rhs);
        }
    for (int p = 0; p <= N; ++p)
        for (int q = 0; p + q <= N; ++q)
            for (int r = 0; p + q + r <= N; ++r) {
                VectorSpace src = tensor_space(
                    {dga.omega[p], dga.omega[q], dga.omega[r]});
                LinearMap lhs(F, src, dga.omega[p + q + r],
                              mat_apply_kron(F, dga_product(dga, p + q, r).m,
                                             dga_product(dga, p, q).m,
                                             Mat::identity(dga.omega[r].dim)));
                LinearMap rhs(F, src, dga.omega[p + q + r],
                              mat_apply_kron(F, dga_product(dga, p, q + r).m,
                                             Mat::identity(dga.omega[p].dim),
                                             dga_product(dga, q, r).m));
                check_equal_maps(rep,
                                 "dga.assoc_" + std::to_string(p) + "_" + std::to_string(q) + "_" +
                                     std::to_string(r),
                                 "product associativity on degrees (" + std::to_string(p) + "," +
                                     std::to_string(q) + "," + std::to_string(r) + ")",
                                 lhs, rhs);
            }
    for (int q = 0; q <= N; ++q) {
        LinearMap idq = identity_map(F, dga.omega[q]);
        check_equal_maps(rep, "dga.unit_left_" + std::to_string(q), "1.w = w",
                         compose(dga_product(dga, 0, q), kron(dga.A.unit, idq)), idq);
        check_equal_maps(rep, "dga.unit_right_" + std::to_string(q), "w.1 = w",
                         compose(dga_product(dga, q, 0), kron(idq, dga.A.unit)), idq);
    }
    return rep;
}

TruncatedDGA universal_envelope(const Algebra& A, int cap) {
    const Field& F = A.mul.F;
    require(cap >= 1, "dga.cap", "degree cap must be at least 1");
    TruncatedDGA dga;
    dga.A = A;
    dga.cap = cap;
    LinearMap idA = identity_map(F, A.space);
    SubSpace ker_mul = kernel(A.mul);
    LinearMap lact_amb = compose(kron(A.mul, idA), kron(idA, ker_mul.incl));
    auto lact = corestrict(
        LinearMap(F, tensor_space(A.space, ker_mul.repr), lact_amb.dst, lact_amb.m), ker_mul);
    require(lact.has_value(), "dga.envelope", "one-forms are not closed under the left action");
    LinearMap ract_amb = compose(kron(idA, A.mul), kron(ker_mul.incl, idA));
    auto ract = corestrict(
        LinearMap(F, tensor_space(ker_mul.repr, A.space), ract_amb.dst, ract_amb.m), ker_mul);
    require(ract.has_value(), "dga.envelope", "one-forms are not closed under the right action");
    Bimodule o1{ker_mul.repr, *lact, *ract};
    build_chain(dga, o1);

    int dA = A.space.dim;
    // e_n : omega[n] -> A^{(x)(n+1)}, contracting the inner legs of the pairs
    std::vector<LinearMap> e(cap + 1);
    e[1] = LinearMap(F, dga.omega[1], power_space(A.space, 2), ker_mul.incl.m);
    Mat incl_pow = ker_mul.incl.m;  // (n-1)-st power, grown at the end of the loop
    for (int n = 2; n <= cap; ++n) {
        Mat x = mat_kron_apply(F, incl_pow, ker_mul.incl.m, dga.flat[n].m);
        for (int k = 1; k < n; ++k) {
            int pre = 1, post = 1;
            for (int i = 0; i < k; ++i) pre *= dA;
            for (int i = 0; i < n - k - 1; ++i) post *= dA * dA;
            post *= dA;
            x = mat_apply_middle(F, pre, A.mul.m, post, x);
        }
        e[n] = LinearMap(F, dga.omega[n], power_space(A.space, n + 1), std::move(x));
        require(rank(e[n]) == dga.omega[n].dim, "dga.envelope",
                "iterated one-forms do not embed into the tensor power");
        if (n < cap) incl_pow = mat_kron(F, incl_pow, ker_mul.incl.m);
        std::vector<LinearMap> conds;
        for (int i = 0; i < n; ++i) {
            int pre = 1, post = 1;
            for (int j = 0; j < i; ++j) pre *= dA;
            for (int j = 0; j < n - 1 - i; ++j) post *= dA;
            Mat mi = mat_apply_middle(F, pre, A.mul.m, post, Mat::identity(e[n].dst.dim));
            conds.push_back(
                LinearMap(F, e[n].dst, VectorSpace::make("t", mi.rows / 1), std::move(mi)));
        }
        std::vector<const LinearMap*> cptrs;
        for (const auto& c : conds) cptrs.push_back(&c);
        SubSpace flats = kernel_of_stack(F, e[n].dst, cptrs);
        require(flats.repr.dim == dga.omega[n].dim, "dga.envelope",
                "embedded picture has unexpected dimension");
        require(corestrict(e[n], flats).has_value(), "dga.envelope",
                "embedding misses the flat subspace");
    }

    dga.diff.assign(cap, LinearMap{});
    auto insertion = [&](int legs) {  // sum of signed unit insertions A^{(x)legs} -> A^{(x)(legs+1)}
        int cols = 1;
        for (int i = 0; i < legs; ++i) cols *= dA;
        Mat id_legs = Mat::identity(cols);
        Mat acc(cols * dA, cols);
        for (int i = 0; i <= legs; ++i) {
            int pre = 1;
            for (int j = 0; j < i; ++j) pre *= dA;
            int post = cols / pre;
            Mat term = mat_apply_middle(F, pre, A.unit.m, post, id_legs);
            acc = (i % 2 == 0) ? mat_add(F, acc, term) : mat_sub(F, acc, term);
        }
        return acc;
    };
    {
        LinearMap d0map(F, A.space, power_space(A.space, 2), insertion(1));
        auto d0 = corestrict(d0map, ker_mul);
        require(d0.has_value(), "dga.envelope", "d(a) is not a one-form");
        dga.diff[0] = LinearMap(F, A.space, dga.omega[1], d0->m);
    }
    for (int n = 1; n < cap; ++n) {
        Mat value = mat_mul(F, insertion(n + 1), e[n].m);
        auto d = solve_map(
            e[n + 1], LinearMap(F, dga.omega[n], power_space(A.space, n + 2), std::move(value)));
        require(d.has_value(), "dga.envelope", "differential image escapes the next degree");
        dga.diff[n] = LinearMap(F, dga.omega[n], dga.omega[n + 1], d->m);
    }
    return dga;
}

namespace {

// staged projection of a carrier^{(x)m}-valued matrix onto W[m].repr
Mat project_stages(const Field& F, const std::vector<QuotientSpace>& W, int m, int dimC, Mat x) {
    if (m == 1) return x;
    int rest = 1;
    for (int i = 0; i < m - 2; ++i) rest *= dimC;
    for (int k = 2; k <= m; ++k) {
        x = mat_kron_apply(F, W[k].proj.m, Mat::identity(rest), x);
        rest = (k == m) ? 1 : rest / dimC;
    }
    return x;
}

}  // namespace

RoiterData roiter_dga(const Coring& C, const std::vector<Rat>& g, int cap,
                      GrouplikeFlavor flavor) {
    const Field& F = C.A.mul.F;
    require(cap >= 1, "dga.cap", "degree cap must be at least 1");
    Report gl = verify_grouplike(C, g, flavor);
    if (!gl.ok())
        throw Error("dga.not_grouplike",
                    "candidate fails the group-like equations:\n" + gl.text());

    RoiterData R;
    R.coring = C;
    R.g = g;
    R.flavor = flavor;
    R.dga.A = C.A;
    R.dga.cap = cap;
    const VectorSpace& Cs = C.carrier.space;
    LinearMap idA = identity_map(F, C.A.space);

    if (flavor == GrouplikeFlavor::grouplike) {
        R.omega1_sub = kernel(C.cou);
    } else {
        R.omega1_sub = SubSpace{Cs, Cs, identity_map(F, Cs), identity_map(F, Cs)};
    }
    const SubSpace& o1s = R.omega1_sub;
    LinearMap lact_amb = compose(C.carrier.lact, kron(idA, o1s.incl));
    auto lact = corestrict(lact_amb, o1s);
    require(lact.has_value(), "dga.roiter", "one-forms are not closed under the left action");
    LinearMap ract_amb = compose(C.carrier.ract, kron(o1s.incl, idA));
    auto ract = corestrict(ract_amb, o1s);
    require(ract.has_value(), "dga.roiter", "one-forms are not closed under the right action");
    Bimodule o1{o1s.repr, LinearMap(F, tensor_space(C.A.space, o1s.repr), o1s.repr, lact->m),
                LinearMap(F, tensor_space(o1s.repr, C.A.space), o1s.repr, ract->m)};
    build_chain(R.dga, o1);

    R.Wstage.assign(std::max(cap + 1, 4), QuotientSpace{});
    std::vector<LinearMap> Wract(std::max(cap + 1, 4));
    if (cap >= 2) {
        R.Wstage[2] = C.W2;
        Wract[2] = C.W2_ract;
    }
    if (cap >= 3) {
        R.Wstage[3] = C.W3;
        Wract[3] = induced_quotient_ract(F, C.W3, C.carrier.ract, C.W2.repr, C.A.space);
    }
    for (int m = 4; m <= cap; ++m) {
        R.Wstage[m] =
            tensor_relations_quotient(F, R.Wstage[m - 1].repr, Cs, Wract[m - 1], C.carrier.lact);
        Wract[m] = induced_quotient_ract(F, R.Wstage[m], C.carrier.ract,
                                         R.Wstage[m - 1].repr, C.A.space);
    }

    LinearMap gmap = vec_as_map(F, Cs, g);
    R.dga.diff.assign(cap, LinearMap{});
    {
        LinearMap left = compose(C.carrier.ract, kron(gmap, idA));   // a -> g.a
        LinearMap right = compose(C.carrier.lact, kron(idA, gmap));  // a -> a.g
        LinearMap d0_amb(F, C.A.space, Cs, mat_sub(F, left.m, right.m));
        auto d0 = corestrict(d0_amb, o1s);
        require(d0.has_value(), "dga.not_contained", "d(a) = ga - ag is not a one-form");
        R.dga.diff[0] = LinearMap(F, C.A.space, R.dga.omega[1], d0->m);
    }
    LinearMap cop_lift = compose(C.W2.sect, C.cop);  // representative C -> C (x) C
    for (int n = 1; n < cap; ++n) {
        int pw_o = 1, pw_c = 1;
        for (int i = 0; i < n; ++i) pw_o *= o1s.repr.dim, pw_c *= Cs.dim;
        Mat incl_pow = o1s.incl.m;
        for (int i = 1; i < n; ++i) incl_pow = mat_kron(F, incl_pow, o1s.incl.m);
        Mat raw(pw_c * Cs.dim, pw_o);
        raw = mat_add(F, raw, mat_kron_apply(F, gmap.m, Mat::identity(pw_c), incl_pow));
        {
            Mat t = mat_kron_apply(F, Mat::identity(pw_c), gmap.m, incl_pow);
            raw = (n % 2 == 0) ? mat_sub(F, raw, t) : mat_add(F, raw, t);
        }
        for (int i = 1; i <= n; ++i) {
            int pre = 1, post = 1;
            for (int j = 0; j < i - 1; ++j) pre *= Cs.dim;
            for (int j = 0; j < n - i; ++j) post *= Cs.dim;
            Mat t = mat_apply_middle(F, pre, cop_lift.m, post, incl_pow);
            raw = (i % 2 == 0) ? mat_add(F, raw, t) : mat_sub(F, raw, t);
        }
        Mat value_raw = project_stages(F, R.Wstage, n + 1, Cs.dim, std::move(raw));
        Mat round = mat_mul(F, R.dga.flat[n].m, R.dga.proj[n].m);
        require(mat_equal(mat_mul(F, value_raw, round), value_raw), "dga.not_welldefined",
                "differential formula does not descend to the tensor power over A");
        Mat value = mat_mul(F, value_raw, R.dga.flat[n].m);

        Mat x = mat_kron_apply(F, o1s.incl.m, incl_pow, R.dga.flat[n + 1].m);
        Mat ew = project_stages(F, R.Wstage, n + 1, Cs.dim, std::move(x));
        LinearMap emap(F, R.dga.omega[n + 1], R.Wstage[n + 1].repr, std::move(ew));
        require(rank(emap) == R.dga.omega[n + 1].dim, "dga.omega_not_embedded",
                "iterated one-forms do not embed into the tensor power of the carrier");
        auto d = solve_map(emap,
                           LinearMap(F, R.dga.omega[n], R.Wstage[n + 1].repr, std::move(value)));
        require(d.has_value(), "dga.not_contained",
                "differential image is not contained in the iterated one-forms");
        R.dga.diff[n] = LinearMap(F, R.dga.omega[n], R.dga.omega[n + 1], d->m);
    }
    return R;
}

CoringWithGrouplike coring_from_dga(const TruncatedDGA& dga) {
    require(dga.cap >= 2, "dga.cap", "building the coring needs the differential into degree 2");
    const Field& F = dga.A.mul.F;
    const Algebra& A = dga.A;
    int dA = A.space.dim, dW = dga.omega[1].dim, n = dA + dW;

    std::vector<std::string> labels;
    for (const auto& l : A.space.labels) labels.push_back(l + ".g");
    for (const auto& l : dga.omega[1].labels) labels.push_back(l);
    VectorSpace Cs = VectorSpace::named(labels);

    Mat embA(n, dA), embW(n, dW), projA(dA, n), projW(dW, n);
    for (int i = 0; i < dA; ++i) embA.at(i, i) = projA.at(i, i) = 1;
    for (int i = 0; i < dW; ++i) embW.at(dA + i, i) = projW.at(i, dA + i) = 1;
    LinearMap eA(F, A.space, Cs, embA), eW(F, dga.omega[1], Cs, embW);
    LinearMap pA(F, Cs, A.space, projA), pW(F, Cs, dga.omega[1], projW);

    LinearMap idA = identity_map(F, A.space);
    const LinearMap& lactW = dga_product(dga, 0, 1);
    const LinearMap& ractW = dga_product(dga, 1, 0);
    const LinearMap& d0 = dga.diff[0];
    const LinearMap& d1 = dga.diff[1];

    // a'.(a g + w) = (a'a) g + a'.w
    LinearMap lact = add(compose(eA, compose(A.mul, kron(idA, pA))),
                         compose(eW, compose(lactW, kron(idA, pW))));
    lact = LinearMap(F, tensor_space(A.space, Cs), Cs, lact.m);
    // (a g + w).a' = (a a') g + a.d(a') + w.a'
    LinearMap ract = add(add(compose(eA, compose(A.mul, kron(pA, idA))),
                             compose(eW, compose(lactW, compose(kron(idA, d0), kron(pA, idA))))),
                         compose(eW, compose(ractW, kron(pW, idA))));
    ract = LinearMap(F, tensor_space(Cs, A.space), Cs, ract.m);
    Bimodule carrier{Cs, lact, ract};

    LinearMap cou(F, Cs, A.space, pA.m);

    std::vector<Rat> one = apply_map(A.unit, {Rat(1)});
    std::vector<Rat> gvec(n, Rat(0));
    for (int i = 0; i < dA; ++i) gvec[i] = one[i];
    LinearMap gmap = vec_as_map(F, Cs, gvec);
    Mat cop_amb(n * n, n);
    {
        Mat agg = kron(eA, gmap).m;  // a -> (a g) (x) g
        for (int j = 0; j < dA; ++j)
            for (int r = 0; r < n * n; ++r) cop_amb.at(r, j) = agg.at(r, j);
        Mat gw = kron(gmap, eW).m;
        Mat wg = kron(eW, gmap).m;
        // lift d through omega1 (x) omega1; any lift works, the quotient by the
        // bimodule relations kills the ambiguity
        Mat dflat;
        if (dga.has_stages) {
            dflat = mat_mul(F, dga.flat[2].m, d1.m);
        } else {
            const LinearMap& p11 = dga_product(dga, 1, 1);
            auto lift = solve_map(p11, d1);
            require(lift.has_value(), "dga.bare",
                    "cannot lift the differential through the degree (1,1) product");
            dflat = lift->m;
        }
        Mat dembed = mat_kron_apply(F, eW.m, eW.m, dflat);
        for (int j = 0; j < dW; ++j)
            for (int r = 0; r < n * n; ++r)
                cop_amb.at(r, dA + j) = F.sub(F.add(gw.at(r, j), wg.at(r, j)), dembed.at(r, j));
    }
    LinearMap cop_map(F, Cs, tensor_space(Cs, Cs), std::move(cop_amb));

    return CoringWithGrouplike{make_coring(A, carrier, cop_map, cou), GroupLikeElement{gvec}};
}

ModuleConnection make_module_connection(const TruncatedDGA& dga, const RightModule& M,
                                        const LinearMap& nabla_repr) {
    const Field& F = dga.A.mul.F;
    ModuleConnection c;
    c.module = M;
    c.MO1 = tensor_relations_quotient(F, M.space, dga.omega[1], M.act, dga_product(dga, 0, 1));
    require(nabla_repr.src.dim == M.space.dim && nabla_repr.dst.dim == c.MO1.repr.dim, "dga.shape",
            "connection map shape mismatch");
    c.nabla = LinearMap(F, M.space, c.MO1.repr, nabla_repr.m);
    return c;
}

Report check_module_connection(const TruncatedDGA& dga, const ModuleConnection& c,
                               const std::string& name) {
    Report rep;
    rep.object = name;
    const Field& F = dga.A.mul.F;
    LinearMap idA = identity_map(F, dga.A.space), idM = identity_map(F, c.module.space);
    LinearMap ract1 =
        induced_quotient_ract(F, c.MO1, dga_product(dga, 1, 0), c.module.space, dga.A.space);
    LinearMap lhs = compose(c.nabla, c.module.act);
    LinearMap rhs =
        add(compose(ract1, kron(c.nabla, idA)), compose(c.MO1.proj, kron(idM, dga.diff[0])));
    check_equal_maps(rep, "connection.leibniz", "nabla(m.a) = nabla(m).a + m (x)_A d(a)", lhs, rhs);
    return rep;
}

CurvatureValue curvature(const TruncatedDGA& dga, const ModuleConnection& c) {
    const Field& F = dga.A.mul.F;
    require(dga.cap >= 2, "dga.cap", "curvature needs degree cap >= 2");
    LinearMap idM = identity_map(F, c.module.space);
    LinearMap id1 = identity_map(F, dga.omega[1]);
    CurvatureValue cv;
    cv.MO2 = tensor_relations_quotient(F, c.module.space, dga.omega[2], c.module.act,
                                       dga_product(dga, 0, 2));
    LinearMap rm =
        compose(cv.MO2.proj, compose(kron(idM, dga_product(dga, 1, 1)), kron(c.MO1.sect, id1)));
    LinearMap amb1 = compose(rm, kron(c.nabla, id1));
    LinearMap amb2 = compose(cv.MO2.proj, kron(idM, dga.diff[1]));
    LinearMap ambsum = add(amb1, amb2);
    LinearMap round = compose(c.MO1.sect, c.MO1.proj);
    LinearMap id_amb = identity_map(F, tensor_space(c.module.space, dga.omega[1]));
    require(is_zero(compose(ambsum, sub(id_amb, round))), "dga.connection_not_leibniz",
            "Leibniz extension of the connection is not well defined");
    LinearMap ext = compose(ambsum, c.MO1.sect);
    cv.F = compose(ext, c.nabla);
    cv.flat = is_zero(cv.F);
    return cv;
}

namespace {

LinearMap omega_into_carrier(const RoiterData& R, const CoringComodule& M,
                             const QuotientSpace& MO1) {
    const Field& F = R.coring.A.mul.F;
    LinearMap idM = identity_map(F, M.module.space);
    LinearMap amb = compose(M.MC.proj, kron(idM, R.omega1_sub.incl));
    LinearMap j = compose(amb, MO1.sect);
    require(equal(compose(j, MO1.proj), amb), "dga.not_welldefined",
            "one-form embedding does not descend");
    return j;
}

LinearMap grouplike_term(const RoiterData& R, const CoringComodule& M) {
    const Field& F = R.coring.A.mul.F;
    LinearMap gmap = vec_as_map(F, R.coring.carrier.space, R.g);
    LinearMap amb = kron(identity_map(F, M.module.space), gmap);  // M -> M (x) C
    return compose(M.MC.proj, LinearMap(F, M.module.space, amb.dst, amb.m));
}

}  // namespace

ModuleConnection connection_from_coaction(const RoiterData& R, const CoringComodule& M) {
    const Field& F = R.coring.A.mul.F;
    QuotientSpace MO1 = tensor_relations_quotient(F, M.module.space, R.dga.omega[1], M.module.act,
                                                  dga_product(R.dga, 0, 1));
    LinearMap j = omega_into_carrier(R, M, MO1);
    require(rank(j) == MO1.repr.dim, "dga.omega_not_embedded",
            "M (x)_A one-forms do not embed into M (x)_A C");
    LinearMap target = sub(M.coact, grouplike_term(R, M));
    auto nabla = solve_map(j, target);
    require(nabla.has_value(), "dga.connection_escape",
            "coact(m) - m (x) g does not land in M (x)_A one-forms");
    ModuleConnection c;
    c.module = M.module;
    c.MO1 = MO1;
    c.nabla = LinearMap(F, M.module.space, MO1.repr, nabla->m);
    return c;
}

CoringComodule coaction_from_connection(const RoiterData& R, const ModuleConnection& c) {
    const Field& F = R.coring.A.mul.F;
    Report leib = check_module_connection(R.dga, c, "input");
    if (!leib.ok())
        throw Error("dga.not_leibniz", "input map violates the Leibniz rule:\n" + leib.text());
    CurvatureValue cv = curvature(R.dga, c);
    if (!cv.flat) {
        auto w = first_nonzero(cv.F);
        throw Error("dga.curved", "connection has nonzero curvature; witness: " + witness_of(*w));
    }
    CoringComodule shell;
    shell.module = c.module;
    shell.MC = tensor_relations_quotient(F, c.module.space, R.coring.carrier.space, c.module.act,
                                         R.coring.carrier.lact);
    shell.MC_ract = induced_quotient_ract(F, shell.MC, R.coring.carrier.ract,
                                          c.module.space, R.coring.A.space);
    LinearMap j = omega_into_carrier(R, shell, c.MO1);
    LinearMap rho = add(compose(j, c.nabla), grouplike_term(R, shell));
    shell.coact = LinearMap(F, c.module.space, shell.MC.repr, rho.m);
    LinearMap idM = identity_map(F, c.module.space);
    LinearMap lift = compose(shell.MC.sect, shell.coact);
    LinearMap tri = compose(c.module.act, compose(kron(idM, R.coring.cou), lift));
    shell.counital = equal(tri, idM);
    return shell;
}

Report verify_dga_isomorphism(const TruncatedDGA& X, const TruncatedDGA& Y, const LinearMap& psi1,
                              const std::string& name) {
    Report rep;
    rep.object = name;
    const Field& F = X.A.mul.F;
    require(X.has_stages && Y.has_stages, "dga.bare", "comparison needs construction data");
    int N = std::min(X.cap, Y.cap);
    std::vector<LinearMap> psi(N + 1);
    psi[0] = identity_map(F, X.A.space);
    if (N >= 1) psi[1] = psi1;
    LinearMap pow = psi1;
    for (int n = 2; n <= N; ++n) {
        pow = kron(pow, psi1);
        psi[n] = LinearMap(F, X.omega[n], Y.omega[n],
                           mat_mul(F, mat_mul(F, Y.proj[n].m, pow.m), X.flat[n].m));
    }
    for (int n = 1; n <= N; ++n)
        check_flag(rep, "dgaiso.bijective_" + std::to_string(n),
                   "degree " + std::to_string(n) + " comparison map is invertible",
                   X.omega[n].dim == Y.omega[n].dim && inverse(psi[n]).has_value());
    for (int n = 0; n < N; ++n)
        check_equal_maps(rep, "dgaiso.d_" + std::to_string(n),
                         "psi.d = d.psi on degree " + std::to_string(n),
                         compose(psi[n + 1], X.diff[n]), compose(Y.diff[n], psi[n]));
    for (int p = 0; p <= N; ++p)
        for (int q = 0; p + q <= N; ++q)
            check_equal_maps(rep, "dgaiso.product_" + std::to_string(p) + "_" + std::to_string(q),
                             "psi(w.w') = psi(w).psi(w')",
                             compose(psi[p + q], dga_product(X, p, q)),
                             compose(dga_product(Y, p, q), kron(psi[p], psi[q])));
    return rep;
}

}  // namespace coringlab
