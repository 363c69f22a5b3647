#include "coringlab/algebra.hpp"

#include <cstdio>

namespace coringlab {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 8);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string Report::text() const {
    std::ostringstream os;
    os << "object " << object << ": " << (ok() ? "PASS" : "FAIL") << "\n";
    for (const auto& c : checks) {
        os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.id << "  " << c.equation;
        if (!c.pass && !c.witness.empty()) os << "\n         witness: " << c.witness;
        os << "\n";
    }
    for (const auto& n : notes) os << "  note: " << n << "\n";
    return os.str();
}

std::string Report::json() const {
    std::ostringstream os;
    os << "{\"object\":\"" << json_escape(object) << "\",\"pass\":" << (ok() ? "true" : "false")
       << ",\"checks\":[";
    for (size_t i = 0; i < checks.size(); ++i) {
        const auto& c = checks[i];
        if (i) os << ",";
        os << "{\"id\":\"" << json_escape(c.id) << "\",\"equation\":\"" << json_escape(c.equation)
           << "\",\"pass\":" << (c.pass ? "true" : "false") << ",\"witness\":\""
           << json_escape(c.witness) << "\"}";
    }
    os << "],\"notes\":[";
    for (size_t i = 0; i < notes.size(); ++i) {
        if (i) os << ",";
        os << "\"" << json_escape(notes[i]) << "\"";
    }
    os << "]}";
    return os.str();
}

std::string witness_of(const Mismatch& mm) {
    std::ostringstream os;
    os << "basis " << (mm.src_label.empty() ? "#" + std::to_string(mm.col) : mm.src_label)
       << " -> coordinate " << (mm.dst_label.empty() ? "#" + std::to_string(mm.row) : mm.dst_label)
       << ": " << Field::to_string(mm.lhs) << " != " << Field::to_string(mm.rhs);
    return os.str();
}

void check_equal_maps(Report& rep, const std::string& id, const std::string& equation,
                      const LinearMap& lhs, const LinearMap& rhs) {
    auto mm = first_mismatch(lhs, rhs);
    rep.add(CheckResult{id, equation, !mm.has_value(), mm ? witness_of(*mm) : ""});
}

void check_zero_map(Report& rep, const std::string& id, const std::string& equation,
                    const LinearMap& f) {
    check_equal_maps(rep, id, equation, f, zero_map(f.F, f.src, f.dst));
}

void check_flag(Report& rep, const std::string& id, const std::string& equation, bool pass,
                const std::string& witness) {
    rep.add(CheckResult{id, equation, pass, pass ? "" : witness});
}

RightModule right_part(const Bimodule& m) { return RightModule{m.space, m.ract}; }
LeftModule left_part(const Bimodule& m) { return LeftModule{m.space, m.lact}; }

Bimodule regular_bimodule(const Algebra& A) { return Bimodule{A.space, A.mul, A.mul}; }

Report check_algebra(const Algebra& A, const std::string& name) {
    Report rep;
    rep.object = name;
    const Field& F = A.mul.F;
    LinearMap id = identity_map(F, A.space);
    check_equal_maps(rep, "algebra.assoc", "mul.(mul(x)A) = mul.(A(x)mul)",
                     compose(A.mul, kron(A.mul, id)), compose(A.mul, kron(id, A.mul)));
    check_equal_maps(rep, "algebra.unit_left", "mul.(unit(x)A) = A",
                     compose(A.mul, kron(A.unit, id)), id);
    check_equal_maps(rep, "algebra.unit_right", "mul.(A(x)unit) = A",
                     compose(A.mul, kron(id, A.unit)), id);
    return rep;
}

Report check_right_module(const Algebra& A, const RightModule& M, const std::string& name) {
    Report rep;
    rep.object = name;
    const Field& F = A.mul.F;
    LinearMap idM = identity_map(F, M.space), idA = identity_map(F, A.space);
    check_equal_maps(rep, "module.assoc", "act.(act(x)A) = act.(M(x)mul)",
                     compose(M.act, kron(M.act, idA)), compose(M.act, kron(idM, A.mul)));
    check_equal_maps(rep, "module.unit", "act.(M(x)unit) = M", compose(M.act, kron(idM, A.unit)),
                     idM);
    return rep;
}

Report check_left_module(const Algebra& A, const LeftModule& M, const std::string& name) {
    Report rep;
    rep.object = name;
    const Field& F = A.mul.F;
    LinearMap idM = identity_map(F, M.space), idA = identity_map(F, A.space);
    check_equal_maps(rep, "module.assoc", "act.(A(x)act) = act.(mul(x)M)",
                     compose(M.act, kron(idA, M.act)), compose(M.act, kron(A.mul, idM)));
    check_equal_maps(rep, "module.unit", "act.(unit(x)M) = M", compose(M.act, kron(A.unit, idM)),
                     idM);
    return rep;
}

Report check_bimodule(const Algebra& A, const Bimodule& M, const std::string& name) {
    Report rep;
    rep.object = name;
    const Field& F = A.mul.F;
    Report l = check_left_module(A, left_part(M), name);
    Report r = check_right_module(A, right_part(M), name);
    for (auto& c : l.checks) {
        c.id = "bimodule.left_" + c.id.substr(7);
        rep.add(c);
    }
    for (auto& c : r.checks) {
        c.id = "bimodule.right_" + c.id.substr(7);
        rep.add(c);
    }
    LinearMap idA = identity_map(F, A.space);
    check_equal_maps(rep, "bimodule.commute", "ract.(lact(x)A) = lact.(A(x)ract)",
                     compose(M.ract, kron(M.lact, idA)), compose(M.lact, kron(idA, M.ract)));
    return rep;
}

Report check_algebra_morphism(const Algebra& A, const Algebra& B, const LinearMap& f, bool anti,
                              const std::string& name) {
    Report rep;
    rep.object = name;
    const Field& F = f.F;
    if (!anti) {
        check_equal_maps(rep, "algmap.mult", "f.mul_A = mul_B.(f(x)f)", compose(f, A.mul),
                         compose(B.mul, kron(f, f)));
    } else {
        LinearMap flip = permute_factors(F, {A.space, A.space}, {1, 0});
        check_equal_maps(rep, "algmap.antimult", "f.mul_A = mul_B.(f(x)f).flip", compose(f, A.mul),
                         compose(compose(B.mul, kron(f, f)), flip));
    }
    check_equal_maps(rep, "algmap.unit", "f.unit_A = unit_B", compose(f, A.unit), B.unit);
    return rep;
}

QuotientSpace tensor_relations_quotient(const Field& F, const VectorSpace& mspace,
                                        const VectorSpace& nspace, const LinearMap& actM,
                                        const LinearMap& actN) {
    int dM = mspace.dim, dN = nspace.dim;
    int dA = dM > 0 ? actM.src.dim / dM : (dN > 0 ? actN.src.dim / dN : 0);
    require(dM == 0 || actM.src.dim == dM * dA, "algebra.shape", "right action shape");
    require(dN == 0 || actN.src.dim == dA * dN, "algebra.shape", "left action shape");
    VectorSpace ambient = tensor_space(mspace, nspace);
    RowSpace rs(F, ambient.dim);
    for (int m = 0; m < dM; ++m)
        for (int a = 0; a < dA; ++a)
            for (int n = 0; n < dN; ++n) {
                SparseVec v;
                for (int r = 0; r < dM; ++r) {
                    const Rat& x = actM.m.at(r, m * dA + a);
                    if (!Field::is_zero(x)) v.emplace_back(r * dN + n, x);
                }
                SparseVec w;
                for (int r = 0; r < dN; ++r) {
                    const Rat& x = actN.m.at(r, a * dN + n);
                    if (!Field::is_zero(x)) w.emplace_back(m * dN + r, x);
                }
                SparseVec rel;
                size_t i = 0, j = 0;
                while (i < v.size() || j < w.size()) {
                    if (j == w.size() || (i < v.size() && v[i].first < w[j].first))
                        rel.push_back(v[i++]);
                    else if (i == v.size() || w[j].first < v[i].first) {
                        rel.emplace_back(w[j].first, F.neg(w[j].second));
                        ++j;
                    } else {
                        Rat d = F.sub(v[i].second, w[j].second);
                        if (!Field::is_zero(d)) rel.emplace_back(v[i].first, d);
                        ++i, ++j;
                    }
                }
                rs.insert(std::move(rel));
            }
    return quotient_from_rowspace(F, ambient, rs);
}

TensorOverA tensor_over_A(const Algebra& A, const RightModule& M, const LeftModule& N) {
    require(M.act.F == N.act.F && M.act.F == A.mul.F, "algebra.field", "field mismatch");
    require(M.space.dim == 0 || M.act.src.dim == M.space.dim * A.space.dim, "algebra.mismatch",
            "left factor is not a module over this algebra");
    require(N.space.dim == 0 || N.act.src.dim == A.space.dim * N.space.dim, "algebra.mismatch",
            "right factor is not a module over this algebra");
    TensorOverA t;
    t.mspace = M.space;
    t.nspace = N.space;
    t.q = tensor_relations_quotient(A.mul.F, M.space, N.space, M.act, N.act);
    return t;
}

LinearMap induced_quotient_lact(const Field& F, const QuotientSpace& q, const LinearMap& lact,
                                const VectorSpace& aspace, const VectorSpace& xspace) {
    LinearMap idx = identity_map(F, xspace);
    LinearMap amb = compose(q.proj, kron(lact, idx));  // A (x) ambient -> repr
    LinearMap out = compose(amb, kron(identity_map(F, aspace), q.sect));
    require(equal(compose(out, kron(identity_map(F, aspace), q.proj)), amb), "algebra.descend",
            "left action does not descend to the quotient");
    return out;
}

LinearMap induced_quotient_ract(const Field& F, const QuotientSpace& q, const LinearMap& ract,
                                const VectorSpace& xspace, const VectorSpace& aspace) {
    LinearMap idx = identity_map(F, xspace);
    LinearMap amb = compose(q.proj, kron(idx, ract));  // ambient (x) A -> repr
    LinearMap out = compose(amb, kron(q.sect, identity_map(F, aspace)));
    require(equal(compose(out, kron(q.proj, identity_map(F, aspace))), amb), "algebra.descend",
            "right action does not descend to the quotient");
    return out;
}

LinearMap induce_map_over_A(const Algebra& A, const RightModule& M, const RightModule& M2,
                            const LeftModule& N, const LeftModule& N2, const LinearMap& f,
                            const LinearMap& g, const TensorOverA& src, const TensorOverA& dst) {
    const Field& F = f.F;
    LinearMap idA = identity_map(F, A.space);
    if (!equal(compose(f, M.act), compose(M2.act, kron(f, idA))))
        throw Error("algebra.not_right_linear",
                    "left factor map is not right A-linear (f.act != act'.(f(x)A))");
    if (!equal(compose(g, N.act), compose(N2.act, kron(idA, g))))
        throw Error("algebra.not_left_linear",
                    "right factor map is not left A-linear (g.act != act'.(A(x)g))");
    LinearMap fg = kron(f, g);
    LinearMap induced = compose(dst.q.proj, compose(fg, src.q.sect));
    if (!equal(compose(induced, src.q.proj), compose(dst.q.proj, fg)))
        throw Error("algebra.not_welldefined", "induced map depends on representatives");
    return induced;
}

}  // namespace coringlab
