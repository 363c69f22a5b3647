#include "coringlab/catalog.hpp"

namespace coringlab::catalog {

namespace {

LinearMap map_of(const Field& F, const VectorSpace& src, const VectorSpace& dst,
                 const std::vector<std::vector<long>>& rows) {
    Mat m = Mat::from_rows(rows);
    for (auto& v : m.a) v = F.normalize(v);
    return LinearMap(F, src, dst, std::move(m));
}

}  // namespace

Algebra base_field_algebra(const Field& F) {
    VectorSpace k = VectorSpace::named({"1"});
    return Algebra{k, map_of(F, tensor_space(k, k), k, {{1}}),
                   map_of(F, unit_space(), k, {{1}})};
}

Algebra dual_numbers(const Field& F) {
    VectorSpace A = VectorSpace::named({"1", "x"});
    return Algebra{A, map_of(F, tensor_space(A, A), A, {{1, 0, 0, 0}, {0, 1, 1, 0}}),
                   map_of(F, unit_space(), A, {{1}, {0}})};
}

Algebra cyclic_group_algebra(const Field& F, int n) {
    require(n >= 1, "catalog.range", "cyclic group order must be positive");
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(i == 0 ? "1" : (i == 1 ? "g" : "g" + std::to_string(i)));
    VectorSpace A = VectorSpace::named(labels);
    Mat mul(n, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mul.at((i + j) % n, i * n + j) = 1;
    Mat unit(n, 1);
    unit.at(0, 0) = 1;
    return Algebra{A, LinearMap(F, tensor_space(A, A), A, std::move(mul)),
                   LinearMap(F, unit_space(), A, std::move(unit))};
}

HopfAlgebra hopf_cyclic(const Field& F, int n) {
    Algebra A = cyclic_group_algebra(F, n);
    Mat comul(n * n, n), counit(1, n), S(n, n);
    for (int i = 0; i < n; ++i) {
        comul.at(i * n + i, i) = 1;
        counit.at(0, i) = 1;
        S.at((n - i) % n, i) = 1;
    }
    Coalgebra C{A.space, LinearMap(F, A.space, tensor_space(A.space, A.space), std::move(comul)),
                LinearMap(F, A.space, unit_space(), std::move(counit))};
    LinearMap Smap(F, A.space, A.space, S);
    return HopfAlgebra{Bialgebra{A, C}, Smap, Smap};
}

HopfAlgebra hopf_sweedler_h4(const Field& F) {
    VectorSpace H = VectorSpace::named({"1", "g", "x", "gx"});
    // rows are coordinates of the product on basis pairs (row-major pairs)
    // relations: g^2 = 1, x^2 = 0, xg = -gx
    LinearMap mul = map_of(F, tensor_space(H, H), H,
                           {
                               // 1*{1,g,x,gx}, g*{...}, x*{...}, gx*{...}
                               {1, 0, 0, 0, /**/ 0, 1, 0, 0, /**/ 0, 0, 0, 0, /**/ 0, 0, 0, 0},
                               {0, 1, 0, 0, /**/ 1, 0, 0, 0, /**/ 0, 0, 0, 0, /**/ 0, 0, 0, 0},
                               {0, 0, 1, 0, /**/ 0, 0, 0, 1, /**/ 1, 0, 0, 0, /**/ 0, -1, 0, 0},
                               {0, 0, 0, 1, /**/ 0, 0, 1, 0, /**/ 0, -1, 0, 0, /**/ 1, 0, 0, 0},
                           });
    LinearMap unit = map_of(F, unit_space(), H, {{1}, {0}, {0}, {0}});
    // comul: 1 -> 1(x)1, g -> g(x)g, x -> x(x)1 + g(x)x, gx -> gx(x)g + 1(x)gx
    Mat cm(16, 4);
    auto put = [&](int col, int i, int j, long v) { cm.at(i * 4 + j, col) = F.normalize(Rat(v)); };
    put(0, 0, 0, 1);
    put(1, 1, 1, 1);
    put(2, 2, 0, 1);
    put(2, 1, 2, 1);
    put(3, 3, 1, 1);
    put(3, 0, 3, 1);
    LinearMap comul(F, H, tensor_space(H, H), std::move(cm));
    LinearMap counit = map_of(F, H, unit_space(), {{1, 1, 0, 0}});
    // S: 1->1, g->g, x->-gx, gx->x ; S_inv = S^3: x->gx, gx->-x
    LinearMap S = map_of(F, H, H,
                         {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}});
    LinearMap Sinv = map_of(F, H, H,
                            {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}});
    return HopfAlgebra{Bialgebra{Algebra{H, mul, unit}, Coalgebra{H, comul, counit}}, S, Sinv};
}

Coalgebra grouplike_coalgebra(const Field& F, int n) {
    VectorSpace C = VectorSpace::make("e", n);
    Mat comul(n * n, n), counit(1, n);
    for (int i = 0; i < n; ++i) {
        comul.at(i * n + i, i) = 1;
        counit.at(0, i) = 1;
    }
    return Coalgebra{C, LinearMap(F, C, tensor_space(C, C), std::move(comul)),
                     LinearMap(F, C, unit_space(), std::move(counit))};
}

Coalgebra path_coalgebra_one_arrow(const Field& F) {
    // vertices e1, e2 and one arrow a: comul(a) = e1 (x) a + a (x) e2
    VectorSpace C = VectorSpace::named({"e1", "e2", "a"});
    Mat comul(9, 3);
    comul.at(0 * 3 + 0, 0) = 1;
    comul.at(1 * 3 + 1, 1) = 1;
    comul.at(0 * 3 + 2, 2) = 1;
    comul.at(2 * 3 + 1, 2) = 1;
    Mat counit(1, 3);
    counit.at(0, 0) = 1;
    counit.at(0, 1) = 1;
    return Coalgebra{C, LinearMap(F, C, tensor_space(C, C), std::move(comul)),
                     LinearMap(F, C, unit_space(), std::move(counit))};
}

std::vector<Rat> algebra_one(const Algebra& A) { return apply_map(A.unit, {Rat(1)}); }

std::vector<Rat> one_tensor_one(const Algebra& A) {
    const Field& F = A.mul.F;
    std::vector<Rat> one = algebra_one(A);
    std::vector<Rat> g(one.size() * one.size(), Rat(0));
    for (size_t i = 0; i < one.size(); ++i)
        for (size_t j = 0; j < one.size(); ++j) g[i * one.size() + j] = F.mul(one[i], one[j]);
    return g;
}

}  // namespace coringlab::catalog
