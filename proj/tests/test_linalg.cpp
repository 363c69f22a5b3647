#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coringlab/linalg.hpp"

using namespace coringlab;

namespace {

Mat random_mat(std::mt19937_64& rng, int rows, int cols) {
    std::uniform_int_distribution<int> d(-3, 3);
    Mat m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = d(rng);
    return m;
}

}  // namespace

TEST_CASE("field arithmetic") {
    Field Q = Field::rationals();
    CHECK(Q.parse_scalar("3/4") + Q.parse_scalar("1/4") == 1);
    CHECK(Q.parse_scalar("-2/6") == Rat(-1, 3));
    CHECK_THROWS_AS(Q.parse_scalar("1.5"), Error);
    CHECK_THROWS_AS(Q.parse_scalar("1/0"), Error);
    CHECK_THROWS_AS(Q.parse_scalar(""), Error);

    Field F7 = Field::prime(7);
    CHECK(F7.normalize(Rat(10)) == 3);
    CHECK(F7.parse_scalar("1/2") == 4);  // 2*4 = 8 = 1 mod 7
    CHECK(F7.inv(Rat(3)) == 5);
    CHECK_THROWS_AS(Field::prime(6), Error);
    CHECK_THROWS_AS(F7.parse_scalar("1/7"), Error);
}

TEST_CASE("kernel of a row vector") {
    Field Q = Field::rationals();
    VectorSpace k2 = VectorSpace::make("e", 2);
    LinearMap f(Q, k2, unit_space(), Mat::from_rows({{1, 1}}));
    SubSpace ker = kernel(f);
    CHECK(ker.repr.dim == 1);
    // basis proportional to (1,-1)
    CHECK(ker.incl.m.at(0, 0) == -ker.incl.m.at(1, 0));
    CHECK(is_zero(compose(f, ker.incl)));
    CHECK(equal(compose(ker.retr, ker.incl), identity_map(Q, ker.repr)));
}

TEST_CASE("kernel of the zero map is everything") {
    Field Q = Field::rationals();
    VectorSpace k3 = VectorSpace::make("e", 3);
    LinearMap f = zero_map(Q, k3, unit_space());
    SubSpace ker = kernel(f);
    CHECK(ker.repr.dim == 3);
    CHECK(mat_equal(ker.incl.m, Mat::identity(3)));
}

TEST_CASE("kernel of dual-number multiplication has dimension 2") {
    // A = k[x]/(x^2), basis {1, x}; mu : A (x) A -> A
    Field Q = Field::rationals();
    VectorSpace A = VectorSpace::named({"1", "x"});
    VectorSpace AA = tensor_space(A, A);
    // columns: 1*1, 1*x, x*1, x*x -> 1, x, x, 0
    LinearMap mu(Q, AA, A, Mat::from_rows({{1, 0, 0, 0}, {0, 1, 1, 0}}));
    CHECK(rank(mu) == 2);  // surjective: unital algebra
    CHECK(kernel(mu).repr.dim == 2);
}

TEST_CASE("cokernel cases") {
    Field Q = Field::rationals();
    VectorSpace k2 = VectorSpace::make("e", 2);
    CHECK(cokernel(identity_map(Q, k2)).repr.dim == 0);

    // grouplike coproduct on dim 2: e_i -> e_i (x) e_i, cokernel dim 4-2
    VectorSpace C = VectorSpace::named({"e1", "e2"});
    VectorSpace CC = tensor_space(C, C);
    LinearMap delta(Q, C, CC, Mat::from_rows({{1, 0}, {0, 0}, {0, 0}, {0, 1}}));
    QuotientSpace q = cokernel(delta);
    CHECK(q.repr.dim == 2);
    CHECK(equal(compose(q.proj, q.sect), identity_map(Q, q.repr)));
    CHECK(is_zero(compose(q.proj, delta)));

    // unit of dual numbers: cokernel is the line of x
    VectorSpace A = VectorSpace::named({"1", "x"});
    LinearMap unit(Q, unit_space(), A, Mat::from_rows({{1}, {0}}));
    CHECK(cokernel(unit).repr.dim == 1);
}

TEST_CASE("kron basics") {
    Field Q = Field::rationals();
    VectorSpace k2 = VectorSpace::make("e", 2);
    CHECK(mat_equal(kron(identity_map(Q, k2), identity_map(Q, k2)).m, Mat::identity(4)));
    LinearMap f(Q, k2, k2, Mat::from_rows({{1, 2}, {3, 4}}));
    CHECK(is_zero(kron(f, zero_map(Q, k2, k2))));

    // counit (x) counit of the grouplike coalgebra dim 2: all-ones row
    LinearMap eps(Q, k2, unit_space(), Mat::from_rows({{1, 1}}));
    LinearMap ee = kron(eps, eps);
    for (int c = 0; c < 4; ++c) CHECK(ee.m.at(0, c) == 1);
}

TEST_CASE("kron respects composition on random triples") {
    Field Q = Field::rationals();
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 10; ++trial) {
        VectorSpace u = VectorSpace::make("u", 2), v = VectorSpace::make("v", 3),
                    w = VectorSpace::make("w", 2);
        LinearMap f(Q, v, w, random_mat(rng, 2, 3)), fp(Q, u, v, random_mat(rng, 3, 2));
        LinearMap g(Q, w, u, random_mat(rng, 2, 2)), gp(Q, v, w, random_mat(rng, 2, 3));
        CHECK(equal(compose(kron(f, g), kron(fp, gp)), kron(compose(f, fp), compose(g, gp))));
    }
}

TEST_CASE("rank-nullity on random maps over Q and F_p") {
    for (Field F : {Field::rationals(), Field::prime(5)}) {
        std::mt19937_64 rng(99);
        for (int trial = 0; trial < 15; ++trial) {
            int rows = 1 + static_cast<int>(rng() % 5), cols = 1 + static_cast<int>(rng() % 5);
            Mat m = random_mat(rng, rows, cols);
            for (auto& x : m.a) x = F.normalize(x);
            LinearMap f(F, VectorSpace::make("s", cols), VectorSpace::make("d", rows), m);
            SubSpace ker = kernel(f);
            CHECK(rank(f) + ker.repr.dim == cols);
            CHECK(is_zero(compose(f, ker.incl)));
            CHECK(equal(compose(ker.retr, ker.incl), identity_map(F, ker.repr)));
            QuotientSpace q = cokernel(f);
            CHECK(q.repr.dim == rows - rank(f));
            CHECK(is_zero(compose(q.proj, f)));
        }
    }
}

TEST_CASE("solve") {
    Field Q = Field::rationals();
    VectorSpace k2 = VectorSpace::make("e", 2), k3 = VectorSpace::make("e", 3);
    LinearMap f(Q, k3, k2, Mat::from_rows({{1, 2, 0}, {0, 1, 1}}));
    auto x = solve(f, {Rat(0), Rat(0)});
    REQUIRE(x.has_value());
    for (const auto& v : *x) CHECK(v == 0);
    auto y = solve(f, {Rat(3), Rat(1)});
    REQUIRE(y.has_value());
    auto img = apply_map(f, *y);
    CHECK(img[0] == 3);
    CHECK(img[1] == 1);
    // inconsistent system
    LinearMap g(Q, k2, k2, Mat::from_rows({{1, 1}, {1, 1}}));
    CHECK_FALSE(solve(g, {Rat(1), Rat(0)}).has_value());
}

TEST_CASE("compose identity and shape errors") {
    Field Q = Field::rationals();
    VectorSpace k2 = VectorSpace::make("e", 2), k3 = VectorSpace::make("e", 3);
    LinearMap f(Q, k3, k2, Mat::from_rows({{1, 2, 0}, {0, 1, 1}}));
    CHECK(equal(compose(identity_map(Q, k2), f), f));
    CHECK_THROWS_AS(compose(f, f), Error);
}

TEST_CASE("permute factors") {
    Field Q = Field::rationals();
    VectorSpace u = VectorSpace::make("u", 2), v = VectorSpace::make("v", 3);
    LinearMap flip = permute_factors(Q, {u, v}, {1, 0});
    LinearMap flip_back = permute_factors(Q, {v, u}, {1, 0});
    CHECK(equal(compose(flip_back, flip), identity_map(Q, tensor_space(u, v))));
    std::mt19937_64 rng(7);
    LinearMap f(Q, u, u, random_mat(rng, 2, 2)), g(Q, v, v, random_mat(rng, 3, 3));
    CHECK(equal(compose(flip, kron(f, g)),
                compose(kron(g, f), permute_factors(Q, {u, v}, {1, 0}))));
}

TEST_CASE("kron_apply agrees with materialised kron") {
    Field Q = Field::rationals();
    std::mt19937_64 rng(31);
    Mat f = random_mat(rng, 3, 2), g = random_mat(rng, 2, 4), z = random_mat(rng, 8, 5);
    CHECK(mat_equal(mat_kron_apply(Q, f, g, z), mat_mul(Q, mat_kron(Q, f, g), z)));
}

TEST_CASE("determinism: bases identical across two runs") {
    Field Q = Field::rationals();
    std::mt19937_64 rng(555);
    Mat m = random_mat(rng, 4, 6);
    VectorSpace s = VectorSpace::make("s", 6), d = VectorSpace::make("d", 4);
    LinearMap f(Q, s, d, m);
    SubSpace k1 = kernel(f), k2 = kernel(f);
    CHECK(mat_equal(k1.incl.m, k2.incl.m));
    QuotientSpace q1 = cokernel(f), q2 = cokernel(f);
    CHECK(mat_equal(q1.proj.m, q2.proj.m));
    // row space canonical under permuted insertion order
    RowSpace a(Q, 6), b(Q, 6);
    for (int r = 0; r < 4; ++r) a.insert(sparse_of_row(m, r));
    for (int r = 3; r >= 0; --r) b.insert(sparse_of_row(m, r));
    CHECK(mat_equal(a.as_mat(), b.as_mat()));
}

TEST_CASE("corestrict and descend verify containment") {
    Field Q = Field::rationals();
    VectorSpace k2 = VectorSpace::make("e", 2);
    LinearMap f(Q, k2, unit_space(), Mat::from_rows({{1, 1}}));
    SubSpace ker = kernel(f);
    // the map x -> (x1 - x2, x2 - x1) lands in ker
    LinearMap g(Q, k2, k2, Mat::from_rows({{1, -1}, {-1, 1}}));
    CHECK(corestrict(g, ker).has_value());
    CHECK_FALSE(corestrict(identity_map(Q, k2), ker).has_value());
}

TEST_CASE("solve_operator finds affine solution sets") {
    // unknown 2x2 X with X = X^T (linear) and trace X = 2 encoded via rhs
    Field Q = Field::rationals();
    auto op = [&](const Mat& x) {
        Mat sym = mat_sub(Q, x, mat_transpose(x));  // 2x2
        Mat tr(1, 1);
        tr.at(0, 0) = Q.add(x.at(0, 0), x.at(1, 1));
        Mat out(5, 1);
        out.at(0, 0) = sym.at(0, 0);
        out.at(1, 0) = sym.at(0, 1);
        out.at(2, 0) = sym.at(1, 0);
        out.at(3, 0) = sym.at(1, 1);
        out.at(4, 0) = tr.at(0, 0);
        return out;
    };
    Mat rhs(5, 1);
    rhs.at(4, 0) = 2;
    auto sols = solve_operator(Q, 2, 2, op, rhs);
    REQUIRE(sols.solvable);
    CHECK(sols.particular.at(0, 1) == sols.particular.at(1, 0));
    CHECK(sols.particular.at(0, 0) + sols.particular.at(1, 1) == 2);
    CHECK(sols.basis.size() == 2);  // symmetric traceless + off-diagonal symmetric
}
