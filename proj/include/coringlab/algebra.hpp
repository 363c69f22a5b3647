#pragma once

#include "coringlab/report.hpp"

namespace coringlab {

/// Finite-dimensional unital associative algebra given by structure maps.
struct Algebra {
    VectorSpace space;
    LinearMap mul;   // A (x) A -> A
    LinearMap unit;  // k -> A
};

struct RightModule {
    VectorSpace space;
    LinearMap act;  // M (x) A -> M
};

struct LeftModule {
    VectorSpace space;
    LinearMap act;  // A (x) M -> M
};

struct Bimodule {
    VectorSpace space;
    LinearMap lact;  // A (x) M -> M
    LinearMap ract;  // M (x) A -> M
};

RightModule right_part(const Bimodule& m);
LeftModule left_part(const Bimodule& m);
/// A as a bimodule over itself via multiplication.
Bimodule regular_bimodule(const Algebra& A);

Report check_algebra(const Algebra& A, const std::string& name);
Report check_right_module(const Algebra& A, const RightModule& M, const std::string& name);
Report check_left_module(const Algebra& A, const LeftModule& M, const std::string& name);
Report check_bimodule(const Algebra& A, const Bimodule& M, const std::string& name);

/// f multiplicative (or anti-multiplicative) and unital, as a map A -> B.
Report check_algebra_morphism(const Algebra& A, const Algebra& B, const LinearMap& f, bool anti,
                              const std::string& name);

/// M (x)_A N realised as an explicit quotient of M (x) N with stored section.
struct TensorOverA {
    VectorSpace mspace, nspace;
    QuotientSpace q;
};

/// Quotient of M (x) N by the span of m.a (x) n - m (x) a.n; relation columns
/// are generated directly from the action matrices, never materialised.
QuotientSpace tensor_relations_quotient(const Field& F, const VectorSpace& mspace,
                                        const VectorSpace& nspace, const LinearMap& actM,
                                        const LinearMap& actN);

TensorOverA tensor_over_A(const Algebra& A, const RightModule& M, const LeftModule& N);

/// Map induced on quotients by right-A-linear f and left-A-linear g;
/// linearity of the inputs is verified, not assumed.
LinearMap induce_map_over_A(const Algebra& A, const RightModule& M, const RightModule& M2,
                            const LeftModule& N, const LeftModule& N2, const LinearMap& f,
                            const LinearMap& g, const TensorOverA& src, const TensorOverA& dst);

/// Action on the untouched tensor leg of a quotient: the unique map with
/// out . (A (x) proj) = proj . (lact (x) X); the factorisation is verified.
LinearMap induced_quotient_lact(const Field& F, const QuotientSpace& q, const LinearMap& lact,
                                const VectorSpace& aspace, const VectorSpace& xspace);
LinearMap induced_quotient_ract(const Field& F, const QuotientSpace& q, const LinearMap& ract,
                                const VectorSpace& xspace, const VectorSpace& aspace);

inline void require(bool cond, const std::string& code, const std::string& msg) {
    if (!cond) throw Error(code, msg);
}

}  // namespace coringlab
