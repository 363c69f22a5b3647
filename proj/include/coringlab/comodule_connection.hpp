#pragma once

#include "coringlab/coalgebra.hpp"

namespace coringlab {

/// A bicomodule L with a coderivation L -> C, optionally extended by a
/// degree-two map (L box L).repr -> L. The extension is bundled here so that
/// curvature can never be requested from an unextended coderivation.
struct Coderivation {
    Coalgebra C;
    Bicomodule L;
    LinearMap lambda;  // L -> C
    CotensorSpace LL;  // L box L with both induced coactions
    bool has_extension = false;
    LinearMap lambda_prime;  // (L box L).repr -> L
};

Coderivation make_coderivation(const Coalgebra& C, const Bicomodule& L, const LinearMap& lambda);
Coderivation make_extended_coderivation(const Coalgebra& C, const Bicomodule& L,
                                        const LinearMap& lambda, const LinearMap& lambda_prime);

Report check_coderivation(const Coderivation& D, const std::string& name);

/// The coderivation c (x) d -> counit(c) d on L(C) = C (x) C+, with its
/// canonical extension, plus the verified identification with coker(comul).
struct UniversalCoderivation {
    Coderivation D;
    SubSpace cplus;        // C+ = ker counit
    LinearMap phi;         // C (x) C+ (x) C+ -> (L box L).repr, bijective
    LinearMap phi_inv;
    QuotientSpace cokd;    // coker(comul)
    LinearMap to_cokd;     // L -> cokd.repr
    LinearMap from_cokd;   // cokd.repr -> L (mutually inverse, verified)
};

UniversalCoderivation universal_coderivation(const Coalgebra& C);

/// Connection in a one-sided comodule with respect to (L, lambda).
struct ComoduleConnection {
    enum class Side { right, left };
    Side side = Side::right;
    VectorSpace mspace;
    LinearMap coact;   // right: M -> M (x) C, left: N -> C (x) N
    LinearMap nabla;   // right: (M box L).repr -> M, left: (L box N).repr -> N
    CotensorSpace ML;  // M box L, resp. L box N
};

ComoduleConnection make_right_connection(const Coderivation& D, const RightComodule& M,
                                         const LinearMap& nabla_repr);
ComoduleConnection make_left_connection(const Coderivation& D, const LeftComodule& N,
                                        const LinearMap& nabla_repr);

Report check_connection(const Coderivation& D, const ComoduleConnection& c,
                        const std::string& name);

/// Pair of one-sided connections on L itself, each colinear on the other side.
struct BicomoduleConnection {
    LinearMap nabla_l, nabla_r;  // (L box L).repr -> L
};

Report check_bicomodule_connection(const Coderivation& D, const BicomoduleConnection& bc,
                                   const std::string& name);

/// nabla_l = lambda' + nabla_r; inverse direction subtracts the extension.
LinearMap left_from_right(const Coderivation& D, const LinearMap& nabla_r);
LinearMap right_from_left(const Coderivation& D, const LinearMap& nabla_l);

struct TorsionValue {
    LinearMap T;  // (L box L).repr -> L
    bool zero = false;
};

/// T = nabla_l - lambda' - nabla_r; bicolinearity of T is verified.
TorsionValue torsion(const Coderivation& D, const BicomoduleConnection& bc);

/// The cointegral-driven connection pair on L(C) for a coseparable coalgebra.
BicomoduleConnection coseparable_right_connection(const Coalgebra& C, const Cointegral& delta,
                                                  const UniversalCoderivation& U);

/// Forward: a colinear retraction of the coaction gives a connection w.r.t.
/// the universal coderivation. Backward: a connection gives a retraction.
ComoduleConnection connection_from_retraction(const UniversalCoderivation& U,
                                              const RightComodule& M, const LinearMap& sigma);
LinearMap retraction_from_connection(const UniversalCoderivation& U, const RightComodule& M,
                                     const ComoduleConnection& conn);

/// Exact solve of the linear system for a colinear retraction of the
/// coaction; empty solution set means the comodule is not injective.
std::optional<LinearMap> solve_colinear_retraction(const Coalgebra& C, const RightComodule& M);

struct CurvatureCC {
    LinearMap F;  // (M box L box L).repr -> M
    bool flat = false;
    SubSpace MLL;
    LinearMap nabla_lambda;  // (M box L box L).repr -> (M box L).repr, corestricted
};

/// nabla_lambda = nabla box L + M box lambda' (right side), with the image
/// containment in M box L verified before corestricting; F = nabla . nabla_lambda.
CurvatureCC curvature_cc(const Coderivation& D, const ComoduleConnection& conn);

}  // namespace coringlab
