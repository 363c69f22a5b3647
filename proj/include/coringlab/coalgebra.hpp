#pragma once

#include <optional>

#include "coringlab/algebra.hpp"

namespace coringlab {

struct Coalgebra {
    VectorSpace space;
    LinearMap comul;   // C -> C (x) C
    LinearMap counit;  // C -> k
};

struct RightComodule {
    VectorSpace space;
    LinearMap coact;  // M -> M (x) C
};

struct LeftComodule {
    VectorSpace space;
    LinearMap coact;  // M -> C (x) M
};

struct Bicomodule {
    VectorSpace space;
    LinearMap lcoact;  // M -> C (x) M
    LinearMap rcoact;  // M -> M (x) C
};

RightComodule right_copart(const Bicomodule& m);
LeftComodule left_copart(const Bicomodule& m);
/// C over itself with both coactions equal to the coproduct.
Bicomodule regular_bicomodule(const Coalgebra& C);
/// V (x) C with coaction V (x) comul (cofree).
RightComodule cofree_right_comodule(const Coalgebra& C, const VectorSpace& V);

Report check_coalgebra(const Coalgebra& C, const std::string& name);
Report check_right_comodule(const Coalgebra& C, const RightComodule& M, const std::string& name);
Report check_left_comodule(const Coalgebra& C, const LeftComodule& M, const std::string& name);
Report check_bicomodule(const Coalgebra& C, const Bicomodule& M, const std::string& name);
Report check_coalgebra_morphism(const Coalgebra& C, const Coalgebra& D, const LinearMap& f,
                                bool anti, const std::string& name);

/// M box_C N = ker(rho^M (x) N - M (x) rho^N) inside M (x) N, with both the
/// inclusion and a retraction stored. Induced coactions are attached when the
/// corresponding outer factor is a bicomodule, and verified on attachment.
struct CotensorSpace {
    VectorSpace mspace, nspace;
    SubSpace sub;
    std::optional<LinearMap> right_coact;  // repr -> repr (x) C
    std::optional<LinearMap> left_coact;   // repr -> C (x) repr
};

/// Kernel of the cotensor condition; rows generated from the coaction
/// matrices directly.
SubSpace cotensor_sub(const Field& F, const VectorSpace& mspace, const VectorSpace& nspace,
                      const LinearMap& rhoM, const LinearMap& lrhoN);

CotensorSpace cotensor(const Coalgebra& C, const RightComodule& M, const LeftComodule& N);
CotensorSpace cotensor(const Coalgebra& C, const RightComodule& M, const Bicomodule& N);
CotensorSpace cotensor(const Coalgebra& C, const Bicomodule& M, const LeftComodule& N);
CotensorSpace cotensor(const Coalgebra& C, const Bicomodule& M, const Bicomodule& N);

/// SubSpace of ambient (x) X from a SubSpace of ambient (tensoring on the right).
SubSpace tensor_sub_right(const SubSpace& s, const VectorSpace& x);
SubSpace tensor_sub_left(const VectorSpace& x, const SubSpace& s);

/// Restriction of f (x) g to cotensor subspaces; the containment of the image
/// in the target cotensor is verified and failure reported as an error.
LinearMap induce_map_cotensor(const LinearMap& f, const LinearMap& g, const CotensorSpace& src,
                              const CotensorSpace& dst);

struct Cointegral {
    LinearMap delta;  // C (x) C -> k
};

Report check_cointegral(const Coalgebra& C, const Cointegral& d, const std::string& name);
/// delta(e_i (x) e_j) = [i = j] on the grouplike coalgebra of dimension n.
Cointegral grouplike_cointegral(const Field& F, const VectorSpace& space);

struct CounitKernel {
    SubSpace sub;  // C+ inside C
};
CounitKernel counit_kernel(const Coalgebra& C);

}  // namespace coringlab
