#pragma once

#include "coringlab/comodule_connection.hpp"
#include "coringlab/entwining.hpp"

namespace coringlab {

/// Monoid in C-bicomodules: multiplication on the cotensor square and a
/// unit from C, both bicolinear.
struct CRing {
    Coalgebra C;
    Bicomodule carrier;  // script-A
    LinearMap mul;       // (A box A).repr -> A
    LinearMap unit;      // C -> A
    CotensorSpace AA;    // A box A with both induced coactions
    SubSpace AAA;        // (A box A) box A inside AA.repr (x) A
    LinearMap AAA_into_ALL;  // presentation (A box A box A).repr -> A (x) (A box A).repr
};

CRing make_cring(const Coalgebra& C, const Bicomodule& carrier, const LinearMap& mul_repr,
                 const LinearMap& unit);
/// Multiplication given on the ambient A (x) A (restricted through the
/// cotensor inclusion).
CRing make_cring_ambient(const Coalgebra& C, const Bicomodule& carrier,
                         const LinearMap& mul_ambient, const LinearMap& unit);

Report check_cring(const CRing& R, const std::string& name);

struct Character {
    LinearMap kappa;  // A -> k
};

Report check_character(const CRing& R, const Character& k, const std::string& name);

/// Right module of a C-ring: a right comodule with an action of A over the
/// cotensor product.
struct CRingModule {
    RightComodule comodule;
    LinearMap action;  // (M box A).repr -> M
    CotensorSpace MA;  // M box A
};

CRingModule make_cring_module(const CRing& R, const RightComodule& M, const LinearMap& action_repr);
CRingModule make_cring_module_ambient(const CRing& R, const RightComodule& M,
                                      const LinearMap& action_ambient);

Report check_cring_module(const CRing& R, const CRingModule& M, const std::string& name);

/// V (x) A with the free action through the multiplication.
CRingModule free_module(const CRing& R, const VectorSpace& V);
/// C as a module over A via a character.
CRingModule module_from_character(const CRing& R, const Character& k);

struct CRingWithCharacter {
    CRing ring;
    std::optional<Character> kappa;
};

/// C-ring C (x) A attached to an entwining structure; an algebra character
/// chi (verified) induces the character counit (x) chi.
CRingWithCharacter cring_from_entwining(const Entwining& E,
                                        const std::optional<LinearMap>& chi);
/// C (x) C with multiplication contracting the middle leg by the counit.
CRingWithCharacter cring_cc(const Coalgebra& C);

/// Entwined modules as modules of the attached C-ring.
CRingModule entwined_to_cring_module(const Entwining& E, const CRing& R, const EntwinedModule& M);

/// The chain complex of an augmented C-ring: Abar = coker(unit), the
/// alternating-sum differentials on its cotensor powers, and the extended
/// coderivation they carry.
struct CoderivationComplex {
    int cap = 2;
    QuotientSpace Abar;
    Bicomodule Abar_bi;
    LinearMap sigma;  // Abar.repr -> A, the left-colinear section
    std::vector<SubSpace> Sn;          // [n] for 2..cap: A^{box n} stage
    std::vector<LinearMap> Sn_rcoact;  // induced right coactions per stage
    std::vector<SubSpace> Tn;          // [n] for 2..cap: Abar^{box n} stage
    std::vector<LinearMap> Tn_rcoact;
    std::vector<LinearMap> pn;      // [n]: pi^{box n} : Sn.repr -> Tn.repr (surjective)
    std::vector<LinearMap> lambda;  // [n] for 1..cap: Abar^{box n} -> Abar^{box (n-1)}
    Coderivation D;                 // (Abar, lambda[1], lambda[2])
};

CoderivationComplex coderivation_complex(const CRing& R, const Character& k, int cap);

/// lambda.lambda = 0 at every composable degree, counit.lambda = 0, and the
/// full extended-coderivation axioms.
Report check_complex(const CoderivationComplex& X, const std::string& name);

/// Theorem-style conversions: the factorisation of action - M box kappa
/// through M box pi, and its inverse. The forward direction requires only
/// the linear module axioms; flatness then mirrors associativity.
ComoduleConnection connection_from_action(const CRing& R, const Character& k,
                                          const CoderivationComplex& X, const CRingModule& M);
CRingModule action_from_connection(const CRing& R, const Character& k,
                                   const CoderivationComplex& X, const ComoduleConnection& conn);

/// Affine solution set of the linear module axioms (colinearity and the unit
/// square) for a fixed comodule; associativity is quadratic and must be
/// tested on each sample.
struct ModuleCandidates {
    bool solvable = false;
    CotensorSpace MA;
    Mat particular;
    std::vector<Mat> basis;
};

ModuleCandidates solve_module_linear_system(const CRing& R, const RightComodule& M);

}  // namespace coringlab
