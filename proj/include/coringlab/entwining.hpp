#pragma once

#include "coringlab/dga.hpp"

namespace coringlab {

struct Bialgebra {
    Algebra alg;
    Coalgebra coalg;  // on the same space
};

struct HopfAlgebra {
    Bialgebra b;
    LinearMap antipode;
    LinearMap antipode_inv;
};

Report check_bialgebra(const Bialgebra& H, const std::string& name);
Report check_hopf(const HopfAlgebra& H, const std::string& name);

/// Entwining structure (A, C, psi) with psi : C (x) A -> A (x) C.
struct Entwining {
    Algebra A;
    Coalgebra C;
    LinearMap psi;
};

/// The four compatibility identities, reported separately.
Report check_bowtie(const Entwining& E, const std::string& name);

/// The A-coring on A (x) C with right action through psi; throws if the
/// compatibility identities fail.
Coring coring_from_entwining(const Entwining& E);
/// 1 (x) e for a group-like element e of the coalgebra (verified).
std::vector<Rat> entwined_coring_grouplike(const Entwining& E, const std::vector<Rat>& e);

/// One space carrying a right action and a right coaction.
struct EntwinedModule {
    RightModule module;
    RightComodule comodule;
};

/// Compatibility pentagon, with the coring-comodule formulation cross-checked
/// against it. Pass a prebuilt coring to avoid reconstructing it per call.
Report check_entwined_module(const Entwining& E, const Coring& EC, const EntwinedModule& M,
                             const std::string& name);
Report check_entwined_module(const Entwining& E, const EntwinedModule& M, const std::string& name);

/// The comodule of coring_from_entwining(E) carried by an entwined module.
CoringComodule entwined_to_coring_comodule(const Entwining& E, const Coring& EC,
                                           const EntwinedModule& M);

/// psi(c (x) a) = a_2 (x) S^{-1}(a_1) c a_3 over A = C = H.
Entwining ayd_entwining(const HopfAlgebra& H);

/// Data for psi(c (x) a) = a_2 (x) beta(a_1).c.alpha(a_3): a bialgebra, an
/// A-bimodule coalgebra, a bialgebra map alpha and an anti-bialgebra map beta.
struct AlphaBetaDatum {
    Bialgebra A;
    Coalgebra C;
    Bimodule actions;  // A-bimodule structure on the space of C
    LinearMap alpha;
    LinearMap beta;
};

Report check_alpha_beta_datum(const AlphaBetaDatum& D, const std::string& name);
/// Throws when the datum fails its invariants.
Entwining alpha_beta_entwining(const AlphaBetaDatum& D);

}  // namespace coringlab
