#pragma once

#include "coringlab/coalgebra.hpp"

namespace coringlab {

/// A-coring: a comonoid in A-bimodules. The coproduct lands in the stored
/// quotient presentation of C (x)_A C; W3 is the iterated quotient used by
/// the coassociativity check.
struct Coring {
    Algebra A;
    Bimodule carrier;  // C
    LinearMap cop;     // C -> W2.repr
    LinearMap cou;     // C -> A
    QuotientSpace W2;  // (C (x) C) / middle relations
    LinearMap W2_lact, W2_ract;
    QuotientSpace W3;  // (W2.repr (x) C) / relations
};

/// Assembles the quotient data; cop_ambient is a representative C -> C (x) C.
Coring make_coring(const Algebra& A, const Bimodule& carrier, const LinearMap& cop_ambient,
                   const LinearMap& cou);
/// Same, but the coproduct is already expressed on the quotient.
Coring make_coring_repr(const Algebra& A, const Bimodule& carrier, const LinearMap& cop,
                        const LinearMap& cou);

Report check_coring(const Coring& C, const std::string& name);

/// The canonical coring on A (x) A with coproduct a(x)a' -> a(x)1(x)a' and
/// counit the multiplication.
Coring sweedler_coring(const Algebra& A);
/// A itself as an A-coring.
Coring trivial_coring(const Algebra& A);

enum class GrouplikeFlavor { grouplike, semi_grouplike };

struct GroupLikeElement {
    std::vector<Rat> g;
    GrouplikeFlavor flavor = GrouplikeFlavor::grouplike;
};

Report verify_grouplike(const Coring& C, const std::vector<Rat>& g, GrouplikeFlavor flavor);

/// Comodule of a coring: a right A-module with coaction into M (x)_A C.
struct CoringComodule {
    RightModule module;
    LinearMap coact;  // M -> MC.repr
    bool counital = true;
    QuotientSpace MC;   // (M (x) C) / relations
    LinearMap MC_ract;  // induced right action on MC.repr
};

CoringComodule make_coring_comodule(const Coring& C, const RightModule& M,
                                    const LinearMap& coact_ambient, bool counital = true);
CoringComodule make_coring_comodule_repr(const Coring& C, const RightModule& M,
                                         const LinearMap& coact, bool counital = true);

Report check_coring_comodule(const Coring& C, const CoringComodule& M, const std::string& name);

/// The coaction a -> 1 (x)_A g.a on M = A attached to a group-like element.
CoringComodule comodule_from_grouplike(const Coring& C, const std::vector<Rat>& g);

/// Verifies that f : C1 -> C2 (on carriers) is a bijective bimodule map
/// commuting with both structure maps.
Report verify_coring_morphism(const Coring& C1, const Coring& C2, const LinearMap& f,
                              const std::string& name);

}  // namespace coringlab
