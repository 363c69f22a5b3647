#pragma once

#include <map>

#include "coringlab/coring.hpp"

namespace coringlab {

/// Semi-free differential graded algebra truncated at degree `cap`.
/// omega[0] is the base algebra; degree n+1 is built as omega1 (x)_A omega[n]
/// (stageq[n+1] is that quotient, flat/proj convert between a stage and the
/// flattened tensor power of omega1). Document-loaded DGAs carry only the
/// graded data: spaces, products and differentials.
struct TruncatedDGA {
    Algebra A;
    int cap = 1;
    std::vector<VectorSpace> omega;                    // [0..cap]
    std::map<std::pair<int, int>, LinearMap> product;  // (p,q) with p+q <= cap
    std::vector<LinearMap> diff;                       // [n]: omega[n] -> omega[n+1], n < cap

    std::vector<QuotientSpace> stageq;  // [n] for 2 <= n <= cap
    std::vector<LinearMap> flat;        // [n]: omega[n] -> omega1^{(x)n}
    std::vector<LinearMap> proj;        // [n]: omega1^{(x)n} -> omega[n]
    bool has_stages = false;
};

const LinearMap& dga_product(const TruncatedDGA& dga, int p, int q);
/// omega[n] with its actions product(0,n) and product(n,0).
Bimodule omega_bimodule(const TruncatedDGA& dga, int n);

/// d.d = 0, graded Leibniz, product associativity and unitality, all on the
/// graded data under the cap.
Report check_dga(const TruncatedDGA& dga, const std::string& name);

/// Omega1 = ker(mul), d(a) = 1(x)a - a(x)1, higher differentials by
/// alternating unit insertion in the embedded picture inside A^{(x)(n+1)}.
TruncatedDGA universal_envelope(const Algebra& A, int cap);

/// A coring with a chosen (semi-)group-like element and the DGA built from it.
/// In the semi-group-like flavour omega1 is the whole carrier.
struct RoiterData {
    Coring coring;
    std::vector<Rat> g;
    GrouplikeFlavor flavor = GrouplikeFlavor::grouplike;
    TruncatedDGA dga;
    SubSpace omega1_sub;                // omega1 inside the carrier
    std::vector<QuotientSpace> Wstage;  // [m] for 2 <= m <= cap: C^{(x)_A m} stages
};

RoiterData roiter_dga(const Coring& C, const std::vector<Rat>& g, int cap,
                      GrouplikeFlavor flavor = GrouplikeFlavor::grouplike);

struct CoringWithGrouplike {
    Coring coring;
    GroupLikeElement g;
};

/// The coring A.g + Omega1 attached to a semi-free DGA; needs cap >= 2.
CoringWithGrouplike coring_from_dga(const TruncatedDGA& dga);

/// Connection in a right A-module with respect to a truncated DGA.
struct ModuleConnection {
    RightModule module;
    LinearMap nabla;    // M -> MO1.repr
    QuotientSpace MO1;  // (M (x) omega1)/relations
};

ModuleConnection make_module_connection(const TruncatedDGA& dga, const RightModule& M,
                                        const LinearMap& nabla_repr);
/// Degree-zero Leibniz rule on basis pairs M x A.
Report check_module_connection(const TruncatedDGA& dga, const ModuleConnection& c,
                               const std::string& name);

struct CurvatureValue {
    LinearMap F;  // M -> MO2.repr
    bool flat = false;
    QuotientSpace MO2;
};

/// F = (extension of nabla by the Leibniz rule) . nabla; needs cap >= 2.
CurvatureValue curvature(const TruncatedDGA& dga, const ModuleConnection& c);

/// m -> coact(m) - m (x)_A g. Counital comodules give connections into
/// M (x)_A ker(cou); in the semi-group-like flavour the target is M (x)_A C.
ModuleConnection connection_from_coaction(const RoiterData& R, const CoringComodule& M);
/// m -> nabla(m) + m (x)_A g; requires a flat connection.
CoringComodule coaction_from_connection(const RoiterData& R, const ModuleConnection& c);

/// Degreewise comparison induced by a degree-one map (identity on A):
/// bijectivity, compatibility with d and with all products under the cap.
Report verify_dga_isomorphism(const TruncatedDGA& X, const TruncatedDGA& Y, const LinearMap& psi1,
                              const std::string& name);

/// Y . kron(f, g) without materialising the Kronecker factor.
Mat mat_apply_kron(const Field& F, const Mat& y, const Mat& f, const Mat& g);

}  // namespace coringlab
