#pragma once

#include <optional>
#include <string>

#include "descent3/central_series.hpp"
#include "descent3/cohomology.hpp"
#include "descent3/extension.hpp"
#include "descent3/group.hpp"

namespace descent3 {

// Element of (H^1 tensor H^1) + H^1 with Z/q coefficients (the H^1 summand
// dropped when q = 2), as a formal sum of character pairs.
struct OmegaElement {
    GroupPtr group;
    int q = 0;
    struct TensorTerm {
        Cochain1 left, right;
        int coeff = 1;
    };
    std::vector<TensorTerm> tensor_part;
    Cochain1 h1_part;  // identically zero when q = 2

    bool has_simple_type() const;  // single pair (psi, psi'), h1 part = psi (q != 2)
    void canonicalize();           // sort pairs, merge duplicates, drop zeros
};

OmegaElement zero_omega(GroupPtr G, int q);
// psi tensor psi' for q = 2; (psi tensor psi', psi) otherwise
OmegaElement simple_omega(const Cochain1& psi, const Cochain1& psi2);
OmegaElement add(const OmegaElement& a, const OmegaElement& b);
OmegaElement negate(const OmegaElement& a);

// coordinates w.r.t. an H^1 basis: a dim x dim tensor matrix plus a vector
struct OmegaCoords {
    int dim = 0;
    std::vector<int> tensor;  // row-major dim x dim
    std::vector<int> h1;
};
OmegaCoords omega_coords(const OmegaElement& a, const H1Basis& chars);
bool omega_equal(const OmegaElement& a, const OmegaElement& b, const H1Basis& chars);

// Lambda(alpha) = cup(alpha_1) + bockstein(alpha_2) as an explicit cocycle
Cochain2 lambda_eval(const OmegaElement& a);

// kernel of psi (tensor) psi' in the sense of simple-type elements
Subgroup simple_kernel(const OmegaElement& a);

// -- Galois relation type ----------------------------------------------------

struct GrtReport {
    GroupPtr group;
    int q = 0;
    bool supported = true;
    std::string unsupported_reason;
    bool cond_i = false;
    bool cond_ii = false;
    bool cond_iii = false;
    std::optional<Cochain1> xi;                          // witness for (ii)
    std::optional<OmegaElement> failing_kernel_element;  // witness against (i)

    bool verdict() const { return supported && cond_i && cond_ii && cond_iii; }
};

GrtReport grt_check(GroupPtr G, int q);

// Explicit simple-type decomposition of alpha in ker(Lambda), given the
// witness xi of condition (ii): summands (psi_0 x xi, psi_0),
// (psi_i x (psi'_i + xi), psi_i), -(psi_i x xi, psi_i).
std::vector<OmegaElement> decompose_kernel_element(const OmegaElement& alpha, const Cochain1& xi);

// -- distinguished subgroups --------------------------------------------------

struct DistinguishedSubgroup {
    Subgroup subgroup;
    std::string quotient_name;
};

// normal N whose quotient lies in {1, Z/p, (Z/p)^2, Z/p^2, M_p3} (p odd) or
// {1, Z/2, (Z/2)^2, Z/4, D4} (p = 2)
std::vector<DistinguishedSubgroup> distinguished_by_quotient(GroupPtr G, int p);
// the definitional route through (M, alpha-bar, phi) data
std::vector<Subgroup> distinguished_by_definition(GroupPtr G, int p);

Subgroup delta_subgroup(GroupPtr G, int p);

enum class QuotientList { OddFull, OddReduced, EvenFull, EvenReduced, EvenShort };
Subgroup reduced_list_intersection(GroupPtr G, int p, QuotientList list);
// intersection of kernels over an explicit list of quotient type names
Subgroup list_intersection(GroupPtr G, int p, const std::vector<std::string>& quotient_names);
std::vector<std::string> quotient_list_names(QuotientList list, int p);

// maximal p-group quotient (stable term of the descending p-central series)
Quotient maximal_p_quotient(GroupPtr G, int p);

struct MainTheoremReport {
    GroupPtr group;
    int p = 0;
    Subgroup g2, g3, delta;
    std::vector<DistinguishedSubgroup> distinguished;
    GrtReport grt;
    bool sandwich = false;        // G^(3) <= Delta <= G^(2)
    bool equality = false;        // G^(3) == Delta
    // pass: equality whenever grt holds; fail-expected: grt fails and the
    // intersection is strictly larger; fail: grt holds but equality fails
    std::string verdict;
};

MainTheoremReport verify_main_theorem(GroupPtr G, int p);

// -- embedding problems --------------------------------------------------------

struct EmbeddingReport {
    std::vector<GroupHom> solutions;        // Phi: G -> B over the projection
    std::vector<SubgroupChar> trg_fiber;    // {phi in H^1(M)^G : trg(phi) = [w]}
    std::size_t distinct_restrictions = 0;
    long long inflation_count = 0;          // |Hom(G/M, Z/q)|
    bool correspondence = false;
};

// w must be based on quotient(G, M).group
EmbeddingReport embedding_solutions(GroupPtr G, const Subgroup& M, const Quotient& G_mod_M,
                                    const CentralExtension& w);

struct LiftRoute {
    std::string via;  // "Z/p^2", "lambda''", "theta'", "theta''"
    GroupHom witness;
};
struct LiftReport {
    bool preconditions_ok = false;
    std::string precondition_note;
    std::vector<Cochain1> epimorphisms;
    std::vector<LiftRoute> routes;  // aligned with epimorphisms
    bool all_factor = false;
};

LiftReport epi_lifting_check(GroupPtr G, int p);

struct WGroupReport {
    GroupPtr wgroup;
    bool grt = false;
    bool wg_nonabelian = false;
    bool has_modular_quotient = false;      // M_p3 (p odd) / D4 (p = 2)
    bool order_p_inside_second = false;     // p odd, or recorded failure at p=2
    std::vector<Elem> order_p_outside;      // witnesses, if any
    bool has_zp_direct_factor = false;
    // automatic-realization implication: H_p3 (resp. Q8) quotient of G forces
    // M_p3 (resp. D4) quotient of G
    bool realization_premise = false;
    bool realization_conclusion = false;
};

WGroupReport wgroup_properties(GroupPtr G, int p);

}  // namespace descent3
