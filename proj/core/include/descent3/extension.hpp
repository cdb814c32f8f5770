#pragma once

#include <optional>
#include <string>

#include "descent3/cochain.hpp"
#include "descent3/group.hpp"

namespace descent3 {

// Central extension 0 -> Z/m -> B -> Gbar -> 1. The kernel group is cyclic:m;
// inject has central image and project is onto with ker(project) = im(inject).
struct CentralExtension {
    int modulus = 0;
    GroupPtr kernel;   // cyclic of order modulus
    GroupPtr middle;
    GroupPtr base;
    GroupHom inject;   // kernel -> middle
    GroupHom project;  // middle -> base

    void validate() const;  // exactness and centrality, by enumeration
    // preimage under inject of a middle element (must lie in the image)
    Elem kernel_of(Elem b) const;
};

// middle group on pairs (a, sigma) with (a,s)*(b,t) = (a+b+c(s,t), st)
CentralExtension from_cocycle(GroupPtr base, const Cochain2& c);

// deterministic least-element section; normalized 2-cocycle of the class
Cochain2 to_cocycle(const CentralExtension& w);

// Equivalence over the identity on Z/m and on the base: an isomorphism
// h: B -> B' with h(inject(a)) = inject'(a) and project'(h(b)) = project(b).
std::optional<GroupHom> are_equivalent(const CentralExtension& w1, const CentralExtension& w2);

// fibered product modulo the antidiagonal copy of the kernel
CentralExtension baer_sum(const CentralExtension& w1, const CentralExtension& w2);

// rebase along an isomorphism theta: base' -> base
CentralExtension twist(const CentralExtension& w, const GroupHom& theta);

// pullback along an epimorphism epi: base' -> base(w); middle B x_{Gtilde} Gbar
CentralExtension inflate_ext(const CentralExtension& w, const GroupHom& epi);

CentralExtension split_extension(GroupPtr base, int m);

// The named extensions over 1, Z/p and (Z/p)^2:
//   omega0: Z/p = Z/p -> 1            omega1: Z/p -> (Z/p)^2 -> Z/p (split)
//   omega2: Z/p -> Z/p^2 -> Z/p       omega3: Z/2 -> D4 -> (Z/2)^2     (p = 2)
//   omega4: Z/p -> H_p3 -> (Z/p)^2    omega5: Z/p -> M_p3 -> (Z/p)^2   (p odd)
//   omega6: Z/p -> Z/p^2 + Z/p -> (Z/p)^2
CentralExtension omega_catalog(int i, int p);

// Isomorphism-type name for groups of order dividing p^3, a fingerprint tag
// otherwise.
std::string classify_middle(GroupPtr B);

std::string extension_to_json(const CentralExtension& w);

}  // namespace descent3
