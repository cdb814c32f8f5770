#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace descent3 {

using Elem = std::int32_t;

// A finite group as an explicit multiplication table over element indices
// 0..order-1, index 0 the identity. Immutable after construction; all
// overlying structures hold it through GroupPtr.
class FiniteGroup {
public:
    FiniteGroup(int order, std::vector<Elem> table, std::vector<Elem> generators,
                std::string name = {}, std::vector<std::string> labels = {});

    int order() const { return order_; }
    Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
    Elem inv(Elem a) const { return inverse_[a]; }
    Elem pow(Elem a, long long e) const;
    Elem conj(Elem g, Elem x) const { return mul(mul(inv(g), x), g); }  // g^-1 x g
    Elem commutator(Elem h, Elem g) const { return mul(mul(inv(h), inv(g)), mul(h, g)); }

    const std::vector<Elem>& table() const { return table_; }
    const std::vector<Elem>& generators() const { return generators_; }
    const std::string& name() const { return name_; }
    std::string label(Elem x) const;

    int element_order(Elem a) const { return element_order_[a]; }
    int exponent() const;
    bool is_abelian() const;
    std::vector<int> element_order_multiset() const;  // sorted

    // Throws unless the table is a group with identity 0, inverses, and the
    // generators generate everything.
    void validate() const;

private:
    int order_;
    std::vector<Elem> table_;
    std::vector<Elem> inverse_;
    std::vector<Elem> generators_;
    std::vector<int> element_order_;
    std::string name_;
    std::vector<std::string> labels_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Sorted member list, closed under the parent operation.
struct Subgroup {
    GroupPtr parent;
    std::vector<Elem> members;  // sorted, contains 0

    int order() const { return static_cast<int>(members.size()); }
    bool contains(Elem x) const;
    bool operator==(const Subgroup& o) const { return members == o.members; }
};

// Total map on elements satisfying the homomorphism law.
struct GroupHom {
    GroupPtr domain;
    GroupPtr codomain;
    std::vector<Elem> images;

    Elem operator()(Elem x) const { return images[x]; }
    bool is_valid() const;         // law on all pairs, identity to identity
    bool is_injective() const;
    bool is_surjective() const;
    bool is_isomorphism() const { return is_injective() && is_surjective(); }
    Subgroup kernel() const;
    Subgroup image() const;
};

GroupHom compose(const GroupHom& second, const GroupHom& first);  // second(first(x))
GroupHom identity_hom(GroupPtr G);
GroupHom inverse_iso(const GroupHom& iso);

// -- subgroup machinery -------------------------------------------------

Subgroup trivial_subgroup(GroupPtr G);
Subgroup whole_group(GroupPtr G);
Subgroup subgroup_closure(GroupPtr G, const std::vector<Elem>& gens);
Subgroup intersect(const Subgroup& A, const Subgroup& B);
bool is_subgroup_of(const Subgroup& A, const Subgroup& B);  // A <= B
bool is_normal(const Subgroup& H);

Subgroup center(GroupPtr G);
// Subgroup generated by all [h,g], h in H, g in parent(H).
Subgroup commutator_subgroup(const Subgroup& H);
// Subgroup generated by all h^q, h in H.
Subgroup power_subgroup(const Subgroup& H, int q);
// Smallest subgroup containing both (closure of the union).
Subgroup join(const Subgroup& A, const Subgroup& B);

// All normal subgroups, sorted by (order, member list).
std::vector<Subgroup> normal_subgroups(GroupPtr G);
std::vector<std::vector<Elem>> conjugacy_classes(GroupPtr G);

struct Quotient {
    GroupPtr group;
    GroupHom projection;
};
// Cosets indexed by least member; coset of the identity is index 0.
Quotient quotient(GroupPtr G, const Subgroup& N);

struct EmbeddedSubgroup {
    GroupPtr group;
    GroupHom inclusion;
};
EmbeddedSubgroup subgroup_as_group(const Subgroup& H);

// -- homomorphism search -------------------------------------------------

// All homomorphisms G -> H (or epimorphisms only), enumerated by
// lexicographic generator-image backtracking; deterministic order.
std::vector<GroupHom> homs(GroupPtr G, GroupPtr H, bool epi_only = false);
// Extends the partial map generators(G)[i] -> gen_images[i] if it is a
// homomorphism.
std::optional<GroupHom> extend_hom(GroupPtr G, GroupPtr H, const std::vector<Elem>& gen_images);
// Same with an explicit generating set of G.
std::optional<GroupHom> extend_hom(GroupPtr G, GroupPtr H, const std::vector<Elem>& gens,
                                   const std::vector<Elem>& gen_images);

std::optional<GroupHom> is_isomorphic(GroupPtr A, GroupPtr B);

// Invariant factors of an abelian group, largest first (by element counting).
std::vector<int> abelian_invariants(GroupPtr G);
// Invariant-factor basis of an abelian group: independent elements whose
// cyclic spans decompose G, orders largest first.
std::vector<Elem> abelian_basis(GroupPtr G);

// Cheap isomorphism-invariant fingerprint used as a prefilter.
struct GroupFingerprint {
    int order;
    int exponent;
    int center_order;
    int derived_order;
    std::vector<int> abelianization;
    std::vector<int> order_multiset;
    bool operator==(const GroupFingerprint&) const = default;
};
GroupFingerprint fingerprint(GroupPtr G);

}  // namespace descent3
