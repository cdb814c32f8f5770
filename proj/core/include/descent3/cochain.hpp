#pragma once

#include <string>
#include <vector>

#include "descent3/group.hpp"
#include "descent3/modarith.hpp"

namespace descent3 {

// Normalized inhomogeneous 1-cochain with values in Z/m: values[identity] = 0.
struct Cochain1 {
    GroupPtr group;
    int modulus = 0;
    std::vector<Res> values;  // size |G|

    Res operator()(Elem x) const { return values[x]; }
    bool is_zero() const;
    bool is_homomorphism() const;  // f(xy) = f(x) + f(y) for all pairs
};

// Normalized inhomogeneous 2-cochain: values vanish when either argument is
// the identity. Stored as the full |G| x |G| table, row-major.
struct Cochain2 {
    GroupPtr group;
    int modulus = 0;
    std::vector<Res> values;  // size |G|^2

    Res operator()(Elem a, Elem b) const {
        return values[static_cast<std::size_t>(a) * group->order() + b];
    }
    Res& at(Elem a, Elem b) { return values[static_cast<std::size_t>(a) * group->order() + b]; }
    bool is_zero() const;
};

Cochain1 zero_cochain1(GroupPtr G, int m);
Cochain2 zero_cochain2(GroupPtr G, int m);

Cochain1 add(const Cochain1& a, const Cochain1& b);
Cochain1 negate(const Cochain1& a);
Cochain1 scale(const Cochain1& a, int c);
Cochain2 add(const Cochain2& a, const Cochain2& b);
Cochain2 negate(const Cochain2& a);
Cochain2 scale(const Cochain2& a, int c);

// (d1 f)(x, y) = f(x) + f(y) - f(xy)
Cochain2 d1(const Cochain1& f);
// c(y,z) - c(xy,z) + c(x,yz) - c(x,y) = 0 for all triples
bool is_2cocycle(const Cochain2& c);

// cup cocycle (x, y) -> psi(x) * psi'(y); both must be homomorphisms mod m
Cochain2 cup(const Cochain1& psi, const Cochain1& psi2);

// Connecting map for 0 -> Z/n -> Z/mn -> Z/m -> 0: lift the homomorphism psi
// mod m to its least residues mod mn, measure the failure to stay a
// homomorphism, and divide by m. The Bockstein is the case n = m.
Cochain2 bockstein(const Cochain1& psi, int n);
inline Cochain2 bockstein(const Cochain1& psi) { return bockstein(psi, psi.modulus); }

Cochain1 restrict_cochain(const Cochain1& f, const GroupHom& inclusion);
Cochain2 restrict_cochain(const Cochain2& c, const GroupHom& inclusion);
// pullback along a projection (or any hom) G -> G/N
Cochain1 inflate_cochain(const Cochain1& f, const GroupHom& proj);
Cochain2 inflate_cochain(const Cochain2& c, const GroupHom& proj);

// canonical JSON form {group_spec, modulus, values}; values row-major
std::string cochain_to_json(const Cochain2& c);
std::string cochain_to_json(const Cochain1& f);

}  // namespace descent3
