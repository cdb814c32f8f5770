#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "descent3/cochain.hpp"
#include "descent3/echelon.hpp"
#include "descent3/group.hpp"

namespace descent3 {

// Hom(G, Z/m) presented by an invariant-factor basis (orders descending),
// with the full enumeration attached while it stays below the cap.
struct H1Basis {
    GroupPtr group;
    int modulus = 0;
    std::vector<Cochain1> basis;
    std::vector<int> orders;
    std::vector<Cochain1> all;  // empty iff the enumeration cap was exceeded

    long long size() const;
    Cochain1 combine(const std::vector<int>& coeffs) const;
};

H1Basis h1(GroupPtr G, int m, long long enumerate_cap = 65536);

// A character of a subgroup tabulated on parent indices (zero off-members).
struct SubgroupChar {
    Subgroup sub;
    int modulus = 0;
    std::vector<Res> values;  // size |parent|

    Res operator()(Elem x) const { return values[x]; }
    bool is_zero() const;
    Subgroup kernel() const;  // {x in sub : value 0}
    bool is_g_invariant() const;
};

// H^1(N)^G: all homomorphisms N -> Z/m fixed by conjugation, N normal in G.
// Deterministic order (lexicographic in the parent-indexed value table).
std::vector<SubgroupChar> invariants_h1(const Subgroup& N, int m);

// trg(phi) on G/M via the least-element section s (s(1)=1):
//   c(x, y) = phi( s(x) s(y) s(xy)^{-1} ).
// Requires phi G-invariant; throws if the section formula fails the cocycle
// identity (precondition violation).
Cochain2 transgression(const Quotient& G_mod_M, const SubgroupChar& phi);

// Per-(G, m) workspace: coboundary row space in Howell form. Gives class-zero
// tests, canonical residues of cohomology classes, and coboundary witnesses.
class GroupCohomology {
public:
    GroupCohomology(GroupPtr G, int m);

    GroupPtr group() const { return G_; }
    int modulus() const { return m_; }

    std::vector<Res> compress(const Cochain2& c) const;  // (n-1)^2 coordinates
    Cochain2 expand(const std::vector<Res>& v) const;

    bool is_coboundary(const Cochain2& c) const;
    // f with d1(f) = c, when c is a coboundary
    std::optional<Cochain1> coboundary_witness(const Cochain2& c) const;
    // canonical residue: equal for cohomologous cocycles
    std::vector<Res> class_residue(const Cochain2& c) const;

    const ModEchelon& echelon() const { return ech_; }

private:
    GroupPtr G_;
    int m_;
    ModEchelon ech_;
};

// Computed presentation of H^2(G, Z/m): basis cocycles, cyclic invariant
// factors (descending), and an exact decomposition solver.
class H2Structure {
public:
    H2Structure(GroupPtr G, int m, long long enum_cap = 16384);

    GroupPtr group() const { return ws_.group(); }
    int modulus() const { return m_; }
    const std::vector<Cochain2>& basis() const { return basis_; }
    const std::vector<int>& invariant_factors() const { return factors_; }
    long long order() const { return order_; }
    const GroupCohomology& workspace() const { return ws_; }

    struct Decomposition {
        std::vector<int> coordinates;  // one per basis element, mod its factor
        Cochain1 witness;              // input = sum coord_i * basis_i + d1(witness)
    };
    Decomposition decompose(const Cochain2& cocycle) const;

    // coordinates of a class by canonical residue, without the witness
    std::vector<int> class_coordinates(const Cochain2& cocycle) const;
    Cochain2 combine(const std::vector<int>& coords) const;  // representative cocycle

private:
    int m_;
    GroupCohomology ws_;
    std::vector<Cochain2> basis_;
    std::vector<int> factors_;
    long long order_ = 1;
    std::unordered_map<std::string, std::vector<int>> residue_to_coords_;
};

inline H2Structure h2(GroupPtr G, int m, long long enum_cap = 16384) {
    return H2Structure(G, m, enum_cap);
}

// |H^2(G, Z/m)| for prime-power m from the kernel-lattice size bookkeeping,
// without enumerating classes. Cocycle generators of H^2 (canonical residues
// modulo coboundaries) are available separately for rank arguments.
long long h2_order(GroupPtr G, int m);
std::vector<Cochain2> h2_class_generators(GroupPtr G, int m);

// -- symmetric / skew decomposition (abelian G) ------------------------------

struct SkewForm {
    GroupPtr group;
    int modulus = 0;
    std::vector<Res> values;  // n x n table

    Res operator()(Elem a, Elem b) const {
        return values[static_cast<std::size_t>(a) * group->order() + b];
    }
    bool is_zero() const;
    // Z-bilinear with a(x,x) = 0 (meaningful for abelian groups)
    bool is_skew_bilinear() const;
};

SkewForm skew_of(const Cochain2& cocycle);

struct SymSkewDecomposition {
    std::vector<std::vector<int>> sym_classes;   // coordinates of H^2_sym elements
    long long sym_order = 0;
    long long skew_order = 0;                    // |Skew(G, Z/m)|
    // section of Psi: for each skew basis form, a class mapping onto it
    std::vector<SkewForm> skew_basis;
    std::vector<std::vector<int>> section_classes;
};

// Splits H^2 along Psi: c -> skew_of(c); requires G abelian. Verifies
// |H^2| = |H^2_sym| * |Skew| and returns an explicit section of Psi.
SymSkewDecomposition sym_sk_decompose(const H2Structure& h);

long long skew_group_order(GroupPtr G, int m);

}  // namespace descent3
