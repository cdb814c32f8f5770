#include "descent3/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace descent3 {

long long H1Basis::size() const {
    long long s = 1;
    for (int o : orders) s *= o;
    return s;
}

Cochain1 H1Basis::combine(const std::vector<int>& coeffs) const {
    if (coeffs.size() != basis.size()) throw std::invalid_argument("H1Basis::combine: arity");
    Cochain1 out = zero_cochain1(group, modulus);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        int c = mod_norm(coeffs[i], modulus);
        for (std::size_t j = 0; j < out.values.size(); ++j)
            out.values[j] = static_cast<Res>((out.values[j] + c * basis[i].values[j]) % modulus);
    }
    return out;
}

H1Basis h1(GroupPtr G, int m, long long enumerate_cap) {
    H1Basis out;
    out.group = G;
    out.modulus = m;

    // Hom(G, Z/m) factors through the abelianization; build the dual basis
    // from an invariant-factor basis of G_ab.
    Subgroup derived = commutator_subgroup(whole_group(G));
    Quotient ab = quotient(G, derived);
    GroupPtr A = ab.group;
    std::vector<Elem> basisElems = A->order() == 1 ? std::vector<Elem>{} : abelian_basis(A);

    // discrete logarithms: coordinates of each element of G_ab
    int k = static_cast<int>(basisElems.size());
    std::vector<std::vector<int>> coords(A->order(), std::vector<int>(k, 0));
    {
        std::vector<Elem> elems{0};
        std::vector<std::vector<int>> cs{std::vector<int>(k, 0)};
        for (int i = 0; i < k; ++i) {
            int ord = A->element_order(basisElems[i]);
            std::size_t snapshot = elems.size();
            for (int e = 1; e < ord; ++e)
                for (std::size_t j = 0; j < snapshot; ++j) {
                    Elem x = A->mul(elems[j], A->pow(basisElems[i], e));
                    auto c = cs[j];
                    c[i] = e;
                    elems.push_back(x);
                    cs.push_back(std::move(c));
                }
        }
        if (elems.size() != static_cast<std::size_t>(A->order()))
            throw std::runtime_error("h1: abelian basis enumeration mismatch");
        for (std::size_t j = 0; j < elems.size(); ++j) coords[elems[j]] = cs[j];
    }

    for (int i = 0; i < k; ++i) {
        int d = A->element_order(basisElems[i]);
        int g = static_cast<int>(gcd_ll(d, m));
        if (g == 1) continue;
        Cochain1 chi = zero_cochain1(G, m);
        for (Elem x = 0; x < G->order(); ++x)
            chi.values[x] = static_cast<Res>(static_cast<long long>(coords[ab.projection(x)][i]) *
                                             (m / g) % m);
        out.basis.push_back(std::move(chi));
        out.orders.push_back(g);
    }
    // orders descending, deterministic
    std::vector<std::size_t> idx(out.basis.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return out.orders[a] > out.orders[b];
    });
    H1Basis sorted;
    sorted.group = G;
    sorted.modulus = m;
    for (std::size_t i : idx) {
        sorted.basis.push_back(out.basis[i]);
        sorted.orders.push_back(out.orders[i]);
    }

    if (sorted.size() <= enumerate_cap) {
        // all homomorphisms, lexicographic in basis coordinates
        std::vector<int> c(sorted.basis.size(), 0);
        long long total = sorted.size();
        for (long long t = 0; t < total; ++t) {
            sorted.all.push_back(sorted.combine(c));
            for (std::size_t i = c.size(); i-- > 0;) {
                if (++c[i] < sorted.orders[i]) break;
                c[i] = 0;
            }
        }
    }
    return sorted;
}

bool SubgroupChar::is_zero() const {
    return std::all_of(values.begin(), values.end(), [](Res v) { return v == 0; });
}

Subgroup SubgroupChar::kernel() const {
    std::vector<Elem> ker;
    for (Elem x : sub.members)
        if (values[x] == 0) ker.push_back(x);
    return Subgroup{sub.parent, std::move(ker)};
}

bool SubgroupChar::is_g_invariant() const {
    const auto& G = *sub.parent;
    for (Elem g = 0; g < G.order(); ++g)
        for (Elem n : sub.members)
            if (values[G.conj(g, n)] != values[n]) return false;
    return true;
}

std::vector<SubgroupChar> invariants_h1(const Subgroup& N, int m) {
    if (!is_normal(N)) throw std::invalid_argument("invariants_h1: subgroup not normal");
    auto emb = subgroup_as_group(N);
    H1Basis chars = h1(emb.group, m);
    if (chars.all.empty() && chars.size() > 0 && !chars.basis.empty())
        throw std::runtime_error("invariants_h1: enumeration cap exceeded");
    const auto& G = *N.parent;
    std::vector<SubgroupChar> out;
    for (const Cochain1& phi : chars.all) {
        SubgroupChar c{N, m, std::vector<Res>(G.order(), 0)};
        for (int i = 0; i < emb.group->order(); ++i) c.values[emb.inclusion(i)] = phi.values[i];
        bool invariant = true;
        for (Elem g : G.generators()) {
            for (Elem n : N.members)
                if (c.values[G.conj(g, n)] != c.values[n]) {
                    invariant = false;
                    break;
                }
            if (!invariant) break;
        }
        if (invariant) out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(),
              [](const SubgroupChar& a, const SubgroupChar& b) { return a.values < b.values; });
    return out;
}

Cochain2 transgression(const Quotient& G_mod_M, const SubgroupChar& phi) {
    GroupPtr G = G_mod_M.projection.domain;
    GroupPtr Q = G_mod_M.group;
    const Subgroup& M = phi.sub;
    if (M.parent->table() != G->table())
        throw std::invalid_argument("transgression: subgroup lives in a different group");
    if (G_mod_M.projection.kernel().members != M.members)
        throw std::invalid_argument("transgression: quotient kernel is not the character's subgroup");
    if (!phi.is_g_invariant()) throw std::invalid_argument("transgression: character not G-invariant");

    // least-element section
    std::vector<Elem> section(Q->order(), -1);
    for (Elem x = 0; x < G->order(); ++x) {
        Elem q = G_mod_M.projection(x);
        if (section[q] < 0) section[q] = x;
    }
    Cochain2 out = zero_cochain2(Q, phi.modulus);
    for (Elem a = 0; a < Q->order(); ++a)
        for (Elem b = 0; b < Q->order(); ++b) {
            Elem prod = G->mul(section[a], section[b]);
            Elem diff = G->mul(prod, G->inv(section[Q->mul(a, b)]));
            out.at(a, b) = phi.values[diff];
        }
    if (!is_2cocycle(out))
        throw std::runtime_error("transgression: section formula failed the cocycle identity");
    return out;
}

// -- GroupCohomology --------------------------------------------------------

GroupCohomology::GroupCohomology(GroupPtr G, int m)
    : G_(std::move(G)), m_(m), ech_(m, (G_->order() - 1) * (G_->order() - 1), G_->order()) {
    int n = G_->order();
    for (Elem x = 1; x < n; ++x) {
        Cochain1 delta = zero_cochain1(G_, m_);
        delta.values[x] = 1;
        std::vector<Res> aux(n, 0);
        aux[x] = 1;
        ech_.insert(compress(d1(delta)), std::move(aux));
    }
    ech_.finalize();
}

std::vector<Res> GroupCohomology::compress(const Cochain2& c) const {
    int n = G_->order();
    std::vector<Res> v(static_cast<std::size_t>(n - 1) * (n - 1));
    for (Elem a = 1; a < n; ++a)
        for (Elem b = 1; b < n; ++b)
            v[static_cast<std::size_t>(a - 1) * (n - 1) + (b - 1)] = c(a, b);
    return v;
}

Cochain2 GroupCohomology::expand(const std::vector<Res>& v) const {
    int n = G_->order();
    Cochain2 c = zero_cochain2(G_, m_);
    for (Elem a = 1; a < n; ++a)
        for (Elem b = 1; b < n; ++b)
            c.at(a, b) = v[static_cast<std::size_t>(a - 1) * (n - 1) + (b - 1)];
    return c;
}

bool GroupCohomology::is_coboundary(const Cochain2& c) const { return ech_.contains(compress(c)); }

std::optional<Cochain1> GroupCohomology::coboundary_witness(const Cochain2& c) const {
    std::vector<Res> aux;
    auto res = ech_.reduce(compress(c), &aux);
    if (std::any_of(res.begin(), res.end(), [](Res v) { return v != 0; })) return std::nullopt;
    Cochain1 f{G_, m_, std::move(aux)};
    return f;
}

std::vector<Res> GroupCohomology::class_residue(const Cochain2& c) const {
    return ech_.reduce(compress(c));
}

// -- skew forms --------------------------------------------------------------

bool SkewForm::is_zero() const {
    return std::all_of(values.begin(), values.end(), [](Res v) { return v == 0; });
}

bool SkewForm::is_skew_bilinear() const {
    const auto& G = *group;
    int n = G.order();
    for (Elem x = 0; x < n; ++x)
        if ((*this)(x, x) != 0) return false;
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            for (Elem z = 0; z < n; ++z) {
                if (((*this)(G.mul(x, y), z)) % modulus !=
                    ((*this)(x, z) + (*this)(y, z)) % modulus)
                    return false;
                if (((*this)(z, G.mul(x, y))) % modulus !=
                    ((*this)(z, x) + (*this)(z, y)) % modulus)
                    return false;
            }
    return true;
}

SkewForm skew_of(const Cochain2& c) {
    int n = c.group->order();
    SkewForm out{c.group, c.modulus, std::vector<Res>(static_cast<std::size_t>(n) * n, 0)};
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            out.values[static_cast<std::size_t>(a) * n + b] =
                static_cast<Res>((c(a, b) + c.modulus - c(b, a)) % c.modulus);
    return out;
}

long long skew_group_order(GroupPtr G, int m) {
    if (!G->is_abelian()) throw std::invalid_argument("skew_group_order: group not abelian");
    auto basis = G->order() == 1 ? std::vector<Elem>{} : abelian_basis(G);
    long long total = 1;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            long long g = gcd_ll(gcd_ll(G->element_order(basis[i]), G->element_order(basis[j])), m);
            total *= g;
        }
    return total;
}

SymSkewDecomposition sym_sk_decompose(const H2Structure& h) {
    GroupPtr G = h.group();
    if (!G->is_abelian()) throw std::invalid_argument("sym_sk_decompose: group not abelian");
    int m = h.modulus();
    SymSkewDecomposition out;

    // enumerate H^2 classes through coordinates; collect the symmetric ones
    const auto& factors = h.invariant_factors();
    std::vector<int> c(factors.size(), 0);
    std::vector<std::pair<std::vector<Res>, std::vector<int>>> skew_images;
    while (true) {
        Cochain2 rep = h.combine(c);
        SkewForm a = skew_of(rep);
        if (a.is_zero()) out.sym_classes.push_back(c);
        skew_images.emplace_back(a.values, c);
        std::size_t i = c.size();
        bool done = true;
        while (i > 0) {
            --i;
            if (++c[i] < factors[i]) {
                done = false;
                break;
            }
            c[i] = 0;
        }
        if (done) break;
    }
    out.sym_order = static_cast<long long>(out.sym_classes.size());
    out.skew_order = skew_group_order(G, m);
    // Psi is onto Skew with kernel H^2_sym exactly when the counts match
    std::sort(skew_images.begin(), skew_images.end());
    long long image_count = 0;
    for (std::size_t i = 0; i < skew_images.size(); ++i)
        if (i == 0 || skew_images[i].first != skew_images[i - 1].first) ++image_count;
    if (image_count * out.sym_order != h.order())
        throw std::runtime_error("sym_sk_decompose: |H2| != |image Psi| * |H2_sym|");
    if (image_count != out.skew_order)
        throw std::runtime_error("sym_sk_decompose: Psi is not onto Skew(G, Z/m)");

    // section of Psi on a basis of Skew, looked up in the class enumeration
    auto basis = G->order() == 1 ? std::vector<Elem>{} : abelian_basis(G);
    int k = static_cast<int>(basis.size());
    std::vector<std::vector<int>> coords(G->order(), std::vector<int>(k, 0));
    {
        std::vector<Elem> elems{0};
        std::vector<std::vector<int>> cs{std::vector<int>(k, 0)};
        for (int t = 0; t < k; ++t) {
            int ord = G->element_order(basis[t]);
            std::size_t snapshot = elems.size();
            for (int e = 1; e < ord; ++e)
                for (std::size_t w = 0; w < snapshot; ++w) {
                    Elem x = G->mul(elems[w], G->pow(basis[t], e));
                    auto cc = cs[w];
                    cc[t] = e;
                    elems.push_back(x);
                    cs.push_back(std::move(cc));
                }
        }
        for (std::size_t w = 0; w < elems.size(); ++w) coords[elems[w]] = cs[w];
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            long long g = gcd_ll(gcd_ll(G->element_order(basis[i]), G->element_order(basis[j])), m);
            if (g == 1) continue;
            // elementary skew form supported on the (b_i, b_j) plane
            SkewForm target{G, m, std::vector<Res>(static_cast<std::size_t>(G->order()) * G->order(), 0)};
            int unit = static_cast<int>(m / g);
            for (Elem x = 0; x < G->order(); ++x)
                for (Elem y = 0; y < G->order(); ++y) {
                    long long v = static_cast<long long>(coords[x][i]) * coords[y][j] -
                                  static_cast<long long>(coords[x][j]) * coords[y][i];
                    target.values[static_cast<std::size_t>(x) * G->order() + y] =
                        static_cast<Res>(mod_norm(v * unit, m));
                }
            bool found = false;
            for (const auto& [vals, cls] : skew_images)
                if (vals == target.values) {
                    out.skew_basis.push_back(target);
                    out.section_classes.push_back(cls);
                    found = true;
                    break;
                }
            if (!found) throw std::runtime_error("sym_sk_decompose: no section class for skew basis form");
        }
    return out;
}

}  // namespace descent3
