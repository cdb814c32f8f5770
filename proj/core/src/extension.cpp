#include "descent3/extension.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <stdexcept>

#include <json.hpp>

#include "descent3/group_spec.hpp"
#include "descent3/modarith.hpp"

namespace descent3 {

void CentralExtension::validate() const {
    if (kernel->order() != modulus) throw std::runtime_error("extension: kernel order mismatch");
    if (!inject.is_valid() || !project.is_valid()) throw std::runtime_error("extension: bad homs");
    if (!inject.is_injective()) throw std::runtime_error("extension: inject not injective");
    if (!project.is_surjective()) throw std::runtime_error("extension: project not surjective");
    auto ker = project.kernel();
    auto im = inject.image();
    if (ker.members != im.members) throw std::runtime_error("extension: not exact in the middle");
    auto z = center(middle);
    for (Elem x : im.members)
        if (!z.contains(x)) throw std::runtime_error("extension: kernel not central");
}

Elem CentralExtension::kernel_of(Elem b) const {
    for (Elem a = 0; a < modulus; ++a)
        if (inject(a) == b) return a;
    throw std::runtime_error("extension: element not in the kernel image");
}

CentralExtension from_cocycle(GroupPtr base, const Cochain2& c) {
    if (c.group->table() != base->table()) throw std::invalid_argument("from_cocycle: base mismatch");
    if (!is_2cocycle(c)) throw std::invalid_argument("from_cocycle: input is not a 2-cocycle");
    int m = c.modulus;
    int nb = base->order();
    int N = m * nb;
    auto idx = [nb](int a, Elem s) { return a * nb + s; };
    std::vector<Elem> table(static_cast<std::size_t>(N) * N);
    for (int a = 0; a < m; ++a)
        for (Elem s = 0; s < nb; ++s)
            for (int b = 0; b < m; ++b)
                for (Elem t = 0; t < nb; ++t)
                    table[static_cast<std::size_t>(idx(a, s)) * N + idx(b, t)] =
                        idx((a + b + c(s, t)) % m, base->mul(s, t));
    std::vector<Elem> gens{idx(1 % m, 0)};
    for (Elem g : base->generators()) gens.push_back(idx(0, g));
    auto middle = std::make_shared<FiniteGroup>(N, std::move(table), std::move(gens));

    auto kernel = make_group("cyclic:" + std::to_string(m));
    std::vector<Elem> inj(m);
    for (int a = 0; a < m; ++a) inj[a] = idx(a, 0);
    std::vector<Elem> proj(N);
    for (int a = 0; a < m; ++a)
        for (Elem s = 0; s < nb; ++s) proj[idx(a, s)] = s;
    return CentralExtension{m, kernel, middle, base, GroupHom{kernel, middle, std::move(inj)},
                            GroupHom{middle, base, std::move(proj)}};
}

Cochain2 to_cocycle(const CentralExtension& w) {
    GroupPtr B = w.middle;
    GroupPtr G = w.base;
    std::vector<Elem> section(G->order(), -1);
    for (Elem b = 0; b < B->order(); ++b) {
        Elem q = w.project(b);
        if (section[q] < 0) section[q] = b;  // least element of the fiber
    }
    std::vector<Elem> kernel_index(B->order(), -1);
    for (Elem a = 0; a < w.modulus; ++a) kernel_index[w.inject(a)] = a;
    Cochain2 out = zero_cochain2(G, w.modulus);
    for (Elem x = 0; x < G->order(); ++x)
        for (Elem y = 0; y < G->order(); ++y) {
            Elem v = B->mul(B->mul(section[x], section[y]), B->inv(section[G->mul(x, y)]));
            Elem a = kernel_index[v];
            if (a < 0) throw std::runtime_error("to_cocycle: section defect not in the kernel");
            out.at(x, y) = static_cast<Res>(a);
        }
    return out;
}

std::optional<GroupHom> are_equivalent(const CentralExtension& w1, const CentralExtension& w2) {
    if (w1.modulus != w2.modulus) throw std::invalid_argument("are_equivalent: modulus mismatch");
    if (w1.base->table() != w2.base->table())
        throw std::invalid_argument("are_equivalent: base mismatch");
    if (w1.middle->order() != w2.middle->order()) return std::nullopt;

    GroupPtr B1 = w1.middle, B2 = w2.middle;
    // generators: the kernel generator plus least lifts of base generators
    std::vector<Elem> gens{w1.inject(1 % w1.modulus)};
    for (Elem g : w1.base->generators())
        for (Elem b = 0; b < B1->order(); ++b)
            if (w1.project(b) == g) {
                gens.push_back(b);
                break;
            }
    // image candidates: forced on the kernel, fiberwise for the lifts
    std::vector<std::vector<Elem>> candidates(gens.size());
    candidates[0] = {w2.inject(1 % w2.modulus)};
    for (std::size_t i = 1; i < gens.size(); ++i) {
        Elem target = w1.project(gens[i]);
        for (Elem b = 0; b < B2->order(); ++b)
            if (w2.project(b) == target) candidates[i].push_back(b);
    }
    std::vector<std::size_t> pick(gens.size(), 0);
    while (true) {
        std::vector<Elem> images(gens.size());
        for (std::size_t i = 0; i < gens.size(); ++i) images[i] = candidates[i][pick[i]];
        if (auto h = extend_hom(B1, B2, gens, images)) {
            bool ok = h->is_isomorphism();
            for (Elem a = 0; ok && a < w1.modulus; ++a)
                if ((*h)(w1.inject(a)) != w2.inject(a)) ok = false;
            for (Elem b = 0; ok && b < B1->order(); ++b)
                if (w2.project((*h)(b)) != w1.project(b)) ok = false;
            if (ok) return h;
        }
        std::size_t i = gens.size();
        bool done = true;
        while (i-- > 0) {
            if (++pick[i] < candidates[i].size()) {
                done = false;
                break;
            }
            pick[i] = 0;
        }
        if (done) return std::nullopt;
    }
}

CentralExtension baer_sum(const CentralExtension& w1, const CentralExtension& w2) {
    if (w1.modulus != w2.modulus) throw std::invalid_argument("baer_sum: modulus mismatch");
    if (w1.base->table() != w2.base->table()) throw std::invalid_argument("baer_sum: base mismatch");
    GroupPtr B1 = w1.middle, B2 = w2.middle, G = w1.base;
    int m = w1.modulus;

    // fibered product B1 x_G B2
    std::vector<std::pair<Elem, Elem>> elems;
    std::map<std::pair<Elem, Elem>, Elem> index;
    elems.emplace_back(0, 0);
    index[{0, 0}] = 0;
    for (Elem b1 = 0; b1 < B1->order(); ++b1)
        for (Elem b2 = 0; b2 < B2->order(); ++b2) {
            if (b1 == 0 && b2 == 0) continue;
            if (w1.project(b1) == w2.project(b2)) {
                index[{b1, b2}] = static_cast<Elem>(elems.size());
                elems.emplace_back(b1, b2);
            }
        }
    int F = static_cast<int>(elems.size());
    std::vector<Elem> table(static_cast<std::size_t>(F) * F);
    for (int i = 0; i < F; ++i)
        for (int j = 0; j < F; ++j)
            table[static_cast<std::size_t>(i) * F + j] =
                index.at({B1->mul(elems[i].first, elems[j].first),
                          B2->mul(elems[i].second, elems[j].second)});
    std::vector<Elem> gens;
    for (int i = 1; i < F; ++i) gens.push_back(i);
    auto fib = std::make_shared<FiniteGroup>(F, std::move(table), std::move(gens));

    // quotient by the antidiagonal copy {(f1(a), f2(a)^-1)} of the kernel
    std::vector<Elem> anti;
    for (Elem a = 0; a < m; ++a) anti.push_back(index.at({w1.inject(a), B2->inv(w2.inject(a))}));
    std::sort(anti.begin(), anti.end());
    Quotient quo = quotient(fib, Subgroup{fib, anti});

    auto kernel = make_group("cyclic:" + std::to_string(m));
    std::vector<Elem> inj(m);
    for (Elem a = 0; a < m; ++a) inj[a] = quo.projection(index.at({w1.inject(a), 0}));
    std::vector<Elem> proj(quo.group->order(), -1);
    for (int i = 0; i < F; ++i) proj[quo.projection(i)] = w1.project(elems[i].first);
    return CentralExtension{m, kernel, quo.group, G, GroupHom{kernel, quo.group, std::move(inj)},
                            GroupHom{quo.group, G, std::move(proj)}};
}

CentralExtension twist(const CentralExtension& w, const GroupHom& theta) {
    if (!theta.is_isomorphism()) throw std::invalid_argument("twist: theta is not an isomorphism");
    if (theta.codomain->table() != w.base->table())
        throw std::invalid_argument("twist: theta does not land on the base");
    CentralExtension out = w;
    out.base = theta.domain;
    out.project = compose(inverse_iso(theta), w.project);
    return out;
}

CentralExtension inflate_ext(const CentralExtension& w, const GroupHom& epi) {
    if (!epi.is_surjective()) throw std::invalid_argument("inflate_ext: map is not surjective");
    if (epi.codomain->table() != w.base->table())
        throw std::invalid_argument("inflate_ext: codomain is not the base");
    GroupPtr B = w.middle, Gb = epi.domain;
    int m = w.modulus;
    std::vector<std::pair<Elem, Elem>> elems;
    std::map<std::pair<Elem, Elem>, Elem> index;
    elems.emplace_back(0, 0);
    index[{0, 0}] = 0;
    for (Elem b = 0; b < B->order(); ++b)
        for (Elem s = 0; s < Gb->order(); ++s) {
            if (b == 0 && s == 0) continue;
            if (w.project(b) == epi(s)) {
                index[{b, s}] = static_cast<Elem>(elems.size());
                elems.emplace_back(b, s);
            }
        }
    int F = static_cast<int>(elems.size());
    std::vector<Elem> table(static_cast<std::size_t>(F) * F);
    for (int i = 0; i < F; ++i)
        for (int j = 0; j < F; ++j)
            table[static_cast<std::size_t>(i) * F + j] =
                index.at({B->mul(elems[i].first, elems[j].first),
                          Gb->mul(elems[i].second, elems[j].second)});
    std::vector<Elem> gens;
    for (int i = 1; i < F; ++i) gens.push_back(i);
    auto mid = std::make_shared<FiniteGroup>(F, std::move(table), std::move(gens));

    auto kernel = make_group("cyclic:" + std::to_string(m));
    std::vector<Elem> inj(m);
    for (Elem a = 0; a < m; ++a) inj[a] = index.at({w.inject(a), 0});
    std::vector<Elem> proj(F);
    for (int i = 0; i < F; ++i) proj[i] = elems[i].second;
    return CentralExtension{m, kernel, mid, Gb, GroupHom{kernel, mid, std::move(inj)},
                            GroupHom{mid, Gb, std::move(proj)}};
}

CentralExtension split_extension(GroupPtr base, int m) {
    return from_cocycle(base, zero_cochain2(base, m));
}

namespace {

GroupHom hom_from_gen_images(GroupPtr G, GroupPtr H, const std::vector<Elem>& images,
                             const char* what) {
    auto f = extend_hom(G, H, images);
    if (!f) throw std::runtime_error(std::string("omega_catalog: ") + what + " is not a hom");
    return *f;
}

}  // namespace

CentralExtension omega_catalog(int i, int p) {
    if (i < 0 || i > 6) throw std::invalid_argument("omega_catalog: index out of range");
    if (i == 3 && p != 2) throw std::invalid_argument("omega_catalog: omega3 needs p = 2");
    if ((i == 4 || i == 5) && p == 2)
        throw std::invalid_argument("omega_catalog: omega4/omega5 need p odd");
    if (!is_prime(p)) throw std::invalid_argument("omega_catalog: p must be prime");
    std::string ps = std::to_string(p);
    auto kernel = make_group("cyclic:" + ps);

    switch (i) {
        case 0: {
            auto base = make_group("cyclic:1");
            auto mid = make_group("cyclic:" + ps);
            std::vector<Elem> inj(p), proj(p, 0);
            for (int a = 0; a < p; ++a) inj[a] = a;
            return {p, kernel, mid, base, GroupHom{kernel, mid, std::move(inj)},
                    GroupHom{mid, base, std::move(proj)}};
        }
        case 1: {
            auto base = make_group("cyclic:" + ps);
            auto mid = make_group("elementary:" + ps + ":2");
            // (i, j) has index i + p j; inject a -> (a, 0); project (i,j) -> j
            std::vector<Elem> inj(p), proj(mid->order());
            for (int a = 0; a < p; ++a) inj[a] = a;
            for (Elem x = 0; x < mid->order(); ++x) proj[x] = x / p;
            return {p, kernel, mid, base, GroupHom{kernel, mid, std::move(inj)},
                    GroupHom{mid, base, std::move(proj)}};
        }
        case 2: {
            auto base = make_group("cyclic:" + ps);
            auto mid = make_group("cyclic:" + std::to_string(p * p));
            std::vector<Elem> inj(p), proj(p * p);
            for (int a = 0; a < p; ++a) inj[a] = p * a;
            for (Elem x = 0; x < p * p; ++x) proj[x] = x % p;
            return {p, kernel, mid, base, GroupHom{kernel, mid, std::move(inj)},
                    GroupHom{mid, base, std::move(proj)}};
        }
        case 3: {
            auto base = make_group("elementary:2:2");
            auto mid = make_group("dihedral:8");
            Elem r = mid->generators()[0];
            // theta: r -> (1,1), s -> (0,1); pair (i,j) has index i + 2 j
            GroupHom theta = hom_from_gen_images(mid, base, {3, 2}, "theta");
            std::vector<Elem> inj{0, mid->mul(r, r)};
            return {2, kernel, mid, base, GroupHom{kernel, mid, std::move(inj)}, theta};
        }
        case 4: {
            auto base = make_group("elementary:" + ps + ":2");
            auto mid = make_group("heisenberg:" + ps);
            // lambda: r -> (1,0), s -> (0,1)
            GroupHom lambda = hom_from_gen_images(mid, base, {1, p}, "lambda");
            Elem t = heisenberg_t(*mid);
            std::vector<Elem> inj(p);
            for (int a = 0; a < p; ++a) inj[a] = mid->pow(t, a);
            return {p, kernel, mid, base, GroupHom{kernel, mid, std::move(inj)}, lambda};
        }
        case 5: {
            auto base = make_group("elementary:" + ps + ":2");
            auto mid = make_group("modular:" + ps);
            GroupHom lambda2 = hom_from_gen_images(mid, base, {1, p}, "lambda'");
            Elem r = mid->generators()[0];
            std::vector<Elem> inj(p);
            for (int a = 0; a < p; ++a) inj[a] = mid->pow(r, static_cast<long long>(p) * a);
            return {p, kernel, mid, base, GroupHom{kernel, mid, std::move(inj)}, lambda2};
        }
        case 6: {
            auto base = make_group("elementary:" + ps + ":2");
            auto mid = make_group("direct:cyclic:" + std::to_string(p * p) + ",cyclic:" + ps);
            // direct product index (a, b) = a p + b; inject a -> (p a, 0)
            std::vector<Elem> inj(p), proj(mid->order());
            for (int a = 0; a < p; ++a) inj[a] = p * a * p;
            for (Elem x = 0; x < mid->order(); ++x) {
                int a = x / p, b = x % p;
                proj[x] = (a % p) + p * b;
            }
            return {p, kernel, mid, base, GroupHom{kernel, mid, std::move(inj)},
                    GroupHom{mid, base, std::move(proj)}};
        }
    }
    throw std::logic_error("omega_catalog: unreachable");
}

std::string classify_middle(GroupPtr B) {
    int n = B->order();
    if (n == 1) return "1";
    int p = 2;
    while (n % p != 0) ++p;
    long long pk = p;
    int k = 1;
    while (pk < n) {
        pk *= p;
        ++k;
    }
    if (pk != n || k > 3) {
        auto fp = fingerprint(B);
        return "ord=" + std::to_string(fp.order) + ",exp=" + std::to_string(fp.exponent) +
               ",z=" + std::to_string(fp.center_order) + ",der=" + std::to_string(fp.derived_order);
    }
    std::string ps = std::to_string(p);
    if (k == 1) return "Z/" + ps;
    if (k == 2) {
        if (B->exponent() == p * p) return "Z/" + std::to_string(p * p);
        return "(Z/" + ps + ")^2";
    }
    if (B->is_abelian()) {
        int e = B->exponent();
        if (e == p * p * p) return "Z/" + std::to_string(p * p * p);
        if (e == p * p) return "Z/" + std::to_string(p * p) + "xZ/" + ps;
        return "(Z/" + ps + ")^3";
    }
    if (p == 2) {
        int involutions = 0;
        for (Elem x = 1; x < 8; ++x)
            if (B->element_order(x) == 2) ++involutions;
        return involutions == 1 ? "Q8" : "D4";
    }
    return B->exponent() == p ? "H_" + std::to_string(p * p * p) : "M_" + std::to_string(p * p * p);
}

std::string extension_to_json(const CentralExtension& w) {
    // FNV-1a over the middle multiplication table
    unsigned long long h = 1469598103934665603ULL;
    for (Elem x : w.middle->table()) {
        h ^= static_cast<unsigned long long>(x);
        h *= 1099511628211ULL;
    }
    char digest[32];
    std::snprintf(digest, sizeof digest, "fnv1a64:%016llx", h);
    nlohmann::ordered_json j;
    j["base_spec"] = w.base->name();
    j["modulus"] = w.modulus;
    j["middle_table_digest"] = digest;
    j["inject"] = w.inject.images;
    j["project"] = w.project.images;
    return j.dump();
}

}  // namespace descent3
