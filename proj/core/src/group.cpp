#include "descent3/group.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace descent3 {

FiniteGroup::FiniteGroup(int order, std::vector<Elem> table, std::vector<Elem> generators,
                         std::string name, std::vector<std::string> labels)
    : order_(order),
      table_(std::move(table)),
      generators_(std::move(generators)),
      name_(std::move(name)),
      labels_(std::move(labels)) {
    if (order_ <= 0) throw std::invalid_argument("group order must be positive");
    if (table_.size() != static_cast<std::size_t>(order_) * order_)
        throw std::invalid_argument("multiplication table has wrong size");

    inverse_.assign(order_, -1);
    for (Elem a = 0; a < order_; ++a) {
        for (Elem b = 0; b < order_; ++b) {
            if (mul(a, b) == 0 && mul(b, a) == 0) {
                inverse_[a] = b;
                break;
            }
        }
        if (inverse_[a] < 0) throw std::invalid_argument("element without two-sided inverse");
    }

    element_order_.assign(order_, 0);
    for (Elem a = 0; a < order_; ++a) {
        Elem x = a;
        int k = 1;
        while (x != 0) {
            x = mul(x, a);
            ++k;
        }
        element_order_[a] = k;
    }
}

Elem FiniteGroup::pow(Elem a, long long e) const {
    int n = element_order_[a];
    e %= n;
    if (e < 0) e += n;
    Elem r = 0;
    for (long long i = 0; i < e; ++i) r = mul(r, a);
    return r;
}

std::string FiniteGroup::label(Elem x) const {
    if (static_cast<std::size_t>(x) < labels_.size()) return labels_[x];
    return std::to_string(x);
}

int FiniteGroup::exponent() const {
    long long e = 1;
    for (Elem a = 0; a < order_; ++a) e = std::lcm<long long>(e, element_order_[a]);
    return static_cast<int>(e);
}

bool FiniteGroup::is_abelian() const {
    for (Elem a = 0; a < order_; ++a)
        for (Elem b = a + 1; b < order_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::vector<int> FiniteGroup::element_order_multiset() const {
    std::vector<int> v = element_order_;
    std::sort(v.begin(), v.end());
    return v;
}

void FiniteGroup::validate() const {
    for (Elem a = 0; a < order_; ++a) {
        if (mul(0, a) != a || mul(a, 0) != a) throw std::runtime_error("identity axiom fails");
        for (Elem b = 0; b < order_; ++b) {
            if (mul(a, b) < 0 || mul(a, b) >= order_) throw std::runtime_error("table out of range");
            for (Elem c = 0; c < order_; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw std::runtime_error("associativity fails");
        }
    }
    // generated closure must be the whole set
    std::vector<char> seen(order_, 0);
    seen[0] = 1;
    std::vector<Elem> stack{0};
    while (!stack.empty()) {
        Elem x = stack.back();
        stack.pop_back();
        for (Elem g : generators_) {
            Elem y = mul(x, g);
            if (!seen[y]) {
                seen[y] = 1;
                stack.push_back(y);
            }
        }
    }
    for (Elem a = 0; a < order_; ++a)
        if (!seen[a]) throw std::runtime_error("generators do not generate the group");
}

bool Subgroup::contains(Elem x) const {
    return std::binary_search(members.begin(), members.end(), x);
}

bool GroupHom::is_valid() const {
    if (!domain || !codomain) return false;
    if (images.size() != static_cast<std::size_t>(domain->order())) return false;
    if (images[0] != 0) return false;
    int n = domain->order();
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            if (images[domain->mul(a, b)] != codomain->mul(images[a], images[b])) return false;
    return true;
}

bool GroupHom::is_injective() const {
    std::vector<char> hit(codomain->order(), 0);
    for (Elem y : images) {
        if (hit[y]) return false;
        hit[y] = 1;
    }
    return true;
}

bool GroupHom::is_surjective() const {
    std::vector<char> hit(codomain->order(), 0);
    int count = 0;
    for (Elem y : images)
        if (!hit[y]) {
            hit[y] = 1;
            ++count;
        }
    return count == codomain->order();
}

Subgroup GroupHom::kernel() const {
    std::vector<Elem> ker;
    for (Elem x = 0; x < domain->order(); ++x)
        if (images[x] == 0) ker.push_back(x);
    return Subgroup{domain, std::move(ker)};
}

Subgroup GroupHom::image() const {
    std::set<Elem> im(images.begin(), images.end());
    return Subgroup{codomain, std::vector<Elem>(im.begin(), im.end())};
}

GroupHom compose(const GroupHom& second, const GroupHom& first) {
    if (first.codomain->order() != second.domain->order() ||
        first.codomain->table() != second.domain->table())
        throw std::invalid_argument("compose: middle groups differ");
    std::vector<Elem> im(first.domain->order());
    for (Elem x = 0; x < first.domain->order(); ++x) im[x] = second.images[first.images[x]];
    return GroupHom{first.domain, second.codomain, std::move(im)};
}

GroupHom identity_hom(GroupPtr G) {
    std::vector<Elem> im(G->order());
    std::iota(im.begin(), im.end(), 0);
    return GroupHom{G, G, std::move(im)};
}

GroupHom inverse_iso(const GroupHom& iso) {
    std::vector<Elem> im(iso.codomain->order(), -1);
    for (Elem x = 0; x < iso.domain->order(); ++x) im[iso.images[x]] = x;
    for (Elem y : im)
        if (y < 0) throw std::invalid_argument("inverse_iso: not bijective");
    return GroupHom{iso.codomain, iso.domain, std::move(im)};
}

// -- subgroup machinery --------------------------------------------------

Subgroup trivial_subgroup(GroupPtr G) { return Subgroup{G, {0}}; }

Subgroup whole_group(GroupPtr G) {
    std::vector<Elem> all(G->order());
    std::iota(all.begin(), all.end(), 0);
    return Subgroup{G, std::move(all)};
}

Subgroup subgroup_closure(GroupPtr G, const std::vector<Elem>& gens) {
    std::vector<char> in(G->order(), 0);
    in[0] = 1;
    std::vector<Elem> elems{0};
    std::vector<Elem> work{0};
    auto add = [&](Elem x) {
        if (!in[x]) {
            in[x] = 1;
            elems.push_back(x);
            work.push_back(x);
        }
    };
    for (Elem g : gens) add(g);
    std::size_t head = 0;
    while (head < work.size()) {
        Elem x = work[head++];
        for (Elem g : gens) {
            add(G->mul(x, g));
            add(G->mul(g, x));
        }
        // close under products with everything found so far
        for (std::size_t i = 0; i < elems.size(); ++i) {
            add(G->mul(x, elems[i]));
            add(G->mul(elems[i], x));
        }
    }
    std::sort(elems.begin(), elems.end());
    return Subgroup{G, std::move(elems)};
}

Subgroup intersect(const Subgroup& A, const Subgroup& B) {
    std::vector<Elem> out;
    std::set_intersection(A.members.begin(), A.members.end(), B.members.begin(), B.members.end(),
                          std::back_inserter(out));
    return Subgroup{A.parent, std::move(out)};
}

bool is_subgroup_of(const Subgroup& A, const Subgroup& B) {
    return std::includes(B.members.begin(), B.members.end(), A.members.begin(), A.members.end());
}

bool is_normal(const Subgroup& H) {
    const auto& G = *H.parent;
    for (Elem g = 0; g < G.order(); ++g)
        for (Elem h : H.members)
            if (!H.contains(G.conj(g, h))) return false;
    return true;
}

Subgroup center(GroupPtr G) {
    std::vector<Elem> z;
    for (Elem a = 0; a < G->order(); ++a) {
        bool central = true;
        for (Elem b = 0; b < G->order() && central; ++b)
            if (G->mul(a, b) != G->mul(b, a)) central = false;
        if (central) z.push_back(a);
    }
    return Subgroup{G, std::move(z)};
}

Subgroup commutator_subgroup(const Subgroup& H) {
    const auto& G = *H.parent;
    std::set<Elem> gens;
    for (Elem h : H.members)
        for (Elem g = 0; g < G.order(); ++g) gens.insert(G.commutator(h, g));
    return subgroup_closure(H.parent, std::vector<Elem>(gens.begin(), gens.end()));
}

Subgroup power_subgroup(const Subgroup& H, int q) {
    std::set<Elem> gens;
    for (Elem h : H.members) gens.insert(H.parent->pow(h, q));
    return subgroup_closure(H.parent, std::vector<Elem>(gens.begin(), gens.end()));
}

Subgroup join(const Subgroup& A, const Subgroup& B) {
    std::vector<Elem> gens = A.members;
    gens.insert(gens.end(), B.members.begin(), B.members.end());
    return subgroup_closure(A.parent, gens);
}

std::vector<std::vector<Elem>> conjugacy_classes(GroupPtr G) {
    std::vector<char> seen(G->order(), 0);
    std::vector<std::vector<Elem>> classes;
    for (Elem x = 0; x < G->order(); ++x) {
        if (seen[x]) continue;
        std::set<Elem> cls;
        for (Elem g = 0; g < G->order(); ++g) cls.insert(G->conj(g, x));
        std::vector<Elem> v(cls.begin(), cls.end());
        for (Elem y : v) seen[y] = 1;
        classes.push_back(std::move(v));
    }
    return classes;
}

namespace {

// closure under products and conjugation by the group's generators
// (conjugation-invariance under a generating set implies full normality)
std::vector<Elem> normal_closure_members(const FiniteGroup& G, const std::vector<Elem>& gens,
                                         std::vector<Elem> seed) {
    std::vector<char> in(G.order(), 0);
    std::vector<Elem> elems;
    std::vector<Elem> work;
    auto add = [&](Elem x) {
        if (!in[x]) {
            in[x] = 1;
            elems.push_back(x);
            work.push_back(x);
        }
    };
    add(0);
    for (Elem s : seed) add(s);
    std::size_t head = 0;
    while (head < work.size()) {
        Elem x = work[head++];
        for (Elem g : gens) add(G.conj(g, x));
        add(G.inv(x));
        for (std::size_t i = 0; i < elems.size(); ++i) add(G.mul(x, elems[i]));
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

std::vector<std::vector<Elem>> normal_subgroup_members(GroupPtr G) {
    std::set<std::vector<Elem>> found;
    std::vector<std::vector<Elem>> queue;
    std::vector<Elem> triv{0};
    found.insert(triv);
    queue.push_back(triv);

    if (G->is_abelian()) {
        // every subgroup is normal; grow by single elements
        while (!queue.empty()) {
            std::vector<Elem> cur = std::move(queue.back());
            queue.pop_back();
            std::vector<char> in(G->order(), 0);
            for (Elem x : cur) in[x] = 1;
            for (Elem x = 1; x < G->order(); ++x) {
                if (in[x]) continue;
                // join with <x>: products n * x^k
                std::vector<Elem> next;
                std::vector<char> in2 = in;
                Elem xp = 0;
                int ord = G->element_order(x);
                for (int k = 0; k < ord; ++k) {
                    for (Elem n : cur) {
                        Elem y = G->mul(n, xp);
                        if (!in2[y]) {
                            in2[y] = 1;
                        }
                    }
                    xp = G->mul(xp, x);
                }
                for (Elem y = 0; y < G->order(); ++y)
                    if (in2[y]) next.push_back(y);
                if (found.insert(next).second) queue.push_back(std::move(next));
            }
        }
    } else {
        auto classes = conjugacy_classes(G);
        while (!queue.empty()) {
            std::vector<Elem> cur = std::move(queue.back());
            queue.pop_back();
            Subgroup curSg{G, cur};
            for (const auto& cls : classes) {
                if (curSg.contains(cls[0])) continue;
                std::vector<Elem> seed = cur;
                seed.push_back(cls[0]);
                auto next = normal_closure_members(*G, G->generators(), std::move(seed));
                if (found.insert(next).second) queue.push_back(std::move(next));
            }
        }
    }
    return {found.begin(), found.end()};
}

std::mutex normal_memo_mutex;
std::map<const FiniteGroup*, std::pair<GroupPtr, std::vector<std::vector<Elem>>>> normal_memo;

}  // namespace

std::vector<Subgroup> normal_subgroups(GroupPtr G) {
    {
        std::lock_guard<std::mutex> lock(normal_memo_mutex);
        auto it = normal_memo.find(G.get());
        if (it != normal_memo.end()) {
            std::vector<Subgroup> out;
            out.reserve(it->second.second.size());
            for (const auto& m : it->second.second) out.push_back(Subgroup{G, m});
            return out;
        }
    }
    auto members = normal_subgroup_members(G);
    std::sort(members.begin(), members.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    {
        std::lock_guard<std::mutex> lock(normal_memo_mutex);
        normal_memo.emplace(G.get(), std::make_pair(G, members));
    }
    std::vector<Subgroup> out;
    out.reserve(members.size());
    for (auto& m : members) out.push_back(Subgroup{G, std::move(m)});
    return out;
}

Quotient quotient(GroupPtr G, const Subgroup& N) {
    if (!is_normal(N)) throw std::invalid_argument("quotient: subgroup is not normal");
    int n = G->order();
    std::vector<Elem> cosetOf(n, -1);   // element -> coset id (by discovery)
    std::vector<Elem> reps;             // coset id -> least representative
    for (Elem x = 0; x < n; ++x) {
        if (cosetOf[x] >= 0) continue;
        // x is the least element of its coset xN since we scan in order
        Elem id = static_cast<Elem>(reps.size());
        reps.push_back(x);
        for (Elem h : N.members) cosetOf[G->mul(x, h)] = id;
    }
    int q = static_cast<int>(reps.size());
    std::vector<Elem> table(static_cast<std::size_t>(q) * q);
    for (Elem a = 0; a < q; ++a)
        for (Elem b = 0; b < q; ++b)
            table[static_cast<std::size_t>(a) * q + b] = cosetOf[G->mul(reps[a], reps[b])];
    std::vector<Elem> gens;
    for (Elem g : G->generators()) {
        Elem c = cosetOf[g];
        if (c != 0 && std::find(gens.begin(), gens.end(), c) == gens.end()) gens.push_back(c);
    }
    auto Q = std::make_shared<FiniteGroup>(q, std::move(table), std::move(gens),
                                           G->name().empty() ? std::string{}
                                                             : G->name() + "/N" + std::to_string(N.order()));
    GroupHom proj{G, Q, std::move(cosetOf)};
    return Quotient{Q, std::move(proj)};
}

EmbeddedSubgroup subgroup_as_group(const Subgroup& H) {
    int h = H.order();
    std::vector<Elem> index(H.parent->order(), -1);
    for (int i = 0; i < h; ++i) index[H.members[i]] = i;
    std::vector<Elem> table(static_cast<std::size_t>(h) * h);
    for (int a = 0; a < h; ++a)
        for (int b = 0; b < h; ++b)
            table[static_cast<std::size_t>(a) * h + b] =
                index[H.parent->mul(H.members[a], H.members[b])];
    // every element as generator keeps this simple; fine at these orders
    std::vector<Elem> gens;
    for (int i = 1; i < h; ++i) gens.push_back(i);
    auto S = std::make_shared<FiniteGroup>(h, std::move(table), std::move(gens));
    std::vector<Elem> incl(h);
    for (int i = 0; i < h; ++i) incl[i] = H.members[i];
    return EmbeddedSubgroup{S, GroupHom{S, H.parent, std::move(incl)}};
}

// -- homomorphism search ---------------------------------------------------

namespace {

// Propagate generator images over the Cayley graph; checks every edge, so a
// returned map satisfies the homomorphism law everywhere.
bool propagate_hom(const FiniteGroup& G, const FiniteGroup& H, const std::vector<Elem>& gens,
                   const std::vector<Elem>& gen_images, std::vector<Elem>& images) {
    images.assign(G.order(), -1);
    images[0] = 0;
    std::vector<Elem> work{0};
    while (!work.empty()) {
        Elem x = work.back();
        work.pop_back();
        for (std::size_t i = 0; i < gens.size(); ++i) {
            Elem y = G.mul(x, gens[i]);
            Elem img = H.mul(images[x], gen_images[i]);
            if (images[y] < 0) {
                images[y] = img;
                work.push_back(y);
            } else if (images[y] != img) {
                return false;
            }
        }
    }
    for (Elem x = 0; x < G.order(); ++x)
        if (images[x] < 0) return false;  // generators failed to generate
    return true;
}

}  // namespace

std::optional<GroupHom> extend_hom(GroupPtr G, GroupPtr H, const std::vector<Elem>& gen_images) {
    return extend_hom(G, H, G->generators(), gen_images);
}

std::optional<GroupHom> extend_hom(GroupPtr G, GroupPtr H, const std::vector<Elem>& gens,
                                   const std::vector<Elem>& gen_images) {
    if (gen_images.size() != gens.size()) throw std::invalid_argument("extend_hom: arity mismatch");
    std::vector<Elem> images;
    if (!propagate_hom(*G, *H, gens, gen_images, images)) return std::nullopt;
    GroupHom f{G, H, std::move(images)};
    if (!f.is_valid()) return std::nullopt;
    return f;
}

std::vector<GroupHom> homs(GroupPtr G, GroupPtr H, bool epi_only) {
    const auto& gens = G->generators();
    std::size_t k = gens.size();
    std::vector<GroupHom> out;
    std::vector<Elem> choice(k, 0);
    std::vector<Elem> images;
    // lexicographic enumeration over image tuples, pruned by element orders
    std::size_t pos = 0;
    if (k == 0) {
        // trivial group: the zero map
        GroupHom f{G, H, {0}};
        if (!epi_only || H->order() == 1) out.push_back(std::move(f));
        return out;
    }
    while (true) {
        if (pos == k) {
            if (propagate_hom(*G, *H, gens, choice, images)) {
                GroupHom f{G, H, images};
                if (!epi_only || f.is_surjective()) out.push_back(std::move(f));
            }
            --pos;
            ++choice[pos];
        }
        while (choice[pos] < H->order() &&
               G->element_order(gens[pos]) % H->element_order(choice[pos]) != 0)
            ++choice[pos];
        if (choice[pos] >= H->order()) {
            if (pos == 0) break;
            choice[pos] = 0;
            --pos;
            ++choice[pos];
        } else {
            ++pos;
        }
    }
    return out;
}

std::vector<int> abelian_invariants(GroupPtr G) {
    if (!G->is_abelian()) throw std::invalid_argument("abelian_invariants: group not abelian");
    // Count elements of order dividing each prime power to read off the
    // exponents of the cyclic factors, one prime at a time.
    int n = G->order();
    std::map<int, std::vector<int>> per_prime;  // p -> multiset of exponents e (factors Z/p^e)
    int rest = n;
    for (int p = 2; p <= rest; ++p) {
        if (rest % p != 0) continue;
        while (rest % p == 0) rest /= p;
        // c_k = #elements with x^(p^k) = 1
        std::vector<long long> c;
        c.push_back(1);
        for (int k = 1;; ++k) {
            long long pk = 1;
            for (int i = 0; i < k; ++i) pk *= p;
            long long cnt = 0;
            for (Elem x = 0; x < n; ++x)
                if (pk % G->element_order(x) == 0) ++cnt;
            c.push_back(cnt);
            if (cnt == c[k - 1]) break;
        }
        // n_k = #factors Z/p^e with e >= k equals log_p(c_k / c_{k-1})
        std::vector<int> nk;
        for (std::size_t k = 1; k < c.size(); ++k) {
            long long ratio = c[k] / c[k - 1];
            int cnt = 0;
            while (ratio > 1) {
                ratio /= p;
                ++cnt;
            }
            if (cnt == 0) break;
            nk.push_back(cnt);
        }
        std::vector<int> exps(nk.empty() ? 0 : nk[0], 0);
        for (std::size_t i = 0; i < exps.size(); ++i)
            for (int m : nk)
                if (m > static_cast<int>(i)) ++exps[i];
        per_prime[p] = exps;
    }
    // combine primes into invariant factors, largest first
    std::size_t len = 0;
    for (auto& [p, exps] : per_prime) len = std::max(len, exps.size());
    std::vector<int> factors(len, 1);
    for (auto& [p, exps] : per_prime)
        for (std::size_t i = 0; i < exps.size(); ++i)
            for (int e = 0; e < exps[i]; ++e) factors[i] *= p;
    return factors;
}

std::vector<Elem> abelian_basis(GroupPtr G) {
    if (!G->is_abelian()) throw std::invalid_argument("abelian_basis: group not abelian");
    std::vector<Elem> basis;
    std::vector<char> inH(G->order(), 0);
    inH[0] = 1;
    int hsize = 1;
    while (hsize < G->order()) {
        // Element with maximal order modulo the current span whose cyclic
        // group meets the span trivially (element order equals order mod
        // span); such an element exists since the span is a direct summand.
        Elem best = -1;
        int bestOrd = 0;
        for (Elem x = 0; x < G->order(); ++x) {
            if (inH[x]) continue;
            Elem y = x;
            int t = 1;
            while (!inH[y]) {
                y = G->mul(y, x);
                ++t;
            }
            if (t > bestOrd && G->element_order(x) == t) {
                bestOrd = t;
                best = x;
            }
        }
        if (best < 0) throw std::runtime_error("abelian_basis: no pure element found");
        basis.push_back(best);
        // grow span
        std::vector<Elem> members;
        for (Elem x = 0; x < G->order(); ++x)
            if (inH[x]) members.push_back(x);
        for (Elem m : members) {
            Elem y = m;
            for (int i = 1; i < G->element_order(best) + 1; ++i) {
                y = G->mul(y, best);
                if (!inH[y]) {
                    inH[y] = 1;
                    ++hsize;
                }
            }
        }
    }
    long long prod = 1;
    for (Elem b : basis) prod *= G->element_order(b);
    if (prod != G->order()) throw std::runtime_error("abelian_basis: decomposition not direct");
    std::sort(basis.begin(), basis.end(), [&](Elem a, Elem b) {
        if (G->element_order(a) != G->element_order(b))
            return G->element_order(a) > G->element_order(b);
        return a < b;
    });
    return basis;
}

GroupFingerprint fingerprint(GroupPtr G) {
    GroupFingerprint fp;
    fp.order = G->order();
    fp.exponent = G->exponent();
    fp.center_order = center(G).order();
    Subgroup derived = commutator_subgroup(whole_group(G));
    fp.derived_order = derived.order();
    auto ab = quotient(G, derived);
    fp.abelianization = abelian_invariants(ab.group);
    fp.order_multiset = G->element_order_multiset();
    return fp;
}

std::optional<GroupHom> is_isomorphic(GroupPtr A, GroupPtr B) {
    if (A->order() != B->order()) return std::nullopt;
    if (A->order() == 1) return GroupHom{A, B, {0}};
    if (!(fingerprint(A) == fingerprint(B))) return std::nullopt;
    const auto& gens = A->generators();
    std::size_t k = gens.size();
    // candidate images restricted to elements of equal order
    std::vector<std::vector<Elem>> candidates(k);
    for (std::size_t i = 0; i < k; ++i)
        for (Elem y = 0; y < B->order(); ++y)
            if (B->element_order(y) == A->element_order(gens[i])) candidates[i].push_back(y);
    std::vector<std::size_t> idx(k, 0);
    std::vector<Elem> genimg(k), images;
    std::size_t pos = 0;
    while (true) {
        if (pos == k) {
            for (std::size_t i = 0; i < k; ++i) genimg[i] = candidates[i][idx[i]];
            if (propagate_hom(*A, *B, gens, genimg, images)) {
                GroupHom f{A, B, images};
                if (f.is_injective()) return f;
            }
            --pos;
            ++idx[pos];
        }
        if (idx[pos] >= candidates[pos].size()) {
            if (pos == 0) return std::nullopt;
            idx[pos] = 0;
            --pos;
            ++idx[pos];
        } else {
            ++pos;
        }
    }
}

}  // namespace descent3
