#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "descent3/cohomology.hpp"

namespace descent3 {

namespace {

std::string key_of(const std::vector<Res>& v) {
    return std::string(reinterpret_cast<const char*>(v.data()), v.size());
}

std::vector<Res> add_vec(const std::vector<Res>& a, const std::vector<Res>& b, int m) {
    std::vector<Res> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<Res>((a[i] + b[i]) % m);
    return out;
}

bool is_zero_vec(const std::vector<Res>& v) {
    return std::all_of(v.begin(), v.end(), [](Res x) { return x == 0; });
}

}  // namespace

namespace {

// Z^2(G, Z/m) as a kernel lattice. The cocycle identity restricted to triples
// (g, y, z) with g a generator implies the full identity for normalized
// cochains (induction on the word length of the first slot).
KernelLattice cocycle_lattice(const FiniteGroup& G, int m) {
    int n = G.order();
    int W = (n - 1) * (n - 1);
    KernelLattice lat(m, std::max(W, 1));
    auto cidx = [n](Elem a, Elem b) { return (a - 1) * (n - 1) + (b - 1); };
    std::vector<std::pair<int, int>> entries;
    for (Elem g : G.generators()) {
        for (Elem y = 1; y < n; ++y) {
            Elem gy = G.mul(g, y);
            for (Elem z = 1; z < n; ++z) {
                Elem yz = G.mul(y, z);
                entries.clear();
                entries.emplace_back(cidx(y, z), 1);
                if (gy != 0) entries.emplace_back(cidx(gy, z), m - 1);
                if (yz != 0) entries.emplace_back(cidx(g, yz), 1);
                entries.emplace_back(cidx(g, y), m - 1);
                std::sort(entries.begin(), entries.end());
                std::vector<std::pair<int, int>> merged;
                for (auto& e : entries) {
                    if (!merged.empty() && merged.back().first == e.first)
                        merged.back().second = (merged.back().second + e.second) % m;
                    else
                        merged.push_back(e);
                }
                merged.erase(std::remove_if(merged.begin(), merged.end(),
                                            [m](auto& e) { return e.second % m == 0; }),
                             merged.end());
                if (!merged.empty()) lat.constrain(merged);
            }
        }
    }
    return lat;
}

}  // namespace

long long h2_order(GroupPtr G, int m) {
    int p = 0, d = 0;
    if (!is_prime_power(m, p, d))
        throw std::invalid_argument("h2_order: modulus must be a prime power");
    int n = G->order();
    if (n == 1) return 1;
    auto lat = cocycle_lattice(*G, m);
    long long z2_log = lat.size_log(p);
    long long z1 = h1(G, m).size();
    long long z1_log = 0;
    while (z1 > 1) {
        z1 /= p;
        ++z1_log;
    }
    long long h2_log = z2_log - (static_cast<long long>(d) * (n - 1) - z1_log);
    long long out = 1;
    for (long long i = 0; i < h2_log; ++i) out *= p;
    return out;
}

std::vector<Cochain2> h2_class_generators(GroupPtr G, int m) {
    GroupCohomology ws(G, m);
    std::vector<Cochain2> out;
    if (G->order() == 1) return out;
    auto lat = cocycle_lattice(*G, m);
    std::set<std::string> seen;
    for (auto& g : lat.generators()) {
        auto r = ws.echelon().reduce(g);
        if (std::all_of(r.begin(), r.end(), [](Res v) { return v == 0; })) continue;
        if (seen.insert(key_of(r)).second) out.push_back(ws.expand(r));
    }
    return out;
}

H2Structure::H2Structure(GroupPtr G, int m, long long enum_cap) : m_(m), ws_(G, m) {
    int n = G->order();
    if (n > 64)
        throw std::runtime_error("h2: group order " + std::to_string(n) +
                                 " exceeds the H2 computation cap (64)");
    int W = (n - 1) * (n - 1);
    if (n == 1) {
        order_ = 1;
        return;
    }

    KernelLattice lat = cocycle_lattice(*G, m_);

    // size sanity: |H^2| = |Z^2| / |B^2| for prime-power m
    int p = 0, d = 0;
    long long expected_log = -1;
    if (is_prime_power(m_, p, d)) {
        long long z2_log = lat.size_log(p);
        long long z1 = h1(G, m_).size();  // |Z^1| = |Hom(G, Z/m)|
        long long z1_log = 0;
        while (z1 > 1) {
            z1 /= p;
            ++z1_log;
        }
        long long b2_log = static_cast<long long>(d) * (n - 1) - z1_log;
        expected_log = z2_log - b2_log;
        long long cap_log = 0, cl = 1;
        while (cl < enum_cap) {
            cl *= p;
            ++cap_log;
        }
        if (expected_log > cap_log)
            throw std::runtime_error("h2: |H^2| exceeds the enumeration cap");
    }

    // generators of H^2 = Z^2 / B^2 as canonical residues
    std::vector<std::vector<Res>> residues;
    std::set<std::string> seen;
    for (auto& g : lat.generators()) {
        auto r = ws_.echelon().reduce(g);
        if (is_zero_vec(r)) continue;
        if (seen.insert(key_of(r)).second) residues.push_back(std::move(r));
    }

    if (residues.empty()) {
        order_ = 1;
        if (expected_log > 0) throw std::runtime_error("h2: size bookkeeping mismatch (trivial)");
        residue_to_coords_[key_of(std::vector<Res>(W, 0))] = {};
        return;
    }

    // breadth-first closure of the quotient group, tracking generator coords
    int K = static_cast<int>(residues.size());
    std::vector<std::vector<Res>> elems{std::vector<Res>(W, 0)};
    std::vector<std::vector<int>> gcoords{std::vector<int>(K, 0)};
    std::unordered_map<std::string, int> index;
    index[key_of(elems[0])] = 0;
    std::set<std::vector<int>> relations;
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (int i = 0; i < K; ++i) {
            auto s = ws_.echelon().reduce(add_vec(elems[head], residues[i], m_));
            auto c = gcoords[head];
            c[i] += 1;
            auto it = index.find(key_of(s));
            if (it == index.end()) {
                if (static_cast<long long>(elems.size()) >= enum_cap)
                    throw std::runtime_error("h2: |H^2| exceeds the enumeration cap");
                index[key_of(s)] = static_cast<int>(elems.size());
                elems.push_back(std::move(s));
                gcoords.push_back(std::move(c));
            } else {
                // relation: c - coords(existing) vanishes in the quotient
                std::vector<int> rel(K);
                bool nz = false;
                for (int t = 0; t < K; ++t) {
                    rel[t] = mod_norm(c[t] - gcoords[it->second][t], m_);
                    nz = nz || rel[t];
                }
                if (nz) relations.insert(std::move(rel));
            }
        }
    }
    order_ = static_cast<long long>(elems.size());
    if (expected_log >= 0) {
        long long got = 0, o = order_;
        while (o > 1) {
            o /= p;
            ++got;
        }
        long long check = 1;
        for (long long i = 0; i < got; ++i) check *= p;
        if (check != order_ || got != expected_log)
            throw std::runtime_error("h2: size bookkeeping mismatch");
    }

    // Smith form of the relation lattice -> invariant factors and basis.
    // Pre-reduce the harvested relations mod m; the lifted Howell rows plus
    // m*e_i generate the integer relation lattice.
    ModEchelon relEch(m_, K);
    for (const auto& rel : relations) {
        std::vector<Res> r(K);
        for (int t = 0; t < K; ++t) r[t] = static_cast<Res>(rel[t]);
        relEch.insert(std::move(r));
    }
    std::vector<std::vector<long long>> relMat;
    for (std::size_t i = 0; i < relEch.row_count(); ++i) {
        const auto& row = relEch.row_values(i);
        relMat.emplace_back(row.begin(), row.end());
    }
    for (int i = 0; i < K; ++i) {
        std::vector<long long> r(K, 0);
        r[i] = m_;
        relMat.push_back(std::move(r));
    }
    SmithResult snf = smith_normal_form(std::move(relMat), true);

    long long check_order = 1;
    for (std::size_t j = 0; j < snf.diagonal.size(); ++j) {
        long long dj = snf.diagonal[j];
        if (dj <= 1) continue;
        // basis element: combination sum_i Q[j][i] * residues[i]
        std::vector<Res> acc(W, 0);
        for (int i = 0; i < K; ++i) {
            int coef = mod_norm(snf.Q[j][i], m_);
            if (!coef) continue;
            for (int w = 0; w < W; ++w)
                acc[w] = static_cast<Res>((acc[w] + coef * residues[i][w]) % m_);
        }
        auto b = ws_.echelon().reduce(acc);
        if (is_zero_vec(b)) throw std::runtime_error("h2: basis candidate vanished");
        basis_.push_back(ws_.expand(b));
        factors_.push_back(static_cast<int>(dj));
        check_order *= dj;
    }
    if (check_order != order_) throw std::runtime_error("h2: invariant factors do not match |H^2|");
    // largest factor first
    std::vector<std::size_t> idx(factors_.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return factors_[a] > factors_[b]; });
    std::vector<Cochain2> nb;
    std::vector<int> nf;
    for (std::size_t i : idx) {
        nb.push_back(basis_[i]);
        nf.push_back(factors_[i]);
    }
    basis_ = std::move(nb);
    factors_ = std::move(nf);

    // coordinate table: canonical residue of every coordinate tuple
    std::vector<std::vector<Res>> cbasis;
    for (const auto& b : basis_) cbasis.push_back(ws_.compress(b));
    std::vector<int> c(factors_.size(), 0);
    for (long long t = 0; t < order_; ++t) {
        std::vector<Res> acc(W, 0);
        for (std::size_t j = 0; j < factors_.size(); ++j) {
            if (!c[j]) continue;
            for (int w = 0; w < W; ++w)
                acc[w] = static_cast<Res>((acc[w] + c[j] * cbasis[j][w]) % m_);
        }
        auto r = ws_.echelon().reduce(acc);
        auto [it, fresh] = residue_to_coords_.emplace(key_of(r), c);
        if (!fresh) throw std::runtime_error("h2: coordinate tuples collide");
        for (std::size_t i = c.size(); i-- > 0;) {
            if (++c[i] < factors_[i]) break;
            c[i] = 0;
        }
    }
    if (static_cast<long long>(residue_to_coords_.size()) != order_)
        throw std::runtime_error("h2: coordinate table incomplete");
}

H2Structure::Decomposition H2Structure::decompose(const Cochain2& c) const {
    if (!is_2cocycle(c)) throw std::invalid_argument("h2 decompose: input is not a 2-cocycle");
    auto coords = class_coordinates(c);
    Cochain2 rest = c;
    for (std::size_t j = 0; j < basis_.size(); ++j)
        if (coords[j]) rest = add(rest, scale(basis_[j], m_ - coords[j]));
    auto witness = ws_.coboundary_witness(rest);
    if (!witness) throw std::runtime_error("h2 decompose: residue is not a coboundary");
    return Decomposition{std::move(coords), std::move(*witness)};
}

std::vector<int> H2Structure::class_coordinates(const Cochain2& c) const {
    auto r = ws_.class_residue(c);
    auto it = residue_to_coords_.find(key_of(r));
    if (it == residue_to_coords_.end())
        throw std::runtime_error("h2: residue not in the class table (not a cocycle?)");
    return it->second;
}

Cochain2 H2Structure::combine(const std::vector<int>& coords) const {
    if (coords.size() != basis_.size()) throw std::invalid_argument("h2 combine: arity");
    Cochain2 out = zero_cochain2(ws_.group(), m_);
    for (std::size_t j = 0; j < basis_.size(); ++j)
        if (mod_norm(coords[j], factors_[j]))
            out = add(out, scale(basis_[j], mod_norm(coords[j], m_)));
    return out;
}

}  // namespace descent3
