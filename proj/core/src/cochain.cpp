#include "descent3/cochain.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace descent3 {

namespace {

void check_pair(const Cochain1& a, const Cochain1& b) {
    if (a.modulus != b.modulus) throw std::invalid_argument("cochain modulus mismatch");
    if (a.group->order() != b.group->order() || a.group->table() != b.group->table())
        throw std::invalid_argument("cochain group mismatch");
}

void check_pair(const Cochain2& a, const Cochain2& b) {
    if (a.modulus != b.modulus) throw std::invalid_argument("cochain modulus mismatch");
    if (a.group->order() != b.group->order() || a.group->table() != b.group->table())
        throw std::invalid_argument("cochain group mismatch");
}

}  // namespace

bool Cochain1::is_zero() const {
    return std::all_of(values.begin(), values.end(), [](Res v) { return v == 0; });
}

bool Cochain1::is_homomorphism() const {
    int n = group->order();
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            if ((values[x] + values[y]) % modulus != values[group->mul(x, y)]) return false;
    return true;
}

bool Cochain2::is_zero() const {
    return std::all_of(values.begin(), values.end(), [](Res v) { return v == 0; });
}

Cochain1 zero_cochain1(GroupPtr G, int m) {
    return Cochain1{G, m, std::vector<Res>(G->order(), 0)};
}

Cochain2 zero_cochain2(GroupPtr G, int m) {
    return Cochain2{G, m, std::vector<Res>(static_cast<std::size_t>(G->order()) * G->order(), 0)};
}

Cochain1 add(const Cochain1& a, const Cochain1& b) {
    check_pair(a, b);
    Cochain1 out = a;
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] = static_cast<Res>((a.values[i] + b.values[i]) % a.modulus);
    return out;
}

Cochain1 negate(const Cochain1& a) { return scale(a, a.modulus - 1); }

Cochain1 scale(const Cochain1& a, int c) {
    Cochain1 out = a;
    c = mod_norm(c, a.modulus);
    for (auto& v : out.values) v = static_cast<Res>(v * c % a.modulus);
    return out;
}

Cochain2 add(const Cochain2& a, const Cochain2& b) {
    check_pair(a, b);
    Cochain2 out = a;
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] = static_cast<Res>((a.values[i] + b.values[i]) % a.modulus);
    return out;
}

Cochain2 negate(const Cochain2& a) { return scale(a, a.modulus - 1); }

Cochain2 scale(const Cochain2& a, int c) {
    Cochain2 out = a;
    c = mod_norm(c, a.modulus);
    for (auto& v : out.values) v = static_cast<Res>(v * c % a.modulus);
    return out;
}

Cochain2 d1(const Cochain1& f) {
    int n = f.group->order();
    Cochain2 out = zero_cochain2(f.group, f.modulus);
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            int v = f.values[x] + f.values[y] + (f.modulus - f.values[f.group->mul(x, y)]);
            out.at(x, y) = static_cast<Res>(v % f.modulus);
        }
    return out;
}

bool is_2cocycle(const Cochain2& c) {
    int n = c.group->order();
    int m = c.modulus;
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            for (Elem z = 0; z < n; ++z) {
                int v = c(y, z) + c(x, c.group->mul(y, z)) + (m - c(c.group->mul(x, y), z)) +
                        (m - c(x, y));
                if (v % m != 0) return false;
            }
    return true;
}

Cochain2 cup(const Cochain1& psi, const Cochain1& psi2) {
    check_pair(psi, psi2);
    int n = psi.group->order();
    Cochain2 out = zero_cochain2(psi.group, psi.modulus);
    for (Elem x = 0; x < n; ++x) {
        if (!psi.values[x]) continue;
        for (Elem y = 0; y < n; ++y)
            out.at(x, y) = static_cast<Res>(psi.values[x] * psi2.values[y] % psi.modulus);
    }
    return out;
}

Cochain2 bockstein(const Cochain1& psi, int n) {
    if (!psi.is_homomorphism()) throw std::invalid_argument("bockstein: input is not a homomorphism");
    int m = psi.modulus;
    long long mn = static_cast<long long>(m) * n;
    if (mn > 255) throw std::invalid_argument("bockstein: lift modulus too large");
    int N = psi.group->order();
    Cochain2 out = zero_cochain2(psi.group, n);
    for (Elem x = 0; x < N; ++x)
        for (Elem y = 0; y < N; ++y) {
            // least lifts mod mn; the deficiency lies in m*(Z/mn) ~ Z/n
            long long v = psi.values[x] + psi.values[y] - psi.values[psi.group->mul(x, y)];
            long long w = mod_norm(v, static_cast<int>(mn));
            if (w % m != 0) throw std::runtime_error("bockstein: lift deficiency not divisible");
            out.at(x, y) = static_cast<Res>((w / m) % n);
        }
    return out;
}

Cochain1 restrict_cochain(const Cochain1& f, const GroupHom& inclusion) {
    Cochain1 out = zero_cochain1(inclusion.domain, f.modulus);
    for (Elem x = 0; x < inclusion.domain->order(); ++x) out.values[x] = f.values[inclusion.images[x]];
    return out;
}

Cochain2 restrict_cochain(const Cochain2& c, const GroupHom& inclusion) {
    Cochain2 out = zero_cochain2(inclusion.domain, c.modulus);
    for (Elem x = 0; x < inclusion.domain->order(); ++x)
        for (Elem y = 0; y < inclusion.domain->order(); ++y)
            out.at(x, y) = c(inclusion.images[x], inclusion.images[y]);
    return out;
}

Cochain1 inflate_cochain(const Cochain1& f, const GroupHom& proj) {
    Cochain1 out = zero_cochain1(proj.domain, f.modulus);
    for (Elem x = 0; x < proj.domain->order(); ++x) out.values[x] = f.values[proj.images[x]];
    return out;
}

Cochain2 inflate_cochain(const Cochain2& c, const GroupHom& proj) {
    Cochain2 out = zero_cochain2(proj.domain, c.modulus);
    for (Elem x = 0; x < proj.domain->order(); ++x)
        for (Elem y = 0; y < proj.domain->order(); ++y)
            out.at(x, y) = c(proj.images[x], proj.images[y]);
    return out;
}

std::string cochain_to_json(const Cochain2& c) {
    nlohmann::ordered_json j;
    j["group_spec"] = c.group->name();
    j["modulus"] = c.modulus;
    j["values"] = c.values;
    return j.dump();
}

std::string cochain_to_json(const Cochain1& f) {
    nlohmann::ordered_json j;
    j["group_spec"] = f.group->name();
    j["modulus"] = f.modulus;
    j["values"] = f.values;
    return j.dump();
}

}  // namespace descent3
