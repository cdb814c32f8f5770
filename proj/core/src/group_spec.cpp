#include "descent3/group_spec.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <stdexcept>

#include "descent3/modarith.hpp"

namespace descent3 {

int default_order_cap() {
    if (const char* env = std::getenv("DESCENT3_ORDER_CAP")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 4096;
}

namespace {

[[noreturn]] void bad_spec(const std::string& spec, const std::string& why) {
    throw std::invalid_argument("bad group spec '" + spec + "': " + why);
}

void check_cap(long long order, int cap, const std::string& spec) {
    if (order > cap)
        throw std::runtime_error("group spec '" + spec + "': order " + std::to_string(order) +
                                 " exceeds cap " + std::to_string(cap));
}

long long parse_int(const std::string& spec, const std::string& tok) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        bad_spec(spec, "expected a positive integer, got '" + tok + "'");
    long long v = std::atoll(tok.c_str());
    if (v <= 0) bad_spec(spec, "expected a positive integer, got '" + tok + "'");
    return v;
}

GroupPtr cyclic_group(int n, const std::string& name) {
    std::vector<Elem> table(static_cast<std::size_t>(n) * n);
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
    std::vector<Elem> gens;
    if (n > 1) gens.push_back(1);
    return std::make_shared<FiniteGroup>(n, std::move(table), std::move(gens), name);
}

GroupPtr elementary_group(int p, int k, const std::string& name) {
    long long n = 1;
    for (int i = 0; i < k; ++i) n *= p;
    int N = static_cast<int>(n);
    // index = sum a_i p^i, digit 0 the first coordinate
    std::vector<Elem> table(static_cast<std::size_t>(N) * N);
    for (Elem a = 0; a < N; ++a)
        for (Elem b = 0; b < N; ++b) {
            Elem x = a, y = b, out = 0, mult = 1;
            for (int i = 0; i < k; ++i) {
                out += ((x + y) % p) * mult;
                x /= p;
                y /= p;
                mult *= p;
            }
            table[static_cast<std::size_t>(a) * N + b] = out;
        }
    std::vector<Elem> gens;
    Elem e = 1;
    for (int i = 0; i < k; ++i) {
        gens.push_back(e);
        e *= p;
    }
    return std::make_shared<FiniteGroup>(N, std::move(table), std::move(gens), name);
}

GroupPtr dihedral_group(int two_n, const std::string& name) {
    int n = two_n / 2;
    // index = e*n + i for r^i s^e
    int N = two_n;
    std::vector<Elem> table(static_cast<std::size_t>(N) * N);
    auto idx = [n](int i, int e) { return e * n + i; };
    for (int i1 = 0; i1 < n; ++i1)
        for (int e1 = 0; e1 < 2; ++e1)
            for (int i2 = 0; i2 < n; ++i2)
                for (int e2 = 0; e2 < 2; ++e2) {
                    int i = e1 ? (i1 - i2 + n) % n : (i1 + i2) % n;
                    table[static_cast<std::size_t>(idx(i1, e1)) * N + idx(i2, e2)] =
                        idx(i, e1 ^ e2);
                }
    std::vector<std::string> labels(N);
    for (int i = 0; i < n; ++i)
        for (int e = 0; e < 2; ++e) {
            std::string l = i == 0 ? (e ? "s" : "1") : "r^" + std::to_string(i) + (e ? " s" : "");
            labels[idx(i, e)] = l;
        }
    return std::make_shared<FiniteGroup>(N, std::move(table), std::vector<Elem>{idx(1, 0), idx(0, 1)},
                                         name, std::move(labels));
}

GroupPtr quaternion_group(const std::string& name) {
    // index = i*4 + j for r^j s^i, with s^2 = r^2, s r = r^-1 s
    int N = 8;
    auto idx = [](int j, int i) { return i * 4 + j; };
    std::vector<Elem> table(64);
    for (int j1 = 0; j1 < 4; ++j1)
        for (int i1 = 0; i1 < 2; ++i1)
            for (int j2 = 0; j2 < 4; ++j2)
                for (int i2 = 0; i2 < 2; ++i2) {
                    int j = (j1 + (i1 ? 4 - j2 : j2) + 2 * (i1 & i2)) % 4;
                    int i = (i1 + i2) % 2;
                    table[static_cast<std::size_t>(idx(j1, i1)) * N + idx(j2, i2)] = idx(j, i);
                }
    std::vector<std::string> labels(N);
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 2; ++i) {
            std::string l = j == 0 ? (i ? "s" : "1") : "r^" + std::to_string(j) + (i ? " s" : "");
            labels[idx(j, i)] = l;
        }
    return std::make_shared<FiniteGroup>(N, std::move(table), std::vector<Elem>{idx(1, 0), idx(0, 1)},
                                         name, std::move(labels));
}

GroupPtr heisenberg_group(int p, const std::string& name) {
    // (a,b,c) ~ upper unitriangular (1 a c; 0 1 b; 0 0 1); index a p^2 + b p + c
    int N = p * p * p;
    auto idx = [p](int a, int b, int c) { return (a * p + b) * p + c; };
    std::vector<Elem> table(static_cast<std::size_t>(N) * N);
    for (int a1 = 0; a1 < p; ++a1)
        for (int b1 = 0; b1 < p; ++b1)
            for (int c1 = 0; c1 < p; ++c1)
                for (int a2 = 0; a2 < p; ++a2)
                    for (int b2 = 0; b2 < p; ++b2)
                        for (int c2 = 0; c2 < p; ++c2)
                            table[static_cast<std::size_t>(idx(a1, b1, c1)) * N + idx(a2, b2, c2)] =
                                idx((a1 + a2) % p, (b1 + b2) % p, (c1 + c2 + a1 * b2) % p);
    return std::make_shared<FiniteGroup>(
        N, std::move(table), std::vector<Elem>{idx(1, 0, 0), idx(0, 1, 0)}, name);
}

GroupPtr modular_group(int p, const std::string& name) {
    // s^i r^j with r^{p^2} = s^p = 1 and r^j s^i = s^i r^{(1+ip)j}; index i p^2 + j
    int p2 = p * p;
    int N = p * p2;
    auto idx = [p2](int i, int j) { return i * p2 + j; };
    std::vector<Elem> table(static_cast<std::size_t>(N) * N);
    for (int i1 = 0; i1 < p; ++i1)
        for (int j1 = 0; j1 < p2; ++j1)
            for (int i2 = 0; i2 < p; ++i2)
                for (int j2 = 0; j2 < p2; ++j2) {
                    int j = static_cast<int>((static_cast<long long>(1 + i2 * p) * j1 + j2) % p2);
                    table[static_cast<std::size_t>(idx(i1, j1)) * N + idx(i2, j2)] =
                        idx((i1 + i2) % p, j);
                }
    std::vector<std::string> labels(N);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p2; ++j) {
            std::string l;
            if (i) l += i == 1 ? "s" : "s^" + std::to_string(i);
            if (j) {
                if (!l.empty()) l += " ";
                l += j == 1 ? "r" : "r^" + std::to_string(j);
            }
            if (l.empty()) l = "1";
            labels[idx(i, j)] = l;
        }
    return std::make_shared<FiniteGroup>(N, std::move(table), std::vector<Elem>{idx(0, 1), idx(1, 0)},
                                         name, std::move(labels));
}

GroupPtr direct_product_impl(GroupPtr A, GroupPtr B, const std::string& name) {
    int na = A->order(), nb = B->order();
    long long N = static_cast<long long>(na) * nb;
    int n = static_cast<int>(N);
    std::vector<Elem> table(static_cast<std::size_t>(n) * n);
    for (Elem a1 = 0; a1 < na; ++a1)
        for (Elem b1 = 0; b1 < nb; ++b1)
            for (Elem a2 = 0; a2 < na; ++a2)
                for (Elem b2 = 0; b2 < nb; ++b2)
                    table[static_cast<std::size_t>(a1 * nb + b1) * n + (a2 * nb + b2)] =
                        A->mul(a1, a2) * nb + B->mul(b1, b2);
    std::vector<Elem> gens;
    for (Elem g : A->generators()) gens.push_back(g * nb);
    for (Elem g : B->generators()) gens.push_back(g);
    return std::make_shared<FiniteGroup>(n, std::move(table), std::move(gens), name);
}

GroupPtr semidirect_group(int m, int n, int k, const std::string& name) {
    if (pow_mod(k, n, m) != 1 % m)
        bad_spec(name, "semidirect action needs k^n = 1 mod m");
    int N = m * n;
    auto idx = [n](int x, int y) { return x * n + y; };
    std::vector<Elem> table(static_cast<std::size_t>(N) * N);
    for (int x1 = 0; x1 < m; ++x1)
        for (int y1 = 0; y1 < n; ++y1)
            for (int x2 = 0; x2 < m; ++x2)
                for (int y2 = 0; y2 < n; ++y2) {
                    int x = static_cast<int>((x1 + static_cast<long long>(pow_mod(k, y1, m)) * x2) % m);
                    table[static_cast<std::size_t>(idx(x1, y1)) * N + idx(x2, y2)] =
                        idx(x, (y1 + y2) % n);
                }
    return std::make_shared<FiniteGroup>(N, std::move(table), std::vector<Elem>{idx(1, 0), idx(0, 1)},
                                         name);
}

GroupPtr parse(const std::string& spec, int cap);

// direct:<spec>,<spec> with nested commas: first split where both halves parse
GroupPtr parse_direct(const std::string& spec, const std::string& args, int cap) {
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] != ',') continue;
        std::string left = args.substr(0, i), right = args.substr(i + 1);
        GroupPtr A, B;
        try {
            A = parse(left, cap);
            B = parse(right, cap);
        } catch (const std::exception&) {
            continue;
        }
        check_cap(static_cast<long long>(A->order()) * B->order(), cap, spec);
        return direct_product_impl(A, B, spec);
    }
    bad_spec(spec, "no valid split for direct product");
}

GroupPtr parse(const std::string& spec, int cap) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) bad_spec(spec, "missing ':'");
    std::string head = spec.substr(0, colon);
    std::string args = spec.substr(colon + 1);

    if (head == "cyclic") {
        long long n = parse_int(spec, args);
        check_cap(n, cap, spec);
        return cyclic_group(static_cast<int>(n), spec);
    }
    if (head == "elementary") {
        auto c2 = args.find(':');
        if (c2 == std::string::npos) bad_spec(spec, "elementary:<p>:<n>");
        long long p = parse_int(spec, args.substr(0, c2));
        long long k = parse_int(spec, args.substr(c2 + 1));
        if (!is_prime(static_cast<int>(p))) bad_spec(spec, "p must be prime");
        long long n = 1;
        for (int i = 0; i < k; ++i) {
            n *= p;
            check_cap(n, cap, spec);
        }
        return elementary_group(static_cast<int>(p), static_cast<int>(k), spec);
    }
    if (head == "dihedral") {
        long long n = parse_int(spec, args);
        if (n % 2 != 0 || n < 4) bad_spec(spec, "dihedral:<2n> with 2n >= 4 even");
        check_cap(n, cap, spec);
        return dihedral_group(static_cast<int>(n), spec);
    }
    if (head == "quaternion") {
        if (parse_int(spec, args) != 8) bad_spec(spec, "only quaternion:8 is supported");
        check_cap(8, cap, spec);
        return quaternion_group(spec);
    }
    if (head == "heisenberg") {
        long long p = parse_int(spec, args);
        if (!is_prime(static_cast<int>(p)) || p == 2) bad_spec(spec, "heisenberg:<p>, p an odd prime");
        check_cap(p * p * p, cap, spec);
        return heisenberg_group(static_cast<int>(p), spec);
    }
    if (head == "modular") {
        long long p = parse_int(spec, args);
        if (!is_prime(static_cast<int>(p))) bad_spec(spec, "modular:<p>, p prime");
        check_cap(p * p * p, cap, spec);
        return modular_group(static_cast<int>(p), spec);
    }
    if (head == "direct") return parse_direct(spec, args, cap);
    if (head == "semidirect") {
        auto c1 = args.find(',');
        auto c2 = args.find(',', c1 == std::string::npos ? std::string::npos : c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            bad_spec(spec, "semidirect:<m>,<n>,<k>");
        long long m = parse_int(spec, args.substr(0, c1));
        long long n = parse_int(spec, args.substr(c1 + 1, c2 - c1 - 1));
        long long k = parse_int(spec, args.substr(c2 + 1));
        check_cap(m * n, cap, spec);
        return semidirect_group(static_cast<int>(m), static_cast<int>(n),
                                static_cast<int>(k % m), spec);
    }
    bad_spec(spec, "unknown constructor '" + head + "'");
}

}  // namespace

GroupPtr make_group(const std::string& spec, int order_cap) { return parse(spec, order_cap); }

Elem heisenberg_t(const FiniteGroup& H) {
    return H.commutator(H.generators()[0], H.generators()[1]);
}

std::vector<CatalogEntry> catalog(int order_cap) {
    static const char* specs[] = {
        "cyclic:1",
        // 2-groups
        "cyclic:2", "cyclic:4", "cyclic:8", "cyclic:16", "cyclic:32",
        "elementary:2:2", "elementary:2:3", "elementary:2:4", "elementary:2:5", "elementary:2:6",
        "direct:cyclic:4,cyclic:2", "direct:cyclic:4,cyclic:4",
        "direct:cyclic:8,cyclic:2", "direct:cyclic:8,cyclic:4", "direct:cyclic:8,cyclic:8",
        "direct:cyclic:16,cyclic:2", "direct:cyclic:4,elementary:2:2",
        "dihedral:8", "quaternion:8", "dihedral:16",
        "semidirect:8,2,5",   // modular group of order 16
        "semidirect:8,2,3",   // semidihedral of order 16
        "direct:dihedral:8,cyclic:2", "direct:quaternion:8,cyclic:2",
        // 3-groups
        "cyclic:3", "cyclic:9", "cyclic:27", "cyclic:81", "cyclic:243",
        "elementary:3:2", "elementary:3:3", "elementary:3:4", "elementary:3:5",
        "direct:cyclic:9,cyclic:3", "direct:cyclic:9,cyclic:9",
        "direct:cyclic:27,cyclic:3", "direct:cyclic:27,cyclic:9",
        "direct:cyclic:81,cyclic:3", "direct:cyclic:9,elementary:3:2",
        "heisenberg:3", "modular:3",
        "direct:heisenberg:3,cyclic:3", "direct:modular:3,cyclic:3",
        "semidirect:9,9,4",    // Z/9 x| Z/9, sigma tau sigma^-1 = tau^4
        "semidirect:27,3,10",  // modular group of order 81
        "semidirect:27,9,4",
        // 5-groups
        "cyclic:5", "cyclic:25", "cyclic:125", "elementary:5:2",
        "direct:cyclic:25,cyclic:5", "heisenberg:5", "modular:5",
    };
    // shared instances so the per-group caches stay warm across callers
    static std::mutex mu;
    static std::vector<CatalogEntry> full;
    std::lock_guard<std::mutex> lock(mu);
    if (full.empty())
        for (const char* s : specs) full.push_back(CatalogEntry{s, make_group(s, 4096)});
    std::vector<CatalogEntry> out;
    for (const auto& e : full)
        if (e.group->order() <= order_cap) out.push_back(e);
    return out;
}

}  // namespace descent3
