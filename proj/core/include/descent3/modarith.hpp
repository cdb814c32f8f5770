#pragma once

#include <cstdint>
#include <stdexcept>

namespace descent3 {

// Residues throughout the library fit in a byte (moduli are small prime
// powers; the largest lift used by the connecting maps is 4*4 = 16).
using Res = std::uint8_t;

inline long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// ax + by = gcd(a,b), gcd returned non-negative.
inline long long egcd_ll(long long a, long long b, long long& x, long long& y) {
    if (b == 0) {
        x = (a < 0) ? -1 : 1;
        y = 0;
        return a < 0 ? -a : a;
    }
    long long x1, y1;
    long long g = egcd_ll(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

inline int mod_norm(long long a, int m) {
    long long r = a % m;
    if (r < 0) r += m;
    return static_cast<int>(r);
}

inline int inv_mod(int a, int m) {
    long long x, y;
    long long g = egcd_ll(mod_norm(a, m), m, x, y);
    if (g != 1) throw std::runtime_error("inv_mod: not a unit");
    return mod_norm(x, m);
}

inline int pow_mod(long long a, long long e, int m) {
    long long r = 1, b = mod_norm(a, m);
    while (e > 0) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return static_cast<int>(r);
}

inline bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// n = p^d with p prime, d >= 1.
inline bool is_prime_power(int n, int& p, int& d) {
    if (n < 2) return false;
    int q = n;
    for (int f = 2; f * f <= q; ++f) {
        if (q % f == 0) {
            p = f;
            d = 0;
            while (q % f == 0) {
                q /= f;
                ++d;
            }
            return q == 1;
        }
    }
    p = n;
    d = 1;
    return true;
}

// largest e with p^e | a (a != 0)
inline int val_p(int a, int p) {
    int v = 0;
    while (a % p == 0) {
        a /= p;
        ++v;
    }
    return v;
}

// Multiply a by a unit so the result is gcd(a, m); returns that unit.
// Every residue class mod m is unit * divisor-of-m.
inline int unit_normalizer(int a, int m) {
    a = mod_norm(a, m);
    int g = static_cast<int>(gcd_ll(a, m));
    if (g == 0) return 1;
    int w = inv_mod(a / g, m / g);
    // lift w to a unit mod m (some w + k*(m/g) is coprime to m)
    for (int k = 0;; ++k) {
        int cand = mod_norm(w + static_cast<long long>(k) * (m / g), m);
        if (gcd_ll(cand, m) == 1) return cand;
    }
}

}  // namespace descent3
