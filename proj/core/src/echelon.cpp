#include "descent3/echelon.hpp"

#include <algorithm>
#include <stdexcept>

namespace descent3 {

ModEchelon::ModEchelon(int modulus, int width, int transform_width)
    : m_(modulus), width_(width), twidth_(transform_width), row_at_col_(width, -1) {
    if (m_ < 2 || m_ > 255) throw std::invalid_argument("ModEchelon: modulus out of range");
}

int ModEchelon::first_nonzero(const std::vector<Res>& v, int from) const {
    for (int j = from; j < width_; ++j)
        if (v[j]) return j;
    return width_;
}

void ModEchelon::axpy(std::vector<Res>& dst, int c, const std::vector<Res>& src, int from) const {
    if (c == 0) return;
    int m = m_;
    for (int j = from; j < static_cast<int>(src.size()); ++j) {
        if (!src[j]) continue;
        dst[j] = static_cast<Res>((dst[j] + c * src[j]) % m);
    }
}

void ModEchelon::scale(std::vector<Res>& v, int c) const {
    for (auto& x : v) x = static_cast<Res>(x * c % m_);
}

void ModEchelon::insert(std::vector<Res> v, std::vector<Res> aux) {
    if (static_cast<int>(v.size()) != width_) throw std::invalid_argument("ModEchelon: width");
    if (twidth_ && aux.empty()) aux.assign(twidth_, 0);
    for (auto& x : v) x = static_cast<Res>(x % m_);

    int j = first_nonzero(v, 0);
    while (j < width_) {
        int at = row_at_col_[j];
        if (at < 0) {
            // new pivot: normalize lead to a divisor of m, insert, close span
            int u = unit_normalizer(v[j], m_);
            scale(v, u);
            if (twidth_) scale(aux, u);
            int lead = v[j];
            Row row{j, v, aux};
            rows_.push_back(row);
            std::sort(rows_.begin(), rows_.end(),
                      [](const Row& a, const Row& b) { return a.pivot < b.pivot; });
            for (std::size_t i = 0; i < rows_.size(); ++i) row_at_col_[rows_[i].pivot] = static_cast<int>(i);
            if (m_ / lead > 1 && m_ % lead == 0) {
                // annihilator multiple keeps the span Howell-closed
                std::vector<Res> w = row.v;
                std::vector<Res> waux = row.aux;
                int c = m_ / lead;
                scale(w, c);
                if (twidth_) scale(waux, c);
                if (first_nonzero(w, 0) < width_) insert(std::move(w), std::move(waux));
            }
            return;
        }
        Row& R = rows_[at];
        int d = R.v[j];
        int e = v[j];
        if (e % d == 0) {
            int c = m_ - e / d;  // subtract (e/d) * R
            axpy(v, c, R.v, j);
            if (twidth_) axpy(aux, c, R.aux, 0);
        } else {
            // unimodular 2x2: (C, v') = ((s,t),(-(e/g), d/g)) * (R, v)
            long long s, t;
            long long g = egcd_ll(d, e, s, t);
            int si = mod_norm(s, m_), ti = mod_norm(t, m_);
            std::vector<Res> C(width_, 0), Caux;
            if (twidth_) Caux.assign(twidth_, 0);
            axpy(C, si, R.v, j);
            axpy(C, ti, v, j);
            if (twidth_) {
                axpy(Caux, si, R.aux, 0);
                axpy(Caux, ti, aux, 0);
            }
            std::vector<Res> v2(width_, 0), v2aux;
            if (twidth_) v2aux.assign(twidth_, 0);
            int c1 = mod_norm(-(e / g), m_), c2 = mod_norm(d / g, m_);
            axpy(v2, c1, R.v, j);
            axpy(v2, c2, v, j);
            if (twidth_) {
                axpy(v2aux, c1, R.aux, 0);
                axpy(v2aux, c2, aux, 0);
            }
            // normalize the replacement row and re-close the span
            int u = unit_normalizer(C[j], m_);
            scale(C, u);
            if (twidth_) scale(Caux, u);
            int lead = C[j];
            R.v = std::move(C);
            R.aux = std::move(Caux);
            v = std::move(v2);
            aux = std::move(v2aux);
            if (m_ / lead > 1 && m_ % lead == 0) {
                std::vector<Res> w = rows_[at].v;
                std::vector<Res> waux = rows_[at].aux;
                int c = m_ / lead;
                scale(w, c);
                if (twidth_) scale(waux, c);
                if (first_nonzero(w, 0) < width_) insert(std::move(w), std::move(waux));
            }
        }
        j = first_nonzero(v, j);
    }
}

std::vector<Res> ModEchelon::reduce(std::vector<Res> v, std::vector<Res>* aux_out) const {
    if (aux_out) aux_out->assign(twidth_, 0);
    for (auto& x : v) x = static_cast<Res>(x % m_);
    for (const Row& R : rows_) {
        int e = v[R.pivot];
        if (!e) continue;
        int d = R.v[R.pivot];
        int c = e / d;  // leave e mod d behind (canonical after finalize)
        if (!c) continue;
        axpy(v, m_ - c, R.v, R.pivot);
        if (aux_out) axpy(*aux_out, c, R.aux, 0);
    }
    return v;
}

bool ModEchelon::contains(const std::vector<Res>& v) const {
    auto r = reduce(v);
    return first_nonzero(r, 0) == width_;
}

void ModEchelon::finalize() {
    // reduce entries above each pivot so residues are canonical
    for (int i = static_cast<int>(rows_.size()) - 1; i >= 0; --i) {
        for (int k = 0; k < i; ++k) {
            Row& upper = rows_[k];
            const Row& lower = rows_[i];
            int e = upper.v[lower.pivot];
            if (!e) continue;
            int c = e / lower.v[lower.pivot];
            if (!c) continue;
            axpy(upper.v, m_ - c, lower.v, lower.pivot);
            if (twidth_) axpy(upper.aux, m_ - c, lower.aux, 0);
        }
    }
}

long long ModEchelon::span_size_log(int p) const {
    long long total = 0;
    for (const Row& r : rows_) {
        int lead = r.v[r.pivot];
        int q = m_ / lead;
        total += val_p(q, p);
    }
    return total;
}

// -- KernelLattice ---------------------------------------------------------

KernelLattice::KernelLattice(int modulus, int width)
    : m_(modulus), width_(width), rank_(width), stride_(width) {
    if (m_ < 2 || m_ > 255) throw std::invalid_argument("KernelLattice: modulus out of range");
    mat_.assign(static_cast<std::size_t>(width_) * stride_, 0);
    for (int i = 0; i < width_; ++i) mat_[static_cast<std::size_t>(i) * stride_ + i] = 1;
    int p = 0, d = 0;
    if (is_prime_power(m_, p, d)) log_p_base_ = p;
}

void KernelLattice::drop_slot(int k) {
    int last = rank_ - 1;
    if (k != last) {
        for (int j = 0; j < width_; ++j) {
            Res* row = &mat_[static_cast<std::size_t>(j) * stride_];
            row[k] = row[last];
        }
    }
    rank_ = last;
}

void KernelLattice::constrain(const std::vector<std::pair<int, int>>& entries) {
    if (rank_ == 0) return;
    // v_i = sum_j c_j * g_i[j] over the sparse entries
    std::vector<int> v(rank_, 0);
    for (auto [j, c] : entries) {
        c = mod_norm(c, m_);
        if (!c) continue;
        const Res* row = &mat_[static_cast<std::size_t>(j) * stride_];
        for (int i = 0; i < rank_; ++i) v[i] = (v[i] + c * row[i]) % m_;
    }
    long long g = m_;
    for (int i = 0; i < rank_; ++i) g = gcd_ll(g, v[i]);
    if (g == m_) return;  // constraint already satisfied

    // pivot: a slot whose value generates the same ideal as the whole tuple
    int k = -1;
    for (int i = 0; i < rank_; ++i)
        if (v[i] && gcd_ll(v[i], m_) == g) {
            k = i;
            break;
        }
    if (k < 0) {
        // composite modulus corner: combine two slots unimodularly until the
        // gcd is attained by one of them
        for (int a = 0; a < rank_ && k < 0; ++a) {
            if (!v[a]) continue;
            for (int b = a + 1; b < rank_ && k < 0; ++b) {
                if (!v[b]) continue;
                long long s, t;
                long long g0 = egcd_ll(v[a], v[b], s, t);
                int si = mod_norm(s, m_), ti = mod_norm(t, m_);
                int ca = mod_norm(-(v[b] / g0), m_), cb = mod_norm(v[a] / g0, m_);
                for (int j = 0; j < width_; ++j) {
                    Res* row = &mat_[static_cast<std::size_t>(j) * stride_];
                    int xa = row[a], xb = row[b];
                    row[a] = static_cast<Res>((si * xa + ti * xb) % m_);
                    row[b] = static_cast<Res>((ca * xa + cb * xb) % m_);
                }
                v[a] = mod_norm(g0, m_);
                v[b] = 0;
                if (gcd_ll(v[a], m_) == g) k = a;
            }
        }
        if (k < 0) return;  // all slots merged to zero; nothing to do
    }

    // make the pivot value exactly g via a unit
    int u = unit_normalizer(v[k], m_);
    if (u != 1) {
        for (int j = 0; j < width_; ++j) {
            Res* row = &mat_[static_cast<std::size_t>(j) * stride_];
            row[k] = static_cast<Res>(row[k] * u % m_);
        }
        v[k] = static_cast<int>(g);
    }

    // coefficients c_i = v_i / g (exact since g | v_i)
    std::vector<int> coef(rank_, 0);
    for (int i = 0; i < rank_; ++i)
        if (i != k && v[i]) coef[i] = mod_norm(m_ - v[i] / static_cast<int>(g), m_);

    // rank-1 update g_i += c_i * g_k, then scale slot k by m/g
    int scale_k = static_cast<int>(m_ / g);
    bool mask4 = (m_ & (m_ - 1)) == 0;  // power-of-two modulus
    int mask = m_ - 1;
    for (int j = 0; j < width_; ++j) {
        Res* row = &mat_[static_cast<std::size_t>(j) * stride_];
        int pv = row[k];
        if (pv) {
            if (mask4) {
                for (int i = 0; i < rank_; ++i) row[i] = static_cast<Res>((row[i] + pv * coef[i]) & mask);
            } else {
                for (int i = 0; i < rank_; ++i) row[i] = static_cast<Res>((row[i] + pv * coef[i]) % m_);
            }
        }
        row[k] = static_cast<Res>(pv * scale_k % m_);
    }
    // exact size bookkeeping: the functional's image on the lattice was the
    // ideal (g), so the refinement divided the lattice size by m/g
    if (log_p_base_) lost_log_ += val_p(static_cast<int>(m_ / g), log_p_base_);

    // drop the scaled slot if it became the zero vector
    bool zero = true;
    for (int j = 0; j < width_ && zero; ++j)
        if (mat_[static_cast<std::size_t>(j) * stride_ + k]) zero = false;
    if (zero) drop_slot(k);
}

std::vector<std::vector<Res>> KernelLattice::generators() const {
    std::vector<std::vector<Res>> out;
    for (int i = 0; i < rank_; ++i) {
        std::vector<Res> g(width_);
        bool nz = false;
        for (int j = 0; j < width_; ++j) {
            g[j] = mat_[static_cast<std::size_t>(j) * stride_ + i];
            nz = nz || g[j];
        }
        if (nz) out.push_back(std::move(g));
    }
    return out;
}

long long KernelLattice::size_log(int p) const {
    int pp = 0, dd = 0;
    if (!is_prime_power(m_, pp, dd) || pp != p)
        throw std::invalid_argument("KernelLattice::size_log: modulus is not a power of p");
    return static_cast<long long>(dd) * width_ - lost_log_;
}

// -- integer Smith normal form ----------------------------------------------

// Column operations A <- A*V are mirrored on Vinv by the inverse row
// operations, so Vinv rows express the new column basis in the old one:
// row j of Vinv gives the coefficients whose generator combination has
// elementary divisor diagonal[j] in the quotient presented by A's rows.
SmithResult smith_normal_form(std::vector<std::vector<long long>> A, bool want_q) {
    std::size_t rows = A.size();
    std::size_t cols = rows ? A[0].size() : 0;
    SmithResult res;
    std::vector<std::vector<long long>> Vinv;
    if (want_q) {
        Vinv.assign(cols, std::vector<long long>(cols, 0));
        for (std::size_t i = 0; i < cols; ++i) Vinv[i][i] = 1;
    }
    std::size_t n = std::min(rows, cols);
    for (std::size_t t = 0; t < n; ++t) {
        while (true) {
            std::size_t pi = t, pj = t;
            long long best = 0;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    long long a = A[i][j] < 0 ? -A[i][j] : A[i][j];
                    if (a != 0 && (best == 0 || a < best)) {
                        best = a;
                        pi = i;
                        pj = j;
                    }
                }
            if (best == 0) break;
            std::swap(A[t], A[pi]);
            if (pj != t) {
                for (std::size_t i = 0; i < rows; ++i) std::swap(A[i][t], A[i][pj]);
                if (want_q) std::swap(Vinv[t], Vinv[pj]);
            }
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                long long q = A[i][t] / A[t][t];
                if (q)
                    for (std::size_t j = t; j < cols; ++j) A[i][j] -= q * A[t][j];
                if (A[i][t]) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                long long q = A[t][j] / A[t][t];
                if (q) {
                    for (std::size_t i = 0; i < rows; ++i) A[i][j] -= q * A[i][t];
                    // col_j -= q col_t  =>  Vinv: row_t += q row_j
                    if (want_q)
                        for (std::size_t r = 0; r < cols; ++r) Vinv[t][r] += q * Vinv[j][r];
                }
                if (A[t][j]) clean = false;
            }
            if (!clean) continue;
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols && divides; ++j)
                    if (A[i][j] % A[t][t] != 0) {
                        // col_t += col_j  =>  Vinv: row_j -= row_t
                        for (std::size_t r = 0; r < rows; ++r) A[r][t] += A[r][j];
                        if (want_q)
                            for (std::size_t r = 0; r < cols; ++r) Vinv[j][r] -= Vinv[t][r];
                        divides = false;
                    }
            if (divides) break;
        }
    }
    res.diagonal.resize(n);
    for (std::size_t t = 0; t < n; ++t) res.diagonal[t] = A[t][t] < 0 ? -A[t][t] : A[t][t];
    if (want_q) res.Q = std::move(Vinv);
    return res;
}

}  // namespace descent3
