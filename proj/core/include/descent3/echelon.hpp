#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "descent3/modarith.hpp"

namespace descent3 {

// Row span over Z/m kept in Howell form: one row per pivot column, zeros left
// of the pivot, leading entries divisors of m, and the span closed under
// annihilator multiples. Membership and canonical residues are exact for any
// modulus; with finalize() residues are unique coset representatives.
//
// Rows optionally carry a transform vector: row = (combination of the
// inserted generators given by the transform), which reduce() accumulates so
// callers can recover explicit witnesses.
class ModEchelon {
public:
    ModEchelon(int modulus, int width, int transform_width = 0);

    void insert(std::vector<Res> v, std::vector<Res> aux = {});

    // Canonical residue of v modulo the span. If aux_out is non-null it
    // receives u with  v = sum_i u_i * generator_i + residue.
    std::vector<Res> reduce(std::vector<Res> v, std::vector<Res>* aux_out = nullptr) const;

    bool contains(const std::vector<Res>& v) const;
    void finalize();  // reduce above-pivot entries; residues become canonical

    int modulus() const { return m_; }
    int width() const { return width_; }
    std::size_t row_count() const { return rows_.size(); }
    const std::vector<Res>& row_values(std::size_t i) const { return rows_[i].v; }
    // log_p |span| when m = p^e
    long long span_size_log(int p) const;

private:
    struct Row {
        int pivot;
        std::vector<Res> v;
        std::vector<Res> aux;
    };
    void axpy(std::vector<Res>& dst, int c, const std::vector<Res>& src, int from) const;
    void scale(std::vector<Res>& v, int c) const;
    int first_nonzero(const std::vector<Res>& v, int from) const;

    int m_;
    int width_;
    int twidth_;
    std::vector<Row> rows_;          // sorted by pivot
    std::vector<int> row_at_col_;    // col -> index into rows_, or -1
};

// Generating set of {x in (Z/m)^W : r.x = 0 mod m for every constraint r},
// refined one sparse constraint at a time. Storage is slice-major so the
// constraint evaluation is a handful of contiguous AXPYs.
class KernelLattice {
public:
    KernelLattice(int modulus, int width);

    // entries: (coordinate, coefficient) pairs, coordinates distinct
    void constrain(const std::vector<std::pair<int, int>>& entries);

    int rank() const { return rank_; }
    std::vector<std::vector<Res>> generators() const;  // nonzero columns
    // log_p of the current lattice size for m = p^e
    long long size_log(int p) const;

private:
    void drop_slot(int k);

    int m_;
    int width_;
    int rank_;
    std::vector<Res> mat_;        // width_ slices of stride_ bytes; mat_[j*stride_+i] = g_i[j]
    int stride_;
    long long lost_log_ = 0;      // sum of val_p(m/g) over effective constraints
    int log_p_base_ = 0;          // set lazily by size_log
};

// Dense integer Smith normal form for small matrices: diagonal entries
// d_1 | d_2 | ... (non-negative). With want_q, Q holds the inverse of the
// accumulated column transform, row-wise: when A's rows present relations on
// generators g_1..g_k, row j of Q gives a combination of the g_i of order
// diagonal[j] in the quotient, and these combinations form a basis.
struct SmithResult {
    std::vector<long long> diagonal;
    std::vector<std::vector<long long>> Q;
};
SmithResult smith_normal_form(std::vector<std::vector<long long>> A, bool want_q = false);

}  // namespace descent3
