#pragma once

#include "descent3/group.hpp"

namespace descent3 {

// Descending q-central sequence: terms[0] = G, terms[i+1] generated by q-th
// powers of terms[i] and commutators [terms[i], G], computed to stabilization.
struct CentralSeries {
    GroupPtr group;
    int q = 0;
    std::vector<Subgroup> terms;

    // G^(i) with 1-based i, clamped at the stable tail
    const Subgroup& term(int i) const;
    int stable_index() const { return static_cast<int>(terms.size()); }
};

CentralSeries q_central_series(GroupPtr G, int q);

struct WQuotient {
    GroupPtr group;
    GroupHom projection;
    CentralSeries series;
};
// G / G^(3)
WQuotient w_quotient(GroupPtr G, int q);

// N^q [N, G] for a subgroup N of G
Subgroup power_commutator_term(const Subgroup& N, int q);

}  // namespace descent3
