#include "descent3/central_series.hpp"

#include <stdexcept>

namespace descent3 {

const Subgroup& CentralSeries::term(int i) const {
    if (i < 1) throw std::invalid_argument("central series term index is 1-based");
    std::size_t k = static_cast<std::size_t>(i) - 1;
    if (k >= terms.size()) k = terms.size() - 1;
    return terms[k];
}

Subgroup power_commutator_term(const Subgroup& N, int q) {
    return join(power_subgroup(N, q), commutator_subgroup(N));
}

CentralSeries q_central_series(GroupPtr G, int q) {
    CentralSeries s;
    s.group = G;
    s.q = q;
    s.terms.push_back(whole_group(G));
    while (true) {
        Subgroup next = power_commutator_term(s.terms.back(), q);
        if (next.members == s.terms.back().members) break;
        s.terms.push_back(std::move(next));
    }
    return s;
}

WQuotient w_quotient(GroupPtr G, int q) {
    CentralSeries s = q_central_series(G, q);
    Quotient quo = quotient(G, s.term(3));
    return WQuotient{quo.group, std::move(quo.projection), std::move(s)};
}

}  // namespace descent3
