#pragma once

// Definitional Archimedean-equivalence oracle: the existential over n is
// searched through a doubling probe sequence capped at 1000 (monotonicity of
// n |h| in n makes the probe equivalent to scanning every n <= 1000).

#include <vector>

#include "isotype/ordgroups.hpp"

namespace isotype::testing {

// compare |g| against n*|h| lexicographically (descending support walk)
// without materializing n*|h|.
inline Ordering compare_abs_scaled(const GroupElement& gabs, unsigned long n,
                                   const GroupElement& habs) {
    const OrderExpr& order = gabs.index_order();
    auto gi = gabs.entries().rbegin(), ge = gabs.entries().rend();
    auto hi = habs.entries().rbegin(), he = habs.entries().rend();
    while (gi != ge || hi != he) {
        if (hi == he) return Ordering::GT;  // g has a higher supported index
        if (gi == ge) return Ordering::LT;
        Ordering at = compare(order, gi->first, hi->first);
        if (at == Ordering::GT) return Ordering::GT;
        if (at == Ordering::LT) return Ordering::LT;
        Rational scaled = hi->second * Rational(static_cast<long>(n));
        int c = cmp(gi->second, scaled);
        if (c != 0) return c < 0 ? Ordering::LT : Ordering::GT;
        ++gi, ++hi;
    }
    return Ordering::EQ;
}

// Exists n <= 1000 with |g| <= n |h|.
inline bool bounded_dominated(const GroupElement& gabs, const GroupElement& habs) {
    for (unsigned long n : {1UL, 2UL, 4UL, 8UL, 16UL, 32UL, 64UL, 128UL, 256UL, 512UL, 1000UL}) {
        if (compare_abs_scaled(gabs, n, habs) != Ordering::GT) return true;
    }
    return false;
}

// The defining disjunction, evaluated on precomputed absolute values.
inline bool arch_equiv_oracle(const GroupElement& gabs, const GroupElement& habs) {
    Ordering c = compare(gabs, habs);
    if (c != Ordering::LT && bounded_dominated(gabs, habs)) return true;   // |h| <= |g| branch
    if (c != Ordering::GT && bounded_dominated(habs, gabs)) return true;   // |g| <= |h| branch
    return false;
}

// Every window element: supports inside `indices`, coefficients from
// `coefficients` (absence included), zero element first.
inline std::vector<GroupElement> window_elements(const OrderExpr& order,
                                                 const std::vector<Element>& indices,
                                                 const std::vector<Rational>& coefficients) {
    std::vector<GroupElement> out;
    std::size_t options = coefficients.size() + 1;
    std::size_t total = 1;
    for (std::size_t i = 0; i < indices.size(); ++i) total *= options;
    out.reserve(total);
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t rest = code;
        std::vector<std::pair<Element, Rational>> entries;
        for (const auto& index : indices) {
            std::size_t pick = rest % options;
            rest /= options;
            if (pick > 0) entries.emplace_back(index, coefficients[pick - 1]);
        }
        out.emplace_back(order, std::move(entries));
    }
    return out;
}

}  // namespace isotype::testing
