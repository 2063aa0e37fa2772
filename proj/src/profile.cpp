#include "mwr/profile.hpp"

#include <algorithm>

namespace mwr {

CostProfile operator+(const CostProfile& a, const CostProfile& b) {
    if (a.c.size() != b.c.size())
        throw std::invalid_argument("profile dimension mismatch in +");
    CostProfile r;
    r.c.reserve(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c.push_back(a.c[i] + b.c[i]);
    return r;
}

std::strong_ordering lex_cmp(const CostProfile& a, const CostProfile& b) {
    if (a.c.size() != b.c.size())
        throw std::invalid_argument("profile dimension mismatch in lex_cmp");
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        auto cmp = a.c[i] <=> b.c[i];
        if (cmp != std::strong_ordering::equal) return cmp;
    }
    return std::strong_ordering::equal;
}

bool cw_leq(const CostProfile& a, const CostProfile& b) {
    if (a.c.size() != b.c.size())
        throw std::invalid_argument("profile dimension mismatch in cw_leq");
    for (std::size_t i = 0; i < a.c.size(); ++i)
        if (a.c[i] > b.c[i]) return false;
    return true;
}

bool leq(const CostProfile& a, const CostProfile& b, Order order) {
    if (order == Order::Lexicographic)
        return lex_cmp(a, b) != std::strong_ordering::greater;
    return cw_leq(a, b);
}

CostProfile cw_max(const CostProfile& a, const CostProfile& b) {
    if (a.c.size() != b.c.size())
        throw std::invalid_argument("profile dimension mismatch in cw_max");
    CostProfile r;
    r.c.reserve(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i)
        r.c.push_back(std::max(a.c[i], b.c[i]));
    return r;
}

std::vector<CostProfile> minimal_elements(std::vector<CostProfile> profiles,
                                          Order order) {
    if (profiles.empty()) return {};
    if (order == Order::Lexicographic) {
        CostProfile best = profiles.front();
        for (const CostProfile& p : profiles)
            if (lex_cmp(p, best) == std::strong_ordering::less) best = p;
        return {best};
    }
    // Quadratic domination scan; keeps the first copy of duplicates.
    std::vector<CostProfile> out;
    for (std::size_t i = 0; i < profiles.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < profiles.size() && !dominated; ++j) {
            if (i == j) continue;
            if (cw_leq(profiles[j], profiles[i]) &&
                !(profiles[i] == profiles[j]))
                dominated = true;
            // Tie: keep only the earliest duplicate.
            if (profiles[i] == profiles[j] && j < i) dominated = true;
        }
        if (!dominated) out.push_back(profiles[i]);
    }
    return out;
}

std::string CostProfile::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += c[i].str();
    }
    s += ")";
    return s;
}

}  // namespace mwr
