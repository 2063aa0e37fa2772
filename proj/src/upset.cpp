#include "mwr/upset.hpp"

#include <algorithm>
#include <stdexcept>

namespace mwr {

std::vector<CostProfile> minimize(std::vector<CostProfile> profiles) {
    return minimal_elements(std::move(profiles), Order::Componentwise);
}

static std::vector<CostProfile> canon(std::vector<CostProfile> gens) {
    gens = minimize(std::move(gens));
    std::sort(gens.begin(), gens.end(), LexLess{});
    return gens;
}

UpSet UpSet::top(int dim) {
    UpSet u;
    u.dim_ = dim;
    u.gens_ = {CostProfile::top(dim)};
    return u;
}

UpSet UpSet::single(CostProfile p) {
    UpSet u;
    u.dim_ = p.dim();
    u.gens_ = {std::move(p)};
    return u;
}

UpSet UpSet::from(std::vector<CostProfile> gens) {
    if (gens.empty())
        throw std::invalid_argument("UpSet requires at least one generator");
    UpSet u;
    u.dim_ = gens.front().dim();
    for (const CostProfile& g : gens)
        if (g.dim() != u.dim_)
            throw std::invalid_argument("mixed dimensions in UpSet");
    u.gens_ = canon(std::move(gens));
    return u;
}

bool UpSet::contains(const CostProfile& x) const {
    for (const CostProfile& g : gens_)
        if (cw_leq(g, x)) return true;
    return false;
}

UpSet unite(const UpSet& a, const UpSet& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("UpSet dim mismatch");
    std::vector<CostProfile> gens = a.gens_;
    gens.insert(gens.end(), b.gens_.begin(), b.gens_.end());
    UpSet u;
    u.dim_ = a.dim_;
    u.gens_ = canon(std::move(gens));
    return u;
}

UpSet intersect(const UpSet& a, const UpSet& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("UpSet dim mismatch");
    // Pairwise joins generate the intersection of the closures.
    std::vector<CostProfile> gens;
    gens.reserve(a.gens_.size() * b.gens_.size());
    for (const CostProfile& x : a.gens_)
        for (const CostProfile& y : b.gens_) gens.push_back(cw_max(x, y));
    UpSet u;
    u.dim_ = a.dim_;
    u.gens_ = canon(std::move(gens));
    return u;
}

UpSet translate(const UpSet& a, const CostProfile& w) {
    if (!w.is_finite())
        throw std::invalid_argument("translate by non-finite profile");
    UpSet u;
    u.dim_ = a.dim_;
    u.gens_.reserve(a.gens_.size());
    for (const CostProfile& g : a.gens_) u.gens_.push_back(g + w);
    // Translation preserves incomparability and the sort key order.
    return u;
}

}  // namespace mwr
