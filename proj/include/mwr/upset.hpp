#pragma once
/*
 * Upward-closed subsets of (N u {inf})^d, stored as their antichain of
 * minimal generators.  Generators are kept sorted lexicographically so that
 * equality of sets is plain structural equality — the fixpoint loop leans on
 * that for its stabilization test.
 *
 * The empty antichain is deliberately unrepresentable: "nothing ensured yet"
 * is the singleton {all-inf profile}, whose upward closure is itself.
 */

#include <vector>

#include "mwr/profile.hpp"

namespace mwr {

// Componentwise-minimal, deduplicated sublist (quadratic scan).
std::vector<CostProfile> minimize(std::vector<CostProfile> profiles);

class UpSet {
public:
    // {all-inf profile}: the top/empty-knowledge element.
    static UpSet top(int dim);
    static UpSet single(CostProfile p);
    // Minimizes and sorts; input must be nonempty with uniform dimension.
    static UpSet from(std::vector<CostProfile> gens);

    int dim() const { return dim_; }
    const std::vector<CostProfile>& generators() const { return gens_; }

    bool contains(const CostProfile& x) const;

    friend UpSet unite(const UpSet& a, const UpSet& b);
    friend UpSet intersect(const UpSet& a, const UpSet& b);
    friend UpSet translate(const UpSet& a, const CostProfile& w);

    friend bool operator==(const UpSet& a, const UpSet& b) = default;

private:
    UpSet() = default;
    int dim_ = 0;
    std::vector<CostProfile> gens_;  // sorted lex, pairwise incomparable
};

UpSet unite(const UpSet& a, const UpSet& b);
UpSet intersect(const UpSet& a, const UpSet& b);
UpSet translate(const UpSet& a, const CostProfile& w);

}  // namespace mwr
