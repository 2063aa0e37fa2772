#pragma once
/*
 * Cost profiles: fixed-dimension tuples over the naturals extended with
 * infinity.  Addition saturates at infinity.  Two orders matter throughout:
 * the total lexicographic order and the componentwise (Pareto) order.
 */

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mwr {

// A natural number or infinity.  Infinity is a distinguished state of the
// type rather than a reserved integer, so arithmetic stays honest.
class ExtNat {
public:
    constexpr ExtNat() = default;
    constexpr ExtNat(std::uint64_t v) : value_(v) {}

    static constexpr ExtNat inf() {
        ExtNat e;
        e.infinite_ = true;
        return e;
    }

    constexpr bool is_inf() const { return infinite_; }

    constexpr std::uint64_t finite() const {
        if (infinite_) throw std::logic_error("finite() on infinity");
        return value_;
    }

    friend constexpr ExtNat operator+(ExtNat a, ExtNat b) {
        if (a.infinite_ || b.infinite_) return inf();
        return ExtNat(a.value_ + b.value_);
    }

    friend constexpr bool operator==(ExtNat a, ExtNat b) {
        if (a.infinite_ != b.infinite_) return false;
        return a.infinite_ || a.value_ == b.value_;
    }

    friend constexpr std::strong_ordering operator<=>(ExtNat a, ExtNat b) {
        if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
        if (a.infinite_) return std::strong_ordering::greater;
        if (b.infinite_) return std::strong_ordering::less;
        return a.value_ <=> b.value_;
    }

    std::string str() const {
        return infinite_ ? "inf" : std::to_string(value_);
    }

private:
    std::uint64_t value_ = 0;
    bool infinite_ = false;
};

enum class Order { Lexicographic, Componentwise };

struct CostProfile {
    std::vector<ExtNat> c;

    CostProfile() = default;
    explicit CostProfile(std::vector<ExtNat> v) : c(std::move(v)) {}
    CostProfile(std::initializer_list<ExtNat> v) : c(v) {}

    static CostProfile zero(int d) { return CostProfile(std::vector<ExtNat>(d)); }
    static CostProfile top(int d) {
        return CostProfile(std::vector<ExtNat>(d, ExtNat::inf()));
    }

    int dim() const { return static_cast<int>(c.size()); }

    bool is_finite() const {
        for (ExtNat x : c)
            if (x.is_inf()) return false;
        return true;
    }

    bool is_top() const {
        for (ExtNat x : c)
            if (!x.is_inf()) return false;
        return !c.empty();
    }

    ExtNat operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

    friend CostProfile operator+(const CostProfile& a, const CostProfile& b);
    friend bool operator==(const CostProfile& a, const CostProfile& b) = default;

    std::string str() const;
};

CostProfile operator+(const CostProfile& a, const CostProfile& b);

// Total lexicographic comparison; throws on dimension mismatch.
std::strong_ordering lex_cmp(const CostProfile& a, const CostProfile& b);

// Componentwise partial order (a <= b on every component).
bool cw_leq(const CostProfile& a, const CostProfile& b);

// a precedes b under the requested order (non-strict).
bool leq(const CostProfile& a, const CostProfile& b, Order order);

// Componentwise maximum (join); used when intersecting upward closures and
// when merging worst-case outcomes.
CostProfile cw_max(const CostProfile& a, const CostProfile& b);

// Minimal elements of a list under the given order, deduplicated.  Under the
// lexicographic order the result is a singleton (or empty for empty input).
std::vector<CostProfile> minimal_elements(std::vector<CostProfile> profiles,
                                          Order order);

// Strict total order used for canonical storage and map keys.
struct LexLess {
    bool operator()(const CostProfile& a, const CostProfile& b) const {
        return lex_cmp(a, b) == std::strong_ordering::less;
    }
};

}  // namespace mwr
