#pragma once

#include <cstdint>
#include <vector>

namespace grweyl {

/// A finite subset of the integers. These form an abelian group under
/// symmetric difference in which every element has order <= 2; they serve
/// as the grading group on the commutative side.
class FinSet {
public:
    FinSet() = default;
    /// Sorts its input; throws std::invalid_argument on duplicate entries.
    explicit FinSet(std::vector<std::int64_t> elems);

    static FinSet singleton(std::int64_t n) { return FinSet({n}); }

    const std::vector<std::int64_t>& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    bool contains(std::int64_t n) const;

    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    friend bool operator==(const FinSet&, const FinSet&) = default;
    // Lexicographic on the sorted element list; a deterministic total order
    // used for map keys and printing, nothing more.
    friend bool operator<(const FinSet& a, const FinSet& b) { return a.elems_ < b.elems_; }

private:
    std::vector<std::int64_t> elems_; // strictly increasing

    friend FinSet fs_from_sorted(std::vector<std::int64_t> elems);
};

FinSet fs_xor(const FinSet& a, const FinSet& b);
FinSet fs_intersect(const FinSet& a, const FinSet& b);
FinSet fs_union(const FinSet& a, const FinSet& b);
FinSet fs_diff(const FinSet& a, const FinSet& b);

/// Pointwise n + J. Throws std::overflow_error if any sum leaves 64-bit range.
FinSet fs_translate(const FinSet& s, std::int64_t n);

/// Pointwise n * J for n in {+1, -1} only; anything else is rejected
/// (general scaling does not act on the grading group).
FinSet fs_scale(const FinSet& s, std::int64_t n);

/// The interval [n]: {1,...,n} for n >= 1, {} for n = 0, {n+1,...,0} for n <= -1.
FinSet interval(std::int64_t n);

/// (-1)^{|I cap J|}, the 2-cocycle attached to orientation-reversing
/// almost-automorphisms.
int cocycle_sign(const FinSet& i, const FinSet& j);

} // namespace grweyl
