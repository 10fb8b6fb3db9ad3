#include "grweyl/finset.hpp"

#include <algorithm>
#include <stdexcept>

namespace grweyl {

FinSet::FinSet(std::vector<std::int64_t> elems) : elems_(std::move(elems)) {
    std::sort(elems_.begin(), elems_.end());
    if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end())
        throw std::invalid_argument("FinSet: duplicate element");
}

bool FinSet::contains(std::int64_t n) const {
    return std::binary_search(elems_.begin(), elems_.end(), n);
}

FinSet fs_from_sorted(std::vector<std::int64_t> elems) {
    FinSet s;
    s.elems_ = std::move(elems);
    return s;
}

FinSet fs_xor(const FinSet& a, const FinSet& b) {
    std::vector<std::int64_t> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return fs_from_sorted(std::move(out));
}

FinSet fs_intersect(const FinSet& a, const FinSet& b) {
    std::vector<std::int64_t> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return fs_from_sorted(std::move(out));
}

FinSet fs_union(const FinSet& a, const FinSet& b) {
    std::vector<std::int64_t> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return fs_from_sorted(std::move(out));
}

FinSet fs_diff(const FinSet& a, const FinSet& b) {
    std::vector<std::int64_t> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return fs_from_sorted(std::move(out));
}

FinSet fs_translate(const FinSet& s, std::int64_t n) {
    std::vector<std::int64_t> out;
    out.reserve(s.size());
    for (std::int64_t e : s) {
        std::int64_t r;
        if (__builtin_add_overflow(e, n, &r))
            throw std::overflow_error("fs_translate: 64-bit overflow");
        out.push_back(r);
    }
    return fs_from_sorted(std::move(out));
}

FinSet fs_scale(const FinSet& s, std::int64_t n) {
    if (n != 1 && n != -1)
        throw std::invalid_argument("fs_scale: scale factor must be +1 or -1");
    if (n == 1) return s;
    std::vector<std::int64_t> out;
    out.reserve(s.size());
    for (auto it = s.elements().rbegin(); it != s.elements().rend(); ++it) {
        if (*it == INT64_MIN) throw std::overflow_error("fs_scale: 64-bit overflow");
        out.push_back(-*it);
    }
    return fs_from_sorted(std::move(out));
}

FinSet interval(std::int64_t n) {
    std::vector<std::int64_t> out;
    if (n >= 1) {
        for (std::int64_t i = 1; i <= n; ++i) out.push_back(i);
    } else if (n <= -1) {
        for (std::int64_t i = n + 1; i <= 0; ++i) out.push_back(i);
    }
    return fs_from_sorted(std::move(out));
}

int cocycle_sign(const FinSet& i, const FinSet& j) {
    return fs_intersect(i, j).size() % 2 == 0 ? 1 : -1;
}

} // namespace grweyl
