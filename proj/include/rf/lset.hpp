#ifndef RF_LSET_HPP
#define RF_LSET_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "rf/errors.hpp"

namespace rf {

// Arithmetic progression start, start+step, ..., start+(length-1)*step.
// length 1 is allowed; its step is normalized to 0.
struct APDesc {
    std::int64_t start = 0;
    std::int64_t step = 0;
    std::int64_t length = 0;

    std::vector<std::int64_t> elements() const {
        std::vector<std::int64_t> r;
        r.reserve(static_cast<std::size_t>(length));
        for (std::int64_t i = 0; i < length; ++i) r.push_back(start + i * step);
        return r;
    }
    std::int64_t max() const { return start + (length - 1) * step; }

    bool operator==(const APDesc& o) const {
        return start == o.start && step == o.step && length == o.length;
    }
};

// Longest arithmetic progression contained in a sorted set of distinct
// integers. Ties go to the lexicographically least (start, step).
inline APDesc longest_ap_in(const std::vector<std::int64_t>& sorted) {
    APDesc best{0, 0, 0};
    const std::size_t n = sorted.size();
    if (n == 0) return best;
    best = APDesc{sorted[0], 0, 1};
    if (n == 1) return best;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            std::int64_t d = sorted[j] - sorted[i];
            std::int64_t len = 2, next = sorted[j] + d;
            while (std::binary_search(sorted.begin(), sorted.end(), next)) {
                ++len;
                next += d;
            }
            if (len > best.length ||
                (len == best.length &&
                 (sorted[i] < best.start || (sorted[i] == best.start && d < best.step)))) {
                best = APDesc{sorted[i], d, len};
            }
        }
    }
    return best;
}

// A finite index set together with its AP-richness certificate: the
// longest arithmetic progression it contains. This is the finite
// surrogate for "van der Waerden set" used throughout.
class LSet {
public:
    LSet() = default;
    explicit LSet(std::vector<std::int64_t> values) : vals_(std::move(values)) {
        std::sort(vals_.begin(), vals_.end());
        vals_.erase(std::unique(vals_.begin(), vals_.end()), vals_.end());
        cert_ = longest_ap_in(vals_);
    }

    const std::vector<std::int64_t>& values() const { return vals_; }
    bool empty() const { return vals_.empty(); }
    std::size_t size() const { return vals_.size(); }
    std::int64_t min() const {
        if (vals_.empty()) throw DomainError("min of empty index set");
        return vals_.front();
    }
    std::int64_t max() const {
        if (vals_.empty()) throw DomainError("max of empty index set");
        return vals_.back();
    }
    bool contains(std::int64_t v) const {
        return std::binary_search(vals_.begin(), vals_.end(), v);
    }

    // richness = length of the longest contained AP
    const APDesc& richness_cert() const { return cert_; }
    std::int64_t richness() const { return cert_.length; }

    LSet restrict_greater(std::int64_t bound) const {
        std::vector<std::int64_t> r;
        for (auto v : vals_)
            if (v > bound) r.push_back(v);
        return LSet(std::move(r));
    }

    LSet restrict_geq(std::int64_t bound) const {
        std::vector<std::int64_t> r;
        for (auto v : vals_)
            if (v >= bound) r.push_back(v);
        return LSet(std::move(r));
    }

    bool is_subset_of(const LSet& other) const {
        for (auto v : vals_)
            if (!other.contains(v)) return false;
        return true;
    }

    // All APs of a given length contained in the set, in lexicographic
    // (start, step) order. length >= 2; step >= 1.
    std::vector<APDesc> aps_of_length(std::int64_t len) const {
        std::vector<APDesc> out;
        if (len <= 0) return out;
        if (len == 1) {
            for (auto v : vals_) out.push_back(APDesc{v, 0, 1});
            return out;
        }
        for (auto a : vals_) {
            std::int64_t dmax = vals_.empty() ? 0 : (max() - a) / (len - 1);
            for (std::int64_t d = 1; d <= dmax; ++d) {
                bool ok = true;
                for (std::int64_t i = 1; i < len && ok; ++i)
                    ok = contains(a + i * d);
                if (ok) out.push_back(APDesc{a, d, len});
            }
        }
        std::sort(out.begin(), out.end(), [](const APDesc& x, const APDesc& y) {
            if (x.start != y.start) return x.start < y.start;
            return x.step < y.step;
        });
        return out;
    }

private:
    std::vector<std::int64_t> vals_;
    APDesc cert_{0, 0, 0};
};

} // namespace rf

#endif
