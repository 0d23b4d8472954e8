/* lasso.hpp -- ultimately periodic words u.v^w in canonical form */

#pragma once

#include "gfgaut/condition.hpp"

#include <string>
#include <vector>

namespace gfgaut {

/// An ultimately periodic word u.v^w. Canonical: the period is
/// primitive (not a proper power) and the prefix is rolled back (while
/// the prefix ends with the last period letter, that letter is rotated
/// into the period), so equal words get equal representations.
struct LassoWord {
    std::vector<LetterId> prefix;
    std::vector<LetterId> period;

    static LassoWord make(std::vector<LetterId> prefix, std::vector<LetterId> period);

    LetterId at(size_t i) const {
        if (i < prefix.size()) return prefix[i];
        return period[(i - prefix.size()) % period.size()];
    }
    size_t loop_start() const { return prefix.size(); }
    size_t total_length() const { return prefix.size() + period.size(); }

    friend bool operator==(const LassoWord& a, const LassoWord& b) {
        return a.prefix == b.prefix && a.period == b.period;
    }
    friend bool operator<(const LassoWord& a, const LassoWord& b) {
        if (a.prefix != b.prefix) return a.prefix < b.prefix;
        return a.period < b.period;
    }
};

/// All canonical lassos with |u| <= max_prefix and 1 <= |v| <= max_period
/// over an alphabet of `num_letters` letters, deduplicated, in a stable order.
std::vector<LassoWord> enumerate_lassos(uint32_t num_letters, uint32_t max_prefix,
                                        uint32_t max_period);

/// All finite words of length <= max_len (including the empty word).
std::vector<std::vector<LetterId>> enumerate_words(uint32_t num_letters, uint32_t max_len);

} // namespace gfgaut
