/* lasso.cpp -- lasso canonicalization and enumeration */

#include "gfgaut/lasso.hpp"

#include <algorithm>
#include <set>

namespace gfgaut {

LassoWord LassoWord::make(std::vector<LetterId> prefix, std::vector<LetterId> period) {
    if (period.empty()) throw Error("lasso period must be nonempty");
    // primitive period
    for (size_t d = 1; d <= period.size() / 2; ++d) {
        if (period.size() % d != 0) continue;
        bool pow = true;
        for (size_t i = d; i < period.size() && pow; ++i)
            if (period[i] != period[i % d]) pow = false;
        if (pow) {
            period.resize(d);
            break;
        }
    }
    // roll the prefix back into the period
    while (!prefix.empty() && prefix.back() == period.back()) {
        prefix.pop_back();
        std::rotate(period.begin(), period.end() - 1, period.end());
    }
    LassoWord w;
    w.prefix = std::move(prefix);
    w.period = std::move(period);
    return w;
}

std::vector<LassoWord> enumerate_lassos(uint32_t num_letters, uint32_t max_prefix,
                                        uint32_t max_period) {
    std::set<LassoWord> seen;
    std::vector<LassoWord> out;
    std::vector<std::vector<LetterId>> prefixes = enumerate_words(num_letters, max_prefix);
    std::vector<std::vector<LetterId>> periods = enumerate_words(num_letters, max_period);
    for (const auto& v : periods) {
        if (v.empty()) continue;
        for (const auto& u : prefixes) {
            LassoWord w = LassoWord::make(u, v);
            if (seen.insert(w).second) out.push_back(w);
        }
    }
    return out;
}

std::vector<std::vector<LetterId>> enumerate_words(uint32_t num_letters, uint32_t max_len) {
    std::vector<std::vector<LetterId>> out;
    out.push_back({});
    size_t level_begin = 0;
    for (uint32_t len = 1; len <= max_len; ++len) {
        size_t level_end = out.size();
        for (size_t i = level_begin; i < level_end; ++i) {
            for (LetterId a = 0; a < num_letters; ++a) {
                auto w = out[i];
                w.push_back(a);
                out.push_back(std::move(w));
            }
        }
        level_begin = level_end;
    }
    return out;
}

} // namespace gfgaut
