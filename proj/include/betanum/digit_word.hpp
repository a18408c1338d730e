#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

namespace betanum {

// An eventually periodic infinite digit word pre . per^w. An empty period
// means a finite word padded with 0^w.
struct PeriodicWord {
    std::vector<int> pre, per;

    int at(size_t i) const {
        if (i < pre.size()) return pre[i];
        if (per.empty()) return 0;
        return per[(i - pre.size()) % per.size()];
    }

    size_t period_len() const { return per.empty() ? 1 : per.size(); }

    // The word with the first i letters dropped; still eventually periodic.
    PeriodicWord suffix(size_t i) const {
        if (i <= pre.size()) return {std::vector<int>(pre.begin() + i, pre.end()), per};
        if (per.empty()) return {{}, {}};
        size_t k = (i - pre.size()) % per.size();
        std::vector<int> rot(per.begin() + k, per.end());
        rot.insert(rot.end(), per.begin(), per.begin() + k);
        return {{}, std::move(rot)};
    }
};

// Lexicographic comparison of two eventually periodic words. Agreement up to
// max-preperiod + lcm(periods) positions is permanent; the extra max-period
// positions are harmless slack.
inline int lex_compare(const PeriodicWord& a, const PeriodicWord& b) {
    size_t pa = a.period_len(), pb = b.period_len();
    size_t horizon = std::max(a.pre.size(), b.pre.size()) + std::lcm(pa, pb) + std::max(pa, pb);
    for (size_t i = 0; i < horizon; ++i) {
        int da = a.at(i), db = b.at(i);
        if (da != db) return da < db ? -1 : 1;
    }
    return 0;
}

// Shared digit-string rendering: digits space-separated when any exceeds 9,
// contiguous otherwise.
inline std::string render_digits(const std::vector<int>& digits, bool force_spaces) {
    bool spaces = force_spaces;
    for (int d : digits)
        if (d > 9) spaces = true;
    std::string out;
    for (size_t i = 0; i < digits.size(); ++i) {
        if (spaces && i > 0) out += ' ';
        out += std::to_string(digits[i]);
    }
    return out;
}

}  // namespace betanum
