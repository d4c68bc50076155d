#include "rpm/suffix_array.hpp"

#include <algorithm>

namespace rpm {

namespace {

// Nong-Zhang-Chan SA-IS. is_s[i] marks S-type suffixes; bucket_l[c] / bucket_s[c]
// are the first slots of the L- and S-parts of bucket c.
void sais_core(std::span<const index_t> s, index_t upper, std::vector<index_t>& sa) {
    const index_t n = static_cast<index_t>(s.size());
    sa.assign(static_cast<std::size_t>(n), -1);
    if (n == 0) return;
    if (n == 1) {
        sa[0] = 0;
        return;
    }
    if (n == 2) {
        if (s[0] < s[1]) {
            sa[0] = 0;
            sa[1] = 1;
        } else {
            sa[0] = 1;
            sa[1] = 0;
        }
        return;
    }

    std::vector<bool> is_s(static_cast<std::size_t>(n), false);
    for (index_t i = n - 2; i >= 0; --i)
        is_s[i] = (s[i] == s[i + 1]) ? is_s[i + 1] : (s[i] < s[i + 1]);

    std::vector<index_t> bucket_l(static_cast<std::size_t>(upper) + 2, 0);
    std::vector<index_t> bucket_s(static_cast<std::size_t>(upper) + 2, 0);
    for (index_t i = 0; i < n; ++i) {
        if (!is_s[i])
            ++bucket_s[s[i]];
        else
            ++bucket_l[s[i] + 1];
    }
    for (index_t c = 0; c <= upper; ++c) {
        bucket_s[c] += bucket_l[c];
        if (c < upper) bucket_l[c + 1] += bucket_s[c];
    }

    std::vector<index_t> cursor(static_cast<std::size_t>(upper) + 2);
    auto induce = [&](std::span<const index_t> lms) {
        std::fill(sa.begin(), sa.end(), -1);
        std::copy(bucket_s.begin(), bucket_s.end(), cursor.begin());
        for (index_t d : lms) {
            if (d == n) continue;
            sa[cursor[s[d]]++] = d;
        }
        std::copy(bucket_l.begin(), bucket_l.end(), cursor.begin());
        sa[cursor[s[n - 1]]++] = n - 1;
        for (index_t i = 0; i < n; ++i) {
            index_t v = sa[i];
            if (v >= 1 && !is_s[v - 1]) sa[cursor[s[v - 1]]++] = v - 1;
        }
        std::copy(bucket_l.begin(), bucket_l.end(), cursor.begin());
        for (index_t i = n - 1; i >= 0; --i) {
            index_t v = sa[i];
            if (v >= 1 && is_s[v - 1]) sa[--cursor[s[v - 1] + 1]] = v - 1;
        }
    };

    std::vector<index_t> lms_rank(static_cast<std::size_t>(n) + 1, -1);
    std::vector<index_t> lms;
    for (index_t i = 1; i < n; ++i) {
        if (!is_s[i - 1] && is_s[i]) {
            lms_rank[i] = static_cast<index_t>(lms.size());
            lms.push_back(i);
        }
    }
    const index_t m = static_cast<index_t>(lms.size());

    induce(lms);

    if (m == 0) return;

    std::vector<index_t> sorted_lms;
    sorted_lms.reserve(static_cast<std::size_t>(m));
    for (index_t v : sa)
        if (lms_rank[v] != -1) sorted_lms.push_back(v);

    // Name LMS substrings; equal names mean identical LMS substrings.
    std::vector<index_t> reduced(static_cast<std::size_t>(m));
    index_t names = 0;
    reduced[lms_rank[sorted_lms[0]]] = 0;
    for (index_t i = 1; i < m; ++i) {
        index_t l = sorted_lms[i - 1];
        index_t r = sorted_lms[i];
        index_t end_l = (lms_rank[l] + 1 < m) ? lms[lms_rank[l] + 1] : n;
        index_t end_r = (lms_rank[r] + 1 < m) ? lms[lms_rank[r] + 1] : n;
        bool same = true;
        if (end_l - l != end_r - r) {
            same = false;
        } else {
            while (l < end_l && s[l] == s[r]) {
                ++l;
                ++r;
            }
            if (l == n || s[l] != s[r]) same = false;
        }
        if (!same) ++names;
        reduced[lms_rank[sorted_lms[i]]] = names;
    }

    std::vector<index_t> reduced_sa;
    sais_core(reduced, names, reduced_sa);
    for (index_t i = 0; i < m; ++i) sorted_lms[i] = lms[reduced_sa[i]];
    induce(sorted_lms);
}

}  // namespace

std::vector<index_t> suffix_array_sais(std::span<const index_t> s, index_t upper) {
    std::vector<index_t> sa;
    sais_core(s, upper, sa);
    return sa;
}

std::vector<index_t> suffix_array(const Text& text) {
    std::vector<index_t> s(text.bytes().begin(), text.bytes().end());
    return suffix_array_sais(s, 255);
}

std::vector<index_t> lcp_array_kasai(std::span<const std::uint8_t> text, std::span<const index_t> sa,
                                     std::span<const index_t> isa) {
    const index_t n = static_cast<index_t>(sa.size());
    std::vector<index_t> lcp(static_cast<std::size_t>(n), 0);
    index_t h = 0;
    for (index_t i = 0; i < n; ++i) {
        const index_t rank = isa[i];
        if (rank == 0) {
            h = 0;
            continue;
        }
        const index_t j = sa[rank - 1];
        while (i + h < n && j + h < n && text[i + h] == text[j + h]) ++h;
        lcp[rank] = h;
        if (h > 0) --h;
    }
    return lcp;
}

}  // namespace rpm
