#include "rpm/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <string>

#include "rpm/dp_baseline.hpp"

namespace rpm::oracle {

namespace {

std::int64_t parse_int(const std::string& s) {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size() || v < 0) throw std::invalid_argument("RPM_ORACLE_CAP: bad value '" + s + "'");
    return v;
}

std::int64_t binomial(std::int64_t n, std::int64_t r) {
    std::int64_t out = 1;
    for (std::int64_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
    return out;
}

void check_caps(index_t n, index_t k, const OracleCaps& caps) {
    if (n > caps.max_n)
        throw CapExceeded("oracle: text length " + std::to_string(n) + " exceeds cap " + std::to_string(caps.max_n));
    if (k > std::min(caps.max_k, OracleCaps::hard_max_k))
        throw CapExceeded("oracle: k=" + std::to_string(k) + " exceeds cap " +
                          std::to_string(std::min(caps.max_k, OracleCaps::hard_max_k)));
}

// Calls visit(positions) for every subset of [0, n) of size at most k;
// stops early when visit returns false. Returns false iff stopped.
template <typename Visit>
bool for_each_subset(index_t n, index_t k, Visit&& visit) {
    std::vector<index_t> chosen;
    auto rec = [&](auto&& self, index_t from) -> bool {
        if (!visit(std::as_const(chosen))) return false;
        if (static_cast<index_t>(chosen.size()) == k) return true;
        for (index_t p = from; p < n; ++p) {
            chosen.push_back(p);
            const bool go_on = self(self, p + 1);
            chosen.pop_back();
            if (!go_on) return false;
        }
        return true;
    };
    return rec(rec, 0);
}

std::int64_t count_occurrences(std::string_view s, std::string_view pattern) {
    std::int64_t c = 0;
    for (std::size_t i = 0; i + pattern.size() <= s.size(); ++i)
        if (s.compare(i, pattern.size(), pattern) == 0) ++c;
    return c;
}

bool sentinel_resilient(const Text& text, std::string_view pattern, index_t tau, index_t k) {
    const auto occ = dp::kmp_occurrences(text.view(), pattern);
    const auto m = static_cast<index_t>(pattern.size());
    if (static_cast<std::int64_t>(occ.size()) < tau) return false;
    // The sentinel matches no pattern letter and creates no occurrence, so an
    // occurrence survives iff it avoids every substituted position.
    return for_each_subset(text.size(), k, [&](const std::vector<index_t>& pos) {
        std::int64_t alive = 0;
        for (const index_t s : occ) {
            const bool hit = std::any_of(pos.begin(), pos.end(), [&](index_t p) { return p >= s && p < s + m; });
            if (!hit) ++alive;
        }
        return alive >= tau;
    });
}

bool alphabet_resilient(const Text& text, std::string_view pattern, index_t tau, index_t k,
                        const std::vector<std::uint8_t>& letters, const OracleCaps& caps) {
    const index_t n = text.size();
    const auto sigma = static_cast<std::int64_t>(letters.size());
    std::int64_t work = 0;
    std::int64_t power = 1;
    for (index_t j = 0; j <= k; ++j, power *= sigma) work += binomial(n, j) * power;
    if (work > caps.max_work)
        throw CapExceeded("oracle: alphabet-mode work " + std::to_string(work) + " exceeds cap " +
                          std::to_string(caps.max_work));

    std::string s(text.view());
    return for_each_subset(n, k, [&](const std::vector<index_t>& pos) {
        // Enumerate letter assignments as base-sigma counters.
        std::vector<std::size_t> digit(pos.size(), 0);
        while (true) {
            for (std::size_t j = 0; j < pos.size(); ++j) s[pos[j]] = static_cast<char>(letters[digit[j]]);
            if (count_occurrences(s, pattern) < tau) {
                for (const index_t p : pos) s[p] = static_cast<char>(text[p]);
                return false;
            }
            std::size_t j = 0;
            while (j < digit.size() && ++digit[j] == letters.size()) digit[j++] = 0;
            if (j == digit.size()) break;
        }
        for (const index_t p : pos) s[p] = static_cast<char>(text[p]);
        return true;
    });
}

index_t longest_at(const Text& text, index_t i, index_t tau, index_t k) {
    index_t lo = 0;
    index_t hi = text.size() - i;
    while (lo < hi) {
        const index_t mid = lo + (hi - lo + 1) / 2;
        if (sentinel_resilient(text, text.view().substr(i, mid), tau, k))
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

}  // namespace

OracleCaps OracleCaps::from_env() {
    OracleCaps caps;
    const char* raw = std::getenv("RPM_ORACLE_CAP");
    if (raw == nullptr || *raw == '\0') return caps;
    const std::string value(raw);
    if (value.find('=') == std::string::npos) {
        caps.max_n = static_cast<index_t>(parse_int(value));
        return caps;
    }
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("RPM_ORACLE_CAP: bad entry '" + item + "'");
        const std::string key = item.substr(0, eq);
        const std::int64_t v = parse_int(item.substr(eq + 1));
        if (key == "n")
            caps.max_n = static_cast<index_t>(v);
        else if (key == "k")
            caps.max_k = static_cast<index_t>(std::min<std::int64_t>(v, hard_max_k));
        else if (key == "work")
            caps.max_work = v;
        else
            throw std::invalid_argument("RPM_ORACLE_CAP: unknown key '" + key + "'");
    }
    return caps;
}

bool brute_resilient(const Text& text, std::string_view pattern, index_t tau, index_t k, Mode mode,
                     const OracleCaps& caps, std::optional<std::vector<std::uint8_t>> alphabet) {
    validate_parameters(tau, k);
    if (pattern.empty()) throw std::invalid_argument("brute_resilient: empty pattern");
    check_caps(text.size(), k, caps);
    if (mode == Mode::sentinel) return sentinel_resilient(text, pattern, tau, k);
    const auto letters = alphabet ? *alphabet : text.alphabet();
    if (letters.empty()) return count_occurrences(text.view(), pattern) >= tau;
    return alphabet_resilient(text, pattern, tau, k, letters, caps);
}

OutputArray brute_solve(const Text& text, index_t tau, index_t k, const OracleCaps& caps) {
    validate_parameters(tau, k);
    check_caps(text.size(), k, caps);
    OutputArray out(static_cast<std::size_t>(text.size()), 0);
    for (index_t i = 0; i < text.size(); ++i) out[i] = longest_at(text, i, tau, k);
    return out;
}

OutputArray brute_solve_parallel(const Text& text, index_t tau, index_t k, const OracleCaps& caps) {
    validate_parameters(tau, k);
    check_caps(text.size(), k, caps);
    OutputArray out(static_cast<std::size_t>(text.size()), 0);
#pragma omp parallel for schedule(dynamic, 1)
    for (index_t i = 0; i < text.size(); ++i) out[i] = longest_at(text, i, tau, k);
    return out;
}

std::vector<Run> brute_runs(const Text& text) {
    const index_t n = text.size();
    if (n > 500) throw CapExceeded("brute_runs: text length " + std::to_string(n) + " exceeds 500");
    std::vector<Run> runs;
    std::vector<index_t> border;
    for (index_t s = 0; s < n; ++s) {
        // border[j] for the prefix text[s..s+j]; its smallest period is j+1-border[j].
        border.assign(static_cast<std::size_t>(n - s), 0);
        for (index_t j = 1; j < n - s; ++j) {
            index_t b = border[j - 1];
            while (b > 0 && text[s + j] != text[s + b]) b = border[b - 1];
            if (text[s + j] == text[s + b]) ++b;
            border[j] = b;
        }
        for (index_t j = 0; j < n - s; ++j) {
            const index_t len = j + 1;
            const index_t p = len - border[j];
            const index_t e = s + j;
            if (2 * p > len) continue;
            const bool left_max = s == 0 || text[s - 1] != text[s - 1 + p];
            const bool right_max = e == n - 1 || text[e + 1] != text[e + 1 - p];
            if (left_max && right_max) runs.push_back({s, e, p});
        }
    }
    std::sort(runs.begin(), runs.end());
    return runs;
}

}  // namespace rpm::oracle
