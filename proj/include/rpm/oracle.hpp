#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "rpm/runs.hpp"
#include "rpm/solver.hpp"
#include "rpm/text.hpp"

namespace rpm::oracle {

enum class Mode {
    sentinel,  // substituted positions receive a letter outside the text alphabet
    alphabet,  // substituted positions receive any letter of the given alphabet
};

/// Size limits for the exhaustive checks. A request beyond them is refused
/// with CapExceeded, never truncated.
struct OracleCaps {
    index_t max_n = 24;
    index_t max_k = 2;
    /// Upper bound on the number of substitution patterns tried per decision
    /// in alphabet mode (sum over j <= k of C(n, j) * sigma^j).
    std::int64_t max_work = 20'000'000;

    static constexpr index_t hard_max_k = 3;

    /// Defaults overridden by RPM_ORACLE_CAP, which is either a plain integer
    /// (max_n) or a comma list such as "n=30,k=3,work=1000000".
    static OracleCaps from_env();
};

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Whether every way of substituting at most k positions leaves `pattern`
/// with at least tau occurrences. In alphabet mode `alphabet` defaults to
/// the letters of the text.
bool brute_resilient(const Text& text, std::string_view pattern, index_t tau, index_t k, Mode mode,
                     const OracleCaps& caps = OracleCaps::from_env(),
                     std::optional<std::vector<std::uint8_t>> alphabet = std::nullopt);

/// OUTPUT array by binary search over prefix lengths at each position, each
/// candidate decided by brute_resilient in sentinel mode. Serial reference.
OutputArray brute_solve(const Text& text, index_t tau, index_t k, const OracleCaps& caps = OracleCaps::from_env());

/// Same as brute_solve, positions distributed over OpenMP threads.
OutputArray brute_solve_parallel(const Text& text, index_t tau, index_t k,
                                 const OracleCaps& caps = OracleCaps::from_env());

/// Every run, found by checking each start's prefix periods for two-sided
/// maximality. Texts longer than 500 letters are refused.
std::vector<Run> brute_runs(const Text& text);

}  // namespace rpm::oracle
