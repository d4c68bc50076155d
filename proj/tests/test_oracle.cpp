#include <doctest.h>

#include <cstdlib>
#include <string>

#include "helpers.hpp"
#include "rpm/oracle.hpp"

using namespace rpm;
using rpm::testing::random_text;
using rpm::testing::uniform;
using oracle::Mode;

namespace {

// Sets RPM_ORACLE_CAP for the lifetime of the object.
class CapOverride {
public:
    explicit CapOverride(const char* value) { setenv("RPM_ORACLE_CAP", value, 1); }
    ~CapOverride() { unsetenv("RPM_ORACLE_CAP"); }
    CapOverride(const CapOverride&) = delete;
    CapOverride& operator=(const CapOverride&) = delete;
};

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("resilience examples") {
    const Text ex("aaabaaaabbaaa");
    CHECK(oracle::brute_resilient(ex, "aaa", 2, 1, Mode::sentinel));
    CHECK_FALSE(oracle::brute_resilient(ex, "aaab", 2, 1, Mode::sentinel));
    CHECK(oracle::brute_resilient(ex, "b", 2, 1, Mode::sentinel));
    CHECK(oracle::brute_resilient(ex, "ab", 2, 0, Mode::sentinel));
    CHECK_FALSE(oracle::brute_resilient(ex, "ab", 3, 0, Mode::sentinel));
    CHECK_FALSE(oracle::brute_resilient(ex, "x", 1, 0, Mode::alphabet));
    CHECK_THROWS_AS(oracle::brute_resilient(ex, "", 1, 0, Mode::sentinel), std::invalid_argument);
}

TEST_CASE("k = 0 is plain frequency") {
    std::mt19937_64 rng(61);
    for (int round = 0; round < 200; ++round) {
        const std::string s = random_text(rng, uniform(rng, 1, 20), uniform(rng, 1, 3));
        const std::string p = random_text(rng, uniform(rng, 1, 3), uniform(rng, 1, 3));
        const index_t tau = uniform(rng, 1, 5);
        const bool frequent = static_cast<index_t>(rpm::testing::naive_occurrences(s, p).size()) >= tau;
        CHECK(oracle::brute_resilient(Text(s), p, tau, 0, Mode::sentinel) == frequent);
        CHECK(oracle::brute_resilient(Text(s), p, tau, 0, Mode::alphabet) == frequent);
    }
}

TEST_CASE("solve examples") {
    const Text ex("aaabaaaabbaaa");
    CHECK(oracle::brute_solve(ex, 2, 1) == OutputArray{3, 2, 1, 1, 3, 3, 2, 1, 1, 1, 3, 2, 1});
    CHECK(oracle::brute_solve(ex, 14, 0) == OutputArray(13, 0));
    CHECK(oracle::brute_solve(Text("aaaaaa"), 2, 1) == OutputArray{2, 2, 2, 2, 2, 1});
    CHECK(oracle::brute_solve_parallel(ex, 2, 1) == oracle::brute_solve(ex, 2, 1));
}

TEST_CASE("caps refuse oversized requests") {
    const Text big(std::string(25, 'a'));
    CHECK_THROWS_AS(oracle::brute_solve(big, 2, 1), oracle::CapExceeded);
    CHECK_THROWS_AS(oracle::brute_solve(Text("abc"), 1, 3), oracle::CapExceeded);
    oracle::OracleCaps tight;
    tight.max_work = 10;
    CHECK_THROWS_AS(oracle::brute_resilient(Text("abcabc"), "ab", 1, 2, Mode::alphabet, tight),
                    oracle::CapExceeded);
    oracle::OracleCaps wide;
    wide.max_k = 5;
    CHECK_THROWS_AS(oracle::brute_solve(Text("abc"), 1, 4, wide), oracle::CapExceeded);
}

TEST_CASE("caps from the environment") {
    {
        const CapOverride cap("30");
        const auto caps = oracle::OracleCaps::from_env();
        CHECK(caps.max_n == 30);
        CHECK(caps.max_k == 2);
    }
    {
        const CapOverride cap("n=10,k=9,work=77");
        const auto caps = oracle::OracleCaps::from_env();
        CHECK(caps.max_n == 10);
        CHECK(caps.max_k == oracle::OracleCaps::hard_max_k);
        CHECK(caps.max_work == 77);
    }
    {
        const CapOverride cap("size=3");
        CHECK_THROWS_AS(oracle::OracleCaps::from_env(), std::invalid_argument);
    }
    {
        const CapOverride cap("-4");
        CHECK_THROWS_AS(oracle::OracleCaps::from_env(), std::invalid_argument);
    }
    CHECK(oracle::OracleCaps::from_env().max_n == 24);
}

TEST_CASE("antitone in tau and k") {
    std::mt19937_64 rng(62);
    for (int round = 0; round < 100; ++round) {
        const std::string s = random_text(rng, uniform(rng, 2, 14), uniform(rng, 1, 3));
        const index_t i = uniform(rng, 0, static_cast<index_t>(s.size()) - 1);
        const std::string p = s.substr(i, uniform(rng, 1, std::min<index_t>(3, static_cast<index_t>(s.size()) - i)));
        for (index_t tau = 1; tau <= 4; ++tau)
            for (index_t k = 0; k < 2; ++k) {
                const bool here = oracle::brute_resilient(Text(s), p, tau, k + 1, Mode::sentinel);
                CHECK((!here || oracle::brute_resilient(Text(s), p, tau, k, Mode::sentinel)));
                CHECK((!oracle::brute_resilient(Text(s), p, tau + 1, k, Mode::sentinel) ||
                       oracle::brute_resilient(Text(s), p, tau, k, Mode::sentinel)));
            }
    }
}

TEST_CASE("sentinel and alphabet modes agree on four letters") {
    std::mt19937_64 rng(63);
    const std::vector<std::uint8_t> acgt{'a', 'b', 'c', 'd'};
    for (int round = 0; round < 60; ++round) {
        const std::string s = random_text(rng, uniform(rng, 1, 10), 4);
        const Text text(s);
        for (index_t i = 0; i < text.size(); ++i)
            for (index_t len = 1; i + len <= std::min<index_t>(text.size(), i + 3); ++len)
                for (index_t tau = 1; tau <= 3; ++tau)
                    for (index_t k = 0; k <= 2; ++k)
                        CHECK(oracle::brute_resilient(text, s.substr(i, len), tau, k, Mode::sentinel) ==
                              oracle::brute_resilient(text, s.substr(i, len), tau, k, Mode::alphabet, {}, acgt));
    }
}

TEST_CASE("modes differ on a unary alphabet") {
    // With one letter available a substitution changes nothing.
    const Text text("aa");
    CHECK_FALSE(oracle::brute_resilient(text, "a", 2, 1, Mode::sentinel));
    CHECK(oracle::brute_resilient(text, "a", 2, 1, Mode::alphabet));
}

}  // TEST_SUITE
