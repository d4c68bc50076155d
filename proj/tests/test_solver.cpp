#include <doctest.h>

#include <set>
#include <string>

#include "helpers.hpp"
#include "rpm/dp_baseline.hpp"
#include "rpm/oracle.hpp"
#include "rpm/solver.hpp"

using namespace rpm;
using rpm::testing::random_text;
using rpm::testing::uniform;

namespace {

std::set<std::string> listed(const ResilienceSolver& solver, const OutputArray& out) {
    std::set<std::string> set;
    for (const auto& ref : list_resilient(out, solver.index())) {
        const bool fresh = set.insert(solver.text().substr(ref.pos, ref.len)).second;
        CHECK(fresh);
    }
    return set;
}

}  // namespace

TEST_SUITE("rpm_solver") {

TEST_CASE("example 1") {
    const ResilienceSolver solver{Text("aaabaaaabbaaa")};
    const auto out = solver.solve(2, 1);
    CHECK(out == OutputArray{3, 2, 1, 1, 3, 3, 2, 1, 1, 1, 3, 2, 1});
    CHECK(listed(solver, out) == std::set<std::string>{"a", "aa", "aaa", "b"});
    CHECK(count_resilient(out, solver.index()) == 4);
}

TEST_CASE("unary texts") {
    CHECK(solve(Text("aaaaaa"), 2, 1) == OutputArray{2, 2, 2, 2, 2, 1});
    CHECK(solve(Text("aaaaaa"), 6, 1) == OutputArray(6, 0));
    const ResilienceSolver a4{Text("aaaa")};
    CHECK(listed(a4, a4.solve(2, 0)) == std::set<std::string>{"a", "aa", "aaa"});
}

TEST_CASE("trivial parameters") {
    const Text text("abracadabra");
    OutputArray all(11);
    for (index_t i = 0; i < 11; ++i) all[i] = 11 - i;
    CHECK(solve(text, 1, 0) == all);
    CHECK(solve(Text("x"), 1, 1) == OutputArray{0});
    CHECK(solve(text, 12, 0) == OutputArray(11, 0));
    CHECK(solve(text, 2, 100) == OutputArray(11, 0));
    CHECK(solve(Text(""), 2, 1).empty());

    const ResilienceSolver ab{Text("ab")};
    CHECK(listed(ab, ab.solve(1, 0)) == std::set<std::string>{"a", "b", "ab"});
}

TEST_CASE("invalid parameters") {
    CHECK_THROWS_AS(solve(Text("ab"), 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(solve(Text("ab"), 1, -1), std::invalid_argument);
    CHECK_THROWS_AS(ResilienceSolver(Text("")), std::invalid_argument);
}

TEST_CASE("cut edges") {
    const ResilienceSolver solver{Text("aaabaaaabbaaa")};
    const auto& idx = solver.index();
    // The SA interval of "aaab" (frequency 2) below the locus of "aaa".
    index_t l = -1;
    for (index_t r = 0; r < idx.size(); ++r)
        if (solver.text().substr(idx.sa()[r], 4) == "aaab") {
            l = r;
            break;
        }
    REQUIRE(l >= 0);
    CHECK(solver.solve_cut_edge({3, 4, l, l + 1, true}, 2, 1) == 3);
    CHECK_FALSE(solver.is_resilient(l, l + 1, 4, 2, 1));
    CHECK(solver.is_resilient(l, l + 1, 3, 2, 0));

    // sd(u) = sd(v) - 1 with v resilient at full depth.
    const ResilienceSolver unary{Text("aaaa")};
    CHECK(unary.solve_cut_edge({1, 2, 1, 3, false}, 2, 0) == 2);
}

TEST_CASE("solver equals the oracle on tiny texts") {
    std::mt19937_64 rng(41);
    for (int round = 0; round < 400; ++round) {
        const Text text(random_text(rng, uniform(rng, 1, 16), uniform(rng, 0, 1) ? 4 : 2));
        const index_t tau = uniform(rng, 1, 5);
        const index_t k = uniform(rng, 0, 2);
        REQUIRE(solve(text, tau, k) == oracle::brute_solve(text, tau, k));
    }
}

TEST_CASE("solver equals the dp baseline at mid scale") {
    std::mt19937_64 rng(42);
    for (int round = 0; round < 60; ++round) {
        const index_t n = uniform(rng, 20, 200);
        std::string s;
        if (round % 2 == 0) {
            s = random_text(rng, n, uniform(rng, 1, 4));
        } else {
            // A short random period with sparse noise produces many periodic patterns.
            const std::string core = random_text(rng, uniform(rng, 1, 6), 3);
            s = random_text(rng, n, 4);
            for (index_t i = 0; i < n; ++i)
                if (uniform(rng, 0, 99) >= 3) s[i] = core[i % core.size()];
        }
        const ResilienceSolver solver{Text(s)};
        for (int q = 0; q < 4; ++q) {
            const index_t tau = uniform(rng, 1, 20);
            const index_t k = uniform(rng, 0, 20);
            REQUIRE(solver.solve(tau, k) == dp::solve_dp(solver.text(), tau, k));
        }
    }
}

TEST_CASE("monotone in both parameters and closed under substrings") {
    std::mt19937_64 rng(43);
    for (int round = 0; round < 40; ++round) {
        const ResilienceSolver solver{Text(random_text(rng, uniform(rng, 5, 60), uniform(rng, 1, 3)))};
        const index_t n = solver.text().size();
        for (index_t tau = 1; tau <= 4; ++tau)
            for (index_t k = 0; k <= 3; ++k) {
                const auto base = solver.solve(tau, k);
                const auto more_tau = solver.solve(tau + 1, k);
                const auto more_k = solver.solve(tau, k + 1);
                for (index_t i = 0; i < n; ++i) {
                    CHECK(more_tau[i] <= base[i]);
                    CHECK(more_k[i] <= base[i]);
                    CHECK(base[i] <= n - i);
                    if (i + 1 < n) CHECK(base[i + 1] >= base[i] - 1);
                }
                const auto set = listed(solver, base);
                for (const auto& s : set) {
                    if (s.size() < 2) continue;
                    CHECK(set.count(s.substr(1)) == 1);
                    CHECK(set.count(s.substr(0, s.size() - 1)) == 1);
                }
            }
    }
}

TEST_CASE("k = 0 is the frequent longest prefix") {
    std::mt19937_64 rng(44);
    for (int round = 0; round < 40; ++round) {
        const std::string s = random_text(rng, uniform(rng, 1, 80), uniform(rng, 1, 4));
        const ResilienceSolver solver{Text(s)};
        for (index_t tau = 1; tau <= 5; ++tau) CHECK(solver.solve(tau, 0) == rpm::testing::naive_frequent_prefix(s, tau));
    }
}

TEST_CASE("repeated solves are independent") {
    const ResilienceSolver solver{Text("abaababaabaababaababa")};
    const auto first = solver.solve(3, 1);
    solver.solve(2, 2);
    CHECK(solver.solve(3, 1) == first);
    ResilienceSolver::Stats stats;
    CHECK(solver.solve(3, 1, stats) == first);
    CHECK(stats.phase1_checks > 0);
}

}  // TEST_SUITE
