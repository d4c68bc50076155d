#include <doctest.h>

#include <map>
#include <string>

#include "helpers.hpp"
#include "rpm/oracle.hpp"
#include "rpm/runs.hpp"

using namespace rpm;
using rpm::testing::random_text;
using rpm::testing::uniform;

namespace {

bool contains(const std::vector<Run>& runs, Run r) { return std::find(runs.begin(), runs.end(), r) != runs.end(); }

}  // namespace

TEST_SUITE("runs") {

TEST_CASE("example runs") {
    const auto runs = compute_runs(Text("abaaabaaabaaabab"));
    CHECK(contains(runs, {0, 14, 4}));
    CHECK(runs == std::vector<Run>{{0, 14, 4}, {2, 4, 1}, {6, 8, 1}, {10, 12, 1}, {12, 15, 2}});

    CHECK(compute_runs(Text("aaabaaaabbaaa")) == std::vector<Run>{{0, 2, 1}, {4, 7, 1}, {8, 9, 1}, {10, 12, 1}});
    CHECK(compute_runs(Text("abc")).empty());
    CHECK(compute_runs(Text("a")).empty());
    CHECK(compute_runs(Text("aa")) == std::vector<Run>{{0, 1, 1}});
}

TEST_CASE("brute-force runs") {
    CHECK(contains(oracle::brute_runs(Text("abaaabaaabaaabab")), {0, 14, 4}));
    CHECK(oracle::brute_runs(Text("abc")).empty());
    CHECK_THROWS_AS(oracle::brute_runs(Text(std::string(501, 'a'))), oracle::CapExceeded);
}

TEST_CASE("runs match the brute-force oracle") {
    std::mt19937_64 rng(21);
    for (int round = 0; round < 400; ++round) {
        const index_t n = uniform(rng, 1, 200);
        const Text text(random_text(rng, n, uniform(rng, 1, 4)));
        const auto runs = compute_runs(text);
        REQUIRE(runs == oracle::brute_runs(text));
        CHECK(static_cast<index_t>(runs.size()) < std::max<index_t>(n, 1));
    }
}

TEST_CASE("runs are periodic and maximal") {
    std::mt19937_64 rng(22);
    for (int round = 0; round < 100; ++round) {
        const std::string s = random_text(rng, uniform(rng, 2, 300), 2);
        const index_t n = static_cast<index_t>(s.size());
        for (const Run& r : compute_runs(Text(s))) {
            CHECK(2 * r.period <= r.length());
            CHECK(rpm::testing::naive_period(s, r.start, r.end) == r.period);
            if (r.start > 0) CHECK(s[r.start - 1] != s[r.start - 1 + r.period]);
            if (r.end + 1 < n) CHECK(s[r.end + 1] != s[r.end + 1 - r.period]);
        }
    }
}

TEST_CASE("at most two runs of one period cover a position") {
    std::mt19937_64 rng(23);
    for (int round = 0; round < 100; ++round) {
        const index_t n = uniform(rng, 2, 300);
        const auto runs = compute_runs(Text(random_text(rng, n, uniform(rng, 2, 3))));
        for (index_t pos = 0; pos < n; ++pos) {
            std::map<index_t, int> per_period;
            for (const Run& r : runs)
                if (r.start <= pos && pos <= r.end) ++per_period[r.period];
            for (const auto& [p, count] : per_period) CHECK(count <= 2);
        }
    }
}

TEST_CASE("least rotation") {
    CHECK(least_rotation("a") == 0);
    CHECK(least_rotation("ba") == 1);
    CHECK(least_rotation("abaa") == 2);
    CHECK(least_rotation("bbab") == 2);
    std::mt19937_64 rng(24);
    for (int round = 0; round < 300; ++round) {
        const std::string w = random_text(rng, uniform(rng, 1, 12), uniform(rng, 1, 3));
        std::string best = w;
        for (std::size_t o = 1; o < w.size(); ++o) best = std::min(best, w.substr(o) + w.substr(0, o));
        const auto o = least_rotation(w);
        CHECK(w.substr(o) + w.substr(0, o) == best);
    }
}

TEST_CASE("lyndon roots") {
    const Text text("abaaabaaabaaabab");
    const auto lr = lyndon_root(text, {0, 14, 4});
    CHECK(lr.root == "aaab");
    CHECK(lr.head == "ab");
    CHECK(lr.power == 3);
    CHECK(lr.tail == "a");

    const auto unary = lyndon_root(Text("aaaa"), {0, 3, 1});
    CHECK(unary.root == "a");
    CHECK(unary.head.empty());
    CHECK(unary.power == 4);
    CHECK(unary.tail.empty());

    const auto abab = lyndon_root(Text("abab"), {0, 3, 2});
    CHECK(abab.root == "ab");
    CHECK(abab.head.empty());
    CHECK(abab.power == 2);
    CHECK(abab.tail.empty());
}

TEST_CASE("canonical form reassembles the run") {
    std::mt19937_64 rng(25);
    for (int round = 0; round < 100; ++round) {
        const Text text(random_text(rng, uniform(rng, 2, 100), 2));
        for (const Run& r : compute_runs(text)) {
            const auto lr = lyndon_root(text, r);
            std::string rebuilt = lr.head;
            for (index_t p = 0; p < lr.power; ++p) rebuilt += lr.root;
            rebuilt += lr.tail;
            CHECK(rebuilt == text.substr(r.start, r.length()));
            CHECK(lr.head.size() < lr.root.size());
            CHECK(lr.tail.size() < lr.root.size());
            CHECK(lr.root.substr(lr.root.size() - lr.head.size()) == lr.head);
            CHECK(lr.root.substr(0, lr.tail.size()) == lr.tail);
        }
    }
}

TEST_CASE("periodicity queries") {
    const Text ex3("abaaabaaabaaaba");
    const RunIndex idx3(compute_runs(ex3));
    const auto whole = idx3.is_periodic(0, 14);
    CHECK(whole.is_periodic);
    CHECK(whole.period == 4);
    CHECK_FALSE(idx3.is_periodic(3, 3).is_periodic);
    CHECK_FALSE(idx3.is_periodic(3, 3).period.has_value());

    const Text ex9("aabaabaabaaba");
    const RunIndex idx9(compute_runs(ex9));
    const auto p = idx9.is_periodic(0, 6);
    CHECK(p.is_periodic);
    CHECK(p.period == 3);
}

TEST_CASE("periodicity agrees with a naive scan") {
    std::mt19937_64 rng(26);
    for (int round = 0; round < 60; ++round) {
        const index_t n = uniform(rng, 1, 100);
        const std::string s = random_text(rng, n, uniform(rng, 1, 3));
        const auto runs = compute_runs(Text(s));
        const RunIndex idx(runs);
        for (index_t i = 0; i < n; ++i)
            for (index_t j = i; j < n; ++j) {
                const index_t per = rpm::testing::naive_period(s, i, j);
                const auto info = idx.is_periodic(i, j);
                REQUIRE(info.is_periodic == (2 * per <= j - i + 1));
                if (info.is_periodic) CHECK(*info.period == per);
                std::vector<Run> naive;
                for (const Run& r : runs)
                    if (r.start <= i && j <= r.end) naive.push_back(r);
                CHECK(idx.containing(i, j) == naive);
            }
    }
}

}  // TEST_SUITE
