#include <doctest.h>

#include "helpers.hpp"
#include "oracle.hpp"
#include "vizplan/similarity.hpp"

using namespace vizplan;

namespace {

RankedViewList list_of(const std::vector<std::string>& measures) {
    RankedViewList list;
    double utility = static_cast<double>(measures.size());
    for (const auto& m : measures) list.entries.push_back({{"d", m, Aggregate::Avg}, utility--});
    return list;
}

std::vector<std::string> names_of(const RankedViewList& list) {
    std::vector<std::string> names;
    for (const auto& entry : list.entries) names.push_back(entry.spec.measure);
    return names;
}

}  // namespace

TEST_CASE("jaccard compares compositions only") {
    const auto a = list_of({"1", "2", "3", "4", "5", "6", "7", "8", "9", "10"});
    const auto b = list_of({"10", "9", "8", "7", "6", "5", "4", "3", "2", "1"});
    CHECK(jaccard(a, b) == 1.0);  // same set, any order

    const auto c = list_of({"11", "12", "13"});
    CHECK(jaccard(a, c) == 0.0);  // disjoint

    // 5 shared of two 10-view sets: 5 / 15
    const auto d = list_of({"1", "2", "3", "4", "5", "21", "22", "23", "24", "25"});
    CHECK(jaccard(a, d) == doctest::Approx(5.0 / 15.0));

    CHECK(jaccard({}, {}) == 1.0);
    CHECK(jaccard(a, {}) == 0.0);
}

TEST_CASE("rbo basics") {
    const auto a = list_of({"1", "2", "3"});
    const auto b = list_of({"4", "5", "6"});
    CHECK(rbo(a, a, 0.9) == 1.0);
    CHECK(rbo(a, a, 0.5) == 1.0);
    CHECK(rbo(a, b, 0.9) == 0.0);
    CHECK(rbo({}, {}, 0.9) == 1.0);
    CHECK(rbo(a, {}, 0.9) == 0.0);
    CHECK_THROWS_AS(rbo(a, b, 0.0), PersistenceOutOfRangeError);
    CHECK_THROWS_AS(rbo(a, b, 1.0), PersistenceOutOfRangeError);
}

TEST_CASE("rbo matches the reference computation on a swapped pair") {
    const auto a = list_of({"v1", "v2"});
    const auto b = list_of({"v2", "v1"});
    const double got = rbo(a, b, 0.9);
    const double want = oracle::reference_rbo(names_of(a), names_of(b), 0.9);
    CHECK(got == doctest::Approx(want).epsilon(1e-12));
    // X_1 = 0, X_2 = 2: (1-p)p^2 * (2/2)... frozen from the reference run.
    CHECK(got == doctest::Approx(0.9));
}

TEST_CASE("rbo matches the reference computation on random pairs") {
    Rng rng(2024);
    for (int pair = 0; pair < 20; ++pair) {
        const std::size_t n = 3 + rng.next_below(10);
        std::vector<std::string> pool;
        for (std::size_t i = 0; i < 20; ++i) pool.push_back("v" + std::to_string(i));
        auto draw = [&](std::size_t count) {
            auto items = pool;
            std::vector<std::string> out;
            for (std::size_t i = 0; i < count; ++i) {
                const auto j = i + rng.next_below(items.size() - i);
                std::swap(items[i], items[j]);
                out.push_back(items[i]);
            }
            return out;
        };
        const auto a = draw(n);
        const auto b = draw(3 + rng.next_below(10));
        const double p = 0.5 + 0.09 * static_cast<double>(rng.next_below(5));
        const double want = oracle::reference_rbo(a, b, p);
        const double got = rbo(list_of(a), list_of(b), p);
        CHECK(got == doctest::Approx(want).epsilon(1e-9));
    }
}

TEST_CASE("metric properties: symmetry, bounds, order sensitivity") {
    Rng rng(4242);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 2 + rng.next_below(8);
        std::vector<std::string> pool;
        for (std::size_t i = 0; i < 16; ++i) pool.push_back("m" + std::to_string(i));
        auto draw = [&](std::size_t count) {
            auto items = pool;
            std::vector<std::string> out;
            for (std::size_t i = 0; i < count; ++i) {
                const auto j = i + rng.next_below(items.size() - i);
                std::swap(items[i], items[j]);
                out.push_back(items[i]);
            }
            return out;
        };
        const auto a = list_of(draw(n));
        const auto b = list_of(draw(2 + rng.next_below(8)));

        const double j_ab = jaccard(a, b);
        const double r_ab = rbo(a, b, 0.9);
        CHECK(j_ab == jaccard(b, a));
        CHECK(r_ab == doctest::Approx(rbo(b, a, 0.9)).epsilon(1e-12));
        CHECK(j_ab >= 0.0);
        CHECK(j_ab <= 1.0);
        CHECK(r_ab >= 0.0);
        CHECK(r_ab <= 1.0 + 1e-12);

        // permuting a list never changes jaccard
        auto reversed = a;
        std::reverse(reversed.entries.begin(), reversed.entries.end());
        CHECK(jaccard(reversed, b) == j_ab);
    }
}

TEST_CASE("same set, different order: jaccard saturates while rbo does not") {
    const auto a = list_of({"1", "2", "3", "4", "5"});
    auto shuffled = a;
    std::swap(shuffled.entries[0], shuffled.entries[4]);
    CHECK(jaccard(a, shuffled) == 1.0);
    CHECK(rbo(a, shuffled, 0.9) < 1.0);
}

TEST_CASE("rbo rejects lists that repeat a spec") {
    const auto bad = list_of({"1", "2", "1"});
    CHECK_THROWS_AS(rbo(bad, bad, 0.9), Error);
}
