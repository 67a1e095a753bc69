#include <random>
#include <set>
#include <vector>

#include "catch_amalgamated.hpp"
#include "metdim/bits.hpp"

using metdim::Bits;

TEST_CASE("bits basics", "[bits]") {
    Bits b(130);
    REQUIRE(b.size() == 130);
    REQUIRE(b.count() == 0);
    REQUIRE_FALSE(b.any());

    b.set(0);
    b.set(63);
    b.set(64);
    b.set(129);
    REQUIRE(b.count() == 4);
    REQUIRE(b.test(63));
    REQUIRE(b.test(64));
    REQUIRE_FALSE(b.test(65));

    b.reset(63);
    REQUIRE_FALSE(b.test(63));
    REQUIRE(b.count() == 3);

    b.clear();
    REQUIRE(b.count() == 0);
}

TEST_CASE("bits next and for_each", "[bits]") {
    Bits b(200);
    std::vector<int> want{0, 5, 63, 64, 65, 127, 128, 199};
    for (int i : want) b.set(i);

    std::vector<int> got;
    for (int i = b.next(0); i >= 0; i = b.next(i + 1)) got.push_back(i);
    REQUIRE(got == want);

    got.clear();
    b.for_each([&](int i) { got.push_back(i); });
    REQUIRE(got == want);

    REQUIRE(b.next(200) == -1);
    REQUIRE(b.next(130) == 199);
}

TEST_CASE("bits against a reference set model", "[bits]") {
    // Random operations mirrored in std::set; all views must agree.
    std::mt19937 rng(20240817);
    for (int n : {1, 64, 65, 190}) {
        Bits b(n);
        std::set<int> model;
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int step = 0; step < 500; ++step) {
            int i = pick(rng);
            if (rng() & 1) {
                b.set(i);
                model.insert(i);
            } else {
                b.reset(i);
                model.erase(i);
            }
            REQUIRE(b.count() == int(model.size()));
            REQUIRE(b.any() == !model.empty());
            int from = pick(rng);
            auto it = model.lower_bound(from);
            REQUIRE(b.next(from) == (it == model.end() ? -1 : *it));
        }
        std::vector<int> got;
        b.for_each([&](int i) { got.push_back(i); });
        REQUIRE(got == std::vector<int>(model.begin(), model.end()));
    }
}

TEST_CASE("bits word-wise operations", "[bits]") {
    std::mt19937 rng(7);
    int n = 150;
    Bits a(n), b(n);
    std::set<int> ma, mb;
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int step = 0; step < 200; ++step) {
        int i = pick(rng), j = pick(rng);
        a.set(i);
        ma.insert(i);
        b.set(j);
        mb.insert(j);
    }

    int common = 0;
    for (int i : ma) common += mb.count(i);
    REQUIRE(a.count_and(b) == common);
    REQUIRE(b.count_and(a) == common);

    Bits u = a;
    u.or_with(b);
    std::set<int> mu = ma;
    mu.insert(mb.begin(), mb.end());
    REQUIRE(u.count() == int(mu.size()));
    for (int i : mu) REQUIRE(u.test(i));

    Bits d = a;
    d.andnot_with(b);
    for (int i = 0; i < n; ++i)
        REQUIRE(d.test(i) == (ma.count(i) && !mb.count(i)));

    REQUIRE(a == a);
    Bits a2 = a;
    REQUIRE(a == a2);
    Bits c(n), c2(n);
    c.set(3);
    c2.set(4);
    REQUIRE_FALSE(c == c2);
}
