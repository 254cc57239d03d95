#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dcl/rigidity.hpp"

using namespace dcl;

TEST_CASE("two-class masses are pair counts") {
    // (C, C^{-1}) forces g2 = g1^{-1}: mass = |C| / |G|
    CHECK(mass({false, {"2A", "2A"}}) == rat(63, 6048));
    CHECK(mass({false, {"2A", "2A"}}) == BigRat(1, 96));
    CHECK(mass({true, {"7AB", "7AB"}}) == rat(1728, 12096));
    // mismatched pair has mass zero
    CHECK(mass({false, {"2A", "3A"}}) == BigRat(0));
}

TEST_CASE("mass is permutation invariant and vanishes on odd outer counts") {
    SplitMix64 rng(404);
    std::vector<std::string> names{"2A", "3A", "3B", "4AB", "4C", "6A", "7AB", "8AB", "12AB",
                                   "2b", "4d", "6b", "8c", "12c", "12d"};
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<std::string> labels;
        int outer = 0;
        for (int i = 0; i < 3; ++i) {
            labels.push_back(names[rng.below(names.size())]);
            if (labels.back() == "2b" || labels.back() == "4d" || labels.back() == "6b"
                || labels.back() == "8c" || labels.back() == "12c" || labels.back() == "12d")
                ++outer;
        }
        BigRat m = mass({true, labels});
        std::vector<std::string> shuffled = labels;
        std::swap(shuffled[0], shuffled[2]);
        CHECK(mass({true, shuffled}) == m);
        if (outer % 2 == 1) CHECK(m == 0);
        // inverse classes in reversed order
        const PermGroupTable& T = group();
        std::vector<std::string> revinv;
        for (auto it = labels.rbegin(); it != labels.rend(); ++it) {
            int cid = T.class_id(*it == "12cd" ? "12c" : *it);
            revinv.push_back(T.classes[T.class_of[T.inv(T.classes[cid].rep)]].name);
        }
        CHECK(mass({true, revinv}) == m);
    }
}

TEST_CASE("DP equals brute force on triples and small quadruples") {
    std::vector<ClassTuple> tuples = {
        {false, {"2A", "2A", "3A"}},      {false, {"6A", "2A", "8A"}},
        {false, {"3A", "3A", "4C"}},      {true, {"4d", "2b", "12AB"}},
        {true, {"2b", "2b", "2A"}},       {false, {"4A", "4B", "3B"}},
        {false, {"2A", "2A", "2A", "2A"}}, {false, {"3A", "2A", "4A", "4B"}},
        {true, {"4d", "2b", "2A", "2A"}},
    };
    for (const auto& t : tuples) {
        CHECK(mass_only(t).tuple_count == tuple_count_bruteforce(t));
    }
}

TEST_CASE("the near-miss gamma.2 quadruples") {
    CHECK(mass({true, {"4d", "2b", "2A", "2A"}}) == BigRat(11, 4));
    CHECK(mass({true, {"4d", "2b", "3A", "2A"}}) == BigRat(3));
    MassResult r = rigid_mu({true, {"4d", "2b", "3A", "2A"}});
    CHECK(r.mu == BigRat(3));
    MassResult r2 = rigid_mu({true, {"4d", "4d", "3A", "2A"}});
    CHECK(r2.mass == BigRat(11, 3));
    CHECK(r2.mu == BigRat(3));
}

TEST_CASE("strictly rigid examples") {
    // up to the A/B choice fixed in this build, one orientation matches
    auto strict = [&](const ClassTuple& t) {
        MassResult r = rigid_mu(t);
        return r.mass == BigRat(1) && r.mu == BigRat(1);
    };
    CHECK((strict({false, {"3A", "3A", "3A", "4B"}}) || strict({false, {"3A", "3A", "3A", "4A"}})));
    CHECK((strict({false, {"6A", "2A", "8A"}}) || strict({false, {"6A", "2A", "8B"}})));
    // the genus-zero triple in Gamma.2
    CHECK(strict({true, {"4d", "2b", "12AB"}}));
}

TEST_CASE("genus computation") {
    CHECK(genus_from_classes({false, {"3A", "3A", "3A", "4B"}}, 28) == 9);
    CHECK(genus_from_classes({true, {"4d", "2b", "12AB"}}, 28) == 0);
    CHECK(genus_from_classes({false, {"6A", "2A", "8A"}}, 36) == 0);
    CHECK(genus_from_classes({false, {"12A", "12A", "6A"}}, 28) == 8);
    CHECK(genus_from_classes({false, {"12A", "12A", "6A"}}, 36) == 11);
    // (4A,12A,2A) at degree 36 solves to a negative genus
    CHECK_THROWS(genus_from_classes({false, {"4A", "12A", "2A"}}, 36));
}

TEST_CASE("mu is at most mass") {
    SplitMix64 rng(2024);
    std::vector<std::string> names{"2A", "3A", "4A", "4B", "6A", "8A", "12A"};
    for (int trial = 0; trial < 6; ++trial) {
        std::vector<std::string> labels;
        for (int i = 0; i < 3; ++i) labels.push_back(names[rng.below(names.size())]);
        MassResult r = rigid_mu({false, labels});
        CHECK(r.mu <= r.mass);
        CHECK(is_integer(r.mu));
    }
}
