#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "dcl/dr67.hpp"
#include "dcl/group.hpp"

using namespace dcl;

TEST_CASE("isotropic point count by brute force") {
    // independent of the group construction: count projective solutions of
    // H(v,v) = 0 directly
    FqField F9(3, 2);
    int count = 0;
    std::set<std::array<uint64_t, 3>> seen;
    for (uint64_t a = 0; a < 9; ++a)
        for (uint64_t b = 0; b < 9; ++b)
            for (uint64_t c = 0; c < 9; ++c) {
                if (a + b + c == 0) continue;
                std::array<FFElem, 3> v{FFElem::from_index(F9, a), FFElem::from_index(F9, b),
                                        FFElem::from_index(F9, c)};
                // normalize projectively
                FFElem lead(F9, 0);
                for (auto& vi : v)
                    if (!vi.is_zero()) { lead = vi; break; }
                FFElem li = lead.inv();
                std::array<uint64_t, 3> key{(v[0] * li).index(), (v[1] * li).index(), (v[2] * li).index()};
                if (!seen.insert(key).second) continue;
                FFElem h(F9, 0);
                for (int i = 0; i < 3; ++i) h = h + v[i] * v[i].frobenius();
                if (h.is_zero()) ++count;
            }
    CHECK(count == 28);
}

TEST_CASE("group orders and class table") {
    const PermGroupTable& T = group();
    CHECK(T.size() == 12096);
    int inner = 0;
    for (auto f : T.is_inner) inner += f;
    CHECK(inner == 6048);

    // identity class
    int idc = T.class_of[T.identity_idx];
    CHECK(T.classes[idc].name == "1A");
    CHECK(T.classes[idc].size == 1);
    CHECK(T.classes[idc].lambda28.str() == "1^28");

    // every class matches the embedded table, term by term
    const auto& data = gamma2_class_data();
    REQUIRE(T.classes.size() == data.size());
    long inner_sum = 0, outer_sum = 0;
    for (size_t i = 0; i < data.size(); ++i) {
        CHECK(T.classes[i].name == data[i].name);
        CHECK(T.classes[i].size == data[i].size);
        CHECK(T.classes[i].order == data[i].order);
        CHECK(T.classes[i].lambda28 == data[i].lambda28);
        CHECK(T.classes[i].inner == data[i].inner);
        (data[i].inner ? inner_sum : outer_sum) += data[i].size;
    }
    CHECK(inner_sum == 6048);
    CHECK(outer_sum == 6048);

    // named examples
    int c2a = T.class_id("2A");
    CHECK(T.classes[c2a].size == 63);
    CHECK(T.classes[c2a].lambda28 == CyclePartition::parse("2^12 1^4"));
    CHECK(T.classes[T.class_id("7AB")].size == 2 * 864);
    CHECK(T.classes[T.class_id("7AB")].lambda28 == CyclePartition::parse("7^4"));
    int c8c = T.class_id("8c");
    CHECK(T.classes[c8c].size == 1512);
    CHECK_FALSE(T.classes[c8c].inner);
    CHECK(T.classes[c8c].lambda28 == CyclePartition::parse("8^3 4"));

    // the fourteen Gamma classes as well
    const auto& gdata = gamma_class_data();
    REQUIRE(T.gclasses.size() == gdata.size());
    for (size_t i = 0; i < gdata.size(); ++i) {
        CHECK(T.gclasses[i].name == gdata[i].name);
        CHECK(T.gclasses[i].size == gdata[i].size);
        CHECK(T.gclasses[i].order == gdata[i].order);
        CHECK(T.gclasses[i].lambda28 == gdata[i].lambda28);
    }
}

TEST_CASE("all elements are even permutations") {
    const PermGroupTable& T = group();
    bool all_even = true;
    for (const auto& p : T.elements) all_even = all_even && p.is_even();
    CHECK(all_even);
}

TEST_CASE("element data matches its class") {
    const PermGroupTable& T = group();
    SplitMix64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        int i = static_cast<int>(rng.below(12096));
        const GroupClass& c = T.classes[T.class_of[i]];
        CHECK(T.elements[i].cycle_type() == c.lambda28);
        CHECK(T.elements[i].order() == c.order);
        CHECK(T.elements[i].order() == c.lambda28.lcm_parts());
    }
}

TEST_CASE("gamma is normal of index 2 and contains commutators") {
    const PermGroupTable& T = group();
    SplitMix64 rng(17);
    for (int trial = 0; trial < 2000; ++trial) {
        int a = static_cast<int>(rng.below(12096)), b = static_cast<int>(rng.below(12096));
        int comm = T.mult(T.mult(a, b), T.mult(T.inv(a), T.inv(b)));
        CHECK(T.is_inner[comm] == 1);
        // coset multiplication
        int prod = T.mult(a, b);
        CHECK((T.is_inner[prod] != 0) == ((T.is_inner[a] != 0) == (T.is_inner[b] != 0)));
    }
}

TEST_CASE("frobenius conjugation swaps the recorded partners") {
    const PermGroupTable& T = group();
    const auto& data = gamma_class_data();
    for (size_t i = 0; i < data.size(); ++i) {
        int mapped = T.gclass_of[T.conj(T.gclasses[i].rep, T.frob_idx)];
        std::string expect = data[i].swap_partner.empty() ? data[i].name : data[i].swap_partner;
        CHECK(T.gclasses[mapped].name == expect);
    }
}

TEST_CASE("subgroup closure") {
    const PermGroupTable& T = group();
    CHECK(T.subgroup_closure({T.identity_idx}, 12096).first == 1);
    // any order-12 element generates a cyclic group of order 12
    int rep12 = T.gclasses[T.gclass_id("12A")].rep;
    CHECK(T.subgroup_closure({rep12}, 12096).first == 12);
    // the full construction generator set
    CHECK(T.subgroup_closure(T.gens, 12096).first == 12096);
    CHECK(T.subgroup_closure(T.ggens, 12096).first == 6048);
}

TEST_CASE("cache round trip and corruption recovery") {
    const PermGroupTable& T = group();
    auto j = group_to_json(T);
    PermGroupTable T2 = group_from_json(j);
    CHECK(T2.size() == T.size());
    CHECK(T2.classes[5].name == T.classes[5].name);
    // corrupt a permutation: validation must reject so a rebuild is triggered
    j["elements"][3][0] = j["elements"][3][1];
    CHECK_THROWS(group_from_json(j));
}

TEST_CASE("section 6.4 matrices") {
    auto rep = verify_dr_matrices();
    for (const auto& line : rep.checks) {
        INFO(line.name);
        CHECK(line.pass);
    }
    CHECK(rep.all_pass());
}

TEST_CASE("rigidity numerics") {
    auto rep = verify_rigidity_numerics();
    for (const auto& line : rep.checks) {
        INFO(line.name);
        CHECK(line.pass);
    }
    CHECK(rep.all_pass());
}
