#pragma once

// Conjugacy-class data of Gamma.2 = SU3(3).2 on 28 and 36 points: sizes,
// element orders, cycle partitions, and the inner/outer split, for both the
// sixteen Gamma.2 classes and the fourteen Gamma classes. The degree-36
// partitions are data (the degree-36 action is not constructed here).

#include <string>
#include <vector>

#include "dcl/partition.hpp"

namespace dcl {

struct ClassData {
    std::string name;
    int size;
    int order;
    CyclePartition lambda28;
    CyclePartition lambda36;
    bool inner;
    std::string swap_partner; // name after conjugation by an outer element ("" = self)
};

inline const std::vector<ClassData>& gamma2_class_data() {
    static const std::vector<ClassData> data = [] {
        auto P = [](const char* s) { return CyclePartition::parse(s); };
        std::vector<ClassData> v;
        v.push_back({"1A", 1, 1, P("1^28"), P("1^36"), true, ""});
        v.push_back({"2A", 63, 2, P("2^12 1^4"), P("2^12 1^12"), true, ""});
        v.push_back({"3A", 56, 3, P("3^9 1"), P("3^12"), true, ""});
        v.push_back({"3B", 672, 3, P("3^9 1"), P("3^11 1^3"), true, ""});
        v.push_back({"4AB", 126, 4, P("4^6 1^4"), P("4^6 2^6"), true, ""});
        v.push_back({"4C", 378, 4, P("4^6 2^2"), P("4^6 2^4 1^4"), true, ""});
        v.push_back({"6A", 504, 6, P("6^4 3 1"), P("6^4 3^4"), true, ""});
        v.push_back({"7AB", 1728, 7, P("7^4"), P("7^5 1"), true, ""});
        v.push_back({"8AB", 1512, 8, P("8^3 2 1^2"), P("8^3 4^3"), true, ""});
        v.push_back({"12AB", 1008, 12, P("12^2 3 1"), P("12^2 6^2"), true, ""});
        v.push_back({"2b", 252, 2, P("2^12 1^4"), P("2^16 1^4"), false, ""});
        v.push_back({"4d", 252, 4, P("4^6 1^4"), P("4^6 2^6"), false, ""});
        v.push_back({"6b", 2016, 6, P("6^4 3 1"), P("6^5 3 2 1"), false, ""});
        v.push_back({"8c", 1512, 8, P("8^3 4"), P("8^3 4^2 2 1^2"), false, ""});
        v.push_back({"12c", 1008, 12, P("12^2 3 1"), P("12^2 6^2"), false, ""});
        v.push_back({"12d", 1008, 12, P("12^2 3 1"), P("12^2 6^2"), false, ""});
        return v;
    }();
    return data;
}

inline const std::vector<ClassData>& gamma_class_data() {
    static const std::vector<ClassData> data = [] {
        auto P = [](const char* s) { return CyclePartition::parse(s); };
        std::vector<ClassData> v;
        v.push_back({"1A", 1, 1, P("1^28"), P("1^36"), true, ""});
        v.push_back({"2A", 63, 2, P("2^12 1^4"), P("2^12 1^12"), true, ""});
        v.push_back({"3A", 56, 3, P("3^9 1"), P("3^12"), true, ""});
        v.push_back({"3B", 672, 3, P("3^9 1"), P("3^11 1^3"), true, ""});
        v.push_back({"4A", 63, 4, P("4^6 1^4"), P("4^6 2^6"), true, "4B"});
        v.push_back({"4B", 63, 4, P("4^6 1^4"), P("4^6 2^6"), true, "4A"});
        v.push_back({"4C", 378, 4, P("4^6 2^2"), P("4^6 2^4 1^4"), true, ""});
        v.push_back({"6A", 504, 6, P("6^4 3 1"), P("6^4 3^4"), true, ""});
        v.push_back({"7A", 864, 7, P("7^4"), P("7^5 1"), true, "7B"});
        v.push_back({"7B", 864, 7, P("7^4"), P("7^5 1"), true, "7A"});
        v.push_back({"8A", 756, 8, P("8^3 2 1^2"), P("8^3 4^3"), true, "8B"});
        v.push_back({"8B", 756, 8, P("8^3 2 1^2"), P("8^3 4^3"), true, "8A"});
        v.push_back({"12A", 504, 12, P("12^2 3 1"), P("12^2 6^2"), true, "12B"});
        v.push_back({"12B", 504, 12, P("12^2 3 1"), P("12^2 6^2"), true, "12A"});
        return v;
    }();
    return data;
}

// lambda28 values occurring in Gamma.2 (squarefree "good prime" patterns)
inline const std::vector<CyclePartition>& gamma2_lambda28_set() {
    static const std::vector<CyclePartition> set = [] {
        std::vector<CyclePartition> v;
        for (const auto& c : gamma2_class_data()) {
            if (std::find(v.begin(), v.end(), c.lambda28) == v.end()) v.push_back(c.lambda28);
        }
        return v;
    }();
    return set;
}

} // namespace dcl
