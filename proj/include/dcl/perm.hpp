#pragma once

// Permutations of 28 points.

#include <array>
#include <cstdint>
#include <cstring>
#include <numeric>
#include <stdexcept>

#include "dcl/partition.hpp"

namespace dcl {

struct Perm28 {
    std::array<uint8_t, 28> img{};

    static Perm28 identity() {
        Perm28 p;
        for (int i = 0; i < 28; ++i) p.img[i] = static_cast<uint8_t>(i);
        return p;
    }

    bool is_bijection() const {
        uint32_t seen = 0;
        for (int i = 0; i < 28; ++i) {
            if (img[i] >= 28) return false;
            seen |= 1u << img[i];
        }
        return seen == 0x0fffffffu;
    }

    // (a*b)(x) = a(b(x))
    Perm28 operator*(const Perm28& o) const {
        Perm28 r;
        for (int i = 0; i < 28; ++i) r.img[i] = img[o.img[i]];
        return r;
    }
    Perm28 inverse() const {
        Perm28 r;
        for (int i = 0; i < 28; ++i) r.img[img[i]] = static_cast<uint8_t>(i);
        return r;
    }

    bool operator==(const Perm28& o) const { return img == o.img; }
    bool operator!=(const Perm28& o) const { return img != o.img; }
    bool operator<(const Perm28& o) const { return std::memcmp(img.data(), o.img.data(), 28) < 0; }

    CyclePartition cycle_type() const {
        std::array<bool, 28> seen{};
        std::vector<int> parts;
        for (int i = 0; i < 28; ++i) {
            if (seen[i]) continue;
            int len = 0, j = i;
            while (!seen[j]) {
                seen[j] = true;
                j = img[j];
                ++len;
            }
            parts.push_back(len);
        }
        return CyclePartition(std::move(parts));
    }

    bool is_even() const {
        auto ct = cycle_type();
        int transpositions = 0;
        for (int len : ct.parts) transpositions += len - 1;
        return transpositions % 2 == 0;
    }

    int order() const { return cycle_type().lcm_parts(); }
};

} // namespace dcl
