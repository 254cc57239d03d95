#pragma once

// Cycle partitions: multisets of positive integers, stored sorted descending.
// These record permutation cycle types and mod-p factorization degree
// patterns, written like "8^3 4 1^2".

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcl {

struct CyclePartition {
    std::vector<int> parts; // sorted descending

    CyclePartition() = default;
    explicit CyclePartition(std::vector<int> p) : parts(std::move(p)) {
        std::sort(parts.begin(), parts.end(), std::greater<int>());
    }

    int total() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int count() const { return static_cast<int>(parts.size()); }

    bool operator==(const CyclePartition& o) const { return parts == o.parts; }
    bool operator!=(const CyclePartition& o) const { return parts != o.parts; }
    bool operator<(const CyclePartition& o) const { return parts < o.parts; }

    std::string str() const {
        if (parts.empty()) return "()";
        std::ostringstream out;
        size_t i = 0;
        bool first = true;
        while (i < parts.size()) {
            size_t j = i;
            while (j < parts.size() && parts[j] == parts[i]) ++j;
            if (!first) out << " ";
            out << parts[i];
            if (j - i > 1) out << "^" << (j - i);
            first = false;
            i = j;
        }
        return out.str();
    }

    // "8^3 4 1^2" or "3^9 1"
    static CyclePartition parse(const std::string& s) {
        std::vector<int> parts;
        std::istringstream in(s);
        std::string tok;
        while (in >> tok) {
            auto caret = tok.find('^');
            int base, mult = 1;
            if (caret == std::string::npos) {
                base = std::stoi(tok);
            } else {
                base = std::stoi(tok.substr(0, caret));
                mult = std::stoi(tok.substr(caret + 1));
            }
            if (base <= 0 || mult <= 0) throw std::invalid_argument("bad partition token: " + tok);
            for (int k = 0; k < mult; ++k) parts.push_back(base);
        }
        return CyclePartition(std::move(parts));
    }

    int lcm_parts() const {
        long l = 1;
        for (int p : parts) l = std::lcm(l, static_cast<long>(p));
        return static_cast<int>(l);
    }
};

} // namespace dcl
