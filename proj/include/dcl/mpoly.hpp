#pragma once

// Sparse multivariate polynomials over BigRat: up to 8 variables, exponents
// packed 16 bits per variable into a 128-bit key, terms kept sorted in
// descending lex order. Includes a small expression parser used for the
// embedded formulas (explicit '*' required, '^' for powers).

#include <cctype>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "dcl/numeric.hpp"
#include "dcl/poly.hpp"
#include "dcl/rational.hpp"

namespace dcl {

struct ExpKey {
    uint64_t hi = 0, lo = 0;

    int get(int var) const {
        uint64_t w = var < 4 ? hi : lo;
        int slot = var & 3;
        return static_cast<int>((w >> (48 - 16 * slot)) & 0xffff);
    }
    void set(int var, int e) {
        if (e < 0 || e > 0xffff) throw std::overflow_error("exponent out of range");
        uint64_t& w = var < 4 ? hi : lo;
        int slot = var & 3;
        w &= ~(0xffffull << (48 - 16 * slot));
        w |= static_cast<uint64_t>(e) << (48 - 16 * slot);
    }
    ExpKey operator+(const ExpKey& o) const { return {hi + o.hi, lo + o.lo}; } // valid when no slot overflows
    bool operator==(const ExpKey& o) const { return hi == o.hi && lo == o.lo; }
    bool operator<(const ExpKey& o) const { return hi != o.hi ? hi < o.hi : lo < o.lo; }
    bool operator>(const ExpKey& o) const { return o < *this; }
};

class MPoly {
  public:
    std::vector<std::string> vars;
    std::vector<std::pair<ExpKey, BigRat>> terms; // descending key order, no zero coefficients

    MPoly() = default;
    explicit MPoly(std::vector<std::string> vars_) : vars(std::move(vars_)) {
        if (vars.size() > 8) throw std::invalid_argument("at most 8 variables");
    }

    static MPoly constant(std::vector<std::string> vars_, const BigRat& v) {
        MPoly p(std::move(vars_));
        if (v != 0) p.terms.emplace_back(ExpKey{}, v);
        return p;
    }
    static MPoly var(std::vector<std::string> vars_, const std::string& name) {
        MPoly p(std::move(vars_));
        ExpKey k;
        k.set(p.var_index(name), 1);
        p.terms.emplace_back(k, BigRat(1));
        return p;
    }

    int var_index(const std::string& name) const {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        throw std::invalid_argument("unknown variable " + name);
    }

    bool is_zero() const { return terms.empty(); }
    size_t term_count() const { return terms.size(); }
    int degree_in(int var) const {
        int d = 0;
        for (const auto& [k, c] : terms) d = std::max(d, k.get(var));
        return d;
    }
    int total_degree() const {
        int d = 0;
        for (const auto& [k, c] : terms) {
            int t = 0;
            for (size_t v = 0; v < vars.size(); ++v) t += k.get(static_cast<int>(v));
            d = std::max(d, t);
        }
        return d;
    }

    bool operator==(const MPoly& o) const { return vars == o.vars && terms == o.terms; }

    MPoly operator-() const {
        MPoly r = *this;
        for (auto& [k, c] : r.terms) c = -c;
        return r;
    }
    MPoly operator+(const MPoly& o) const {
        check(o);
        MPoly r(vars);
        r.terms.reserve(terms.size() + o.terms.size());
        size_t i = 0, j = 0;
        while (i < terms.size() || j < o.terms.size()) {
            if (j == o.terms.size() || (i < terms.size() && o.terms[j].first < terms[i].first)) {
                r.terms.push_back(terms[i++]);
            } else if (i == terms.size() || terms[i].first < o.terms[j].first) {
                r.terms.push_back(o.terms[j++]);
            } else {
                BigRat s = terms[i].second + o.terms[j].second;
                if (s != 0) r.terms.emplace_back(terms[i].first, s);
                ++i, ++j;
            }
        }
        return r;
    }
    MPoly operator-(const MPoly& o) const { return *this + (-o); }
    MPoly operator*(const MPoly& o) const {
        check(o);
        MPoly r(vars);
        if (terms.empty() || o.terms.empty()) return r;
        std::map<ExpKey, BigRat, std::greater<ExpKey>> acc;
        for (const auto& [ka, ca] : terms)
            for (const auto& [kb, cb] : o.terms) {
                ExpKey k = ka + kb;
                auto [it, fresh] = acc.emplace(k, ca * cb);
                if (!fresh) it->second += ca * cb;
            }
        for (auto& [k, c] : acc)
            if (c != 0) r.terms.emplace_back(k, c);
        return r;
    }
    MPoly operator*(const BigRat& s) const {
        if (s == 0) return MPoly(vars);
        MPoly r = *this;
        for (auto& [k, c] : r.terms) c *= s;
        return r;
    }
    MPoly pow(unsigned e) const {
        MPoly r = constant(vars, BigRat(1)), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    BigRat eval(const std::vector<BigRat>& point) const {
        if (point.size() != vars.size()) throw std::invalid_argument("wrong point arity");
        BigRat acc(0);
        for (const auto& [k, c] : terms) {
            BigRat t = c;
            for (size_t v = 0; v < vars.size(); ++v) {
                int e = k.get(static_cast<int>(v));
                if (e) t *= pow_rat(point[v], e);
            }
            acc += t;
        }
        return acc;
    }

    uint64_t eval_mod(const std::vector<uint64_t>& point, uint64_t p) const {
        if (point.size() != vars.size()) throw std::invalid_argument("wrong point arity");
        uint64_t acc = 0;
        for (const auto& [k, c] : terms) {
            uint64_t t = rat_mod(c, p);
            for (size_t v = 0; v < vars.size(); ++v) {
                int e = k.get(static_cast<int>(v));
                if (e) t = mulmod_u64(t, powmod_u64(point[v], static_cast<uint64_t>(e), p), p);
            }
            acc = (acc + t) % p;
        }
        return acc;
    }

    // substitute every variable except `keep` with the given rationals;
    // result is univariate in vars[keep]
    Poly<BigRat> specialize_to(const int keep, const std::vector<BigRat>& values) const {
        Poly<BigRat> out(( BigRat(0) ));
        for (const auto& [k, c] : terms) {
            BigRat t = c;
            for (size_t v = 0; v < vars.size(); ++v) {
                if (static_cast<int>(v) == keep) continue;
                int e = k.get(static_cast<int>(v));
                if (e) t *= pow_rat(values[v], e);
            }
            if (t == 0) continue;
            size_t d = static_cast<size_t>(k.get(keep));
            if (out.c.size() <= d) out.c.resize(d + 1, BigRat(0));
            out.c[d] += t;
        }
        out.normalize();
        return out;
    }

    // full substitution: variable i is replaced by images[i] (all in the image ring)
    MPoly subst(const std::vector<MPoly>& images) const {
        if (images.size() != vars.size()) throw std::invalid_argument("wrong image arity");
        std::vector<std::string> tvars = images.empty() ? vars : images[0].vars;
        // cache powers of each image
        std::vector<std::vector<MPoly>> powers(images.size());
        for (size_t v = 0; v < images.size(); ++v) powers[v].push_back(MPoly::constant(tvars, BigRat(1)));
        MPoly acc(tvars);
        for (const auto& [k, c] : terms) {
            MPoly t = MPoly::constant(tvars, c);
            for (size_t v = 0; v < vars.size(); ++v) {
                int e = k.get(static_cast<int>(v));
                if (!e) continue;
                auto& pw = powers[v];
                while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[v]);
                t = t * pw[e];
            }
            acc = acc + t;
        }
        return acc;
    }

    std::string str() const {
        if (terms.empty()) return "0";
        std::string out;
        for (const auto& [k, c] : terms) {
            if (!out.empty()) out += " + ";
            out += rat_to_string(c);
            for (size_t v = 0; v < vars.size(); ++v) {
                int e = k.get(static_cast<int>(v));
                if (!e) continue;
                out += "*" + vars[v];
                if (e > 1) out += "^" + std::to_string(e);
            }
        }
        return out;
    }

    static MPoly parse(const std::vector<std::string>& vars_, const std::string& text);

  private:
    void check(const MPoly& o) const {
        if (vars != o.vars) throw std::invalid_argument("variable lists differ");
    }
};

namespace detail {
struct MParser {
    const std::vector<std::string>& vars;
    const std::string& s;
    size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }

    MPoly expr() {
        MPoly acc = eat('-') ? -term() : term();
        for (;;) {
            if (eat('+')) acc = acc + term();
            else if (eat('-')) acc = acc - term();
            else return acc;
        }
    }
    MPoly term() {
        MPoly acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }
    MPoly factor() {
        MPoly b = base();
        if (eat('^')) {
            skip();
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (start == pos) throw std::invalid_argument("exponent expected");
            b = b.pow(static_cast<unsigned>(std::stoul(s.substr(start, pos - start))));
        }
        return b;
    }
    MPoly base() {
        skip();
        if (eat('(')) {
            MPoly inner = expr();
            if (!eat(')')) throw std::invalid_argument("missing ')'");
            return inner;
        }
        if (eat('-')) return -factor();
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            return MPoly::constant(vars, BigRat(BigInt(s.substr(start, pos - start))));
        }
        if (pos < s.size() && (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
            size_t start = pos;
            while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
            return MPoly::var(vars, s.substr(start, pos - start));
        }
        throw std::invalid_argument("parse error at position " + std::to_string(pos));
    }
};
} // namespace detail

inline MPoly MPoly::parse(const std::vector<std::string>& vars_, const std::string& text) {
    detail::MParser p{vars_, text};
    MPoly out = p.expr();
    p.skip();
    if (p.pos != text.size()) throw std::invalid_argument("trailing input in polynomial");
    return out;
}

} // namespace dcl
