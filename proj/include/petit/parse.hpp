/*
   Copyright 2026 The petit authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file parse.hpp
 * @brief Text formats for rings, elements, morphisms and polynomials.
 *
 * Ring specs:  named fixture ("F4", "GR42", "F8", "Z4"),
 *              `ring { p = 2, e = 2, n = 2, modulus = [1,1,1] }`,
 *              the JSON mirror `{"p":2,"e":2,"n":2,"modulus":[1,1,1]}`,
 *              or `@path` to read any of these from a file.
 * Elements:    little-endian coordinate arrays `[3,1]` or symbolic sums of
 *              integers and generator powers (`w^2`, `2x+3`; w and x both
 *              name the power-basis generator).
 * Polynomials: `poly [[c0...],[c1...],...]` (each coefficient an element
 *              coordinate array, bare integers allowed), or symbolic
 *              `t^2 - w`, `(x+1)t^2 + 2t - 1`. Symbolic input is evaluated
 *              with the actual skew product, so `t w` means sigma(w) t.
 * Morphisms:   sigma = `id` | `frobenius:k` | `table:<json>`;
 *              delta = `zero` | `inner:<element>` | `table:<json>`,
 *              where table json is the value table as an array of element
 *              coordinate arrays in enumeration order.
 *
 * All failures throw parse_error with the offending position.
 */

#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "petit/chain_ring.hpp"
#include "petit/error.hpp"
#include "petit/fixtures.hpp"
#include "petit/morphism.hpp"
#include "petit/skew_poly.hpp"

namespace petit {

namespace detail {

struct Cursor {
    std::string s;
    std::size_t pos = 0;

    explicit Cursor(std::string text) : s(std::move(text)) {}

    void ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        ws();
        return pos >= s.size();
    }
    char peek() {
        ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const std::string& where) {
        if (!accept(c))
            throw parse_error("expected '" + std::string(1, c) + "' in " + where, pos);
    }
    bool accept_word(const std::string& w) {
        ws();
        if (s.compare(pos, w.size(), w) == 0) {
            pos += w.size();
            return true;
        }
        return false;
    }
    long long integer() {
        ws();
        std::size_t start = pos;
        bool neg = accept('-');
        ws();
        std::size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) throw parse_error("expected an integer", start);
        long long v = std::stoll(s.substr(digits, pos - digits));
        return neg ? -v : v;
    }
    std::string ident() {
        ws();
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (pos == start) throw parse_error("expected an identifier", start);
        return s.substr(start, pos - start);
    }
    void end(const std::string& where) {
        if (!done()) throw parse_error("trailing input after " + where, pos);
    }
};

inline std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("FileNotFound", "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// `[1, 2, 3]` as raw integers.
inline std::vector<long long> int_array(Cursor& c) {
    std::vector<long long> out;
    c.expect('[', "array");
    if (!c.accept(']')) {
        do {
            out.push_back(c.integer());
        } while (c.accept(','));
        c.expect(']', "array");
    }
    return out;
}

inline RingElement element_from_ints(const RingPtr& ring, const std::vector<long long>& v,
                                     std::size_t at) {
    if (v.size() > ring->n())
        throw parse_error("element has more coordinates than the extension degree", at);
    std::vector<std::uint64_t> c(ring->n(), 0);
    const long long m = static_cast<long long>(ring->coeff_modulus());
    for (std::size_t i = 0; i < v.size(); ++i)
        c[i] = static_cast<std::uint64_t>(((v[i] % m) + m) % m);
    return ring->element(std::move(c));
}

// symbolic element expression: sums of integer / generator-power terms
inline RingElement element_expr(Cursor& c, const RingPtr& ring);

inline RingElement element_factor(Cursor& c, const RingPtr& ring) {
    c.ws();
    if (c.peek() == '(') {
        c.accept('(');
        RingElement v = element_expr(c, ring);
        c.expect(')', "element expression");
        return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) return ring->from_int(c.integer());
    if (c.peek() == 'w' || c.peek() == 'x') {
        ++c.pos;
        if (ring->n() < 2)
            throw parse_error("this ring has no power-basis generator", c.pos - 1);
        RingElement g = ring->generator();
        if (c.accept('^')) return g.pow(static_cast<std::uint64_t>(c.integer()));
        return g;
    }
    throw parse_error("expected an element factor", c.pos);
}

inline bool starts_factor(char ch) {
    return std::isdigit(static_cast<unsigned char>(ch)) || ch == 'w' || ch == 'x' || ch == '(';
}

inline RingElement element_term(Cursor& c, const RingPtr& ring) {
    RingElement v = element_factor(c, ring);
    while (true) {
        if (c.accept('*')) {
            v *= element_factor(c, ring);
            continue;
        }
        if (starts_factor(c.peek())) {
            v *= element_factor(c, ring);
            continue;
        }
        return v;
    }
}

inline RingElement element_expr(Cursor& c, const RingPtr& ring) {
    RingElement v = c.accept('-') ? -element_term(c, ring) : element_term(c, ring);
    while (true) {
        if (c.accept('+'))
            v += element_term(c, ring);
        else if (c.accept('-'))
            v -= element_term(c, ring);
        else
            return v;
    }
}

// symbolic polynomial expression over a skew context
inline SkewPoly poly_expr(Cursor& c, const CtxPtr& ctx);

inline SkewPoly poly_factor(Cursor& c, const CtxPtr& ctx) {
    c.ws();
    if (c.peek() == '(') {
        c.accept('(');
        SkewPoly v = poly_expr(c, ctx);
        c.expect(')', "polynomial expression");
        return v;
    }
    if (c.peek() == 't') {
        ++c.pos;
        std::size_t k = 1;
        if (c.accept('^')) k = static_cast<std::size_t>(c.integer());
        return SkewPoly::monomial(ctx, 1, k);
    }
    if (std::isdigit(static_cast<unsigned char>(c.peek())))
        return SkewPoly::constant(ctx, ctx->ring->from_int(c.integer()));
    if (c.peek() == 'w' || c.peek() == 'x')
        return SkewPoly::constant(ctx, element_factor(c, ctx->ring));
    throw parse_error("expected a polynomial factor", c.pos);
}

inline bool starts_poly_factor(char ch) { return starts_factor(ch) || ch == 't'; }

inline SkewPoly poly_term(Cursor& c, const CtxPtr& ctx) {
    SkewPoly v = poly_factor(c, ctx);
    while (true) {
        if (c.accept('*')) {
            v = v * poly_factor(c, ctx);
            continue;
        }
        if (starts_poly_factor(c.peek())) {
            v = v * poly_factor(c, ctx);
            continue;
        }
        return v;
    }
}

inline SkewPoly poly_expr(Cursor& c, const CtxPtr& ctx) {
    SkewPoly v = c.accept('-') ? -poly_term(c, ctx) : poly_term(c, ctx);
    while (true) {
        if (c.accept('+'))
            v = v + poly_term(c, ctx);
        else if (c.accept('-'))
            v = v - poly_term(c, ctx);
        else
            return v;
    }
}

}  // namespace detail

inline RingElement parse_element(const RingPtr& ring, const std::string& text) {
    detail::Cursor c(text);
    if (c.peek() == '[') {
        const std::size_t at = c.pos;
        RingElement v = detail::element_from_ints(ring, detail::int_array(c), at);
        c.end("element");
        return v;
    }
    RingElement v = detail::element_expr(c, ring);
    c.end("element");
    return v;
}

inline SkewPoly parse_poly(const CtxPtr& ctx, const std::string& text) {
    detail::Cursor c(text);
    c.accept_word("poly");
    if (c.peek() == '[') {
        c.expect('[', "polynomial");
        std::vector<RingElement> coeffs;
        if (!c.accept(']')) {
            do {
                c.ws();
                if (c.peek() == '[') {
                    const std::size_t at = c.pos;
                    coeffs.push_back(
                        detail::element_from_ints(ctx->ring, detail::int_array(c), at));
                } else {
                    coeffs.push_back(ctx->ring->from_int(c.integer()));
                }
            } while (c.accept(','));
            c.expect(']', "polynomial");
        }
        c.end("polynomial");
        return SkewPoly::from_coeffs(ctx, std::move(coeffs));
    }
    SkewPoly v = detail::poly_expr(c, ctx);
    c.end("polynomial");
    return v;
}

inline RingPtr parse_ring_spec(const std::string& text) {
    detail::Cursor c(text);
    c.ws();
    if (c.peek() == '@') return parse_ring_spec(detail::slurp(text.substr(c.pos + 1)));
    if (c.peek() == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& ex) {
            throw parse_error(std::string("invalid ring JSON: ") + ex.what(), c.pos);
        }
        if (!j.contains("p") || !j.contains("e"))
            throw parse_error("ring JSON needs fields p and e", c.pos);
        std::vector<std::uint64_t> modulus;
        if (j.contains("modulus"))
            for (const auto& v : j["modulus"]) modulus.push_back(v.get<std::uint64_t>());
        RingPtr ring = ChainRing::make(j["p"].get<std::uint64_t>(), j["e"].get<unsigned>(),
                                       std::move(modulus));
        if (j.contains("n") && j["n"].get<unsigned>() != ring->n())
            throw parse_error("field n contradicts the modulus degree", c.pos);
        return ring;
    }
    if (c.accept_word("ring")) {
        c.expect('{', "ring spec");
        std::uint64_t p = 0;
        unsigned e = 0;
        long long n = -1;
        std::vector<std::uint64_t> modulus;
        bool have_p = false, have_e = false;
        if (!c.accept('}')) {
            do {
                const std::size_t at = c.pos;
                const std::string key = c.ident();
                c.expect('=', "ring spec");
                if (key == "p") {
                    p = static_cast<std::uint64_t>(c.integer());
                    have_p = true;
                } else if (key == "e") {
                    e = static_cast<unsigned>(c.integer());
                    have_e = true;
                } else if (key == "n") {
                    n = c.integer();
                } else if (key == "modulus") {
                    for (long long v : detail::int_array(c))
                        modulus.push_back(static_cast<std::uint64_t>(v));
                } else {
                    throw parse_error("unknown ring spec key '" + key + "'", at);
                }
            } while (c.accept(','));
            c.expect('}', "ring spec");
        }
        c.end("ring spec");
        if (!have_p || !have_e) throw parse_error("ring spec needs p and e", c.pos);
        RingPtr ring = ChainRing::make(p, e, std::move(modulus));
        if (n >= 0 && static_cast<unsigned>(n) != ring->n())
            throw parse_error("field n contradicts the modulus degree", c.pos);
        return ring;
    }
    const std::string name = c.ident();
    c.end("ring spec");
    if (!fixtures::is_named_ring(name))
        throw parse_error("unknown ring spec '" + name + "'", 0);
    return fixtures::named_ring(name);
}

namespace detail {
inline std::vector<std::uint32_t> morphism_table_from_json(const RingPtr& ring,
                                                           const std::string& text) {
    std::string body = text;
    Cursor c(text);
    if (c.peek() == '@') body = slurp(text.substr(c.pos + 1));
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception& ex) {
        throw parse_error(std::string("invalid table JSON: ") + ex.what(), 0);
    }
    if (!j.is_array() || j.size() != ring->cardinality())
        throw parse_error("table must list an image for every ring element", 0);
    std::vector<std::uint32_t> t;
    t.reserve(j.size());
    for (const auto& row : j) {
        std::vector<long long> coords;
        if (row.is_array())
            for (const auto& v : row) coords.push_back(v.get<long long>());
        else
            coords.push_back(row.get<long long>());
        t.push_back(static_cast<std::uint32_t>(
            ring->index_of(element_from_ints(ring, coords, 0))));
    }
    return t;
}
}  // namespace detail

inline RingMorphism parse_sigma_spec(const RingPtr& ring, const std::string& text) {
    if (text == "id" || text == "identity" || text == "frobenius:0")
        return RingMorphism::identity(ring);
    if (text.rfind("frobenius:", 0) == 0) {
        detail::Cursor c(text.substr(10));
        const unsigned k = static_cast<unsigned>(c.integer());
        c.end("frobenius spec");
        return RingMorphism::frobenius_lift(ring, k);
    }
    if (text.rfind("table:", 0) == 0)
        return RingMorphism::make_automorphism(
            ring, detail::morphism_table_from_json(ring, text.substr(6)));
    throw parse_error("sigma spec must be id, frobenius:<k> or table:<json>", 0);
}

inline RingMorphism parse_delta_spec(const RingPtr& ring, const RingMorphism& sigma,
                                     const std::string& text) {
    if (text == "zero" || text == "0") return RingMorphism::zero_derivation(ring);
    if (text.rfind("inner:", 0) == 0)
        return RingMorphism::inner_derivation(parse_element(ring, text.substr(6)), sigma);
    if (text.rfind("table:", 0) == 0)
        return RingMorphism::make_derivation(
            ring, detail::morphism_table_from_json(ring, text.substr(6)), &sigma);
    throw parse_error("delta spec must be zero, inner:<element> or table:<json>", 0);
}

}  // namespace petit
