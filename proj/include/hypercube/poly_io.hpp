#pragma once

#include "hypercube/polynomial.hpp"

#include <cctype>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

namespace hypercube {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Canonical text: "e0 e1 ... e(n-1)\tcoefficient\n", lexicographic order.
inline void write_text(std::ostream& os, const Polynomial& p) {
    std::string line;
    for (const auto& t : p) {
        line.clear();
        for (std::size_t i = 0; i < p.arity(); ++i) {
            if (i) line.push_back(' ');
            line += std::to_string(t.exponent[i]);
        }
        line.push_back('\t');
        line += t.coefficient.to_string();
        line.push_back('\n');
        os << line;
    }
}

inline std::string to_text(const Polynomial& p) {
    std::ostringstream os;
    write_text(os, p);
    return os.str();
}

inline Polynomial read_text(std::istream& is, std::size_t arity) {
    std::vector<Term> terms;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos) throw ParseError("line " + std::to_string(lineno) + ": missing tab");
        std::istringstream es(line.substr(0, tab));
        ExponentVector e;
        std::size_t k = 0;
        int v;
        while (es >> v) {
            if (k >= arity) throw ParseError("line " + std::to_string(lineno) + ": too many exponents");
            e.set(k++, v);
        }
        if (k != arity) throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(arity) + " exponents");
        Integer c = Integer::parse(line.substr(tab + 1));
        if (c.is_zero()) throw ParseError("line " + std::to_string(lineno) + ": zero coefficient");
        if (!terms.empty() && !(terms.back().exponent < e))
            throw ParseError("line " + std::to_string(lineno) + ": terms not strictly sorted");
        terms.push_back({e, std::move(c)});
    }
    return Polynomial::from_sorted_terms(arity, std::move(terms));
}

inline Polynomial from_text(const std::string& s, std::size_t arity) {
    std::istringstream is(s);
    return read_text(is, arity);
}

// Binary cache: magic, arity (u32), term count (u64), packed exponents, then
// zigzag varint coefficients. Varint 0 escapes a big coefficient given as
// varint(byte count << 1 | sign) followed by little-endian magnitude bytes.
inline constexpr char kCacheMagic[8] = {'H', 'C', 'P', 'O', 'L', 'Y', '0', '1'};

namespace detail {

inline void put_varint(std::string& out, std::uint64_t v) {
    while (v >= 0x80) {
        out.push_back(static_cast<char>(v | 0x80));
        v >>= 7;
    }
    out.push_back(static_cast<char>(v));
}

inline std::uint64_t get_varint(const std::string& in, std::size_t& pos) {
    std::uint64_t v = 0;
    for (int shift = 0; shift < 64; shift += 7) {
        if (pos >= in.size()) throw ParseError("truncated varint");
        auto b = static_cast<std::uint8_t>(in[pos++]);
        v |= static_cast<std::uint64_t>(b & 0x7F) << shift;
        if (!(b & 0x80)) return v;
    }
    throw ParseError("overlong varint");
}

}  // namespace detail

inline std::string to_binary(const Polynomial& p) {
    std::string out(kCacheMagic, 8);
    auto put_fixed = [&](std::uint64_t v, int bytes) {
        for (int i = 0; i < bytes; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
    };
    put_fixed(p.arity(), 4);
    put_fixed(p.size(), 8);
    for (const auto& t : p) out.append(reinterpret_cast<const char*>(t.exponent.data()), p.arity());
    for (const auto& t : p) {
        const Integer& c = t.coefficient;
        if (c.is_small() && c.small() != INT64_MIN) {
            std::int64_t v = c.small();
            detail::put_varint(out, (static_cast<std::uint64_t>(v) << 1) ^ static_cast<std::uint64_t>(v >> 63));
        } else {
            BigInt m = boost::multiprecision::abs(c.big());
            std::string bytes;
            while (m > 0) {
                bytes.push_back(static_cast<char>(static_cast<unsigned>(m & 0xFF)));
                m >>= 8;
            }
            detail::put_varint(out, 0);
            detail::put_varint(out, (bytes.size() << 1) | (c.sign() < 0 ? 1u : 0u));
            out += bytes;
        }
    }
    return out;
}

inline Polynomial from_binary(const std::string& in) {
    if (in.size() < 20 || std::memcmp(in.data(), kCacheMagic, 8) != 0) throw ParseError("bad cache magic");
    auto get_fixed = [&](std::size_t pos, int bytes) {
        std::uint64_t v = 0;
        for (int i = 0; i < bytes; ++i) v |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(in[pos + i])) << (8 * i);
        return v;
    };
    std::size_t arity = get_fixed(8, 4);
    std::size_t count = get_fixed(12, 8);
    if (arity > ExponentVector::kCapacity) throw ParseError("cache arity too large");
    std::size_t pos = 20;
    if (in.size() < pos + count * arity) throw ParseError("truncated exponent block");
    std::vector<Term> terms(count);
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t k = 0; k < arity; ++k) terms[i].exponent.set(k, static_cast<std::uint8_t>(in[pos + k]));
        pos += arity;
        if (i && !(terms[i - 1].exponent < terms[i].exponent)) throw ParseError("cache terms not sorted");
    }
    for (std::size_t i = 0; i < count; ++i) {
        std::uint64_t z = detail::get_varint(in, pos);
        if (z != 0) {
            auto v = static_cast<std::int64_t>((z >> 1) ^ (~(z & 1) + 1));
            terms[i].coefficient = Integer(v);
        } else {
            std::uint64_t hdr = detail::get_varint(in, pos);
            std::size_t nbytes = hdr >> 1;
            if (pos + nbytes > in.size()) throw ParseError("truncated big coefficient");
            BigInt m = 0;
            for (std::size_t k = nbytes; k-- > 0;) m = (m << 8) | static_cast<std::uint8_t>(in[pos + k]);
            pos += nbytes;
            terms[i].coefficient = Integer((hdr & 1) ? BigInt(-m) : m);
        }
        if (terms[i].coefficient.is_zero()) throw ParseError("zero coefficient in cache");
    }
    if (pos != in.size()) throw ParseError("trailing bytes in cache");
    return Polynomial::from_sorted_terms(arity, std::move(terms));
}

// Parses expressions such as "c0000^2*c1111 - 2*(c0101 + c1010)" over cube
// variables c<bits>, with bit strings of a fixed length n.
class ExpressionParser {
public:
    ExpressionParser(std::string_view text, int n) : s_(text), n_(n), arity_(std::size_t{1} << n) {}

    Polynomial parse() {
        Polynomial p = sum();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    Polynomial sum() {
        Polynomial acc(arity_);
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        for (;;) {
            Polynomial t = prod();
            acc = neg ? subtract(acc, t) : add(acc, t);
            if (eat('+')) neg = false;
            else if (eat('-')) neg = true;
            else return acc;
        }
    }
    Polynomial prod() {
        Polynomial acc = power();
        for (;;) {
            skip();
            if (eat('*')) {
                acc = mul(acc, power());
            } else if (pos_ < s_.size() && (s_[pos_] == '(' || s_[pos_] == 'c')) {
                acc = mul(acc, power());
            } else {
                return acc;
            }
        }
    }
    Polynomial power() {
        Polynomial base = atom();
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            base = hypercube::pow(base, static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
        }
        return base;
    }
    Polynomial atom() {
        skip();
        if (eat('(')) {
            Polynomial p = sum();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (pos_ < s_.size() && s_[pos_] == 'c') {
            ++pos_;
            std::size_t label = 0;
            for (int k = 0; k < n_; ++k) {
                if (pos_ >= s_.size() || (s_[pos_] != '0' && s_[pos_] != '1')) fail("expected vertex label");
                label = 2 * label + static_cast<std::size_t>(s_[pos_++] - '0');
            }
            return Polynomial::variable(arity_, label);
        }
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected term");
        return Polynomial::constant(arity_, Integer::parse(s_.substr(start, pos_ - start)));
    }

    std::string_view s_;
    int n_;
    std::size_t arity_;
    std::size_t pos_ = 0;
};

inline Polynomial parse_cube_polynomial(std::string_view text, int n) { return ExpressionParser(text, n).parse(); }

inline std::string vertex_label(std::size_t label, int n) {
    std::string s(n, '0');
    for (int k = 0; k < n; ++k)
        if (label >> (n - 1 - k) & 1) s[k] = '1';
    return s;
}

// Human-readable form such as "-2*c0001*c0110^2 + ...", terms in descending order.
inline std::string to_expression(const Polynomial& p, int n) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        Integer c = it->coefficient;
        bool first = out.empty();
        if (c.sign() < 0) {
            out += first ? "-" : " - ";
            c = -c;
        } else if (!first) {
            out += " + ";
        }
        std::string mono;
        for (std::size_t v = 0; v < p.arity(); ++v) {
            int e = it->exponent[v];
            if (!e) continue;
            if (!mono.empty()) mono += "*";
            mono += "c" + vertex_label(v, n);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty()) out += c.to_string();
        else if (c.is_one()) out += mono;
        else out += c.to_string() + "*" + mono;
    }
    return out;
}

inline std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& data) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << data;
    if (!f) throw std::runtime_error("write failed for " + path);
}

}  // namespace hypercube
