#include "snakefrac/contfrac.hpp"

#include <charconv>
#include <limits>

#include "snakefrac/errors.hpp"

namespace snakefrac {

Rational::Rational(mpz_class n, mpz_class d) : num(std::move(n)), den(std::move(d)) {
    if (den == 0) throw validation_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

std::string Rational::to_string() const {
    return num.get_str() + "/" + den.get_str();
}

ContinuedFraction::ContinuedFraction(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
    sums_.reserve(entries_.size() + 1);
    sums_.push_back(0);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        std::int64_t a = entries_[i];
        if (a < 1)
            throw validation_error("continued fraction entry a_" + std::to_string(i + 1) + " = "
                                   + std::to_string(a) + " is not positive");
        std::int64_t next = 0;
        if (__builtin_add_overflow(sums_.back(), a, &next))
            throw validation_error("continued fraction partial sums overflow");
        sums_.push_back(next);
    }
}

ContinuedFraction ContinuedFraction::parse(std::string_view text, bool allow_empty) {
    std::vector<std::int64_t> entries;
    std::size_t pos = 0;
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
    bool token_expected = false;  // set after a comma: the next field must not be empty
    while (pos < text.size()) {
        while (pos < text.size() && is_space(text[pos])) ++pos;
        if (pos >= text.size()) break;
        if (text[pos] == ',') throw validation_error("empty entry in continued fraction \"" + std::string(text) + "\"");
        std::size_t start = pos;
        while (pos < text.size() && text[pos] != ',' && !is_space(text[pos])) ++pos;
        std::string_view tok = text.substr(start, pos - start);
        std::int64_t v = 0;
        auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || end != tok.data() + tok.size())
            throw validation_error("not an integer: \"" + std::string(tok) + "\"");
        entries.push_back(v);
        while (pos < text.size() && is_space(text[pos])) ++pos;
        token_expected = false;
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            token_expected = true;
        }
    }
    if (token_expected) throw validation_error("trailing comma in continued fraction \"" + std::string(text) + "\"");
    if (entries.empty() && !allow_empty)
        throw validation_error("empty continued fraction");
    return ContinuedFraction(std::move(entries));
}

std::int64_t ContinuedFraction::entry(int i) const {
    if (i < 1 || i > length()) throw validation_error("entry index " + std::to_string(i) + " out of range");
    return entries_[static_cast<std::size_t>(i) - 1];
}

std::int64_t ContinuedFraction::partial_sum(int i) const {
    if (i < 0 || i > length()) throw validation_error("partial sum index " + std::to_string(i) + " out of range");
    return sums_[static_cast<std::size_t>(i)];
}

ContinuedFraction ContinuedFraction::prefix(int m) const {
    if (m < 0 || m > length()) throw validation_error("prefix length " + std::to_string(m) + " out of range");
    return ContinuedFraction(std::vector<std::int64_t>(entries_.begin(), entries_.begin() + m));
}

ContinuedFraction ContinuedFraction::tail() const {
    if (empty()) throw validation_error("tail of an empty continued fraction");
    return ContinuedFraction(std::vector<std::int64_t>(entries_.begin() + 1, entries_.end()));
}

std::string ContinuedFraction::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(entries_[i]);
    }
    return out;
}

mpz_class continuant(const ContinuedFraction& cf) {
    // Two-register form of N[a_1..a_k] = a_k N[a_1..a_{k-1}] + N[a_1..a_{k-2}], N[] = 1.
    mpz_class prev = 0;  // N of the (k-2)-prefix, seeded so that N[a_1] = a_1
    mpz_class cur = 1;   // N of the (k-1)-prefix
    for (int k = 1; k <= cf.length(); ++k) {
        mpz_class next = cf.entry(k) * cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Rational value(const ContinuedFraction& cf) {
    if (cf.empty()) throw validation_error("value of an empty continued fraction");
    // Fold from the innermost entry: p/q -> a + q/p = (a*p + q)/p.
    mpz_class p = cf.entry(cf.length());
    mpz_class q = 1;
    for (int i = cf.length() - 1; i >= 1; --i) {
        mpz_class np = cf.entry(i) * p + q;
        q = std::move(p);
        p = std::move(np);
    }
    return Rational(std::move(p), std::move(q));
}

}  // namespace snakefrac
