#include "snakefrac/laurent.hpp"

#include <algorithm>
#include <limits>

#include "snakefrac/errors.hpp"

namespace snakefrac {

Monomial Monomial::variable(int var, int exp) {
    if (var < 1) throw validation_error("variable index must be >= 1");
    Monomial m;
    if (exp != 0) m.factors_.emplace_back(var, exp);
    return m;
}

Monomial Monomial::range_product(int lo, int hi, bool inverted) {
    Monomial m;
    int e = inverted ? -1 : 1;
    for (int j = std::max(lo, 1); j <= hi; ++j) m.factors_.emplace_back(j, e);
    return m;
}

Monomial Monomial::from_factors(std::vector<std::pair<int, int>> factors) {
    std::sort(factors.begin(), factors.end());
    Monomial m;
    for (auto& [var, exp] : factors) {
        if (var < 1) throw validation_error("variable index must be >= 1");
        if (!m.factors_.empty() && m.factors_.back().first == var)
            throw validation_error("duplicate variable in monomial");
        if (exp != 0) m.factors_.emplace_back(var, exp);
    }
    return m;
}

int Monomial::exponent(int var) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), std::pair<int, int>{var, std::numeric_limits<int>::min()});
    if (it != factors_.end() && it->first == var) return it->second;
    return 0;
}

long long Monomial::total_degree() const {
    long long d = 0;
    for (auto& [var, exp] : factors_) d += exp;
    return d;
}

bool Monomial::has_negative_exponent() const {
    for (auto& [var, exp] : factors_)
        if (exp < 0) return true;
    return false;
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin(), b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
        if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            out.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            out.factors_.push_back(*b++);
        } else {
            int e = a->second + b->second;
            if (e != 0) out.factors_.emplace_back(a->first, e);
            ++a;
            ++b;
        }
    }
    return out;
}

Monomial Monomial::inverse() const {
    Monomial out;
    out.factors_.reserve(factors_.size());
    for (auto& [var, exp] : factors_) out.factors_.emplace_back(var, -exp);
    return out;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
    long long da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    auto ia = a.factors_.begin(), ib = b.factors_.begin();
    while (ia != a.factors_.end() || ib != b.factors_.end()) {
        // exponent at the earliest variable where the monomials differ
        // decides; the larger exponent sorts first
        if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->first < ib->first))
            return ia->second > 0 ? -1 : 1;
        if (ia == a.factors_.end() || ib->first < ia->first)
            return ib->second > 0 ? 1 : -1;
        if (ia->second != ib->second) return ia->second > ib->second ? -1 : 1;
        ++ia;
        ++ib;
    }
    return 0;
}

std::string Monomial::to_text() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (auto& [var, exp] : factors_) {
        if (!out.empty()) out += '*';
        out += 'y';
        out += std::to_string(var);
        if (exp != 1) {
            out += '^';
            out += std::to_string(exp);
        }
    }
    return out;
}

std::string Monomial::to_latex() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (auto& [var, exp] : factors_) {
        out += "y_";
        if (var < 10) {
            out += std::to_string(var);
        } else {
            out += '{' + std::to_string(var) + '}';
        }
        if (exp != 1) out += "^{" + std::to_string(exp) + "}";
    }
    return out;
}

LaurentPolynomial LaurentPolynomial::from_monomial(Monomial m, mpz_class coeff) {
    LaurentPolynomial p;
    if (coeff != 0) p.terms_.emplace(std::move(m), std::move(coeff));
    return p;
}

mpz_class LaurentPolynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

const Monomial& LaurentPolynomial::top_term() const {
    if (terms_.empty()) throw validation_error("top term of the zero polynomial");
    return terms_.rbegin()->first;
}

LaurentPolynomial LaurentPolynomial::plus(const LaurentPolynomial& other) const {
    LaurentPolynomial out = *this;
    for (auto& [m, c] : other.terms_) {
        auto [it, inserted] = out.terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) out.terms_.erase(it);
        }
    }
    return out;
}

LaurentPolynomial LaurentPolynomial::minus(const LaurentPolynomial& other) const {
    LaurentPolynomial out = *this;
    for (auto& [m, c] : other.terms_) {
        auto [it, inserted] = out.terms_.emplace(m, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) out.terms_.erase(it);
        }
    }
    return out;
}

LaurentPolynomial LaurentPolynomial::times(const Monomial& m, const mpz_class& coeff) const {
    LaurentPolynomial out;
    if (coeff == 0) return out;
    // The term order is translation invariant, so a one-monomial product
    // preserves the map order and rebuilds in linear time.
    auto hint = out.terms_.end();
    for (auto& [key, c] : terms_) hint = out.terms_.emplace_hint(hint, key.times(m), c * coeff);
    return out;
}

LaurentPolynomial LaurentPolynomial::times(const LaurentPolynomial& other) const {
    if (is_zero() || other.is_zero()) return zero();
    if (other.term_count() == 1) {
        auto& [m, c] = *other.terms_.begin();
        return times(m, c);
    }
    if (term_count() == 1) {
        auto& [m, c] = *terms_.begin();
        return other.times(m, c);
    }
    LaurentPolynomial out;
    for (auto& [ma, ca] : terms_) {
        for (auto& [mb, cb] : other.terms_) {
            Monomial m = ma.times(mb);
            mpz_class c = ca * cb;
            auto [it, inserted] = out.terms_.emplace(std::move(m), std::move(c));
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    }
    return out;
}

mpz_class LaurentPolynomial::eval_all_ones() const {
    mpz_class total = 0;
    for (auto& [m, c] : terms_) total += c;
    return total;
}

bool LaurentPolynomial::is_polynomial() const {
    for (auto& [m, c] : terms_)
        if (m.has_negative_exponent()) return false;
    return true;
}

bool LaurentPolynomial::all_coefficients_one() const {
    for (auto& [m, c] : terms_)
        if (c != 1) return false;
    return true;
}

std::string LaurentPolynomial::to_text() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto& [m, c] : terms_) {
        mpz_class a = abs(c);
        if (out.empty()) {
            if (c < 0) out += '-';
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (a == 1) {
            out += m.to_text();
        } else {
            out += a.get_str();
            if (!m.is_one()) {
                out += '*';
                out += m.to_text();
            }
        }
    }
    return out;
}

std::string LaurentPolynomial::to_latex() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto& [m, c] : terms_) {
        mpz_class a = abs(c);
        if (out.empty()) {
            if (c < 0) out += '-';
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (a == 1) {
            out += m.to_latex();
        } else {
            out += a.get_str();
            if (!m.is_one()) out += m.to_latex();
        }
    }
    return out;
}

nlohmann::json LaurentPolynomial::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (auto& [m, c] : terms_) {
        nlohmann::json exps = nlohmann::json::object();
        for (auto& [var, exp] : m.factors()) exps[std::to_string(var)] = exp;
        terms.push_back({{"coeff", c.get_str()}, {"exps", std::move(exps)}});
    }
    return nlohmann::json{{"terms", std::move(terms)}};
}

LaurentPolynomial LaurentPolynomial::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw validation_error("polynomial JSON must be an object with a \"terms\" array");
    LaurentPolynomial out;
    for (auto& term : j["terms"]) {
        if (!term.contains("coeff") || !term.contains("exps"))
            throw validation_error("polynomial JSON term needs \"coeff\" and \"exps\"");
        mpz_class c;
        if (mpz_set_str(c.get_mpz_t(), term["coeff"].get<std::string>().c_str(), 10) != 0)
            throw validation_error("bad coefficient in polynomial JSON");
        std::vector<std::pair<int, int>> factors;
        for (auto& [key, val] : term["exps"].items()) {
            std::size_t used = 0;
            int var = std::stoi(key, &used);
            if (used != key.size()) throw validation_error("bad variable index in polynomial JSON");
            factors.emplace_back(var, val.get<int>());
        }
        Monomial m = Monomial::from_factors(std::move(factors));
        auto [it, inserted] = out.terms_.emplace(std::move(m), std::move(c));
        if (!inserted) throw validation_error("duplicate monomial in polynomial JSON");
        if (it->second == 0) out.terms_.erase(it);
    }
    return out;
}

std::string LaurentPolynomial::to_canonical_string(PolyFormat format) const {
    switch (format) {
        case PolyFormat::text: return to_text();
        case PolyFormat::latex: return to_latex();
        case PolyFormat::json: return to_json().dump();
    }
    throw validation_error("unknown polynomial format");
}

LaurentPolynomial variable_range_product(int lo, int hi, bool inverted) {
    return LaurentPolynomial::from_monomial(Monomial::range_product(lo, hi, inverted));
}

}  // namespace snakefrac
