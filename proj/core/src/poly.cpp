#include "dulac/poly.hpp"

#include "dulac/errors.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <sstream>

namespace dulac {

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (const auto& [var, exp] : b) {
        int& slot = out[var];
        slot += exp;
        if (slot == 0) out.erase(var);
    }
    return out;
}

Monomial monomial_gcd(const Monomial& a, const Monomial& b) {
    Monomial out;
    for (const auto& [var, exp] : a) {
        auto it = b.find(var);
        if (it != b.end()) {
            int e = std::min(exp, it->second);
            if (e > 0) out[var] = e;
        }
    }
    return out;
}

bool monomial_divides(const Monomial& b, const Monomial& a) {
    for (const auto& [var, exp] : b) {
        auto it = a.find(var);
        if (it == a.end() || it->second < exp) return false;
    }
    return true;
}

Monomial monomial_div(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (const auto& [var, exp] : b) {
        int& slot = out[var];
        slot -= exp;
        if (slot == 0) out.erase(var);
    }
    return out;
}

bool monomial_less(const Monomial& a, const Monomial& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first != ib->first) {
            // The lexicographically smaller name is the more significant
            // variable; whoever has it with a positive exponent wins.
            if (ia->first < ib->first) return false;
            return true;
        }
        if (ia->second != ib->second) return ia->second < ib->second;
        ++ia;
        ++ib;
    }
    if (ia != a.end()) return false;
    return ib != b.end();
}

ParamPoly::ParamPoly(const Rational& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

ParamPoly ParamPoly::variable(const std::string& name, int exponent) {
    ParamPoly p;
    if (exponent == 0) return ParamPoly(Rational(1));
    p.terms_.emplace(Monomial{{name, exponent}}, Rational(1));
    return p;
}

ParamPoly ParamPoly::monomial(const Rational& coeff, const Monomial& m) {
    ParamPoly p;
    if (coeff != 0) p.terms_.emplace(m, coeff);
    return p;
}

bool ParamPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational ParamPoly::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational ParamPoly::as_constant() const {
    if (!is_constant()) throw domain_error("as_constant: polynomial is not constant: " + str());
    return constant_term();
}

void ParamPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(monomial_mul(ma, mb), ca * cb);
    return out;
}

ParamPoly& ParamPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

ParamPoly ParamPoly::pow(unsigned k) const {
    ParamPoly acc(Rational(1));
    ParamPoly base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return acc;
}

ParamPoly ParamPoly::diff(const std::string& var) const {
    ParamPoly out;
    for (const auto& [m, c] : terms_) {
        auto it = m.find(var);
        if (it == m.end()) continue;
        Monomial dm = m;
        int e = it->second;
        if (e == 1)
            dm.erase(var);
        else
            dm[var] = e - 1;
        out.add_term(dm, c * e);
    }
    return out;
}

ParamPoly ParamPoly::substitute(const std::map<std::string, Rational>& bindings) const {
    ParamPoly out;
    for (const auto& [m, c] : terms_) {
        Rational coeff = c;
        Monomial rest;
        for (const auto& [var, exp] : m) {
            auto it = bindings.find(var);
            if (it == bindings.end())
                rest[var] = exp;
            else
                coeff *= rational_pow(it->second, exp);
        }
        out.add_term(rest, coeff);
    }
    return out;
}

ParamPoly ParamPoly::substitute(const std::string& var, const ParamPoly& value) const {
    ParamPoly out;
    for (const auto& [m, c] : terms_) {
        auto it = m.find(var);
        if (it == m.end()) {
            out.add_term(m, c);
            continue;
        }
        Monomial rest = m;
        rest.erase(var);
        out += ParamPoly::monomial(c, rest) * value.pow(static_cast<unsigned>(it->second));
    }
    return out;
}

std::set<std::string> ParamPoly::symbols() const {
    std::set<std::string> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [var, exp] : m) out.insert(var);
    return out;
}

bool ParamPoly::depends_on(const std::string& var) const {
    for (const auto& [m, c] : terms_)
        if (m.count(var)) return true;
    return false;
}

int ParamPoly::degree(const std::string& var) const {
    int deg = 0;
    for (const auto& [m, c] : terms_) {
        auto it = m.find(var);
        if (it != m.end()) deg = std::max(deg, it->second);
    }
    return deg;
}

int ParamPoly::total_degree() const {
    int deg = 0;
    for (const auto& [m, c] : terms_) {
        int d = 0;
        for (const auto& [var, exp] : m) d += exp;
        deg = std::max(deg, d);
    }
    return deg;
}

int ParamPoly::valuation(const std::string& var) const {
    if (terms_.empty()) return 0;
    int v = INT_MAX;
    for (const auto& [m, c] : terms_) {
        auto it = m.find(var);
        v = std::min(v, it == m.end() ? 0 : it->second);
        if (v == 0) break;
    }
    return v;
}

bool ParamPoly::even_in(const std::string& var) const {
    for (const auto& [m, c] : terms_) {
        auto it = m.find(var);
        if (it != m.end() && (it->second % 2) != 0) return false;
    }
    return true;
}

std::map<int, ParamPoly> ParamPoly::coeffs_in(const std::string& var) const {
    std::map<int, ParamPoly> out;
    for (const auto& [m, c] : terms_) {
        auto it = m.find(var);
        int e = it == m.end() ? 0 : it->second;
        Monomial rest = m;
        rest.erase(var);
        out[e].add_term(rest, c);
    }
    return out;
}

ParamPoly ParamPoly::coeff_of(const std::string& var, int exponent) const {
    ParamPoly out;
    for (const auto& [m, c] : terms_) {
        auto it = m.find(var);
        int e = it == m.end() ? 0 : it->second;
        if (e != exponent) continue;
        Monomial rest = m;
        rest.erase(var);
        out.add_term(rest, c);
    }
    return out;
}

double ParamPoly::eval(const std::map<std::string, double>& point) const {
    double acc = 0;
    for (const auto& [m, c] : terms_) {
        double t = to_double(c);
        for (const auto& [var, exp] : m) {
            auto it = point.find(var);
            if (it == point.end()) throw parametric_error("eval: unbound symbol " + var);
            t *= std::pow(it->second, exp);
        }
        acc += t;
    }
    return acc;
}

Rational ParamPoly::eval_exact(const std::map<std::string, Rational>& point) const {
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (const auto& [var, exp] : m) {
            auto it = point.find(var);
            if (it == point.end()) throw parametric_error("eval_exact: unbound symbol " + var);
            t *= rational_pow(it->second, exp);
        }
        acc += t;
    }
    return acc;
}

Monomial ParamPoly::monomial_content() const {
    if (terms_.empty()) return Monomial{};
    auto it = terms_.begin();
    Monomial g = it->first;
    for (++it; it != terms_.end() && !g.empty(); ++it) g = monomial_gcd(g, it->first);
    return g;
}

Rational ParamPoly::rational_content() const {
    if (terms_.empty()) return Rational(0);
    Integer num_gcd(0), den_lcm(1);
    for (const auto& [m, c] : terms_) {
        num_gcd = boost::multiprecision::gcd(num_gcd, numerator(c));
        den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
    }
    return Rational(num_gcd, den_lcm);
}

ParamPoly ParamPoly::divide_monomial(const Monomial& m) const {
    ParamPoly out;
    for (const auto& [mono, c] : terms_) {
        if (!monomial_divides(m, mono))
            throw domain_error("divide_monomial: monomial does not divide every term");
        out.add_term(monomial_div(mono, m), c);
    }
    return out;
}

std::optional<ParamPoly> ParamPoly::divide_exact(const ParamPoly& divisor) const {
    if (divisor.is_zero()) throw domain_error("divide_exact: zero divisor");
    ParamPoly remainder = *this;
    ParamPoly quotient;
    const auto lead = [](const ParamPoly& p) {
        auto best = p.terms_.begin();
        for (auto it = std::next(p.terms_.begin()); it != p.terms_.end(); ++it)
            if (monomial_less(best->first, it->first)) best = it;
        return best;
    };
    auto dlead = lead(divisor);
    while (!remainder.is_zero()) {
        auto rlead = lead(remainder);
        if (!monomial_divides(dlead->first, rlead->first)) return std::nullopt;
        Monomial qm = monomial_div(rlead->first, dlead->first);
        Rational qc = rlead->second / dlead->second;
        ParamPoly step = ParamPoly::monomial(qc, qm);
        quotient += step;
        remainder -= step * divisor;
    }
    return quotient;
}

std::string ParamPoly::str() const {
    if (terms_.empty()) return "0";
    // Collect in descending monomial order for readability.
    std::vector<const std::pair<const Monomial, Rational>*> ordered;
    ordered.reserve(terms_.size());
    for (const auto& t : terms_) ordered.push_back(&t);
    std::sort(ordered.begin(), ordered.end(),
              [](const auto* a, const auto* b) { return monomial_less(b->first, a->first); });
    std::ostringstream os;
    bool first = true;
    for (const auto* t : ordered) {
        const auto& [m, c] = *t;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit_coeff = (mag == 1) && !m.empty();
        if (!unit_coeff) os << mag.str();
        bool need_star = !unit_coeff;
        for (const auto& [var, exp] : m) {
            if (need_star) os << "*";
            os << var;
            if (exp != 1) os << "^" << exp;
            need_star = true;
        }
    }
    return os.str();
}

}  // namespace dulac
