#include "dulac/univariate.hpp"

#include "dulac/errors.hpp"

#include <algorithm>
#include <sstream>

namespace dulac {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::from_poly(const ParamPoly& p, const std::string& var) {
    std::vector<Rational> coeffs;
    for (const auto& [m, c] : p.terms()) {
        int e = 0;
        for (const auto& [name, exp] : m) {
            if (name != var)
                throw domain_error("from_poly: polynomial depends on symbol " + name +
                                   ", expected only " + var);
            e = exp;
        }
        if (e >= static_cast<int>(coeffs.size())) coeffs.resize(e + 1, Rational(0));
        coeffs[e] += c;
    }
    return UniPoly(std::move(coeffs));
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::leading() const {
    if (coeffs_.empty()) return Rational(0);
    return coeffs_.back();
}

Rational UniPoly::eval(const Rational& t) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

double UniPoly::eval(double t) const {
    double acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + to_double(*it);
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly();
    std::vector<Rational> out(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<long>(i);
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-() const {
    std::vector<Rational> out = coeffs_;
    for (auto& c : out) c = -c;
    return UniPoly(std::move(out));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return UniPoly(std::move(out));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator*(const Rational& c) const {
    std::vector<Rational> out = coeffs_;
    for (auto& v : out) v *= c;
    return UniPoly(std::move(out));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw domain_error("divmod: zero divisor");
    std::vector<Rational> rem = coeffs_;
    int dd = divisor.degree();
    if (degree() < dd) return {UniPoly(), *this};
    std::vector<Rational> quot(degree() - dd + 1, Rational(0));
    for (int k = degree() - dd; k >= 0; --k) {
        Rational q = rem[k + dd] / divisor.coeffs_[dd];
        if (q == 0) continue;
        quot[k] = q;
        for (int i = 0; i <= dd; ++i) rem[k + i] -= q * divisor.coeffs_[i];
    }
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::primitive() const {
    if (is_zero()) return *this;
    Integer num_gcd(0), den_lcm(1);
    for (const auto& c : coeffs_) {
        num_gcd = boost::multiprecision::gcd(num_gcd, numerator(c));
        den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
    }
    Rational scale(den_lcm, num_gcd);
    if (leading() < 0) scale = -scale;
    return *this * scale;
}

ParamPoly UniPoly::to_poly(const std::string& var) const {
    ParamPoly out;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        out += ParamPoly::monomial(coeffs_[i], i ? Monomial{{var, static_cast<int>(i)}}
                                                 : Monomial{});
    return out;
}

std::string UniPoly::str(const std::string& var) const { return to_poly(var).str(); }

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly u = a.primitive(), v = b.primitive();
    while (!v.is_zero()) {
        UniPoly r = u.divmod(v).second.primitive();
        u = v;
        v = r;
    }
    return u;
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.degree() <= 1) return p;
    UniPoly g = gcd(p, p.derivative());
    if (g.degree() == 0) return p;
    return p.divmod(g).first;
}

Rational cauchy_root_bound(const UniPoly& p) {
    if (p.degree() < 1) return Rational(1);
    Rational lead = p.leading();
    if (lead < 0) lead = -lead;
    Rational mx(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rational a = p.coeffs()[i];
        if (a < 0) a = -a;
        if (a > mx) mx = a;
    }
    return Rational(1) + mx / lead;
}

namespace {

int sign_at(const UniPoly& p, const Rational& t) { return p.eval(t).sign(); }

// Sign variations of the Sturm chain at t; at_infinity: -1 for -inf, +1 for +inf.
int sturm_variations(const std::vector<UniPoly>& chain, const Rational& t) {
    int var = 0, prev = 0;
    for (const auto& q : chain) {
        int s = sign_at(q, t);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int sturm_variations_inf(const std::vector<UniPoly>& chain, int direction) {
    int var = 0, prev = 0;
    for (const auto& q : chain) {
        if (q.is_zero()) continue;
        int s = q.leading().sign();
        if (direction < 0 && (q.degree() % 2) == 1) s = -s;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
    std::vector<UniPoly> chain;
    chain.push_back(p);
    chain.push_back(p.derivative());
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        UniPoly r = chain[chain.size() - 2].divmod(chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back((-r).primitive());
    }
    return chain;
}

// Roots of the squarefree q in the half-open interval (a, b].
int roots_in(const std::vector<UniPoly>& chain, const Rational& a, const Rational& b) {
    return sturm_variations(chain, a) - sturm_variations(chain, b);
}

void isolate_rec(const UniPoly& q, const std::vector<UniPoly>& chain, const Rational& a,
                 const Rational& b, std::vector<RootInterval>& out) {
    int n = roots_in(chain, a, b);
    if (n == 0) return;
    if (q.eval(b) == 0) {
        // Exact root at the right endpoint: record it, deflate, continue.
        out.push_back({b, b});
        UniPoly factor(std::vector<Rational>{-b, Rational(1)});
        UniPoly reduced = q.divmod(factor).first;
        auto reduced_chain = sturm_chain(reduced);
        isolate_rec(reduced, reduced_chain, a, b, out);
        return;
    }
    if (n == 1) {
        out.push_back({a, b});
        return;
    }
    Rational m = (a + b) / 2;
    isolate_rec(q, chain, a, m, out);
    isolate_rec(q, chain, m, b, out);
}

}  // namespace

std::vector<RootInterval> isolate_roots(const UniPoly& p) {
    if (p.is_zero()) throw domain_error("isolate_roots: zero polynomial");
    UniPoly q = squarefree_part(p).primitive();
    if (q.degree() < 1) return {};
    Rational bound = cauchy_root_bound(q);
    auto chain = sturm_chain(q);
    std::vector<RootInterval> out;
    isolate_rec(q, chain, -bound, bound, out);
    std::sort(out.begin(), out.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return out;
}

RootInterval refine_root(const UniPoly& p, RootInterval iv, const Rational& max_width) {
    if (iv.is_point()) return iv;
    UniPoly q = squarefree_part(p).primitive();
    // The interval holds one simple root of q; bisect against the sign at hi
    // (lo itself may be an exact root of a neighboring interval).
    int shi = sign_at(q, iv.hi);
    if (shi == 0) return {iv.hi, iv.hi};
    while (iv.width() > max_width) {
        Rational m = iv.mid();
        int sm = sign_at(q, m);
        if (sm == 0) return {m, m};
        if (sm == shi)
            iv.hi = m;
        else
            iv.lo = m;
    }
    return iv;
}

int count_real_roots(const UniPoly& p) { return static_cast<int>(isolate_roots(p).size()); }

int descartes_sign_changes(const UniPoly& p) {
    int changes = 0, prev = 0;
    for (const auto& c : p.coeffs()) {
        int s = c.sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

bool poly_nonneg_on(const UniPoly& p, const RealDomain& domain, Rational* witness) {
    if (p.is_zero()) return true;
    if (p.degree() == 0) {
        if (p.leading() >= 0) return true;
        if (witness) *witness = domain.lo ? *domain.lo : Rational(0);
        return false;
    }
    // Sign is constant between consecutive real roots; it is enough to test
    // one rational point inside every root gap that meets the domain.
    auto roots = isolate_roots(p);
    Rational bound = cauchy_root_bound(p);
    std::vector<Rational> cuts;  // strictly increasing, outside of root gaps
    for (const auto& r : roots) cuts.push_back(r.is_point() ? r.lo : r.hi);
    std::vector<Rational> samples;
    Rational lo = domain.lo ? *domain.lo : -(bound + 1);
    Rational hi = domain.hi ? *domain.hi : bound + 1;
    if (lo > hi) throw domain_error("poly_nonneg_on: empty domain");
    samples.push_back(lo);
    samples.push_back(hi);
    if (!roots.empty()) {
        samples.push_back(roots.front().lo - 1);
        samples.push_back(roots.back().hi + 1);
        for (size_t i = 0; i + 1 < roots.size(); ++i)
            samples.push_back((roots[i].hi + roots[i + 1].lo) / 2);
        // A root interval that straddles a domain endpoint still needs the
        // inner side sampled; refining keeps endpoints rational.
        for (const auto& r : roots) {
            samples.push_back(r.lo);
            samples.push_back(r.hi);
        }
    }
    for (const auto& t : samples) {
        if (!domain.contains(t)) continue;
        if (p.eval(t) < 0) {
            if (witness) *witness = t;
            return false;
        }
    }
    return true;
}

}  // namespace dulac
