#include "dulac/certify.hpp"

#include "dulac/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace dulac {

std::string to_string(SignClass s) {
    switch (s) {
        case SignClass::NonNegative: return "nonnegative";
        case SignClass::NonPositive: return "nonpositive";
        case SignClass::IdenticallyZero: return "identically-zero";
        case SignClass::Indefinite: return "indefinite";
        default: return "unknown";
    }
}

std::string to_string(VanishingSet v) {
    switch (v) {
        case VanishingSet::NullMeasure: return "null-measure";
        case VanishingSet::PositiveMeasure: return "positive-measure";
        default: return "unknown";
    }
}

void SignVerdict::note(std::string strategy, std::string detail) {
    trace.push_back({std::move(strategy), std::move(detail)});
}

bool trinomial_nonneg(const TrinomialQuery& q) {
    if (q.m < 2) throw domain_error("trinomial_nonneg: m must be >= 2");
    if (q.c < 0) throw domain_error("trinomial_nonneg: c must be nonnegative");
    if (q.b >= 0) return true;
    // b < 0: minimum at z0 = (-b/m)^(1/(m-1)); P(z0) >= 0 is equivalent to
    // (-b)^m * (m-1)^(m-1) <= m^m * c^(m-1), which is exact in rationals.
    Rational lhs = rational_pow(-q.b, q.m) * rational_pow(Rational(q.m - 1), q.m - 1);
    Rational rhs = rational_pow(Rational(q.m), q.m) * rational_pow(q.c, q.m - 1);
    return lhs <= rhs;
}

double lambda_threshold(long m) {
    if (m < 2) throw domain_error("lambda_threshold: m must be >= 2");
    return 3.0 / std::sqrt(2.0) * std::pow(3.0 / static_cast<double>(m),
                                           static_cast<double>(m) / 2.0);
}

int descartes_positive_roots(const ParamPoly& p) {
    if (p.is_zero()) throw domain_error("descartes_positive_roots: zero polynomial");
    auto syms = p.symbols();
    if (syms.size() > 1)
        throw domain_error("descartes_positive_roots: polynomial must be univariate");
    std::string var = syms.empty() ? "x" : *syms.begin();
    return descartes_sign_changes(UniPoly::from_poly(p, var));
}

bool sturm_nonneg(const ParamPoly& p, const RealDomain& domain) {
    auto syms = p.symbols();
    if (syms.size() > 1) throw domain_error("sturm_nonneg: polynomial must be univariate");
    std::string var = syms.empty() ? "x" : *syms.begin();
    return poly_nonneg_on(UniPoly::from_poly(p, var), domain);
}

namespace {

// ---------------------------------------------------------------- utilities

std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    Integer num = boost::multiprecision::sqrt(numerator(r));
    Integer den = boost::multiprecision::sqrt(denominator(r));
    if (num * num != numerator(r) || den * den != denominator(r)) return std::nullopt;
    return Rational(num, den);
}

// Exact polynomial square root, if one exists.
std::optional<ParamPoly> poly_sqrt(const ParamPoly& p) {
    if (p.is_zero()) return ParamPoly();
    if (p.is_constant()) {
        auto r = rational_sqrt(p.as_constant());
        if (!r) return std::nullopt;
        return ParamPoly(*r);
    }
    auto syms = p.symbols();
    const std::string var = *syms.begin();
    int deg = p.degree(var);
    if (deg % 2 != 0) return std::nullopt;
    int half = deg / 2;
    auto coeffs = p.coeffs_in(var);
    auto lead_sqrt = poly_sqrt(coeffs.count(deg) ? coeffs[deg] : ParamPoly());
    if (!lead_sqrt) return std::nullopt;
    std::map<int, ParamPoly> q;  // coefficients of the root
    q[half] = *lead_sqrt;
    ParamPoly two_lead = ParamPoly(Rational(2)) * (*lead_sqrt);
    for (int k = half - 1; k >= 0; --k) {
        // Match the coefficient of var^(half + k).
        ParamPoly target = coeffs.count(half + k) ? coeffs[half + k] : ParamPoly();
        for (int i = k + 1; i <= half; ++i) {
            int j = half + k - i;
            if (j <= k || j > half) continue;
            if (j < i) continue;  // count unordered pairs once
            ParamPoly prod = q[i] * q[j];
            target -= (i == j) ? prod : ParamPoly(Rational(2)) * prod;
        }
        auto qk = target.divide_exact(two_lead);
        if (!qk) return std::nullopt;
        q[k] = *qk;
    }
    ParamPoly root;
    for (const auto& [k, c] : q) root += c * ParamPoly::variable(var, k);
    if (root * root != p) return std::nullopt;
    return root;
}

bool region_contains(const Region& region, const Rational& x, const Rational& y) {
    switch (region.kind) {
        case RegionKind::Plane: return true;
        case RegionKind::HalfplaneYNonneg: return y >= 0;
        case RegionKind::Box:
            return to_double(x) >= region.x0 && to_double(x) <= region.x1 &&
                   to_double(y) >= region.y0 && to_double(y) <= region.y1;
    }
    return true;
}

// Candidate rational points for witness searches, region-filtered, axes
// avoided (stripped factors vanish there).
std::vector<std::pair<Rational, Rational>> witness_candidates(const Region& region,
                                                              std::uint64_t seed, int count) {
    std::vector<std::pair<Rational, Rational>> pts;
    const long fixed[][2] = {{1, 1},   {1, -1}, {-1, 1}, {-1, -1}, {2, 1},  {1, 2},
                             {-2, 1},  {1, -2}, {3, 2},  {-3, 2},  {2, -3}, {5, 1},
                             {1, 5},   {-5, 1}, {7, 3},  {-7, -3}, {1, 7},  {9, 2}};
    for (auto& f : fixed) pts.emplace_back(Rational(f[0]), Rational(f[1]));
    for (long d : {2L, 3L, 5L})
        for (auto& f : fixed) pts.emplace_back(Rational(f[0], d), Rational(f[1], d));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-96, 96), den(1, 12);
    while (static_cast<int>(pts.size()) < count) {
        Rational x(num(rng), den(rng)), y(num(rng), den(rng));
        if (x == 0 || y == 0) continue;
        pts.emplace_back(x, y);
    }
    std::vector<std::pair<Rational, Rational>> filtered;
    for (auto& p : pts) {
        if (region.kind == RegionKind::Box) {
            // Map candidates into the box interior instead of discarding.
            Rational cx((long)std::llround((region.x0 + region.x1) * 32), 64);
            Rational cy((long)std::llround((region.y0 + region.y1) * 32), 64);
            Rational sx((long)std::llround((region.x1 - region.x0) * 16), 64);
            Rational sy((long)std::llround((region.y1 - region.y0) * 16), 64);
            Rational x = cx + p.first * sx / 4;
            Rational y = cy + p.second * sy / 4;
            if (region_contains(region, x, y)) filtered.emplace_back(x, y);
        } else if (region_contains(region, p.first, p.second)) {
            filtered.push_back(p);
        } else if (region.kind == RegionKind::HalfplaneYNonneg) {
            filtered.emplace_back(p.first, -p.second);
        }
    }
    return filtered;
}

// Searches for strict-sign points of `poly` (the |y|- and exp-stripped
// coefficient, whose sign matches the original expression a.e.).
std::optional<std::pair<Witness, Witness>> search_witnesses(const ParamPoly& poly,
                                                            const Region& region,
                                                            std::uint64_t seed, int count) {
    std::optional<Witness> pos, neg;
    for (const auto& [x, y] : witness_candidates(region, seed, count)) {
        int s = poly.eval_exact({{"x", x}, {"y", y}}).sign();
        if (s > 0 && !pos) pos = Witness{x, y, 1};
        if (s < 0 && !neg) neg = Witness{x, y, -1};
        if (pos && neg) return std::make_pair(*pos, *neg);
    }
    return std::nullopt;
}

struct PolyContext {
    const ParamPoly* original;  // pre-strip coefficient, for witness signs
    Region region;
    CertifyOptions options;
    int depth = 0;
};

SignVerdict decide_poly(const ParamPoly& p, PolyContext ctx);

SignVerdict indefinite_with_witnesses(const PolyContext& ctx, SignVerdict v) {
    v.sign = SignClass::Indefinite;
    v.vanishing = VanishingSet::NullMeasure;
    auto w = search_witnesses(*ctx.original, ctx.region, ctx.options.seed, ctx.options.samples);
    if (w) {
        v.witnesses = w;
        return v;
    }
    // Could not place exact witnesses (e.g. sign change squeezed into a tiny
    // region); degrade honestly.
    v.sign = SignClass::Unknown;
    v.vanishing = VanishingSet::Unknown;
    v.note("witness-search", "sign change detected but no rational witness pair found");
    return v;
}

SignVerdict flip(SignVerdict v) {
    if (v.sign == SignClass::NonNegative)
        v.sign = SignClass::NonPositive;
    else if (v.sign == SignClass::NonPositive)
        v.sign = SignClass::NonNegative;
    return v;
}

// ------------------------------------------------------------- strategies

std::optional<SignVerdict> strategy_univariate(const ParamPoly& p, const PolyContext& ctx) {
    auto syms = p.symbols();
    if (syms.size() != 1) return std::nullopt;
    const std::string var = *syms.begin();
    UniPoly u = UniPoly::from_poly(p, var);
    RealDomain domain = RealDomain::whole_line();
    if (ctx.region.kind == RegionKind::HalfplaneYNonneg && var == "y")
        domain = RealDomain::at_least(Rational(0));
    SignVerdict v;
    if (poly_nonneg_on(u, domain)) {
        v.sign = SignClass::NonNegative;
        v.vanishing = VanishingSet::NullMeasure;
        v.note("sturm-univariate", "residual in " + var + " is nonnegative on its domain");
        return v;
    }
    if (poly_nonneg_on(-u, domain)) {
        v.sign = SignClass::NonPositive;
        v.vanishing = VanishingSet::NullMeasure;
        v.note("sturm-univariate", "residual in " + var + " is nonpositive on its domain");
        return v;
    }
    v.note("sturm-univariate", "residual in " + var + " takes both signs");
    return indefinite_with_witnesses(ctx, v);
}

// y^2 -> z substitution; decides trinomial shapes with the exact criterion.
std::optional<SignVerdict> strategy_even_y(const ParamPoly& p, const PolyContext& ctx) {
    if (p.degree("y") == 0 || !p.even_in("y")) return std::nullopt;
    ParamPoly q;
    for (const auto& [m, c] : p.terms()) {
        Monomial m2 = m;
        auto it = m2.find("y");
        if (it != m2.end()) {
            int e = it->second / 2;
            m2.erase("y");
            if (e) m2["z"] = e;
        }
        q += ParamPoly::monomial(c, m2);
    }
    if (q.symbols() != std::set<std::string>{"z"}) return std::nullopt;
    UniPoly u = UniPoly::from_poly(q, "z");
    SignVerdict v;
    v.note("even-substitution", "y^2 -> z, residual " + q.str() + " on z >= 0");
    // Trinomial shape z^m + b z + c (up to a positive or negative leading
    // constant) gets the closed-form criterion.
    int deg = u.degree();
    bool trinomial_shape = deg >= 2;
    for (int i = 2; i < deg && trinomial_shape; ++i)
        if (u.coeffs()[i] != 0) trinomial_shape = false;
    if (trinomial_shape) {
        Rational lead = u.leading();
        TrinomialQuery query{deg, u.coeffs()[1] / lead, u.coeffs()[0] / lead};
        if (query.c >= 0) {
            bool nonneg = trinomial_nonneg(query);
            std::ostringstream os;
            os << "z^" << deg << " + (" << to_string(query.b) << ")z + (" << to_string(query.c)
               << ") " << (nonneg ? ">= 0" : "takes negative values") << " on z >= 0";
            v.note("trinomial-criterion", os.str());
            if (nonneg) {
                v.sign = lead > 0 ? SignClass::NonNegative : SignClass::NonPositive;
                v.vanishing = VanishingSet::NullMeasure;
                return v;
            }
            return indefinite_with_witnesses(ctx, v);
        }
    }
    RealDomain nonneg_z = RealDomain::at_least(Rational(0));
    if (poly_nonneg_on(u, nonneg_z)) {
        v.sign = SignClass::NonNegative;
        v.vanishing = VanishingSet::NullMeasure;
        v.note("sturm-halfline", "residual nonnegative for z >= 0");
        return v;
    }
    if (poly_nonneg_on(-u, nonneg_z)) {
        v.sign = SignClass::NonPositive;
        v.vanishing = VanishingSet::NullMeasure;
        v.note("sturm-halfline", "residual nonpositive for z >= 0");
        return v;
    }
    v.note("sturm-halfline", "residual takes both signs for z >= 0");
    return indefinite_with_witnesses(ctx, v);
}

std::optional<SignVerdict> strategy_perfect_square(const ParamPoly& p, const PolyContext&) {
    auto root = poly_sqrt(p);
    if (!root) return std::nullopt;
    SignVerdict v;
    v.sign = SignClass::NonNegative;
    v.vanishing = VanishingSet::NullMeasure;
    v.note("perfect-square", "residual = (" + root->str() + ")^2");
    return v;
}

// Univariate content split: p = g(main) * pp, both certified independently.
std::optional<SignVerdict> strategy_content_split(const ParamPoly& p, const PolyContext& ctx,
                                                  const std::string& inner_var) {
    const std::string outer = inner_var == "y" ? "x" : "y";
    if (p.degree(inner_var) == 0) return std::nullopt;
    auto coeffs = p.coeffs_in(inner_var);
    UniPoly content;
    bool ok = true;
    for (const auto& [e, c] : coeffs) {
        for (const auto& s : c.symbols())
            if (s != outer) ok = false;
        if (!ok) break;
        content = content.is_zero() ? UniPoly::from_poly(c, outer)
                                    : gcd(content, UniPoly::from_poly(c, outer));
    }
    if (!ok || content.degree() < 1) return std::nullopt;
    ParamPoly g = content.to_poly(outer);
    auto pp = p.divide_exact(g);
    if (!pp) return std::nullopt;
    PolyContext inner = ctx;
    ++inner.depth;
    SignVerdict vg = decide_poly(g, inner);
    if (!vg.is_definite()) return std::nullopt;
    SignVerdict vp = decide_poly(*pp, inner);
    if (!vp.is_definite()) return std::nullopt;
    SignVerdict v;
    v.note("content-split", "residual = (" + g.str() + ") * (" + pp->str() + ")");
    for (auto& step : vg.trace) v.trace.push_back(step);
    for (auto& step : vp.trace) v.trace.push_back(step);
    bool neg = (vg.sign == SignClass::NonPositive) != (vp.sign == SignClass::NonPositive);
    v.sign = neg ? SignClass::NonPositive : SignClass::NonNegative;
    v.vanishing = VanishingSet::NullMeasure;
    return v;
}

// Quadratic in one state variable: leading sign plus discriminant test.
std::optional<SignVerdict> strategy_quadratic(const ParamPoly& p, const PolyContext& ctx,
                                              const std::string& var) {
    if (p.degree(var) != 2) return std::nullopt;
    const std::string other = var == "y" ? "x" : "y";
    ParamPoly alpha = p.coeff_of(var, 2);
    ParamPoly beta = p.coeff_of(var, 1);
    ParamPoly gamma = p.coeff_of(var, 0);
    for (const auto& q : {alpha, beta, gamma})
        for (const auto& s : q.symbols())
            if (s != other) return std::nullopt;
    ParamPoly disc = beta * beta - ParamPoly(Rational(4)) * alpha * gamma;
    auto to_uni = [&](const ParamPoly& q) { return UniPoly::from_poly(q, other); };
    UniPoly ua = to_uni(alpha), ud = to_uni(disc);
    RealDomain line = RealDomain::whole_line();
    SignVerdict v;
    bool disc_nonpos = poly_nonneg_on(-ud, line);
    if (disc_nonpos && poly_nonneg_on(ua, line)) {
        v.sign = SignClass::NonNegative;
        v.vanishing = VanishingSet::NullMeasure;
        v.note("quadratic-discriminant",
               "quadratic in " + var + ": leading coefficient >= 0 and discriminant <= 0");
        return v;
    }
    if (disc_nonpos && poly_nonneg_on(-ua, line)) {
        v.sign = SignClass::NonPositive;
        v.vanishing = VanishingSet::NullMeasure;
        v.note("quadratic-discriminant",
               "quadratic in " + var + ": leading coefficient <= 0 and discriminant <= 0");
        return v;
    }
    Rational where;
    if (!disc_nonpos && !poly_nonneg_on(ud, line, &where)) {
        // Discriminant takes positive values somewhere, find such a point.
    }
    if (!disc_nonpos) {
        Rational x0;
        poly_nonneg_on(-ud, line, &x0);  // -disc < 0 there, so disc(x0) > 0
        if (ud.eval(x0) > 0 && ua.eval(x0) != 0) {
            v.note("quadratic-discriminant",
                   "discriminant positive at " + to_string(x0) + ": both signs in " + var);
            return indefinite_with_witnesses(ctx, v);
        }
    }
    // Discriminant <= 0 but the leading coefficient changes sign.
    if (disc_nonpos) {
        v.note("quadratic-discriminant", "leading coefficient changes sign");
        return indefinite_with_witnesses(ctx, v);
    }
    return std::nullopt;
}

SignVerdict strategy_sampling(const ParamPoly& p, const PolyContext& ctx) {
    SignVerdict v;
    std::mt19937_64 rng(ctx.options.seed);
    double x0 = -10, x1 = 10, y0 = -10, y1 = 10;
    if (ctx.region.kind == RegionKind::Box) {
        x0 = ctx.region.x0;
        x1 = ctx.region.x1;
        y0 = ctx.region.y0;
        y1 = ctx.region.y1;
    } else if (ctx.region.kind == RegionKind::HalfplaneYNonneg) {
        y0 = 0;
    }
    std::uniform_real_distribution<double> dx(x0, x1), dy(y0, y1);
    double mn = 0, mx = 0;
    for (int i = 0; i < ctx.options.samples; ++i) {
        double px = dx(rng), py = dy(rng);
        double val = ctx.original->eval({{"x", px}, {"y", py}});
        mn = std::min(mn, val);
        mx = std::max(mx, val);
    }
    std::ostringstream os;
    os << ctx.options.samples << " samples, seed " << ctx.options.seed << ", observed range ["
       << mn << ", " << mx << "]";
    if (mn < 0 && mx > 0) {
        auto w = search_witnesses(*ctx.original, ctx.region, ctx.options.seed, 4096);
        if (w) {
            v.sign = SignClass::Indefinite;
            v.vanishing = VanishingSet::NullMeasure;
            v.witnesses = w;
            v.note("sampling", os.str() + "; exact witnesses verified");
            return v;
        }
    }
    // Sampling alone never certifies.
    v.sign = SignClass::Unknown;
    v.vanishing = VanishingSet::Unknown;
    v.note("sampling", os.str());
    (void)p;
    return v;
}

SignVerdict decide_poly(const ParamPoly& p, PolyContext ctx) {
    if (ctx.depth > 8) return strategy_sampling(p, ctx);
    if (p.is_zero()) {
        SignVerdict v;
        v.sign = SignClass::IdenticallyZero;
        v.vanishing = VanishingSet::PositiveMeasure;
        return v;
    }
    if (p.is_constant()) {
        SignVerdict v;
        v.sign = p.as_constant() > 0 ? SignClass::NonNegative : SignClass::NonPositive;
        v.vanishing = VanishingSet::NullMeasure;
        v.note("constant", "residual is the constant " + to_string(p.as_constant()));
        return v;
    }
    if (auto v = strategy_univariate(p, ctx)) return *v;
    if (auto v = strategy_even_y(p, ctx)) return *v;
    if (auto v = strategy_perfect_square(p, ctx)) return *v;
    if (auto v = strategy_content_split(p, ctx, "y")) return *v;
    if (auto v = strategy_content_split(p, ctx, "x")) return *v;
    if (auto v = strategy_quadratic(p, ctx, "y")) return *v;
    if (auto v = strategy_quadratic(p, ctx, "x")) return *v;
    return strategy_sampling(p, ctx);
}

}  // namespace

SignVerdict certify_sign(const ExtExpr& e, const Region& region, const CertifyOptions& options) {
    if (!e.parameters().empty()) {
        std::string names;
        for (const auto& s : e.parameters()) names += (names.empty() ? "" : ", ") + s;
        throw parametric_error("certify_sign: unbound parameters: " + names +
                               " (substitute or use certify_sign_parametric)");
    }
    SignVerdict verdict;
    if (e.is_zero()) {
        verdict.sign = SignClass::IdenticallyZero;
        verdict.vanishing = VanishingSet::PositiveMeasure;
        verdict.note("trivial", "expression is identically zero");
        return verdict;
    }

    ExtExpr work = e;
    // Strategy 0: divide out the known admissible factor (the candidate V).
    if (options.dulac_factor && !options.dulac_factor->is_zero() &&
        !options.dulac_factor->is_constant()) {
        const ParamPoly& V = *options.dulac_factor;
        int removed = 0;
        while (removed < options.max_factor_multiplicity) {
            ExtExpr quotient;
            bool ok = true;
            for (const auto& [key, coeff] : work.groups()) {
                auto q = coeff.divide_exact(V);
                if (!q) {
                    ok = false;
                    break;
                }
                quotient += ExtExpr::term(*q, key.abs1, key.exp_arg);
            }
            if (!ok || quotient.is_zero()) break;
            work = quotient;
            ++removed;
        }
        if (removed > 0) {
            std::ostringstream os;
            os << "divided out candidate factor (" << V.str() << ")";
            if (removed > 1) os << "^" << removed;
            os << "; verdict describes the quotient, whose sign drives the per-component test";
            verdict.note("factor-out-candidate", os.str());
        }
    }

    if (work.groups().size() != 1) {
        // Mixed |y|/exp groups: no exact reduction implemented, sample.
        ParamPoly dummy;
        PolyContext ctx{&dummy, region, options, 0};
        ExtExpr copy = work;
        SignVerdict v;
        std::mt19937_64 rng(options.seed);
        double bx0 = region.kind == RegionKind::Box ? region.x0 : -10;
        double bx1 = region.kind == RegionKind::Box ? region.x1 : 10;
        double by0 = region.kind == RegionKind::Box ? region.y0
                                                    : (region.kind == RegionKind::HalfplaneYNonneg
                                                           ? 0.0
                                                           : -10.0);
        double by1 = region.kind == RegionKind::Box ? region.y1 : 10;
        std::uniform_real_distribution<double> dx(bx0, bx1), dy(by0, by1);
        double mn = 0, mx = 0;
        for (int i = 0; i < options.samples; ++i) {
            double val = copy.eval(dx(rng), dy(rng));
            mn = std::min(mn, val);
            mx = std::max(mx, val);
        }
        std::ostringstream os;
        os << "mixed |y|/exp groups; " << options.samples << " samples, observed range [" << mn
           << ", " << mx << "]";
        for (auto& st : verdict.trace) v.trace.push_back(st);
        v.sign = SignClass::Unknown;
        v.vanishing = VanishingSet::Unknown;
        v.note("sampling", os.str());
        return v;
    }

    const auto& [key, coeff] = *work.groups().begin();
    if (!key.exp_arg.is_zero())
        verdict.note("strip-positive-factor", "exp(" + key.exp_arg.str() + ") > 0 everywhere");
    if (key.abs1 == 1)
        verdict.note("strip-positive-factor", "|y| >= 0, vanishing only on y = 0");

    ParamPoly p = coeff;
    int sigma = 1;

    // Monomial content: even powers are positive a.e.; odd leftovers flip the
    // sign across an axis and force indefiniteness on the plane.
    Monomial content = p.monomial_content();
    if (!content.empty()) {
        p = p.divide_monomial(content);
        Monomial even, odd;
        for (const auto& [var, exp] : content) {
            if (exp >= 2) even[var] = exp - (exp % 2);
            if (exp % 2) odd[var] = 1;
        }
        if (!even.empty())
            verdict.note("strip-positive-factor",
                         "even monomial factor " + ParamPoly::monomial(Rational(1), even).str() +
                             ", vanishing only on the axes");
        if (odd.count("y") && region.kind == RegionKind::HalfplaneYNonneg) {
            verdict.note("strip-positive-factor", "factor y >= 0 on the half-plane");
            odd.erase("y");
        }
        if (!odd.empty()) {
            verdict.note("odd-monomial-factor",
                         "factor " + ParamPoly::monomial(Rational(1), odd).str() +
                             " changes sign across an axis");
            PolyContext ctx{&coeff, region, options, 0};
            if (p.is_zero()) {
                verdict.sign = SignClass::IdenticallyZero;
                verdict.vanishing = VanishingSet::PositiveMeasure;
                return verdict;
            }
            SignVerdict res = indefinite_with_witnesses(ctx, verdict);
            return res;
        }
    }

    Rational rc = p.rational_content();
    // Normalize to a primitive residual with positive leading coefficient.
    {
        auto lead = p.terms().begin();
        for (auto it = p.terms().begin(); it != p.terms().end(); ++it)
            if (monomial_less(lead->first, it->first)) lead = it;
        if (lead->second < 0) {
            sigma = -1;
            rc = -rc;
        }
        if (rc != 0 && rc != 1) {
            p *= Rational(1) / rc;
            verdict.note("normalize", "extracted constant " + to_string(rc));
        }
    }

    PolyContext ctx{&coeff, region, options, 0};
    SignVerdict inner = decide_poly(p, ctx);
    for (auto& st : inner.trace) verdict.trace.push_back(st);
    verdict.sign = inner.sign;
    verdict.vanishing = inner.vanishing;
    verdict.witnesses = inner.witnesses;
    if (sigma < 0) {
        SignVerdict flipped = flip(verdict);
        flipped.note("normalize", "negative extracted constant flips the verdict");
        return flipped;
    }
    return verdict;
}

SignVerdict certify_sign_parametric(const ExtExpr& e, const std::string& param,
                                    const Rational& lower_bound) {
    SignVerdict v;
    auto poly = e.as_poly();
    if (!poly) {
        // Strip a single positive group as in certify_sign.
        if (e.groups().size() != 1) {
            v.note("parametric", "mixed groups unsupported");
            return v;
        }
        const auto& [key, coeff] = *e.groups().begin();
        if (key.abs1 == 1) {
            v.note("strip-positive-factor", "|y| >= 0");
        }
        if (!key.exp_arg.is_zero())
            v.note("strip-positive-factor", "exp(...) > 0");
        poly = coeff;
    }
    for (const auto& s : poly->symbols())
        if (s != "x" && s != "y" && s != param) {
            v.note("parametric", "extra unbound parameter " + s);
            return v;
        }
    // Group by the (x, y) part; every state monomial must be even and every
    // coefficient (a univariate polynomial in the parameter) one-signed on
    // [lower_bound, inf).
    std::map<Monomial, ParamPoly> by_state;
    for (const auto& [m, c] : poly->terms()) {
        Monomial state, rest;
        for (const auto& [var, exp] : m)
            (var == "x" || var == "y" ? state : rest)[var] = exp;
        by_state[state] += ParamPoly::monomial(c, rest);
    }
    bool all_nonneg = true, all_nonpos = true;
    RealDomain dom = RealDomain::at_least(lower_bound);
    for (const auto& [state, c] : by_state) {
        for (const auto& [var, exp] : state)
            if (exp % 2) {
                v.note("parametric", "odd state monomial " +
                                         ParamPoly::monomial(Rational(1), state).str());
                return v;
            }
        UniPoly u = c.is_constant() ? UniPoly::constant(c.as_constant())
                                    : UniPoly::from_poly(c, param);
        if (!poly_nonneg_on(u, dom)) all_nonneg = false;
        if (!poly_nonneg_on(-u, dom)) all_nonpos = false;
    }
    if (all_nonneg || all_nonpos) {
        v.sign = all_nonneg ? SignClass::NonNegative : SignClass::NonPositive;
        v.vanishing = VanishingSet::NullMeasure;
        v.note("parametric-even-coefficients",
               "even state monomials with one-signed coefficients for " + param +
                   " >= " + to_string(lower_bound));
        return v;
    }
    v.note("parametric", "coefficient signs are mixed on the parameter range");
    return v;
}

}  // namespace dulac
