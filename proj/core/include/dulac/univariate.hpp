#pragma once

#include "dulac/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dulac {

// Dense univariate polynomial over exact rationals; coeffs[i] multiplies t^i
// and the representation never carries a zero leading coefficient.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    static UniPoly constant(const Rational& c);
    static UniPoly from_poly(const ParamPoly& p, const std::string& var);

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational leading() const;

    Rational eval(const Rational& t) const;
    double eval(double t) const;
    UniPoly derivative() const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly operator*(const Rational& c) const;
    bool operator==(const UniPoly& other) const { return coeffs_ == other.coeffs_; }

    // Euclidean division (exact rational arithmetic).
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;

    // Primitive part with positive leading coefficient.
    UniPoly primitive() const;

    ParamPoly to_poly(const std::string& var) const;
    std::string str(const std::string& var = "t") const;

  private:
    void trim();
    std::vector<Rational> coeffs_;
};

UniPoly gcd(const UniPoly& a, const UniPoly& b);
// p with repeated roots collapsed to simple ones.
UniPoly squarefree_part(const UniPoly& p);

// All real roots lie in [-bound, bound].
Rational cauchy_root_bound(const UniPoly& p);

// Closed interval with rational endpoints; lo == hi marks an exact root.
struct RootInterval {
    Rational lo, hi;
    bool is_point() const { return lo == hi; }
    Rational mid() const { return (lo + hi) / 2; }
    double mid_double() const { return to_double(mid()); }
    Rational width() const { return hi - lo; }
};

// Disjoint isolating intervals, one per distinct real root, sorted.
std::vector<RootInterval> isolate_roots(const UniPoly& p);
// Shrinks an isolating interval below the requested width.
RootInterval refine_root(const UniPoly& p, RootInterval iv, const Rational& max_width);

int count_real_roots(const UniPoly& p);

// Number of sign changes in the coefficient sequence (Descartes).
int descartes_sign_changes(const UniPoly& p);

// Domain of the real line: closed at any finite endpoint.
struct RealDomain {
    std::optional<Rational> lo, hi;
    static RealDomain whole_line() { return {}; }
    static RealDomain at_least(const Rational& a) { return {a, std::nullopt}; }
    static RealDomain closed(const Rational& a, const Rational& b) { return {a, b}; }
    bool contains(const Rational& t) const {
        return (!lo || t >= *lo) && (!hi || t <= *hi);
    }
};

// Exact decision p(t) >= 0 for all t in the domain. When false and
// `witness` is given, stores a rational point with p(witness) < 0.
bool poly_nonneg_on(const UniPoly& p, const RealDomain& domain, Rational* witness = nullptr);

}  // namespace dulac
