#pragma once

#include "dulac/rational.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace dulac {

// Monomial: variable name -> positive exponent. The empty map is the unit.
using Monomial = std::map<std::string, int>;

Monomial monomial_mul(const Monomial& a, const Monomial& b);
// Componentwise min (the monomial gcd).
Monomial monomial_gcd(const Monomial& a, const Monomial& b);
// a / b, assuming b divides a.
Monomial monomial_div(const Monomial& a, const Monomial& b);
bool monomial_divides(const Monomial& b, const Monomial& a);

// Multivariate polynomial over exact rationals. State variables (x, y) and
// named parameters are all plain symbols; canonical form stores no zero
// coefficients, so structural equality is mathematical equality.
class ParamPoly {
  public:
    ParamPoly() = default;
    explicit ParamPoly(const Rational& c);
    explicit ParamPoly(long c) : ParamPoly(Rational(c)) {}

    static ParamPoly variable(const std::string& name, int exponent = 1);
    static ParamPoly monomial(const Rational& coeff, const Monomial& m);

    const std::map<Monomial, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term (coefficient of the unit monomial).
    Rational constant_term() const;
    // Defined only for constant polynomials.
    Rational as_constant() const;

    bool operator==(const ParamPoly& other) const { return terms_ == other.terms_; }
    bool operator!=(const ParamPoly& other) const { return !(*this == other); }

    ParamPoly operator-() const;
    ParamPoly& operator+=(const ParamPoly& other);
    ParamPoly& operator-=(const ParamPoly& other);
    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
    ParamPoly& operator*=(const ParamPoly& other) { return *this = *this * other; }
    ParamPoly& operator*=(const Rational& c);
    friend ParamPoly operator*(ParamPoly a, const Rational& c) { return a *= c; }
    friend ParamPoly operator*(const Rational& c, ParamPoly a) { return a *= c; }
    ParamPoly pow(unsigned k) const;

    ParamPoly diff(const std::string& var) const;

    ParamPoly substitute(const std::map<std::string, Rational>& bindings) const;
    // Substitute a polynomial for a variable.
    ParamPoly substitute(const std::string& var, const ParamPoly& value) const;

    std::set<std::string> symbols() const;
    bool depends_on(const std::string& var) const;
    int degree(const std::string& var) const;
    int total_degree() const;

    // Lowest exponent of `var` over all monomials (0 for the zero polynomial).
    int valuation(const std::string& var) const;
    // True when every monomial has even exponent in `var`.
    bool even_in(const std::string& var) const;

    // Coefficients when viewed as a polynomial in `var`: exponent -> poly in
    // the remaining symbols.
    std::map<int, ParamPoly> coeffs_in(const std::string& var) const;
    ParamPoly coeff_of(const std::string& var, int exponent) const;

    double eval(const std::map<std::string, double>& point) const;
    Rational eval_exact(const std::map<std::string, Rational>& point) const;

    // gcd of all monomials (the common monomial factor).
    Monomial monomial_content() const;
    // Positive gcd of the coefficients (0 for the zero polynomial).
    Rational rational_content() const;
    // Divides out a monomial that must divide every term.
    ParamPoly divide_monomial(const Monomial& m) const;
    // Exact division: returns quotient iff divisor divides *this exactly.
    std::optional<ParamPoly> divide_exact(const ParamPoly& divisor) const;

    std::string str() const;

  private:
    void add_term(const Monomial& m, const Rational& c);
    std::map<Monomial, Rational> terms_;
};

// Multiplicative lexicographic monomial order (variables ordered by name).
bool monomial_less(const Monomial& a, const Monomial& b);

}  // namespace dulac
