#pragma once

#include "dulac/poly.hpp"

#include <map>
#include <optional>
#include <string>

namespace dulac {

// Grouping key of an extended term: an optional bare |y| factor and the
// polynomial argument of an exp factor (zero polynomial = no exp factor).
//
// Canonical form folds even powers of |y| into the coefficient polynomial:
// |y|^m = y^m for even m and y^(m-1)*|y| for odd m, so abs1 is 0 or 1 and
// structural equality is mathematical equality.
struct ExtKey {
    int abs1 = 0;  // 0 or 1
    ParamPoly exp_arg;

    bool operator==(const ExtKey& other) const {
        return abs1 == other.abs1 && exp_arg == other.exp_arg;
    }
    bool operator<(const ExtKey& other) const {
        if (abs1 != other.abs1) return abs1 < other.abs1;
        return exp_arg.terms() < other.exp_arg.terms();
    }
};

// Sum of coeff(x,y,params) * |y|^abs1 * exp(exp_arg), closed under +, *,
// d/dx, d/dy and parameter substitution.
class ExtExpr {
  public:
    ExtExpr() = default;
    ExtExpr(const ParamPoly& p) { add(ExtKey{}, p); }  // NOLINT: implicit by design
    explicit ExtExpr(const Rational& c) : ExtExpr(ParamPoly(c)) {}

    // |y|^m, m >= 0 (canonicalized as described above).
    static ExtExpr abs_y_pow(int m);
    static ExtExpr exp_of(const ParamPoly& argument);
    static ExtExpr term(const ParamPoly& coeff, int abs_exp, const ParamPoly& exp_arg);

    const std::map<ExtKey, ParamPoly>& groups() const { return groups_; }

    bool is_zero() const { return groups_.empty(); }
    bool operator==(const ExtExpr& other) const { return groups_ == other.groups_; }
    bool operator!=(const ExtExpr& other) const { return !(*this == other); }

    // True when there are no |y| or exp factors.
    bool is_polynomial() const;
    std::optional<ParamPoly> as_poly() const;

    ExtExpr operator-() const;
    ExtExpr& operator+=(const ExtExpr& other);
    ExtExpr& operator-=(const ExtExpr& other);
    friend ExtExpr operator+(ExtExpr a, const ExtExpr& b) { return a += b; }
    friend ExtExpr operator-(ExtExpr a, const ExtExpr& b) { return a -= b; }
    friend ExtExpr operator*(const ExtExpr& a, const ExtExpr& b);
    ExtExpr& operator*=(const ExtExpr& other) { return *this = *this * other; }
    ExtExpr& operator*=(const Rational& c);

    // Exact derivative. Differentiating a |y| group in y requires its
    // coefficient to vanish on y=0 (otherwise the term is only C^0 there).
    ExtExpr diff(const std::string& var) const;

    ExtExpr substitute_params(const std::map<std::string, Rational>& bindings) const;

    // Number of continuous derivatives at y=0 (INT_MAX when smooth).
    int smoothness_order() const;

    // Free symbols other than the state variables x, y.
    std::set<std::string> parameters() const;

    double eval(double x, double y, const std::map<std::string, double>& params = {}) const;

    std::string str() const;

  private:
    void add(const ExtKey& key, const ParamPoly& coeff);
    std::map<ExtKey, ParamPoly> groups_;
};

inline bool is_identically_zero(const ExtExpr& e) { return e.is_zero(); }

}  // namespace dulac
