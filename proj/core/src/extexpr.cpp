#include "dulac/extexpr.hpp"

#include "dulac/errors.hpp"

#include <climits>
#include <cmath>
#include <sstream>

namespace dulac {

void ExtExpr::add(const ExtKey& key, const ParamPoly& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = groups_.emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) groups_.erase(it);
    }
}

ExtExpr ExtExpr::abs_y_pow(int m) {
    if (m < 0) throw domain_error("abs_y_pow: negative exponent");
    ExtExpr e;
    ExtKey key;
    key.abs1 = m % 2;
    e.add(key, ParamPoly::variable("y", m - key.abs1));
    return e;
}

ExtExpr ExtExpr::exp_of(const ParamPoly& argument) {
    ExtExpr e;
    ExtKey key;
    key.exp_arg = argument;
    e.add(key, ParamPoly(Rational(1)));
    return e;
}

ExtExpr ExtExpr::term(const ParamPoly& coeff, int abs_exp, const ParamPoly& exp_arg) {
    if (abs_exp < 0) throw domain_error("term: negative |y| exponent");
    ExtKey key;
    key.abs1 = abs_exp % 2;
    key.exp_arg = exp_arg;
    ExtExpr e;
    e.add(key, coeff * ParamPoly::variable("y", abs_exp - key.abs1));
    return e;
}

bool ExtExpr::is_polynomial() const {
    for (const auto& [key, coeff] : groups_)
        if (key.abs1 != 0 || !key.exp_arg.is_zero()) return false;
    return true;
}

std::optional<ParamPoly> ExtExpr::as_poly() const {
    if (!is_polynomial()) return std::nullopt;
    if (groups_.empty()) return ParamPoly();
    return groups_.begin()->second;
}

ExtExpr ExtExpr::operator-() const {
    ExtExpr out = *this;
    for (auto& [key, coeff] : out.groups_) coeff = -coeff;
    return out;
}

ExtExpr& ExtExpr::operator+=(const ExtExpr& other) {
    for (const auto& [key, coeff] : other.groups_) add(key, coeff);
    return *this;
}

ExtExpr& ExtExpr::operator-=(const ExtExpr& other) {
    for (const auto& [key, coeff] : other.groups_) add(key, -coeff);
    return *this;
}

ExtExpr operator*(const ExtExpr& a, const ExtExpr& b) {
    ExtExpr out;
    for (const auto& [ka, ca] : a.groups_) {
        for (const auto& [kb, cb] : b.groups_) {
            ExtKey key;
            key.abs1 = (ka.abs1 + kb.abs1) % 2;
            key.exp_arg = ka.exp_arg + kb.exp_arg;
            ParamPoly coeff = ca * cb;
            // |y| * |y| = y^2.
            if (ka.abs1 + kb.abs1 == 2) coeff *= ParamPoly::variable("y", 2);
            out.add(key, coeff);
        }
    }
    return out;
}

ExtExpr& ExtExpr::operator*=(const Rational& c) {
    if (c == 0) {
        groups_.clear();
        return *this;
    }
    for (auto& [key, coeff] : groups_) coeff *= c;
    return *this;
}

ExtExpr ExtExpr::diff(const std::string& var) const {
    ExtExpr out;
    for (const auto& [key, coeff] : groups_) {
        // Product rule over coeff, exp(exp_arg) and |y|.
        out.add(key, coeff.diff(var));
        if (!key.exp_arg.is_zero()) out.add(key, coeff * key.exp_arg.diff(var));
        if (key.abs1 == 1 && var == "y") {
            // d/dy (c*|y|) = c_y*|y| + (c/y)*|y|, valid when y | c.
            if (coeff.valuation("y") < 1)
                throw non_smooth_error("diff: bare |y| factor is not differentiable at y=0 in: " +
                                       str());
            out.add(key, coeff.divide_monomial(Monomial{{"y", 1}}));
        }
    }
    return out;
}

ExtExpr ExtExpr::substitute_params(const std::map<std::string, Rational>& bindings) const {
    if (bindings.count("x") || bindings.count("y"))
        throw domain_error("substitute_params: x and y are state variables, not parameters");
    ExtExpr out;
    for (const auto& [key, coeff] : groups_) {
        ExtKey new_key;
        new_key.abs1 = key.abs1;
        new_key.exp_arg = key.exp_arg.substitute(bindings);
        out.add(new_key, coeff.substitute(bindings));
    }
    return out;
}

int ExtExpr::smoothness_order() const {
    int order = INT_MAX;
    for (const auto& [key, coeff] : groups_) {
        if (key.abs1 == 0) continue;
        // y^v * |y| has exactly v continuous derivatives at y=0.
        order = std::min(order, coeff.valuation("y"));
    }
    return order;
}

std::set<std::string> ExtExpr::parameters() const {
    std::set<std::string> out;
    for (const auto& [key, coeff] : groups_) {
        for (const auto& s : coeff.symbols()) out.insert(s);
        for (const auto& s : key.exp_arg.symbols()) out.insert(s);
    }
    out.erase("x");
    out.erase("y");
    return out;
}

double ExtExpr::eval(double x, double y, const std::map<std::string, double>& params) const {
    std::map<std::string, double> point = params;
    point["x"] = x;
    point["y"] = y;
    double acc = 0;
    for (const auto& [key, coeff] : groups_) {
        double t = coeff.eval(point);
        if (key.abs1) t *= std::abs(y);
        if (!key.exp_arg.is_zero()) t *= std::exp(key.exp_arg.eval(point));
        acc += t;
    }
    return acc;
}

std::string ExtExpr::str() const {
    if (groups_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, coeff] : groups_) {
        if (!first) os << " + ";
        first = false;
        bool plain = key.abs1 == 0 && key.exp_arg.is_zero();
        if (plain) {
            os << coeff.str();
            continue;
        }
        bool unit = coeff == ParamPoly(Rational(1));
        bool need_star = false;
        if (!unit) {
            bool wrap = coeff.terms().size() > 1;
            os << (wrap ? "(" : "") << coeff.str() << (wrap ? ")" : "");
            need_star = true;
        }
        if (key.abs1) {
            if (need_star) os << "*";
            os << "abs_y";
            need_star = true;
        }
        if (!key.exp_arg.is_zero()) {
            if (need_star) os << "*";
            os << "exp(" << key.exp_arg.str() << ")";
        }
    }
    return os.str();
}

}  // namespace dulac
