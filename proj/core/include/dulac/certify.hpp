#pragma once

#include "dulac/extexpr.hpp"
#include "dulac/univariate.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dulac {

enum class SignClass { NonNegative, NonPositive, IdenticallyZero, Indefinite, Unknown };
enum class VanishingSet { NullMeasure, PositiveMeasure, Unknown };

std::string to_string(SignClass s);
std::string to_string(VanishingSet v);

// Exact rational point with the sign of the expression there.
struct Witness {
    Rational x, y;
    int sign = 0;
};

struct TraceStep {
    std::string strategy;
    std::string detail;
};

// Outcome of a sign query. Definite verdicts carry a machine-checkable trace;
// Indefinite carries a pair of witnesses with strict opposite signs.
struct SignVerdict {
    SignClass sign = SignClass::Unknown;
    VanishingSet vanishing = VanishingSet::Unknown;
    std::vector<TraceStep> trace;
    std::optional<std::pair<Witness, Witness>> witnesses;  // (positive, negative)

    bool is_definite() const {
        return sign == SignClass::NonNegative || sign == SignClass::NonPositive;
    }
    // A usable Bendixson-Dulac hypothesis: one sign, vanishing only on a null
    // measure set.
    bool certifies() const { return is_definite() && vanishing == VanishingSet::NullMeasure; }
    void note(std::string strategy, std::string detail = {});
};

enum class RegionKind { Plane, HalfplaneYNonneg, Box };

struct Region {
    RegionKind kind = RegionKind::Plane;
    double x0 = -10, x1 = 10, y0 = -10, y1 = 10;  // used when kind == Box

    static Region plane() { return {}; }
    static Region halfplane_y_nonneg() { return {RegionKind::HalfplaneYNonneg}; }
    static Region box(double x0, double x1, double y0, double y1) {
        return {RegionKind::Box, x0, x1, y0, y1};
    }
};

struct CertifyOptions {
    // A known admissible factor (the Dulac candidate V). certify_sign may
    // divide it out; the verdict then describes the quotient, which is the
    // object whose sign drives the per-component Dulac argument.
    std::optional<ParamPoly> dulac_factor;
    int max_factor_multiplicity = 4;
    std::uint64_t seed = 20240901;
    int samples = 4096;
};

SignVerdict certify_sign(const ExtExpr& e, const Region& region = Region::plane(),
                         const CertifyOptions& options = {});

// Decides sign of e(x,y;param) uniformly over param >= lower_bound for the
// built-in parametric shapes: monomials even in x and y with coefficients
// univariate in the parameter.
SignVerdict certify_sign_parametric(const ExtExpr& e, const std::string& param,
                                    const Rational& lower_bound);

// P(z) = z^m + b z + c on z >= 0.
struct TrinomialQuery {
    long m = 2;
    Rational b, c;
};

// Exact closed-form criterion; ties P(z0) = 0 count as nonnegative.
bool trinomial_nonneg(const TrinomialQuery& q);

// 3/sqrt(2) * (3/m)^(m/2): above this |lambda| the trinomial condition holds.
double lambda_threshold(long m);

// Upper bound on positive real roots via coefficient sign changes.
int descartes_positive_roots(const ParamPoly& p);

// p univariate with rational coefficients; exact nonnegativity on the domain.
bool sturm_nonneg(const ParamPoly& p, const RealDomain& domain);

}  // namespace dulac
