#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace bcp {

// Exact rational helpers. mpq_class values are kept canonical (reduced,
// positive denominator) by GMP itself.
std::string rational_to_string(const mpq_class& q);  // "num/den", "/1" omitted
double rational_to_double(const mpq_class& q);

// Integer-coefficient polynomial in one variable. Index = exponent, stored
// canonically with no trailing zeros; the zero polynomial is the empty list.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long> coeffs);
    explicit IntPoly(std::vector<mpz_class> coeffs);

    static IntPoly constant(const mpz_class& c);
    static IntPoly x_power(int k);  // x^k

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const mpz_class& coeff(int i) const;  // 0 beyond the degree
    const std::vector<mpz_class>& coeffs() const { return c_; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    bool operator==(const IntPoly&) const = default;

    IntPoly times_x_power(int k) const;            // p * x^k
    IntPoly plus_constant(const mpz_class& c) const;
    IntPoly derivative() const;

    mpq_class eval(const mpq_class& x) const;      // exact Horner
    double eval_double(double x) const;
    // Exact sign at a rational point, via homogeneous integer evaluation.
    int sign_at(const mpq_class& x) const;

    // Exact quotient when the divisor divides p in Q[x] with an integer
    // quotient; nullopt otherwise.
    std::optional<IntPoly> divided_by(const IntPoly& divisor) const;

    // Largest k with (den*x - num)^k dividing p; x = num/den canonical.
    int root_multiplicity(const mpq_class& root) const;

    std::string to_string() const;            // "1 + 2*x + x^2"
    nlohmann::ordered_json to_json() const;   // array of decimal strings

private:
    void canonicalize();
    std::vector<mpz_class> c_;
};

// Content (gcd of coefficients, positive) and primitive part.
mpz_class poly_content(const IntPoly& p);
IntPoly poly_primitive_part(const IntPoly& p);

// Gcd in Z[x] of the primitive parts, normalized primitive with a positive
// leading coefficient. gcd(0, q) = primitive |q|.
IntPoly poly_gcd(const IntPoly& p, const IntPoly& q);

}  // namespace bcp
