#pragma once

#include <string>
#include <utility>
#include <vector>

#include "darboux/field.hpp"

namespace darboux {

// Dense univariate polynomial over a field tower, coefficients ascending.
// The zero polynomial has an empty coefficient list and degree -1.
class Poly {
  public:
    explicit Poly(TowerPtr field) : field_(std::move(field)) {}
    Poly(TowerPtr field, std::vector<FieldElement> coeffs);

    static Poly zero(TowerPtr field) { return Poly(std::move(field)); }
    static Poly constant(TowerPtr field, const Rational& r);
    static Poly one(TowerPtr field) { return constant(std::move(field), Rational(1)); }
    static Poly x(TowerPtr field);
    static Poly from_rationals(TowerPtr field, const std::vector<Rational>& coeffs);

    const TowerPtr& field() const { return field_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    // Lowest index with a nonzero coefficient; -1 for the zero polynomial.
    int valuation() const;
    FieldElement coeff(int k) const;
    const FieldElement& leading() const;
    const std::vector<FieldElement>& coeffs() const { return c_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);

    Poly scaled(const FieldElement& s) const;
    Poly scaled(const Rational& s) const;
    Poly times_x_pow(int k) const;
    // Divides out x^k; requires valuation() >= k.
    Poly shifted_down(int k) const;
    Poly pow_int(int e) const;  // e >= 0

    // Euclidean division; divisor must be nonzero.
    std::pair<Poly, Poly> divrem(const Poly& divisor) const;
    // Division that must be exact; throws if a remainder is left.
    Poly div_exact(const Poly& divisor) const;

    Poly derivative() const;
    Poly monic() const;

    FieldElement eval(const FieldElement& a) const;

    Poly embedded(const TowerPtr& deeper) const;
    Poly conjugated(int lvl) const;

    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string str(const std::string& var = "x") const;

  private:
    void normalize();
    TowerPtr field_;
    std::vector<FieldElement> c_;
};

// Monic greatest common divisor; errors when both arguments are zero.
Poly poly_gcd(const Poly& p, const Poly& q);

// Squarefree decomposition p = lc * prod f_i^{m_i} (Yun), factors monic,
// pairwise coprime, multiplicities strictly increasing.  Errors on zero.
struct SquarefreePart {
    Poly factor;
    int multiplicity;
};
struct SquarefreeDecomposition {
    FieldElement lc;
    std::vector<SquarefreePart> parts;
};
SquarefreeDecomposition squarefree_decomposition(const Poly& p);

// Adjoins a root of `minpoly` (monic, degree >= 2, coefficients over `tower`).
TowerPtr extend_with(const TowerPtr& tower, const std::string& name, const Poly& minpoly);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace darboux
