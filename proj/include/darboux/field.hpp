#pragma once

#include <memory>
#include <string>
#include <vector>

#include "darboux/rational.hpp"

namespace darboux {

class FieldTower;
using TowerPtr = std::shared_ptr<const FieldTower>;
class FieldElement;

// A tower of algebraic extensions of Q.  Each level adjoins one generator
// with a monic minimal polynomial whose coefficients live in the tower below.
// Towers are immutable; extending returns a new tower sharing its base.
class FieldTower : public std::enable_shared_from_this<FieldTower> {
  public:
    // The rationals (empty tower, degree 1).  Shared singleton.
    static TowerPtr rationals();

    // Adjoins a generator.  minpoly_tail holds c_0..c_{d-1} of the monic
    // modulus t^d + c_{d-1} t^{d-1} + ... + c_0, all over this tower; d >= 2.
    TowerPtr extend(const std::string& name, std::vector<FieldElement> minpoly_tail) const;

    int degree() const { return degree_; }
    int levels() const { return level_; }
    bool is_rationals() const { return level_ == 0; }

    const TowerPtr& base() const { return base_; }
    const std::string& generator_name() const { return name_; }
    int step_degree() const { return step_degree_; }

    // True when `other` appears in this tower's base chain (or is this tower).
    bool has_prefix(const TowerPtr& other) const;

    // Degree of the subtower with the top `drop` levels removed.
    int degree_below() const { return level_ == 0 ? 1 : degree_ / step_degree_; }

    // Generator of level `lvl` (1-based) as an element of this tower.
    FieldElement generator(int lvl) const;
    FieldElement generator(const std::string& name) const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_rational(const Rational& r) const;

    // "Q", "Q(s7)", "Q(u1)(s7)", ...
    std::string describe() const;

    // Basis monomial for a flat coordinate index, e.g. "s3*s7" or "xi^2".
    std::string monomial_name(int flat_index) const;

    // Minimal polynomial tail of the top step, coordinates over the base.
    const std::vector<std::vector<Rational>>& top_minpoly_tail() const { return minpoly_tail_flat_; }

  private:
    FieldTower() : degree_(1), step_degree_(1), level_(0) {}
    friend struct TowerAccess;

    TowerPtr base_;  // null only for the rationals
    std::string name_;
    std::vector<std::vector<Rational>> minpoly_tail_flat_;  // c_0..c_{d-1}, coords over base
    int degree_;
    int step_degree_;
    int level_;
};

// Element of a field tower, stored as a dense coordinate vector of length
// tower->degree() in the multi-monomial basis (innermost generator varies
// fastest).  Immutable value type; all operations are exact.
class FieldElement {
  public:
    FieldElement() = default;
    FieldElement(TowerPtr tower, std::vector<Rational> coords);

    static FieldElement from_rational(TowerPtr tower, const Rational& r);

    const TowerPtr& tower() const { return tower_; }
    const std::vector<Rational>& coords() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;  // all non-constant coordinates vanish
    // Requires is_rational().
    Rational rational_value() const;

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);

    FieldElement scaled(const Rational& r) const;

    FieldElement inverse() const;
    FieldElement pow_int(long e) const;

    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    // Canonical embedding into a deeper tower; `deeper` must have this
    // element's tower as a prefix.
    FieldElement embedded(const TowerPtr& deeper) const;

    // Field automorphism sending the level-`lvl` generator g to -g.  Only
    // valid for quadratic steps t^2 - c; throws otherwise.
    FieldElement conjugated(int lvl) const;

    // Polynomial in the tower generators with rational coefficients, e.g.
    // "1/2 - 3*s7 + s7*xi^2".
    std::string str() const;

  private:
    TowerPtr tower_;
    std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& e);

}  // namespace darboux
