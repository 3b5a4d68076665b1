#include "darboux/field.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <span>
#include <sstream>

namespace darboux {

namespace {

using Coords = std::vector<Rational>;
using Span = std::span<const Rational>;

// Per-level data, bottom-up: chain[l-1] describes extension step l.
struct Level {
    int step;  // degree of the adjoined generator
    int sub;   // degree of the tower below this step
    const std::vector<std::vector<Rational>>* tail;  // monic modulus, c_0..c_{step-1}
};

std::vector<Level> level_chain(const FieldTower* t) {
    std::vector<Level> chain;
    for (const FieldTower* cur = t; cur && cur->levels() > 0; cur = cur->base().get())
        chain.push_back({cur->step_degree(), cur->degree_below(), &cur->top_minpoly_tail()});
    std::reverse(chain.begin(), chain.end());
    return chain;
}

bool all_zero(Span a) {
    return std::all_of(a.begin(), a.end(), [](const Rational& r) { return r.is_zero(); });
}

void add_into(Coords& a, Span b, int off = 0) {
    for (size_t i = 0; i < b.size(); ++i) a[off + i] += b[i];
}

void sub_into(Coords& a, Span b, int off = 0) {
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= b[i];
}

// Product of two elements of the level-`lvl` subfield (lvl = 0 means Q).
Coords mul_at(const std::vector<Level>& chain, int lvl, Span a, Span b) {
    if (lvl == 0) return {a[0] * b[0]};
    const Level& L = chain[lvl - 1];
    const int d = L.step, s = L.sub;

    // Convolution of the two generator-power expansions, blockwise.
    std::vector<Coords> conv(2 * d - 1);
    for (int k = 0; k < 2 * d - 1; ++k) conv[k].assign(s, Rational(0));
    for (int i = 0; i < d; ++i) {
        Span ai = a.subspan(i * s, s);
        if (all_zero(ai)) continue;
        for (int j = 0; j < d; ++j) {
            Span bj = b.subspan(j * s, s);
            if (all_zero(bj)) continue;
            add_into(conv[i + j], mul_at(chain, lvl - 1, ai, bj));
        }
    }
    // Reduce g^k for k >= d via g^d = -(c_{d-1} g^{d-1} + ... + c_0).
    for (int k = 2 * d - 2; k >= d; --k) {
        if (all_zero(conv[k])) continue;
        for (int i = 0; i < d; ++i) {
            const auto& ci = (*L.tail)[i];
            if (all_zero(ci)) continue;
            sub_into(conv[k - d + i], mul_at(chain, lvl - 1, conv[k], ci));
        }
    }
    Coords out(static_cast<size_t>(d) * s);
    for (int k = 0; k < d; ++k)
        std::copy(conv[k].begin(), conv[k].end(), out.begin() + static_cast<size_t>(k) * s);
    return out;
}

Coords inv_at(const std::vector<Level>& chain, int lvl, Span a);

// Polynomials in the top generator of level `lvl`, coefficients in the
// subfield below (blocks of size chain[lvl-1].sub).
struct BlockPoly {
    std::vector<Coords> c;
    int deg() const {
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
            if (!all_zero(c[i])) return i;
        return -1;
    }
};

std::string render_blocks(const BlockPoly& p) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < p.c.size(); ++i) {
        if (i) os << "; ";
        for (size_t j = 0; j < p.c[i].size(); ++j) {
            if (j) os << ",";
            os << p.c[i][j].str();
        }
    }
    os << "]";
    return os.str();
}

// Extended Euclid in (subfield)[t] to invert `a` modulo the monic modulus of
// step `lvl`.  A nontrivial gcd means the modulus is reducible; the trap
// surfaces the factor instead of returning garbage.
Coords inv_at(const std::vector<Level>& chain, int lvl, Span a) {
    if (lvl == 0) {
        if (a[0].is_zero()) throw DivisionByZero("field element inverse of zero");
        return {a[0].inverse()};
    }
    const Level& L = chain[lvl - 1];
    const int d = L.step, s = L.sub;
    if (all_zero(a)) throw DivisionByZero("field element inverse of zero");

    auto block_mul = [&](const Coords& x, const Coords& y) { return mul_at(chain, lvl - 1, x, y); };

    BlockPoly r0, r1, s0, s1;
    r0.c.resize(d + 1);
    for (int i = 0; i < d; ++i) r0.c[i] = (*L.tail)[i];
    r0.c[d].assign(s, Rational(0));
    r0.c[d][0] = Rational(1);
    r1.c.resize(d);
    for (int i = 0; i < d; ++i) r1.c[i] = Coords(a.begin() + i * s, a.begin() + (i + 1) * s);
    Coords zero_block(s, Rational(0)), one_block(s, Rational(0));
    one_block[0] = Rational(1);
    s0.c.assign(d + 1, zero_block);
    s1.c.assign(d + 1, zero_block);
    s1.c[0] = one_block;

    while (r1.deg() >= 1) {
        const int d1 = r1.deg();
        Coords lc_inv = inv_at(chain, lvl - 1, r1.c[d1]);
        // Long division step by step, updating the Bezout coefficient alongside.
        while (r0.deg() >= d1) {
            const int d0 = r0.deg();
            Coords q = block_mul(r0.c[d0], lc_inv);
            const int shift = d0 - d1;
            for (int i = 0; i <= d1; ++i) sub_into(r0.c[i + shift], block_mul(q, r1.c[i]));
            for (int i = 0; i + shift <= d; ++i) sub_into(s0.c[i + shift], block_mul(q, s1.c[i]));
        }
        std::swap(r0, r1);
        std::swap(s0, s1);
    }
    if (r1.deg() < 0)
        throw ReducibleModulus("tower modulus is reducible; inversion hit a zero divisor",
                               render_blocks(r0));
    Coords c_inv = inv_at(chain, lvl - 1, r1.c[0]);
    Coords out(static_cast<size_t>(d) * s, Rational(0));
    for (int i = 0; i < d; ++i) {
        Coords blk = block_mul(s1.c[i], c_inv);
        std::copy(blk.begin(), blk.end(), out.begin() + static_cast<size_t>(i) * s);
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldTower

struct TowerAccess {
    static std::shared_ptr<FieldTower> make() { return std::shared_ptr<FieldTower>(new FieldTower()); }
    static FieldTower& mut(std::shared_ptr<FieldTower>& p) { return *p; }
};

TowerPtr FieldTower::rationals() {
    static TowerPtr q = TowerAccess::make();
    return q;
}

TowerPtr FieldTower::extend(const std::string& name, std::vector<FieldElement> minpoly_tail) const {
    const int d = static_cast<int>(minpoly_tail.size());
    if (d < 2) throw InvalidExtension("minimal polynomial must have degree >= 2");
    if (name.empty()) throw InvalidExtension("generator needs a name");
    for (const FieldTower* cur = this; cur && cur->level_ > 0; cur = cur->base_.get())
        if (cur->name_ == name) throw InvalidExtension("generator name already used: " + name);

    TowerPtr self = shared_from_this();
    auto t = TowerAccess::make();
    FieldTower& m = TowerAccess::mut(t);
    m.base_ = self;
    m.name_ = name;
    m.step_degree_ = d;
    m.degree_ = degree_ * d;
    m.level_ = level_ + 1;
    m.minpoly_tail_flat_.reserve(d);
    for (auto& c : minpoly_tail) {
        if (!self->has_prefix(c.tower()) && !c.tower()->has_prefix(self))
            throw InvalidExtension("modulus coefficient lives in an unrelated tower");
        FieldElement e = c.tower() == self ? std::move(c) : c.embedded(self);
        m.minpoly_tail_flat_.push_back(e.coords());
    }
    return t;
}

bool FieldTower::has_prefix(const TowerPtr& other) const {
    for (const FieldTower* cur = this; cur; cur = cur->base_.get()) {
        if (cur == other.get()) return true;
        if (cur->level_ == 0) break;
    }
    return false;
}

FieldElement FieldTower::generator(int lvl) const {
    if (lvl < 1 || lvl > level_) throw Error("no tower level " + std::to_string(lvl));
    int below = 1;
    const FieldTower* cur = this;
    std::vector<const FieldTower*> steps;
    for (; cur && cur->level_ > 0; cur = cur->base_.get()) steps.push_back(cur);
    std::reverse(steps.begin(), steps.end());
    for (int i = 0; i < lvl - 1; ++i) below *= steps[i]->step_degree_;
    std::vector<Rational> c(degree_, Rational(0));
    c[below] = Rational(1);
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement FieldTower::generator(const std::string& name) const {
    int lvl = level_;
    for (const FieldTower* cur = this; cur && cur->level_ > 0; cur = cur->base_.get(), --lvl)
        if (cur->name_ == name) return generator(lvl);
    throw Error("no generator named " + name);
}

FieldElement FieldTower::zero() const { return from_rational(Rational(0)); }
FieldElement FieldTower::one() const { return from_rational(Rational(1)); }

FieldElement FieldTower::from_rational(const Rational& r) const {
    std::vector<Rational> c(degree_, Rational(0));
    c[0] = r;
    return FieldElement(shared_from_this(), std::move(c));
}

std::string FieldTower::describe() const {
    std::vector<const FieldTower*> steps;
    for (const FieldTower* cur = this; cur && cur->level_ > 0; cur = cur->base_.get())
        steps.push_back(cur);
    std::string s = "Q";
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) s += "(" + (*it)->name_ + ")";
    return s;
}

std::string FieldTower::monomial_name(int flat_index) const {
    std::vector<const FieldTower*> steps;
    for (const FieldTower* cur = this; cur && cur->level_ > 0; cur = cur->base_.get())
        steps.push_back(cur);
    std::reverse(steps.begin(), steps.end());
    std::string s;
    int rem = flat_index;
    for (const FieldTower* st : steps) {
        int e = rem % st->step_degree_;
        rem /= st->step_degree_;
        if (e == 0) continue;
        if (!s.empty()) s += "*";
        s += st->name_;
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(TowerPtr tower, std::vector<Rational> coords)
    : tower_(std::move(tower)), c_(std::move(coords)) {
    if (!tower_) throw Error("field element without a tower");
    if (static_cast<int>(c_.size()) != tower_->degree())
        throw Error("coordinate vector has wrong length for the tower");
}

FieldElement FieldElement::from_rational(TowerPtr tower, const Rational& r) {
    return tower->from_rational(r);
}

bool FieldElement::is_zero() const { return all_zero(c_); }

bool FieldElement::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rational FieldElement::rational_value() const {
    if (!is_rational()) throw Error("element is not rational: " + str());
    return c_[0];
}

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    if (tower_ != o.tower_) throw TowerMismatch();
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
    if (tower_ != o.tower_) throw TowerMismatch();
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    if (a.tower_ != b.tower_) throw TowerMismatch();
    auto chain = level_chain(a.tower_.get());
    return FieldElement(a.tower_, mul_at(chain, a.tower_->levels(), a.c_, b.c_));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

FieldElement FieldElement::scaled(const Rational& r) const {
    FieldElement out = *this;
    for (auto& x : out.c_) x *= r;
    return out;
}

FieldElement FieldElement::inverse() const {
    auto chain = level_chain(tower_.get());
    return FieldElement(tower_, inv_at(chain, tower_->levels(), c_));
}

FieldElement FieldElement::pow_int(long e) const {
    if (e == 0) return tower_->one();
    FieldElement base = e < 0 ? inverse() : *this;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    FieldElement acc = tower_->one();
    while (k) {
        if (k & 1) acc = acc * base;
        base = (k >>= 1) ? base * base : base;
    }
    return acc;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (a.tower_ != b.tower_) throw TowerMismatch();
    return a.c_ == b.c_;
}

FieldElement FieldElement::embedded(const TowerPtr& deeper) const {
    if (deeper == tower_) return *this;
    if (!deeper->has_prefix(tower_))
        throw TowerMismatch("cannot embed " + tower_->describe() + " into " + deeper->describe());
    std::vector<Rational> c(deeper->degree(), Rational(0));
    std::copy(c_.begin(), c_.end(), c.begin());
    return FieldElement(deeper, std::move(c));
}

FieldElement FieldElement::conjugated(int lvl) const {
    std::vector<const FieldTower*> steps;
    for (const FieldTower* cur = tower_.get(); cur && cur->levels() > 0; cur = cur->base().get())
        steps.push_back(cur);
    std::reverse(steps.begin(), steps.end());
    if (lvl < 1 || lvl > static_cast<int>(steps.size()))
        throw Error("no tower level " + std::to_string(lvl));
    const FieldTower* st = steps[lvl - 1];
    if (st->step_degree() != 2 || !all_zero(st->top_minpoly_tail()[1]))
        throw Error("conjugation needs a quadratic step t^2 - c at level " + std::to_string(lvl));
    int below = 1;
    for (int i = 0; i < lvl - 1; ++i) below *= steps[i]->step_degree();
    // Moduli of the higher steps must not involve this generator.
    for (size_t h = lvl; h < steps.size(); ++h)
        for (const auto& coef : steps[h]->top_minpoly_tail())
            for (size_t i = 0; i < coef.size(); ++i)
                if ((i / below) % 2 == 1 && !coef[i].is_zero())
                    throw Error("conjugation does not extend past level " + std::to_string(h + 1));
    FieldElement out = *this;
    for (size_t i = 0; i < out.c_.size(); ++i)
        if ((i / below) % 2 == 1) out.c_[i] = -out.c_[i];
    return out;
}

std::string FieldElement::str() const {
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        Rational r = c_[i];
        if (s.empty()) {
            if (r.sign() < 0) {
                s += "-";
                r = -r;
            }
        } else {
            s += r.sign() < 0 ? " - " : " + ";
            if (r.sign() < 0) r = -r;
        }
        std::string mon = tower_->monomial_name(static_cast<int>(i));
        if (mon.empty())
            s += r.str();
        else if (r.is_one())
            s += mon;
        else
            s += r.str() + "*" + mon;
    }
    return s.empty() ? "0" : s;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& e) { return os << e.str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace darboux
