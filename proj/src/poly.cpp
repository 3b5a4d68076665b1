#include "darboux/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace darboux {

namespace {

// Schoolbook multiplication is faster for short operands; Karatsuba takes
// over once both factors get long.  Series checks at order ~60 over small
// towers spend most of their time here.
constexpr size_t kKaratsubaThreshold = 32;

using Coeffs = std::vector<FieldElement>;

Coeffs mul_schoolbook(const Coeffs& a, const Coeffs& b, const TowerPtr& field) {
    Coeffs out(a.size() + b.size() - 1, field->zero());
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

Coeffs mul_any(const Coeffs& a, const Coeffs& b, const TowerPtr& field);

Coeffs mul_karatsuba(const Coeffs& a, const Coeffs& b, const TowerPtr& field) {
    const size_t h = (std::max(a.size(), b.size()) + 1) / 2;
    auto lo = [&](const Coeffs& v) { return Coeffs(v.begin(), v.begin() + std::min(h, v.size())); };
    auto hi = [&](const Coeffs& v) {
        return v.size() > h ? Coeffs(v.begin() + h, v.end()) : Coeffs{field->zero()};
    };
    Coeffs a0 = lo(a), a1 = hi(a), b0 = lo(b), b1 = hi(b);
    Coeffs z0 = mul_any(a0, b0, field);
    Coeffs z2 = mul_any(a1, b1, field);
    Coeffs sa = a0, sb = b0;
    sa.resize(std::max(a0.size(), a1.size()), field->zero());
    sb.resize(std::max(b0.size(), b1.size()), field->zero());
    for (size_t i = 0; i < a1.size(); ++i) sa[i] += a1[i];
    for (size_t i = 0; i < b1.size(); ++i) sb[i] += b1[i];
    Coeffs z1 = mul_any(sa, sb, field);
    for (size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
    for (size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];

    Coeffs out(a.size() + b.size() - 1, field->zero());
    for (size_t i = 0; i < z0.size() && i < out.size(); ++i) out[i] += z0[i];
    for (size_t i = 0; i < z1.size() && i + h < out.size(); ++i) out[i + h] += z1[i];
    for (size_t i = 0; i < z2.size() && i + 2 * h < out.size(); ++i) out[i + 2 * h] += z2[i];
    return out;
}

Coeffs mul_any(const Coeffs& a, const Coeffs& b, const TowerPtr& field) {
    if (a.empty() || b.empty()) return {};
    if (a.size() < kKaratsubaThreshold || b.size() < kKaratsubaThreshold)
        return mul_schoolbook(a, b, field);
    return mul_karatsuba(a, b, field);
}

}  // namespace

Poly::Poly(TowerPtr field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
    for (auto& c : c_) {
        if (c.tower() == field_) continue;
        c = c.embedded(field_);
    }
    normalize();
}

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(TowerPtr field, const Rational& r) {
    Poly p(field);
    p.c_ = {field->from_rational(r)};
    p.normalize();
    return p;
}

Poly Poly::x(TowerPtr field) {
    Poly p(field);
    p.c_ = {field->zero(), field->one()};
    return p;
}

Poly Poly::from_rationals(TowerPtr field, const std::vector<Rational>& coeffs) {
    Poly p(field);
    p.c_.reserve(coeffs.size());
    for (const auto& r : coeffs) p.c_.push_back(field->from_rational(r));
    p.normalize();
    return p;
}

int Poly::valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return static_cast<int>(i);
    return -1;
}

FieldElement Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return field_->zero();
    return c_[k];
}

const FieldElement& Poly::leading() const {
    if (c_.empty()) throw Error("leading coefficient of the zero polynomial");
    return c_.back();
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    if (field_ != o.field_) throw TowerMismatch();
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_->zero());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (field_ != o.field_) throw TowerMismatch();
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_->zero());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.field_ != b.field_) throw TowerMismatch();
    Poly out(a.field_);
    out.c_ = mul_any(a.c_, b.c_, a.field_);
    out.normalize();
    return out;
}

Poly Poly::scaled(const FieldElement& s) const {
    Poly out(field_);
    if (s.is_zero()) return out;
    FieldElement se = s.tower() == field_ ? s : s.embedded(field_);
    out.c_.reserve(c_.size());
    for (const auto& c : c_) out.c_.push_back(c * se);
    out.normalize();
    return out;
}

Poly Poly::scaled(const Rational& s) const { return scaled(field_->from_rational(s)); }

Poly Poly::times_x_pow(int k) const {
    if (is_zero()) return *this;
    Poly out(field_);
    out.c_.assign(static_cast<size_t>(k), field_->zero());
    out.c_.insert(out.c_.end(), c_.begin(), c_.end());
    return out;
}

Poly Poly::shifted_down(int k) const {
    if (is_zero()) return *this;
    if (valuation() < k) throw Error("shifted_down would drop nonzero coefficients");
    Poly out(field_);
    out.c_.assign(c_.begin() + k, c_.end());
    return out;
}

Poly Poly::pow_int(int e) const {
    if (e < 0) throw Error("negative polynomial power");
    Poly acc = Poly::one(field_);
    Poly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& divisor) const {
    if (field_ != divisor.field_) throw TowerMismatch();
    if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
    Poly q(field_), r = *this;
    const int dd = divisor.degree();
    if (r.degree() < dd) return {q, r};
    FieldElement lc_inv = divisor.leading().inverse();
    q.c_.assign(static_cast<size_t>(r.degree() - dd) + 1, field_->zero());
    while (r.degree() >= dd) {
        const int k = r.degree() - dd;
        FieldElement f = r.c_.back() * lc_inv;
        q.c_[k] = f;
        for (int i = 0; i <= dd; ++i) r.c_[k + i] -= f * divisor.c_[i];
        r.normalize();
    }
    q.normalize();
    return {q, r};
}

Poly Poly::div_exact(const Poly& divisor) const {
    auto [q, r] = divrem(divisor);
    if (!r.is_zero()) throw Error("polynomial division left a remainder");
    return q;
}

Poly Poly::derivative() const {
    Poly out(field_);
    if (degree() < 1) return out;
    out.c_.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        out.c_.push_back(c_[i].scaled(Rational(static_cast<long>(i))));
    out.normalize();
    return out;
}

Poly Poly::monic() const {
    if (is_zero()) throw Error("cannot normalize the zero polynomial");
    return scaled(leading().inverse());
}

FieldElement Poly::eval(const FieldElement& a) const {
    TowerPtr work = a.tower();
    FieldElement pt = a;
    if (work != field_) {
        if (work->has_prefix(field_)) {
            // evaluate in the larger tower
        } else if (field_->has_prefix(work)) {
            work = field_;
            pt = a.embedded(field_);
        } else {
            throw TowerMismatch("evaluation point lives in an unrelated tower");
        }
    }
    FieldElement acc = work->zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * pt + (it->tower() == work ? *it : it->embedded(work));
    return acc;
}

Poly Poly::embedded(const TowerPtr& deeper) const {
    Poly out(deeper);
    out.c_.reserve(c_.size());
    for (const auto& c : c_) out.c_.push_back(c.embedded(deeper));
    return out;
}

Poly Poly::conjugated(int lvl) const {
    Poly out(field_);
    out.c_.reserve(c_.size());
    for (const auto& c : c_) out.c_.push_back(c.conjugated(lvl));
    out.normalize();
    return out;
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.field_ != b.field_) throw TowerMismatch();
    return a.c_ == b.c_;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        if (c_[k].is_zero()) continue;
        std::string cs = c_[k].str();
        bool neg = false;
        if (cs.size() > 1 && cs[0] == '-' && cs.find(" + ") == std::string::npos &&
            cs.find(" - ") == std::string::npos) {
            neg = true;
            cs = cs.substr(1);
        }
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        const bool composite = cs.find(' ') != std::string::npos;
        if (k == 0) {
            os << (composite ? "(" + cs + ")" : cs);
            continue;
        }
        if (cs != "1") os << (composite ? "(" + cs + ")" : cs) << "*";
        os << var;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

Poly poly_gcd(const Poly& p, const Poly& q) {
    if (p.field() != q.field()) throw TowerMismatch();
    if (p.is_zero() && q.is_zero()) throw Error("gcd of two zero polynomials");
    Poly a = p, b = q;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        Poly r = a.divrem(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

SquarefreeDecomposition squarefree_decomposition(const Poly& p) {
    if (p.is_zero()) throw Error("squarefree decomposition of zero");
    SquarefreeDecomposition out{p.leading(), {}};
    if (p.degree() == 0) return out;
    Poly f = p.monic();

    // Yun's algorithm (characteristic zero).
    Poly a = poly_gcd(f, f.derivative());
    Poly b = f.div_exact(a);
    Poly c = f.derivative().div_exact(a);
    Poly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        Poly fi = d.is_zero() ? b.monic() : poly_gcd(b, d);
        if (fi.degree() > 0) out.parts.push_back({fi, i});
        b = b.div_exact(fi);
        c = d.div_exact(fi);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

TowerPtr extend_with(const TowerPtr& tower, const std::string& name, const Poly& minpoly) {
    if (minpoly.degree() < 2) throw InvalidExtension("minimal polynomial must have degree >= 2");
    if (!(minpoly.leading() == minpoly.field()->one()))
        throw InvalidExtension("minimal polynomial must be monic");
    std::vector<FieldElement> tail;
    tail.reserve(minpoly.degree());
    for (int i = 0; i < minpoly.degree(); ++i) tail.push_back(minpoly.coeff(i));
    return tower->extend(name, std::move(tail));
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

}  // namespace darboux
