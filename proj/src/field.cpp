#include "qcikit/field.hpp"

namespace qcikit {

namespace {

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::int64_t mod_reduce(std::int64_t n, std::int64_t p) {
    std::int64_t r = n % p;
    return r < 0 ? r + p : r;
}

// p < 2^31, so products of two residues fit in int64.
std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p) { return (a * b) % p; }

std::int64_t mod_pow(std::int64_t a, std::int64_t e, std::int64_t p) {
    std::int64_t r = 1;
    while (e > 0) {
        if (e & 1) r = mod_mul(r, a, p);
        a = mod_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

const Rational& rat(const Scalar& a) { return std::get<Rational>(a); }
std::int64_t res(const Scalar& a) { return std::get<std::int64_t>(a); }

}  // namespace

Field Field::gf(std::int64_t p) {
    if (p >= (std::int64_t(1) << 31)) throw Error("prime field characteristic must be < 2^31");
    if (!is_prime(p)) throw Error("prime field characteristic must be prime, got " + std::to_string(p));
    return Field(FieldKind::prime, p);
}

Field Field::parse(const std::string& text) {
    if (text == "QQ" || text == "Q") return rationals();
    std::string body;
    if (text.rfind("GF(", 0) == 0 && text.back() == ')')
        body = text.substr(3, text.size() - 4);
    else if (text.rfind("GF", 0) == 0)
        body = text.substr(2);
    else
        throw Error("unrecognized field \"" + text + "\" (expected QQ or GF(p))");
    try {
        return gf(std::stoll(body));
    } catch (const std::invalid_argument&) {
        throw Error("unrecognized field \"" + text + "\" (expected QQ or GF(p))");
    }
}

Scalar Field::zero() const {
    if (kind_ == FieldKind::prime) return std::int64_t(0);
    return Rational(0);
}

Scalar Field::one() const {
    if (kind_ == FieldKind::prime) return std::int64_t(1);
    return Rational(1);
}

Scalar Field::from_int(std::int64_t n) const {
    if (kind_ == FieldKind::prime) return mod_reduce(n, p_);
    return Rational(n);
}

Scalar Field::from_fraction(std::int64_t num, std::int64_t den) const {
    if (den == 0) throw Error("zero denominator");
    if (kind_ == FieldKind::prime) {
        if (den % p_ == 0)
            throw Error("denominator " + std::to_string(den) + " is not invertible in GF(" +
                        std::to_string(p_) + ")");
        return mod_mul(mod_reduce(num, p_), mod_pow(mod_reduce(den, p_), p_ - 2, p_), p_);
    }
    return Rational(num, den);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
    if (kind_ == FieldKind::prime) return mod_reduce(res(a) + res(b), p_);
    return Rational(rat(a) + rat(b));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
    if (kind_ == FieldKind::prime) return mod_reduce(res(a) - res(b), p_);
    return Rational(rat(a) - rat(b));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
    if (kind_ == FieldKind::prime) return mod_mul(res(a), res(b), p_);
    return Rational(rat(a) * rat(b));
}

Scalar Field::neg(const Scalar& a) const {
    if (kind_ == FieldKind::prime) return mod_reduce(-res(a), p_);
    return Rational(-rat(a));
}

Scalar Field::inv(const Scalar& a) const {
    if (is_zero(a)) throw Error("division by zero");
    if (kind_ == FieldKind::prime) return mod_pow(res(a), p_ - 2, p_);
    return Rational(1 / rat(a));
}

bool Field::is_zero(const Scalar& a) const {
    if (kind_ == FieldKind::prime) return res(a) == 0;
    return rat(a) == 0;
}

bool Field::is_one(const Scalar& a) const {
    if (kind_ == FieldKind::prime) return res(a) == 1;
    return rat(a) == 1;
}

bool Field::equal(const Scalar& a, const Scalar& b) const {
    if (kind_ == FieldKind::prime) return res(a) == res(b);
    return rat(a) == rat(b);
}

std::string Field::str(const Scalar& a) const {
    if (kind_ == FieldKind::prime) return std::to_string(res(a));
    return rat(a).str();
}

std::string Field::name() const {
    if (kind_ == FieldKind::prime) return "GF(" + std::to_string(p_) + ")";
    return "QQ";
}

}  // namespace qcikit
