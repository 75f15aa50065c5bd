#ifndef QCIKIT_FIELD_HPP
#define QCIKIT_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

namespace qcikit {

using Rational = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A field element. Interpreted by the owning Field: a residue in [0, p)
/// for prime fields, an exact rational otherwise.
using Scalar = std::variant<std::int64_t, Rational>;

enum class FieldKind { rationals, prime };

/// Exact coefficient field: the rationals, or GF(p) with p prime, p < 2^31.
class Field {
public:
    static Field rationals() { return Field(FieldKind::rationals, 0); }
    static Field gf(std::int64_t p);

    /// Parses "QQ" or "GF(p)" / "GFp".
    static Field parse(const std::string& text);

    FieldKind kind() const { return kind_; }
    std::int64_t characteristic() const { return p_; }
    bool operator==(const Field& other) const { return kind_ == other.kind_ && p_ == other.p_; }
    bool operator!=(const Field& other) const { return !(*this == other); }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(std::int64_t n) const;
    /// den must be invertible; over GF(p) this rejects e.g. 1/p.
    Scalar from_fraction(std::int64_t num, std::int64_t den) const;

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

    bool is_zero(const Scalar& a) const;
    bool is_one(const Scalar& a) const;
    bool equal(const Scalar& a, const Scalar& b) const;

    std::string str(const Scalar& a) const;
    std::string name() const;

private:
    Field(FieldKind kind, std::int64_t p) : kind_(kind), p_(p) {}

    FieldKind kind_;
    std::int64_t p_;
};

}  // namespace qcikit

#endif
