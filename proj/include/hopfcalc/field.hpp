#ifndef HOPFCALC_FIELD_HPP
#define HOPFCALC_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace hopf {

/// Thrown on invalid input: dimension mismatches, field mismatches,
/// malformed files, unsupported parameters. Mathematical negatives
/// (NoSolution, NoAntipode, verdict "no") are values, never exceptions.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// The coefficient field: exactly Q (characteristic 0) or F_p for a prime p.
/// All scalars in one object share one FieldSpec.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(0); }
    static FieldSpec prime(std::uint64_t p);

    std::uint64_t characteristic() const { return char_; }
    bool is_rational() const { return char_ == 0; }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.char_ == b.char_;
    }
    friend bool operator!=(const FieldSpec& a, const FieldSpec& b) {
        return !(a == b);
    }

    std::string str() const;

private:
    explicit FieldSpec(std::uint64_t c) : char_(c) {}
    std::uint64_t char_;
};

/// One exact field element. Rationals are kept in lowest terms with a
/// positive denominator (mpq canonical form); residues in [0, p).
class Scalar {
public:
    Scalar() : field_(FieldSpec::rationals()) {}

    static Scalar zero(const FieldSpec& f) { return of_int(f, 0); }
    static Scalar one(const FieldSpec& f) { return of_int(f, 1); }
    static Scalar of_int(const FieldSpec& f, long v);
    static Scalar rational(mpq_class q);
    static Scalar residue(const FieldSpec& f, std::uint64_t r);
    /// Accepts "a", "-a" and "a/b" over Q; a canonical or non-canonical
    /// residue over F_p. Never a float.
    static Scalar parse(const FieldSpec& f, const std::string& tok);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const;

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Exact printable form: "3/2", "-1", or the residue "5".
    std::string str() const;

    /// Characteristic-0 accessors (throw over F_p and vice versa).
    const mpq_class& rat() const;
    std::uint64_t res() const;

private:
    void check_same_field(const Scalar& o) const;

    FieldSpec field_;
    mpq_class rat_;          // used when characteristic 0
    std::uint64_t res_ = 0;  // used when characteristic p
};

}  // namespace hopf

#endif
