#include "hopfcalc/field.hpp"

namespace hopf {

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % p);
}

// Extended Euclid; n must be nonzero mod p.
std::uint64_t inv_mod(std::uint64_t n, std::uint64_t p) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p);
    std::int64_t new_r = static_cast<std::int64_t>(n % p);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw Error("inv_mod: element not invertible");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (!is_prime_u64(p)) throw Error("FieldSpec: characteristic " + std::to_string(p) + " is not prime");
    if (p >= (std::uint64_t(1) << 31)) throw Error("FieldSpec: prime characteristic must fit in 31 bits");
    return FieldSpec(p);
}

std::string FieldSpec::str() const {
    return is_rational() ? std::string("rational") : "prime " + std::to_string(char_);
}

Scalar Scalar::of_int(const FieldSpec& f, long v) {
    Scalar s;
    s.field_ = f;
    if (f.is_rational()) {
        s.rat_ = mpq_class(v);
    } else {
        const std::int64_t p = static_cast<std::int64_t>(f.characteristic());
        std::int64_t r = v % p;
        if (r < 0) r += p;
        s.res_ = static_cast<std::uint64_t>(r);
    }
    return s;
}

Scalar Scalar::rational(mpq_class q) {
    Scalar s;
    s.field_ = FieldSpec::rationals();
    q.canonicalize();
    s.rat_ = std::move(q);
    return s;
}

Scalar Scalar::residue(const FieldSpec& f, std::uint64_t r) {
    if (f.is_rational()) throw Error("Scalar::residue: field has characteristic 0");
    Scalar s;
    s.field_ = f;
    s.res_ = r % f.characteristic();
    return s;
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& tok) {
    if (tok.empty()) throw Error("Scalar::parse: empty token");
    for (char c : tok) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
            throw Error("Scalar::parse: invalid character in '" + tok + "'");
    }
    if (f.is_rational()) {
        mpq_class q;
        if (q.set_str(tok, 10) != 0) throw Error("Scalar::parse: cannot parse '" + tok + "'");
        if (q.get_den() == 0) throw Error("Scalar::parse: zero denominator in '" + tok + "'");
        return rational(q);
    }
    if (tok.find('/') != std::string::npos)
        throw Error("Scalar::parse: fractions not allowed over a prime field: '" + tok + "'");
    mpz_class z;
    if (z.set_str(tok, 10) != 0) throw Error("Scalar::parse: cannot parse '" + tok + "'");
    const mpz_class p(static_cast<unsigned long>(f.characteristic()));
    mpz_class r = z % p;
    if (r < 0) r += p;
    return residue(f, r.get_ui());
}

bool Scalar::is_zero() const {
    return field_.is_rational() ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rational() ? rat_ == 1 : res_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (field_ != o.field_)
        throw Error("Scalar: mixed fields (" + field_.str() + " vs " + o.field_.str() + ")");
}

Scalar Scalar::operator-() const {
    Scalar s(*this);
    if (field_.is_rational()) {
        s.rat_ = -rat_;
    } else if (res_ != 0) {
        s.res_ = field_.characteristic() - res_;
    }
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same_field(o);
    if (field_.is_rational())
        rat_ += o.rat_;
    else
        res_ = (res_ + o.res_) % field_.characteristic();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same_field(o);
    if (field_.is_rational()) {
        rat_ -= o.rat_;
    } else {
        const std::uint64_t p = field_.characteristic();
        res_ = (res_ + p - o.res_) % p;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same_field(o);
    if (field_.is_rational())
        rat_ *= o.rat_;
    else
        res_ = mul_mod(res_, o.res_, field_.characteristic());
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    *this *= o.inverse();
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("Scalar: division by zero");
    Scalar s(*this);
    if (field_.is_rational())
        s.rat_ = 1 / rat_;
    else
        s.res_ = inv_mod(res_, field_.characteristic());
    return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
    a.check_same_field(b);
    return a.field_.is_rational() ? a.rat_ == b.rat_ : a.res_ == b.res_;
}

std::string Scalar::str() const {
    if (field_.is_rational()) return rat_.get_str();
    return std::to_string(res_);
}

const mpq_class& Scalar::rat() const {
    if (!field_.is_rational()) throw Error("Scalar::rat: not a rational");
    return rat_;
}

std::uint64_t Scalar::res() const {
    if (field_.is_rational()) throw Error("Scalar::res: not a residue");
    return res_;
}

}  // namespace hopf
