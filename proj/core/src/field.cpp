#include "leibniz/field.hpp"

#include <cctype>

namespace leibniz {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return (a * b) % m;  // safe: operands < 2^31
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) acc = mulmod_u64(acc, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return acc;
}

}  // namespace

// Deterministic Miller-Rabin; the bases {2, 3, 5, 7} decide primality for
// all n < 3'215'031'751 > 2^31.
bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t small : {2u, 3u, 5u, 7u}) {
        if (n == small) return true;
        if (n % small == 0) return false;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw ValidationError("zero denominator");
    if (den < 0) return BigRational(-num, -den);
    return BigRational(num, den);
}

FieldSpec FieldSpec::prime_field(std::uint32_t p) {
    if (p >= (1u << 31))
        throw ParseError("prime field modulus must be < 2^31, got " + std::to_string(p));
    if (!is_prime_u32(p))
        throw ParseError("prime field modulus must be prime, got " + std::to_string(p));
    return FieldSpec{p};
}

std::uint32_t FieldSpec::prime() const {
    if (p_ == 0) throw FieldMismatchError("rationals have no modulus");
    return p_;
}

std::string FieldSpec::to_string() const {
    return p_ == 0 ? std::string("Q") : "GF(" + std::to_string(p_) + ")";
}

Scalar Scalar::zero(const FieldSpec& f) {
    Scalar s;
    s.p_ = f.characteristic();
    return s;
}

Scalar Scalar::one(const FieldSpec& f) { return of(f, 1); }

Scalar Scalar::of(const FieldSpec& f, long long value) {
    Scalar s;
    s.p_ = f.characteristic();
    if (s.p_ == 0) {
        s.q_ = BigRational(value);
    } else {
        long long r = value % static_cast<long long>(s.p_);
        if (r < 0) r += s.p_;
        s.r_ = static_cast<std::uint32_t>(r);
    }
    return s;
}

Scalar Scalar::of(const FieldSpec& f, const BigInt& value) {
    Scalar s;
    s.p_ = f.characteristic();
    if (s.p_ == 0) {
        s.q_ = BigRational(value);
    } else {
        BigInt r = value % s.p_;
        if (r < 0) r += s.p_;
        s.r_ = r.convert_to<std::uint32_t>();
    }
    return s;
}

Scalar Scalar::rational(const BigRational& q) {
    Scalar s;
    s.q_ = q;
    return s;
}

Scalar Scalar::residue(std::uint32_t p, std::uint64_t value) {
    Scalar s;
    s.p_ = p;
    s.r_ = static_cast<std::uint32_t>(value % p);
    return s;
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
    auto is_integer = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            if (!is_integer(text)) throw ParseError("malformed scalar '" + text + "'");
            return of(f, BigInt(text));
        }
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (!is_integer(num) || !is_integer(den))
            throw ParseError("malformed scalar '" + text + "'");
        BigInt n(num), d(den);
        if (d == 0) throw ParseError("zero denominator in scalar '" + text + "'");
        if (f.is_rational()) return rational(make_rational(n, d));
        return of(f, n) / of(f, d);
    } catch (const std::exception& e) {
        throw ParseError(std::string("cannot parse scalar '") + text + "': " + e.what());
    }
}

FieldSpec Scalar::field() const {
    return p_ == 0 ? FieldSpec::rationals() : FieldSpec::prime_field(p_);
}

bool Scalar::is_zero() const { return p_ == 0 ? q_.is_zero() : r_ == 0; }

bool Scalar::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

const BigRational& Scalar::rational_value() const {
    if (p_ != 0) throw FieldMismatchError("scalar is not rational");
    return q_;
}

std::uint32_t Scalar::residue_value() const {
    if (p_ == 0) throw FieldMismatchError("scalar is not a residue");
    return r_;
}

void Scalar::check_same_field(const Scalar& rhs) const {
    if (p_ != rhs.p_)
        throw FieldMismatchError("scalar field mismatch: " + field().to_string() + " vs " +
                                 rhs.field().to_string());
}

Scalar Scalar::operator-() const {
    Scalar s(*this);
    if (p_ == 0)
        s.q_ = -q_;
    else if (r_ != 0)
        s.r_ = p_ - r_;
    return s;
}

Scalar Scalar::operator+(const Scalar& rhs) const {
    Scalar s(*this);
    s += rhs;
    return s;
}

Scalar Scalar::operator-(const Scalar& rhs) const {
    Scalar s(*this);
    s -= rhs;
    return s;
}

Scalar Scalar::operator*(const Scalar& rhs) const {
    Scalar s(*this);
    s *= rhs;
    return s;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    check_same_field(rhs);
    if (p_ == 0) {
        q_ += rhs.q_;
    } else {
        std::uint64_t v = static_cast<std::uint64_t>(r_) + rhs.r_;
        if (v >= p_) v -= p_;
        r_ = static_cast<std::uint32_t>(v);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    check_same_field(rhs);
    if (p_ == 0) {
        q_ -= rhs.q_;
    } else {
        std::uint64_t v = static_cast<std::uint64_t>(r_) + p_ - rhs.r_;
        if (v >= p_) v -= p_;
        r_ = static_cast<std::uint32_t>(v);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    check_same_field(rhs);
    if (p_ == 0)
        q_ *= rhs.q_;
    else
        r_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(r_) * rhs.r_) % p_);
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw ValidationError("division by zero scalar");
    Scalar s(*this);
    if (p_ == 0) {
        s.q_ = 1 / q_;
    } else {
        // Fermat inverse; p is prime.
        s.r_ = static_cast<std::uint32_t>(powmod_u64(r_, p_ - 2, p_));
    }
    return s;
}

Scalar Scalar::operator/(const Scalar& rhs) const {
    check_same_field(rhs);
    return *this * rhs.inverse();
}

bool Scalar::operator==(const Scalar& rhs) const {
    if (p_ != rhs.p_) return false;
    return p_ == 0 ? q_ == rhs.q_ : r_ == rhs.r_;
}

std::string Scalar::to_string() const {
    if (p_ != 0) return std::to_string(r_);
    const BigInt num = boost::multiprecision::numerator(q_);
    const BigInt den = boost::multiprecision::denominator(q_);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Scalar factorial_scalar(const FieldSpec& f, unsigned n) {
    if (f.is_prime_field() && n >= f.prime())
        throw ValidationError("factorial " + std::to_string(n) + " vanishes in characteristic " +
                              std::to_string(f.prime()));
    Scalar acc = Scalar::one(f);
    for (unsigned k = 2; k <= n; ++k) acc *= Scalar::of(f, k);
    return acc;
}

Scalar binomial_scalar(const FieldSpec& f, unsigned n, unsigned k) {
    if (k > n) return Scalar::zero(f);
    BigInt value = 1;
    for (unsigned i = 0; i < k; ++i) {
        value *= (n - i);
        value /= (i + 1);
    }
    return Scalar::of(f, value);
}

}  // namespace leibniz
