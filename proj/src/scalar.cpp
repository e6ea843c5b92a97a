#include "orbitkit/scalar.hpp"

#include <ostream>

namespace orbitkit {

namespace {

constexpr std::uint64_t kMaxPrime = (1ull << 31) - 1;

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::uint64_t mod_reduce(std::int64_t v, std::uint64_t p) {
    std::int64_t m = v % static_cast<std::int64_t>(p);
    if (m < 0) m += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(m);
}

// Extended Euclid; requires gcd(a, p) = 1.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

void require_same_field(const Scalar& a, const Scalar& b) {
    if (!(a.field() == b.field())) {
        throw FieldMismatchError("cannot combine scalars from " + a.field().name() +
                                 " and " + b.field().name());
    }
}

} // namespace

Field Field::prime(std::uint64_t p) {
    if (p == 2) {
        throw BadFieldError("characteristic 2 is excluded: the construction needs 1/2 "
                            "in the ground field");
    }
    if (p > kMaxPrime) {
        throw BadFieldError("prime too large (need p < 2^31)");
    }
    if (!is_prime_u64(p)) {
        throw BadFieldError("not a prime: " + std::to_string(p));
    }
    return Field(p);
}

Scalar Field::zero() const { return from_int(0); }

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t n) const {
    Scalar s;
    s.field_ = *this;
    if (is_rationals()) {
        s.rat_ = mpq_class(static_cast<long>(n));
    } else {
        s.res_ = mod_reduce(n, p_);
    }
    return s;
}

Scalar Field::parse(std::string_view text) const {
    std::string str(text);
    if (str.empty()) throw ParseError("empty scalar");
    try {
        if (is_rationals()) {
            mpz_class num, den(1);
            auto slash = str.find('/');
            if (slash == std::string::npos) {
                num = mpz_class(str);
            } else {
                num = mpz_class(str.substr(0, slash));
                den = mpz_class(str.substr(slash + 1));
            }
            if (den == 0) throw ParseError("zero denominator in \"" + str + "\"");
            mpq_class q(num, den);
            q.canonicalize();
            return Scalar::rational(std::move(q));
        }
        mpz_class z(str);
        Scalar s;
        s.field_ = *this;
        s.res_ = mpz_fdiv_ui(z.get_mpz_t(), p_);
        return s;
    } catch (const std::invalid_argument&) {
        throw ParseError("not a scalar: \"" + str + "\"");
    }
}

std::string Field::name() const {
    return is_rationals() ? "Q" : "Fp:" + std::to_string(p_);
}

Field Field::parse_name(std::string_view text) {
    if (text == "Q" || text == "q") return rationals();
    if (text.rfind("Fp:", 0) == 0 || text.rfind("fp:", 0) == 0) {
        std::string digits(text.substr(3));
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
            throw ParseError("bad field name: \"" + std::string(text) + "\"");
        }
        try {
            return prime(std::stoull(digits));
        } catch (const std::out_of_range&) {
            throw BadFieldError("prime too large (need p < 2^31)");
        }
    }
    throw ParseError("bad field name: \"" + std::string(text) +
                     "\" (expected \"Q\" or \"Fp:<odd prime>\")");
}

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return rational(std::move(q));
}

Scalar Scalar::rational(mpq_class value) {
    Scalar s;
    s.rat_ = std::move(value);
    return s;
}

Scalar Scalar::residue(std::uint64_t p, std::int64_t value) {
    return Field::prime(p).from_int(value);
}

bool Scalar::is_zero() const {
    return field_.is_rationals() ? sgn(rat_) == 0 : res_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rationals() ? rat_ == 1 : res_ == 1;
}

Scalar Scalar::invert() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero in " + field_.name());
    Scalar s;
    s.field_ = field_;
    if (field_.is_rationals()) {
        s.rat_ = 1 / rat_;
    } else {
        s.res_ = mod_inverse(res_, field_.characteristic());
    }
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s;
    s.field_ = field_;
    if (field_.is_rationals()) {
        s.rat_ = -rat_;
    } else {
        std::uint64_t p = field_.characteristic();
        s.res_ = res_ == 0 ? 0 : p - res_;
    }
    return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    Scalar s;
    s.field_ = a.field_;
    if (a.field_.is_rationals()) {
        s.rat_ = a.rat_ + b.rat_;
    } else {
        s.res_ = (a.res_ + b.res_) % a.field_.characteristic();
    }
    return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    return a + (-b);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    Scalar s;
    s.field_ = a.field_;
    if (a.field_.is_rationals()) {
        s.rat_ = a.rat_ * b.rat_;
    } else {
        // p < 2^31 keeps the product below 2^62.
        s.res_ = (a.res_ * b.res_) % a.field_.characteristic();
    }
    return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    require_same_field(a, b);
    return a * b.invert();
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (!(a.field_ == b.field_)) return false;
    return a.field_.is_rationals() ? a.rat_ == b.rat_ : a.res_ == b.res_;
}

std::string Scalar::to_string() const {
    return field_.is_rationals() ? rat_.get_str() : std::to_string(res_);
}

std::optional<Scalar> sqrt_witness(const Scalar& a) {
    const Field& f = a.field();
    if (f.is_prime_field()) {
        std::uint64_t p = f.characteristic();
        std::uint64_t v = a.residue_value();
        if (v == 0) return f.zero();
        // The two roots of a square are r and p-r; the smaller is <= (p-1)/2.
        for (std::uint64_t r = 1; r <= (p - 1) / 2; ++r) {
            if ((r * r) % p == v) return f.from_int(static_cast<std::int64_t>(r));
        }
        return std::nullopt;
    }
    const mpq_class& q = a.rational_value();
    int sign = sgn(q);
    if (sign < 0) return std::nullopt;
    if (sign == 0) return f.zero();
    const mpz_class& num = q.get_num();
    const mpz_class& den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
        return std::nullopt;
    }
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Scalar::rational(mpq_class(rn, rd));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.to_string();
}

} // namespace orbitkit
