#include "commalg/scalar.hpp"

#include <charconv>
#include <limits>

#include "commalg/error.hpp"

namespace commalg {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::InvalidField: return "InvalidField";
        case ErrorKind::InvalidParams: return "InvalidParams";
        case ErrorKind::UnknownCoefficientKey: return "UnknownCoefficientKey";
        case ErrorKind::EmptySystem: return "EmptySystem";
        case ErrorKind::NotGenerating: return "NotGenerating";
        case ErrorKind::NotASubalgebra: return "NotASubalgebra";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::SamplingExhausted: return "SamplingExhausted";
        case ErrorKind::NotLocalForm: return "NotLocalForm";
        case ErrorKind::NotNilpotent: return "NotNilpotent";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

namespace {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1U) result = result * base % p;
        base = base * base % p;
        exp >>= 1U;
    }
    return result;
}

std::uint64_t reduce_mpz(const mpz_class& value, std::uint64_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
    return r.get_ui();
}

}  // namespace

Field Field::prime(std::uint64_t p) {
    if (p > std::numeric_limits<std::uint32_t>::max() || !is_prime(p)) {
        throw Error(ErrorKind::InvalidField, "modulus " + std::to_string(p) + " is not a prime below 2^32");
    }
    return Field(p);
}

Field Field::parse(std::string_view text) {
    if (text == "rational" || text == "q" || text == "Q") return rational();
    constexpr std::string_view prefix = "gf:";
    if (text.substr(0, prefix.size()) == prefix) {
        auto digits = text.substr(prefix.size());
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty()) return prime(p);
    }
    throw Error(ErrorKind::InvalidField, "unrecognised field '" + std::string(text) + "' (expected rational or gf:<p>)");
}

std::string Field::to_string() const {
    return is_rational() ? std::string("rational") : "gf:" + std::to_string(modulus_);
}

Scalar::Scalar(Field field, long value) : field_(field) {
    if (field.is_rational()) {
        value_ = mpq_class(value);
    } else {
        auto p = static_cast<long long>(field.modulus());
        auto r = static_cast<long long>(value) % p;
        if (r < 0) r += p;
        value_ = static_cast<std::uint64_t>(r);
    }
}

Scalar::Scalar(Field field, const mpq_class& value) : field_(field) {
    if (field.is_rational()) {
        mpq_class q = value;
        q.canonicalize();
        value_ = std::move(q);
        return;
    }
    auto p = field.modulus();
    auto den = reduce_mpz(value.get_den(), p);
    if (den == 0) {
        throw Error(ErrorKind::DivisionByZero, "denominator vanishes in " + field.to_string());
    }
    auto num = reduce_mpz(value.get_num(), p);
    value_ = num * pow_mod(den, p - 2, p) % p;
}

Scalar Scalar::parse(Field field, std::string_view text) {
    mpq_class q;
    std::string s(text);
    if (s.empty() || q.set_str(s, 10) != 0) {
        throw Error(ErrorKind::ParseError, "bad scalar literal '" + s + "'");
    }
    if (q.get_den() == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + s + "'");
    q.canonicalize();
    return {field, q};
}

bool Scalar::is_zero() const noexcept {
    if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
    return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const noexcept {
    if (const auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
    return std::get<std::uint64_t>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
    if (!field_.is_rational()) throw Error(ErrorKind::FieldMismatch, "scalar is not rational");
    return std::get<mpq_class>(value_);
}

std::uint64_t Scalar::residue() const {
    if (field_.is_rational()) throw Error(ErrorKind::FieldMismatch, "scalar is not a residue");
    return std::get<std::uint64_t>(value_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    Scalar out = *this;
    if (field_.is_rational()) {
        auto& q = std::get<mpq_class>(out.value_);
        mpq_inv(q.get_mpq_t(), q.get_mpq_t());
    } else {
        auto p = field_.modulus();
        out.value_ = pow_mod(std::get<std::uint64_t>(value_), p - 2, p);
    }
    return out;
}

std::string Scalar::to_string() const {
    if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
    return std::to_string(std::get<std::uint64_t>(value_));
}

void Scalar::require_same_field(const Scalar& rhs) const {
    if (field_ != rhs.field_) {
        throw Error(ErrorKind::FieldMismatch, "mixed fields " + field_.to_string() + " and " + rhs.field_.to_string());
    }
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    require_same_field(rhs);
    if (auto* q = std::get_if<mpq_class>(&value_)) {
        *q += std::get<mpq_class>(rhs.value_);
    } else {
        auto& r = std::get<std::uint64_t>(value_);
        r = (r + std::get<std::uint64_t>(rhs.value_)) % field_.modulus();
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    require_same_field(rhs);
    if (auto* q = std::get_if<mpq_class>(&value_)) {
        *q -= std::get<mpq_class>(rhs.value_);
    } else {
        auto p = field_.modulus();
        auto& r = std::get<std::uint64_t>(value_);
        r = (r + p - std::get<std::uint64_t>(rhs.value_)) % p;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    require_same_field(rhs);
    if (auto* q = std::get_if<mpq_class>(&value_)) {
        *q *= std::get<mpq_class>(rhs.value_);
    } else {
        auto& r = std::get<std::uint64_t>(value_);
        r = r * std::get<std::uint64_t>(rhs.value_) % field_.modulus();
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    require_same_field(rhs);
    return *this *= rhs.inverse();
}

Scalar& Scalar::sub_mul(const Scalar& a, const Scalar& b) {
    require_same_field(a);
    require_same_field(b);
    if (auto* q = std::get_if<mpq_class>(&value_)) {
        thread_local mpq_class tmp;
        mpq_mul(tmp.get_mpq_t(), std::get<mpq_class>(a.value_).get_mpq_t(), std::get<mpq_class>(b.value_).get_mpq_t());
        *q -= tmp;
    } else {
        auto p = field_.modulus();
        auto prod = std::get<std::uint64_t>(a.value_) * std::get<std::uint64_t>(b.value_) % p;
        auto& r = std::get<std::uint64_t>(value_);
        r = (r + p - prod) % p;
    }
    return *this;
}

Scalar& Scalar::add_mul(const Scalar& a, const Scalar& b) {
    require_same_field(a);
    require_same_field(b);
    if (auto* q = std::get_if<mpq_class>(&value_)) {
        thread_local mpq_class tmp;
        mpq_mul(tmp.get_mpq_t(), std::get<mpq_class>(a.value_).get_mpq_t(), std::get<mpq_class>(b.value_).get_mpq_t());
        *q += tmp;
    } else {
        auto p = field_.modulus();
        auto prod = std::get<std::uint64_t>(a.value_) * std::get<std::uint64_t>(b.value_) % p;
        auto& r = std::get<std::uint64_t>(value_);
        r = (r + prod) % p;
    }
    return *this;
}

Scalar Scalar::operator-() const {
    Scalar out = zero(field_);
    out -= *this;
    return out;
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
    return lhs.field_ == rhs.field_ && lhs.value_ == rhs.value_;
}

}  // namespace commalg
