#include "parahiggs/rational.hpp"

#include "parahiggs/errors.hpp"

#include <cctype>

namespace parahiggs {

Rational::Rational(std::int64_t n) {
    value_ = mpq_class(static_cast<long>(n));
}

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw Error(ErrorKind::Schema, "zero denominator");
    value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    value_.canonicalize();
}

Rational::Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::string_view t = text;
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
    bool negative = false;
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) {
        negative = t.front() == '-';
        t.remove_prefix(1);
    }
    auto slash = t.find('/');
    std::string_view num = t.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : t.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw Error(ErrorKind::Schema, "not a rational: '" + std::string(text) + "'");
    mpz_class n{std::string(num)}, d{std::string(den)};
    if (d == 0) throw Error(ErrorKind::Schema, "zero denominator in '" + std::string(text) + "'");
    if (negative) n = -n;
    return Rational(mpq_class(n, d));
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::to_decimal(int places) const {
    if (places < 0) places = 0;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
    // Round half away from zero.
    mpq_class scaled = ::abs(value_) * scale;
    mpz_class twice = (2 * scaled.get_num() + scaled.get_den()) / (2 * scaled.get_den());
    std::string digits = twice.get_str();
    if (static_cast<int>(digits.size()) <= places)
        digits.insert(0, static_cast<size_t>(places) + 1 - digits.size(), '0');
    std::string out = value_ < 0 && twice != 0 ? "-" : "";
    out += digits.substr(0, digits.size() - static_cast<size_t>(places));
    if (places > 0) out += "." + digits.substr(digits.size() - static_cast<size_t>(places));
    return out;
}

mpz_class Rational::floor() const {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return r;
}

mpz_class Rational::ceil() const {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return r;
}

Rational Rational::frac() const {
    return Rational(mpq_class(value_ - mpq_class(floor())));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.value_ == 0) throw Error(ErrorKind::DimensionMismatch, "division by zero");
    value_ /= o.value_;
    return *this;
}

std::int64_t to_int64(const mpz_class& z) {
    if (!z.fits_slong_p()) throw Error(ErrorKind::TooLarge, "integer out of range: " + z.get_str());
    return z.get_si();
}

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ViolatedFlag: return "ViolatedFlag";
        case ErrorKind::WeightCollision: return "WeightCollision";
        case ErrorKind::OrientationError: return "OrientationError";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::SurfaceMismatch: return "SurfaceMismatch";
        case ErrorKind::UnboundedInterval: return "UnboundedInterval";
        case ErrorKind::NonGenericWeights: return "NonGenericWeights";
        case ErrorKind::NoIntegralSolution: return "NoIntegralSolution";
        case ErrorKind::Unsupported: return "Unsupported";
        case ErrorKind::Schema: return "Schema";
    }
    return "Unknown";
}

bool is_validation_error(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ViolatedFlag:
        case ErrorKind::WeightCollision:
        case ErrorKind::DimensionMismatch:
        case ErrorKind::SurfaceMismatch:
        case ErrorKind::Schema:
            return true;
        default:
            return false;
    }
}

}  // namespace parahiggs
