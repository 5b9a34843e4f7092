#include "hopfkiss/exact_scalar.hpp"

#include <cctype>
#include <cmath>
#include <functional>

namespace hopfkiss {
namespace {

constexpr std::string_view kSqrt2Suffix = "\xE2\x88\x9A" "2";  // "√2"

std::size_t hash_mpz(const mpz_class& z, std::size_t seed) {
    const auto* raw = z.get_mpz_t();
    seed ^= std::hash<long>{}(raw->_mp_size) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    const long limbs = raw->_mp_size < 0 ? -raw->_mp_size : raw->_mp_size;
    for (long i = 0; i < limbs; ++i) {
        seed ^= std::hash<mp_limb_t>{}(raw->_mp_d[i]) + 0x9e3779b97f4a7c15ULL + (seed << 6) +
                (seed >> 2);
    }
    return seed;
}

std::optional<mpz_class> integer_sqrt(const mpz_class& z) {
    if (sgn(z) < 0) return std::nullopt;
    if (mpz_perfect_square_p(z.get_mpz_t()) == 0) return std::nullopt;
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), z.get_mpz_t());
    return root;
}

std::string fraction_text(const mpq_class& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Consumes an unsigned decimal integer without leading zeros ("0" allowed).
bool take_digits(std::string_view& s, std::string& out) {
    std::size_t n = 0;
    while (n < s.size() && std::isdigit(static_cast<unsigned char>(s[n])) != 0) ++n;
    if (n == 0) return false;
    if (n > 1 && s[0] == '0') return false;
    out.assign(s.substr(0, n));
    s.remove_prefix(n);
    return true;
}

// "p/q" with p unsigned; rejects anything not in lowest terms.
mpq_class take_fraction(std::string_view& s, std::string_view whole) {
    std::string num;
    std::string den;
    if (!take_digits(s, num) || s.empty() || s[0] != '/') {
        throw InputError("malformed exact scalar: '" + std::string(whole) + "'");
    }
    s.remove_prefix(1);
    if (!take_digits(s, den)) {
        throw InputError("malformed exact scalar: '" + std::string(whole) + "'");
    }
    mpz_class n(num);
    mpz_class d(den);
    if (d == 0) throw InputError("zero denominator in '" + std::string(whole) + "'");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (g != 1) {
        throw InputError("exact scalar not in lowest terms: '" + std::string(whole) + "'");
    }
    return mpq_class(n, d);
}

}  // namespace

ExactScalar::ExactScalar(mpq_class rat, mpq_class irr) : rat_(std::move(rat)), irr_(std::move(irr)) {
    rat_.canonicalize();
    irr_.canonicalize();
}

ExactScalar ExactScalar::fraction(long num, long den) {
    if (den == 0) throw DomainError("zero denominator");
    return ExactScalar(mpq_class(num, den));
}

ExactScalar ExactScalar::sqrt2(long num, long den) {
    if (den == 0) throw DomainError("zero denominator");
    return ExactScalar(mpq_class(0), mpq_class(num, den));
}

int ExactScalar::sign() const {
    const int a = sgn(rat_);
    const int b = sgn(irr_);
    if (a >= 0 && b >= 0) return (a > 0 || b > 0) ? 1 : 0;
    if (a <= 0 && b <= 0) return -1;
    // Opposite signs: compare rat^2 against 2 irr^2.
    const int c = cmp(rat_ * rat_, 2 * irr_ * irr_);
    return a > 0 ? c : -c;
}

ExactScalar ExactScalar::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    const mpq_class n = field_norm();
    return ExactScalar(rat_ / n, -irr_ / n);
}

std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
    if (sgn(q) < 0) return std::nullopt;
    auto num = integer_sqrt(q.get_num());
    auto den = integer_sqrt(q.get_den());
    if (!num || !den) return std::nullopt;
    return mpq_class(*num, *den);
}

std::optional<ExactScalar> ExactScalar::try_sqrt() const {
    const int s = sign();
    if (s < 0) return std::nullopt;
    if (s == 0) return ExactScalar();

    // (r + s sqrt2)^2 = (r^2 + 2 s^2) + 2 r s sqrt2
    if (sgn(irr_) == 0) {
        if (auto r = rational_sqrt(rat_)) return ExactScalar(*r);
        if (auto h = rational_sqrt(rat_ / 2)) return ExactScalar(0, *h);
        return std::nullopt;
    }
    const auto disc = rational_sqrt(field_norm());
    if (!disc) return std::nullopt;
    for (int branch : {1, -1}) {
        const mpq_class u = (rat_ + branch * *disc) / 2;
        const auto r = rational_sqrt(u);
        if (!r || sgn(*r) == 0) continue;
        ExactScalar root(*r, irr_ / (2 * *r));
        if (root * root != *this) continue;
        return root.sign() < 0 ? -root : root;
    }
    return std::nullopt;
}

double ExactScalar::to_double() const {
    return rat_.get_d() + irr_.get_d() * std::sqrt(2.0);
}

std::string ExactScalar::to_string() const {
    std::string out = fraction_text(rat_);
    if (sgn(irr_) != 0) {
        out += sgn(irr_) > 0 ? "+" : "-";
        out += fraction_text(abs(irr_));
        out += kSqrt2Suffix;
    }
    return out;
}

ExactScalar ExactScalar::parse(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && s[0] == '-') {
        negative = true;
        s.remove_prefix(1);
    }
    mpq_class rat = take_fraction(s, text);
    if (negative) {
        if (sgn(rat) == 0) throw InputError("negative zero in '" + std::string(text) + "'");
        rat = -rat;
    }
    mpq_class irr = 0;
    if (!s.empty()) {
        const char op = s[0];
        if (op != '+' && op != '-') {
            throw InputError("malformed exact scalar: '" + std::string(text) + "'");
        }
        s.remove_prefix(1);
        irr = take_fraction(s, text);
        if (sgn(irr) == 0) {
            throw InputError("zero irrational part must be omitted: '" + std::string(text) + "'");
        }
        if (s != kSqrt2Suffix) {
            throw InputError("malformed exact scalar: '" + std::string(text) + "'");
        }
        s.remove_prefix(kSqrt2Suffix.size());
        if (op == '-') irr = -irr;
    }
    if (!s.empty()) throw InputError("trailing characters in '" + std::string(text) + "'");
    return ExactScalar(rat, irr);
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
    rat_ += o.rat_;
    irr_ += o.irr_;
    return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
    rat_ -= o.rat_;
    irr_ -= o.irr_;
    return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
    mpq_class r = rat_ * o.rat_ + 2 * irr_ * o.irr_;
    mpq_class i = rat_ * o.irr_ + irr_ * o.rat_;
    rat_ = std::move(r);
    irr_ = std::move(i);
    return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
    return *this *= o.inverse();
}

std::strong_ordering operator<=>(const ExactScalar& a, const ExactScalar& b) {
    if (a == b) return std::strong_ordering::equal;
    return (a - b).sign() < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::size_t ExactScalar::hash() const {
    std::size_t seed = 0;
    seed = hash_mpz(rat_.get_num(), seed);
    seed = hash_mpz(rat_.get_den(), seed);
    seed = hash_mpz(irr_.get_num(), seed);
    seed = hash_mpz(irr_.get_den(), seed);
    return seed;
}

}  // namespace hopfkiss
