#include "hopfkiss/hyper.hpp"

#include <string>

namespace hopfkiss {
namespace {

void check_level(int level) {
    if (level < 0 || level > kMaxLevel) {
        throw InputError("Cayley-Dickson level out of range: " + std::to_string(level));
    }
}

void check_same_level(const Hyper& x, const Hyper& y) {
    if (x.level() != y.level()) {
        throw InputError("Cayley-Dickson level mismatch: " + std::to_string(x.level()) + " vs " +
                         std::to_string(y.level()));
    }
}

std::vector<ExactScalar> mul_rec(std::span<const ExactScalar> x, std::span<const ExactScalar> y);

std::vector<ExactScalar> conj_rec(std::span<const ExactScalar> x) {
    std::vector<ExactScalar> out(x.begin(), x.end());
    for (std::size_t i = 1; i < out.size(); ++i) out[i] = -out[i];
    return out;
}

void add_into(std::vector<ExactScalar>& acc, const std::vector<ExactScalar>& v, bool negate) {
    for (std::size_t i = 0; i < acc.size(); ++i) {
        if (negate) {
            acc[i] -= v[i];
        } else {
            acc[i] += v[i];
        }
    }
}

std::vector<ExactScalar> mul_rec(std::span<const ExactScalar> x, std::span<const ExactScalar> y) {
    if (x.size() == 1) return {x[0] * y[0]};
    const std::size_t h = x.size() / 2;
    const auto a = x.first(h);
    const auto b = x.subspan(h);
    const auto c = y.first(h);
    const auto d = y.subspan(h);

    // (ac - d b*, a* d + c b)
    std::vector<ExactScalar> lo = mul_rec(a, c);
    add_into(lo, mul_rec(d, conj_rec(b)), true);
    std::vector<ExactScalar> hi = mul_rec(conj_rec(a), d);
    add_into(hi, mul_rec(c, b), false);

    lo.insert(lo.end(), std::make_move_iterator(hi.begin()), std::make_move_iterator(hi.end()));
    return lo;
}

}  // namespace

Hyper::Hyper(int level) : level_(level) {
    check_level(level);
    coords_.assign(std::size_t{1} << level, ExactScalar());
}

Hyper::Hyper(int level, std::vector<ExactScalar> coords) : level_(level), coords_(std::move(coords)) {
    check_level(level);
    if (coords_.size() != (std::size_t{1} << level)) {
        throw InputError("level-" + std::to_string(level) + " element needs " +
                         std::to_string(1 << level) + " coordinates, got " +
                         std::to_string(coords_.size()));
    }
}

Hyper Hyper::basis(int level, int index) {
    check_level(level);
    if (index < 0 || index >= (1 << level)) {
        throw InputError("basis index " + std::to_string(index) + " out of range for level " +
                         std::to_string(level));
    }
    Hyper e(level);
    e.coords_[static_cast<std::size_t>(index)] = ExactScalar(1);
    return e;
}

Hyper Hyper::from_real(int level, ExactScalar value) {
    Hyper x(level);
    x.coords_[0] = std::move(value);
    return x;
}

bool Hyper::is_zero() const {
    for (const auto& c : coords_) {
        if (!c.is_zero()) return false;
    }
    return true;
}

std::pair<Hyper, Hyper> Hyper::halves() const {
    if (level_ == 0) throw InputError("level-0 element has no halves");
    const auto h = coords_.size() / 2;
    return {Hyper(level_ - 1, {coords_.begin(), coords_.begin() + static_cast<long>(h)}),
            Hyper(level_ - 1, {coords_.begin() + static_cast<long>(h), coords_.end()})};
}

Hyper Hyper::join(const Hyper& lo, const Hyper& hi) {
    check_same_level(lo, hi);
    std::vector<ExactScalar> c = lo.coords_;
    c.insert(c.end(), hi.coords_.begin(), hi.coords_.end());
    return Hyper(lo.level_ + 1, std::move(c));
}

Hyper Hyper::operator-() const {
    Hyper r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
}

Hyper& Hyper::operator+=(const Hyper& o) {
    check_same_level(*this, o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

Hyper& Hyper::operator-=(const Hyper& o) {
    check_same_level(*this, o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

Hyper& Hyper::operator*=(const ExactScalar& s) {
    for (auto& c : coords_) c *= s;
    return *this;
}

Hyper& Hyper::operator/=(const ExactScalar& s) {
    if (s.is_zero()) throw DomainError("division of Cayley-Dickson element by zero");
    return *this *= s.inverse();
}

Hyper operator*(const Hyper& x, const Hyper& y) {
    check_same_level(x, y);
    return Hyper(x.level(), mul_rec(x.coords(), y.coords()));
}

std::string Hyper::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i != 0) out += ", ";
        out += coords_[i].to_string();
    }
    return out + ")";
}

Hyper cd_mul(const Hyper& x, const Hyper& y) { return x * y; }

Hyper cd_conj(const Hyper& x) {
    return Hyper(x.level(), conj_rec(x.coords()));
}

ExactScalar cd_norm2(const Hyper& x) { return cd_dot(x, x); }

ExactScalar cd_dot(const Hyper& x, const Hyper& y) {
    check_same_level(x, y);
    ExactScalar acc;
    for (std::size_t i = 0; i < x.dim(); ++i) acc += x[i] * y[i];
    return acc;
}

Hyper cd_inv(const Hyper& x) {
    if (x.level() > 3) throw DomainError("sedenions are not a division algebra; no inverse");
    if (x.is_zero()) throw DomainError("inverse of zero");
    return cd_conj(x) / cd_norm2(x);
}

Hyper basis_element(int level, int index) { return Hyper::basis(level, index); }

std::optional<std::pair<Hyper, Hyper>> find_zero_divisor(int level) {
    check_level(level);
    const int n = 1 << level;
    std::vector<Hyper> candidates;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int s : {1, -1}) {
                candidates.push_back(Hyper::basis(level, i) + Hyper::basis(level, j) * ExactScalar(s));
            }
        }
    }
    for (const auto& x : candidates) {
        for (const auto& y : candidates) {
            if ((x * y).is_zero()) return std::make_pair(x, y);
        }
    }
    return std::nullopt;
}

}  // namespace hopfkiss
