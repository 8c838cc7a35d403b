#include "rci/upoly.hpp"

#include "rci/error.hpp"

#include <algorithm>
#include <utility>

namespace rci {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return UPoly(std::move(v));
}

void UPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(v));
}

Rational UPoly::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    require(!b.is_zero(), "polynomial division by zero");
    std::vector<Rational> rem = a.coeffs();
    const auto& d = b.coeffs();
    if (a.degree() < b.degree()) {
        q = {};
        r = a;
        return;
    }
    std::vector<Rational> quo(rem.size() - d.size() + 1);
    for (std::size_t k = quo.size(); k-- > 0;) {
        Rational f = rem[k + d.size() - 1] / d.back();
        quo[k] = f;
        if (f == 0) continue;
        for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= f * d[j];
    }
    q = UPoly(std::move(quo));
    r = UPoly(std::move(rem));
}

UPoly div_exact(const UPoly& a, const UPoly& b) {
    UPoly q, r;
    divmod(a, b, q, r);
    require(r.is_zero(), "inexact polynomial division");
    return q;
}

UPoly make_monic(const UPoly& a) {
    if (a.is_zero()) return a;
    std::vector<Rational> v = a.coeffs();
    Rational lc = v.back();
    for (auto& x : v) x /= lc;
    return UPoly(std::move(v));
}

UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

UPoly derivative(const UPoly& a) {
    if (a.degree() < 1) return {};
    std::vector<Rational> v(a.coeffs().size() - 1);
    for (std::size_t i = 1; i < a.coeffs().size(); ++i) v[i - 1] = a.coeffs()[i] * static_cast<long>(i);
    return UPoly(std::move(v));
}

UPoly strip_x_powers(const UPoly& a) {
    if (a.is_zero()) return a;
    const auto& c = a.coeffs();
    std::size_t k = 0;
    while (c[k] == 0) ++k;
    return UPoly(std::vector<Rational>(c.begin() + k, c.end()));
}

long distinct_root_count(const UPoly& a) {
    require(!a.is_zero(), "root count of the zero polynomial");
    if (a.degree() == 0) return 0;
    return div_exact(a, gcd(a, derivative(a))).degree();
}

}  // namespace rci
