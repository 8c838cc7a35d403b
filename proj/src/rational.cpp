#include "rci/rational.hpp"

#include "rci/error.hpp"

#include <cctype>

namespace rci {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotDominant: return "NotDominant";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::UnboundedPolytope: return "UnboundedPolytope";
    case ErrorKind::ZeroForm: return "ZeroForm";
    case ErrorKind::NotAmple: return "NotAmple";
    case ErrorKind::RetriesExhausted: return "RetriesExhausted";
    case ErrorKind::NonIntegerDegree: return "NonIntegerDegree";
    }
    return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        fail(ErrorKind::InvalidInput, "malformed rational '" + std::string(text) + "'");
    Integer p{std::string(num)};
    Integer q{std::string(den)};
    if (q == 0) fail(ErrorKind::InvalidInput, "zero denominator in '" + std::string(text) + "'");
    Rational r(p, q);
    return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_string(const Integer& z) { return z.str(); }

bool is_integer(const Rational& q) { return denominator(q) == 1; }

Integer to_integer(const Rational& q) {
    if (!is_integer(q)) fail(ErrorKind::InvalidInput, "expected an integer, got " + to_string(q));
    return numerator(q);
}

Integer factorial(unsigned n) {
    Integer r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Integer r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

std::strong_ordering compare(const Rational& a, const Rational& b) {
    int c = a.compare(b);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace rci
