#include "rci/forms.hpp"

#include "rci/error.hpp"

#include <optional>

namespace rci {

unsigned total_degree(const Monomial& m) {
    unsigned d = 0;
    for (auto e : m) d += e;
    return d;
}

namespace {

void enumerate(std::size_t s, unsigned k, std::size_t pos, Monomial& cur, std::vector<Monomial>& out) {
    if (pos + 1 == s) {
        cur[pos] = k;
        out.push_back(cur);
        return;
    }
    for (unsigned e = k + 1; e-- > 0;) {
        cur[pos] = e;
        enumerate(s, k - e, pos + 1, cur, out);
    }
}

void check_monomial(const Monomial& m, std::size_t s, unsigned degree) {
    require(m.size() == s, "monomial has the wrong number of symbols");
    require(total_degree(m) == degree, "monomial has the wrong total degree");
}

}  // namespace

std::vector<Monomial> monomials(std::size_t s, unsigned k) {
    std::vector<Monomial> out;
    if (s == 0) return out;
    Monomial cur(s, 0);
    enumerate(s, k, 0, cur, out);
    return out;
}

Integer monomial_factorial(const Monomial& alpha) {
    Integer r = 1;
    for (auto e : alpha) r *= factorial(e);
    return r;
}

Integer multinomial(const Monomial& alpha) { return factorial(total_degree(alpha)) / monomial_factorial(alpha); }

SymmetricForm::SymmetricForm(std::size_t generators, unsigned degree, const std::map<Monomial, Rational>& values)
    : s_(generators), n_(degree) {
    require(generators > 0, "a symmetric form needs at least one generator");
    for (const auto& [alpha, v] : values) {
        check_monomial(alpha, s_, n_);
        if (v != 0) values_.emplace(alpha, v);
    }
    if (values_.empty()) fail(ErrorKind::ZeroForm, "symmetric form is identically zero");
}

Rational SymmetricForm::value(const Monomial& alpha) const {
    auto it = values_.find(alpha);
    return it == values_.end() ? Rational(0) : it->second;
}

Rational SymmetricForm::diagonal(const Vector& x) const {
    require(x.size() == s_, "argument has the wrong number of coordinates");
    Rational total = 0;
    for (const auto& [alpha, v] : values_) {
        Rational term = Rational(multinomial(alpha)) * v;
        for (std::size_t i = 0; i < s_; ++i)
            for (unsigned e = 0; e < alpha[i]; ++e) term *= x[i];
        total += term;
    }
    return total;
}

HomogeneousForm::HomogeneousForm(std::size_t variables, unsigned degree, const std::map<Monomial, Rational>& coeffs)
    : s_(variables), d_(degree) {
    require(variables > 0, "a form needs at least one variable");
    for (const auto& [alpha, c] : coeffs) {
        check_monomial(alpha, s_, d_);
        if (c != 0) coeffs_.emplace(alpha, c);
    }
}

Rational HomogeneousForm::coeff(const Monomial& alpha) const {
    auto it = coeffs_.find(alpha);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational HomogeneousForm::operator()(const Vector& x) const {
    require(x.size() == s_, "argument has the wrong number of coordinates");
    Rational total = 0;
    for (const auto& [alpha, c] : coeffs_) {
        Rational term = c;
        for (std::size_t i = 0; i < s_; ++i)
            for (unsigned e = 0; e < alpha[i]; ++e) term *= x[i];
        total += term;
    }
    return total;
}

HomogeneousForm apply_operator(const DiffOperatorMonomial& op, const HomogeneousForm& p) {
    require(op.beta.size() == p.variables(), "operator and form have different numbers of variables");
    const unsigned order = total_degree(op.beta);
    if (order > p.degree()) return HomogeneousForm(p.variables(), 0, {});
    std::map<Monomial, Rational> out;
    for (const auto& [alpha, c] : p.coeffs()) {
        Monomial rest(alpha.size());
        Rational coeff = c;
        bool killed = false;
        for (std::size_t i = 0; i < alpha.size() && !killed; ++i) {
            if (alpha[i] < op.beta[i]) {
                killed = true;
                break;
            }
            rest[i] = alpha[i] - op.beta[i];
            // alpha_i! / (alpha_i - beta_i)!
            for (unsigned f = rest[i] + 1; f <= alpha[i]; ++f) coeff *= f;
        }
        if (!killed) out[rest] += coeff;
    }
    return HomogeneousForm(p.variables(), p.degree() - order, out);
}

SymmetricForm mixed_volume_tensor(const std::vector<VPolytope>& generators) {
    require(!generators.empty(), "at least one generator polytope is required");
    const std::size_t s = generators.size();
    const std::size_t n = generators.front().ambient_dim();
    for (const auto& g : generators) require(g.ambient_dim() == n, "generators in different dimensions");

    // vol(sum beta_i K_i) for every beta, with the sums built one summand at a time.
    std::map<Monomial, VPolytope> sums;
    std::map<Monomial, Rational> vols;
    auto sum_of = [&](auto&& self, const Monomial& beta) -> const VPolytope& {
        if (auto it = sums.find(beta); it != sums.end()) return it->second;
        std::size_t last = s;
        while (beta[last - 1] == 0) --last;
        Monomial prev = beta;
        --prev[last - 1];
        VPolytope p = total_degree(prev) == 0 ? generators[last - 1]
                                             : minkowski_sum(self(self, prev), generators[last - 1]);
        return sums.emplace(beta, std::move(p)).first->second;
    };
    auto vol_of = [&](const Monomial& beta) -> const Rational& {
        if (auto it = vols.find(beta); it != vols.end()) return it->second;
        return vols.emplace(beta, volume(sum_of(sum_of, beta))).first->second;
    };

    std::map<Monomial, Rational> values;
    for (const auto& alpha : monomials(s, static_cast<unsigned>(n))) {
        // n! V = sum over 0 != beta <= alpha of (-1)^{n-|beta|} prod C(alpha_i, beta_i) vol(sum beta_i K_i)
        Rational total = 0;
        Monomial beta(s, 0);
        while (true) {
            std::size_t i = 0;
            while (i < s && beta[i] == alpha[i]) beta[i++] = 0;
            if (i == s) break;
            ++beta[i];
            Integer weight = 1;
            for (std::size_t j = 0; j < s; ++j) weight *= binomial(alpha[j], beta[j]);
            Rational term = Rational(weight) * vol_of(beta);
            if ((n - total_degree(beta)) % 2) total -= term;
            else total += term;
        }
        values[alpha] = total;
    }
    return SymmetricForm(s, static_cast<unsigned>(n), values);
}

HomogeneousForm volume_polynomial(const SymmetricForm& f) {
    const Rational inv = Rational(1) / Rational(factorial(f.degree()));
    std::map<Monomial, Rational> coeffs;
    for (const auto& [alpha, v] : f.values()) coeffs[alpha] = inv * Rational(multinomial(alpha)) * v;
    return HomogeneousForm(f.generators(), f.degree(), coeffs);
}

}  // namespace rci
