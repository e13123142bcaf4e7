#include "thomas/poly.hpp"

#include <algorithm>
#include <cassert>

namespace thomas {

std::uint32_t Monomial::total_degree() const {
    std::uint32_t d = 0;
    for (auto& [v, e] : factors) d += e;
    return d;
}

std::uint32_t Monomial::degree_of(VarId v) const {
    for (auto& [w, e] : factors)
        if (w == v) return e;
    return 0;
}

Monomial Monomial::var(VarId v, std::uint32_t e) {
    Monomial m;
    if (e > 0) m.factors.push_back({v, e});
    return m;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial r;
    r.factors.reserve(factors.size() + o.factors.size());
    std::size_t i = 0, j = 0;
    while (i < factors.size() || j < o.factors.size()) {
        if (j == o.factors.size() || (i < factors.size() && factors[i].first < o.factors[j].first))
            r.factors.push_back(factors[i++]);
        else if (i == factors.size() || o.factors[j].first < factors[i].first)
            r.factors.push_back(o.factors[j++]);
        else {
            r.factors.push_back({factors[i].first, factors[i].second + o.factors[j].second});
            ++i, ++j;
        }
    }
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    std::size_t j = 0;
    for (auto& [v, e] : factors) {
        while (j < o.factors.size() && o.factors[j].first < v) ++j;
        if (j == o.factors.size() || o.factors[j].first != v || o.factors[j].second < e)
            return false;
    }
    return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
    Monomial r;
    std::size_t j = 0;
    for (auto& [v, e] : factors) {
        std::uint32_t sub = 0;
        while (j < o.factors.size() && o.factors[j].first < v) ++j;
        if (j < o.factors.size() && o.factors[j].first == v) sub = o.factors[j].second;
        assert(e >= sub);
        if (e > sub) r.factors.push_back({v, e - sub});
    }
    return r;
}

int monomial_cmp(const Monomial& a, const Monomial& b) {
    std::uint32_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    std::size_t i = 0, j = 0;
    while (i < a.factors.size() && j < b.factors.size()) {
        if (a.factors[i].first != b.factors[j].first)
            // smaller VarId with positive exponent wins the tie scan
            return a.factors[i].first < b.factors[j].first ? 1 : -1;
        if (a.factors[i].second != b.factors[j].second)
            return a.factors[i].second > b.factors[j].second ? 1 : -1;
        ++i, ++j;
    }
    if (i < a.factors.size()) return 1;
    if (j < b.factors.size()) return -1;
    return 0;
}

PermOrder PermOrder::ascending(const std::vector<VarId>& vars, std::size_t n_total) {
    std::vector<int> rank(n_total, -1);
    for (std::size_t i = 0; i < vars.size(); ++i) rank[vars[i]] = (int)i;
    return PermOrder(std::move(rank));
}

Poly Poly::constant(const Rational& c) {
    Poly p;
    if (c != 0) p.terms_.push_back({Monomial::one(), c});
    return p;
}

Poly Poly::var(VarId v, std::uint32_t e) {
    Poly p;
    p.terms_.push_back({Monomial::var(v, e), Rational(1)});
    return p;
}

bool Poly::is_coeff_element(const Context& ctx) const {
    for (auto& t : terms_)
        for (auto& [v, e] : t.mon.factors)
            if (!ctx.is_coeff(v)) return false;
    return true;
}

bool Poly::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.empty());
}

Rational Poly::rational_value() const {
    assert(is_rational());
    return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size()) {
            r.terms_.push_back(terms_[i++]);
        } else if (i == terms_.size()) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            int c = monomial_cmp(terms_[i].mon, o.terms_[j].mon);
            if (c > 0) r.terms_.push_back(terms_[i++]);
            else if (c < 0) r.terms_.push_back(o.terms_[j++]);
            else {
                Rational s = terms_[i].coeff + o.terms_[j].coeff;
                if (s != 0) r.terms_.push_back({terms_[i].mon, s});
                ++i, ++j;
            }
        }
    }
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::map<Monomial, Rational, bool (*)(const Monomial&, const Monomial&)> acc(
        [](const Monomial& a, const Monomial& b) { return monomial_cmp(a, b) > 0; });
    for (auto& ta : terms_)
        for (auto& tb : o.terms_) {
            Monomial m = ta.mon.times(tb.mon);
            auto [it, fresh] = acc.emplace(std::move(m), ta.coeff * tb.coeff);
            if (!fresh) it->second += ta.coeff * tb.coeff;
        }
    Poly r;
    for (auto& [m, c] : acc)
        if (c != 0) r.terms_.push_back({m, c});
    return r;
}

Poly Poly::times(const Rational& c) const {
    if (c == 0) return Poly();
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

Poly Poly::times_mon(const Monomial& m) const {
    Poly r = *this;
    for (auto& t : r.terms_) t.mon = t.mon.times(m);
    // multiplying by a fixed monomial preserves the relative canonical order
    return r;
}

Poly Poly::pow(std::uint32_t e) const {
    Poly r = Poly::constant(Rational(1));
    Poly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = (e >>= 1) ? b * b : b;
    }
    return r;
}

bool Poly::operator==(const Poly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].coeff != o.terms_[i].coeff || !(terms_[i].mon == o.terms_[i].mon))
            return false;
    return true;
}

std::vector<VarId> Poly::vars() const {
    std::set<VarId> s;
    for (auto& t : terms_)
        for (auto& [v, e] : t.mon.factors) s.insert(v);
    return std::vector<VarId>(s.begin(), s.end());
}

bool Poly::contains(VarId v) const {
    for (auto& t : terms_)
        if (t.mon.degree_of(v) > 0) return true;
    return false;
}

std::optional<VarId> Poly::leader(const Context& ctx, const VarOrder& ord) const {
    std::optional<VarId> best;
    for (auto& t : terms_)
        for (auto& [v, e] : t.mon.factors) {
            if (ctx.is_coeff(v)) continue;
            if (!best || ord.less(*best, v)) best = v;
        }
    return best;
}

std::optional<VarId> Poly::top_var_by_id() const {
    std::optional<VarId> best;
    for (auto& t : terms_)
        for (auto& [v, e] : t.mon.factors)
            if (!best || v > *best) best = v;
    return best;
}

int Poly::degree(VarId v) const {
    int d = 0;
    for (auto& t : terms_) d = std::max(d, (int)t.mon.degree_of(v));
    return d;
}

Poly Poly::coeff_of(VarId v, int deg) const {
    Poly r;
    for (auto& t : terms_)
        if ((int)t.mon.degree_of(v) == deg)
            r.add_term(t.mon.divided_by(Monomial::var(v, deg)), t.coeff);
    return r;
}

std::vector<Poly> Poly::coeffs_in(VarId v) const {
    std::vector<Poly> cs((std::size_t)degree(v) + 1);
    for (auto& t : terms_) {
        std::uint32_t d = t.mon.degree_of(v);
        cs[d].add_term(t.mon.divided_by(Monomial::var(v, d)), t.coeff);
    }
    return cs;
}

Poly Poly::derivative(VarId v) const {
    Poly r;
    for (auto& t : terms_) {
        std::uint32_t d = t.mon.degree_of(v);
        if (d == 0) continue;
        Monomial m = t.mon.divided_by(Monomial::var(v, 1));
        r.add_term(m, t.coeff * (long)d);
    }
    return r;
}

std::optional<Poly> Poly::divide_exact(const Poly& num, const Poly& den) {
    if (den.is_zero()) return std::nullopt;
    Poly r = num, q;
    const Term& dl = den.terms_.front();
    while (!r.is_zero()) {
        const Term& rl = r.terms_.front();
        if (!dl.mon.divides(rl.mon)) return std::nullopt;
        Poly t;
        t.terms_.push_back({rl.mon.divided_by(dl.mon), rl.coeff / dl.coeff});
        q = q + t;
        r = r - t * den;
    }
    return q;
}

Rational Poly::rational_content() const {
    if (terms_.empty()) return Rational(1);
    mpz_class num_gcd = 0, den_lcm = 1;
    for (auto& t : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
    }
    Rational c = make_rational(num_gcd, den_lcm);
    if (terms_.front().coeff < 0) c = -c;
    return c;
}

Poly Poly::unit_normalized() const {
    if (terms_.empty()) return *this;
    return times(Rational(1) / rational_content());
}

std::complex<double> Poly::eval(const std::map<VarId, std::complex<double>>& point) const {
    std::complex<double> s = 0;
    for (auto& t : terms_) {
        std::complex<double> m = t.coeff.get_d();
        for (auto& [v, e] : t.mon.factors) {
            auto it = point.find(v);
            std::complex<double> base = it == point.end() ? std::complex<double>(0) : it->second;
            for (std::uint32_t k = 0; k < e; ++k) m *= base;
        }
        s += m;
    }
    return s;
}

std::optional<Rational> Poly::eval_exact(const std::map<VarId, Rational>& point) const {
    Rational s = 0;
    for (auto& t : terms_) {
        Rational m = t.coeff;
        for (auto& [v, e] : t.mon.factors) {
            auto it = point.find(v);
            if (it == point.end()) return std::nullopt;
            for (std::uint32_t k = 0; k < e; ++k) m *= it->second;
        }
        s += m;
    }
    return s;
}

int Poly::compare(const Poly& a, const Poly& b) {
    std::size_t n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = monomial_cmp(a.terms_[i].mon, b.terms_[i].mon);
        if (c != 0) return c;
        int s = cmp(a.terms_[i].coeff, b.terms_[i].coeff);
        if (s != 0) return s;
    }
    if (a.terms_.size() != b.terms_.size())
        return a.terms_.size() < b.terms_.size() ? -1 : 1;
    return 0;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& mm) {
        return monomial_cmp(t.mon, mm) > 0;
    });
    if (it != terms_.end() && it->mon == m) {
        it->coeff += c;
        if (it->coeff == 0) terms_.erase(it);
    } else {
        terms_.insert(it, Term{m, c});
    }
}

} // namespace thomas
