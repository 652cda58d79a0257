#include "pdd/intpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pdd {

bool IntPoly::GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = 0, db = 0;
    for (unsigned e : a) da += e;
    for (unsigned e : b) db += e;
    if (da != db) return da < db;
    // same total degree: lexicographic in variable order
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

IntPoly IntPoly::zero(std::vector<std::string> vars) {
    return IntPoly(std::move(vars));
}

IntPoly IntPoly::constant(std::vector<std::string> vars, const mpz_class& c) {
    IntPoly p(std::move(vars));
    p.add_term(Exponents(p.vars_.size(), 0), c);
    return p;
}

IntPoly IntPoly::variable(const std::vector<std::string>& vars, const std::string& name) {
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw std::invalid_argument("variable not in set: " + name);
    IntPoly p(vars);
    Exponents e(vars.size(), 0);
    e[static_cast<std::size_t>(it - vars.begin())] = 1;
    p.add_term(e, 1);
    return p;
}

IntPoly IntPoly::linear(const std::vector<std::string>& vars,
                        const std::vector<mpz_class>& coeffs, const mpz_class& c0) {
    if (coeffs.size() != vars.size())
        throw std::invalid_argument("linear: coefficient count != variable count");
    IntPoly p(vars);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        Exponents e(vars.size(), 0);
        e[i] = 1;
        p.add_term(e, coeffs[i]);
    }
    p.add_term(Exponents(vars.size(), 0), c0);
    return p;
}

long IntPoly::total_degree() const {
    if (terms_.empty()) return -1;
    // grlex max is the last term
    const auto& e = terms_.rbegin()->first;
    long d = 0;
    for (unsigned x : e) d += x;
    return d;
}

void IntPoly::add_term(const Exponents& e, const mpz_class& c) {
    if (e.size() != vars_.size())
        throw std::invalid_argument("exponent vector length != variable count");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void IntPoly::require_same_vars(const IntPoly& q) const {
    if (vars_ != q.vars_)
        throw std::invalid_argument("variable-set mismatch");
}

IntPoly IntPoly::operator-() const {
    IntPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& q) {
    require_same_vars(q);
    for (const auto& [e, c] : q.terms_) add_term(e, c);
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& q) {
    require_same_vars(q);
    for (const auto& [e, c] : q.terms_) add_term(e, -c);
    return *this;
}

IntPoly operator*(const IntPoly& p, const IntPoly& q) {
    p.require_same_vars(q);
    IntPoly r(p.vars_);
    IntPoly::Exponents e(p.vars_.size());
    for (const auto& [e1, c1] : p.terms_) {
        for (const auto& [e2, c2] : q.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

IntPoly operator*(const IntPoly& p, const mpz_class& k) {
    IntPoly r(p.vars());
    if (k == 0) return r;
    for (const auto& [e, c] : p.terms()) r.add_term(e, c * k);
    return r;
}

IntPoly IntPoly::pow(unsigned n) const {
    IntPoly r = constant(vars_, 1);
    for (unsigned i = 0; i < n; ++i) r = r * *this;
    return r;
}

mpz_class IntPoly::content() const {
    mpz_class g = 0;
    for (const auto& [e, c] : terms_) {
        mpz_class a = abs(c);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    mpz_class g = content();
    if (g <= 1) return *this;
    IntPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c / g);
    return r;
}

SignCensus IntPoly::sign_census() const {
    SignCensus sc;
    sc.zero_poly = terms_.empty();
    for (const auto& [e, c] : terms_) {
        if (c > 0) ++sc.n_positive;
        else ++sc.n_negative;
    }
    return sc;
}

mpq_class IntPoly::eval(const std::map<std::string, mpq_class>& point) const {
    std::vector<mpq_class> vals(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = point.find(vars_[i]);
        if (it == point.end())
            throw std::invalid_argument("eval: no value for variable " + vars_[i]);
        vals[i] = it->second;
    }
    mpq_class acc = 0;
    for (const auto& [e, c] : terms_) {
        mpq_class t(c);
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) t *= vals[i];
        acc += t;
    }
    return acc;
}

IntPoly IntPoly::substitute(const std::map<std::string, IntPoly>& images) const {
    std::vector<const IntPoly*> img(vars_.size());
    const std::vector<std::string>* target = nullptr;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = images.find(vars_[i]);
        if (it == images.end())
            throw std::invalid_argument("substitute: no image for variable " + vars_[i]);
        img[i] = &it->second;
        if (!target) target = &it->second.vars();
        else if (*target != it->second.vars())
            throw std::invalid_argument("substitute: images disagree on variable set");
    }
    if (!target)  // no variables: constant polynomial, keep it over its own set
        return *this;
    IntPoly acc = IntPoly::zero(*target);
    for (const auto& [e, c] : terms_) {
        IntPoly t = IntPoly::constant(*target, c);
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) t = t * *img[i];
        acc += t;
    }
    return acc;
}

std::optional<IntPoly> IntPoly::divide_exact(const IntPoly& d, const IntPoly& p) {
    d.require_same_vars(p);
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    IntPoly q(p.vars_);
    if (p.is_zero()) return q;

    const auto& dlead = *d.terms_.rbegin();
    IntPoly rem = p;
    Exponents me(p.vars_.size());
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms_.rbegin();
        bool mono_ok = true;
        for (std::size_t i = 0; i < me.size(); ++i) {
            if (rlead.first[i] < dlead.first[i]) { mono_ok = false; break; }
            me[i] = rlead.first[i] - dlead.first[i];
        }
        if (!mono_ok) return std::nullopt;
        mpz_class qc, remc;
        mpz_tdiv_qr(qc.get_mpz_t(), remc.get_mpz_t(),
                    rlead.second.get_mpz_t(), dlead.second.get_mpz_t());
        if (remc != 0) return std::nullopt;
        q.add_term(me, qc);
        // rem -= (qc * me) * d
        for (const auto& [e, c] : d.terms_) {
            Exponents ee(e.size());
            for (std::size_t i = 0; i < e.size(); ++i) ee[i] = e[i] + me[i];
            rem.add_term(ee, -c * qc);
        }
    }
    if (d * q != p) return std::nullopt;  // exactness double-check
    return q;
}

std::string IntPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        mpz_class a = abs(c);
        os << a.get_str();
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << "*" << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

} // namespace pdd
