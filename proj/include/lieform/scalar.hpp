#pragma once

#include "lieform/rational.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace lieform {

/// Interned polynomial indeterminates. Every parameter p comes paired with a
/// formal conjugate conj(p); "pi" is self-conjugate. Ids are assigned in
/// first-use order, so a fixed input always yields the same ids.
class Params {
  public:
    using Id = uint32_t;

    static Id intern(const std::string& name) {
        if (name.empty()) throw error("parameter name empty");
        if (name.substr(0, 5) == "conj(") throw error("declare base parameter, not " + name);
        auto& self = instance();
        std::lock_guard<std::mutex> lk(self.mu_);
        auto it = self.by_name_.find(name);
        if (it != self.by_name_.end()) return it->second;
        bool selfconj = (name == "pi");
        Id base = static_cast<Id>(self.info_.size());
        self.info_.push_back({name, base});
        self.by_name_[name] = base;
        if (!selfconj) {
            Id cj = static_cast<Id>(self.info_.size());
            self.info_.push_back({"conj(" + name + ")", base});
            self.info_[base].conj = cj;
            self.by_name_[self.info_[cj].name] = cj;
        }
        return base;
    }

    static Id conj_of(Id id) {
        auto& self = instance();
        std::lock_guard<std::mutex> lk(self.mu_);
        return self.info_[id].conj;
    }

    static std::string name(Id id) {
        auto& self = instance();
        std::lock_guard<std::mutex> lk(self.mu_);
        return self.info_[id].name;
    }

    static bool is_conj_var(Id id) {
        auto& self = instance();
        std::lock_guard<std::mutex> lk(self.mu_);
        return self.info_[id].conj < id;
    }

    /// Id if the name (base or conj(...)) is known, else no value.
    static std::pair<bool, Id> lookup(const std::string& name) {
        auto& self = instance();
        std::lock_guard<std::mutex> lk(self.mu_);
        auto it = self.by_name_.find(name);
        if (it == self.by_name_.end()) return {false, 0};
        return {true, it->second};
    }

  private:
    struct Info {
        std::string name;
        Id conj;
    };
    static Params& instance() {
        static Params p;
        return p;
    }
    std::mutex mu_;
    std::vector<Info> info_;
    std::map<std::string, Id> by_name_;
};

/// Sorted (var, exponent) list; the empty monomial is 1.
using Monomial = std::vector<std::pair<Params::Id, uint32_t>>;

inline Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) r.push_back(a[i++]);
        else if (i == a.size() || b[j].first < a[i].first) r.push_back(b[j++]);
        else {
            r.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i, ++j;
        }
    }
    return r;
}

/// Exact scalar: multivariate polynomial over the Gaussian rationals in the
/// interned parameters. Canonical representation (sorted monomials, no zero
/// coefficients), so equality is map equality.
class Scalar {
  public:
    Scalar() = default;
    Scalar(long long n) { if (n != 0) terms_[{}] = GaussRat(n); }
    Scalar(const Rat& r) { if (!r.is_zero()) terms_[{}] = GaussRat(r); }
    Scalar(const GaussRat& c) { if (!c.is_zero()) terms_[{}] = c; }

    static Scalar i() { return Scalar(GaussRat::i()); }
    static Scalar param(const std::string& name) {
        Scalar s;
        s.terms_[{{Params::intern(name), 1}}] = GaussRat(1);
        return s;
    }
    static Scalar pi() { return param("pi"); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }

    GaussRat constant_value() const {
        if (terms_.empty()) return GaussRat(0);
        if (!is_constant()) throw error("Scalar is not constant: " + str());
        return terms_.begin()->second;
    }

    const std::map<Monomial, GaussRat>& terms() const { return terms_; }

    Scalar operator-() const {
        Scalar r;
        for (auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        Scalar r = a;
        for (auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        Scalar r = a;
        for (auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        Scalar r;
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) r.add_term(monomial_mul(ma, mb), ca * cb);
        return r;
    }
    Scalar& operator+=(const Scalar& o) { for (auto& [m, c] : o.terms_) add_term(m, c); return *this; }
    Scalar& operator-=(const Scalar& o) { for (auto& [m, c] : o.terms_) add_term(m, -c); return *this; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    /// Division by a nonzero constant only; the ring has no general division.
    friend Scalar operator/(const Scalar& a, const GaussRat& c) {
        if (c.is_zero()) throw error("Scalar: division by zero");
        Scalar r;
        for (auto& [m, k] : a.terms_) r.terms_[m] = k / c;
        return r;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.terms_ < b.terms_; }

    Scalar pow(uint32_t n) const {
        Scalar r(1);
        for (uint32_t k = 0; k < n; ++k) r *= *this;
        return r;
    }

    /// Ring involution: conjugates coefficients and swaps each parameter with
    /// its formal conjugate (pi is fixed).
    Scalar conj() const {
        Scalar r;
        for (auto& [m, c] : terms_) {
            Monomial cm;
            cm.reserve(m.size());
            for (auto& [v, e] : m) cm.emplace_back(Params::conj_of(v), e);
            std::sort(cm.begin(), cm.end());
            r.add_term(cm, c.conj());
        }
        return r;
    }

    std::vector<Params::Id> parameters() const {
        std::vector<Params::Id> vs;
        for (auto& [m, c] : terms_)
            for (auto& [v, e] : m) vs.push_back(v);
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        return vs;
    }

    /// Substitutes values for the given variables; unlisted variables stay
    /// symbolic.
    Scalar substitute(const std::map<Params::Id, GaussRat>& vals) const {
        Scalar r;
        for (auto& [m, c] : terms_) {
            GaussRat coef = c;
            Monomial rest;
            for (auto& [v, e] : m) {
                auto it = vals.find(v);
                if (it == vals.end()) { rest.emplace_back(v, e); continue; }
                for (uint32_t k = 0; k < e; ++k) coef *= it->second;
            }
            r.add_term(rest, coef);
        }
        return r;
    }

    /// Formal partial derivative with respect to one indeterminate.
    Scalar derivative(Params::Id v) const {
        Scalar r;
        for (auto& [m, c] : terms_) {
            for (size_t k = 0; k < m.size(); ++k) {
                if (m[k].first != v) continue;
                Monomial dm = m;
                GaussRat coef = c * GaussRat(Rat((long long)m[k].second));
                if (dm[k].second == 1) dm.erase(dm.begin() + k);
                else dm[k].second -= 1;
                r.add_term(dm, coef);
            }
        }
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto& [m, c] : terms_) {
            std::string term = term_str(m, c, !first);
            if (!first) out += " ";
            out += term;
            first = false;
        }
        return out;
    }

  private:
    void add_term(const Monomial& m, const GaussRat& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) terms_.emplace(m, c);
        else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    static std::string term_str(const Monomial& m, const GaussRat& c, bool with_sign) {
        std::string vars;
        for (auto& [v, e] : m) {
            if (!vars.empty()) vars += "*";
            vars += Params::name(v);
            if (e > 1) vars += "^" + std::to_string(e);
        }
        GaussRat coef = c;
        std::string sign = with_sign ? "+ " : "";
        if (coef.im().is_zero() && coef.re().sign() < 0) {
            sign = with_sign ? "- " : "-";
            coef = -coef;
        } else if (coef.re().is_zero() && coef.im().sign() < 0) {
            sign = with_sign ? "- " : "-";
            coef = -coef;
        }
        if (vars.empty()) return sign + coef.str();
        if (coef.is_one()) return sign + vars;
        bool needs_paren = !coef.re().is_zero() && !coef.im().is_zero();
        std::string cs = coef.str();
        if (needs_paren) cs = "(" + cs + ")";
        return sign + cs + "*" + vars;
    }

    std::map<Monomial, GaussRat> terms_;
};

inline Scalar operator*(const GaussRat& c, const Scalar& s) { return Scalar(c) * s; }

/// Assignment of Gaussian-rational values to base parameters; conjugate
/// variables automatically receive the conjugate value.
class Assignment {
  public:
    Assignment& set(const std::string& base_name, const GaussRat& v) {
        auto id = Params::intern(base_name);
        if (Params::is_conj_var(id)) throw error("assign the base parameter, not " + base_name);
        vals_[id] = v;
        if (Params::conj_of(id) != id) vals_[Params::conj_of(id)] = v.conj();
        return *this;
    }

    const std::map<Params::Id, GaussRat>& values() const { return vals_; }

    /// Full evaluation; every parameter of s must be covered.
    GaussRat eval(const Scalar& s) const {
        Scalar r = s.substitute(vals_);
        if (!r.is_constant()) {
            std::string missing;
            for (auto v : r.parameters()) missing += (missing.empty() ? "" : ", ") + Params::name(v);
            throw error("evaluation is missing parameters: " + missing);
        }
        return r.constant_value();
    }

  private:
    std::map<Params::Id, GaussRat> vals_;
};

}  // namespace lieform
