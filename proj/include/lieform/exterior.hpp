#pragma once

#include "lieform/scalar.hpp"

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace lieform {

using Mask = uint32_t;

inline int mask_degree(Mask m) { return std::popcount(m); }

/// Sign of moving all indices of b past those of a into one sorted block,
/// i.e. the Koszul sign of e^A ^ e^B for disjoint index sets.
inline int merge_sign(Mask a, Mask b) {
    int inversions = 0;
    while (b) {
        Mask lowest = b & (~b + 1);
        // indices of a strictly above this index of b
        inversions += std::popcount(a & ~(lowest | (lowest - 1)));
        b &= b - 1;
    }
    return (inversions & 1) ? -1 : 1;
}

inline std::vector<int> mask_indices(Mask m) {
    std::vector<int> idx;
    for (int i = 0; m; ++i, m >>= 1)
        if (m & 1) idx.push_back(i + 1);
    return idx;
}

/// Alternating form on an N-dimensional frame (N <= 16), stored on strictly
/// increasing index tuples encoded as bitmasks, with Scalar coefficients.
/// Supports inhomogeneous degree; zero coefficients are pruned, so equality
/// is structural equality.
class Form {
  public:
    Form() : dim_(0) {}
    explicit Form(int dim) : dim_(dim) {
        if (dim < 0 || dim > 16) throw error("Form: dimension out of range");
    }

    /// Basis covector e^k (1-based).
    static Form basis(int dim, int k) {
        Form f(dim);
        f.set_mask(Mask(1) << (k - 1), Scalar(1));
        return f;
    }

    /// Basis monomial e^{i1} ^ ... ^ e^{ip} from strictly increasing indices.
    static Form monomial(int dim, std::initializer_list<int> idx, Scalar c = Scalar(1)) {
        Form f(dim);
        Mask m = 0;
        int prev = 0;
        for (int i : idx) {
            if (i <= prev || i > dim) throw error("Form::monomial: bad index tuple");
            m |= Mask(1) << (i - 1);
            prev = i;
        }
        f.set_mask(m, std::move(c));
        return f;
    }

    static Form constant(int dim, Scalar c) {
        Form f(dim);
        f.set_mask(0, std::move(c));
        return f;
    }

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Mask, Scalar>& terms() const { return terms_; }

    /// True iff homogeneous of the given degree (the zero form is any degree).
    bool is_homogeneous(int p) const {
        for (auto& [m, c] : terms_)
            if (mask_degree(m) != p) return false;
        return true;
    }

    int max_degree() const {
        int d = 0;
        for (auto& [m, c] : terms_) d = std::max(d, mask_degree(m));
        return d;
    }

    Form degree_part(int p) const {
        Form r(dim_);
        for (auto& [m, c] : terms_)
            if (mask_degree(m) == p) r.terms_.emplace(m, c);
        return r;
    }

    void set_mask(Mask m, Scalar c) {
        if (c.is_zero()) terms_.erase(m);
        else terms_[m] = std::move(c);
    }

    void add_mask(Mask m, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) terms_.emplace(m, c);
        else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Scalar coeff(Mask m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Scalar() : it->second;
    }

    Scalar coeff(std::initializer_list<int> idx) const {
        Mask m = 0;
        for (int i : idx) m |= Mask(1) << (i - 1);
        return coeff(m);
    }

    Form operator-() const {
        Form r(dim_);
        for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend Form operator+(const Form& a, const Form& b) {
        a.check_same_dim(b);
        Form r = a;
        for (auto& [m, c] : b.terms_) r.add_mask(m, c);
        return r;
    }
    friend Form operator-(const Form& a, const Form& b) {
        a.check_same_dim(b);
        Form r = a;
        for (auto& [m, c] : b.terms_) r.add_mask(m, -c);
        return r;
    }
    Form& operator+=(const Form& o) { return *this = *this + o; }
    Form& operator-=(const Form& o) { return *this = *this - o; }

    friend Form operator*(const Scalar& s, const Form& f) {
        Form r(f.dim_);
        for (auto& [m, c] : f.terms_) r.add_mask(m, s * c);
        return r;
    }
    friend Form operator*(const GaussRat& s, const Form& f) { return Scalar(s) * f; }

    /// Graded-anticommutative product.
    friend Form wedge(const Form& a, const Form& b) {
        a.check_same_dim(b);
        Form r(a.dim_);
        for (auto& [ma, ca] : a.terms_) {
            for (auto& [mb, cb] : b.terms_) {
                if (ma & mb) continue;
                Scalar c = ca * cb;
                if (merge_sign(ma, mb) < 0) c = -c;
                r.add_mask(ma | mb, c);
            }
        }
        return r;
    }

    friend bool operator==(const Form& a, const Form& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

    /// Coefficient-wise conjugation (an involution distributing over wedge).
    Form conj() const {
        Form r(dim_);
        for (auto& [m, c] : terms_) r.terms_.emplace(m, c.conj());
        return r;
    }

    /// Contraction with the frame vector e_k: antiderivation of degree -1.
    Form interior(int k) const {
        Form r(dim_);
        Mask bit = Mask(1) << (k - 1);
        for (auto& [m, c] : terms_) {
            if (!(m & bit)) continue;
            int below = std::popcount(m & (bit - 1));
            Scalar v = (below & 1) ? -c : c;
            r.add_mask(m & ~bit, v);
        }
        return r;
    }

    /// Contraction with a vector given by frame components.
    Form interior(const std::vector<Scalar>& v) const {
        Form r(dim_);
        for (int k = 1; k <= dim_; ++k) {
            if (v[k - 1].is_zero()) continue;
            r += v[k - 1] * interior(k);
        }
        return r;
    }

    Form substitute(const std::map<Params::Id, GaussRat>& vals) const {
        Form r(dim_);
        for (auto& [m, c] : terms_) r.add_mask(m, c.substitute(vals));
        return r;
    }

    Form evaluate(const Assignment& a) const {
        Form r(dim_);
        for (auto& [m, c] : terms_) r.add_mask(m, Scalar(a.eval(c)));
        return r;
    }

    std::vector<Params::Id> parameters() const {
        std::vector<Params::Id> vs;
        for (auto& [m, c] : terms_) {
            auto p = c.parameters();
            vs.insert(vs.end(), p.begin(), p.end());
        }
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        return vs;
    }

    /// Rewrites the form through the substitution e^k -> images[k-1], which may
    /// live in a space of different dimension.
    Form map_basis(const std::vector<Form>& images, int new_dim) const {
        Form r(new_dim);
        for (auto& [m, c] : terms_) {
            Form prod = Form::constant(new_dim, Scalar(1));
            for (int i : mask_indices(m)) prod = wedge(prod, images[i - 1]);
            r += c * prod;
        }
        return r;
    }

    /// Value on a tuple of frame vectors (by 1-based indices), with the
    /// determinant pairing e^{i1..ip}(e_{i1},..,e_{ip}) = 1.
    Scalar on(const std::vector<int>& args) const {
        Mask m = 0;
        int sign = 1;
        for (int a : args) {
            Mask bit = Mask(1) << (a - 1);
            if (m & bit) return Scalar();
            sign *= (std::popcount(m & ~(bit | (bit - 1))) & 1) ? -1 : 1;
            m |= bit;
        }
        Scalar c = coeff(m);
        return sign < 0 ? -c : c;
    }

    std::string str(const std::string& letter = "e") const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto& [m, c] : terms_) {
            std::string mono;
            if (m != 0) {
                mono = letter;
                for (int i : mask_indices(m)) mono += std::to_string(i);
            }
            std::string cs;
            bool neg = false;
            if (c.is_constant()) {
                GaussRat v = c.constant_value();
                if (v.im().is_zero() && v.re().sign() < 0) { neg = true; v = -v; }
                else if (v.re().is_zero() && v.im().sign() < 0) { neg = true; v = -v; }
                if (v.is_one() && !mono.empty()) cs = "";
                else {
                    cs = v.str();
                    if (!v.re().is_zero() && !v.im().is_zero() && !mono.empty()) cs = "(" + cs + ")";
                }
            } else if (c.terms().size() == 1) {
                cs = c.str();
                if (!cs.empty() && cs[0] == '-') { neg = true; cs = cs.substr(1); }
            } else {
                cs = "(" + c.str() + ")";
            }
            std::string term = cs.empty() ? mono : (mono.empty() ? cs : cs + "*" + mono);
            if (first) out += (neg ? "-" : "") + term;
            else out += (neg ? " - " : " + ") + term;
            first = false;
        }
        return out;
    }

  private:
    void check_same_dim(const Form& o) const {
        if (dim_ != o.dim_) throw error("Form: dimension mismatch");
    }

    int dim_;
    std::map<Mask, Scalar> terms_;
};

inline Form wedge_pow(const Form& f, int k) {
    Form r = Form::constant(f.dim(), Scalar(1));
    for (int i = 0; i < k; ++i) r = wedge(r, f);
    return r;
}

}  // namespace lieform
