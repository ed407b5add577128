#pragma once

#include "lieform/lie_algebra.hpp"
#include "lieform/linalg.hpp"

#include <utility>
#include <vector>

namespace lieform {

/// Invariant forms written on a complex coframe: indices 1..n are the (1,0)
/// covectors z^1..z^n, indices n+1..2n their conjugates. The differential is
/// given on the (1,0) covectors and extended to the conjugates by the frame
/// conjugation. All bidegree calculus lives here.
class ComplexFrame {
  public:
    ComplexFrame() : n_(0) {}

    /// d_holo[j] = d z^{j+1}, a 2-form on the 2n complex covectors.
    ComplexFrame(int n, std::vector<Form> d_holo, std::string name = "")
        : n_(n), name_(std::move(name)) {
        if ((int)d_holo.size() != n) throw error("ComplexFrame: need d z^j for j = 1..n");
        std::vector<Form> d_all;
        for (auto& f : d_holo) {
            if (f.dim() != 2 * n) throw error("ComplexFrame: structure form dimension mismatch");
            d_all.push_back(f);
        }
        for (int j = 0; j < n; ++j) d_all.push_back(conj_form(n, d_holo[j]));
        alg_ = LieAlgebra(2 * n, std::move(d_all));
    }

    static ComplexFrame abelian(int n) {
        return ComplexFrame(n, std::vector<Form>(n, Form(2 * n)));
    }

    int n() const { return n_; }
    int real_dim() const { return 2 * n_; }
    const std::string& name() const { return name_; }
    const LieAlgebra& algebra() const { return alg_; }

    Form d(const Form& a) const { return alg_.d(a); }
    Form d_basis(int k) const { return alg_.d_basis(k); }

    /// Frame conjugation: swaps z^j with its conjugate covector and conjugates
    /// coefficients.
    static Form conj_form(int n, const Form& a) {
        if (a.dim() != 2 * n) throw error("conj_form: dimension mismatch");
        Form r(2 * n);
        for (auto& [m, c] : a.terms()) {
            // map index i -> i+n (i <= n) or i-n (i > n), then re-sort
            std::vector<int> mapped;
            for (int i : mask_indices(m)) mapped.push_back(i <= n ? i + n : i - n);
            int inv = 0;
            for (size_t x = 0; x < mapped.size(); ++x)
                for (size_t y = x + 1; y < mapped.size(); ++y)
                    if (mapped[x] > mapped[y]) ++inv;
            Mask nm = 0;
            for (int i : mapped) nm |= Mask(1) << (i - 1);
            r.add_mask(nm, (inv & 1) ? -c.conj() : c.conj());
        }
        return r;
    }

    Form conj(const Form& a) const { return conj_form(n_, a); }

    std::pair<int, int> bidegree_of_mask(Mask m) const {
        Mask lo = (Mask(1) << n_) - 1;
        return {std::popcount(m & lo), std::popcount(m & ~lo)};
    }

    /// Component of pure bidegree (p, q).
    Form part(const Form& a, int p, int q) const {
        Form r(2 * n_);
        for (auto& [m, c] : a.terms()) {
            auto [mp, mq] = bidegree_of_mask(m);
            if (mp == p && mq == q) r.add_mask(m, c);
        }
        return r;
    }

    /// All nonzero (p,q)-components.
    std::vector<std::pair<std::pair<int, int>, Form>> bidegree_split(const Form& a) const {
        std::map<std::pair<int, int>, Form> parts;
        for (auto& [m, c] : a.terms()) {
            auto pq = bidegree_of_mask(m);
            auto it = parts.find(pq);
            if (it == parts.end()) it = parts.emplace(pq, Form(2 * n_)).first;
            it->second.add_mask(m, c);
        }
        return {parts.begin(), parts.end()};
    }

    /// True iff d z^j has no (0,2)-component for every j; on failure returns
    /// the first witness (j, (0,2)-part).
    struct IntegrabilityReport {
        bool ok = true;
        int failing_index = 0;
        Form witness;
    };
    IntegrabilityReport check_integrable() const {
        for (int j = 1; j <= n_; ++j) {
            Form bad = part(alg_.d_basis(j), 0, 2);
            if (!bad.is_zero()) return {false, j, bad};
        }
        return {};
    }

    bool integrable() const { return check_integrable().ok; }

    /// del: the (p+1, q)-parts of d on each component. Requires integrability
    /// (otherwise d leaks outside (p+1,q) + (p,q+1)).
    Form del(const Form& a) const { return d_split(a).first; }
    Form delbar(const Form& a) const { return d_split(a).second; }

    std::pair<Form, Form> d_split(const Form& a) const {
        Form dp(2 * n_), dq(2 * n_);
        for (auto& [pq, comp] : bidegree_split(a)) {
            Form dc = alg_.d(comp);
            Form keep = part(dc, pq.first + 1, pq.second) + part(dc, pq.first, pq.second + 1);
            if (keep != dc)
                throw error("del/delbar: d is not of type (1,0)+(0,1); the complex structure "
                            "is not integrable");
            dp += part(dc, pq.first + 1, pq.second);
            dq += part(dc, pq.first, pq.second + 1);
        }
        return {dp, dq};
    }

    Form del_delbar(const Form& a) const { return del(delbar(a)); }

    /// Fundamental form of the weighted diagonal metric
    /// g = (1/2) sum_j w_j (z^j x conj z^j + conj z^j x z^j):
    /// F = (i/2) sum_j w_j z^j ^ conj z^j.
    Form diagonal_fundamental_form(const std::vector<Scalar>& weights) const {
        if ((int)weights.size() != n_) throw error("diagonal_fundamental_form: need n weights");
        Form f(2 * n_);
        for (int j = 1; j <= n_; ++j) {
            Mask m = (Mask(1) << (j - 1)) | (Mask(1) << (n_ + j - 1));
            f.add_mask(m, (Scalar(GaussRat(Rat(1), Rat(2))) * Scalar::i()) * weights[j - 1]);
        }
        return f;
    }

    Form diagonal_fundamental_form() const {
        return diagonal_fundamental_form(std::vector<Scalar>(n_, Scalar(1)));
    }

    /// Rewrites forms through an invertible complex frame change. rows[j-1]
    /// expresses the new (1,0)-covector w^j in the old coframe; the conjugate
    /// rows are derived. Returns the new frame together with the rewrite map
    /// old-form -> new-coordinates form.
    struct FrameChange {
        ComplexFrame frame;
        std::vector<Form> old_in_new;  // old coframe covectors written in the new frame
    };
    FrameChange change_frame(const std::vector<Form>& rows) const {
        if ((int)rows.size() != n_) throw error("change_frame: need n new covectors");
        int N = 2 * n_;
        GMat M(N, GVec(N));
        for (int j = 0; j < n_; ++j) {
            if (!rows[j].is_homogeneous(1)) throw error("change_frame: rows must be 1-forms");
            for (auto& [m, c] : rows[j].terms()) {
                int idx = mask_indices(m)[0];
                M[j][idx - 1] = c.constant_value();
            }
        }
        for (int j = 0; j < n_; ++j) {
            Form cj = conj(rows[j]);
            for (auto& [m, c] : cj.terms()) {
                int idx = mask_indices(m)[0];
                M[n_ + j][idx - 1] = c.constant_value();
            }
        }
        GMat inv = gmat_inverse(M);  // old^a = sum_b inv[a][b] new^b
        std::vector<Form> old_in_new(N, Form(N));
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b)
                if (!inv[a][b].is_zero())
                    old_in_new[a] += Scalar(inv[a][b]) * Form::basis(N, b + 1);
        std::vector<Form> new_d;
        for (int j = 0; j < n_; ++j) {
            Form dw = alg_.d(rows[j]);             // in old coordinates
            new_d.push_back(dw.map_basis(old_in_new, N));  // rewritten in new coordinates
        }
        return {ComplexFrame(n_, std::move(new_d)), std::move(old_in_new)};
    }

  private:
    int n_;
    LieAlgebra alg_;
    std::string name_;
};

}  // namespace lieform
