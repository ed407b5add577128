#pragma once

#include "lieform/complex_frame.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lieform {

/// Conventions fixed across the library:
///   * J acts on a p-form by (J a)(X_1..X_p) = (-1)^p a(JX_1..JX_p).
///   * F(X, Y) = g(JX, Y); the Bismut torsion 3-form is c = -J dF,
///     i.e. c(X,Y,Z) = dF(JX, JY, JZ).
///   * Orientation: vol = sqrt(det g) e^1 ^ ... ^ e^{2n}.
///   * Pointwise inner product on p-forms: (e^I, e^J) = det(g^{i_a j_b});
///     basis monomials of an orthonormal coframe are orthonormal.

inline std::optional<Rat> rational_sqrt(const Rat& r) {
    if (r.sign() < 0) return std::nullopt;
    BigInt sn = boost::multiprecision::sqrt(r.num());
    BigInt sd = boost::multiprecision::sqrt(r.den());
    if (sn * sn != r.num() || sd * sd != r.den()) return std::nullopt;
    return Rat(sn, sd);
}

inline GaussRat scalar_constant(const Scalar& s, const char* what) {
    if (!s.is_constant()) throw error(std::string(what) + ": parameter-free value required");
    return s.constant_value();
}

/// Pullback of a form along the endomorphism with matrix A (columns = images
/// of frame vectors): (A* a)(X_1..X_p) = a(AX_1..AX_p).
inline Form pullback(const Form& a, const GMat& A) {
    int n = a.dim();
    std::vector<Form> rows;
    rows.reserve(n);
    for (int k = 1; k <= n; ++k) {
        Form rk(n);
        for (int m = 1; m <= n; ++m)
            if (!A[k - 1][m - 1].is_zero()) rk += Scalar(A[k - 1][m - 1]) * Form::basis(n, m);
        rows.push_back(std::move(rk));
    }
    return a.map_basis(rows, n);
}

/// An integrable-or-not complex structure on a Lie algebra of even dimension,
/// carried together with its (1,0)-coframe and the induced complex frame.
class ComplexStructure {
  public:
    ComplexStructure() = default;

    /// From an explicit (1,0)-coframe (n complex 1-forms on the real frame).
    static ComplexStructure from_coframe(const LieAlgebra& g, std::vector<Form> eta) {
        ComplexStructure cs;
        cs.init(g, std::move(eta));
        return cs;
    }

    /// From the endomorphism matrix (J e_j = sum_i J[i][j] e_i). The coframe is
    /// built from the (1,0)-projections of the e^k.
    static ComplexStructure from_matrix(const LieAlgebra& g, const GMat& J) {
        int N = g.dim();
        GMat J2 = gmat_mul(J, J);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                if (J2[i][j] != (i == j ? GaussRat(-1) : GaussRat(0)))
                    throw error("complex structure: J^2 != -Id");
        // (1,0)-covectors: a with a(J .) = i a; project e^k and select a basis.
        std::vector<Form> eta;
        GMat picked;  // rows: coefficients in e-basis
        for (int k = 1; k <= N && (int)eta.size() < N / 2; ++k) {
            Form ekJ(N);
            for (int m = 1; m <= N; ++m)
                if (!J[k - 1][m - 1].is_zero())
                    ekJ += Scalar(J[k - 1][m - 1]) * Form::basis(N, m);
            Form cand = Form::basis(N, k) - Scalar::i() * ekJ;  // 2 * (1,0)-projection
            GVec row(N);
            for (auto& [m, c] : cand.terms()) row[mask_indices(m)[0] - 1] = c.constant_value();
            // keep it if independent of the rows picked so far (with conjugates)
            GMat trial = picked;
            trial.push_back(row);
            GVec conj_row(N);
            for (int m = 0; m < N; ++m) conj_row[m] = row[m].conj();
            trial.push_back(conj_row);
            if (rank(trial) == (int)trial.size()) {
                picked = std::move(trial);
                eta.push_back(std::move(cand));
            }
        }
        if ((int)eta.size() != N / 2) throw error("complex structure: could not build a (1,0)-coframe");
        ComplexStructure cs;
        cs.init(g, std::move(eta));
        return cs;
    }

    /// The canonical pairing eta^j = e^{2j-1} + i e^{2j}.
    static ComplexStructure standard_pairing(const LieAlgebra& g) {
        int N = g.dim();
        std::vector<Form> eta;
        for (int j = 1; 2 * j <= N; ++j)
            eta.push_back(Form::basis(N, 2 * j - 1) + Scalar::i() * Form::basis(N, 2 * j));
        return from_coframe(g, std::move(eta));
    }

    const LieAlgebra& algebra() const { return *alg_; }
    int n() const { return n_; }
    int real_dim() const { return 2 * n_; }
    const GMat& J() const { return J_; }
    const std::vector<Form>& coframe() const { return eta_; }
    const ComplexFrame& frame() const { return frame_; }

    /// Rewrites a real-frame form on the complex coframe and back.
    Form to_complex(const Form& a) const { return a.map_basis(e_in_z_, 2 * n_); }
    Form to_real(const Form& a) const { return a.map_basis(z_in_e_, 2 * n_); }

    ComplexFrame::IntegrabilityReport check_integrable() const { return frame_.check_integrable(); }
    bool integrable() const { return frame_.integrable(); }

    /// (J a) = (-1)^p a(J., .., J.) on homogeneous degree-p forms; extended
    /// degreewise otherwise.
    Form apply_J(const Form& a) const {
        Form r(a.dim());
        for (int p = 0; p <= a.max_degree(); ++p) {
            Form part = a.degree_part(p);
            if (part.is_zero()) continue;
            Form pb = pullback(part, J_);
            r += (p % 2) ? -pb : pb;
        }
        return r;
    }

  private:
    static int rank(GMat m) {
        int rows = (int)m.size();
        if (!rows) return 0;
        int cols = (int)m[0].size(), r = 0;
        for (int c = 0; c < cols && r < rows; ++c) {
            int piv = -1;
            for (int i = r; i < rows; ++i)
                if (!m[i][c].is_zero()) { piv = i; break; }
            if (piv < 0) continue;
            std::swap(m[piv], m[r]);
            for (int i = 0; i < rows; ++i) {
                if (i == r || m[i][c].is_zero()) continue;
                GaussRat f = m[i][c] / m[r][c];
                for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
            }
            ++r;
        }
        return r;
    }

    void init(const LieAlgebra& g, std::vector<Form> eta) {
        int N = g.dim();
        if (N % 2) throw error("complex structure: odd dimension");
        n_ = N / 2;
        if ((int)eta.size() != n_) throw error("complex structure: need n coframe entries");
        alg_ = g;
        eta_ = std::move(eta);

        // M rows: eta^1..eta^n, conj eta^1..conj eta^n in the e-basis.
        GMat M(N, GVec(N));
        for (int j = 0; j < n_; ++j) {
            if (!eta_[j].is_homogeneous(1)) throw error("coframe entries must be 1-forms");
            for (auto& [m, c] : eta_[j].terms()) {
                M[j][mask_indices(m)[0] - 1] = scalar_constant(c, "coframe");
                M[j + n_][mask_indices(m)[0] - 1] = scalar_constant(c, "coframe").conj();
            }
        }
        GMat Minv = gmat_inverse(M);  // e^k = sum_a Minv[k][a] z^a

        e_in_z_.assign(N, Form(N));
        for (int k = 0; k < N; ++k)
            for (int a = 0; a < N; ++a)
                if (!Minv[k][a].is_zero())
                    e_in_z_[k] += Scalar(Minv[k][a]) * Form::basis(N, a + 1);
        z_in_e_.assign(N, Form(N));
        for (int a = 0; a < N; ++a)
            for (int k = 0; k < N; ++k)
                if (!M[a][k].is_zero()) z_in_e_[a] += Scalar(M[a][k]) * Form::basis(N, k + 1);

        // J from J* eta = i eta, J* conj eta = -i conj eta: M J = D M.
        GMat D(N, GVec(N));
        for (int j = 0; j < n_; ++j) {
            D[j][j] = GaussRat::i();
            D[j + n_][j + n_] = -GaussRat::i();
        }
        J_ = gmat_mul(Minv, gmat_mul(D, M));
        for (auto& row : J_)
            for (auto& v : row)
                if (!v.im().is_zero()) throw error("complex structure: J is not real");

        // d on the complex frame
        std::vector<Form> d_holo;
        for (int j = 0; j < n_; ++j) d_holo.push_back(alg_->d(eta_[j]).map_basis(e_in_z_, N));
        frame_ = ComplexFrame(n_, std::move(d_holo), alg_->name());
    }

    std::optional<LieAlgebra> alg_;
    int n_ = 0;
    GMat J_;
    std::vector<Form> eta_;
    std::vector<Form> e_in_z_, z_in_e_;
    ComplexFrame frame_;
};

enum class Condition { kahler, skt, astheno, special, standard, balanced };

inline const char* condition_name(Condition c) {
    switch (c) {
        case Condition::kahler: return "kahler";
        case Condition::skt: return "skt";
        case Condition::astheno: return "astheno";
        case Condition::special: return "special";
        case Condition::standard: return "standard";
        case Condition::balanced: return "balanced";
    }
    return "?";
}

struct ConditionVerdict {
    bool holds = false;
    Form witness;  // residual form when false
};

/// Hermitian structure: integrability-checked complex structure plus a
/// compatible positive metric (rational Gram matrix on the frame).
class HermitianStructure {
  public:
    HermitianStructure() = default;
    HermitianStructure(ComplexStructure cs, GMat gram) : cs_(std::move(cs)), g_(std::move(gram)) {
        int N = cs_.real_dim();
        if ((int)g_.size() != N) throw error("metric: dimension mismatch");
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                if (!g_[i][j].im().is_zero()) throw error("metric: entries must be real");
                if (g_[i][j] != g_[j][i]) throw error("metric: not symmetric");
            }
        // positive definiteness via leading principal minors
        for (int k = 1; k <= N; ++k) {
            GMat minor(k, GVec(k));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) minor[i][j] = g_[i][j];
            if (gmat_det(minor).re().sign() <= 0) throw error("metric: not positive definite");
        }
        // compatibility g(J., J.) = g
        const GMat& J = cs_.J();
        GMat JtGJ(N, GVec(N));
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                GaussRat s;
                for (int k = 0; k < N; ++k)
                    for (int l = 0; l < N; ++l) s += J[k][i] * g_[k][l] * J[l][j];
                JtGJ[i][j] = s;
            }
        if (JtGJ != g_) throw error("metric: not J-compatible");
        ginv_ = gmat_inverse(g_);

        // F(X,Y) = g(JX, Y)
        F_ = Form(N);
        for (int i = 1; i <= N; ++i)
            for (int j = i + 1; j <= N; ++j) {
                GaussRat f;
                for (int k = 0; k < N; ++k) f += J[k][i - 1] * g_[k][j - 1];
                if (!f.is_zero()) F_.add_mask((Mask(1) << (i - 1)) | (Mask(1) << (j - 1)), Scalar(f));
            }
        Fc_ = cs_.to_complex(F_);
    }

    static HermitianStructure with_identity_metric(ComplexStructure cs) {
        int N = cs.real_dim();
        return HermitianStructure(std::move(cs), gmat_identity(N));
    }

    const ComplexStructure& complex_structure() const { return cs_; }
    const LieAlgebra& algebra() const { return cs_.algebra(); }
    const ComplexFrame& frame() const { return cs_.frame(); }
    int n() const { return cs_.n(); }
    int real_dim() const { return cs_.real_dim(); }
    const GMat& metric() const { return g_; }
    const GMat& metric_inverse() const { return ginv_; }
    const Form& fundamental_form() const { return F_; }
    const Form& fundamental_complex() const { return Fc_; }

    /// del delbar F^k on the complex frame.
    Form ddbar_Fk(int k) const {
        require_integrable();
        return cs_.frame().del_delbar(wedge_pow(Fc_, k));
    }

    ConditionVerdict check_condition(Condition kind) const {
        int n = cs_.n();
        switch (kind) {
            case Condition::kahler: {
                Form r = algebra().d(F_);
                return {r.is_zero(), r};
            }
            case Condition::balanced: {
                Form r = algebra().d(wedge_pow(F_, n - 1));
                return {r.is_zero(), r};
            }
            case Condition::skt: {
                Form r = ddbar_Fk(1);
                return {r.is_zero(), r};
            }
            case Condition::astheno: {
                if (n < 3) throw error("astheno requires complex dimension >= 3");
                Form r = ddbar_Fk(n - 2);
                return {r.is_zero(), r};
            }
            case Condition::standard: {
                Form r = ddbar_Fk(n - 1);
                return {r.is_zero(), r};
            }
            case Condition::special: {
                Form r1 = ddbar_Fk(1);
                if (!r1.is_zero()) return {false, r1};
                Form r2 = ddbar_Fk(2);
                return {r2.is_zero(), r2};
            }
        }
        throw error("unknown condition");
    }

    /// Bismut torsion 3-form c = -J dF = dF(J., J., J.).
    Form torsion_c() const {
        require_integrable();
        return pullback(algebra().d(F_), cs_.J());
    }

    /// Pointwise inner product on forms; bilinear, determinant pairing on
    /// basis monomials through the inverse Gram matrix.
    GaussRat inner(const Form& a, const Form& b) const {
        GaussRat s;
        for (auto& [ma, ca] : a.terms()) {
            for (auto& [mb, cb] : b.terms()) {
                if (mask_degree(ma) != mask_degree(mb)) continue;
                s += scalar_constant(ca, "inner") * scalar_constant(cb, "inner") * gram_minor(ma, mb);
            }
        }
        return s;
    }

    GaussRat norm2(const Form& a) const { return inner(a, a); }

    Rat volume_scale() const {
        GaussRat det = gmat_det(g_);
        auto s = rational_sqrt(det.re());
        if (!s) throw error("hodge star: det(g) is not a rational square");
        return *s;
    }

    /// beta ^ star(alpha) = (beta, alpha) vol, with vol = sqrt(det g) e^{1..2n}.
    Form hodge_star(const Form& a) const {
        int N = real_dim();
        Rat s = volume_scale();
        Mask full = (N == 32) ? ~Mask(0) : ((Mask(1) << N) - 1);
        Form r(N);
        for (int p = 0; p <= N; ++p) {
            Form ap = a.degree_part(p);
            if (ap.is_zero()) continue;
            for (Mask b = 0;; ++b) {
                if (mask_degree(b) == p) {
                    GaussRat coeff;
                    for (auto& [ma, ca] : ap.terms())
                        coeff += scalar_constant(ca, "hodge") * gram_minor(b, ma);
                    if (!coeff.is_zero()) {
                        coeff *= GaussRat(s);
                        if (merge_sign(b, full & ~b) < 0) coeff = -coeff;
                        r.add_mask(full & ~b, Scalar(coeff));
                    }
                }
                if (b == full) break;
            }
        }
        return r;
    }

    /// d* = -star d star (even real dimension).
    Form codifferential(const Form& a) const { return -hodge_star(algebra().d(hodge_star(a))); }

    /// Lee form J d* F.
    Form lee_form() const {
        Form dstarF = codifferential(F_);
        return cs_.apply_J(dstarF);
    }

    Form lefschetz_L(const Form& a) const { return wedge(F_, a); }

    /// Adjoint of L for the pointwise inner product:
    /// (L b, a) = (b, Lstar a). Normalized so Lstar F = n.
    Form lefschetz_Lstar(const Form& a) const {
        int N = real_dim();
        // F with both indices raised
        GMat Fsharp(N, GVec(N));
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                GaussRat s;
                for (int k = 1; k <= N; ++k)
                    for (int l = k + 1; l <= N; ++l) {
                        Scalar c = F_.coeff((Mask(1) << (k - 1)) | (Mask(1) << (l - 1)));
                        if (c.is_zero()) continue;
                        GaussRat f = scalar_constant(c, "Lstar");
                        s += ginv_[i][k - 1] * ginv_[j][l - 1] * f;
                        s -= ginv_[i][l - 1] * ginv_[j][k - 1] * f;
                    }
                Fsharp[i][j] = s;
            }
        Form r(N);
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= N; ++j) {
                if (Fsharp[i - 1][j - 1].is_zero()) continue;
                r += Scalar(GaussRat(Rat(BigInt(1), BigInt(2))) * Fsharp[i - 1][j - 1]) *
                     a.interior(i).interior(j);
            }
        return r;
    }

    void require_integrable() const {
        auto rep = cs_.check_integrable();
        if (!rep.ok)
            throw error("complex structure is not integrable; (0,2)-part of d z^" +
                        std::to_string(rep.failing_index) + " is " + rep.witness.str("z"));
    }

  private:
    /// det of the ginv minor picked by the two index masks (equal degrees).
    GaussRat gram_minor(Mask a, Mask b) const {
        auto ia = mask_indices(a), ib = mask_indices(b);
        int p = (int)ia.size();
        if (p == 0) return GaussRat(1);
        GMat m(p, GVec(p));
        for (int x = 0; x < p; ++x)
            for (int y = 0; y < p; ++y) m[x][y] = ginv_[ia[x] - 1][ib[y] - 1];
        return gmat_det(m);
    }

    ComplexStructure cs_;
    GMat g_, ginv_;
    Form F_, Fc_;
};

/// Hermitian-diagonal metric in a given coframe: g = sum_j w_j eta^j conj eta^j
/// symmetrized; returns the real Gram matrix.
inline GMat hermitian_diagonal_metric(const ComplexStructure& cs, const std::vector<Rat>& w) {
    int N = cs.real_dim();
    if ((int)w.size() != cs.n()) throw error("hdiag: need n weights");
    // g = (1/2) sum_j w_j (eta^j (x) conj eta^j + conj eta^j (x) eta^j)
    GMat g(N, GVec(N));
    for (int j = 0; j < cs.n(); ++j) {
        GVec row(N);
        for (auto& [m, c] : cs.coframe()[j].terms())
            row[mask_indices(m)[0] - 1] = scalar_constant(c, "hdiag");
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b) {
                GaussRat term = row[a] * row[b].conj() + row[a].conj() * row[b];
                g[a][b] += GaussRat(w[j] / Rat(2)) * term;
            }
    }
    return g;
}

}  // namespace lieform
