#pragma once

#include "lieform/exterior.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lieform {

struct JacobiReport {
    bool ok = true;
    int failing_index = 0;  // 1-based basis covector with d^2 e^k != 0
    Form witness;           // the nonzero 3-form d^2 e^k
};

/// A Lie algebra presented through its Chevalley-Eilenberg differential: the
/// 2-forms d e^k on the dual basis. Structure constants follow the convention
/// de^k(X, Y) = -e^k([X, Y]).
class LieAlgebra {
  public:
    LieAlgebra() : dim_(0) {}
    LieAlgebra(int dim, std::vector<Form> d_basis, std::string name = "")
        : dim_(dim), d_(std::move(d_basis)), name_(std::move(name)) {
        if ((int)d_.size() != dim) throw error("LieAlgebra: need d e^k for every basis covector");
        for (auto& f : d_) {
            if (f.dim() != dim) throw error("LieAlgebra: structure form dimension mismatch");
            if (!f.is_homogeneous(2)) throw error("LieAlgebra: d e^k must be a 2-form");
        }
    }

    static LieAlgebra abelian(int dim, std::string name = "") {
        return LieAlgebra(dim, std::vector<Form>(dim, Form(dim)), std::move(name));
    }

    int dim() const { return dim_; }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }
    const Form& d_basis(int k) const { return d_[k - 1]; }

    /// Exterior derivative on invariant forms: the antiderivation extending
    /// the stored d e^k (invariant scalars are constants, so d(deg 0) = 0).
    Form d(const Form& a) const {
        if (a.dim() != dim_) throw error("exterior_d: dimension mismatch");
        Form r(dim_);
        for (auto& [m, c] : a.terms()) {
            auto idx = mask_indices(m);
            int sign = 1;
            for (size_t j = 0; j < idx.size(); ++j) {
                // d e^{i_j} has even degree, so it can be pulled to the front.
                Form rest = Form::monomial(dim_, {});
                Mask rest_mask = m & ~(Mask(1) << (idx[j] - 1));
                rest.set_mask(rest_mask, sign < 0 ? -c : c);
                r += wedge(d_[idx[j] - 1], rest);
                sign = -sign;
            }
        }
        return r;
    }

    JacobiReport check_jacobi() const {
        for (int k = 1; k <= dim_; ++k) {
            Form dd = d(d_[k - 1]);
            if (!dd.is_zero()) return {false, k, dd};
        }
        return {};
    }

    /// Central extension by closed 2-forms supported on the existing basis:
    /// d e^{N+i} = omegas[i].
    LieAlgebra central_extension(const std::vector<Form>& omegas, std::string name = "") const {
        int r = (int)omegas.size();
        int n2 = dim_ + r;
        std::vector<Form> nd;
        std::vector<Form> old_to_new;
        for (int k = 1; k <= dim_; ++k) old_to_new.push_back(Form::basis(n2, k));
        for (int k = 1; k <= dim_; ++k) nd.push_back(d_[k - 1].map_basis(old_to_new, n2));
        for (auto& om : omegas) {
            if (om.dim() != dim_) throw error("central_extension: form dimension mismatch");
            if (!om.is_homogeneous(2)) throw error("central_extension: extension forms must be 2-forms");
            if (!d(om).is_zero())
                throw error("central_extension: extension form is not closed: d(" + om.str() +
                            ") = " + d(om).str());
            nd.push_back(om.map_basis(old_to_new, n2));
        }
        return LieAlgebra(n2, std::move(nd), std::move(name));
    }

    /// Bracket coefficients: [e_i, e_j] = sum_k bracket(i,j,k) e_k.
    Scalar bracket(int i, int j, int k) const {
        return -d_[k - 1].on({i, j});
    }

    /// Full antisymmetric bracket table, indexed [i-1][j-1][k-1].
    std::vector<std::vector<std::vector<Scalar>>> bracket_table() const {
        auto jac = check_jacobi();
        if (!jac.ok)
            throw error("bracket table: Jacobi fails at e^" + std::to_string(jac.failing_index));
        std::vector<std::vector<std::vector<Scalar>>> t(
            dim_, std::vector<std::vector<Scalar>>(dim_, std::vector<Scalar>(dim_)));
        for (int i = 1; i <= dim_; ++i)
            for (int j = 1; j <= dim_; ++j)
                for (int k = 1; k <= dim_; ++k) t[i - 1][j - 1][k - 1] = bracket(i, j, k);
        return t;
    }

  private:
    int dim_;
    std::vector<Form> d_;
    std::string name_;
};

}  // namespace lieform
