#include "lieform/lie_algebra.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <random>

using namespace lieform;

namespace {

// (0,0,0,0,e12,e34)
LieAlgebra h2() {
    int n = 6;
    std::vector<Form> d(n, Form(n));
    d[4] = Form::monomial(n, {1, 2});
    d[5] = Form::monomial(n, {3, 4});
    return LieAlgebra(n, d, "h2");
}

Form random_form(std::mt19937& rng, int dim, int degree) {
    std::uniform_int_distribution<int> coef(-3, 3);
    Form f(dim);
    for (Mask m = 0; m < (Mask(1) << dim); ++m) {
        if (mask_degree(m) != degree) continue;
        int c = coef(rng);
        if (c) f.add_mask(m, Scalar(c));
    }
    return f;
}

}  // namespace

TEST_CASE("exterior derivative on h2") {
    LieAlgebra g = h2();
    CHECK(g.d(Form::basis(6, 5)) == Form::monomial(6, {1, 2}));
    CHECK(g.d(Form::constant(6, Scalar(1))).is_zero());
    CHECK(LieAlgebra::abelian(4).d(Form::monomial(4, {1, 2})).is_zero());
    // d(e5 ^ e6) = e126 - e345 (hand antiderivation expansion)
    Form e56 = Form::monomial(6, {5, 6});
    CHECK(g.d(e56) == Form::monomial(6, {1, 2, 6}) - Form::monomial(6, {3, 4, 5}));
}

TEST_CASE("jacobi verdicts") {
    CHECK(h2().check_jacobi().ok);
    CHECK(LieAlgebra::abelian(6).check_jacobi().ok);
    // 4-dim data with d e3 = e12, d e4 = e34 fails with witness d^2 e4 = e124
    std::vector<Form> d(4, Form(4));
    d[2] = Form::monomial(4, {1, 2});
    d[3] = Form::monomial(4, {3, 4});
    LieAlgebra bad(4, d);
    auto rep = bad.check_jacobi();
    CHECK_FALSE(rep.ok);
    CHECK(rep.failing_index == 4);
    CHECK(rep.witness == Form::monomial(4, {1, 2, 4}));
}

TEST_CASE("jacobi with parameters holds identically") {
    // d e5 = x*e12 + y*e34 is closed for all parameter values
    std::vector<Form> d(5, Form(5));
    d[4] = Scalar::param("jx") * Form::monomial(5, {1, 2}) +
           Scalar::param("jy") * Form::monomial(5, {3, 4});
    CHECK(LieAlgebra(5, d).check_jacobi().ok);
}

TEST_CASE("graded Leibniz rule for d (fuzzed)") {
    std::mt19937 rng(5);
    LieAlgebra g = h2();
    for (int trial = 0; trial < 120; ++trial) {
        int p = 1 + trial % 3;
        Form a = random_form(rng, 6, p);
        Form b = random_form(rng, 6, 2);
        Form lhs = g.d(wedge(a, b));
        Form rhs = wedge(g.d(a), b) +
                   ((p % 2) ? -wedge(a, g.d(b)) : wedge(a, g.d(b)));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("central extensions") {
    auto r4 = LieAlgebra::abelian(4);
    auto ext = r4.central_extension({Form::monomial(4, {1, 2})});
    CHECK(ext.dim() == 5);
    CHECK(ext.check_jacobi().ok);
    CHECK(ext.d_basis(5) == Form::monomial(5, {1, 2}));

    auto r6 = LieAlgebra::abelian(6);
    auto two = r6.central_extension(
        {Form::monomial(6, {1, 2}) - Form::monomial(6, {3, 4}),
         Form::monomial(6, {1, 2}) + Form::monomial(6, {3, 4})});
    CHECK(two.dim() == 8);
    CHECK(two.check_jacobi().ok);

    // non-closed extension forms are rejected
    LieAlgebra g = h2();
    Form e15 = Form::monomial(6, {1, 5});
    REQUIRE_FALSE(g.d(e15).is_zero());
    CHECK_THROWS_AS(g.central_extension({e15}), error);

    // the original differentials are untouched by an extension
    for (int k = 1; k <= 4; ++k) CHECK(ext.d_basis(k).is_zero());
    CHECK(two.d_basis(7) ==
          Form::monomial(8, {1, 2}) - Form::monomial(8, {3, 4}));
}

TEST_CASE("bracket table matches the differential convention") {
    LieAlgebra g = h2();
    auto t = g.bracket_table();
    // de^5 = e12  <=>  [e1,e2] = -e5
    CHECK(t[0][1][4] == Scalar(-1));
    CHECK(t[1][0][4] == Scalar(1));
    CHECK(t[2][3][5] == Scalar(-1));
    for (auto& plane : LieAlgebra::abelian(4).bracket_table())
        for (auto& row : plane)
            for (auto& v : row) CHECK(v.is_zero());

    // g4-type block: de^1 = e24 gives [e2,e4] = -e1
    std::vector<Form> d(6, Form(6));
    d[0] = Form::monomial(6, {2, 4});
    d[1] = -Form::monomial(6, {1, 4});
    d[2] = Form::monomial(6, {1, 2});
    LieAlgebra g4part(6, d);
    auto t4 = g4part.bracket_table();
    CHECK(t4[1][3][0] == Scalar(-1));
    CHECK(t4[0][3][1] == Scalar(1));   // de^2 = -e14 => [e1,e4] = e2
    CHECK(t4[0][1][2] == Scalar(-1));  // de^3 = e12 => [e1,e2] = -e3
}
