#include "lieform/scalar.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace lieform;

TEST_CASE("rational arithmetic is exact and canonical") {
    Rat a(BigInt(2), BigInt(4));
    CHECK(a == Rat(BigInt(1), BigInt(2)));
    CHECK((a + a).is_one());
    CHECK((a - a).is_zero());
    CHECK((Rat(3) / Rat(6)).str() == "1/2");
    CHECK(Rat(BigInt(-3), BigInt(-6)).str() == "1/2");
    CHECK(Rat(BigInt(3), BigInt(-6)).str() == "-1/2");
    CHECK_THROWS_AS(Rat(1) / Rat(0), error);
}

TEST_CASE("gaussian rationals") {
    GaussRat i = GaussRat::i();
    CHECK(i * i == GaussRat(-1));
    CHECK(i.conj() == -i);
    GaussRat z(Rat(1), Rat(2));
    CHECK((z / z).is_one());
    CHECK(z.str() == "1+2*i");
    CHECK((-i).str() == "-i");
    CHECK(GaussRat(Rat(0), Rat(BigInt(3), BigInt(4))).str() == "3/4*i");
}

TEST_CASE("scalar ring normalization") {
    Scalar x = Scalar::param("x");
    Scalar y = Scalar::param("y");
    CHECK((x + (-x)).is_zero());
    CHECK(x * y == y * x);
    CHECK((x + y) * (x - y) == x * x - y * y);
    // equal values have equal representations
    Scalar lhs = (x + Scalar(1)).pow(2);
    Scalar rhs = x * x + Scalar(2) * x + Scalar(1);
    CHECK(lhs == rhs);
}

TEST_CASE("conjugation involution") {
    Scalar x = Scalar::param("x");
    Scalar s = Scalar::i() * x + Scalar(2) * Scalar::pi();
    CHECK(s.conj().conj() == s);
    CHECK(Scalar::i().conj() == -Scalar::i());
    CHECK(Scalar::pi().conj() == Scalar::pi());
    // conj is a ring homomorphism
    Scalar t = x * x + Scalar::i();
    CHECK((s * t).conj() == s.conj() * t.conj());
    CHECK((s + t).conj() == s.conj() + t.conj());
}

TEST_CASE("evaluation respects conjugate pairs") {
    Scalar a3 = Scalar::param("a3");
    Scalar expr = a3 * a3.conj();  // |a3|^2
    Assignment at;
    at.set("a3", GaussRat(Rat(1), Rat(1)));  // 1 + i
    CHECK(at.eval(expr) == GaussRat(2));

    Scalar prod = Scalar::param("a3") * Scalar::param("a8").conj();
    Assignment at2;
    at2.set("a3", GaussRat(Rat(1), Rat(1))).set("a8", GaussRat(2));
    CHECK(at2.eval(prod) == GaussRat(Rat(2), Rat(2)));

    Assignment incomplete;
    incomplete.set("a3", GaussRat(1));
    CHECK_THROWS_AS(incomplete.eval(expr * Scalar::param("zq")), error);
}

TEST_CASE("formal derivative") {
    Scalar x = Scalar::param("x");
    Scalar s = x.pow(3) + Scalar(2) * x;
    auto id = Params::intern("x");
    CHECK(s.derivative(id) == Scalar(3) * x * x + Scalar(2));
}

TEST_CASE("scalar printing is canonical") {
    Scalar x = Scalar::param("x");
    CHECK((Scalar(2) * x).str() == "2*x");
    CHECK((Scalar(-2) * x + Scalar(1)).str() == "1 - 2*x");
    CHECK(Scalar(GaussRat(Rat(1), Rat(2))).str() == "1+2*i");
    CHECK(Scalar().str() == "0");
    CHECK((x * x.conj()).str() == "x*conj(x)");
}
