#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qsl/qscalar.hpp"

using qsl::Int;
using qsl::QScalar;
using qsl::Rat;
using qsl::ZPoly;

namespace {

QScalar q() { return QScalar::q(); }
QScalar qp(long k) { return QScalar::q_power(k); }

QScalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-4, 4), deg(0, 3);
  auto poly = [&]() {
    std::vector<Int> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = coeff(rng);
    return ZPoly(std::move(c));
  };
  ZPoly den;
  do {
    den = poly();
  } while (den.is_zero());
  return QScalar(poly(), den);
}

}  // namespace

TEST_CASE("canonical form of q - 1/q") {
  QScalar x = q() - qp(-1);
  CHECK(x.to_string() == "(q^2-1)/(q)");
  CHECK(x.num() == ZPoly(std::vector<Int>{-1, 0, 1}));
  CHECK(x.den() == ZPoly(std::vector<Int>{0, 1}));
}

TEST_CASE("canonicalization clears common factors, content and sign") {
  // (q^2-1)/(q-1) reduces to q+1
  QScalar a(ZPoly(std::vector<Int>{-1, 0, 1}), ZPoly(std::vector<Int>{-1, 1}));
  CHECK(a == q() + 1);
  // integer content is cleared too: (2q+2)/4 = (q+1)/2
  QScalar b(ZPoly(std::vector<Int>{2, 2}), ZPoly(Int(4)));
  CHECK(b.to_string() == "(q+1)/(2)");
  // denominator sign is normalized: 1/(-q) = (-1)/(q)
  QScalar c(ZPoly(Int(1)), ZPoly::monomial(-1, 1));
  CHECK(c.to_string() == "(-1)/(q)");
  CHECK(c == -qp(-1));
  // zero always prints as 0 with denominator 1
  QScalar z(ZPoly(), ZPoly::monomial(7, 5));
  CHECK(z.is_zero());
  CHECK(z.to_string() == "0");
  // q never divides both sides after reduction
  QScalar d(ZPoly::monomial(3, 4), ZPoly::monomial(2, 2));
  CHECK(d.to_string() == "(3*q^2)/(2)");
}

TEST_CASE("q times q inverse is one") {
  CHECK((q() * qp(-1)).is_one());
  CHECK(qp(5) * qp(-5) == QScalar(1));
  CHECK(qp(-3) == q().pow(-3));
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(20260814);
  for (int trial = 0; trial < 60; ++trial) {
    QScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == QScalar(0));
    if (!b.is_zero()) {
      CHECK((a / b) * b == a);
      CHECK(b * b.inverse() == QScalar(1));
    }
  }
}

TEST_CASE("symmetric q-integers") {
  CHECK(qsl::qint(0).is_zero());
  CHECK(qsl::qint(1).is_one());
  CHECK(qsl::qint(2) == q() + qp(-1));
  CHECK(qsl::qint(2).to_string() == "(q^2+1)/(q)");
  CHECK(qsl::qint(3) == qp(2) + 1 + qp(-2));
  CHECK(qsl::qint(-4) == -qsl::qint(4));
  // defining identity [n](q - q^-1) = q^n - q^-n
  for (long n = 0; n <= 8; ++n)
    CHECK(qsl::qint(n) * (q() - qp(-1)) == qp(n) - qp(-n));
  // symmetric under q -> 1/q
  for (long n = 1; n <= 6; ++n) CHECK(qsl::qint(n).subst_q_inverse() == qsl::qint(n));
}

TEST_CASE("q-factorials") {
  CHECK(qsl::qfact(0).is_one());
  CHECK(qsl::qfact(1).is_one());
  CHECK(qsl::qfact(2) == qsl::qint(2));
  CHECK(qsl::qfact(3) == (q() + qp(-1)) * (qp(2) + 1 + qp(-2)));
  QScalar f = 1;
  for (long n = 1; n <= 6; ++n) {
    f *= qsl::qint(n);
    CHECK(qsl::qfact(n) == f);
  }
}

TEST_CASE("one-sided q-numbers") {
  QScalar t = qp(-2);
  CHECK(qsl::qparen(0, t).is_zero());
  CHECK(qsl::qparen(1, t).is_one());
  CHECK(qsl::qparen(2, t) == 1 + qp(-2));
  CHECK(qsl::qparen_fact(2, t) == 1 + qp(-2));
  CHECK(qsl::qparen_fact(2, t).to_string() == "(q^2+1)/(q^2)");
  // (z)_t = (t^z - 1)/(t - 1)
  for (long z = 0; z <= 5; ++z)
    CHECK(qsl::qparen(z, t) * (t - 1) == t.pow(z) - 1);
}

TEST_CASE("substitute q -> 1/q") {
  QScalar x = q() - qp(-1);
  CHECK(x.subst_q_inverse() == -x);
  CHECK(qp(3).subst_q_inverse() == qp(-3));
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    QScalar a = random_scalar(rng);
    CHECK(a.subst_q_inverse().subst_q_inverse() == a);
  }
}

TEST_CASE("evaluation at rational points") {
  CHECK(qsl::qint(2).eval(Rat(2)) == Rat(5, 2));
  CHECK((q() - qp(-1)).eval(Rat(1, 3)) == Rat(1, 3) - Rat(3));
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    QScalar a = random_scalar(rng), b = random_scalar(rng);
    Rat x(3, 2);
    try {
      Rat va = a.eval(x), vb = b.eval(x), vs = (a + b).eval(x), vp = (a * b).eval(x);
      CHECK(vs == va + vb);
      CHECK(vp == va * vb);
    } catch (const std::domain_error&) {
      // pole at the sample point; nothing to compare
    }
  }
}

TEST_CASE("parse round-trips") {
  for (const char* s :
       {"0", "1", "-1", "(q^2-1)/(q)", "(q^2+1)/(q)", "q", "2*q^3-q+7",
        "(-q^4+2)/(3*q^2+1)", "(q+1)/(2)"}) {
    QScalar v = QScalar::parse(s);
    CHECK(v.to_string() == s);
    CHECK(QScalar::parse(v.to_string()) == v);
  }
  // parsing normalizes non-canonical input
  CHECK(QScalar::parse("(q^2-1)/(q-1)") == q() + 1);
  CHECK(QScalar::parse("(2)/(2*q)") == qp(-1));
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 40; ++trial) {
    QScalar a = random_scalar(rng);
    CHECK(QScalar::parse(a.to_string()) == a);
  }
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(QScalar(1) / QScalar(0), std::domain_error);
  CHECK_THROWS_AS(QScalar(0).inverse(), std::domain_error);
  CHECK_THROWS_AS(QScalar(ZPoly::one(), ZPoly()), std::domain_error);
}

TEST_CASE("polynomial gcd sanity") {
  // gcd((q^2-1)(q+2), (q^2-1)q) = q^2-1 up to sign/content normalization
  ZPoly a = ZPoly(std::vector<Int>{-1, 0, 1}) * ZPoly(std::vector<Int>{2, 1});
  ZPoly b = ZPoly(std::vector<Int>{-1, 0, 1}) * ZPoly::monomial(1, 1);
  CHECK(gcd(a, b) == ZPoly(std::vector<Int>{-1, 0, 1}));
  // content participates: gcd(2(q+1), 4(q+1)) = 2(q+1)
  ZPoly c = ZPoly(std::vector<Int>{2, 2}), d = ZPoly(std::vector<Int>{4, 4});
  CHECK(gcd(c, d) == c);
  std::mt19937_64 rng(5150);
  std::uniform_int_distribution<int> coeff(-3, 3), deg(0, 4);
  auto poly = [&]() {
    std::vector<Int> v(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : v) x = coeff(rng);
    return ZPoly(std::move(v));
  };
  for (int trial = 0; trial < 40; ++trial) {
    ZPoly x = poly(), y = poly(), m = poly();
    ZPoly g = gcd(x * m, y * m);
    if (m.is_zero()) continue;
    // the common factor m divides the gcd
    CHECK_NOTHROW(div_exact(g, gcd(g, m)));
    if (!(x * m).is_zero()) CHECK_NOTHROW(div_exact(x * m, g));
    if (!(y * m).is_zero()) CHECK_NOTHROW(div_exact(y * m, g));
  }
}
