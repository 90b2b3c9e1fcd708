#include <doctest.h>

#include <array>
#include <random>

#include "linset/qpoly.hpp"
#include "linset/projline.hpp"
#include "oracles.hpp"

using namespace linset;
using oracle::elem;

namespace {

QPoly mono(const FieldCtx& F, std::uint32_t i, FElem a = FElem{1}) { return qpoly_monomial(F, i, a); }

}  // namespace

TEST_CASE("evaluation examples") {
  const auto F = FieldCtx::build(2, 1, 3);
  for (std::uint64_t x = 0; x < 8; ++x) CHECK(evaluate(F, qpoly_identity(F), elem(x)) == elem(x));
  CHECK(evaluate(F, trace_poly(F), F.one()) == F.one());
  const FElem d{5};
  QPoly f = mono(F, 1, d);
  f[2] = F.one();
  CHECK(evaluate(F, f, F.one()) == F.add(d, F.one()));
}

TEST_CASE("evaluation matches schoolbook evaluation") {
  std::mt19937_64 rng(3);
  for (auto [p, e, n] : std::vector<std::array<std::uint32_t, 3>>{{2, 1, 4}, {3, 1, 3}, {2, 2, 3}}) {
    const auto F = FieldCtx::build(p, e, n);
    for (int i = 0; i < 20; ++i) {
      const QPoly f = oracle::random_poly(F, rng);
      for (std::uint64_t x = 0; x < F.order(); ++x) CHECK(evaluate(F, f, elem(x)) == oracle::slow_eval(F, f, elem(x)));
    }
  }
}

TEST_CASE("adjoint examples") {
  const auto F = FieldCtx::build(2, 1, 4);
  CHECK(adjoint(F, mono(F, 1)) == mono(F, 3));
  CHECK(adjoint(F, mono(F, 0, FElem{9})) == mono(F, 0, FElem{9}));
  const FElem d{11};
  QPoly f = mono(F, 1, d);
  f[3] = F.one();
  QPoly expected = mono(F, 1);
  expected[3] = F.frob(d, 3);
  CHECK(adjoint(F, f) == expected);
}

TEST_CASE("compose examples") {
  const auto F = FieldCtx::build(3, 1, 3);
  std::mt19937_64 rng(5);
  const QPoly f = oracle::random_poly(F, rng);
  CHECK(compose(F, f, qpoly_identity(F)) == f);
  CHECK(compose(F, mono(F, 1), mono(F, 1)) == mono(F, 2));
  CHECK(compose(F, mono(F, 1), mono(F, 2)) == qpoly_identity(F));
}

TEST_CASE("kernel dimension examples") {
  const auto F = FieldCtx::build(3, 1, 3);
  CHECK(kernel_dimension(F, qpoly_identity(F)) == 0);
  CHECK(kernel_dimension(F, trace_poly(F)) == 2);
  QPoly f = mono(F, 1);
  f[0] = F.neg(F.one());
  CHECK(kernel_dimension(F, f) == 1);
}

TEST_CASE("Dickson matrix examples") {
  const auto F = FieldCtx::build(2, 1, 3);
  CHECK(dickson_matrix(F, qpoly_identity(F)) == Matrix::identity(3));
  const Matrix T = dickson_matrix(F, trace_poly(F));
  for (auto x : T.a) CHECK(x == F.one());
  CHECK(dickson_rank(F, trace_poly(F)) == 1);
  CHECK(transpose(dickson_matrix(F, mono(F, 1))) == dickson_matrix(F, mono(F, 2)));
}

TEST_CASE("scale_conjugate examples") {
  const auto F = FieldCtx::build(2, 1, 4);
  std::mt19937_64 rng(9);
  const QPoly f = oracle::random_poly(F, rng);
  CHECK(scale_conjugate(F, f, F.one()) == f);
  const FElem l = F.generator();
  CHECK(scale_conjugate(F, mono(F, 1), l) == mono(F, 1, F.pow(l, F.q() - 1)));
  CHECK_THROWS_AS(scale_conjugate(F, f, F.zero()), Error);
  // scaled traces: sum l^{q^i - 1} x^{q^i}
  const QPoly t = scale_conjugate(F, trace_poly(F), l);
  std::uint64_t qi = 1;
  for (std::uint32_t i = 0; i < 4; ++i, qi *= 2) CHECK(t[i] == F.pow(l, qi - 1));
  for (std::uint64_t x = 0; x < F.order(); ++x) {
    CHECK(evaluate(F, t, elem(x)) == F.div(evaluate(F, trace_poly(F), F.mul(l, elem(x))), l));
  }
}

TEST_CASE("adjoint pairing: Tr(y f(x)) = Tr(x f^(y))") {
  std::mt19937_64 rng(13);
  for (auto [p, e, n] : std::vector<std::array<std::uint32_t, 3>>{{2, 1, 3}, {2, 1, 4}, {3, 1, 3}, {2, 2, 3}, {2, 1, 6}}) {
    const auto F = FieldCtx::build(p, e, n);
    for (int i = 0; i < 6; ++i) {
      const QPoly f = oracle::random_poly(F, rng);
      const QPoly fh = adjoint(F, f);
      CHECK(adjoint(F, fh) == f);
      for (std::uint64_t x = 0; x < F.order(); ++x) {
        for (std::uint64_t y = 0; y < F.order(); ++y) {
          REQUIRE(F.trace(F.mul(elem(y), evaluate(F, f, elem(x)))) ==
                  F.trace(F.mul(elem(x), evaluate(F, fh, elem(y)))));
        }
      }
    }
  }
  // larger fields: random pairs
  const auto F = FieldCtx::build(3, 1, 6);
  for (int i = 0; i < 5; ++i) {
    const QPoly f = oracle::random_poly(F, rng);
    const QPoly fh = adjoint(F, f);
    for (int j = 0; j < 200; ++j) {
      const FElem x = elem(rng() % F.order()), y = elem(rng() % F.order());
      CHECK(F.trace(F.mul(y, evaluate(F, f, x))) == F.trace(F.mul(x, evaluate(F, fh, y))));
    }
  }
}

TEST_CASE("Dickson matrices multiply under composition") {
  std::mt19937_64 rng(17);
  for (auto [p, e, n] : std::vector<std::array<std::uint32_t, 3>>{{2, 1, 4}, {3, 1, 3}, {2, 2, 3}, {5, 1, 3}}) {
    const auto F = FieldCtx::build(p, e, n);
    for (int i = 0; i < 30; ++i) {
      const QPoly f = oracle::random_poly(F, rng), g = oracle::random_poly(F, rng);
      const QPoly fg = compose(F, f, g);
      CHECK(dickson_matrix(F, fg) == multiply(F, dickson_matrix(F, f), dickson_matrix(F, g)));
      CHECK(transpose(dickson_matrix(F, f)) == dickson_matrix(F, adjoint(F, f)));
      CHECK(dickson_rank(F, f) + kernel_dimension(F, f) == n);
      CHECK(kernel_dimension(F, f) == oracle::kernel_dim(F, f));
      const FElem x = elem(rng() % F.order());
      CHECK(evaluate(F, fg, x) == evaluate(F, f, evaluate(F, g, x)));
    }
  }
}

TEST_CASE("twist commutes with evaluation") {
  std::mt19937_64 rng(19);
  const auto F = FieldCtx::build(2, 2, 3);
  for (int i = 0; i < 20; ++i) {
    const QPoly f = oracle::random_poly(F, rng);
    for (std::int64_t k = 0; k < 6; ++k) {
      const FElem x = elem(rng() % F.order());
      CHECK(evaluate(F, twist(F, f, k), F.frob_p(x, k)) == F.frob_p(evaluate(F, f, x), k));
    }
  }
}

TEST_CASE("kernel of f - l x gives the weight of the point (1, l)") {
  std::mt19937_64 rng(23);
  for (auto [p, e, n] : std::vector<std::array<std::uint32_t, 3>>{{2, 1, 4}, {3, 1, 3}}) {
    const auto F = FieldCtx::build(p, e, n);
    for (int i = 0; i < 10; ++i) {
      const QPoly f = oracle::random_poly(F, rng);
      const auto prof = profile(F, f);
      for (std::uint64_t m = 0; m < F.order(); ++m) {
        const QPoly h = sub(F, f, mono(F, 0, elem(m)));
        CHECK(kernel_dimension(F, h) == prof.weight(PointPG1::slope(elem(m))));
      }
    }
  }
}

TEST_CASE("fq_matrix acts on coordinates") {
  std::mt19937_64 rng(29);
  const auto F = FieldCtx::build(3, 1, 4);
  const QPoly f = oracle::random_poly(F, rng);
  const Matrix M = fq_matrix(F, f);
  for (int i = 0; i < 50; ++i) {
    const FElem x = elem(rng() % F.order());
    const auto c = F.fq_coords(x);
    std::vector<FElem> y(4, F.zero());
    for (int r = 0; r < 4; ++r) {
      for (int j = 0; j < 4; ++j) y[r] = F.add(y[r], F.mul(M.at(r, j), c[j]));
    }
    CHECK(F.from_fq_coords(y) == evaluate(F, f, x));
  }
}

TEST_CASE("text format round-trips") {
  const auto F = FieldCtx::build(3, 1, 3);
  std::mt19937_64 rng(31);
  for (int i = 0; i < 20; ++i) {
    const QPoly f = oracle::random_poly(F, rng);
    CHECK(parse_qpoly(F, format_qpoly(f)) == f);
  }
  CHECK(format_qpoly(mono(F, 1)) == "0,1,0");
  CHECK_THROWS_AS(parse_qpoly(F, "0,1"), Error);
  CHECK_THROWS_AS(parse_qpoly(F, "0,1,27"), Error);
  CHECK_THROWS_AS(parse_qpoly(F, "0,x,1"), Error);
  CHECK_THROWS_AS(parse_qpoly(F, ""), Error);
}
