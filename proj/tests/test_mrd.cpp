#include <doctest.h>

#include <array>
#include <numeric>
#include <random>

#include "linset/classify.hpp"
#include "linset/mrd.hpp"
#include "oracles.hpp"

using namespace linset;
using oracle::elem;

namespace {

QPoly mono(const FieldCtx& F, std::uint32_t i, FElem a = FElem{1}) { return qpoly_monomial(F, i, a); }

}  // namespace

TEST_CASE("code construction examples") {
  const auto F = FieldCtx::build(2, 1, 3);
  const auto C = code_from_poly(F, mono(F, 1));
  CHECK(C.dim() == 6);
  std::size_t members = 1;
  std::vector<Vec> basis;
  for (const auto& b : C.basis) basis.push_back(b.c);
  for_each_nonzero(F, basis, [&](const Vec& v) {
    ++members;
    CHECK(contains(F, C, QPoly{v}));
  });
  CHECK(members == 64);
  CHECK_THROWS_AS(code_from_poly(F, qpoly_identity(F)), Error);
  const auto T = code_from_poly(F, trace_poly(F));
  CHECK(T.dim() == 6);
  CHECK(!is_mrd(F, T));
  CHECK(!contains(F, C, trace_poly(F)));
}

TEST_CASE("rank distributions, q=2 n=3") {
  const auto F = FieldCtx::build(2, 1, 3);
  const auto dq = rank_distribution(F, code_from_poly(F, mono(F, 1)));
  CHECK(dq == std::vector<std::uint64_t>{1, 0, 49, 14});
  CHECK(dq == oracle::rank_distribution(F, mono(F, 1)));
  const auto dt = rank_distribution(F, code_from_poly(F, trace_poly(F)));
  CHECK(dt == std::vector<std::uint64_t>{1, 7, 28, 28});
  CHECK(dt[1] > 0);
  // only the scalar maps a x
  std::vector<QPoly> gens;
  for (auto w : F.fq_basis()) gens.push_back(mono(F, 0, w));
  const auto ds = rank_distribution(F, code_from_polys(F, gens));
  CHECK(ds == std::vector<std::uint64_t>{1, 0, 0, 7});
}

TEST_CASE("rank distribution routes agree with the kernel-count oracle") {
  std::mt19937_64 rng(211);
  for (auto [p, e, n] : std::vector<std::array<std::uint32_t, 3>>{{2, 1, 3}, {2, 1, 4}, {3, 1, 3}}) {
    const auto F = FieldCtx::build(p, e, n);
    for (int i = 0; i < 5; ++i) {
      QPoly f = oracle::random_poly(F, rng);
      f[1] = F.add(f[1], F.one());
      if (std::all_of(f.c.begin() + 1, f.c.end(), [](FElem x) { return x.is_zero(); })) continue;
      const auto expect = oracle::rank_distribution(F, f);
      CHECK(rank_distribution(F, code_from_poly(F, f)) == expect);
      CHECK(rank_distribution_pairs(F, f) == expect);
      CHECK(rank_distribution(F, matrix_code(F, code_from_poly(F, f))) == expect);
    }
  }
}

TEST_CASE("MRD exactly when the linear set is scattered, q=2 n=3") {
  const auto F = FieldCtx::build(2, 1, 3);
  std::uint64_t mrd = 0;
  for (std::uint64_t idx = 0; idx < oracle::poly_count(F); ++idx) {
    const QPoly f = oracle::poly_at(F, idx);
    if (std::all_of(f.c.begin() + 1, f.c.end(), [](FElem x) { return x.is_zero(); })) continue;
    const bool is = is_mrd(F, code_from_poly(F, f));
    CHECK(is == profile(F, f).scattered);
    mrd += is;
  }
  CHECK(mrd == 112);
}

TEST_CASE("family constructors") {
  const auto F = FieldCtx::build(2, 1, 5);
  CHECK(family(F, "gabidulin") == mono(F, 1));
  CHECK(family(F, "gen_gabidulin", 2) == mono(F, 2));
  CHECK_THROWS_AS(family(F, "gen_gabidulin", 5), Error);
  const auto G = FieldCtx::build(3, 1, 4);
  CHECK_THROWS_AS(family(G, "gen_gabidulin", 2), Error);
  FElem bad = G.one(), good = G.zero();
  for (std::uint64_t d = 1; d < G.order(); ++d) {
    if (G.norm(elem(d)) != G.one()) good = elem(d);
  }
  CHECK_THROWS_AS(family(G, "ltz", 1, bad), Error);
  QPoly expect = mono(G, 1, good);
  expect[3] = G.one();
  CHECK(family(G, "ltz", 1, good) == expect);
  CHECK_THROWS_AS(family(G, "sheekey", 1, G.zero()), Error);
  CHECK_THROWS_AS(family(G, "nope"), Error);
}

TEST_CASE("named families give MRD codes") {
  for (auto [p, n] : std::vector<std::array<std::uint32_t, 2>>{{2, 3}, {3, 3}, {2, 4}, {3, 4}}) {
    const auto F = FieldCtx::build(p, 1, n);
    CHECK(is_mrd(F, code_from_poly(F, family(F, "gabidulin"))));
    for (std::uint32_t s = 1; s < n; ++s) {
      if (std::gcd(s, n) == 1) CHECK(is_mrd(F, code_from_poly(F, family(F, "gen_gabidulin", s))));
    }
  }
  const auto F = FieldCtx::build(3, 1, 3);
  for (std::uint64_t d = 1; d < F.order(); ++d) {
    if (F.norm(elem(d)) == F.one()) continue;
    CHECK(is_mrd(F, code_from_poly(F, family(F, "ltz", 1, elem(d)))));
  }
}

TEST_CASE("matrix codes and GL(n,q)") {
  const auto F = FieldCtx::build(2, 1, 3);
  CHECK(general_linear_group(F, 2).size() == 6);
  CHECK(general_linear_group(F, 3).size() == 168);
  const auto M = matrix_code(F, code_from_poly(F, mono(F, 1)));
  CHECK(M.basis.size() == 6);
  for (const auto& b : M.basis) CHECK(contains(F, M, b));
  CHECK(!contains(F, M, fq_matrix(F, trace_poly(F))));
}

TEST_CASE("code equivalence") {
  const auto F = FieldCtx::build(2, 1, 3);
  const auto A = matrix_code(F, code_from_poly(F, mono(F, 1)));
  const auto B = matrix_code(F, code_from_poly(F, mono(F, 2)));
  const auto T = matrix_code(F, code_from_poly(F, trace_poly(F)));
  const auto self = code_equivalent_smallscale(F, A, A, false);
  REQUIRE(self.has_value());
  for (const auto& b : A.basis) CHECK(contains(F, A, apply(F, *self, b)));
  const auto w = code_equivalent_smallscale(F, A, B, false);
  REQUIRE(w.has_value());
  for (const auto& b : A.basis) CHECK(contains(F, B, apply(F, *w, b)));
  CHECK(!code_equivalent_smallscale(F, A, T, true).has_value());
}

TEST_CASE("transposed code is the adjoint-side code") {
  const auto F = FieldCtx::build(2, 1, 3);
  Matrix G(3, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) G.at(i, j) = F.trace(F.mul(F.fq_basis()[i], F.fq_basis()[j]));
  }
  const Matrix Gi = *inverse(F, G);
  std::mt19937_64 rng(223);
  for (int i = 0; i < 6; ++i) {
    QPoly f = oracle::random_poly(F, rng);
    f[2] = F.add(f[2], F.one());
    const QPoly fh = adjoint(F, f);
    CHECK(multiply(F, multiply(F, Gi, transpose(fq_matrix(F, f))), G) == fq_matrix(F, fh));
    const auto Ct = transpose_code(F, matrix_code(F, code_from_poly(F, f)));
    // {a x + f^(b x)}: the adjoints of the members of C_f
    std::vector<QPoly> gens;
    for (auto w : F.fq_basis()) {
      gens.push_back(qpoly_monomial(F, 0, w));
      gens.push_back(compose(F, fh, qpoly_monomial(F, 0, w)));
    }
    const auto Ca = matrix_code(F, code_from_polys(F, gens));
    const CodeWitness w{Gi, G, 0, false};
    for (const auto& b : Ct.basis) CHECK(contains(F, Ca, apply(F, w, b)));
    CHECK(code_equivalent_smallscale(F, Ct, Ca, false).has_value());
    // C_{f^} itself has the same ranks, being built on the same weighted point set
    CHECK(rank_distribution(F, Ct) == rank_distribution(F, matrix_code(F, code_from_poly(F, fh))));
  }
}

TEST_CASE("inequivalent codes from one linear set number the GL-class") {
  const auto F = FieldCtx::build(2, 1, 3);
  std::mt19937_64 rng(227);
  std::vector<QPoly> samples{mono(F, 1), trace_poly(F)};
  while (samples.size() < 5) {
    const QPoly f = oracle::random_poly(F, rng);
    if (profile(F, f).maxfield_d == 1) samples.push_back(f);
  }
  for (const auto& f : samples) {
    const auto rep = gl_class(F, f);
    const auto& reps = rep.zgl.representatives;
    std::vector<MatrixCode> codes;
    for (const auto& r : reps) codes.push_back(matrix_code(F, code_from_poly(F, r)));
    // greedy classes under equivalence without transpose
    std::vector<std::size_t> leaders;
    for (std::size_t i = 0; i < codes.size(); ++i) {
      bool found = false;
      for (auto l : leaders) found = found || code_equivalent_smallscale(F, codes[l], codes[i], false).has_value();
      if (!found) leaders.push_back(i);
    }
    CHECK(leaders.size() == rep.gl_class());
  }
}
