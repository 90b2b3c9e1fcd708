#include "linset/acceptance.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "linset/classify.hpp"
#include "linset/geometry.hpp"
#include "linset/mrd.hpp"

namespace linset {

namespace {

constexpr std::uint64_t kSeed = 0x5eed1e55;

struct Tally {
  bool ok = true;
  bool falsified = false;
  int failures = 0;
  std::vector<std::string> notes;

  // theorem = false marks a disagreement between two of our own routines.
  void expect(bool cond, const std::string& what, bool theorem = true) {
    if (cond) return;
    ok = false;
    falsified = falsified || theorem;
    if (failures++ < 5) notes.push_back("failed: " + what);
  }
  void note(std::string s) { notes.push_back(std::move(s)); }
};

std::string qn(const FieldCtx& F) { return "(" + std::to_string(F.q()) + "," + std::to_string(F.n()) + ")"; }
std::string str(std::uint64_t x) { return std::to_string(x); }

FieldCtx field_for(std::uint32_t q, std::uint32_t n) {
  std::uint32_t p = 2, e = 0;
  for (std::uint32_t c : {2u, 3u, 5u, 7u}) {
    std::uint32_t t = q, k = 0;
    while (t % c == 0) t /= c, ++k;
    if (t == 1 && k > 0) p = c, e = k;
  }
  return FieldCtx::build(p, e, n);
}

std::uint64_t poly_count(const FieldCtx& F) {
  std::uint64_t t = 1;
  for (std::uint32_t i = 0; i < F.n(); ++i) t *= F.order();
  return t;
}

QPoly poly_at(const FieldCtx& F, std::uint64_t idx) {
  QPoly f = qpoly_zero(F);
  for (std::size_t i = 0; i < f.size(); ++i) {
    f[i] = FElem{static_cast<std::uint32_t>(idx % F.order())};
    idx /= F.order();
  }
  return f;
}

QPoly random_poly(const FieldCtx& F, std::mt19937_64& rng) {
  QPoly f = qpoly_zero(F);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = FElem{static_cast<std::uint32_t>(rng() % F.order())};
  return f;
}

bool is_scalar(const QPoly& f) {
  for (std::size_t i = 1; i < f.size(); ++i) {
    if (!f[i].is_zero()) return false;
  }
  return true;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t r = 0;
  for (std::uint64_t k = 1; k <= n; ++k) r += std::gcd(k, n) == 1;
  return r;
}

// Every polynomial of the field, grouped by its point set.
using Buckets = std::map<std::vector<std::uint64_t>, std::vector<QPoly>>;

Buckets bucket_by_point_set(const FieldCtx& F) {
  Buckets out;
  const std::uint64_t total = poly_count(F);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const QPoly f = poly_at(F, idx);
    std::vector<std::uint64_t> key;
    for (auto P : profile(F, f).points) key.push_back(P.key);
    out[key].push_back(f);
  }
  for (auto& [key, members] : out) std::sort(members.begin(), members.end());
  return out;
}

void trace_simplicity(Tally& t) {
  for (auto [q, n] : std::vector<std::array<std::uint32_t, 2>>{{2, 3}, {2, 4}, {3, 3}, {4, 3}, {3, 4}}) {
    const FieldCtx F = field_for(q, n);
    std::vector<QPoly> expected;
    for (std::uint64_t m = 1; m < F.order(); ++m) {
      const FElem mu{static_cast<std::uint32_t>(m)};
      if (F.norm(mu) != F.one()) continue;
      // lambda^{q^i - 1} = mu^{1 + q + ... + q^{i-1}} with mu = lambda^{q-1}
      QPoly g = qpoly_zero(F);
      std::uint64_t ex = 0, qi = 1;
      for (std::uint32_t i = 0; i < n; ++i) {
        g[i] = F.pow(mu, ex);
        ex += qi;
        qi *= F.q();
      }
      expected.push_back(g);
    }
    std::sort(expected.begin(), expected.end());
    const auto got = enumerate_equal_polys(F, trace_poly(F));
    t.expect(got == expected, qn(F) + " equal polys are not the scaled traces");
    const auto rep = gl_partition(F, zgl_partition(F, got));
    t.expect(rep.zgl.zgl_class() == 1, qn(F) + " zgl_class " + str(rep.zgl.zgl_class()));
    t.expect(rep.gl_class() == 1, qn(F) + " gl_class " + str(rep.gl_class()));
    t.note(qn(F) + " " + str(got.size()) + " polys, zgl " + str(rep.zgl.zgl_class()) + ", gl " + str(rep.gl_class()));
  }
}

void pseudoregulus_zgl(Tally& t) {
  for (auto [q, n] : std::vector<std::array<std::uint32_t, 2>>{{2, 3}, {3, 3}, {2, 4}, {3, 4}, {2, 5}}) {
    const FieldCtx F = field_for(q, n);
    const auto z = zgl_class(F, qpoly_monomial(F, 1)).zgl_class();
    t.expect(z == euler_phi(n), qn(F) + " zgl_class " + str(z) + " != phi(n)");
    t.note(qn(F) + " zgl " + str(z));
  }
}

void pseudoregulus_gl(Tally& t) {
  for (std::uint32_t q : {2u, 3u}) {
    for (std::uint32_t n : {3u, 4u, 5u}) {
      const FieldCtx F = field_for(q, n);
      const auto g = gl_class(F, qpoly_monomial(F, 1)).gl_class();
      t.expect(g == (n == 5 ? 2u : 1u), qn(F) + " gl_class " + str(g));
      t.note(qn(F) + " gl " + str(g));
    }
  }
}

void rank4_simplicity(Tally& t) {
  {
    const FieldCtx F = field_for(2, 4);
    std::uint64_t sets = 0, pairs = 0;
    for (const auto& [key, members] : bucket_by_point_set(F)) {
      if (profile(F, members.front()).maxfield_d != 1) continue;
      ++sets;
      t.expect(enumerate_equal_polys(F, members.front()) == members,
               "pruned enumeration disagrees with exhaustive grouping", false);
      const auto rep = gl_partition(F, zgl_partition(F, members));
      t.expect(rep.gl_class() == 1, "q=2 linear set with gl_class " + str(rep.gl_class()));
      for (const auto& f : members) {
        for (const auto& g : members) {
          t.expect(n4_form_check(F, f, g), "n4 form fails for " + format_qpoly(f) + " / " + format_qpoly(g));
          ++pairs;
        }
      }
    }
    t.note("q=2 exhaustive: " + str(sets) + " linear sets, " + str(pairs) + " pairs");
  }
  for (std::uint32_t q : {3u, 4u}) {
    const FieldCtx F = field_for(q, 4);
    std::mt19937_64 rng(kSeed + q);
    std::uint64_t pairs = 0;
    for (int done = 0; done < 200;) {
      const QPoly f = random_poly(F, rng);
      if (profile(F, f).maxfield_d != 1) continue;
      ++done;
      const auto eq = enumerate_equal_polys(F, f);
      const auto rep = gl_partition(F, zgl_partition(F, eq));
      t.expect(rep.gl_class() == 1, "q=" + str(q) + " f=" + format_qpoly(f) + " gl_class " + str(rep.gl_class()));
      for (const auto& g : eq) {
        t.expect(n4_form_check(F, f, g), "n4 form fails for " + format_qpoly(f) + " / " + format_qpoly(g));
        ++pairs;
      }
    }
    t.note("q=" + str(q) + " 200 samples, " + str(pairs) + " pairs");
  }
}

void nonsimple_certificate(Tally& t) {
  const FieldCtx F = field_for(5, 5);
  const QPoly f = sheekey_poly(F, F.generator());
  const QPoly fh = adjoint(F, f);
  t.expect(nonsimple_criterion(F, F.generator()), "criterion false for the generator");
  t.expect(!semilinear_equivalence_naive(F, f, fh).has_value(), "sweep found a map from U_f to U_f^");
  t.expect(!semilinear_equivalence(F, f, fh).has_value(), "fast search found a map from U_f to U_f^", false);
  const auto rep = gl_class(F, f);
  t.expect(rep.gl_class() >= 2, "gl_class " + str(rep.gl_class()));
  t.expect(rep.block_of(f) != rep.block_of(fh), "f and its adjoint share a block");
  t.note("f=" + format_qpoly(f) + ", " + str(rep.zgl.equal_polys.size()) + " polys, zgl " +
         str(rep.zgl.zgl_class()) + ", gl " + str(rep.gl_class()));
}

void small_q_remark(Tally& t) {
  struct Case {
    std::uint32_t q, n, k;
  };
  std::vector<Case> cases;
  for (std::uint32_t n = 2; n <= 5; ++n) cases.push_back({2, n, 0});
  cases.push_back({3, 3, 2});  // delta^2 = A^8
  cases.push_back({4, 3, 5});  // delta^3 = A^15
  for (const auto& c : cases) {
    const FieldCtx F = field_for(c.q, c.n);
    for (std::uint64_t d = 0; d < F.order(); ++d) {
      const FElem delta{static_cast<std::uint32_t>(d)};
      t.expect(!nonsimple_criterion(F, delta), qn(F) + " criterion holds for delta=" + str(d));
      if (d != 0) t.expect(nonsimple_equation_solvable(F, delta, c.k), qn(F) + " no solution for delta=" + str(d));
    }
    t.note(qn(F) + " k=" + str(c.k) + " all " + str(F.order()) + " delta");
  }
}

void n3_dichotomy(Tally& t) {
  for (std::uint32_t q : {2u, 3u}) {
    const FieldCtx F = field_for(q, 3);
    const std::uint64_t big = q * q + q + 1, small = q * q + 1;
    std::uint64_t n_big = 0, n_small = 0;
    const std::uint64_t total = poly_count(F);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      const QPoly f = poly_at(F, idx);
      const auto prof = profile(F, f);
      if (prof.maxfield_d != 1) continue;
      if (prof.size == big) {
        ++n_big;
        t.expect(prof.weight_spectrum == std::map<std::uint32_t, std::uint64_t>{{1, big}},
                 "size q^2+q+1 with a heavy point: " + format_qpoly(f));
      } else if (prof.size == small) {
        ++n_small;
        t.expect(prof.weight_spectrum == std::map<std::uint32_t, std::uint64_t>{{1, q * q}, {2, 1}},
                 "size q^2+1 without exactly one weight-2 point: " + format_qpoly(f));
      } else {
        t.expect(false, "size " + str(prof.size) + " for " + format_qpoly(f));
      }
    }
    t.note("q=" + str(q) + ": " + str(n_big) + " scattered, " + str(n_small) + " with a weight-2 point");
  }
}

void check_mrd_dist(Tally& t, const FieldCtx& F, const std::vector<std::uint64_t>& dist, const std::string& what) {
  for (std::uint32_t r = 1; r + 2 <= F.n(); ++r) t.expect(dist[r] == 0, what + " has A_" + str(r) + " != 0");
}

void mrd_correspondence(Tally& t) {
  for (std::uint32_t q : {2u, 3u}) {
    for (std::uint32_t n : {3u, 4u}) {
      const FieldCtx F = field_for(q, n);
      std::set<std::vector<std::uint64_t>> mrd_dists;
      std::uint64_t tested = 0, mrd = 0;
      auto test_poly = [&](const QPoly& f) {
        const auto dist = rank_distribution_pairs(F, f);
        const bool is = is_mrd(F, 2 * n, dist);
        t.expect(std::accumulate(dist.begin(), dist.end(), std::uint64_t{0}) == F.order() * F.order(),
                 "distribution does not count every codeword", false);
        t.expect(is == profile(F, f).scattered, qn(F) + " MRD/scattered mismatch for " + format_qpoly(f));
        if (is) {
          ++mrd;
          mrd_dists.insert(dist);
          check_mrd_dist(t, F, dist, format_qpoly(f));
        }
        ++tested;
      };
      if (q == 2) {
        const std::uint64_t total = poly_count(F);
        for (std::uint64_t idx = 0; idx < total; ++idx) {
          const QPoly f = poly_at(F, idx);
          if (!is_scalar(f)) test_poly(f);
        }
      } else {
        std::mt19937_64 rng(kSeed + 10 * q + n);
        while (tested < 60) {
          const QPoly f = random_poly(F, rng);
          if (!is_scalar(f)) test_poly(f);
        }
      }
      t.expect(mrd_dists.size() <= 1, qn(F) + " MRD codes with different rank distributions", false);

      // Named families, through the code built from its F_q-basis.
      std::uint64_t family_mrd = 0;
      auto test_family = [&](const QPoly& f, const std::string& name) {
        const auto code = code_from_poly(F, f);
        t.expect(code.dim() == 2 * n, name + " code has dimension " + str(code.dim()), false);
        const auto dist = rank_distribution(F, code);
        const bool scattered = profile(F, f).scattered;
        t.expect(is_mrd(F, code.dim(), dist) == scattered, qn(F) + " " + name + " MRD/scattered mismatch");
        if (scattered) {
          ++family_mrd;
          check_mrd_dist(t, F, dist, name);
        }
      };
      test_family(family(F, "gabidulin"), "gabidulin");
      for (std::uint32_t s = 1; s < n; ++s) {
        if (std::gcd(s, n) == 1) test_family(family(F, "gen_gabidulin", s), "gen_gabidulin s=" + str(s));
      }
      for (std::uint64_t d = 1; d < F.order(); ++d) {
        const FElem delta{static_cast<std::uint32_t>(d)};
        test_family(family(F, "sheekey", 1, delta), "sheekey delta=" + str(d));
        if (F.norm(delta) == F.one()) continue;
        for (std::uint32_t s = 1; s < n; ++s) {
          if (std::gcd(s, n) == 1) test_family(family(F, "ltz", s, delta), "ltz s=" + str(s) + " delta=" + str(d));
        }
      }
      t.note(qn(F) + " " + str(tested) + " polys, " + str(mrd) + " MRD; " + str(family_mrd) + " MRD family members");
    }
  }
}

void duality_suite(Tally& t) {
  for (std::uint32_t n : {3u, 4u}) {
    const FieldCtx F = field_for(2, n);
    const std::uint64_t total = poly_count(F);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      const QPoly f = poly_at(F, idx);
      const QPoly fh = adjoint(F, f);
      const std::string tag = qn(F) + " f=" + format_qpoly(f);
      t.expect(perp(F, subspace_of_poly(F, f)) == subspace_of_poly(F, fh), tag + ": perp differs from adjoint graph");
      const auto pf = profile(F, f), ph = profile(F, fh);
      t.expect(pf.points == ph.points && pf.weights == ph.weights, tag + ": adjoint changes points or weights");
      t.expect(transpose(dickson_matrix(F, f)) == dickson_matrix(F, fh), tag + ": Dickson transpose");
    }
    std::uint64_t pairs = 0;
    for (const auto& [key, members] : bucket_by_point_set(F)) {
      const QPoly& f = members.front();
      for (const auto& g : members) {
        for (std::uint64_t d = 1; d < F.order(); ++d) {
          t.expect(power_sum(F, f, d) == power_sum(F, g, d),
                   "power sum d=" + str(d) + " for " + format_qpoly(f) + " / " + format_qpoly(g));
        }
        for (const auto& c : coefficient_identities(F, f, g).checks) {
          t.expect(c.pass, c.name + " for " + format_qpoly(f) + " / " + format_qpoly(g));
        }
        ++pairs;
      }
    }
    t.note(qn(F) + " " + str(total) + " polys, " + str(pairs) + " co-enumerated pairs");
  }
}

void transversal_cross_oracle(Tally& t) {
  const FieldCtx F = field_for(2, 3);
  std::uint64_t subspaces = 0;
  for_each_subspace(F, 3, [&](const FqSubspace&) { ++subspaces; });
  t.expect(subspaces == 1395, "sweep visits " + str(subspaces) + " subspaces", false);
  std::map<std::uint64_t, std::uint64_t> seen;
  const std::uint64_t total = poly_count(F);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const QPoly f = poly_at(F, idx);
    if (profile(F, f).maxfield_d != 1) continue;
    const FqSubspace U = subspace_of_poly(F, f);
    const QPoly g = poly_of_subspace(F, U);
    t.expect(g == f, "graph round trip", false);
    const auto z = zgl_class(F, g).zgl_class();
    const auto graph = transversal_spaces(F, U, false);
    const auto full = transversal_spaces(F, U, true);
    t.expect(graph == z && full == z,
             format_qpoly(f) + ": zgl " + str(z) + ", graph " + str(graph) + ", sweep " + str(full));
    seen[z]++;
  }
  std::string summary = "1395 subspaces swept;";
  for (auto [z, c] : seen) summary += " class " + str(z) + ": " + str(c);
  t.note(summary);
}

void blocking_sets(Tally& t) {
  std::mt19937_64 rng(kSeed);
  for (std::uint32_t q : {2u, 3u}) {
    for (std::uint32_t n : {2u, 3u}) {
      const FieldCtx F = field_for(q, n);
      const std::uint64_t line_z0 = point_key(F, {F.zero(), F.zero(), F.one()});
      std::uint64_t sets = 0;
      auto check = [&](const FqSubspace& U, const Vec& w, const std::string& tag) {
        const auto B = redei_blocking_set(F, U, w);
        const auto rep = blocking_checks(F, B.points);
        t.expect(rep.is_blocking, qn(F) + " " + tag + " does not block");
        t.expect(rep.size == F.order() + B.line_part, qn(F) + " " + tag + " has the wrong size", false);
        t.expect(std::count(rep.redei_lines.begin(), rep.redei_lines.end(), line_z0) == 1,
                 qn(F) + " " + tag + ": z = 0 is not a Redei line", false);
        ++sets;
      };
      const std::uint64_t total = poly_count(F);
      const Vec w0{F.zero(), F.zero(), F.one()};
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        const QPoly f = poly_at(F, idx);
        const FqSubspace U = subspace_of_poly(F, f);
        check(U, w0, format_qpoly(f));
        // Same subspace with coordinates swapped, which meets <(0,1)> when f is singular.
        std::vector<Vec> swapped;
        for (const auto& u : U.basis(F)) swapped.push_back({u[1], u[0]});
        const FqSubspace V = FqSubspace::span(F, 2, swapped);
        if (V.dim() == n) check(V, w0, "swap " + format_qpoly(f));
        const Vec w{FElem{static_cast<std::uint32_t>(rng() % F.order())},
                    FElem{static_cast<std::uint32_t>(rng() % F.order())},
                    FElem{static_cast<std::uint32_t>(1 + rng() % (F.order() - 1))}};
        check(U, w, format_qpoly(f) + " w=" + str(w[0].v) + "," + str(w[1].v) + "," + str(w[2].v));
      }

      const QPoly tr = trace_poly(F);
      const auto B = redei_blocking_set(F, subspace_of_poly(F, tr), w0);
      const auto rep = blocking_checks(F, B.points);
      t.expect(rep.redei_lines.size() > 1, qn(F) + " trace set has " + str(rep.redei_lines.size()) + " Redei lines");
      const auto prof = profile(F, tr);
      std::vector<PointPG1> heavy;
      for (std::size_t i = 0; i < prof.points.size(); ++i) {
        if (prof.weights[i] == n - 1) heavy.push_back(prof.points[i]);
      }
      std::string note = qn(F) + " " + str(sets) + " sets; trace: " + str(rep.redei_lines.size()) + " Redei lines";
      if (n >= 3) {
        t.expect(heavy.size() == 1, qn(F) + " trace has " + str(heavy.size()) + " weight-(n-1) points");
        if (heavy.size() == 1) {
          const Vec P = heavy[0].vec(F);
          const Vec P3{P[0], P[1], F.zero()};
          for (auto l : rep.redei_lines) t.expect(on_line(F, l, P3), qn(F) + " Redei line misses the heavy point");
        }
        note += " through the weight-" + str(n - 1) + " point";
      } else {
        // Rank 2: every point of the trace set has weight 1, so there is no
        // distinguished point for the Redei lines to pass through.
        t.expect(heavy.size() == F.q() + 1, qn(F) + " trace set should be q+1 points of weight 1", false);
        note += "; no unique weight-1 point (" + str(heavy.size()) + " of them), concurrency not applicable";
      }
      t.note(note);
    }
  }
}

}  // namespace

std::string criterion_title(int id) {
  static const char* titles[kCriterionCount] = {
      "trace simplicity",       "pseudoregulus ZGL-class", "pseudoregulus GL-class",
      "rank-4 simplicity",      "non-simple certificate",  "small-q solvability",
      "n=3 size dichotomy",     "MRD correspondence",      "duality and identity suite",
      "transversal cross-oracle", "Redei blocking sets",
  };
  if (id < 1 || id > kCriterionCount) throw Error(ErrorKind::BadParams, "no criterion " + std::to_string(id));
  return titles[id - 1];
}

CriterionResult run_criterion(int id) {
  CriterionResult res;
  res.id = id;
  res.title = criterion_title(id);
  const auto start = std::chrono::steady_clock::now();
  Tally t;
  try {
    switch (id) {
      case 1: trace_simplicity(t); break;
      case 2: pseudoregulus_zgl(t); break;
      case 3: pseudoregulus_gl(t); break;
      case 4: rank4_simplicity(t); break;
      case 5: nonsimple_certificate(t); break;
      case 6: small_q_remark(t); break;
      case 7: n3_dichotomy(t); break;
      case 8: mrd_correspondence(t); break;
      case 9: duality_suite(t); break;
      case 10: transversal_cross_oracle(t); break;
      case 11: blocking_sets(t); break;
    }
  } catch (const std::exception& ex) {
    t.ok = false;
    t.note(std::string("error: ") + ex.what());
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  res.pass = t.ok;
  res.falsified = t.falsified;
  res.notes = std::move(t.notes);
  return res;
}

std::string format_result(const CriterionResult& r) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.1f", r.seconds);
  std::string out = "AC" + std::to_string(r.id) + (r.pass ? " PASS " : " FAIL ") + r.title + " (" + secs + "s)";
  for (std::size_t i = 0; i < r.notes.size(); ++i) out += (i ? "; " : ": ") + r.notes[i];
  return out;
}

}  // namespace linset
