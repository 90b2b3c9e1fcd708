#include "linset/classify.hpp"

#include <algorithm>
#include <unordered_map>

namespace linset {

namespace {

// 0, g^0, g^1, ..., g^{Q-2}
std::vector<FElem> generator_order(const FieldCtx& F) {
  std::vector<FElem> out;
  out.reserve(F.order());
  out.push_back(F.zero());
  FElem cur = F.one();
  for (std::uint64_t j = 0; j < F.group_order(); ++j) {
    out.push_back(cur);
    cur = F.mul(cur, F.generator());
  }
  return out;
}

bool is_scalar(const QPoly& f) {
  for (std::size_t i = 1; i < f.size(); ++i) {
    if (!f[i].is_zero()) return false;
  }
  return true;
}

std::uint32_t first_nonconstant(const QPoly& s) {
  for (std::uint32_t m = 1; m < s.size(); ++m) {
    if (!s[m].is_zero()) return m;
  }
  return 0;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

}  // namespace

bool is_invertible(const FieldCtx& F, const SemilinearMap& m) {
  return !F.sub(F.mul(m.A, m.D), F.mul(m.B, m.C)).is_zero();
}

Vec apply(const FieldCtx& F, const SemilinearMap& m, const Vec& v) {
  const FElem xs = F.frob_p(v[0], m.k);
  const FElem ys = F.frob_p(v[1], m.k);
  return {F.add(F.mul(m.A, xs), F.mul(m.B, ys)), F.add(F.mul(m.C, xs), F.mul(m.D, ys))};
}

FqSubspace apply(const FieldCtx& F, const SemilinearMap& m, const FqSubspace& U) {
  auto basis = U.basis(F);
  for (auto& v : basis) v = apply(F, m, v);
  return FqSubspace::span(F, 2, basis);
}

FElem power_sum(const FieldCtx& F, const QPoly& f, std::uint64_t d) {
  FElem sum = F.zero();
  for (std::uint64_t x = 1; x < F.order(); ++x) {
    const FElem xe{static_cast<std::uint32_t>(x)};
    sum = F.add(sum, F.pow(F.div(evaluate(F, f, xe), xe), d));
  }
  return sum;
}

bool CheckResult::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass; });
}

namespace {

FElem pair_product(const FieldCtx& F, const QPoly& a, std::uint32_t k) {
  const std::uint32_t n = F.n();
  return F.mul(a[k], F.frob(a[n - k], k));
}

FElem cubic_form(const FieldCtx& F, const QPoly& a, std::uint32_t k) {
  const std::uint32_t n = F.n();
  const FElem t1 = F.mul(a[1], F.mul(F.frob(a[k - 1], 1), F.frob(a[n - k], k)));
  const FElem t2 = F.mul(a[k], F.mul(F.frob(a[n - 1], 1), F.frob(a[(n - k + 1) % n], k)));
  return F.add(t1, t2);
}

}  // namespace

FElem n4_norm_form(const FieldCtx& F, const QPoly& a) {
  if (F.n() != 4) throw Error(ErrorKind::WrongN, "the norm identity is specific to n = 4");
  auto fr = [&](FElem x, int i) { return F.frob(x, i); };
  FElem s = F.add(F.add(F.norm(a[1]), F.norm(a[2])), F.norm(a[3]));
  s = F.add(s, F.mul(F.mul(a[1], fr(a[1], 2)), F.mul(fr(a[3], 1), fr(a[3], 3))));
  s = F.add(s, F.mul(F.mul(fr(a[1], 1), fr(a[1], 3)), F.mul(a[3], fr(a[3], 2))));
  s = F.add(s, F.trace(F.mul(F.mul(a[1], F.mul(fr(a[2], 1), fr(a[2], 2))), fr(a[3], 3))));
  return s;
}

CheckResult coefficient_identities(const FieldCtx& F, const QPoly& f, const QPoly& g) {
  const std::uint32_t n = F.n();
  CheckResult out;
  out.checks.push_back({"constant", f[0] == g[0]});
  for (std::uint32_t k = 1; k < n; ++k) {
    out.checks.push_back({"pair k=" + std::to_string(k), pair_product(F, f, k) == pair_product(F, g, k)});
  }
  for (std::uint32_t k = 2; k < n; ++k) {
    out.checks.push_back({"cubic k=" + std::to_string(k), cubic_form(F, f, k) == cubic_form(F, g, k)});
  }
  if (n == 4) out.checks.push_back({"norm n=4", n4_norm_form(F, f) == n4_norm_form(F, g)});
  return out;
}

void DirectionMatcher::init_tables() {
  const FieldCtx& F = F_;
  target_.assign(F.order(), 0);
  stamp_.assign(F.order(), 0);
  if (!F.has_tables()) return;
  const std::uint64_t gm = F.group_order();
  exps_.resize(F.n());
  for (std::uint32_t i = 0; i < F.n(); ++i) {
    exps_[i].resize(gm);
    const std::uint64_t step = (F.qpow_mod(i) + gm - 1) % gm;
    std::uint64_t acc = 0;
    for (std::uint64_t t = 0; t < gm; ++t) {
      exps_[i][t] = static_cast<std::uint32_t>(acc);
      acc += step;
      if (acc >= gm) acc -= gm;
    }
  }
}

DirectionMatcher::DirectionMatcher(const FieldCtx& F, const QPoly& f) : F_(F) {
  init_tables();
  for (std::uint64_t x = 1; x < F.order(); ++x) {
    const FElem xe{static_cast<std::uint32_t>(x)};
    const FElem m = F.div(evaluate(F, f, xe), xe);
    if (!target_[m.v]) {
      target_[m.v] = 1;
      ++target_size_;
    }
  }
}

DirectionMatcher::DirectionMatcher(const FieldCtx& F, const std::vector<PointPG1>& target) : F_(F) {
  init_tables();
  for (PointPG1 P : target) {
    if (P.is_infinity(F)) throw Error(ErrorKind::PointAtInfinity, "target contains (0,1)");
    if (!target_[P.key]) {
      target_[P.key] = 1;
      ++target_size_;
    }
  }
}

bool DirectionMatcher::matches(const QPoly& g) {
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  std::uint64_t distinct = 0;
  if (!exps_.empty()) {
    const std::uint32_t* lg = F_.log_table();
    const std::uint32_t* ex = F_.exp_table();
    std::uint32_t idx[32];
    std::uint32_t lb[32];
    std::uint32_t cnt = 0;
    for (std::uint32_t i = 0; i < g.size(); ++i) {
      if (!g[i].is_zero()) {
        idx[cnt] = i;
        lb[cnt] = lg[g[i].v];
        ++cnt;
      }
    }
    const std::uint64_t gm = F_.group_order();
    for (std::uint64_t t = 0; t < gm; ++t) {
      FElem m = F_.zero();
      for (std::uint32_t j = 0; j < cnt; ++j) m = F_.add(m, FElem{ex[lb[j] + exps_[idx[j]][t]]});
      if (!target_[m.v]) return false;
      if (stamp_[m.v] != epoch_) {
        stamp_[m.v] = epoch_;
        ++distinct;
      }
    }
  } else {
    for (std::uint64_t x = 1; x < F_.order(); ++x) {
      const FElem xe{static_cast<std::uint32_t>(x)};
      const FElem m = F_.div(evaluate(F_, g, xe), xe);
      if (!target_[m.v]) return false;
      if (stamp_[m.v] != epoch_) {
        stamp_[m.v] = epoch_;
        ++distinct;
      }
    }
  }
  return distinct == target_size_;
}

namespace {

struct PairSlot {
  std::uint32_t k;
  FElem c;  // a_k a_{n-k}^{q^k}
};

struct SearchPlan {
  std::vector<PairSlot> pairs;
  bool has_middle = false;
  std::uint32_t middle = 0;
  std::vector<FElem> middle_values;
};

SearchPlan make_plan(const FieldCtx& F, const QPoly& a) {
  const std::uint32_t n = F.n();
  SearchPlan plan;
  for (std::uint32_t k = 1; k < n - k; ++k) plan.pairs.push_back({k, pair_product(F, a, k)});
  if (n % 2 == 0) {
    plan.has_middle = true;
    plan.middle = n / 2;
    const FElem c = pair_product(F, a, plan.middle);
    for (std::uint64_t v = 0; v < F.order(); ++v) {
      const FElem b{static_cast<std::uint32_t>(v)};
      if (F.mul(b, F.frob(b, plan.middle)) == c) plan.middle_values.push_back(b);
    }
  }
  return plan;
}

void require_linear_over_fq(const FieldCtx& F, const QPoly& f) {
  const auto prof = profile(F, f);
  if (prof.maxfield_d != 1) {
    throw Error(ErrorKind::MaxFieldTooLarge,
                "maximum field of linearity is F_{q^" + std::to_string(prof.maxfield_d) + "}, need F_q");
  }
}

}  // namespace

std::uint64_t pruned_candidate_count(const FieldCtx& F, const QPoly& f) {
  const auto plan = make_plan(F, f);
  const std::uint64_t Q = F.order();
  unsigned __int128 total = 1;
  for (const auto& p : plan.pairs) total *= p.c.is_zero() ? 2 * Q - 1 : Q - 1;
  if (plan.has_middle) total *= plan.middle_values.size();
  const unsigned __int128 cap = ~0ull;
  return total > cap ? ~0ull : static_cast<std::uint64_t>(total);
}

std::vector<QPoly> enumerate_equal_polys(const FieldCtx& F, const QPoly& f, const EnumerateOptions& opt) {
  require_linear_over_fq(F, f);
  const std::uint32_t n = F.n();
  const std::uint64_t Q = F.order();
  const unsigned workers = std::max(1u, opt.threads);
  std::vector<DirectionMatcher> matchers;
  matchers.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) matchers.emplace_back(F, f);
  std::vector<std::vector<QPoly>> found(workers);

  if (!opt.prune) {
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (total > opt.budget / Q) check_budget(~0ull, opt.budget, "unpruned enumeration");
      total *= Q;
    }
    check_budget(total, opt.budget, "unpruned enumeration");
    parallel_for(total, workers, [&](std::uint64_t idx, unsigned w) {
      QPoly g = qpoly_zero(F);
      for (std::uint32_t i = 0; i < n; ++i) {
        g[i] = FElem{static_cast<std::uint32_t>(idx % Q)};
        idx /= Q;
      }
      if (matchers[w].matches(g)) found[w].push_back(g);
    });
  } else {
    check_budget(pruned_candidate_count(F, f), opt.budget, "pruned enumeration");
    const SearchPlan plan = make_plan(F, f);
    std::vector<FElem> cubic_target(n);
    for (std::uint32_t k = 2; k < n; ++k) cubic_target[k] = cubic_form(F, f, k);
    const FElem norm_target = n == 4 ? n4_norm_form(F, f) : F.zero();

    auto leaf = [&](QPoly& b, unsigned w) {
      for (std::uint32_t k = 2; k < n; ++k) {
        if (cubic_form(F, b, k) != cubic_target[k]) return;
      }
      if (n == 4 && n4_norm_form(F, b) != norm_target) return;
      if (matchers[w].matches(b)) found[w].push_back(b);
    };
    auto finish = [&](QPoly& b, unsigned w) {
      if (!plan.has_middle) {
        leaf(b, w);
        return;
      }
      for (FElem v : plan.middle_values) {
        b[plan.middle] = v;
        leaf(b, w);
      }
    };
    // Binds b_k = v and its partner b_{n-k}, then descends.
    auto bind = [&](auto&& self, QPoly& b, std::size_t level, FElem v, unsigned w) -> void {
      const auto& slot = plan.pairs[level];
      const std::uint32_t k = slot.k;
      auto next = [&] {
        if (level + 1 == plan.pairs.size()) {
          finish(b, w);
        } else {
          for (std::uint64_t u = 0; u < Q; ++u) self(self, b, level + 1, FElem{static_cast<std::uint32_t>(u)}, w);
        }
      };
      b[k] = v;
      if (!slot.c.is_zero()) {
        if (v.is_zero()) return;
        b[n - k] = F.frob(F.div(slot.c, v), -static_cast<std::int64_t>(k));
        next();
      } else if (v.is_zero()) {
        for (std::uint64_t u = 0; u < Q; ++u) {
          b[n - k] = FElem{static_cast<std::uint32_t>(u)};
          next();
        }
      } else {
        b[n - k] = F.zero();
        next();
      }
    };

    if (plan.pairs.empty()) {
      QPoly b = qpoly_zero(F);
      b[0] = f[0];
      finish(b, 0);
    } else {
      parallel_for(Q, workers, [&](std::uint64_t v, unsigned w) {
        QPoly b = qpoly_zero(F);
        b[0] = f[0];
        bind(bind, b, 0, FElem{static_cast<std::uint32_t>(v)}, w);
      });
    }
  }

  std::vector<QPoly> out;
  for (auto& part : found) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<QPoly> scaling_orbit(const FieldCtx& F, const QPoly& g) {
  const std::uint64_t gm = F.group_order();
  const std::uint64_t count = gm / (F.q() - 1);
  std::vector<QPoly> out;
  out.reserve(count);
  for (std::uint64_t j = 0; j < count; ++j) {
    QPoly h = g;
    for (std::uint32_t i = 1; i < F.n(); ++i) {
      if (h[i].is_zero()) continue;
      const std::uint64_t e = mulmod(j, (F.qpow_mod(i) + gm - 1) % gm, gm);
      h[i] = F.mul(h[i], F.gen_pow(e));
    }
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ZglResult zgl_partition(const FieldCtx& F, std::vector<QPoly> polys) {
  std::sort(polys.begin(), polys.end());
  polys.erase(std::unique(polys.begin(), polys.end()), polys.end());
  ZglResult res;
  res.orbit_of.assign(polys.size(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (res.orbit_of[i] != static_cast<std::size_t>(-1)) continue;
    const std::size_t id = res.representatives.size();
    res.representatives.push_back(polys[i]);
    for (const auto& h : scaling_orbit(F, polys[i])) {
      const auto it = std::lower_bound(polys.begin(), polys.end(), h);
      if (it == polys.end() || *it != h) {
        throw Error(ErrorKind::InternalConsistency, "scaling orbit of " + format_qpoly(polys[i]) +
                                                        " leaves the enumerated set at " + format_qpoly(h));
      }
      res.orbit_of[static_cast<std::size_t>(it - polys.begin())] = id;
    }
  }
  res.equal_polys = std::move(polys);
  return res;
}

ZglResult zgl_class(const FieldCtx& F, const QPoly& f, const EnumerateOptions& opt) {
  return zgl_partition(F, enumerate_equal_polys(F, f, opt));
}

namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint32_t>& k) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : k) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// t[i][m] = g_i s_{m-i}^{q^i}, so that (g o (B s))_m = sum_i t[i][m] B^{q^i}.
std::vector<std::vector<FElem>> composition_table(const FieldCtx& F, const QPoly& g, const QPoly& s) {
  const std::uint32_t n = F.n();
  std::vector<std::vector<FElem>> t(n, std::vector<FElem>(n));
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t m = 0; m < n; ++m) t[i][m] = F.mul(g[i], F.frob(s[(m + n - i) % n], i));
  }
  return t;
}

void beta_of(const FieldCtx& F, const std::vector<std::vector<FElem>>& t, FElem B, std::vector<FElem>& beta) {
  const std::uint32_t n = F.n();
  std::fill(beta.begin(), beta.end(), F.zero());
  if (B.is_zero()) return;
  for (std::uint32_t i = 0; i < n; ++i) {
    const FElem bp = F.frob(B, i);
    for (std::uint32_t m = 0; m < n; ++m) beta[m] = F.add(beta[m], F.mul(t[i][m], bp));
  }
}

void alpha_of(const FieldCtx& F, const QPoly& g, FElem A, std::vector<FElem>& alpha) {
  for (std::uint32_t m = 0; m < F.n(); ++m) alpha[m] = F.mul(g[m], F.frob(A, m));
}

// Reads C, D off g o h = C id + D s and checks invertibility and the image.
std::optional<SemilinearMap> finish_candidate(const FieldCtx& F, const QPoly& s, std::uint32_t kstar,
                                              const std::vector<FElem>& alpha, const std::vector<FElem>& beta,
                                              FElem A, FElem B, std::uint32_t k, const FqSubspace& Uf,
                                              const FqSubspace& Ug) {
  const FElem D = F.div(F.add(alpha[kstar], beta[kstar]), s[kstar]);
  const FElem C = F.sub(F.add(alpha[0], beta[0]), F.mul(D, s[0]));
  const SemilinearMap m{A, B, C, D, k};
  if (!is_invertible(F, m)) return std::nullopt;
  if (apply(F, m, Uf) != Ug) return std::nullopt;
  return m;
}

}  // namespace

std::optional<SemilinearMap> semilinear_equivalence(const FieldCtx& F, const QPoly& f, const QPoly& g) {
  if (is_scalar(f)) return semilinear_equivalence_naive(F, f, g);
  const std::uint32_t n = F.n();
  const auto order = generator_order(F);
  const FqSubspace Uf = subspace_of_poly(F, f);
  const FqSubspace Ug = subspace_of_poly(F, g);
  std::vector<FElem> alpha(n), beta(n);
  for (std::uint32_t k = 0; k < F.degree(); ++k) {
    const QPoly s = twist(F, f, k);
    const std::uint32_t kstar = first_nonconstant(s);
    std::vector<FElem> ratio(n, F.zero());
    for (std::uint32_t m = 1; m < n; ++m) ratio[m] = F.div(s[m], s[kstar]);
    const auto t = composition_table(F, g, s);

    auto key_of = [&](const std::vector<FElem>& v, bool negate) {
      std::vector<std::uint32_t> key;
      key.reserve(n);
      for (std::uint32_t m = 1; m < n; ++m) {
        if (m == kstar) continue;
        FElem x = F.sub(v[m], F.mul(ratio[m], v[kstar]));
        if (negate) x = F.neg(x);
        key.push_back(x.v);
      }
      return key;
    };

    std::unordered_map<std::vector<std::uint32_t>, std::vector<FElem>, KeyHash> by_key;
    for (FElem A : order) {
      alpha_of(F, g, A, alpha);
      by_key[key_of(alpha, false)].push_back(A);
    }
    for (FElem B : order) {
      beta_of(F, t, B, beta);
      const auto it = by_key.find(key_of(beta, true));
      if (it == by_key.end()) continue;
      for (FElem A : it->second) {
        if (A.is_zero() && B.is_zero()) continue;
        alpha_of(F, g, A, alpha);
        if (auto m = finish_candidate(F, s, kstar, alpha, beta, A, B, k, Uf, Ug)) return m;
      }
    }
  }
  return std::nullopt;
}

std::optional<SemilinearMap> semilinear_equivalence_naive(const FieldCtx& F, const QPoly& f, const QPoly& g) {
  const std::uint32_t n = F.n();
  const auto order = generator_order(F);
  const FqSubspace Uf = subspace_of_poly(F, f);
  const FqSubspace Ug = subspace_of_poly(F, g);
  const std::size_t Q = order.size();
  std::vector<FElem> alpha(n);
  std::vector<FElem> betas(Q * n);
  std::vector<FElem> beta(n);
  for (std::uint32_t k = 0; k < F.degree(); ++k) {
    const QPoly s = twist(F, f, k);
    const auto t = composition_table(F, g, s);
    for (std::size_t b = 0; b < Q; ++b) {
      beta_of(F, t, order[b], beta);
      std::copy(beta.begin(), beta.end(), betas.begin() + static_cast<std::ptrdiff_t>(b * n));
    }
    const std::uint32_t kstar = first_nonconstant(s);
    for (FElem A : order) {
      alpha_of(F, g, A, alpha);
      for (std::size_t b = 0; b < Q; ++b) {
        const FElem B = order[b];
        if (A.is_zero() && B.is_zero()) continue;
        const FElem* bt = &betas[b * n];
        // g o h must lie in the span of id and s.
        bool in_span = true;
        if (kstar == 0) {
          for (std::uint32_t m = 1; m < n && in_span; ++m) in_span = F.add(alpha[m], bt[m]).is_zero();
          if (!in_span) continue;
          // Only C + D s_0 is determined; scan D.
          const FElem total0 = F.add(alpha[0], bt[0]);
          for (FElem D : order) {
            const SemilinearMap m{A, B, F.sub(total0, F.mul(D, s[0])), D, k};
            if (is_invertible(F, m) && apply(F, m, Uf) == Ug) return m;
          }
          continue;
        }
        const FElem D = F.div(F.add(alpha[kstar], bt[kstar]), s[kstar]);
        for (std::uint32_t m = 1; m < n && in_span; ++m) {
          if (m == kstar) continue;
          in_span = F.add(alpha[m], bt[m]) == F.mul(D, s[m]);
        }
        if (!in_span) continue;
        beta.assign(bt, bt + n);
        if (auto m = finish_candidate(F, s, kstar, alpha, beta, A, B, k, Uf, Ug)) return m;
      }
    }
  }
  return std::nullopt;
}

std::size_t ClassReport::block_of(const QPoly& g) const {
  const auto& polys = zgl.equal_polys;
  const auto it = std::lower_bound(polys.begin(), polys.end(), g);
  if (it == polys.end() || *it != g) throw Error(ErrorKind::BadParams, "polynomial is not in the enumerated set");
  const std::size_t orbit = zgl.orbit_of[static_cast<std::size_t>(it - polys.begin())];
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (std::find(blocks[b].begin(), blocks[b].end(), orbit) != blocks[b].end()) return b;
  }
  throw Error(ErrorKind::InternalConsistency, "orbit without a block");
}

ClassReport gl_partition(const FieldCtx& F, ZglResult zgl) {
  ClassReport rep;
  rep.zgl = std::move(zgl);
  const auto& reps = rep.zgl.representatives;
  for (std::size_t j = 0; j < reps.size(); ++j) {
    bool merged = false;
    for (auto& block : rep.blocks) {
      if (auto m = semilinear_equivalence(F, reps[block[0]], reps[j])) {
        rep.witnesses.push_back({block[0], j, *m});
        block.push_back(j);
        merged = true;
        break;
      }
    }
    if (!merged) rep.blocks.push_back({j});
  }
  return rep;
}

ClassReport gl_class(const FieldCtx& F, const QPoly& f, const EnumerateOptions& opt) {
  return gl_partition(F, zgl_class(F, f, opt));
}

bool n4_form_check(const FieldCtx& F, const QPoly& f, const QPoly& g) {
  if (F.n() != 4) throw Error(ErrorKind::WrongN, "n4_form_check requires n = 4");
  const auto a = scaling_orbit(F, f);
  if (std::binary_search(a.begin(), a.end(), g)) return true;
  const auto b = scaling_orbit(F, adjoint(F, f));
  return std::binary_search(b.begin(), b.end(), g);
}

std::vector<FElem> adjoint_system_residuals(const FieldCtx& F, const QPoly& a, const SemilinearMap& mp) {
  const std::uint32_t n = F.n();
  const QPoly s = twist(F, a, mp.k);
  std::vector<FElem> res(n);
  for (std::uint32_t m = 0; m < n; ++m) {
    FElem lhs = F.sub(F.mul(mp.D, s[m]), F.frob(F.mul(a[(n - m) % n], mp.A), m));
    if (m == 0) lhs = F.add(lhs, mp.C);
    FElem rhs = F.zero();
    for (std::uint32_t i = 0; i < n; ++i) {
      rhs = F.add(rhs, F.frob(F.mul(mp.B, F.mul(a[i], s[(i + m) % n])), static_cast<std::int64_t>(n - i)));
    }
    res[m] = F.sub(lhs, rhs);
  }
  return res;
}

std::vector<FElem> adjoint_system_residuals_n4(const FieldCtx& F, const QPoly& a, const SemilinearMap& mp) {
  if (F.n() != 4) throw Error(ErrorKind::WrongN, "the explicit system is written for n = 4");
  const FElem A = mp.A, B = mp.B, C = mp.C, D = mp.D;
  auto sg = [&](std::uint32_t i) { return F.frob_p(a[i], mp.k); };
  auto fr = [&](FElem x, int i) { return F.frob(x, i); };
  auto term = [&](std::uint32_t i, std::uint32_t j, int e) { return fr(F.mul(B, F.mul(a[i], sg(j))), e); };
  auto rhs = [&](std::uint32_t j0, std::uint32_t j1, std::uint32_t j2, std::uint32_t j3) {
    return F.add(F.add(term(0, j0, 0), term(1, j1, 3)), F.add(term(2, j2, 2), term(3, j3, 1)));
  };
  std::vector<FElem> res(4);
  res[0] = F.sub(F.sub(F.add(C, F.mul(D, sg(0))), F.mul(a[0], A)), rhs(0, 1, 2, 3));
  res[1] = F.sub(F.sub(F.mul(D, sg(1)), fr(F.mul(a[3], A), 1)), rhs(1, 2, 3, 0));
  res[2] = F.sub(F.sub(F.mul(D, sg(2)), fr(F.mul(a[2], A), 2)), rhs(2, 3, 0, 1));
  res[3] = F.sub(F.sub(F.mul(D, sg(3)), fr(F.mul(a[1], A), 3)), rhs(3, 0, 1, 2));
  return res;
}

bool nonsimple_criterion(const FieldCtx& F, FElem delta) {
  if (delta.is_zero()) return false;
  const std::uint64_t gm = F.group_order();
  const std::uint64_t cofactor = gm / (F.q() - 1);
  std::uint64_t pk = 1;
  for (std::uint32_t k = 0; k < F.degree(); ++k) {
    const std::uint64_t base = (mulmod(pk, F.q(), gm) + 1) % gm;
    if (F.pow(delta, mulmod(base, cofactor, gm)) == F.one()) return false;
    pk = mulmod(pk, F.p(), gm);
  }
  return true;
}

bool nonsimple_equation_solvable(const FieldCtx& F, FElem delta, std::uint32_t k) {
  const std::uint64_t gm = F.group_order();
  std::uint64_t pk = 1;
  for (std::uint32_t i = 0; i < k; ++i) pk = mulmod(pk, F.p(), gm);
  const FElem lhs = F.pow(delta, (mulmod(pk, F.q(), gm) + 1) % gm + gm);
  const std::uint64_t e = static_cast<std::uint64_t>(F.q()) * F.q() - 1;
  for (std::uint64_t x = 1; x < F.order(); ++x) {
    if (F.pow(FElem{static_cast<std::uint32_t>(x)}, e) == lhs) return true;
  }
  return false;
}

QPoly sheekey_poly(const FieldCtx& F, FElem delta) {
  QPoly f = qpoly_zero(F);
  f[1] = delta;
  f[F.n() - 1] = F.add(f[F.n() - 1], F.one());
  return f;
}

SemilinearMap normalize_to_graph(const FieldCtx& F, const FqSubspace& U) {
  std::vector<std::uint8_t> on(F.order() + 1, 0);
  for_each_nonzero(F, U.basis(F), [&](const Vec& v) { on[PointPG1::of(F, v[0], v[1]).key] = 1; });
  for (FElem t : generator_order(F)) {
    if (!on[F.neg(t).v]) return SemilinearMap{t, F.one(), F.one(), F.zero(), 0};
  }
  throw Error(ErrorKind::BadParams, "the linear set covers the whole line");
}

}  // namespace linset
