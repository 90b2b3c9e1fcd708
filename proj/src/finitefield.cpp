#include "linset/finitefield.hpp"

#include <algorithm>
#include <limits>

namespace linset {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPrimeP: return "NonPrimeP";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::BadSubfield: return "BadSubfield";
    case ErrorKind::ZeroScalar: return "ZeroScalar";
    case ErrorKind::NotAGraph: return "NotAGraph";
    case ErrorKind::WrongRank: return "WrongRank";
    case ErrorKind::MaxFieldTooLarge: return "MaxFieldTooLarge";
    case ErrorKind::PointAtInfinity: return "PointAtInfinity";
    case ErrorKind::WrongN: return "WrongN";
    case ErrorKind::DegeneratePoly: return "DegeneratePoly";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::CenterMeetsSubgeometry: return "CenterMeetsSubgeometry";
    case ErrorKind::CenterMeetsAxis: return "CenterMeetsAxis";
    case ErrorKind::BadAffinePoint: return "BadAffinePoint";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::InternalConsistency: return "InternalConsistency";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t d = 2; d * d <= x; ++d) {
    if (x % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t x) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= x; ++d) {
    if (x % d == 0) {
      out.push_back(d);
      while (x % d == 0) x /= d;
    }
  }
  if (x > 1) out.push_back(x);
  return out;
}

namespace {

// Dense polynomials over F_p, coefficient i at index i, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a % p, k = p - 2;
  while (k) {
    if (k & 1) result = result * base % p;
    base = base * base % p;
    k >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

// a mod b for any nonzero b.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = factor * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return poly_mod(std::move(prod), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t k, const Poly& f, std::uint32_t p) {
  Poly result{1};
  base = poly_mod(std::move(base), f, p);
  while (k) {
    if (k & 1) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    k >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly poly_sub(Poly a, const Poly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

// Rabin's irreducibility test for a monic polynomial of degree >= 1.
bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t m = f.size() - 1;
  if (m == 0) return false;
  if (m == 1) return true;
  const Poly x{0, 1};
  std::vector<Poly> frob_pows(m + 1);  // x^{p^i} mod f
  frob_pows[0] = poly_mod(x, f, p);
  for (std::size_t i = 1; i <= m; ++i) frob_pows[i] = poly_powmod(frob_pows[i - 1], p, f, p);
  if (poly_sub(frob_pows[m], x, p) != Poly{}) return false;
  for (std::uint64_t r : prime_factors(m)) {
    const Poly diff = poly_sub(frob_pows[m / r], x, p);
    const Poly g = poly_gcd(f, diff, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

FieldCtx FieldCtx::build(std::uint32_t p, std::uint32_t e, std::uint32_t n,
                         std::optional<std::vector<std::uint32_t>> modulus, std::uint64_t budget,
                         std::uint64_t table_limit) {
  if (!is_prime(p)) throw Error(ErrorKind::NonPrimeP, std::to_string(p) + " is not prime");
  if (e < 1) throw Error(ErrorKind::BadParams, "e must be at least 1");
  if (n < 2) throw Error(ErrorKind::BadParams, "n must be at least 2 for PG(1,q^n)");

  FieldCtx ctx;
  ctx.p_ = p;
  ctx.e_ = e;
  ctx.n_ = n;
  ctx.m_ = e * n;
  const std::uint64_t limit = std::min<std::uint64_t>(budget, 1ull << 32);
  std::uint64_t order = 1;
  ctx.pw_.push_back(1);
  for (std::uint32_t i = 0; i < ctx.m_; ++i) {
    if (order > limit / p) {
      throw Error(ErrorKind::BudgetExceeded,
                  "field of size " + std::to_string(p) + "^" + std::to_string(ctx.m_) +
                      " exceeds budget " + std::to_string(limit));
    }
    order *= p;
    ctx.pw_.push_back(order);
  }
  ctx.order_ = order;
  ctx.q_ = static_cast<std::uint32_t>(ctx.pw_[e]);
  ctx.gmod_ = static_cast<std::uint32_t>(order - 1);
  ctx.half_ = p == 2 ? 0 : ctx.gmod_ / 2;

  if (modulus) {
    Poly f = *modulus;
    if (f.size() != ctx.m_ + 1 || f.back() != 1) {
      throw Error(ErrorKind::BadParams, "modulus must be monic of degree e*n");
    }
    for (auto c : f) {
      if (c >= p) throw Error(ErrorKind::BadParams, "modulus coefficient out of range");
    }
    if (!is_irreducible(f, p)) throw Error(ErrorKind::ReducibleModulus, "modulus is reducible over F_p");
    ctx.modulus_ = std::move(f);
  } else {
    const std::uint64_t count = order;  // p^m candidates for the low coefficients
    for (std::uint64_t t = 0; t < count; ++t) {
      Poly f(ctx.m_ + 1, 0);
      std::uint64_t r = t;
      for (std::uint32_t i = 0; i < ctx.m_; ++i) {
        f[i] = static_cast<std::uint32_t>(r % p);
        r /= p;
      }
      f[ctx.m_] = 1;
      if (is_irreducible(f, p)) {
        ctx.modulus_ = std::move(f);
        break;
      }
    }
  }
  ctx.spec_ = FieldSpec{p, e, n, ctx.modulus_};

  ctx.qpow_mod_.resize(n);
  {
    std::uint64_t acc = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
      ctx.qpow_mod_[i] = acc % ctx.gmod_;
      acc = (acc * ctx.q_) % ctx.gmod_;
    }
  }

  // Smallest-encoding element of multiplicative order q^n - 1.
  const auto factors = prime_factors(ctx.gmod_);
  for (std::uint64_t c = 1; c < order; ++c) {
    const FElem cand{static_cast<std::uint32_t>(c)};
    bool primitive = true;
    for (std::uint64_t r : factors) {
      if (ctx.pow_slow(cand, ctx.gmod_ / r).v == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      ctx.gen_ = cand;
      break;
    }
  }

  if (order <= table_limit) ctx.build_tables();
  ctx.build_subfield();
  return ctx;
}

void FieldCtx::build_tables() {
  const std::uint32_t g = gmod_;
  exp_.assign(2ull * g, 0);
  log_.assign(order_, 0);
  FElem cur{1};
  for (std::uint32_t k = 0; k < g; ++k) {
    exp_[k] = cur.v;
    exp_[k + g] = cur.v;
    log_[cur.v] = k;
    cur = mul_slow(cur, gen_);
  }
  if (cur.v != 1) throw Error(ErrorKind::InternalConsistency, "generator order mismatch");
  if (p_ != 2) {
    zech_.assign(g, -1);
    for (std::uint32_t k = 0; k < g; ++k) {
      const std::uint32_t v = exp_[k];
      const std::uint32_t d0 = v % p_;
      const std::uint32_t w = v - d0 + (d0 + 1) % p_;
      zech_[k] = w == 0 ? -1 : static_cast<std::int32_t>(log_[w]);
    }
  }
}

void FieldCtx::build_subfield() {
  fq_gen_ = gen_pow(gmod_ / (q_ - 1));
  fq_elems_.clear();
  fq_elems_.push_back(zero());
  FElem cur = one();
  for (std::uint32_t t = 0; t + 1 < q_; ++t) {
    fq_elems_.push_back(cur);
    cur = mul(cur, fq_gen_);
  }
  std::sort(fq_elems_.begin(), fq_elems_.end());

  fq_basis_.clear();
  for (std::uint32_t j = 0; j < n_; ++j) fq_basis_.push_back(gen_pow(j));

  // F_p-matrix whose column s + e*j holds the digits of gamma^s g^j, inverted.
  const std::uint32_t m = m_;
  std::vector<std::uint32_t> a(static_cast<std::size_t>(m) * 2 * m, 0);
  auto at = [&](std::uint32_t r, std::uint32_t c) -> std::uint32_t& { return a[r * 2 * m + c]; };
  for (std::uint32_t j = 0; j < n_; ++j) {
    FElem gs = fq_basis_[j];
    for (std::uint32_t s = 0; s < e_; ++s) {
      const auto d = digits(gs);
      for (std::uint32_t r = 0; r < m; ++r) at(r, s + e_ * j) = d[r];
      gs = mul(gs, fq_gen_);
    }
  }
  for (std::uint32_t r = 0; r < m; ++r) at(r, m + r) = 1;
  for (std::uint32_t col = 0; col < m; ++col) {
    std::uint32_t piv = col;
    while (piv < m && at(piv, col) == 0) ++piv;
    if (piv == m) throw Error(ErrorKind::InternalConsistency, "subfield basis is singular");
    if (piv != col) {
      for (std::uint32_t c = 0; c < 2 * m; ++c) std::swap(at(piv, c), at(col, c));
    }
    const std::uint64_t iv = inv_mod(at(col, col), p_);
    for (std::uint32_t c = 0; c < 2 * m; ++c) at(col, c) = static_cast<std::uint32_t>(at(col, c) * iv % p_);
    for (std::uint32_t r = 0; r < m; ++r) {
      if (r == col || at(r, col) == 0) continue;
      const std::uint64_t factor = at(r, col);
      for (std::uint32_t c = 0; c < 2 * m; ++c) {
        at(r, c) = static_cast<std::uint32_t>((at(r, c) + p_ - factor * at(col, c) % p_) % p_);
      }
    }
  }
  fp_inverse_.assign(static_cast<std::size_t>(m) * m, 0);
  for (std::uint32_t r = 0; r < m; ++r) {
    for (std::uint32_t c = 0; c < m; ++c) fp_inverse_[r * m + c] = at(r, m + c);
  }

  coord_table_.clear();
  if (order_ * n_ <= (1ull << 22)) {
    coord_table_.assign(order_ * n_, FElem{});
    std::vector<std::uint32_t> idx(n_, 0);
    for (std::uint64_t t = 0; t < order_; ++t) {
      std::uint64_t r = t;
      FElem x = zero();
      for (std::uint32_t j = 0; j < n_; ++j) {
        idx[j] = static_cast<std::uint32_t>(r % q_);
        r /= q_;
        x = add(x, mul(fq_elems_[idx[j]], fq_basis_[j]));
      }
      for (std::uint32_t j = 0; j < n_; ++j) coord_table_[x.v * n_ + j] = fq_elems_[idx[j]];
    }
  }
}

FElem FieldCtx::from_int(std::uint64_t v) const {
  if (v >= order_) {
    throw Error(ErrorKind::BadParams,
                "encoding " + std::to_string(v) + " out of range for field of size " + std::to_string(order_));
  }
  return FElem{static_cast<std::uint32_t>(v)};
}

FElem FieldCtx::scalar(std::int64_t c) const {
  std::int64_t r = c % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return FElem{static_cast<std::uint32_t>(r)};
}

std::vector<std::uint32_t> FieldCtx::digits(FElem x) const {
  std::vector<std::uint32_t> d(m_);
  std::uint32_t v = x.v;
  for (std::uint32_t i = 0; i < m_; ++i) {
    d[i] = v % p_;
    v /= p_;
  }
  return d;
}

FElem FieldCtx::from_digits(std::span<const std::uint32_t> d) const {
  std::uint64_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p_ + (d[i] % p_);
  return FElem{static_cast<std::uint32_t>(v)};
}

FElem FieldCtx::add_slow(FElem a, FElem b) const {
  std::uint64_t v = 0;
  std::uint32_t x = a.v, y = b.v;
  for (std::uint32_t i = 0; i < m_; ++i) {
    v += ((x % p_ + y % p_) % p_) * pw_[i];
    x /= p_;
    y /= p_;
  }
  return FElem{static_cast<std::uint32_t>(v)};
}

FElem FieldCtx::neg_slow(FElem a) const {
  std::uint64_t v = 0;
  std::uint32_t x = a.v;
  for (std::uint32_t i = 0; i < m_; ++i) {
    v += ((p_ - x % p_) % p_) * pw_[i];
    x /= p_;
  }
  return FElem{static_cast<std::uint32_t>(v)};
}

FElem FieldCtx::mul_slow(FElem a, FElem b) const {
  if (a.v == 0 || b.v == 0) return FElem{0};
  if (p_ == 2) {
    // Carry-less product of bit vectors reduced by the modulus.
    std::uint64_t prod = 0;
    const std::uint64_t av = a.v;
    std::uint32_t bv = b.v;
    for (std::uint32_t i = 0; bv; ++i, bv >>= 1) {
      if (bv & 1) prod ^= av << i;
    }
    std::uint64_t mod = 0;
    for (std::uint32_t i = 0; i <= m_; ++i) {
      if (modulus_[i]) mod |= 1ull << i;
    }
    for (std::uint32_t bit = 2 * m_; bit-- > m_;) {
      if (prod >> bit & 1) prod ^= mod << (bit - m_);
    }
    return FElem{static_cast<std::uint32_t>(prod)};
  }
  const auto da = digits(a);
  const auto db = digits(b);
  std::vector<std::uint64_t> prod(2 * m_ - 1, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < m_; ++j) {
      if (db[j] == 0) continue;
      prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p_;
    }
  }
  for (std::uint32_t deg = 2 * m_ - 1; deg-- > m_;) {
    const std::uint64_t c = prod[deg];
    if (c == 0) continue;
    for (std::uint32_t i = 0; i < m_; ++i) {
      const std::uint32_t pos = deg - m_ + i;
      prod[pos] = (prod[pos] + p_ - c * modulus_[i] % p_) % p_;
    }
    prod[deg] = 0;
  }
  std::uint64_t v = 0;
  for (std::uint32_t i = m_; i-- > 0;) v = v * p_ + prod[i];
  return FElem{static_cast<std::uint32_t>(v)};
}

FElem FieldCtx::pow_slow(FElem a, std::uint64_t k) const {
  FElem result = one();
  FElem base = a;
  while (k) {
    if (k & 1) result = mul_slow(result, base);
    base = mul_slow(base, base);
    k >>= 1;
  }
  return result;
}

FElem FieldCtx::inv(FElem a) const {
  if (a.v == 0) throw Error(ErrorKind::ZeroScalar, "inverse of zero");
  if (!exp_.empty()) return FElem{exp_[(gmod_ - log_[a.v]) % gmod_]};
  return pow_slow(a, order_ - 2);
}

FElem FieldCtx::pow(FElem a, std::uint64_t k) const {
  if (k == 0) return one();
  if (a.v == 0) return zero();
  std::uint64_t r = k % gmod_;
  if (!exp_.empty()) return FElem{exp_[static_cast<std::uint32_t>((log_[a.v] * r) % gmod_)]};
  return pow_slow(a, r);
}

FElem FieldCtx::frob_p(FElem a, std::int64_t k) const {
  const std::uint32_t r = reduce_index(k, m_);
  return pow(a, pw_[r]);
}

FElem FieldCtx::trace(FElem a, std::uint32_t h) const {
  if (h == 0 || n_ % h != 0) throw Error(ErrorKind::BadSubfield, "subfield degree must divide n");
  FElem sum = zero();
  for (std::uint32_t j = 0; j < n_; j += h) sum = add(sum, frob(a, j));
  return sum;
}

FElem FieldCtx::norm(FElem a) const { return pow(a, gmod_ / (q_ - 1)); }

bool FieldCtx::in_subfield(FElem a, std::uint32_t h) const {
  if (h == 0 || n_ % h != 0) throw Error(ErrorKind::BadSubfield, "subfield degree must divide n");
  return frob(a, h) == a;
}

std::uint32_t FieldCtx::log(FElem a) const {
  if (exp_.empty()) throw Error(ErrorKind::BadParams, "discrete log requires lookup tables");
  if (a.v == 0) throw Error(ErrorKind::ZeroScalar, "log of zero");
  return log_[a.v];
}

FElem FieldCtx::gen_pow(std::uint64_t k) const {
  const std::uint64_t r = k % gmod_;
  if (!exp_.empty()) return FElem{exp_[r]};
  return pow_slow(gen_, r);
}

void FieldCtx::fq_coords_into(FElem x, std::span<FElem> out) const {
  if (!coord_table_.empty()) {
    const FElem* src = coord_table_.data() + static_cast<std::size_t>(x.v) * n_;
    std::copy(src, src + n_, out.begin());
    return;
  }
  const auto c = fq_coords_solved(x);
  std::copy(c.begin(), c.end(), out.begin());
}

std::vector<FElem> FieldCtx::fq_coords(FElem x) const {
  std::vector<FElem> out(n_);
  fq_coords_into(x, out);
  return out;
}

std::vector<FElem> FieldCtx::fq_coords_solved(FElem x) const {
  const auto d = digits(x);
  std::vector<std::uint32_t> sol(m_, 0);
  for (std::uint32_t r = 0; r < m_; ++r) {
    std::uint64_t acc = 0;
    for (std::uint32_t c = 0; c < m_; ++c) acc += static_cast<std::uint64_t>(fp_inverse_[r * m_ + c]) * d[c];
    sol[r] = static_cast<std::uint32_t>(acc % p_);
  }
  std::vector<FElem> out(n_, zero());
  for (std::uint32_t j = 0; j < n_; ++j) {
    FElem gs = one();
    FElem acc = zero();
    for (std::uint32_t s = 0; s < e_; ++s) {
      acc = add(acc, mul(scalar(sol[s + e_ * j]), gs));
      gs = mul(gs, fq_gen_);
    }
    out[j] = acc;
  }
  return out;
}

FElem FieldCtx::from_fq_coords(std::span<const FElem> c) const {
  FElem x = zero();
  for (std::size_t j = 0; j < c.size(); ++j) x = add(x, mul(c[j], fq_basis_[j]));
  return x;
}

}  // namespace linset
