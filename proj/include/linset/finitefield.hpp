#pragma once

// Arithmetic in the tower F_p <= F_q = F_{p^e} <= F_{q^n}.
//
// Elements are encoded as the base-p integer of their coordinate vector with
// respect to the polynomial basis 1, x, ..., x^{en-1} of F_p[x]/(modulus):
// digit i (weight p^i) is the coefficient of x^i. Zero is 0 and one is 1.
//
// Fields with at most `table_limit` elements carry log/antilog tables (plus a
// Zech table in odd characteristic); larger fields fall back to polynomial
// arithmetic modulo the defining polynomial.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "linset/error.hpp"

namespace linset {

struct FElem {
  std::uint32_t v = 0;

  constexpr FElem() = default;
  constexpr explicit FElem(std::uint32_t value) : v(value) {}

  constexpr bool is_zero() const { return v == 0; }
  friend constexpr bool operator==(FElem, FElem) = default;
  friend constexpr auto operator<=>(FElem, FElem) = default;
};

struct FElemHash {
  std::size_t operator()(FElem x) const noexcept { return std::hash<std::uint32_t>{}(x.v); }
};

// Serializable description of a field: enough to rebuild it bit-for-bit.
struct FieldSpec {
  std::uint32_t p = 0;
  std::uint32_t e = 0;
  std::uint32_t n = 0;
  std::vector<std::uint32_t> modulus;  // c_0 .. c_{en}, monic
};

inline constexpr std::uint64_t kDefaultFieldBudget = 1ull << 32;
inline constexpr std::uint64_t kDefaultTableLimit = 1ull << 24;

bool is_prime(std::uint64_t x);
std::vector<std::uint64_t> prime_factors(std::uint64_t x);

class FieldCtx {
 public:
  // Builds F_{q^n} with q = p^e. Without an explicit modulus the monic
  // irreducible of degree e*n with the smallest base-p encoding is used.
  static FieldCtx build(std::uint32_t p, std::uint32_t e, std::uint32_t n,
                        std::optional<std::vector<std::uint32_t>> modulus = std::nullopt,
                        std::uint64_t budget = kDefaultFieldBudget,
                        std::uint64_t table_limit = kDefaultTableLimit);

  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint32_t n() const { return n_; }
  std::uint32_t q() const { return q_; }
  std::uint32_t degree() const { return m_; }  // e*n
  std::uint64_t order() const { return order_; }  // q^n
  std::uint64_t group_order() const { return order_ - 1; }
  const FieldSpec& spec() const { return spec_; }
  bool has_tables() const { return !exp_.empty(); }

  FElem zero() const { return FElem{0}; }
  FElem one() const { return FElem{1}; }
  FElem generator() const { return gen_; }

  // Validating conversion from an encoding.
  FElem from_int(std::uint64_t v) const;
  // The image of an integer in the prime field.
  FElem scalar(std::int64_t c) const;

  FElem add(FElem a, FElem b) const {
    if (p_ == 2) return FElem{a.v ^ b.v};
    if (a.v == 0) return b;
    if (b.v == 0) return a;
    if (!exp_.empty()) {
      const std::uint32_t la = log_[a.v];
      const std::uint32_t lb = log_[b.v];
      const std::uint32_t d = lb >= la ? lb - la : lb + gmod_ - la;
      const std::int32_t z = zech_[d];
      if (z < 0) return FElem{0};
      return FElem{exp_[la + static_cast<std::uint32_t>(z)]};
    }
    return add_slow(a, b);
  }

  FElem neg(FElem a) const {
    if (p_ == 2 || a.v == 0) return a;
    if (!exp_.empty()) return FElem{exp_[log_[a.v] + half_]};
    return neg_slow(a);
  }

  FElem sub(FElem a, FElem b) const { return add(a, neg(b)); }

  FElem mul(FElem a, FElem b) const {
    if (a.v == 0 || b.v == 0) return FElem{0};
    if (!exp_.empty()) return FElem{exp_[log_[a.v] + log_[b.v]]};
    return mul_slow(a, b);
  }

  FElem inv(FElem a) const;
  FElem div(FElem a, FElem b) const { return mul(a, inv(b)); }
  FElem pow(FElem a, std::uint64_t k) const;

  // x^{q^i}, i taken modulo n (negative i allowed).
  FElem frob(FElem a, std::int64_t i) const {
    if (a.v == 0) return a;
    const std::uint32_t r = reduce_index(i, n_);
    if (r == 0) return a;
    if (!exp_.empty()) {
      return FElem{exp_[static_cast<std::uint32_t>(
          (static_cast<std::uint64_t>(log_[a.v]) * qpow_mod_[r]) % gmod_)]};
    }
    return pow(a, qpow_mod_[r]);
  }

  // x^{p^k}, k taken modulo e*n.
  FElem frob_p(FElem a, std::int64_t k) const;

  // Tr_{q^n/q^h}; throws BadSubfield unless h | n.
  FElem trace(FElem a, std::uint32_t h = 1) const;
  // N_{q^n/q}.
  FElem norm(FElem a) const;
  bool in_subfield(FElem a, std::uint32_t h) const;

  // Discrete log base the generator (tables required, a != 0).
  std::uint32_t log(FElem a) const;
  // generator^k for any k (works with or without tables).
  FElem gen_pow(std::uint64_t k) const;

  // q^i mod (q^n - 1), 0 <= i < n.
  std::uint64_t qpow_mod(std::uint32_t i) const { return qpow_mod_[i % n_]; }

  // Elements of the subfield F_q, sorted by encoding (zero first).
  const std::vector<FElem>& fq_elements() const { return fq_elems_; }
  // Fixed F_q-basis 1, g, ..., g^{n-1} of F_{q^n}.
  const std::vector<FElem>& fq_basis() const { return fq_basis_; }
  // Coordinates over F_q with respect to fq_basis().
  void fq_coords_into(FElem x, std::span<FElem> out) const;
  std::vector<FElem> fq_coords(FElem x) const;
  FElem from_fq_coords(std::span<const FElem> c) const;
  // Coordinates computed by solving over F_p (independent of the lookup table).
  std::vector<FElem> fq_coords_solved(FElem x) const;

  std::vector<std::uint32_t> digits(FElem x) const;
  FElem from_digits(std::span<const std::uint32_t> d) const;

  // Raw tables for hot loops; valid only when has_tables().
  const std::uint32_t* log_table() const { return log_.data(); }
  const std::uint32_t* exp_table() const { return exp_.data(); }

 private:
  FieldCtx() = default;

  static std::uint32_t reduce_index(std::int64_t i, std::uint32_t mod) {
    const std::int64_t r = i % static_cast<std::int64_t>(mod);
    return static_cast<std::uint32_t>(r < 0 ? r + mod : r);
  }

  FElem add_slow(FElem a, FElem b) const;
  FElem neg_slow(FElem a) const;
  FElem mul_slow(FElem a, FElem b) const;
  FElem pow_slow(FElem a, std::uint64_t k) const;

  void build_tables();
  void build_subfield();

  std::uint32_t p_ = 0, e_ = 0, n_ = 0, q_ = 0, m_ = 0;
  std::uint64_t order_ = 0;
  std::uint32_t gmod_ = 0;  // q^n - 1
  std::uint32_t half_ = 0;  // (q^n - 1) / 2, log of -1 in odd characteristic
  FieldSpec spec_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint64_t> pw_;  // p^i for i <= m
  FElem gen_;
  std::vector<std::uint64_t> qpow_mod_;

  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;  // length 2(q^n - 1)
  std::vector<std::int32_t> zech_;

  std::vector<FElem> fq_elems_;
  std::vector<FElem> fq_basis_;
  std::vector<FElem> coord_table_;  // n entries per element when small enough
  std::vector<std::uint32_t> fp_inverse_;  // m x m over F_p, maps digits to subfield-basis coords
  FElem fq_gen_;
};

}  // namespace linset
