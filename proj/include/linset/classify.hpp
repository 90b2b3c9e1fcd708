#pragma once

// Which q-polynomials define the same linear set, and how they relate under
// F_{q^n}^* scaling and under the semilinear group.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linset/finitefield.hpp"
#include "linset/projline.hpp"
#include "linset/qpoly.hpp"
#include "linset/runtime.hpp"

namespace linset {

// (x, y) -> (A x^s + B y^s, C x^s + D y^s) with s = p^k.
struct SemilinearMap {
  FElem A, B, C, D;
  std::uint32_t k = 0;

  friend bool operator==(const SemilinearMap&, const SemilinearMap&) = default;
};

bool is_invertible(const FieldCtx& F, const SemilinearMap& m);
Vec apply(const FieldCtx& F, const SemilinearMap& m, const Vec& v);
FqSubspace apply(const FieldCtx& F, const SemilinearMap& m, const FqSubspace& U);

// sum over nonzero x of (f(x)/x)^d
FElem power_sum(const FieldCtx& F, const QPoly& f, std::uint64_t d);

struct IdentityCheck {
  std::string name;
  bool pass = false;
};

struct CheckResult {
  std::vector<IdentityCheck> checks;
  bool all_pass() const;
};

// Coefficient identities that hold whenever L_f = L_g: equal constant terms,
// a_k a_{n-k}^{q^k} = b_k b_{n-k}^{q^k}, the cubic family for k = 2..n-1, and
// for n = 4 the norm identity.
CheckResult coefficient_identities(const FieldCtx& F, const QPoly& f, const QPoly& g);

// Left-hand side of the rank-4 norm identity for f.
FElem n4_norm_form(const FieldCtx& F, const QPoly& f);

struct EnumerateOptions : RunOptions {
  bool prune = true;
};

// All g with L_g = L_f, sorted. Throws MaxFieldTooLarge unless f has maximum
// field of linearity F_q.
std::vector<QPoly> enumerate_equal_polys(const FieldCtx& F, const QPoly& f, const EnumerateOptions& opt = {});

// Number of candidates the pruned search would visit.
std::uint64_t pruned_candidate_count(const FieldCtx& F, const QPoly& f);

// Tests whether L_g equals a fixed target point set, reusing scratch space.
class DirectionMatcher {
 public:
  DirectionMatcher(const FieldCtx& F, const QPoly& f);
  // Target given directly as a point set avoiding (0,1).
  DirectionMatcher(const FieldCtx& F, const std::vector<PointPG1>& target);
  bool matches(const QPoly& g);
  std::uint64_t target_size() const { return target_size_; }

 private:
  const FieldCtx& F_;
  std::vector<std::uint8_t> target_;
  std::uint64_t target_size_ = 0;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<std::vector<std::uint32_t>> exps_;  // (q^i - 1) log x, per i

  void init_tables();
};

// Orbit of g under g -> scale_conjugate(g, lambda), sorted and deduplicated.
std::vector<QPoly> scaling_orbit(const FieldCtx& F, const QPoly& g);

struct ZglResult {
  std::vector<QPoly> equal_polys;
  std::vector<QPoly> representatives;  // smallest member of each orbit
  std::vector<std::size_t> orbit_of;   // per equal poly, index into representatives
  std::size_t zgl_class() const { return representatives.size(); }
};

ZglResult zgl_class(const FieldCtx& F, const QPoly& f, const EnumerateOptions& opt = {});
ZglResult zgl_partition(const FieldCtx& F, std::vector<QPoly> equal_polys);

// Some semilinear map taking U_f onto U_g, or nullopt if none exists.
std::optional<SemilinearMap> semilinear_equivalence(const FieldCtx& F, const QPoly& f, const QPoly& g);
// The same question answered by sweeping every (k, A, B).
std::optional<SemilinearMap> semilinear_equivalence_naive(const FieldCtx& F, const QPoly& f, const QPoly& g);

struct Witness {
  std::size_t from = 0;  // representative indices
  std::size_t to = 0;
  SemilinearMap map;
};

struct ClassReport {
  ZglResult zgl;
  std::vector<std::vector<std::size_t>> blocks;  // representative indices
  std::vector<Witness> witnesses;
  std::size_t gl_class() const { return blocks.size(); }
  bool simple() const { return blocks.size() == 1; }
  // Block containing g (which must be one of zgl.equal_polys).
  std::size_t block_of(const QPoly& g) const;
};

ClassReport gl_class(const FieldCtx& F, const QPoly& f, const EnumerateOptions& opt = {});
ClassReport gl_partition(const FieldCtx& F, ZglResult zgl);

// Rank-4 check: g equals scale_conjugate(f, l) or scale_conjugate(adjoint(f), l)
// for some l. Throws WrongN unless n = 4.
bool n4_form_check(const FieldCtx& F, const QPoly& f, const QPoly& g);

// Residuals of the n equations characterizing a semilinear map between U_f and
// U_{adjoint(f)}; all zero iff the map (A, B, C, D, p^k) takes U_f onto U_{f^}.
std::vector<FElem> adjoint_system_residuals(const FieldCtx& F, const QPoly& f, const SemilinearMap& m);
// The n = 4 system written out term by term.
std::vector<FElem> adjoint_system_residuals_n4(const FieldCtx& F, const QPoly& f, const SemilinearMap& m);

// For f = delta x^q + x^{q^{n-1}}: true iff delta^{(p^k q + 1)(q^n - 1)/(q - 1)} != 1
// for every k, which rules out any semilinear map between U_f and U_{f^}.
bool nonsimple_criterion(const FieldCtx& F, FElem delta);
// Whether delta^{p^k q + 1} = A^{q^2 - 1} has a solution A != 0.
bool nonsimple_equation_solvable(const FieldCtx& F, FElem delta, std::uint32_t k);
QPoly sheekey_poly(const FieldCtx& F, FElem delta);

// For U meeting <(0,1)>: the map (x, y) -> (t x + y, x) with the first t (in
// the order 0, g^0, g^1, ...) whose image avoids <(0,1)>.
SemilinearMap normalize_to_graph(const FieldCtx& F, const FqSubspace& U);

}  // namespace linset
