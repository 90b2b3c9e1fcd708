#pragma once

// Linear sets as projections of the rational subgeometry PG(n-1,q) of
// PG(n-1,q^n), Redei-type blocking sets of PG(2,q^n), and transversal spaces.

#include <cstdint>
#include <functional>
#include <vector>

#include "linset/finitefield.hpp"
#include "linset/projline.hpp"
#include "linset/qpoly.hpp"
#include "linset/runtime.hpp"

namespace linset {

// Center (n-2 spanning vectors) and axis (2 spanning vectors) in F_{q^n}^n.
// The subgeometry is always the one of points with F_q-rational coordinates.
struct ProjectionConfig {
  std::vector<Vec> center;
  std::vector<Vec> axis;
};

struct ProjectionResult {
  // Defining subspace in axis coordinates: the image of F_q^n in F_{q^n}^2.
  FqSubspace subspace;
  // Projected points, keyed as points of PG(1,q^n) in axis coordinates.
  std::vector<PointPG1> points;
  bool spans_axis = false;
};

// Throws CenterMeetsAxis, CenterMeetsSubgeometry, BudgetExceeded.
ProjectionResult project_subgeometry(const FieldCtx& F, const ProjectionConfig& cfg,
                                     std::uint64_t budget = default_budget());

// A config whose projection is L_f with defining subspace exactly U_f.
// Throws MaxFieldTooLarge unless the maximum field of linearity is F_q.
ProjectionConfig realize_as_projection(const FieldCtx& F, const QPoly& f);

struct BlockingSet {
  std::vector<std::uint64_t> points;  // keys in PG(2,q^n), sorted
  std::uint64_t line_part = 0;        // |L_U|
};

// L_<U, w> in PG(2,q^n), with U placed on the line z = 0.
// Throws WrongRank unless dim U = n, BadAffinePoint if w lies on z = 0.
BlockingSet redei_blocking_set(const FieldCtx& F, const FqSubspace& U, const Vec& w);

struct BlockingReport {
  std::uint64_t size = 0;
  bool is_blocking = false;
  std::uint64_t N = 0;  // size - q^n
  std::vector<std::uint64_t> redei_lines;  // keys (dual coordinates) of the N-secants
};

BlockingReport blocking_checks(const FieldCtx& F, const std::vector<std::uint64_t>& points,
                               std::uint64_t budget = default_budget());

// The points [a:b:c] of PG(2,q^n) on the line with dual key `line`.
bool on_line(const FieldCtx& F, std::uint64_t line, const Vec& point);

// Number of scaling classes V ~ lV of n-dimensional subspaces V with L_V = L_U.
// The graph route requires (0,1) not in L_U; the full route sweeps every
// n-dimensional subspace of F_q^{2n}.
std::uint64_t transversal_spaces(const FieldCtx& F, const FqSubspace& U, bool full_sweep = false,
                                 std::uint64_t budget = default_budget());

// Sorted keys of L_U for any U of F_{q^n}^2.
std::vector<PointPG1> point_set(const FieldCtx& F, const FqSubspace& U);

// Every dim-dimensional F_q-subspace of F_{q^n}^2, in canonical form.
void for_each_subspace(const FieldCtx& F, std::size_t dim, const std::function<void(const FqSubspace&)>& fn);

}  // namespace linset
