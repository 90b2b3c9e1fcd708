#include "linset/qpoly.hpp"

#include <charconv>

namespace linset {

bool QPoly::is_zero() const {
  for (auto x : c) {
    if (!x.is_zero()) return false;
  }
  return true;
}

std::size_t QPolyHash::operator()(const QPoly& f) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : f.c) {
    h ^= x.v;
    h *= 1099511628211ull;
  }
  return h;
}

QPoly qpoly_zero(const FieldCtx& F) { return QPoly{std::vector<FElem>(F.n(), F.zero())}; }

QPoly qpoly_identity(const FieldCtx& F) { return qpoly_monomial(F, 0); }

QPoly qpoly_monomial(const FieldCtx& F, std::uint32_t i, FElem a) {
  QPoly f = qpoly_zero(F);
  f[i % F.n()] = a;
  return f;
}

QPoly trace_poly(const FieldCtx& F) { return QPoly{std::vector<FElem>(F.n(), F.one())}; }

FElem evaluate(const FieldCtx& F, const QPoly& f, FElem x) {
  FElem sum = F.zero();
  for (std::uint32_t i = 0; i < f.size(); ++i) {
    if (!f[i].is_zero()) sum = F.add(sum, F.mul(f[i], F.frob(x, i)));
  }
  return sum;
}

QPoly add(const FieldCtx& F, const QPoly& f, const QPoly& g) {
  QPoly h = f;
  for (std::size_t i = 0; i < h.size(); ++i) h[i] = F.add(f[i], g[i]);
  return h;
}

QPoly sub(const FieldCtx& F, const QPoly& f, const QPoly& g) {
  QPoly h = f;
  for (std::size_t i = 0; i < h.size(); ++i) h[i] = F.sub(f[i], g[i]);
  return h;
}

QPoly scale(const FieldCtx& F, FElem a, const QPoly& f) {
  QPoly h = f;
  for (auto& x : h.c) x = F.mul(a, x);
  return h;
}

QPoly adjoint(const FieldCtx& F, const QPoly& f) {
  const std::uint32_t n = F.n();
  QPoly h = qpoly_zero(F);
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t j = (n - i) % n;
    h[j] = F.frob(f[i], j);
  }
  return h;
}

QPoly compose(const FieldCtx& F, const QPoly& f, const QPoly& g) {
  const std::uint32_t n = F.n();
  QPoly h = qpoly_zero(F);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (f[i].is_zero()) continue;
    for (std::uint32_t j = 0; j < n; ++j) {
      if (g[j].is_zero()) continue;
      const std::uint32_t k = (i + j) % n;
      h[k] = F.add(h[k], F.mul(f[i], F.frob(g[j], i)));
    }
  }
  return h;
}

QPoly twist(const FieldCtx& F, const QPoly& f, std::int64_t k) {
  QPoly h = f;
  for (auto& x : h.c) x = F.frob_p(x, k);
  return h;
}

QPoly scale_conjugate(const FieldCtx& F, const QPoly& f, FElem lambda) {
  if (lambda.is_zero()) throw Error(ErrorKind::ZeroScalar, "scale_conjugate needs a nonzero scalar");
  const FElem lambda_inv = F.inv(lambda);
  QPoly h = f;
  for (std::uint32_t i = 0; i < F.n(); ++i) {
    if (!h[i].is_zero()) h[i] = F.mul(h[i], F.mul(F.frob(lambda, i), lambda_inv));
  }
  return h;
}

Matrix fq_matrix(const FieldCtx& F, const QPoly& f) {
  const std::uint32_t n = F.n();
  Matrix m(n, n);
  std::vector<FElem> coords(n);
  for (std::uint32_t j = 0; j < n; ++j) {
    F.fq_coords_into(evaluate(F, f, F.fq_basis()[j]), coords);
    for (std::uint32_t i = 0; i < n; ++i) m.at(i, j) = coords[i];
  }
  return m;
}

std::size_t kernel_dimension(const FieldCtx& F, const QPoly& f) {
  return F.n() - rank(F, fq_matrix(F, f));
}

Matrix dickson_matrix(const FieldCtx& F, const QPoly& f) {
  const std::uint32_t n = F.n();
  Matrix m(n, n);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) m.at(i, j) = F.frob(f[(j + n - i) % n], i);
  }
  return m;
}

std::size_t dickson_rank(const FieldCtx& F, const QPoly& f) { return rank(F, dickson_matrix(F, f)); }

std::string format_qpoly(const QPoly& f) {
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(f[i].v);
  }
  return out;
}

QPoly parse_qpoly(const FieldCtx& F, std::string_view text) {
  QPoly f;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto token = text.substr(pos, end - pos);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw Error(ErrorKind::ParseError, "bad coefficient '" + std::string(token) + "'");
    }
    if (v >= F.order()) throw Error(ErrorKind::ParseError, "coefficient " + std::to_string(v) + " out of range");
    f.c.push_back(FElem{static_cast<std::uint32_t>(v)});
    pos = end + 1;
  }
  if (f.size() != F.n()) {
    throw Error(ErrorKind::ParseError,
                "expected " + std::to_string(F.n()) + " coefficients, got " + std::to_string(f.size()));
  }
  return f;
}

}  // namespace linset
