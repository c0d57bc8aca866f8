#include "liesym/optimal.hpp"

#include "liesym/errors.hpp"

#include <random>
#include <utility>

namespace liesym {

namespace {

Row scaled(Row v, const Rational& s) {
  for (auto& c : v) c *= s;
  return v;
}

bool rows_equal(const Row& a, const Row& b) { return a == b; }

}  // namespace

std::string kind_name(Canonical1D::Kind k) {
  switch (k) {
    case Canonical1D::Kind::V1: return "v1";
    case Canonical1D::Kind::V2: return "v2";
    case Canonical1D::Kind::V3PlusAlphaV2: return "v3+alpha*v2";
  }
  throw InternalError("unknown canonical kind");
}

OptimalSystem1D::OptimalSystem1D(LieAlgebra algebra) : algebra_(std::move(algebra)) {
  if (algebra_.dimension() != 3)
    throw UnsupportedError("optimal system classification needs a three-dimensional algebra");
  kappa_ = algebra_.structure(1, 2, 0);
  if (sign(kappa_) == 0)
    throw UnsupportedError("optimal system classification needs [v2, v3] = kappa v1 with kappa != 0");
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        Rational expected = 0;
        if (i == 1 && j == 2 && k == 0) expected = kappa_;
        if (i == 2 && j == 1 && k == 0) expected = -kappa_;
        if (algebra_.structure(i, j, k) != expected)
          throw UnsupportedError("algebra bracket table does not match the supported pattern");
      }
    }
  }
}

Row OptimalSystem1D::apply_witness(const Row& v, const OrbitWitness& w) const {
  Row out = scaled(v, w.scale);
  for (const auto& step : w.steps)
    out = adjoint_apply(algebra_, step.generator, step.eps, out);
  return out;
}

Normalized1D OptimalSystem1D::normalize(const Row& v) const {
  if (v.size() != 3) throw Error("normalize expects a coordinate vector of length 3");
  if (sign(v[0]) == 0 && sign(v[1]) == 0 && sign(v[2]) == 0)
    throw Error("cannot classify the zero vector");

  Normalized1D n;
  // Ad(exp(eps v1)) is the identity here; Ad(exp(eps v2)) and
  // Ad(exp(eps v3)) shift only the v1 coordinate. The pair (a2, a3) is
  // therefore invariant up to overall scale and a2/a3 is an exact orbit
  // invariant when a3 != 0.
  if (sign(v[2]) != 0) {
    n.witness.scale = 1 / v[2];
    Row w = scaled(v, n.witness.scale);
    if (sign(w[0]) != 0) {
      // Ad(exp(eps v2)) sends w to w - eps kappa w[2] v1; here w[2] = 1.
      AdjointStep step{1, w[0] / kappa_};
      w = adjoint_apply(algebra_, step.generator, step.eps, w);
      n.witness.steps.push_back(step);
    }
    n.canonical.kind = Canonical1D::Kind::V3PlusAlphaV2;
    n.canonical.alpha = w[1];
    n.canonical.representative = w;
  } else if (sign(v[1]) != 0) {
    n.witness.scale = 1 / v[1];
    Row w = scaled(v, n.witness.scale);
    if (sign(w[0]) != 0) {
      // Ad(exp(eps v3)) sends w to w + eps kappa w[1] v1; here w[1] = 1.
      AdjointStep step{2, -w[0] / kappa_};
      w = adjoint_apply(algebra_, step.generator, step.eps, w);
      n.witness.steps.push_back(step);
    }
    n.canonical.kind = Canonical1D::Kind::V2;
    n.canonical.representative = w;
  } else {
    n.witness.scale = 1 / v[0];
    n.canonical.kind = Canonical1D::Kind::V1;
    n.canonical.representative = scaled(v, n.witness.scale);
  }

  if (!rows_equal(apply_witness(v, n.witness), n.canonical.representative))
    throw InternalError("normalization witness failed to replay");
  return n;
}

std::optional<OrbitWitness> OptimalSystem1D::equivalent(const Row& a, const Row& b) const {
  Normalized1D na = normalize(a);
  Normalized1D nb = normalize(b);
  if (na.canonical.kind != nb.canonical.kind) return std::nullopt;
  if (na.canonical.kind == Canonical1D::Kind::V3PlusAlphaV2 &&
      na.canonical.alpha != nb.canonical.alpha)
    return std::nullopt;

  // a -> representative via na.witness, then representative -> b by
  // inverting nb.witness. Adjoint maps are linear, so the scales commute
  // with the steps and can be merged up front.
  OrbitWitness w;
  w.scale = na.witness.scale / nb.witness.scale;
  w.steps = na.witness.steps;
  for (auto it = nb.witness.steps.rbegin(); it != nb.witness.steps.rend(); ++it)
    w.steps.push_back(AdjointStep{it->generator, -it->eps});
  if (!rows_equal(apply_witness(a, w), b))
    throw InternalError("equivalence witness failed to replay");
  return w;
}

CoverageStats verify_optimal_system(const OptimalSystem1D& sys, int samples, std::uint64_t seed) {
  CoverageStats stats;
  stats.samples = samples;
  std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
  auto component = [&rng]() { return static_cast<long>(rng() % 11) - 5; };

  int drawn = 0;
  while (drawn < samples) {
    Row v(3);
    if ((drawn + 1) % 10 == 0) {
      // Stratified draw on the v1 axis; the uniform draws hit it rarely.
      long c = 0;
      while (c == 0) c = component();
      v = {Rational(c), Rational(0), Rational(0)};
    } else {
      v = {Rational(component()), Rational(component()), Rational(component())};
      if (sign(v[0]) == 0 && sign(v[1]) == 0 && sign(v[2]) == 0) continue;
    }
    ++drawn;

    Normalized1D n = sys.normalize(v);
    if (sys.apply_witness(v, n.witness) != n.canonical.representative) stats.witnesses_ok = false;
    switch (n.canonical.kind) {
      case Canonical1D::Kind::V1: ++stats.hits_v1; break;
      case Canonical1D::Kind::V2: ++stats.hits_v2; break;
      case Canonical1D::Kind::V3PlusAlphaV2: {
        ++stats.hits_v3_family;
        int s = sign(n.canonical.alpha);
        if (s < 0)
          ++stats.hits_v3_alpha_neg;
        else if (s > 0)
          ++stats.hits_v3_alpha_pos;
        else
          ++stats.hits_v3_alpha_zero;
        break;
      }
    }
  }

  if (stats.hits_v1 > 0) stats.uncovered.push_back("v1");
  return stats;
}

}  // namespace liesym
