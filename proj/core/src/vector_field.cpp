#include "liesym/vector_field.hpp"

#include "liesym/errors.hpp"

namespace liesym {

VectorField VectorField::d_x() { return {Expr::constant(1), Expr(), Expr()}; }
VectorField VectorField::d_t() { return {Expr(), Expr::constant(1), Expr()}; }
VectorField VectorField::d_u() { return {Expr(), Expr(), Expr::constant(1)}; }

void validate_point_field(const VectorField& v) {
  for (const Expr* comp : {&v.xi, &v.eta, &v.phi}) {
    if (expand(*comp).max_jet_order() > 0) {
      throw UnsupportedError("point field coefficient depends on a derivative of u");
    }
  }
}

VectorField operator+(const VectorField& a, const VectorField& b) {
  return {a.xi + b.xi, a.eta + b.eta, a.phi + b.phi};
}

VectorField scale(const Expr& c, const VectorField& v) {
  return {c * v.xi, c * v.eta, c * v.phi};
}

VectorField scale(const Rational& c, const VectorField& v) {
  return scale(Expr::constant(c), v);
}

bool equal_fields(const VectorField& a, const VectorField& b) {
  return equivalent(a.xi, b.xi) && equivalent(a.eta, b.eta) && equivalent(a.phi, b.phi);
}

std::string to_string(const VectorField& v) {
  std::string out;
  auto emit = [&out](const Expr& comp, const char* op) {
    if (comp.is_zero()) return;
    if (!out.empty()) out += " + ";
    if (comp.is_one()) {
      out += op;
    } else {
      out += "(" + to_string(comp) + ") " + op;
    }
  };
  emit(v.xi, "d/dx");
  emit(v.eta, "d/dt");
  emit(v.phi, "d/du");
  return out.empty() ? "0" : out;
}

Expr apply_field(const VectorField& v, const Expr& f) {
  Poly fp = expand(f);
  if (fp.max_jet_order() > 0) {
    throw UnsupportedError("apply_field expects a function of (x, t, u); use apply_prolonged");
  }
  Poly out = expand(v.xi) * diff_partial(fp, VarRef(sym_x()));
  out += expand(v.eta) * diff_partial(fp, VarRef(sym_t()));
  out += expand(v.phi) * diff_partial(fp, VarRef(JetVar{0, 0}));
  return to_expr(out);
}

VectorField commutator(const VectorField& a, const VectorField& b) {
  validate_point_field(a);
  validate_point_field(b);
  return {apply_field(a, b.xi) - apply_field(b, a.xi),
          apply_field(a, b.eta) - apply_field(b, a.eta),
          apply_field(a, b.phi) - apply_field(b, a.phi)};
}

Prolongation::Prolongation(VectorField v, int order, int max_jet_order)
    : base_(std::move(v)), order_(order) {
  validate_point_field(base_);
  if (order < 0) throw InternalError("negative prolongation order");
  if (order > max_jet_order) {
    throw OrderError("prolongation order exceeds the jet order cap");
  }

  const Poly xi = expand(base_.xi);
  const Poly eta = expand(base_.eta);
  coeffs_[{0, 0}] = expand(base_.phi);

  auto jet = [](int i, int j) { return Poly::variable(VarRef(JetVar{i, j})); };

  // Fill level by level; each coefficient extends one of lower order.
  // Stepping (i-1, j) in x and (i, j-1) in t give the same polynomial;
  // the first available one is used.
  for (int total = 1; total <= order; ++total) {
    for (int i = total; i >= 0; --i) {
      int j = total - i;
      Poly p;
      if (i > 0) {
        const Poly& prev = coeffs_.at({i - 1, j});
        p = total_derivative(prev, Direction::X, max_jet_order);
        p -= total_derivative(xi, Direction::X, max_jet_order) * jet(i, j);
        p -= total_derivative(eta, Direction::X, max_jet_order) * jet(i - 1, j + 1);
      } else {
        const Poly& prev = coeffs_.at({i, j - 1});
        p = total_derivative(prev, Direction::T, max_jet_order);
        p -= total_derivative(xi, Direction::T, max_jet_order) * jet(i + 1, j - 1);
        p -= total_derivative(eta, Direction::T, max_jet_order) * jet(i, j);
      }
      coeffs_[{i, j}] = std::move(p);
    }
  }
}

const Poly& Prolongation::coeff_poly(int dx, int dt) const {
  auto it = coeffs_.find({dx, dt});
  if (it == coeffs_.end()) {
    throw InternalError("prolongation coefficient " + jet_name(JetVar{dx, dt}) +
                        " outside computed order");
  }
  return it->second;
}

Expr Prolongation::coeff(int dx, int dt) const { return to_expr(coeff_poly(dx, dt)); }

Poly apply_prolonged(const Prolongation& pr, const Poly& f, int max_jet_order) {
  (void)max_jet_order;
  if (f.max_jet_order() > pr.order()) {
    throw OrderError("expression contains jets beyond the prolongation order");
  }
  Poly out = expand(pr.base().xi) * diff_partial(f, VarRef(sym_x()));
  out += expand(pr.base().eta) * diff_partial(f, VarRef(sym_t()));
  for (int total = 0; total <= pr.order(); ++total) {
    for (int i = total; i >= 0; --i) {
      int j = total - i;
      VarRef jet{JetVar{i, j}};
      if (!f.depends_on(jet)) continue;
      out += pr.coeff_poly(i, j) * diff_partial(f, jet);
    }
  }
  return out;
}

Expr apply_prolonged(const VectorField& v, int order, const Expr& f, int max_jet_order) {
  Prolongation pr(v, order, max_jet_order);
  return to_expr(apply_prolonged(pr, expand(f), max_jet_order));
}

}  // namespace liesym
