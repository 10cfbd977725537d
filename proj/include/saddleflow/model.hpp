#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "saddleflow/types.hpp"

namespace saddleflow {

enum class ModelKind { GlobalHamiltonian, LocalNormalForm, FigureEight, CnlseReduction };

std::string to_string(ModelKind kind);
ModelKind model_kind_from_string(const std::string& s);

/// Named coefficients, kept in insertion order for deterministic reports.
using CoeffMap = std::vector<std::pair<std::string, double>>;

double coeff_or(const CoeffMap& c, const std::string& name, double fallback);

/// A 4D vector field with saddle O at the origin, Z2 symmetry
/// (u1,v1) <-> (-u1,-v1), and the invariant plane {u1 = v1 = 0}.
///
/// For conservative kinds, `h` is the rescaled first integral whose
/// quadratic part is exactly gamma*u1*v1 - u2*v2; all level values `h`
/// used across the library refer to this normalization. `chart_h` is the
/// function that defines section levels: it equals `h` for conservative
/// kinds and the quadratic form for LocalNormalForm.
struct ModelSpec {
  ModelKind kind = ModelKind::GlobalHamiltonian;
  Eigendata eigen;
  CoeffMap coupling;
  double delta_scale = 0.1;
  bool conservative = false;
  bool figure_eight = false;

  std::function<PhaseState(const PhaseState&)> field;
  std::function<double(const PhaseState&)> h;             // null unless conservative
  std::function<PhaseState(const PhaseState&)> grad_h;    // null unless conservative
  std::function<double(const PhaseState&)> chart_h;
  std::function<PhaseState(const PhaseState&)> grad_chart_h;

  /// Closed-form planar homoclinic (u1=v1=0 components) for sigma = +1/-1.
  /// Null for kinds without one (LocalNormalForm, CnlseReduction keeps its own).
  std::function<PhaseState(double, int)> planar_homoclinic;
  double loop_radius = 0.0;  // sup-norm radius of the homoclinic loop(s)

  /// Named structural identities of the kind, evaluated pointwise; each
  /// returns the absolute violation at x. Zero by construction for models
  /// built here; nonzero for hand-corrupted fields.
  std::vector<std::pair<std::string, std::function<double(const PhaseState&)>>>
      identity_checks;
};

ModelSpec build_global_model(CaseTag tag, double lambda1, double lambda2,
                             const CoeffMap& coupling);
ModelSpec build_local_normal_form(CaseTag tag, double lambda1, double lambda2,
                                  const CoeffMap& nonlinear_coeffs);
ModelSpec build_figure_eight_model(double lambda1, double lambda2,
                                   const CoeffMap& coupling);
ModelSpec build_cnlse_model(double alpha, double beta, double omega1, double omega2);

/// Default symmetric coupling set used by the harness; chosen so the
/// measured global-map coefficients b(h), c(h), d(h) are all nonzero.
CoeffMap default_coupling();
/// Default nonlinear coefficient set for local normal forms of a case.
CoeffMap default_local_coeffs(CaseTag tag);

struct StructureReport {
  int n_samples = 0;
  double box_radius = 0.0;
  double max_plane_violation = 0.0;      // u1/v1 field components on {u1=v1=0}
  double max_symmetry_violation = 0.0;   // ||field(Sx) - S field(x)||_inf
  double max_conservation_violation = 0.0;  // |grad h . field| / (1+|x|^2)
  double max_jacobian_violation = 0.0;   // ||Dfield(0) - diag(-l1,-l2,l1,l2)||_inf
  double max_quadratic_part_violation = 0.0;  // Hessian of h at 0 vs normal form
  std::vector<std::pair<std::string, double>> identity_violations;
  bool pass(double tol) const;
};

StructureReport check_structure(const ModelSpec& model, int n_samples, double tol);

/// t -> -t composed with (u1,u2,v1,v2) -> (v1,v2,u1,u2); an involution on
/// models that turns every backward-time question into a forward one.
ModelSpec reverse_time_view(const ModelSpec& model);

/// Planar-core trajectory point of the closed-form homoclinic (conservative
/// kinds with a built-in loop). sigma selects the lobe for figure-eights.
PhaseState planar_homoclinic_point(const ModelSpec& model, double t, int sigma = +1);

}  // namespace saddleflow
