#pragma once

#include "sasver/submersion.hpp"

namespace sasver {

// Covariant derivative at s.p of the local field q -> M(q) c along dir,
// where M is a matrix field germ (value + first derivatives) and c is a
// constant coefficient vector: dir^i (d_i M) c + Gamma(dir, M c).
Eigen::VectorXd cov_of_matrix_field(const PointSplit& s, const Eigen::VectorXd& dir,
                                    const MatField& M, const Eigen::VectorXd& c);

// Covariant derivative of the constant-coefficient extension of c along dir.
Eigen::VectorXd cov_of_constant(const PointSplit& s, const Eigen::VectorXd& dir,
                                const Eigen::VectorXd& c);

// Lie bracket at s.p of the fields q -> A(q) a and q -> B(q) b built from
// matrix field germs applied to constant coefficient vectors.
Eigen::VectorXd lie_bracket_of_fields(const PointSplit& s, const MatField& A,
                                      const Eigen::VectorXd& a, const MatField& B,
                                      const Eigen::VectorXd& b);

// Fundamental tensors of the submersion, evaluated on arbitrary tangent
// vectors via projector fields:
//   T(e1,e2) = H nabla_{V e1}(V e2-field) + V nabla_{V e1}(H e2-field)
//   A(e1,e2) = H nabla_{H e1}(V e2-field) + V nabla_{H e1}(H e2-field)
// where the e2 fields are the projections of the constant extension of e2.
Eigen::VectorXd tensor_T_at(const PointSplit& s, const Eigen::VectorXd& e1,
                            const Eigen::VectorXd& e2);
Eigen::VectorXd tensor_A_at(const PointSplit& s, const Eigen::VectorXd& e1,
                            const Eigen::VectorXd& e2);

// Lemma-level properties of T and A plus the covariant derivative
// reconstruction identities and fiber spot checks. Random directions are
// drawn deterministically from salt.
SuiteReport fundamental_equations_check(const SubmersionSpec& F, const PointSplit& s,
                                        const Tolerances& tol, std::uint64_t salt);

// Fiber geometry at p: second fundamental form of the fiber via T, mean
// curvature, totally geodesic / umbilical / minimal witnesses.
SuiteReport fiber_geometry_at(const SubmersionSpec& F, const PointSplit& s,
                              const Tolerances& tol, std::uint64_t salt);

// Structure-aware identity suites. The vertical variant applies when xi is
// tangent to the fibers, the horizontal variant when xi is horizontal.
SuiteReport lemma_suite_vertical_xi(const SubmersionSpec& F, const PointSplit& s,
                                    const Tolerances& tol, std::uint64_t salt);
SuiteReport lemma_suite_horizontal_xi(const SubmersionSpec& F, const PointSplit& s,
                                      const Tolerances& tol, std::uint64_t salt);

// Distribution-level consequences: integrability equivalences for the
// horizontal distribution and the witness searches for the negative results.
SuiteReport distribution_criteria(const SubmersionSpec& F, const PointSplit& s,
                                  const Tolerances& tol, std::uint64_t salt);

}  // namespace sasver
