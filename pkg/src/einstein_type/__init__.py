"""Numerical verification of gradient Einstein-type structures with alpha = 0
on warped products: curvature, identity residuals, model solutions and the
(beta, mu) sign classification."""

__version__ = "0.1.0"

from .cases import (CaseTag, Model, TheoremCase, build_model, case_potential, classify,
                    closed_form_potential, linear_warping_potential, model_flags)
from .errors import *  # noqa: F401,F403
from .geometry import (ConnectionCoefficients, CoordinatePatch, CurvaturePack, ScalarField,
                       StencilConfig, christoffel, curvature, gradient_data, hessian,
                       metric_compatibility_residual, ricci_identity_residual)
from .ode import IntegrationResult, integrate_soliton_ode, soliton_ode_rhs
from .soliton import (EinsteinTypeParams, LambdaMode, ReducedParams, ResidualReport,
                      TrivialityVerdict, einstein_type_residual, identity_reports, key1_residual,
                      key2_residual_components, key3_residual, key4_residual, lambda_recovery, phi,
                      psi_from_potential, reduce, schouten_sigma_k, triviality_check_beta_zero,
                      warped_sigma_k)
from .table import SolitonTypeEntry, lookup, soliton_type_table
from .warped import (FiberSpec, RadialField, WarpedMetric, WarpingProfile, patch_point,
                     radial_hessian, radial_laplacian, ricci_fiber, ricci_radial,
                     scalar_and_derivative, scalar_curvature, to_patch)
