"""Exact computations with determinantal representations of hypersurfaces.

The package covers matrices of linear forms and their determinants, the
constructive equivalence ``A = S B T`` / ``A = S B^t T`` between two such
representations, and the image and kernel sheaves they cut out along a
parametrized curve.
"""
from .curves import (Disambiguation, ParamCurve, PointCloudCurve, RankProfile, ReconstructionReport,
                     SheafBasis, cokernel_degree, containment_check, fiber_image_at_points,
                     image_sheaf_basis, kernel_sheaf_basis, rank_profile, reconstruct_bundle_pair,
                     restrict_to_param_curve)
from .forms import (LeadingForm, LinearForm, LinFormMatrix, PetriTensor, build_from_petri_tensor,
                    determinant_hypersurface, entry_independence_check, evaluate_at_point,
                    genericity_probe, tangent_cone_leading_form)
from .frobenius import (EquivalenceCertificate, coefficient_slices, express_in_entry_basis,
                        frobenius_decompose, rank1_factor, verify_certificate)
from .generators import gen_curve_instance, gen_frobenius_instance

__version__ = "0.1.0"
