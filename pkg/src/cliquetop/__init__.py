"""Random clique complexes: density, homology, pi_1 certificates and sweeps."""

from .certificates import (CertificateRefused, CycleLoop, Pi1Certificate, SparsityReport,
                           certify_pi1_nontrivial, find_rooted_six_cycle, is_full, is_sparse,
                           verify_certificate)
from .complex import (CellComplex2, Complex2, ComplexError, FVector, LinkGraph, all_links,
                      build_complex, clique_two_skeleton, collapse_free_faces, connected_components,
                      euler_characteristic, f_vector, induced_subcomplex, is_connected, is_normal,
                      is_two_normal, l_functional, vertex_link)
from .cx2 import Cx2FormatError, dumps, loads, read_cx2, write_cx2
from .density import (DensityReport, EdgeBound, density_brute, density_flow, edge_bound_check,
                      is_k_admissible, min_admissibility)
from .errors import GuardError, PreconditionError
from .experiments import ExperimentConfig, TrialRecord, read_csv, run_sweep, summarize, write_csv
from .homology import (HomologySummary, betti_f2, boundary_matrices, cycle_is_boundary,
                       homology_integral, invariant_factors)
from .random_models import sample_k4np, sample_knp, trial_seed
from .spectral import SpectralReport, garland_scan, link_spectral_gap
from .wedge import Inconsistency, WedgeSignature, scan_for_counterexamples, wedge_signature

__version__ = "0.1.0"
