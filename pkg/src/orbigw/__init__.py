"""Exact genus-0 orbifold Gromov-Witten invariants of Calabi-Yau threefold
complete intersections in weighted projective stacks.

The pipeline runs target -> sectors and admissible basis -> extended GIT
data -> extended I-function -> mirror map -> J-function -> generating
function F, all over exact rationals.
"""

__version__ = "0.1.0"

from .cohomology import (BasisClass, TargetSpec, admissible_basis, enumerate_sectors,
                         enumerate_special_cycles, pairing, pairing_matrix,
                         resolve_extension, sector, validate_target)
from .config import RunConfig, load_config, parse_config
from .errors import (CYViolation, DomainError, EngineError, ExtractionInconsistency,
                     InternalConsistencyError, NonInvertibleExtension, NonInvertibleMap,
                     StructuralError, ValidationError)
from .extended_git import ExtendedGIT, build_extended_git, enumerate_curve_classes
from .ifunction import assemble_I
from .mirror import (F_along_line, GeneratingFunction, build_mirror_map, extract_F,
                     extract_mu, invert_mirror_map, j_components, validate_extension)
from .pipeline import ResultBundle, run_pipeline
from .render import render
from .series import TruncatedSeries, invert_triangular_map

__all__ = [
    "__version__", "BasisClass", "TargetSpec", "admissible_basis", "enumerate_sectors",
    "enumerate_special_cycles", "pairing", "pairing_matrix", "resolve_extension", "sector",
    "validate_target", "RunConfig", "load_config", "parse_config", "CYViolation",
    "DomainError", "EngineError", "ExtractionInconsistency", "InternalConsistencyError",
    "NonInvertibleExtension", "NonInvertibleMap", "StructuralError", "ValidationError",
    "ExtendedGIT", "build_extended_git", "enumerate_curve_classes", "assemble_I",
    "F_along_line", "GeneratingFunction", "build_mirror_map", "extract_F", "extract_mu",
    "invert_mirror_map", "j_components", "validate_extension", "ResultBundle",
    "run_pipeline", "render", "TruncatedSeries", "invert_triangular_map", "compute_F",
]


def compute_F(weights, degrees, truncation, extension="auto", normalization="unit"):
    """GeneratingFunction of a target through total degree ``truncation``."""
    target = validate_target(weights, degrees)
    git = build_extended_git(target, resolve_extension(target, extension))
    I = assemble_I(git, truncation)
    mu = extract_mu(I, git)
    validate_extension(mu)
    inverse = invert_mirror_map(build_mirror_map(mu, git))
    return extract_F(j_components(I, mu, inverse), git, normalization)
