"""C4-face-magic labelings of projective grid graphs."""

from facemagic.grid import Dims, Symmetry, c4_faces, digons, symmetry_group, apply_symmetry
from facemagic.labeling import Labeling, LabelingError, MagicReport, verify

__all__ = [
    "Dims",
    "Symmetry",
    "c4_faces",
    "digons",
    "symmetry_group",
    "apply_symmetry",
    "Labeling",
    "LabelingError",
    "MagicReport",
    "verify",
]
