"""NPN classification of Boolean functions from cofactor, influence and sensitivity signatures."""
__version__ = "0.1.0"

from .classifier import Classification, ComparisonReport, classify, compare
from .errors import NpnError
from .kernels import BACKEND
from .oracle import CanonicalForm, enumerate_transforms, exact_classify, npn_canonical
from .signatures import (
    ALL_SIGNATURES,
    MixedSignatureVector,
    SignatureSelection,
    SignatureVectors,
    build_msv,
    compute_signatures,
)
from .truthtable import NPTransform, TruthTable, apply_np_transform, format_hex, parse_truth_table
