"""Convert stabilizer codes into graph codes and verify their error detection."""

from .codes import five_qubit_code, gottesman_8_3_3, steane_code
from .coincidence import CoincidenceMatrix, attach_inputs, check_conditions, derive_input_block
from .detection import detect_strong, detect_weak, verify_correction
from .graphs import Graph, local_complement, standardize
from .pauli import Pauli, parse_pauli
from .pipeline import PipelineRecord, convert, run_pipeline
from .stabilizer import StabilizerCode, load_code, realize_cws

__all__ = [
    "CoincidenceMatrix", "Graph", "Pauli", "PipelineRecord", "StabilizerCode",
    "attach_inputs", "check_conditions", "convert", "derive_input_block",
    "detect_strong", "detect_weak", "five_qubit_code", "gottesman_8_3_3",
    "load_code", "local_complement", "parse_pauli", "realize_cws", "run_pipeline",
    "standardize", "steane_code", "verify_correction",
]
