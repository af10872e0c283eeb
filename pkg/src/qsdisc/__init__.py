"""Exact discriminant arrangements of quasi-symmetric torus representations."""

from .arrangements import (
    Arrangement,
    ComparisonReport,
    HyperplaneFamily,
    Offset,
    ShiftVector,
    compare_arrangements,
    discriminant_arrangement,
    hls_arrangement,
    hls_facet_normals,
    hls_offset,
    log_br,
    shift_vector,
    support_eta,
)
from .circuits import (
    Circuit,
    circuit_constant,
    circuit_constant_via_lengths,
    circuit_exponents,
    circuits,
    enumerate_circuit_normals,
)
from .exact import IntMatrix, LogReal, kernel_basis, log_of_rational, primitive, smith_normal_form
from .horn import HornForm, horn_decompose, horn_evaluate, horn_is_constant, is_component_hyperplane
from .weights import (
    LineGroup,
    WeightSystem,
    is_calabi_yau,
    is_quasi_symmetric,
    is_self_dual,
    partition_lines,
    ray_data,
    reduce_to_image,
    restrict_to_circuit,
    validate,
)
