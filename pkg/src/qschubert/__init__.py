"""Quantum cohomology of Grassmannians via the rim-hook rule.

The main entry points are :func:`quantum_product_basis`, :func:`d_min`,
:func:`d_max` and the verification sweeps in :mod:`qschubert.verify`.
"""

from qschubert.kernels import BACKEND
from qschubert.lr import (
    ClassicalExpansion,
    classical_product,
    kappa,
    kappa_rectangles_closed_form,
    lr_coefficient,
    product_nonzero,
    triple_product_nonzero_bruteforce,
)
from qschubert.partitions import (
    BoxError,
    FrobeniusCoordinates,
    GrassmannianContext,
    PartitionError,
    complement,
    durfee,
    enumerate_partitions,
    fits_in_box,
    format_partition,
    from_frobenius,
    hook_class,
    largest_square_in_overlap,
    overlap_with_rotation,
    parse_partition,
    partition,
    to_frobenius,
)
from qschubert.quantum import (
    PositivityError,
    QuantumExpansion,
    d_max,
    d_min,
    gw_invariant,
    occurring_degrees,
    quantum_giambelli_check,
    quantum_product_basis,
    ring_add,
    ring_multiply,
)
from qschubert.rimhooks import RimHook, RimHookTrace, epsilon, legal_rim_hooks, n_core, r_n

__version__ = "0.1.0"
