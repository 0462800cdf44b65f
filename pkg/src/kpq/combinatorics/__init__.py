from .partitions import (
    HAT,
    Box,
    LieType,
    Partition,
    Rel,
    SimpleIndex,
    StrictPartition,
    apply_si,
    content,
    partitions_in,
    rho,
    shifted_diagram,
    simple_indices,
    sp,
    strict_partitions_in,
)
from .weyl import (
    Root,
    SignedPermutation,
    e_of_root,
    inv_set,
    lambda_of_w,
    positive_roots,
    reflection_action,
    simple_root,
    w_lambda,
)
from .tableaux import SetValuedTableau, SvtVariant, enumerate_svt
from .eyd import ExcitedDiagram, EydVariant, broken_boxes, enumerate_eyd, enumerate_eyd_a
