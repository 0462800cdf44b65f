from .kinds import KIND_TYPE, TYPE_KIND, FnKind
from .hl import gp, gq, hl_backend, hl_poly
from .pfaffian_formula import pfaffian_poly
from .svt import svt_sum
from .eyd_formula import WTB_CONVENTIONS, eyd_generic_sum, eyd_poly, typeA_eyd
from .grothendieck import grothendieck_g
from .backends import BACKENDS, all_backends, applicable, gx_finite
from .basis import cancellation_check, expand_in_basis, reconstruct, structure_constants
from .divdiff import divided_difference, expected_pi, pi_twice
