"""Exact computation with the centrally extended gl-infinity, its exponential twist, and their modules."""

from ._linear import as_fraction, format_fraction
from .exppoly import (
    ExpPoly, ep_add, ep_coefficient, ep_from_laurent, ep_mode_window, ep_mul_exp,
    ep_residue_twisted, ep_scale,
)
from .glinf import E, GlInfElem, f_fn, gl_bracket, gl_degree, lemma_commutator_sides, psi
from .glinf import K as K_GL
from .glinf_e import EB, B, GlInfEElem, e_bracket, filtration_degree, is_creation, jacobi_residual
from .glinf_e import K as K_E
from .pbw import (
    VACUUM, ModuleParams, PBWVector, VermaModule, act, b_vector, composite_mode, mode_apply,
    monomial_vector, reduce_word, vertex_series,
)
from .series import (
    IdentityReport, IncomparableWindows, TruncSeries, check_identity, ts_exp, ts_exp_diff, ts_mul,
    ts_substitute_phi,
)
from .zoo import CInf, Ext, PreconditionError, ShapeMismatch, Sym, VSA, ZooModule, ZooVector
from .suites import SUITES, SuiteReport, run_suite

__version__ = "0.1.0"
