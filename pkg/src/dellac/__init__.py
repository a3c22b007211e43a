"""Dellac configurations, symplectic Dellac configurations, tableaux and
surjective pistols: enumeration, the bijections between tableaux and
pistols, their fibers, and the counting identities that tie them together.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .bridge import ExpansionChoice, collapse, expand, toggle, verify_partition
from .core import (
    DellacConfig,
    StatVector,
    SurjectivePistol,
    SymplecticConfig,
    Tableau,
    decode,
    doubled_fixed_points,
    encode,
    enumerate_dellac,
    enumerate_pistols,
    enumerate_spdc,
    enumerate_tableaux,
    fr,
    fr_vec,
    from_json,
    make_dellac,
    make_pistol,
    make_spdc,
    make_tableau,
    ndf,
    ndf_vec,
    rho,
    tableau_count,
    to_json,
)
from .fiber import FiberSignature, fiber, fiber_sum_check, is_tilde, mute, signature, switch
from .insertion import LabeledPartialTableau, PhiResult, Phi, build_Phi, fj_insert, insert_at_box
from .labeling import LabeledTableau, PistolLabel, d_min, epsilon, grounded, ngr, ngr_vec, phi, pistol_labels
from .report import Report
from .sequences import IntPolynomial, poly_D, r_seq, r_value, verify_eq1
from .tpath import PartialTableau, TPath, pi, pi_inverse, t_path

__all__ = [name for name in dir() if not name.startswith("_")]
