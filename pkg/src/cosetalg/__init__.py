"""Exact coset-indicator algebras, crossed-product corners and Hecke algebras
for semidirect products N x| H with a distinguished subgroup M."""

from .core import (
    Coset,
    CosetAlgError,
    CosetSystem,
    GroupElem,
    InstanceConfig,
    NoContraction,
    NoFactorization,
    NonAbelianF,
    NotInHPlus,
    NotInM,
    NotInRing,
    NotNested,
    NotWellDefined,
    NoWitness,
    RefinementBlowup,
    SubgroupU,
)
from .crossed import (
    A0Elem,
    CornerElem,
    corner_cut,
    corner_factorization,
    corner_unit,
    extend_pn,
    extend_pnh,
    gen_p,
    gen_s,
    gen_u,
)
from .d0 import D0Elem, d0_eq, d0_mul, d0_star, p_c
from .hecke import HeckeElem, double_coset, hecke_mul, hecke_pair_check, hecke_star, left_coset_decomposition
from .instances import make_instance
from .relations import audit_relations, audit_standing
from .scalars import QmodZ, Scalar

__version__ = "0.1.0"
