"""Shipped coset systems and a factory keyed by CLI instance name."""

from .lamplighter import Config, LamplighterSystem, lamp_bichar, shift_act
from .numberfield import FieldElem, NumberField, NumberFieldSystem
from .rational import RationalSystem, cofinality_check, ring_quotient_size

INSTANCE_NAMES = ("rational", "numberfield", "lamplighter")


def make_instance(name: str, *, minpoly=None, modulus=None, config=None):
    if name == "rational":
        return RationalSystem(config)
    if name == "numberfield":
        return NumberFieldSystem(minpoly if minpoly is not None else (-2, 0, 1), config)
    if name == "lamplighter":
        return LamplighterSystem(modulus if modulus is not None else 2, config)
    raise ValueError(f"unknown instance {name!r}; expected one of {INSTANCE_NAMES}")


__all__ = [
    "Config",
    "FieldElem",
    "INSTANCE_NAMES",
    "LamplighterSystem",
    "NumberField",
    "NumberFieldSystem",
    "RationalSystem",
    "cofinality_check",
    "lamp_bichar",
    "make_instance",
    "ring_quotient_size",
    "shift_act",
]
