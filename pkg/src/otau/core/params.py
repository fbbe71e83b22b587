"""Deformation parameters tau = (tau_0, ..., tau_{m-1}).

Two modes:

* numeric: every tau_i is a rational;
* symbolic-z (only m = 2): tau_1 = z, tau_0 = 1 - z, so that the total
  tau_0 + tau_1 is 1 and the ratio tau_1 / (tau_0 + tau_1) is z.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .exact import ParameterError, Poly, as_rational, to_json_scalar

NUMERIC = "numeric"
SYMBOLIC_Z = "symbolic-z"
SYMBOLIC_Z_SWAPPED = "symbolic-z-swapped"


@dataclass(frozen=True)
class TauParams:
    taus: Tuple
    mode: str = NUMERIC

    def __post_init__(self):
        if not self.taus:
            raise ParameterError("need at least one tau")
        if self.total == 0:
            raise ParameterError("tau_0 + ... + tau_{m-1} must be nonzero")

    @classmethod
    def numeric(cls, *taus) -> "TauParams":
        return cls(tuple(as_rational(t) for t in taus), NUMERIC)

    @classmethod
    def symbolic_z(cls) -> "TauParams":
        z = Poly.gen("z")
        return cls((1 - z, z), SYMBOLIC_Z)

    @property
    def m(self) -> int:
        return len(self.taus)

    def tau(self, i: int):
        return self.taus[i % self.m]

    @property
    def total(self):
        acc = Fraction(0)
        for t in self.taus:
            acc = acc + t
        return acc

    # two-vertex shorthands: a = tau_1, b = tau_0 + tau_1
    @property
    def a(self):
        self._need_two()
        return self.taus[1]

    @property
    def b(self):
        return self.total

    def _need_two(self):
        if self.m != 2:
            raise ParameterError("this quantity is defined for two vertices only")

    def swapped(self) -> "TauParams":
        """Exchange tau_0 and tau_1 (the rotated two-vertex quiver)."""
        self._need_two()
        if self.mode == SYMBOLIC_Z_SWAPPED:
            return TauParams.symbolic_z()
        if self.mode == SYMBOLIC_Z:
            # keep tau_1 = z as the free symbol: rotated tau is (z, 1 - z)
            z = Poly.gen("z")
            return TauParams((z, 1 - z), SYMBOLIC_Z_SWAPPED)
        return TauParams((self.taus[1], self.taus[0]), self.mode)

    def rotated(self, shift: int = 1) -> "TauParams":
        mode = self.mode
        if self.m == 2 and shift % 2 and mode in (SYMBOLIC_Z, SYMBOLIC_Z_SWAPPED):
            mode = SYMBOLIC_Z_SWAPPED if mode == SYMBOLIC_Z else SYMBOLIC_Z
        return TauParams(tuple(self.tau(i + shift) for i in range(self.m)), mode)

    def specialize(self, zval) -> "TauParams":
        zval = as_rational(zval)
        return TauParams(tuple(t.substitute("z", zval) if isinstance(t, Poly) else t
                               for t in self.taus), NUMERIC)

    @property
    def symbolic(self) -> bool:
        return any(isinstance(t, Poly) for t in self.taus)

    def to_json(self):
        return {"mode": self.mode, "tau": [to_json_scalar(t) for t in self.taus]}
