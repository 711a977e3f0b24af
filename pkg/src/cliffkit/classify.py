"""Membership tests for the generalized harmonic function classes.

Given structural sets phi and psi, a polynomial field f is

    harmonic            when  laplacian(f) = 0,
    two-step harmonic   when  dirac_left(phi, dirac_left(psi, f)) = 0,
    inframonogenic      when  sandwich(phi, f, psi) = 0,

and hyperholomorphic (left/right) when the corresponding one-sided
Dirac image vanishes.  Everything is an exact zero test on polynomial
coefficients; there is no sampling and no tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .fields import PolyField, dirac_left, dirac_right, laplacian, sandwich
from .structural import StructuralSet
from .verdict import Verdict

HARMONIC = "H"
TWO_SET_HARMONIC = "Hpp"
INFRAMONOGENIC = "I"

_CLASS_ORDER = (HARMONIC, TWO_SET_HARMONIC, INFRAMONOGENIC)


@dataclass(frozen=True)
class RegionLabel:
    """One of the 8 membership regions of {H, Hpp, I}."""

    harmonic: bool
    two_set_harmonic: bool
    inframonogenic: bool

    @classmethod
    def from_classes(cls, classes) -> "RegionLabel":
        classes = set(classes)
        unknown = classes - set(_CLASS_ORDER)
        if unknown:
            raise ValueError(f"unknown class names {sorted(unknown)}; expected subset of {_CLASS_ORDER}")
        return cls(HARMONIC in classes, TWO_SET_HARMONIC in classes, INFRAMONOGENIC in classes)

    @classmethod
    def all_regions(cls) -> list["RegionLabel"]:
        return [cls(h, p, i) for h, p, i in product((False, True), repeat=3)]

    @property
    def classes(self) -> frozenset:
        names = []
        if self.harmonic:
            names.append(HARMONIC)
        if self.two_set_harmonic:
            names.append(TWO_SET_HARMONIC)
        if self.inframonogenic:
            names.append(INFRAMONOGENIC)
        return frozenset(names)

    def __str__(self) -> str:
        names = [name for name, flag in zip(_CLASS_ORDER, (self.harmonic, self.two_set_harmonic, self.inframonogenic)) if flag]
        return "∩".join(names) if names else "none"


@dataclass(frozen=True)
class ClassMembership:
    harmonic: bool
    two_set_harmonic: bool
    inframonogenic: bool
    hyperholomorphic_left: bool
    hyperholomorphic_right: bool

    @property
    def region(self) -> RegionLabel:
        return RegionLabel(self.harmonic, self.two_set_harmonic, self.inframonogenic)

    def to_json(self) -> dict:
        return {
            "harmonic": self.harmonic,
            "phiPsiHarmonic": self.two_set_harmonic,
            "inframonogenic": self.inframonogenic,
            "hypLeft": self.hyperholomorphic_left,
            "hypRight": self.hyperholomorphic_right,
            "region": str(self.region),
        }


def classify(phi: StructuralSet, psi: StructuralSet, f: PolyField) -> ClassMembership:
    if phi.m != f.m or psi.m != f.m:
        raise ValueError(f"dimension mismatch: sets {phi.m}/{psi.m}, field {f.m}")
    return ClassMembership(
        harmonic=laplacian(f).is_zero(),
        two_set_harmonic=dirac_left(phi, dirac_left(psi, f)).is_zero(),
        inframonogenic=sandwich(phi, f, psi).is_zero(),
        hyperholomorphic_left=dirac_left(psi, f).is_zero(),
        hyperholomorphic_right=dirac_right(f, psi).is_zero(),
    )


def region(phi: StructuralSet, psi: StructuralSet, f: PolyField) -> RegionLabel:
    return classify(phi, psi, f).region


def check_even_odd_split_membership(phi: StructuralSet, psi: StructuralSet, f: PolyField) -> Verdict:
    """A field sits in the inframonogenic (resp. two-step harmonic) kernel
    exactly when both its even and odd parts do."""
    even, odd = f.even_part(), f.odd_part()
    for name, op in (
        ("inframonogenic", lambda g: sandwich(phi, g, psi)),
        ("two-set-harmonic", lambda g: dirac_left(phi, dirac_left(psi, g))),
    ):
        whole = op(f).is_zero()
        split = op(even).is_zero() and op(odd).is_zero()
        if whole != split:
            return Verdict(
                "even-odd-split-membership",
                False,
                lhs=f"{name}: whole field in kernel: {whole}",
                rhs=f"{name}: both parts in kernel: {split}",
            )
    return Verdict("even-odd-split-membership", True)
