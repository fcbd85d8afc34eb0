"""Formal block model of the spaces and spectrum classes the calculator handles.

A space is a wedge of one non-free base block with finitely many free cells:

  RepSphere(t, l)    one-point compactification of t copies of the sign plane
                     plus l copies of the quaternions;
  GroupSuspension    unreduced suspension of the group acting on itself;
  TorusSuspension    unreduced suspension of the embedded torus orbit;
  FreeCell(a)        wedge summand S^a smashed with the free orbit (G_+).

The base blocks carry their own suspension pair (t, l).  A spectrum class is
a triple (space, m, n): the space formally de-suspended m times by the sign
plane and n times by the quaternions, with n an exact rational whose
denominator divides 16.  Ideals are read off blockwise: free cells
contribute nothing, RepSphere(t, l) gives (z^l), both unreduced suspensions
give the augmentation ideal (w, z), and each quaternionic suspension
multiplies the ideal by (z).

Free cells absorb suspensions as plain degree shifts (a suspension by any
representation of real dimension r is an r-fold ordinary suspension on a
free space), which is what makes the duality bookkeeping below work.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from math import gcd

from .ideals import IdealForm, ideal_from_generators, ideal_product
from .ring import W, Z, z_pow


class SpectraError(Exception):
    pass


class UnsupportedBlockError(SpectraError):
    pass


class UnsupportedSeifertDataError(SpectraError):
    pass


@dataclass(frozen=True)
class RepSphere:
    t: int = 0
    l: int = 0

    def __post_init__(self):
        if self.t < 0 or self.l < 0:
            raise UnsupportedBlockError("representation sphere needs t, l >= 0")

    def label(self):
        return f"(C~^{self.t} + H^{self.l})^+" if (self.t or self.l) else "S^0"


@dataclass(frozen=True)
class GroupSuspension:
    t: int = 0
    l: int = 0

    def __post_init__(self):
        if self.t < 0 or self.l < 0:
            raise UnsupportedBlockError("suspension pair must be nonnegative")

    def label(self):
        return _susp_label("SuspG", self.t, self.l)


@dataclass(frozen=True)
class TorusSuspension:
    t: int = 0
    l: int = 0

    def __post_init__(self):
        if self.t < 0 or self.l < 0:
            raise UnsupportedBlockError("suspension pair must be nonnegative")

    def label(self):
        return _susp_label("SuspT", self.t, self.l)


def _susp_label(name, t, l):
    prefix = ""
    if t:
        prefix += f"S^(C~^{t}) "
    if l:
        prefix += f"S^(H^{l}) "
    return prefix + name


@dataclass(frozen=True)
class FreeCell:
    a: int

    def label(self):
        return f"S^{self.a} G+"


@dataclass(frozen=True)
class SwfSpace:
    base: object
    free: tuple = ()

    def __post_init__(self):
        if not isinstance(self.base, (RepSphere, GroupSuspension, TorusSuspension)):
            raise UnsupportedBlockError(f"unsupported base block {self.base!r}")
        free = tuple(self.free)
        if not all(isinstance(c, FreeCell) for c in free):
            raise UnsupportedBlockError("free summands must be FreeCell blocks")
        object.__setattr__(self, "free", free)

    @property
    def level(self):
        return 2 * self.base.t

    def labels(self):
        return [self.base.label()] + [c.label() for c in self.free]


def ideal_of(space: SwfSpace) -> IdealForm:
    """Restriction-image ideal of the space; free cells never contribute."""
    base = space.base
    if isinstance(base, RepSphere):
        return ideal_from_generators([z_pow(base.l)])
    aug = ideal_from_generators([W, Z])
    if base.l:
        return ideal_product(aug, ideal_from_generators([z_pow(base.l)]))
    return aug


def k_of(space: SwfSpace) -> int:
    return ideal_of(space).k_invariant()


def is_kg_split_space(space: SwfSpace) -> bool:
    return ideal_of(space).is_kg_split()


REP_CTILDE = "c~"
REP_H = "h"


@dataclass(frozen=True)
class SpectrumClass:
    """Space with formal de-suspension counts (m sign planes, n quaternions)."""

    space: SwfSpace
    m: int = 0
    n: Fraction = Fraction(0)

    def __post_init__(self):
        n = Fraction(self.n)
        if (16 * n).denominator != 1:
            raise UnsupportedBlockError("n must have denominator dividing 16")
        object.__setattr__(self, "n", n)

    # -- invariants ------------------------------------------------------------

    def ideal(self):
        return ideal_of(self.space)

    def k(self):
        return k_of(self.space)

    def kappa(self) -> Fraction:
        return 2 * (Fraction(self.k()) - self.n)

    def is_floer_kg_split(self):
        return is_kg_split_space(self.space)

    # -- suspension bookkeeping --------------------------------------------------

    def suspend(self, rep, count=1):
        """Genuinely suspend the underlying space count times by rep."""
        if count < 0:
            raise ValueError("count must be nonnegative")
        base = self.space.base
        if rep == REP_H:
            base = replace(base, l=base.l + count)
            shift = 4 * count
        elif rep == REP_CTILDE:
            base = replace(base, t=base.t + count)
            shift = 2 * count
        else:
            raise ValueError(f"unknown representation {rep!r}")
        free = tuple(FreeCell(c.a + shift) for c in self.space.free)
        return SpectrumClass(SwfSpace(base, free), self.m, self.n)

    def desuspend(self, rep, count=1):
        """Formally de-suspend count times by rep (bumps the (m, n) indices)."""
        if count < 0:
            raise ValueError("count must be nonnegative")
        if rep == REP_H:
            return SpectrumClass(self.space, self.m, self.n + count)
        if rep == REP_CTILDE:
            return SpectrumClass(self.space, self.m + count, self.n)
        raise ValueError(f"unknown representation {rep!r}")

    def normalize(self):
        """Canonical representative: base suspensions pushed into (m, n)."""
        base = self.space.base
        t, l = base.t, base.l
        if t == 0 and l == 0:
            return self
        stripped = replace(base, t=0, l=0)
        free = tuple(FreeCell(c.a - 2 * t - 4 * l) for c in self.space.free)
        return SpectrumClass(SwfSpace(stripped, free), self.m - t, self.n - l)

    def dual(self):
        """Blockwise Spanier-Whitehead dual with suspension bookkeeping.

        The two unreduced suspensions are dual to each other across one
        quaternionic de-suspension; free cells in absolute degree c go to
        absolute degree -1 - c; representation spheres are self-dual with
        the indices negated.
        """
        cls = self.normalize()
        base = cls.space.base
        if isinstance(base, RepSphere):
            dual_base, n_offset = base, Fraction(0)
        elif isinstance(base, GroupSuspension):
            dual_base, n_offset = TorusSuspension(), Fraction(1)
        else:
            dual_base, n_offset = GroupSuspension(), Fraction(1)
        new_m = -cls.m
        new_n = n_offset - cls.n
        cells = []
        for cell in cls.space.free:
            c = Fraction(cell.a) - 2 * cls.m - 4 * cls.n
            cprime = -1 - c
            a_new = cprime + 2 * new_m + 4 * new_n
            if a_new.denominator != 1:
                raise UnsupportedBlockError("free cell degree is not integral after duality")
            cells.append(FreeCell(int(a_new)))
        return SpectrumClass(SwfSpace(dual_base, tuple(cells)), new_m, new_n)

    def labels(self):
        return self.space.labels()


def s3_class() -> SpectrumClass:
    return SpectrumClass(SwfSpace(RepSphere(0, 0)), 0, Fraction(0))


def psc_class(n_correction) -> SpectrumClass:
    """Class of a sphere-like flow with the given index correction n."""
    return SpectrumClass(SwfSpace(RepSphere(0, 0)), 0, Fraction(n_correction) / 2)


def psc_kappa(n_correction) -> Fraction:
    return psc_class(n_correction).kappa()


def brieskorn_family(m):
    """Family key and index for Sigma(2, 3, m): one of 12n-1, 12n-5, 12n+1, 12n+5."""
    if m < 7 or gcd(m, 6) != 1:
        raise UnsupportedSeifertDataError(f"unsupported Seifert data (2, 3, {m})")
    r = m % 12
    if r == 11:
        return "12n-1", (m + 1) // 12
    if r == 7:
        return "12n-5", (m + 5) // 12
    if r == 1:
        return "12n+1", (m - 1) // 12
    if r == 5:
        return "12n+5", (m - 5) // 12
    raise UnsupportedSeifertDataError(f"unsupported Seifert data (2, 3, {m})")


def brieskorn_class(m, orientation="+") -> SpectrumClass:
    """Spectrum class of Sigma(2, 3, m) with the chosen orientation.

    Positive orientation means bounding the negative-definite plumbing; the
    reversed orientation is computed as the dual class.  The two families
    with trivial base are stored in their quaternion-suspended form; use
    normalize() for the representative with negative cell degrees.
    """
    if orientation not in ("+", "-"):
        raise UnsupportedSeifertDataError(f"bad orientation {orientation!r}")
    family, n = brieskorn_family(m)
    if family == "12n-1":
        cls = SpectrumClass(
            SwfSpace(GroupSuspension(), (FreeCell(1),) * (n - 1)), 0, Fraction(0)
        )
    elif family == "12n-5":
        cls = SpectrumClass(
            SwfSpace(GroupSuspension(), (FreeCell(1),) * (n - 1)), 0, Fraction(1, 2)
        )
    elif family == "12n+1":
        cls = SpectrumClass(SwfSpace(RepSphere(0, 1), (FreeCell(3),) * n), 0, Fraction(1))
    else:  # 12n+5
        cls = SpectrumClass(SwfSpace(RepSphere(0, 1), (FreeCell(3),) * n), 0, Fraction(1, 2))
    return cls if orientation == "+" else cls.dual()


def brieskorn_kappa(m, orientation="+") -> Fraction:
    return brieskorn_class(m, orientation).kappa()
