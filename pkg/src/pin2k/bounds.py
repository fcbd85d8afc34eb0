"""Admissibility checks for spin intersection forms p(-E8) + q*H.

Every check instantiates one exact inequality and returns a Verdict; all
comparisons run in exact integers or rationals.  The xi pipeline combines
three upper-bound routes (stored spin fillings, stored orbifold constants,
and kappa computed through the spectrum-class machinery) with lower bounds
read off the filling table.

Filling table conventions: a stored filling (p, q) of a manifold Y also
yields, with reversed orientation, a filling (-p, q) of -Y.  A filling of
-Y with form (p', q') caps any filling of Y, giving xi(Y) <= q' - p' - 1;
only fillings with q > 0 count toward the lower bound, matching the
convention that xi maximizes p - q over forms with at least one hyperbolic
summand.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .spectra import UnsupportedSeifertDataError, brieskorn_class, brieskorn_family, s3_class


class BoundsError(Exception):
    pass


class UnknownManifoldError(BoundsError):
    pass


class MalformedChainError(BoundsError):
    pass


class Status(Enum):
    SATISFIED = "satisfied"
    VIOLATED = "violated"
    INAPPLICABLE = "inapplicable"


@dataclass(frozen=True)
class Verdict:
    status: Status
    inequality: str

    def exit_code(self):
        return 1 if self.status is Status.VIOLATED else 0


@dataclass(frozen=True)
class IntersectionForm:
    """p copies of -E8 (negative p means +E8) plus q hyperbolic summands."""

    p: int
    q: int

    def __post_init__(self):
        if self.q < 0:
            raise ValueError("q must be nonnegative")

    @property
    def b2(self):
        return 8 * abs(self.p) + 2 * self.q

    @property
    def signature(self):
        return -8 * self.p


@dataclass(frozen=True)
class BoundaryData:
    kappa: int
    kg_split: bool
    name: str = ""


def _verdict(ok, text):
    return Verdict(Status.SATISFIED if ok else Status.VIOLATED, text)


def definite_bound(kappa0, kappa1, b2):
    """Negative-definite spin cobordism: kappa1 >= kappa0 + b2/8."""
    if b2 < 0 or b2 % 8:
        return Verdict(Status.INAPPLICABLE, f"b2 = {b2} is not a nonnegative multiple of 8")
    need = kappa0 + b2 // 8
    return _verdict(kappa1 >= need, f"{kappa1} >= {kappa0} + {b2}/8 = {need}")


def relative_10_8(kappa0, kappa1, p, q):
    """General spin cobordism: kappa1 + q >= kappa0 + p - 1."""
    return _verdict(
        kappa1 + q >= kappa0 + p - 1,
        f"{kappa1} + {q} >= {kappa0} + {p} - 1",
    )


def split_bound(kappa0, kappa1, p, q, y0_kg_split=True, parity_refined=False):
    """Sharper cobordism bound off a split start: kappa1 + q >= kappa0 + p + 1.

    With the parity refinement and q even the free term improves to + 2.
    """
    if q <= 0:
        return Verdict(Status.INAPPLICABLE, f"q = {q} but a hyperbolic summand is required")
    if not y0_kg_split:
        return Verdict(Status.INAPPLICABLE, "starting boundary is not split")
    bump = 2 if (parity_refined and q % 2 == 0) else 1
    return _verdict(
        kappa1 + q >= kappa0 + p + bump,
        f"{kappa1} + {q} >= {kappa0} + {p} + {bump}",
    )


def furuta_closed(p, q):
    """Closed-manifold 10/8 bound: q >= p + 1."""
    if q <= 0 or p < 0:
        return Verdict(Status.INAPPLICABLE, f"needs q > 0 and p >= 0, got p={p}, q={q}")
    return _verdict(q >= p + 1, f"{q} >= {p} + 1")


def conjecture_11_8(p, q):
    """Closed-manifold 11/8 conjecture: q >= 3p/2, checked in exact rationals."""
    if q <= 0 or p < 0:
        return Verdict(Status.INAPPLICABLE, f"needs q > 0 and p >= 0, got p={p}, q={q}")
    return _verdict(Fraction(q) >= Fraction(3 * p, 2), f"{q} >= 3*{p}/2")


def orbifold_bound(p, q, b2plus_filling, mu_bar):
    """Orbifold-capped 10/8 bound: q + b2plus >= 1 + mu_bar + p."""
    if q < 1:
        return Verdict(Status.INAPPLICABLE, f"q = {q} but q >= 1 is required")
    return _verdict(
        q + b2plus_filling >= 1 + mu_bar + p,
        f"{q} + {b2plus_filling} >= 1 + {mu_bar} + {p}",
    )


def rokhlin_consistency(kappa0, kappa1, p):
    """kappa0 - kappa1 and p must have the same parity across a spin cobordism."""
    return _verdict(
        (kappa0 - kappa1 - p) % 2 == 0,
        f"{kappa0} - {kappa1} == {p} mod 2",
    )


def bohr_lee_bound(kappa):
    """Upper bound 2*kappa for the signature-defect invariant of the reverse."""
    return 2 * kappa


# -- decomposition chains -------------------------------------------------------


def bauer_chain_check(chain):
    """Check a decomposition of a closed spin manifold into pieces glued
    along homology spheres.

    chain is a list of (IntersectionForm, BoundaryData or None) pairs; entry
    i describes piece i and its outgoing boundary.  The last boundary may be
    None (the chain closes up, equivalent to a standard sphere).  Every
    inequality uses the split cobordism bound, so all interior boundaries
    must be flagged split; otherwise the check is inapplicable.  Violated
    means the decomposition cannot exist.
    """
    if not chain:
        raise MalformedChainError("empty chain")
    s3 = BoundaryData(0, True, "S^3")
    pieces = []
    for idx, (form, boundary) in enumerate(chain):
        if boundary is None:
            if idx != len(chain) - 1:
                raise MalformedChainError("only the final boundary may be omitted")
            boundary = s3
        pieces.append((form, boundary))

    incoming = s3
    for form, outgoing in pieces:
        if not incoming.kg_split:
            return Verdict(
                Status.INAPPLICABLE,
                f"boundary {incoming.name or '?'} is not split",
            )
        if form.q <= 0:
            return Verdict(Status.INAPPLICABLE, f"piece with q = {form.q} has no hyperbolic part")
        incoming = outgoing

    incoming = s3
    failures = []
    for form, outgoing in pieces:
        step = split_bound(incoming.kappa, outgoing.kappa, form.p, form.q, True)
        if step.status is Status.VIOLATED:
            failures.append(step.inequality)
        incoming = outgoing
    if failures:
        return Verdict(Status.VIOLATED, "; ".join(failures))
    return Verdict(Status.SATISFIED, "all piecewise bounds hold")


def canonical_bauer_chain(r, non_split_at=None):
    """The standard decomposition: r - 1 pieces 2(-E8)+3H, one final 2(-E8)+2H.

    Interior boundaries get kappa 0 and are split unless non_split_at names
    one of them (1-based).
    """
    if r < 1:
        raise MalformedChainError("need at least one piece")
    chain = []
    for i in range(1, r):
        split = non_split_at != i
        chain.append((IntersectionForm(2, 3), BoundaryData(0, split, f"Y{i}")))
    chain.append((IntersectionForm(2, 2), None))
    return chain


# -- the xi pipeline -------------------------------------------------------------


@dataclass(frozen=True)
class Manifold:
    """A supported boundary: the standard sphere or an oriented Sigma(2,3,m).

    m is None for a whole-family query (generic index, no sporadic fillings).
    """

    sign: int = 1
    family: str = "S3"
    m: int | None = None

    def label(self):
        if self.family == "S3":
            return "S^3"
        body = f"Sigma(2,3,{self.m})" if self.m else f"Sigma(2,3,{self.family})"
        return body if self.sign > 0 else "-" + body


_MANIFOLD_RE = re.compile(r"^(-?)Sigma\(2,\s*3,\s*([0-9n+-]+)\)$")

_FAMILIES = ("12n-1", "12n-5", "12n+1", "12n+5")


def parse_manifold(text):
    text = text.strip()
    if text in ("S3", "S^3"):
        return Manifold()
    match = _MANIFOLD_RE.match(text)
    if not match:
        raise UnknownManifoldError(f"cannot parse manifold {text!r}")
    sign = -1 if match.group(1) else 1
    body = match.group(2)
    if body in _FAMILIES:
        return Manifold(sign, body, None)
    try:
        m = int(body)
    except ValueError:
        raise UnknownManifoldError(f"cannot parse manifold {text!r}") from None
    try:
        family, _ = brieskorn_family(m)
    except UnsupportedSeifertDataError:
        raise UnknownManifoldError(f"unsupported manifold {text!r}") from None
    return Manifold(sign, family, m)


# Stored spin fillings, one orientation each; reversal is derived.  Entries:
# (sign, family) -> [(p, q, source)]; sporadic entries keyed by (sign, m).
_FAMILY_FILLINGS = {
    (1, "S3"): [(0, 0, "four-ball"), (2, 3, "K3 minus a ball")],
    (-1, "12n-1"): [(0, 1, "nucleus N(2n)")],
    (-1, "12n-5"): [(1, 1, "-E10 plumbing")],
    (-1, "12n+1"): [(0, 1, "twisted H-plumbing")],
    (1, "12n+5"): [(1, 1, "-E8 + H plumbing")],
}

_SPORADIC_FILLINGS = {
    (1, 11): [(2, 2, "K3 minus the nucleus")],
    (1, 7): [(1, 2, "K3 minus the -E10 plumbing")],
    (1, 13): [(0, 0, "homology ball")],
    (1, 25): [(0, 0, "homology ball")],
}

# Printed orbifold-method upper bounds for xi, per family and orientation.
_ORBIFOLD_UPPER = {
    (1, "12n-1"): 0,
    (-1, "12n-1"): -1,
    (1, "12n-5"): -1,
    (-1, "12n-5"): 0,
    (1, "12n+1"): 0,
    (-1, "12n+1"): -1,
    (1, "12n+5"): 1,
    (-1, "12n+5"): -2,
}

# Smallest member of each family, used to evaluate the index-independent kappa.
_FAMILY_REP = {"12n-1": 11, "12n-5": 7, "12n+1": 13, "12n+5": 17}


def _fillings(manifold):
    """All stored fillings of the given oriented manifold, reversals included."""
    out = []
    for (sign, family), rows in _FAMILY_FILLINGS.items():
        if family != manifold.family:
            continue
        for p, q, src in rows:
            if sign == manifold.sign:
                out.append((p, q, src))
            else:
                out.append((-p, q, "reversed " + src))
    for (sign, m), rows in _SPORADIC_FILLINGS.items():
        if manifold.m is None or m != manifold.m:
            continue
        for p, q, src in rows:
            if sign == manifold.sign:
                out.append((p, q, src))
            else:
                out.append((-p, q, "reversed " + src))
    return out


def manifold_kappa(manifold):
    if manifold.family == "S3":
        return s3_class().kappa()
    m = manifold.m if manifold.m is not None else _FAMILY_REP[manifold.family]
    return brieskorn_class(m, "+" if manifold.sign > 0 else "-").kappa()


@dataclass(frozen=True)
class XiBounds:
    manifold: Manifold
    lower: int | None
    upper_filling: int | None
    upper_orbifold: int | None
    upper_kappa: int
    upper: int
    exact: int | None


def xi_bounds(manifold) -> XiBounds:
    """Best stored/computed bounds on xi = max(p - q) over spin fillings."""
    if isinstance(manifold, str):
        manifold = parse_manifold(manifold)
    if manifold.family != "S3" and manifold.family not in _FAMILIES:
        raise UnknownManifoldError(f"unsupported manifold {manifold!r}")

    own = _fillings(manifold)
    reverse = _fillings(Manifold(-manifold.sign, manifold.family, manifold.m))

    lowers = [p - q for p, q, _ in own if q > 0]
    lower = max(lowers) if lowers else None
    up_fill = min((q - p - 1 for p, q, _ in reverse), default=None)
    up_orb = _ORBIFOLD_UPPER.get((manifold.sign, manifold.family))
    kappa = manifold_kappa(manifold)
    if kappa.denominator != 1:
        raise UnknownManifoldError("kappa is not an integer for this input")
    up_kappa = int(kappa) - 1

    uppers = [u for u in (up_fill, up_orb, up_kappa) if u is not None]
    upper = min(uppers)
    exact = lower if lower == upper else None
    return XiBounds(manifold, lower, up_fill, up_orb, up_kappa, upper, exact)


_XI_TABLE_ROWS = (
    "S3",
    "Sigma(2,3,12n-1)",
    "Sigma(2,3,11)",
    "-Sigma(2,3,12n-1)",
    "Sigma(2,3,12n-5)",
    "Sigma(2,3,7)",
    "-Sigma(2,3,12n-5)",
    "Sigma(2,3,12n+1)",
    "-Sigma(2,3,12n+1)",
    "Sigma(2,3,12n+5)",
    "-Sigma(2,3,12n+5)",
)


def xi_table_rows():
    return [xi_bounds(name) for name in _XI_TABLE_ROWS]


def emit_xi_table():
    """Fixed-width report of every supported xi determination."""
    rows = xi_table_rows()
    header = f"{'manifold':<20} {'lower':>6} {'up(fill)':>9} {'up(orb)':>8} {'up(kappa)':>10} {'upper':>6}  xi"
    lines = [header, "-" * len(header)]
    for row in rows:
        xi = str(row.exact) if row.exact is not None else f"in [{row.lower}, {row.upper}]"
        lines.append(
            f"{row.manifold.label():<20} {_cell(row.lower):>6} {_cell(row.upper_filling):>9} "
            f"{_cell(row.upper_orbifold):>8} {row.upper_kappa:>10} {row.upper:>6}  {xi}"
        )
    return "\n".join(lines) + "\n"


def _cell(value):
    return "-" if value is None else str(value)
