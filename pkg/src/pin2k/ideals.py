"""Canonical forms and decision procedures for finitely generated ideals.

An element lam*w + P(z) of the ring is treated as the pair (P, lam) in the
module Z[z] (+) Z*w, where z acts on the w-line by multiplication by 2 and
multiplying by w collapses everything onto the w-line.  An ideal is then a
sublattice of that module closed under the z-shift and the w-action, and it
admits a Hermite-style completed basis:

  * at most one basis element per polynomial degree, with positive leading
    coefficient; same-degree elements are merged by extended-gcd steps;
  * the z-shift of every kept element and the w-image w_multiplier(x)*w of
    every generator are folded back in;
  * a single pure-w element d*w records the subgroup {lam : lam*w in I}.

Completion terminates: gcd merges never raise the polynomial degree, shifts
are only taken below the maximal generator degree, and the leading
coefficient at each degree can only shrink along a divisor chain.  Two
integers summarize the w-line:

  e  generates {w_multiplier(x) : x in I}  (the gcd over any generating set,
     since w_multiplier is multiplicative and Z-linear);
  d  generates {lam : lam*w in I};  d | e and e | 2d whenever I != 0 has a
     pure-w element.

Membership is decided by strong reduction against the completed basis:
divide leading terms by the nearest basis pivot at or below the current
degree (shifting by powers of z), then reduce the leftover w-part mod d.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from math import gcd

from .lattice import IntLattice, xgcd
from .ring import ONE, RingElem, Z, w_pow, z_pow

K_MAX_DEFAULT = 64


class IdealError(Exception):
    pass


class NoWitnessError(IdealError):
    """No element x of the ideal satisfies w*x = 2^k*w for any k."""


class NotSwfLikeError(IdealError):
    """The w-multiplier subgroup has an odd factor, so no power of 2 lies in it."""


class NoWitnessBelowCapError(IdealError):
    """Search for an exponent witness exceeded the configured cap."""


class NoSuchKError(IdealError):
    """The ideal meets no line Z*z^k + Z*w with nonzero z-part below the cap."""


@dataclass(frozen=True)
class IdealForm:
    """Completed canonical form of a finitely generated ideal.

    basis is sorted by polynomial degree with the pure-w element (if any)
    first; e and d are the w-line subgroup generators described in the
    module docstring.
    """

    basis: tuple = ()
    e: int = 0
    d: int = 0

    # -- queries --------------------------------------------------------------

    def is_zero(self):
        return not self.basis

    def _pivots(self):
        degrees = []
        table = {}
        for b in self.basis:
            if b.poly:
                degrees.append(b.degree)
                table[b.degree] = b
        return degrees, table

    def contains(self, x):
        return _reduce(x, *self._pivots(), self.d).is_zero()

    def equals(self, other):
        return all(other.contains(b) for b in self.basis) and all(
            self.contains(b) for b in other.basis
        )

    def k_invariant(self):
        """Least k with some x in the ideal satisfying w*x = 2^k*w.

        Such x exists iff 2^k lies in the subgroup e*Z, so the answer is
        log2(e) when e is a power of two.
        """
        if self.e == 0:
            raise NoWitnessError("the w-multiplier subgroup is trivial")
        a = self.e.bit_length() - 1
        if self.e != 1 << a:
            raise NotSwfLikeError(f"w-multiplier generator {self.e} has an odd factor")
        return a

    def is_kg_split(self):
        """True iff the ideal equals (z^k) for k its k-invariant."""
        try:
            k = self.k_invariant()
        except IdealError:
            return False
        return self.equals(ideal_from_generators([z_pow(k)]))

    def nilpotence_exponent(self, k_max=K_MAX_DEFAULT):
        """Smallest k >= 0 with both w^k and z^k in the ideal."""
        for k in range(k_max + 1):
            if self.contains(w_pow(k)) and self.contains(z_pow(k)):
                return k
        raise NoWitnessBelowCapError(f"no exponent witness up to {k_max}")

    def zw_exponent(self, k_max=K_MAX_DEFAULT):
        """Minimal k such that the ideal contains lam*z^k + mu*w with lam != 0.

        For each k, the degree-<=k slice of the ideal is spanned over Z by
        the z-shifts of basis elements that stay within degree k plus the
        pure-w element; column-reducing that lattice over the coordinates
        (1, z, ..., z^k, w) exposes whether a row pivots on z^k.
        """
        if self.is_zero():
            raise NoSuchKError("zero ideal")
        for k in range(k_max + 1):
            lat = IntLattice(k + 2)
            for b in self.basis:
                if not b.poly:
                    lat.add([0] * (k + 1) + [b.wcoef])
                    continue
                for j in range(k - b.degree + 1):
                    g = z_pow(j) * b
                    vec = list(g.poly) + [0] * (k + 1 - len(g.poly)) + [g.wcoef]
                    lat.add(vec)
            if lat.pivot_row(k) is not None:
                return k
        raise NoSuchKError(f"no suitable power of z up to {k_max}")


def _reduce(x, degrees, table, d):
    """Strong-reduce x against pivot table; the remainder is 0 iff x is a member."""
    while x.poly:
        e = x.degree
        idx = bisect_right(degrees, e) - 1
        if idx < 0:
            return x
        ep = degrees[idx]
        f = table[ep]
        a = x.poly[-1]
        c = f.poly[-1]
        if a % c:
            return x
        x = x - (a // c) * (z_pow(e - ep) * f)
    if d:
        return RingElem(x.wcoef % d, ())
    return x


def ideal_from_generators(gens, *, run_checks=True):
    """Canonical completed form of the ideal generated by gens."""
    gens = [g if isinstance(g, RingElem) else RingElem(0, (g,)) for g in gens]
    gens = [g for g in gens if not g.is_zero()]
    e = 0
    for g in gens:
        e = gcd(e, g.w_multiplier())

    pool = {}  # polynomial degree -> element with that degree, leading coeff > 0
    d = 0
    max_deg = max((g.degree for g in gens if g.poly), default=-1)
    work = list(gens)
    work.extend(RingElem(g.w_multiplier(), ()) for g in gens)  # w-action closure

    def clamp(x):
        # keep sub-leading coefficients below the current pivots; without this
        # the xgcd merges compound tail entries to astronomically many bits
        for pos in range(x.degree - 1, -1, -1):
            b = x.poly[pos] if pos < len(x.poly) else 0
            if not b:
                continue
            ep = max((e for e in pool if e <= pos), default=None)
            if ep is None:
                continue
            q = b // pool[ep].poly[-1]
            if q:
                x = x - q * (z_pow(pos - ep) * pool[ep])
        if d and x.wcoef:
            x = RingElem(x.wcoef % d, x.poly)
        return x

    def assigned(f):
        # closing under the z-shift (bounded by max_deg) and the w-action;
        # z acting on pure-w elements only doubles them, so d absorbs it
        if f.degree < max_deg:
            work.append(Z * f)
        work.append(RingElem(f.w_multiplier(), ()))

    while work:
        x = work.pop()
        while x.poly:
            deg = x.degree
            a = x.poly[-1]
            f = pool.get(deg)
            if f is None:
                if a < 0:
                    x = -x
                pool[deg] = clamp(x)
                assigned(pool[deg])
                x = RingElem()
                break
            c = f.poly[-1]
            if a % c == 0:
                x = x - (a // c) * f
            else:
                u, v, g = xgcd(c, a)
                merged = clamp(u * f + v * x)
                pool[deg] = merged
                assigned(merged)
                work.append(clamp(f - (c // g) * merged))
                x = x - (a // g) * merged
            x = clamp(x)
        if x.wcoef:
            d = gcd(d, abs(x.wcoef))

    # prune pivots that reduce to zero by shifts of lower ones, top down
    for deg in sorted(pool, reverse=True):
        rest = {k: v for k, v in pool.items() if k != deg}
        degrees = sorted(rest)
        if _reduce(pool[deg], degrees, rest, d).is_zero():
            del pool[deg]

    # canonical tails: sub-leading coefficients into [0, pivot), w-part mod d
    degrees = sorted(pool)
    for deg in degrees:
        f = pool[deg]
        for pos in range(deg - 1, -1, -1):
            b = f.poly[pos] if pos < len(f.poly) else 0
            idx = bisect_right(degrees, pos) - 1
            if idx < 0:
                continue
            ep = degrees[idx]
            c = pool[ep].poly[-1]
            q = b // c
            if q:
                f = f - q * (z_pow(pos - ep) * pool[ep])
        if d:
            f = RingElem(f.wcoef % d, f.poly)
        pool[deg] = f

    basis = []
    if d:
        basis.append(RingElem(d, ()))
    basis.extend(pool[deg] for deg in degrees)

    form = IdealForm(tuple(basis), abs(e), d)
    if run_checks and basis:
        assert d == 0 or e % d == 0, (e, d)
        assert e == 0 or (2 * d) % e == 0, (e, d)
    return form


def ideal_sum(i, j):
    return ideal_from_generators(i.basis + j.basis)


def ideal_product(i, j):
    return ideal_from_generators([a * b for a in i.basis for b in j.basis])


def unit_ideal():
    return ideal_from_generators([ONE])


def z_power_ideal(k):
    return ideal_from_generators([z_pow(k)])
