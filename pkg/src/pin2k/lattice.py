"""Row-echelon integer lattices with exact arithmetic.

Rows are kept in Hermite-style echelon form: at most one row per pivot
column, each row zero left of its pivot, pivots positive.  Insertion uses
extended gcd steps, so the stored rows always span the same lattice as
everything added so far.
"""

from __future__ import annotations


def xgcd(a, b):
    """Return (x, y, g) with x*a + y*b == g == gcd(a, b), g >= 0."""
    x, nx = 1, 0
    y, ny = 0, 1
    g, ng = a, b
    while ng:
        q = g // ng
        x, nx = nx, x - q * nx
        y, ny = ny, y - q * ny
        g, ng = ng, g - q * ng
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


class IntLattice:
    def __init__(self, ncols):
        self.ncols = ncols
        self.pivot_rows = {}  # pivot column -> row (list of ints)

    def _settle(self, j):
        # keep entries reduced against the pivots; bounds coefficient growth
        row = self.pivot_rows[j]
        for jj in range(j + 1, self.ncols):
            other = self.pivot_rows.get(jj)
            if other is not None and row[jj]:
                q = row[jj] // other[jj]
                if q:
                    self.pivot_rows[j] = row = [ri - q * oi for ri, oi in zip(row, other)]
        for jj, other in self.pivot_rows.items():
            if jj < j and other[j]:
                q = other[j] // row[j]
                if q:
                    self.pivot_rows[jj] = [oi - q * ri for oi, ri in zip(other, row)]

    def add(self, vec):
        vec = list(vec)
        if len(vec) != self.ncols:
            raise ValueError("wrong vector length")
        for j in range(self.ncols):
            b = vec[j]
            if b == 0:
                continue
            row = self.pivot_rows.get(j)
            if row is None:
                if b < 0:
                    vec = [-c for c in vec]
                self.pivot_rows[j] = vec
                self._settle(j)
                return
            a = row[j]
            if b % a == 0:
                q = b // a
                for jj in range(j, self.ncols):
                    vec[jj] -= q * row[jj]
            else:
                x, y, g = xgcd(a, b)
                # new pivot row with entry g; the leftover keeps column j zero
                new_row = [x * row[jj] + y * vec[jj] for jj in range(self.ncols)]
                leftover = [(a // g) * vec[jj] - (b // g) * row[jj] for jj in range(self.ncols)]
                self.pivot_rows[j] = new_row
                self._settle(j)
                vec = leftover

    def contains(self, vec):
        vec = list(vec)
        for j in range(self.ncols):
            b = vec[j]
            if b == 0:
                continue
            row = self.pivot_rows.get(j)
            if row is None or b % row[j] != 0:
                return False
            q = b // row[j]
            for jj in range(j, self.ncols):
                vec[jj] -= q * row[jj]
        return True

    def pivot_row(self, col):
        return self.pivot_rows.get(col)
