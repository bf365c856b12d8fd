"""Exact row-echelon spans of integer or rational coefficient vectors.

The one workhorse class keeps a set of rows in echelon form, pivot =
leftmost nonzero entry.  Over the integers rows are combined with the
extended gcd, so the final form is a Hermite normal form; over the
rationals pivots divide exactly.  Optional per-column moduli adjoin the
relation rows m_c * e_c, which lets the same integer kernel model spans
over Z/m (lift, track, reduce).  Optional payload columns ride along all
row operations but never host pivots; reducing a target against the rows
then leaves a certificate of the combination used.
"""

from __future__ import annotations

__all__ = ["xgcd", "RowEchelon"]


def xgcd(a: int, b: int):
    # Invariants: x*a + y*b == g and next_x*a + next_y*b == next_g.
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


class RowEchelon:
    __slots__ = ("ncols", "field", "moduli", "npay", "_piv")

    def __init__(self, ncols: int, *, field: bool = False, moduli=None, payload: int = 0):
        if field and moduli:
            raise ValueError("field mode and moduli are mutually exclusive")
        self.ncols = ncols
        self.field = field
        self.moduli = list(moduli) if moduli else None
        if self.moduli is not None and len(self.moduli) != ncols:
            raise ValueError("one modulus per column expected")
        self.npay = payload
        self._piv: dict[int, list] = {}
        if self.moduli:
            for c, m in enumerate(self.moduli):
                if m:
                    row = [0] * (ncols + payload)
                    row[c] = m
                    self.insert(row)

    # -- internals -------------------------------------------------------

    def _prepare(self, vec) -> list:
        vec = list(vec)
        if len(vec) == self.ncols and self.npay:
            vec += [0] * self.npay
        if len(vec) != self.ncols + self.npay:
            raise ValueError("vector length mismatch")
        self._normalize(vec)
        return vec

    def _normalize(self, vec):
        if self.moduli:
            for c, m in enumerate(self.moduli):
                if m:
                    vec[c] %= m

    def _first_nonzero(self, vec, start: int = 0):
        for c in range(start, self.ncols):
            if vec[c]:
                return c
        return None

    # -- span building ---------------------------------------------------

    def insert(self, vec) -> bool:
        """Add a vector to the span; returns True if the span changed."""
        vec = self._prepare(vec)
        changed = False
        c = self._first_nonzero(vec)
        while c is not None:
            row = self._piv.get(c)
            if row is None:
                self._piv[c] = vec
                return True
            a, b = row[c], vec[c]
            if self.field:
                q = b / a
                for t in range(c, len(vec)):
                    vec[t] -= q * row[t]
            elif b % a == 0:
                q = b // a
                for t in range(c, len(vec)):
                    vec[t] -= q * row[t]
                self._normalize(vec)
            else:
                # Unimodular 2x2 mix: the row keeps the pivot (now the gcd)
                # and the candidate's entry at this column becomes zero.
                x, y, g = xgcd(a, b)
                u, v = a // g, b // g
                new_row = [x * ra + y * vb for ra, vb in zip(row, vec)]
                new_vec = [u * vb - v * ra for ra, vb in zip(row, vec)]
                self._normalize(new_row)
                self._normalize(new_vec)
                self._piv[c] = new_row
                vec = new_vec
                changed = True
            c = self._first_nonzero(vec, c + 1)
        return changed

    # -- queries ----------------------------------------------------------

    def reduce(self, vec) -> list:
        """Exact-division reduction of a target against the rows.

        At each pivot column the entry is subtracted only when the pivot
        divides it exactly (fields always divide), so a zero remainder in
        the lattice columns certifies span membership.  Payload columns of
        the remainder record the negated combination coefficients.
        """
        vec = self._prepare(vec)
        for c in range(self.ncols):
            if self.moduli and self.moduli[c]:
                vec[c] %= self.moduli[c]
            b = vec[c]
            if not b:
                continue
            row = self._piv.get(c)
            if row is None:
                continue
            a = row[c]
            if self.field or b % a == 0:
                q = b / a if self.field else b // a
                for t in range(c, len(vec)):
                    vec[t] -= q * row[t]
        return vec

    def contains(self, vec) -> bool:
        return not any(self.reduce(vec)[: self.ncols])

    def pivot_value(self, col: int):
        row = self._piv.get(col)
        return row[col] if row is not None else None

    def pivot_row(self, col: int):
        row = self._piv.get(col)
        return list(row) if row is not None else None

    def rows(self) -> list:
        """(pivot column, row copy) pairs, leftmost pivots first."""
        return [(c, list(self._piv[c])) for c in sorted(self._piv)]

    # -- canonical form ---------------------------------------------------

    def canonicalize(self):
        """Positive pivots (1 over a field) and entries above each pivot
        reduced into [0, pivot) (to 0 over a field)."""
        for c in sorted(self._piv):
            row = self._piv[c]
            if self.field:
                a = row[c]
                if a != 1:
                    self._piv[c] = [x / a for x in row]
            elif row[c] < 0:
                self._piv[c] = [-x for x in row]
        cols = sorted(self._piv)
        for i, c in enumerate(cols):
            row = self._piv[c]
            a = row[c]
            for c2 in cols[:i]:
                upper = self._piv[c2]
                b = upper[c]
                q = b / a if self.field else b // a
                if q:
                    upper = [ub - q * rb for ub, rb in zip(upper, row)]
                    self._normalize(upper)
                    self._piv[c2] = upper
