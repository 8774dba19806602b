"""Exact sparse linear algebra over QQ and GF(p)."""
from __future__ import annotations


class RowSpace:
    """Incrementally built reduced row echelon form.

    Rows are dicts ``{column: value}``; the pivot of a row is its smallest
    column index, so with columns sorted largest monomial first the pivots
    are the leading monomials of the span.
    """

    def __init__(self, field):
        self.field = field
        self.rows = {}      # pivot -> monic row, no other pivot columns present

    @property
    def rank(self):
        return len(self.rows)

    def pivots(self):
        return set(self.rows)

    def reduce(self, row):
        """Remove all pivot columns from ``row`` (returns a new dict)."""
        norm = self.field.normalize
        row = {k: v for k, v in row.items() if v}
        for piv in [k for k in row if k in self.rows]:
            c = row.get(piv)
            if not c:
                continue
            for k, a in self.rows[piv].items():
                b = norm(row.get(k, 0) - c * a)
                if b:
                    row[k] = b
                else:
                    row.pop(k, None)
        return row

    def add(self, row):
        """Insert a row; True if it enlarged the span."""
        row = self.reduce(row)
        if not row:
            return False
        piv = min(row)
        inv = self.field.inv(row[piv])
        norm = self.field.normalize
        row = {k: norm(v * inv) for k, v in row.items()}
        for other in self.rows.values():
            c = other.get(piv)
            if c:
                for k, a in row.items():
                    b = norm(other.get(k, 0) - c * a)
                    if b:
                        other[k] = b
                    else:
                        other.pop(k, None)
        self.rows[piv] = row
        return True


def rank(rows, field):
    space = RowSpace(field)
    for r in rows:
        space.add(r)
    return space.rank
