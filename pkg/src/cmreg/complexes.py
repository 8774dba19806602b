"""Chain complexes of graded free modules and Betti tables."""
from __future__ import annotations

from itertools import combinations

from .ring import NEG_INF
from .modules import FreeModule, GradedMatrix, kronecker


class ChainComplex:
    """F_0 <- F_1 <- ... <- F_L with ``maps[i-1] = d_i : F_i -> F_{i-1}``."""

    def __init__(self, ring, modules, maps, truncated=False):
        if len(maps) != max(len(modules) - 1, 0):
            raise ValueError("need one map between consecutive modules")
        for i, d in enumerate(maps, start=1):
            if d.source.twists != modules[i].twists or d.target.twists != modules[i - 1].twists:
                raise ValueError(f"d_{i} does not match the modules")
        self.ring = ring
        self.modules = list(modules)
        self.maps = list(maps)
        self.truncated = truncated

    @property
    def length(self):
        return len(self.modules) - 1

    def module(self, i):
        if 0 <= i < len(self.modules):
            return self.modules[i]
        return FreeModule(self.ring, [])

    def differential(self, i):
        """d_i : F_i -> F_{i-1}; zero maps outside the stored range."""
        if 1 <= i <= len(self.maps):
            return self.maps[i - 1]
        return GradedMatrix.zero(self.module(i), self.module(i - 1))

    def ranks(self):
        return [f.rank for f in self.modules]

    def squares_to_zero(self):
        for i in range(2, len(self.modules)):
            if not (self.maps[i - 2] * self.maps[i - 1]).is_zero():
                return False
        return True

    def is_minimal(self):
        """No nonzero constant entries in any differential."""
        return not any(e.is_constant() and not e.is_zero()
                       for d in self.maps for row in d.rows for e in row)

    def betti_table(self):
        table = {}
        for i, f in enumerate(self.modules):
            for t in f.twists:
                table[(i, t)] = table.get((i, t), 0) + 1
        return BettiTable(table)

    def map_entries(self, fn, twist_fn, truncated=None):
        """Apply ``fn`` to every entry and ``twist_fn`` to every twist."""
        mods = [FreeModule(self.ring, [twist_fn(t) for t in f.twists]) for f in self.modules]
        maps = [d.map_entries(fn, mods[i + 1], mods[i]) for i, d in enumerate(self.maps)]
        return ChainComplex(self.ring, mods, maps, self.truncated if truncated is None else truncated)

    def trim(self):
        """Drop trailing zero modules."""
        k = len(self.modules)
        while k > 1 and self.modules[k - 1].rank == 0:
            k -= 1
        return ChainComplex(self.ring, self.modules[:k], self.maps[:k - 1], self.truncated)

    def __repr__(self):
        return f"ChainComplex(ranks={self.ranks()}{', truncated' if self.truncated else ''})"


class BettiTable:
    """Graded Betti numbers {(i, j): rank}, j the internal degree."""

    def __init__(self, table):
        self.table = {k: v for k, v in table.items() if v}

    def __getitem__(self, key):
        return self.table.get(key, 0)

    def __eq__(self, other):
        if isinstance(other, dict):
            return self.table == {k: v for k, v in other.items() if v}
        return isinstance(other, BettiTable) and self.table == other.table

    def __repr__(self):
        return f"BettiTable({dict(sorted(self.table.items()))})"

    @property
    def length(self):
        return max((i for i, _ in self.table), default=NEG_INF)

    def b(self, i):
        """Largest generator degree of F_i; -inf if F_i = 0."""
        return max((j for (k, j) in self.table if k == i), default=NEG_INF)

    def reg_upto(self, i):
        """max_{k <= i} (b_k - k)."""
        return max((j - k for (k, j) in self.table if k <= i), default=NEG_INF)

    def reg(self):
        return max((j - k for (k, j) in self.table), default=NEG_INF)

    def total(self, i):
        return sum(v for (k, _), v in self.table.items() if k == i)

    def to_json(self):
        reg = self.reg()
        return {"betti": [[i, j, r] for (i, j), r in sorted(self.table.items())],
                "reg": reg if reg != NEG_INF else "-inf"}

    def staircase(self):
        """Rows j - i, columns i; '.' for zero entries."""
        if not self.table:
            return "(zero)"
        cols = range(0, max(i for i, _ in self.table) + 1)
        rows = range(min(j - i for i, j in self.table), max(j - i for i, j in self.table) + 1)
        width = max(len(str(v)) for v in self.table.values())
        width = max(width, max(len(str(c)) for c in cols))
        lines = ["     " + " ".join(f"{c:>{width}}" for c in cols)]
        for r in rows:
            cells = [str(self.table.get((c, r + c), ".")) for c in cols]
            lines.append(f"{r:>3}: " + " ".join(f"{x:>{width}}" for x in cells))
        return "\n".join(lines)


def koszul_complex(ring, forms):
    """K(f_1..f_s): basis of K_k indexed by k-subsets, d(e_T) = sum (-1)^j f_{t_j} e_{T - t_j}."""
    forms = [ring.reduce(f) for f in forms]
    degs = [f.degree() if not f.is_zero() else 0 for f in forms]
    for f in forms:
        if not f.is_zero() and not f.is_homogeneous():
            raise ValueError(f"{f} is not homogeneous")
    s = len(forms)
    amb = ring.ambient
    subsets = [list(combinations(range(s), k)) for k in range(s + 1)]
    mods = [FreeModule(ring, [sum(degs[t] for t in T) for T in subsets[k]]) for k in range(s + 1)]
    maps = []
    for k in range(1, s + 1):
        index = {T: r for r, T in enumerate(subsets[k - 1])}
        rows = [[amb.zero()] * len(subsets[k]) for _ in subsets[k - 1]]
        for c, T in enumerate(subsets[k]):
            for j, t in enumerate(T):
                rest = T[:j] + T[j + 1:]
                rows[index[rest]][c] = forms[t] if j % 2 == 0 else -forms[t]
        maps.append(GradedMatrix(mods[k], mods[k - 1], rows, check=False))
    return ChainComplex(ring, mods, maps)


def _tensor_pair(a, b):
    ring = a.ring
    amb = ring.ambient
    top = a.length + b.length
    blocks = []          # blocks[l] = list of (i, j, offset)
    mods = []
    for l in range(top + 1):
        bl = []
        twists = []
        for i in range(max(0, l - b.length), min(a.length, l) + 1):
            j = l - i
            bl.append((i, j, len(twists)))
            twists.extend(s + t for s in a.modules[i].twists for t in b.modules[j].twists)
        blocks.append(bl)
        mods.append(FreeModule(ring, twists))
    maps = []
    for l in range(1, top + 1):
        rows = [[amb.zero()] * mods[l].rank for _ in range(mods[l - 1].rank)]
        where = {(i, j): off for i, j, off in blocks[l - 1]}

        def place(mat, roff, coff):
            for r, row in enumerate(mat.rows):
                for c, e in enumerate(row):
                    if not e.is_zero():
                        rows[roff + r][coff + c] = rows[roff + r][coff + c] + e

        for i, j, off in blocks[l]:
            if i >= 1 and (i - 1, j) in where:
                m = kronecker(a.differential(i), GradedMatrix.identity(b.modules[j]))
                place(m, where[(i - 1, j)], off)
            if j >= 1 and (i, j - 1) in where:
                m = kronecker(GradedMatrix.identity(a.modules[i]), b.differential(j))
                if i % 2:
                    m = m.map_entries(lambda e: -e, m.source, m.target)
                place(m, where[(i, j - 1)], off)
        maps.append(GradedMatrix(mods[l], mods[l - 1], rows, check=False))
    return ChainComplex(ring, mods, maps, a.truncated or b.truncated)


def tensor_complexes(*complexes):
    """Tensor product over S with d(a (x) b) = da (x) b + (-1)^|a| a (x) db."""
    if not complexes:
        raise ValueError("need at least one complex")
    out = complexes[0]
    for c in complexes[1:]:
        out = _tensor_pair(out, c)
    return out


def tensor_b_bound(complexes, l):
    """max over i_1+..+i_s = l of sum b_0(F^k_{i_k}); the tensor's b_0(T_l)."""
    best = {0: 0}
    for c in complexes:
        nxt = {}
        for tot, val in best.items():
            for i, f in enumerate(c.modules):
                if f.rank == 0:
                    continue
                v = val + max(f.twists)
                if v > nxt.get(tot + i, NEG_INF):
                    nxt[tot + i] = v
        best = nxt
    return best.get(l, NEG_INF)


def minimalize(complex_):
    """Cancel unit entries by Gaussian elimination; homology is unchanged."""
    ring = complex_.ring
    field = ring.field
    mods = [list(f.twists) for f in complex_.modules]
    mats = [[list(row) for row in d.rows] for d in complex_.maps]
    changed = True
    while changed:
        changed = False
        for i, rows in enumerate(mats):
            hit = None
            for r, row in enumerate(rows):
                for c, e in enumerate(row):
                    if not e.is_zero() and e.is_constant():
                        hit = (r, c)
                        break
                if hit:
                    break
            if not hit:
                continue
            r, c = hit
            u_inv = field.inv(rows[r][c].terms[(0,) * ring.nvars])
            new = []
            for rr, row in enumerate(rows):
                if rr == r:
                    continue
                alpha = row[c]
                nrow = []
                for cc, e in enumerate(row):
                    if cc == c:
                        continue
                    if not alpha.is_zero() and not rows[r][cc].is_zero():
                        e = ring.reduce(e - alpha * rows[r][cc] * u_inv)
                    nrow.append(e)
                new.append(nrow)
            mats[i] = new
            # d_{i+2} loses row c, d_i loses column r (maps are 0-indexed here)
            if i + 1 < len(mats):
                mats[i + 1] = [row for k, row in enumerate(mats[i + 1]) if k != c]
            if i - 1 >= 0:
                mats[i - 1] = [[e for k, e in enumerate(row) if k != r] for row in mats[i - 1]]
            del mods[i + 1][c]
            del mods[i][r]
            changed = True
            break
    frees = [FreeModule(ring, t) for t in mods]
    maps = [GradedMatrix(frees[i + 1], frees[i], m, check=False) for i, m in enumerate(mats)]
    return ChainComplex(ring, frees, maps, complex_.truncated)
