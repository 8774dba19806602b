"""Free modules, homogeneous matrices and finitely presented graded modules."""
from __future__ import annotations

from .ring import NEG_INF, Polynomial
from . import groebner as gb


class FreeModule:
    """Direct sum of R(-d) over the twists d, i.e. generators in degrees d."""

    def __init__(self, ring, twists):
        self.ring = ring
        self.twists = tuple(twists)

    @property
    def rank(self):
        return len(self.twists)

    def dual(self, shift=0):
        """Hom(F, R(shift)): generators in degrees -d - shift."""
        return FreeModule(self.ring, [-d - shift for d in self.twists])

    def max_twist(self):
        return max(self.twists) if self.twists else NEG_INF

    def __eq__(self, other):
        return isinstance(other, FreeModule) and self.ring == other.ring and self.twists == other.twists

    def __repr__(self):
        return f"FreeModule({self.twists})"


class GradedMatrix:
    """Homogeneous map source -> target, stored as rows of Polynomials.

    Entries are ambient polynomials kept in normal form modulo J.  Entry
    (r, c) is zero or homogeneous of degree source.twists[c] - target.twists[r].
    """

    def __init__(self, source, target, rows, check=True):
        self.source = source
        self.target = target
        ring = target.ring
        self.ring = ring
        amb = ring.ambient
        if len(rows) != target.rank or any(len(r) != source.rank for r in rows):
            raise ValueError("matrix shape does not match free modules")
        self.rows = [[ring.reduce(e) if isinstance(e, Polynomial) else ring.reduce(amb.constant(e))
                      for e in row] for row in rows]
        if check:
            for r, row in enumerate(self.rows):
                for c, e in enumerate(row):
                    if e.is_zero():
                        continue
                    want = source.twists[c] - target.twists[r]
                    if not e.is_homogeneous() or e.degree() != want:
                        raise ValueError(f"entry ({r},{c}) = {e} is not homogeneous of degree {want}")

    @classmethod
    def from_columns(cls, source, target, columns):
        """Build from vectors ``{(pos, exps): coeff}``."""
        amb = target.ring.ambient
        rows = [[{} for _ in range(source.rank)] for _ in range(target.rank)]
        for c, col in enumerate(columns):
            for (pos, m), a in col.items():
                rows[pos][c][m] = a
        return cls(source, target, [[Polynomial(amb, t) for t in row] for row in rows], check=False)

    @classmethod
    def zero(cls, source, target):
        amb = target.ring.ambient
        return cls(source, target, [[amb.zero()] * source.rank for _ in range(target.rank)], check=False)

    @classmethod
    def identity(cls, free):
        amb = free.ring.ambient
        rows = [[amb.one() if i == j else amb.zero() for j in range(free.rank)] for i in range(free.rank)]
        return cls(free, free, rows, check=False)

    @property
    def nrows(self):
        return self.target.rank

    @property
    def ncols(self):
        return self.source.rank

    def entry(self, r, c):
        return self.rows[r][c]

    def column(self, c):
        vec = {}
        for r in range(self.nrows):
            for m, a in self.rows[r][c].terms.items():
                vec[(r, m)] = a
        return vec

    def columns(self):
        return [self.column(c) for c in range(self.ncols)]

    def is_zero(self):
        return all(e.is_zero() for row in self.rows for e in row)

    def __mul__(self, other):
        """Composition self o other."""
        if self.source.twists != other.target.twists:
            raise ValueError("incompatible matrices")
        amb = self.ring.ambient
        rows = []
        for r in range(self.nrows):
            row = []
            for c in range(other.ncols):
                acc = amb.zero()
                for k in range(self.ncols):
                    a = self.rows[r][k]
                    if a.is_zero():
                        continue
                    b = other.rows[k][c]
                    if not b.is_zero():
                        acc = acc + a * b
                row.append(acc)
            rows.append(row)
        return GradedMatrix(other.source, self.target, rows, check=False)

    def transpose(self, shift=0):
        """The dual map Hom(target, R(shift)) -> Hom(source, R(shift))."""
        rows = [[self.rows[r][c] for r in range(self.nrows)] for c in range(self.ncols)]
        return GradedMatrix(self.target.dual(shift), self.source.dual(shift), rows, check=False)

    def submatrix(self, rows, cols):
        src = FreeModule(self.ring, [self.source.twists[c] for c in cols])
        tgt = FreeModule(self.ring, [self.target.twists[r] for r in rows])
        return GradedMatrix(src, tgt, [[self.rows[r][c] for c in cols] for r in rows], check=False)

    def map_entries(self, fn, source, target):
        return GradedMatrix(source, target, [[fn(e) for e in row] for row in self.rows], check=False)

    def with_ring(self, ring):
        src = FreeModule(ring, self.source.twists)
        tgt = FreeModule(ring, self.target.twists)
        return GradedMatrix(src, tgt, self.rows, check=False)

    def __eq__(self, other):
        return (isinstance(other, GradedMatrix) and self.source == other.source
                and self.target == other.target and self.rows == other.rows)

    def __repr__(self):
        body = "; ".join(", ".join(str(e) for e in row) for row in self.rows)
        return f"GradedMatrix({self.source.twists} -> {self.target.twists}: [{body}])"


def hstack(target, mats):
    ring = target.ring
    twists = []
    rows = [[] for _ in range(target.rank)]
    for m in mats:
        twists.extend(m.source.twists)
        for r in range(target.rank):
            rows[r].extend(m.rows[r])
    return GradedMatrix(FreeModule(ring, twists), target, rows, check=False)


def kronecker(a, b):
    """Matrix of a (x) b with basis order (i, k) -> i * rank_b + k."""
    ring = a.ring
    src = FreeModule(ring, [s + t for s in a.source.twists for t in b.source.twists])
    tgt = FreeModule(ring, [s + t for s in a.target.twists for t in b.target.twists])
    amb = ring.ambient
    rows = []
    for i in range(a.nrows):
        for k in range(b.nrows):
            row = []
            for j in range(a.ncols):
                x = a.rows[i][j]
                for l in range(b.ncols):
                    y = b.rows[k][l]
                    row.append(amb.zero() if x.is_zero() or y.is_zero() else x * y)
            rows.append(row)
    return GradedMatrix(src, tgt, rows, check=False)


def ideal_vectors(gens):
    return [{(0, m): c for m, c in g.terms.items()} for g in gens if not g.is_zero()]


class GradedModule:
    """The cokernel of a homogeneous presentation matrix over a ring S.

    Generators of the module are the basis of ``presentation.target``.
    """

    def __init__(self, presentation):
        self.presentation = presentation
        self.ring = presentation.ring
        self._cache = {}

    # constructors
    @classmethod
    def free(cls, ring, twists):
        f = FreeModule(ring, twists)
        return cls(GradedMatrix.zero(FreeModule(ring, []), f))

    @classmethod
    def cyclic(cls, ring, gens, twist=0):
        """S/I (shifted so that the generator sits in degree ``twist``)."""
        gens = [g for g in (ring.reduce(ring(g) if not isinstance(g, Polynomial) else g) for g in gens)
                if not g.is_zero()]
        tgt = FreeModule(ring, [twist])
        src = FreeModule(ring, [g.degree() + twist for g in gens])
        return cls(GradedMatrix(src, tgt, [gens]))

    @classmethod
    def from_ideal(cls, ring, gens):
        """The ideal I as an S-module, presented by its syzygies."""
        gens = [g for g in (ring.reduce(g) for g in gens) if not g.is_zero()]
        if not gens:
            return cls.free(ring, [])
        vecs = ideal_vectors(gens)
        keep = gb.mingens(vecs, (0,), ring)
        gens = [gens[i] for i in keep]
        twists = [g.degree() for g in gens]
        row = GradedMatrix(FreeModule(ring, twists), FreeModule(ring, [0]), [gens])
        syz = gb.syzygy_vectors(row.columns(), twists, (0,), ring)
        tgt = FreeModule(ring, twists)
        src = FreeModule(ring, [gb.vector_degree(v, twists) for v in syz])
        return cls(GradedMatrix.from_columns(src, tgt, syz))

    @property
    def generator_twists(self):
        return self.presentation.target.twists

    @property
    def num_generators(self):
        return self.presentation.target.rank

    def ambient_presentation(self):
        """Presentation over the ambient polynomial ring (J-blocks appended)."""
        if "amb" not in self._cache:
            ring = self.ring
            amb = ring.ambient
            tgt = FreeModule(amb, self.generator_twists)
            mats = [self.presentation.with_ring(amb)]
            jg = list(ring.defining_ideal)
            if jg:
                src = FreeModule(amb, [g.degree() + t for t in tgt.twists for g in jg])
                rows = [[amb.zero()] * src.rank for _ in range(tgt.rank)]
                for r in range(tgt.rank):
                    for k, g in enumerate(jg):
                        rows[r][r * len(jg) + k] = g
                mats.append(GradedMatrix(src, tgt, rows, check=False))
            self._cache["amb"] = hstack(tgt, mats)
        return self._cache["amb"]

    def over_ambient(self):
        return GradedModule(self.ambient_presentation())

    def relation_gb(self):
        if "gb" not in self._cache:
            pres = self.presentation
            self._cache["gb"] = gb.submodule_gb(pres.columns(), self.generator_twists, self.ring)
        return self._cache["gb"]

    def hilbert_series(self):
        if "hs" not in self._cache:
            self._cache["hs"] = self.relation_gb().hilbert_series()
        return self._cache["hs"]

    def hilbert_function(self, lo, hi):
        return self.hilbert_series().values(lo, hi)

    def dimension(self):
        return self.hilbert_series().dimension()

    def is_zero(self):
        return self.hilbert_series().is_zero()

    def initial_degree(self):
        return self.hilbert_series().initial_degree()

    def shift(self, s):
        """M(-s): generators moved up by s."""
        p = self.presentation
        src = FreeModule(self.ring, [t + s for t in p.source.twists])
        tgt = FreeModule(self.ring, [t + s for t in p.target.twists])
        return GradedModule(GradedMatrix(src, tgt, p.rows, check=False))

    def direct_sum(self, other):
        a, b = self.presentation, other.presentation
        ring = self.ring
        amb = ring.ambient
        src = FreeModule(ring, a.source.twists + b.source.twists)
        tgt = FreeModule(ring, a.target.twists + b.target.twists)
        rows = [row + [amb.zero()] * b.ncols for row in a.rows]
        rows += [[amb.zero()] * a.ncols + row for row in b.rows]
        return GradedModule(GradedMatrix(src, tgt, rows, check=False))

    def tensor(self, other):
        """M (x)_S N presented by [P (x) 1 | 1 (x) Q]."""
        a, b = self.presentation, other.presentation
        ring = self.ring
        ia = GradedMatrix.identity(a.target)
        ib = GradedMatrix.identity(b.target)
        m1 = kronecker(a, ib)
        m2 = kronecker(ia, b)
        tgt = m1.target
        return GradedModule(hstack(tgt, [m1, m2]))

    def __repr__(self):
        return f"GradedModule(gens={self.generator_twists}, relations={self.presentation.ncols})"
