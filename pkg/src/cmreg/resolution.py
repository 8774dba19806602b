"""Minimal presentations and minimal graded free resolutions."""
from __future__ import annotations

from . import groebner as gb
from .complexes import ChainComplex, minimalize
from .modules import FreeModule, GradedMatrix, GradedModule


def default_cap(ring):
    n = ring.nvars
    return 2 * n + 4 if ring.is_quotient() else n


def minimal_presentation(module):
    """Equivalent presentation with minimal generators and minimal relations."""
    if "minpres" in module._cache:
        return module._cache["minpres"]
    ring = module.ring
    pres = module.presentation
    # cancel unit entries: they make a generator redundant
    two = ChainComplex(ring, [pres.target, pres.source], [pres])
    two = minimalize(two)
    pres = two.maps[0]
    cols = pres.columns()
    order = sorted(range(len(cols)), key=lambda c: pres.source.twists[c])
    cols = [cols[c] for c in order if cols[c]]
    twists = [pres.source.twists[c] for c in order if pres.column(c)]
    keep = gb.mingens(cols, pres.target.twists, ring)
    src = FreeModule(ring, [twists[i] for i in keep])
    out = GradedMatrix.from_columns(src, pres.target, [cols[i] for i in keep])
    module._cache["minpres"] = out
    return out


def free_resolution(module, length_cap=None):
    """Minimal graded free resolution, truncated at ``length_cap``.

    The result's ``truncated`` flag is set exactly when F_{cap+1} would be
    nonzero, so an untruncated result is the full minimal resolution.
    """
    ring = module.ring
    cap = default_cap(ring) if length_cap is None else length_cap
    key = ("res", cap)
    if key in module._cache:
        return module._cache[key]
    d1 = minimal_presentation(module)
    mods = [d1.target]
    maps = []
    truncated = False
    current = d1
    i = 1
    while current.ncols:
        if i > cap:
            truncated = True
            break
        mods.append(current.source)
        maps.append(current)
        syz = gb.syzygy_vectors(current.columns(), current.source.twists, current.target.twists, ring)
        src = FreeModule(ring, [gb.vector_degree(v, current.source.twists) for v in syz])
        current = GradedMatrix.from_columns(src, current.source, syz)
        i += 1
    res = ChainComplex(ring, mods, maps, truncated)
    module._cache[key] = res
    return res


def betti_table(module, length_cap=None):
    return free_resolution(module, length_cap).betti_table()
