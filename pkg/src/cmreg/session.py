"""Session files: a small line-oriented language of ring, ideal, module and command statements.

    ring R = poly(QQ, 3);
    ring S = R/(x0*x2 - x1^2);
    ideal I = (x0, x1) in S;
    module M = S/I;
    seed 7;
    ideal J = random(3, 2) in R;       # 3 random monomials/binomials of degree <= 2
    cmd betti M --cap 6;
    cmd verify regtor R/(x0^2) R/(x1^2);

Statements end with ';' and '#' starts a comment.  A statement without an
explicit ``in RING`` uses the most recently declared ring.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass, field

from . import bench
from .complexes import koszul_complex
from .corpus import random_binomial_ideal
from .functors import frobenius_power, frobenius_tor, kahler_module
from .homology import tor_all
from .ideals import Ideal, UnsupportedCharacteristic, hilbert_data
from .invariants import a_invariants, regularity, regularity_of_ring, ring_module
from .modules import GradedModule
from .resolution import free_resolution
from .ring import GF, NEG_INF, POS_INF, QQ, ParseError, PolyRing, QuotientRing

COMMANDS = ("betti", "reg", "ainv", "tor", "frobenius", "power", "saturate", "kahler", "verify")


class SessionError(Exception):
    """One or more located errors in a session text."""

    def __init__(self, errors):
        self.errors = list(errors)
        super().__init__("\n".join(self.errors))


@dataclass
class Command:
    name: str
    args: list                  # list of (text, object)
    flags: dict
    line: int
    text: str


@dataclass
class SessionSpec:
    rings: dict = field(default_factory=dict)
    ideals: dict = field(default_factory=dict)
    modules: dict = field(default_factory=dict)
    commands: list = field(default_factory=list)
    seed: int | None = None
    window: tuple | None = None
    text: str = ""


# lexical helpers -------------------------------------------------------------

def _statements(text):
    """Yield (statement, offset) with comments blanked out, split on ';'."""
    clean = re.sub(r"#[^\n]*", lambda m: " " * len(m.group()), text)
    start = 0
    for k, ch in enumerate(clean):
        if ch == ";":
            yield clean[start:k], start
            start = k + 1
    rest = clean[start:]
    if rest.strip():
        yield rest, start


def _locate(text, offset):
    line = text.count("\n", 0, offset) + 1
    col = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, col


def split_top(text, sep=None):
    """Split on whitespace (or on ``sep``) outside parentheses, keeping offsets."""
    parts = []
    depth = 0
    cur = ""
    cur_start = None
    for k, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        boundary = (ch.isspace() if sep is None else ch == sep) and depth == 0
        if boundary:
            if cur.strip():
                parts.append((cur.strip(), cur_start + len(cur) - len(cur.lstrip())))
            cur, cur_start = "", None
        else:
            if cur_start is None:
                cur_start = k
            cur += ch
    if cur.strip():
        parts.append((cur.strip(), cur_start + len(cur) - len(cur.lstrip())))
    return parts


def parse_window(text):
    m = re.fullmatch(r"\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*", text)
    if not m or int(m.group(1)) > int(m.group(2)):
        raise ValueError(f"bad window {text!r}; expected a..b with a <= b")
    return int(m.group(1)), int(m.group(2))


def parse_field(text):
    text = text.strip()
    if text == "QQ":
        return QQ
    m = re.fullmatch(r"GF\(\s*(\d+)\s*\)", text)
    if not m:
        raise ValueError(f"unknown field {text!r}; use QQ or GF(p)")
    return GF(int(m.group(1)))


# parser ----------------------------------------------------------------------

class _Parser:
    def __init__(self, text, seed=None):
        self.text = text
        self.seed_override = seed
        self.spec = SessionSpec(text=text, seed=seed)
        self.errors = []
        self.current_ring = None
        self.names = set()

    def error(self, offset, message):
        line, col = _locate(self.text, offset)
        self.errors.append(f"line {line}, column {col}: {message}")

    def run(self):
        for stmt, off in _statements(self.text):
            if not stmt.strip():
                continue
            lead = len(stmt) - len(stmt.lstrip())
            try:
                self.statement(stmt.strip(), off + lead)
            except _Located as exc:
                self.error(exc.offset, exc.message)
        if self.errors:
            raise SessionError(self.errors)
        return self.spec

    def declare(self, name, off):
        if name in self.names:
            raise _Located(off, f"name {name!r} is already declared")
        self.names.add(name)

    def statement(self, stmt, off):
        kw = stmt.split(None, 1)[0]
        if kw == "ring":
            self.ring_stmt(stmt, off)
        elif kw == "ideal":
            self.ideal_stmt(stmt, off)
        elif kw == "module":
            self.module_stmt(stmt, off)
        elif kw == "seed":
            m = re.fullmatch(r"seed\s+(-?\d+)", stmt)
            if not m:
                raise _Located(off, "expected 'seed N'")
            if self.seed_override is None:
                self.spec.seed = int(m.group(1))
        elif kw == "window":
            try:
                self.spec.window = parse_window(stmt[len("window"):])
            except ValueError as exc:
                raise _Located(off, str(exc))
        elif kw == "cmd":
            self.cmd_stmt(stmt, off)
        else:
            raise _Located(off, f"unknown statement {kw!r}")

    def ring_stmt(self, stmt, off):
        m = re.fullmatch(r"ring\s+(\w+)\s*=\s*(.+)", stmt, re.S)
        if not m:
            raise _Located(off, "expected 'ring NAME = poly(FIELD, n)' or 'ring NAME = BASE/(...)'")
        name, rhs = m.group(1), m.group(2).strip()
        rhs_off = off + m.start(2)
        self.declare(name, off + m.start(1))
        p = re.fullmatch(r"poly\(\s*(QQ|GF\(\s*\w+\s*\))\s*,\s*(\w+)\s*\)", rhs)
        if p:
            try:
                fld = parse_field(p.group(1))
            except ValueError as exc:
                raise _Located(rhs_off + p.start(1), str(exc))
            if not p.group(2).isdigit() or int(p.group(2)) < 1:
                raise _Located(rhs_off + p.start(2), "number of variables must be a positive integer")
            ring = PolyRing(fld, int(p.group(2)))
        elif "/" in rhs:
            base_name, _, quo = rhs.partition("/")
            base = self.spec.rings.get(base_name.strip())
            if base is None:
                raise _Located(rhs_off, f"undeclared ring {base_name.strip()!r}")
            gens = self.gens_of(quo.strip(), base, rhs_off + len(base_name) + 1 + (len(quo) - len(quo.lstrip())))
            amb = base.ambient
            ring = QuotientRing(amb, list(base.defining_ideal) + gens) if base.is_quotient() else QuotientRing(amb, gens)
        else:
            raise _Located(rhs_off, f"cannot parse ring {rhs!r}")
        self.spec.rings[name] = ring
        self.current_ring = ring

    def split_in(self, rhs, rhs_off):
        """Strip a trailing 'in RING'; return (text, ring)."""
        m = re.fullmatch(r"(.*\S)\s+in\s+(\w+)", rhs, re.S)
        if m:
            ring = self.spec.rings.get(m.group(2))
            if ring is None:
                raise _Located(rhs_off + m.start(2), f"undeclared ring {m.group(2)!r}")
            return m.group(1), ring
        if self.current_ring is None:
            raise _Located(rhs_off, "no ring declared yet")
        return rhs, self.current_ring

    def gens_of(self, text, ring, off):
        """Generators from '(f, g, ...)' or an ideal name."""
        if text in self.spec.ideals:
            return list(self.spec.ideals[text].gens)
        if not (text.startswith("(") and text.endswith(")")):
            raise _Located(off, f"expected '(generators)' or an ideal name, found {text!r}")
        gens = []
        for piece, poff in split_top(text[1:-1], ","):
            at = off + 1 + poff
            try:
                g = ring.ambient.parse(piece)
            except ParseError as exc:
                raise _Located(at + (exc.position or 0), str(exc).split(" at column")[0])
            except ValueError as exc:
                raise _Located(at, str(exc))
            if not g.is_homogeneous():
                degs = sorted({sum(m) for m in g.terms}, reverse=True)
                raise _Located(at, f"generator {piece!r} is not homogeneous (terms of degrees "
                                   f"{', '.join(map(str, degs))})")
            gens.append(g)
        return gens

    def ideal_stmt(self, stmt, off):
        m = re.fullmatch(r"ideal\s+(\w+)\s*=\s*(.+)", stmt, re.S)
        if not m:
            raise _Located(off, "expected 'ideal NAME = (generators) [in RING]'")
        name = m.group(1)
        self.declare(name, off + m.start(1))
        rhs, ring = self.split_in(m.group(2).strip(), off + m.start(2))
        r = re.fullmatch(r"random\(\s*(\d+)\s*,\s*(\d+)\s*\)", rhs)
        if r:
            rng = random.Random(f"{self.spec.seed}:{name}")
            ideal = random_binomial_ideal(rng, ring, int(r.group(1)), int(r.group(2)))
        else:
            ideal = Ideal(ring, self.gens_of(rhs, ring, off + m.start(2)))
        self.spec.ideals[name] = ideal

    def module_stmt(self, stmt, off):
        m = re.fullmatch(r"module\s+(\w+)\s*=\s*(.+)", stmt, re.S)
        if not m:
            raise _Located(off, "expected 'module NAME = RING/IDEAL'")
        name = m.group(1)
        self.declare(name, off + m.start(1))
        obj = self.resolve(m.group(2).strip(), off + m.start(2))
        self.spec.modules[name] = as_module(obj)

    def resolve(self, text, off):
        """A ring, ideal or module from a name, RING/IDEAL, RING/(gens) or (gens)."""
        for table in (self.spec.modules, self.spec.ideals, self.spec.rings):
            if text in table:
                return table[text]
        if text.startswith("(") and self.current_ring is not None:
            return Ideal(self.current_ring, self.gens_of(text, self.current_ring, off))
        if "/" in text:
            base_name, _, quo = text.partition("/")
            base = self.spec.rings.get(base_name)
            if base is None:
                raise _Located(off, f"undeclared ring {base_name!r}")
            return Ideal(base, self.gens_of(quo, base, off + len(base_name) + 1)).quotient_module()
        raise _Located(off, f"undeclared name {text!r}")

    def cmd_stmt(self, stmt, off):
        parts = split_top(stmt)
        if len(parts) < 2:
            raise _Located(off, "expected 'cmd NAME args'")
        name, noff = parts[1]
        if name not in COMMANDS:
            raise _Located(off + noff, f"unknown command {name!r}")
        rest = parts[2:]
        if name == "verify":
            if not rest:
                raise _Located(off + noff, "verify needs a theorem id")
            tid, toff = rest[0]
            if tid not in bench.CHECKERS:
                raise _Located(off + toff, f"unknown theorem id {tid!r}; known: {', '.join(sorted(bench.CHECKERS))}")
            name = f"verify:{tid}"
            rest = rest[1:]
        args, flags = [], {}
        k = 0
        while k < len(rest):
            tok, toff = rest[k]
            if tok.startswith("--"):
                key = tok[2:]
                if key == "parallel":
                    k += 1
                    continue
                if k + 1 >= len(rest):
                    raise _Located(off + toff, f"flag {tok} needs a value")
                val = rest[k + 1][0]
                if key == "assert":
                    h, _, v = val.rpartition("=")
                    if v not in ("true", "false"):
                        raise _Located(off + rest[k + 1][1], "expected --assert NAME=true")
                    flags.setdefault("assert", {})[h] = v == "true"
                elif key == "window":
                    try:
                        flags["window"] = parse_window(val)
                    except ValueError as exc:
                        raise _Located(off + rest[k + 1][1], str(exc))
                else:
                    if not re.fullmatch(r"-?\d+", val):
                        raise _Located(off + rest[k + 1][1], f"flag {tok} needs an integer")
                    flags[key] = int(val)
                k += 2
            else:
                args.append((tok, self.resolve(tok, off + toff)))
                k += 1
        line, _ = _locate(self.text, off)
        self.spec.commands.append(Command(name, args, flags, line, stmt))


class _Located(Exception):
    def __init__(self, offset, message):
        self.offset = offset
        self.message = message
        super().__init__(message)


def parse_session(text, seed=None):
    """Validated SessionSpec, or SessionError listing every located error.

    A given ``seed`` takes precedence over seed statements in the text.
    """
    return _Parser(text, seed).run()


# execution -------------------------------------------------------------------

def as_module(obj):
    if isinstance(obj, GradedModule):
        return obj
    if isinstance(obj, Ideal):
        return obj.quotient_module()
    return ring_module(obj)


def as_ideal(obj):
    if isinstance(obj, Ideal):
        return obj
    if isinstance(obj, GradedModule):
        I = bench.cyclic_ideal(obj)
        if I is not None:
            return I
    raise ValueError("expected an ideal or a cyclic module R/I")


def as_ring(obj):
    if isinstance(obj, (PolyRing, QuotientRing)):
        return obj
    return obj.ring


def num(x):
    if x == NEG_INF:
        return "-inf"
    if x == POS_INF:
        return "+inf"
    return int(x)


def _hf(obj, window):
    data = hilbert_data(obj, window)
    return {"hilbert": {str(d): v for d, v in data.values.items()}, "dim": num(data.dimension)}


class UsageError(ValueError):
    pass


def _need(args, k, what):
    if len(args) < k:
        raise UsageError(f"expected {what}")


def run_command(cmd, spec, defaults):
    """(json records, summary lines) for one command."""
    flags = {**defaults, **cmd.flags}
    flags["assert"] = {**defaults.get("assert", {}), **cmd.flags.get("assert", {})}
    window = flags.get("window") or spec.window
    cap = flags.get("cap")
    seed = flags.get("seed", spec.seed)
    objs = [o for _, o in cmd.args]
    texts = [t for t, _ in cmd.args]
    base = {"command": cmd.name, "line": cmd.line, "args": texts}
    out, lines = [], []
    name = cmd.name
    if name == "betti":
        _need(objs, 1, "a module")
        M = as_module(objs[0])
        res = free_resolution(M, cap)
        bt = res.betti_table()
        out.append({**base, **bt.to_json(), "truncated": res.truncated,
                    "status": "truncated" if res.truncated else "ok"})
        lines += [f"betti {texts[0]}" + (" (truncated)" if res.truncated else ""), bt.staircase()]
    elif name == "reg":
        _need(objs, 1, "a module")
        M = as_module(objs[0])
        r = regularity(M) if not M.ring.is_quotient() else a_invariants(M).reg
        out.append({**base, "reg": num(r), "status": "ok"})
        lines.append(f"reg {texts[0]} = {num(r)}")
    elif name == "ainv":
        _need(objs, 1, "a module")
        M = as_module(objs[0])
        ai = a_invariants(M)
        rec = {**base, **ai.to_json(), "depth": num(ai.depth), **_hf(M, window), "status": "ok"}
        out.append(rec)
        lines.append(f"ainv {texts[0]}: a = {rec['a']}, reg = {rec['reg']}")
    elif name == "tor":
        _need(objs, 2, "at least two modules")
        mods = [as_module(o) for o in objs]
        if cap is None and mods[0].ring.is_quotient():
            cap = mods[0].ring.nvars + 2
        tors = tor_all(mods, cap)
        for i, t in enumerate(tors):
            rec = {**base, "i": i, **_hf(t, window), "truncated": t.truncated,
                   "reg": num(a_invariants(t).reg) if not t.is_zero() else "-inf",
                   "status": "truncated" if t.truncated else "ok"}
            out.append(rec)
            lines.append(f"Tor_{i}: dim {rec['dim']}, reg {rec['reg']}" + (" (truncated)" if t.truncated else ""))
    elif name == "frobenius":
        _need(objs, 1, "a module")
        M = as_module(objs[0])
        emax = flags.get("emax", 1)
        growth = {}
        for e in range(emax + 1):
            growth[str(M.ring.characteristic ** e)] = num(a_invariants(frobenius_power(M, e)).reg)
        table = bench.frobenius_tor_table(M, emax)
        out.append({**base, "reg_FeM": growth,
                    "reg_tor": {str(q): {str(i): num(v) for i, v in row.items()} for q, row in table.items()},
                    "status": "ok"})
        lines.append(f"frobenius {texts[0]}: reg F^e M by q = {growth}")
    elif name == "power":
        _need(objs, 1, "an ideal")
        I = as_ideal(objs[0])
        mmax = flags.get("m", 4)
        regs = {str(k): num(a_invariants(I.power(k).quotient_module()).reg) for k in range(1, mmax + 1)}
        out.append({**base, "reg_S_mod_I^k": regs, "status": "ok"})
        lines.append(f"power {texts[0]}: reg S/I^k = {regs}")
    elif name == "saturate":
        _need(objs, 1, "an ideal")
        I = as_ideal(objs[0])
        sat = I.saturation()
        gens = [str(g) for g in sat.minimal_generators()]
        out.append({**base, "saturation": gens, "saturated": sat == I,
                    "reg": num(a_invariants(sat.quotient_module()).reg), "status": "ok"})
        lines.append(f"saturate {texts[0]} = ({', '.join(gens)})")
    elif name == "kahler":
        _need(objs, 1, "a quotient ring")
        B = as_ring(objs[0])
        if not B.is_quotient():
            raise UsageError("kahler needs a quotient ring R/I")
        km = kahler_module(B)
        ai = a_invariants(km.omega)
        out.append({**base, **_hf(km.omega, window), "a": ai.to_json()["a"], "reg": num(ai.reg), "status": "ok"})
        lines.append(f"kahler {texts[0]}: a(Omega) = {ai.to_json()['a']}")
    else:
        reports = _verify(name.split(":", 1)[1], objs, flags)
        for r in reports:
            r.seed = seed
            out.append({**base, **r.to_json(), "status": "ok"})
            lines.append(f"verify {r.id} [{r.input}]: {r.verdict} (lhs {num(r.lhs) if r.lhs is not None else '-'}"
                         f" {r.relation or ''} rhs {num(r.rhs) if r.rhs is not None else '-'})")
    return out, lines


def _verify(tid, objs, flags):
    asserts = flags.get("assert", {})
    if tid in ("regfpd", "frobenius", "betti-transfer"):
        _need(objs, 1, "a module")
        M = as_module(objs[0])
        S = M.ring
        if tid == "regfpd":
            return [bench.check_regfpd(S, M)]
        if tid == "betti-transfer":
            return [bench.check_betti_transfer(S, M, flags.get("imax", 4))]
        return bench.check_frobenius_bound(S, M, flags.get("emax", 1), asserts)
    if tid == "regpolring":
        _need(objs, 1, "a module")
        return [bench.check_regpolring(as_module(objs[0]))]
    if tid in ("regtor", "rigidity"):
        _need(objs, 2, "at least two modules")
        mods = [as_module(o) for o in objs]
        return [bench.check_regtor(mods) if tid == "regtor" else bench.check_rigidity_and_proper(mods)]
    if tid in ("regtorgen", "regtorsing"):
        _need(objs, 2, "a module and at least one more")
        mods = [as_module(o) for o in objs]
        if tid == "regtorgen":
            return [bench.check_regtorgen(mods[0], mods[1:])]
        return [bench.check_regtorsing(mods[0], mods[1:], asserts)]
    if tid == "regpow1":
        _need(objs, 1, "an ideal")
        return bench.check_power_bound_cd1(as_ideal(objs[0]), flags.get("m", 4))
    if tid == "regpow-dim2":
        _need(objs, 1, "an ideal")
        return bench.check_power_bound_dim2(as_ideal(objs[0]), flags.get("j", 4), asserts)
    if tid == "power-kernel":
        _need(objs, 1, "an ideal")
        return [bench.check_power_kernel(as_ideal(objs[0]), flags.get("ell", 3), asserts)]
    if tid == "koszul-bounds":
        _need(objs, 2, "a module and an ideal of forms")
        return [bench.check_koszul_bounds(as_module(objs[0]), as_ideal(objs[1]).gens)]
    if tid == "nonacyclic":
        _need(objs, 2, "an ideal of forms and a module")
        I = as_ideal(objs[0])
        return [bench.check_nonacyclic(koszul_complex(I.ring, I.gens), as_module(objs[1]))]
    if tid == "intersection":
        _need(objs, 1, "at least one ideal")
        ideals = [as_ideal(o) for o in objs]
        return [bench.check_intersection_bound(ideals[0].ring, ideals, asserts)]
    if tid == "kahler":
        _need(objs, 1, "a quotient ring")
        return [bench.check_kahler_bounds(as_ring(objs[0]), asserts)]
    raise UsageError(f"unknown theorem id {tid!r}")


def _run_index(job):
    text, seed, defaults, k = job
    spec = parse_session(text, seed)
    return execute(spec.commands[k], spec, defaults)


def execute(cmd, spec, defaults):
    try:
        return run_command(cmd, spec, defaults)
    except (UsageError, UnsupportedCharacteristic, ValueError) as exc:
        rec = {"command": cmd.name, "line": cmd.line, "args": [t for t, _ in cmd.args],
               "status": "error", "message": str(exc)}
        return [rec], [f"error (line {cmd.line}): {exc}"]


def run_session(spec, defaults=None, parallel=False):
    """Run all commands; returns (records, summary lines, exit status)."""
    defaults = defaults or {}
    if parallel and len(spec.commands) > 1:
        from concurrent.futures import ProcessPoolExecutor
        jobs = [(spec.text, spec.seed, defaults, k) for k in range(len(spec.commands))]
        with ProcessPoolExecutor() as pool:
            results = list(pool.map(_run_index, jobs))
    else:
        results = [execute(c, spec, defaults) for c in spec.commands]
    records, lines = [], []
    for recs, ls in results:
        records += recs
        lines += ls
    status = 0
    if any(r.get("status") == "error" for r in records):
        status = 2
    elif any(r.get("verdict") == bench.VIOLATED for r in records):
        status = 1
    return records, lines, status
