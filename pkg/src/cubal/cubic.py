"""Finite cubic algebras with tabulated join and partial difference.

A cubic algebra here is a finite join semilattice with a top element 1
and a partial operation delta(y, x), defined exactly when x <= y, that
reflects x inside the interval up to y: joining the reflection back on x
restores y, and reflecting twice restores x.  The derived implication

    imp(x, y) = delta(1, delta(x | y, y)) | y

turns the carrier into an implication algebra above any fixed element.
Everything is stored as index tables, so equality of elements is index
equality and all laws can be checked by full enumeration.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Sequence

from .errors import (LawViolationError, MixedAlgebraError, SizeCapError,
                     UndefinedDeltaError)
from .report import CheckReport

MAX_TABLE_ELEMENTS = 4096
MAX_CHECK_ELEMENTS = 256
MAX_SUBALG_ELEMENTS = 64


@dataclass(frozen=True)
class CElem:
    """Element of a CubicAlg, identified by its index."""

    alg: "CubicAlg"
    i: int

    @property
    def payload(self) -> Hashable:
        return self.alg.payloads[self.i]

    def __or__(self, other: "CElem") -> "CElem":
        return self.alg.join(self, other)

    def __le__(self, other: "CElem") -> bool:
        return self.alg.leq(self, other)

    def __lt__(self, other: "CElem") -> bool:
        return self.alg.leq(self, other) and self.i != other.i

    def __repr__(self) -> str:
        return self.alg._fmt(self.payload)


class CubicAlg:
    """Join semilattice with top and a difference on comparable pairs."""

    __slots__ = ("payloads", "one_i", "name", "_index", "_join", "_delta",
                 "_down", "_up", "_fmt", "_imp")

    def __init__(self, payloads: Iterable[Hashable], one: Hashable,
                 join: Callable, delta: Callable, name: str = "cubic",
                 fmt: Callable[[Hashable], str] = str,
                 max_size: int = MAX_TABLE_ELEMENTS):
        payloads = tuple(payloads)
        if not payloads:
            raise ValueError("a cubic algebra needs at least the top element")
        if len(payloads) > max_size:
            raise SizeCapError(f"{len(payloads)} elements exceed the table cap {max_size}")
        index = {p: i for i, p in enumerate(payloads)}
        if len(index) != len(payloads):
            raise ValueError("duplicate payloads")
        n = len(payloads)
        jt = []
        for i in range(n):
            row = []
            for j in range(n):
                k = index.get(join(payloads[i], payloads[j]))
                if k is None:
                    raise ValueError(f"join of {fmt(payloads[i])} and {fmt(payloads[j])} left the carrier")
                row.append(k)
            jt.append(tuple(row))
        down = [0] * n
        for i in range(n):
            for j in range(n):
                if jt[i][j] == j:
                    down[j] |= 1 << i
        dt = []
        for yi in range(n):
            row = [-1] * n
            for xi in range(n):
                if jt[xi][yi] == yi:
                    k = index.get(delta(payloads[yi], payloads[xi]))
                    if k is None:
                        raise ValueError("difference left the carrier at "
                                         f"({fmt(payloads[yi])}, {fmt(payloads[xi])})")
                    row[xi] = k
            dt.append(tuple(row))
        self._fill(payloads, index[one], tuple(jt), tuple(dt), tuple(down), name, fmt)

    def _fill(self, payloads, one_i, jt, dt, down, name, fmt):
        n = len(payloads)
        up = [0] * n
        for j in range(n):
            mask = down[j]
            while mask:
                low = mask & -mask
                up[low.bit_length() - 1] |= 1 << j
                mask ^= low
        self.payloads = payloads
        self.one_i = one_i
        self.name = name
        self._index = {p: i for i, p in enumerate(payloads)}
        self._join = jt
        self._delta = dt
        self._down = down
        self._up = tuple(up)
        self._fmt = fmt
        self._imp = None

    @classmethod
    def from_tables(cls, payloads: Sequence[Hashable], one_i: int,
                    join_table: Sequence[Sequence[int]],
                    delta_table: Sequence[Sequence[int]],
                    name: str = "cubic", fmt: Callable = str) -> "CubicAlg":
        """Build directly from index tables; -1 marks an undefined difference."""
        self = object.__new__(cls)
        payloads = tuple(payloads)
        n = len(payloads)
        jt = tuple(tuple(row) for row in join_table)
        dt = tuple(tuple(row) for row in delta_table)
        down = [0] * n
        for i in range(n):
            for j in range(n):
                if jt[i][j] == j:
                    down[j] |= 1 << i
        self._fill(payloads, one_i, jt, dt, tuple(down), name, fmt)
        return self

    # -- basic views --------------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.payloads)

    @property
    def one(self) -> CElem:
        return CElem(self, self.one_i)

    def el(self, i: int) -> CElem:
        return CElem(self, i)

    def element(self, payload: Hashable) -> CElem:
        i = self._index.get(payload)
        if i is None:
            raise KeyError(f"no element with payload {payload!r}")
        return CElem(self, i)

    def elements(self) -> list[CElem]:
        return [CElem(self, i) for i in range(self.size)]

    def _own(self, x: CElem | int) -> int:
        if isinstance(x, int):
            if not 0 <= x < self.size:
                raise MixedAlgebraError(f"index {x} is out of range")
            return x
        if x.alg is not self:
            raise MixedAlgebraError(f"element {x} belongs to a different algebra")
        return x.i

    def __repr__(self) -> str:
        return f"CubicAlg({self.name}, {self.size} elements)"

    # -- index-level operations --------------------------------------------

    def join_i(self, i: int, j: int) -> int:
        return self._join[i][j]

    def leq_i(self, i: int, j: int) -> bool:
        return self._join[i][j] == j

    def delta_defined_i(self, yi: int, xi: int) -> bool:
        return self._delta[yi][xi] != -1

    def delta_i(self, yi: int, xi: int) -> int:
        k = self._delta[yi][xi]
        if k == -1:
            raise UndefinedDeltaError(
                f"delta({self._fmt(self.payloads[yi])}, {self._fmt(self.payloads[xi])}) "
                "needs the second argument below the first")
        return k

    def imp_i(self, i: int, j: int) -> int:
        if self._imp is None:
            self._build_imp()
        return self._imp[i][j]

    def _build_imp(self):
        n = self.size
        one = self.one_i
        table = []
        for i in range(n):
            row = []
            for j in range(n):
                u = self._join[i][j]
                row.append(self._join[self._delta[one][self._delta[u][j]]][j])
            table.append(tuple(row))
        self._imp = tuple(table)

    def poset_meet_i(self, i: int, j: int) -> int | None:
        common = self._down[i] & self._down[j]
        mask = common
        while mask:
            low = mask & -mask
            k = low.bit_length() - 1
            if common & ~self._down[k] == 0:
                return k
            mask ^= low
        return None

    def caret_i(self, i: int, j: int) -> int | None:
        return self.poset_meet_i(i, self._delta[self._join[i][j]][j])

    def down_mask(self, i: int) -> int:
        return self._down[i]

    def up_mask(self, i: int) -> int:
        return self._up[i]

    # -- element-level operations -------------------------------------------

    def join(self, x: CElem, y: CElem) -> CElem:
        return CElem(self, self._join[self._own(x)][self._own(y)])

    def leq(self, x: CElem, y: CElem) -> bool:
        return self.leq_i(self._own(x), self._own(y))

    def delta(self, y: CElem, x: CElem) -> CElem:
        return CElem(self, self.delta_i(self._own(y), self._own(x)))

    def imp(self, x: CElem, y: CElem) -> CElem:
        """Derived implication delta(1, delta(x | y, y)) | y."""
        return CElem(self, self.imp_i(self._own(x), self._own(y)))

    def meet(self, x: CElem, y: CElem) -> CElem | None:
        k = self.poset_meet_i(self._own(x), self._own(y))
        return None if k is None else CElem(self, k)

    def caret(self, x: CElem, y: CElem) -> CElem | None:
        """Meet of x with the reflection of y across x | y, when it exists."""
        k = self.caret_i(self._own(x), self._own(y))
        return None if k is None else CElem(self, k)

    def minimal_elements(self) -> list[CElem]:
        return [CElem(self, i) for i in range(self.size)
                if self._down[i] == 1 << i]

    def hasse_edges(self) -> list[tuple[int, int]]:
        """Cover pairs (i, j) with i strictly below j and nothing between."""
        out = []
        for j in range(self.size):
            below = self._down[j] & ~(1 << j)
            mask = below
            while mask:
                low = mask & -mask
                i = low.bit_length() - 1
                if self._up[i] & ~(1 << i) & ~(1 << j) & self._down[j] == 0:
                    out.append((i, j))
                mask ^= low
        return sorted(out)

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "type": "cubic",
            "name": self.name,
            "elements": [self._fmt(p) for p in self.payloads],
            "top": self.one_i,
            "join": [list(row) for row in self._join],
            "delta": [[None if d == -1 else d for d in row]
                      for row in self._delta],
        }

    @classmethod
    def from_json(cls, data: dict) -> "CubicAlg":
        if data.get("type") != "cubic":
            raise ValueError(f"not a cubic-algebra payload: {data.get('type')!r}")
        dt = [[-1 if d is None else d for d in row] for row in data["delta"]]
        return cls.from_tables(data["elements"], data["top"], data["join"],
                               dt, name=data.get("name", "cubic"))

    def to_dot(self) -> str:
        """Order diagram in DOT form.

        Solid edges run from each element up to its covers; dashed
        undirected edges pair each element with its reflection through
        the top.  Only the top is its own reflection, so the dashed
        edges form a perfect matching on everything below it.
        """
        lines = ["digraph cubic {", "  rankdir=BT;",
                 '  node [shape=box, fontname="monospace"];']
        for i, p in enumerate(self.payloads):
            label = self._fmt(p).replace('"', '\\"')
            lines.append(f'  n{i} [label="{label}"];')
        for i, j in self.hasse_edges():
            lines.append(f"  n{i} -> n{j};")
        for i in range(self.size):
            j = self._delta[self.one_i][i]
            if i < j:
                lines.append(
                    f"  n{i} -> n{j} [style=dashed, dir=none, constraint=false];")
        lines.append("}")
        return "\n".join(lines) + "\n"


def check_cubic_axioms(C: CubicAlg, max_size: int = MAX_CHECK_ELEMENTS) -> CheckReport:
    """Exhaustively verify the semilattice and difference laws.

    Covers: join laws with 1 on top; the domain of the difference; the
    absorption, coherence, involution, and monotonicity of delta; and the
    implication laws (join recovery, exchange, contraction) for the
    derived implication.
    """
    if C.size > max_size:
        raise SizeCapError(f"{C.size} elements exceed the checking cap {max_size}")
    n = C.size
    jt = C._join
    dt = C._delta
    report = CheckReport(f"cubic axioms on {C.name}")

    def w(*idx):
        return tuple(C._fmt(C.payloads[i]) for i in idx)

    bad = None
    for i in range(n):
        if jt[i][i] != i:
            bad = w(i)
            break
    report.add("join-idempotent", bad is None, witness=bad)

    bad = None
    for i in range(n):
        for j in range(n):
            if jt[i][j] != jt[j][i]:
                bad = w(i, j)
                break
        if bad:
            break
    report.add("join-commutative", bad is None, witness=bad)

    bad = None
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if jt[jt[i][j]][k] != jt[i][jt[j][k]]:
                    bad = w(i, j, k)
                    break
            if bad:
                break
        if bad:
            break
    report.add("join-associative", bad is None, witness=bad)

    bad = None
    for i in range(n):
        if jt[i][C.one_i] != C.one_i:
            bad = w(i)
            break
    report.add("top-greatest", bad is None, witness=bad)

    bad = None
    for yi in range(n):
        for xi in range(n):
            if (dt[yi][xi] != -1) != (jt[xi][yi] == yi):
                bad = w(yi, xi)
                break
        if bad:
            break
    report.add("delta-defined-iff-below", bad is None, witness=bad)

    pairs = [(yi, xi) for yi in range(n) for xi in range(n) if jt[xi][yi] == yi]

    bad = None
    for yi, xi in pairs:
        d = dt[yi][xi]
        if d == -1 or jt[d][xi] != yi:
            bad = w(yi, xi)
            break
    report.add("delta-restores-join", bad is None, witness=bad)

    bad = None
    for yi, xi in pairs:
        d = dt[yi][xi]
        if d == -1 or dt[yi][d] == -1 or dt[yi][d] != xi:
            bad = w(yi, xi)
            break
    report.add("delta-involutive", bad is None, witness=bad)

    # chains x <= y <= z for the coherence and monotonicity laws
    bad_coh = bad_mono = None
    for zi in range(n):
        belows = [yi for yi in range(n) if jt[yi][zi] == zi]
        for yi in belows:
            dzy = dt[zi][yi]
            for xi in range(n):
                if jt[xi][yi] != yi:
                    continue
                dyx = dt[yi][xi]
                dzx = dt[zi][xi]
                if -1 in (dzy, dyx, dzx):  # possible only for corrupt tables
                    bad_coh = bad_coh or w(zi, yi, xi)
                    bad_mono = bad_mono or w(zi, yi, xi)
                    continue
                if bad_coh is None:
                    rhs = dt[dzy][dzx] if jt[dzx][dzy] == dzy else -2
                    if dt[zi][dyx] != rhs:
                        bad_coh = w(zi, yi, xi)
                if bad_mono is None and jt[dzx][dzy] != dzy:
                    bad_mono = w(zi, yi, xi)
            if bad_coh and bad_mono:
                break
        if bad_coh and bad_mono:
            break
    report.add("delta-coherent", bad_coh is None, witness=bad_coh)
    report.add("delta-monotone", bad_mono is None, witness=bad_mono)

    if report.ok:
        if C._imp is None:
            C._build_imp()
        it = C._imp

        bad = None
        for i in range(n):
            for j in range(n):
                if jt[it[i][j]][j] != it[i][j] or it[it[i][j]][j] != jt[i][j]:
                    bad = w(i, j)
                    break
            if bad:
                break
        report.add("imp-join-recovery", bad is None, witness=bad)

        bad = None
        for i in range(n):
            for j in range(n):
                if it[it[i][j]][i] != i:
                    bad = w(i, j)
                    break
            if bad:
                break
        report.add("imp-contraction", bad is None, witness=bad)

        bad = None
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if it[i][it[j][k]] != it[j][it[i][k]]:
                        bad = w(i, j, k)
                        break
                if bad:
                    break
            if bad:
                break
        report.add("imp-exchange", bad is None, witness=bad)
    else:
        note = "skipped: difference laws already failed"
        for nm in ("imp-join-recovery", "imp-contraction", "imp-exchange"):
            report.add(nm, False, note=note)
    return report


def check_mr_axiom(C: CubicAlg, max_size: int = MAX_CHECK_ELEMENTS) -> CheckReport:
    """Check the meet-detection condition and totality of the caret.

    For a, b strictly below x the join delta(x, a) | b falls short of x
    exactly when a and b have no meet; equivalently the caret is total.
    The two items pass or fail together on any cubic algebra.
    """
    if C.size > max_size:
        raise SizeCapError(f"{C.size} elements exceed the checking cap {max_size}")
    n = C.size
    jt = C._join
    dt = C._delta
    report = CheckReport(f"meet condition on {C.name}")

    def w(*idx):
        return tuple(C._fmt(C.payloads[i]) for i in idx)

    bad = None
    for xi in range(n):
        strict = [a for a in range(n) if jt[a][xi] == xi and a != xi]
        for a in strict:
            da = dt[xi][a]
            if da == -1:
                bad = w(xi, a)
                break
            for b in strict:
                short = jt[da][b] != xi
                if short != (C.poset_meet_i(a, b) is None):
                    bad = w(xi, a, b)
                    break
            if bad:
                break
        if bad:
            break
    report.add("meet-absence-detected", bad is None, witness=bad)

    bad = None
    for i in range(n):
        for j in range(n):
            if C.caret_i(i, j) is None:
                bad = w(i, j)
                break
        if bad:
            break
    report.add("caret-total", bad is None, witness=bad)
    return report


def is_mr(C: CubicAlg) -> bool:
    return check_mr_axiom(C).ok


def check_caret_meet_agreement(C: CubicAlg) -> CheckReport:
    """Whenever x and y have a meet, it equals the caret of x with the
    reflection of y, that is x ^ delta(x | y, y)."""
    report = CheckReport(f"caret against meet on {C.name}")
    bad = None
    for i in range(C.size):
        for j in range(C.size):
            m = C.poset_meet_i(i, j)
            if m is None:
                continue
            anti = C._delta[C._join[i][j]][j]
            if C.caret_i(i, anti) != m:
                bad = (C._fmt(C.payloads[i]), C._fmt(C.payloads[j]))
                break
        if bad:
            break
    report.add("caret-computes-meet", bad is None, witness=bad)
    return report


@dataclass(frozen=True)
class CubicMorphism:
    """Structure map between cubic algebras, tabulated by source index."""

    source: CubicAlg
    target: CubicAlg
    table: tuple[int, ...]

    @classmethod
    def from_function(cls, source: CubicAlg, target: CubicAlg,
                      fn: Callable[[CElem], CElem]) -> "CubicMorphism":
        rows = []
        for x in source.elements():
            img = fn(x)
            if img.alg is not target:
                raise MixedAlgebraError(f"image of {x} is not in the target")
            rows.append(img.i)
        return cls(source, target, tuple(rows))

    @classmethod
    def identity(cls, C: CubicAlg) -> "CubicMorphism":
        return cls(C, C, tuple(range(C.size)))

    def __call__(self, x: CElem) -> CElem:
        return CElem(self.target, self.table[self.source._own(x)])

    def compose(self, other: "CubicMorphism") -> "CubicMorphism":
        """self after other."""
        if other.target is not self.source:
            raise MixedAlgebraError("composition mismatch")
        return CubicMorphism(other.source, self.target,
                             tuple(self.table[i] for i in other.table))

    def validate(self) -> CheckReport:
        S, T, f = self.source, self.target, self.table
        report = CheckReport(f"cubic morphism {S.name} to {T.name}")
        report.add("preserves-top", f[S.one_i] == T.one_i)
        bad = None
        for i in range(S.size):
            for j in range(S.size):
                if f[S._join[i][j]] != T._join[f[i]][f[j]]:
                    bad = (S._fmt(S.payloads[i]), S._fmt(S.payloads[j]))
                    break
            if bad:
                break
        report.add("preserves-join", bad is None, witness=bad)
        bad = None
        for yi in range(S.size):
            for xi in range(S.size):
                if S._delta[yi][xi] == -1:
                    continue
                if not T.leq_i(f[xi], f[yi]) or \
                        f[S._delta[yi][xi]] != T._delta[f[yi]][f[xi]]:
                    bad = (S._fmt(S.payloads[yi]), S._fmt(S.payloads[xi]))
                    break
            if bad:
                break
        report.add("preserves-difference", bad is None, witness=bad)
        return report

    def is_injective(self) -> bool:
        return len(set(self.table)) == len(self.table)

    def is_surjective(self) -> bool:
        return set(self.table) == set(range(self.target.size))

    def is_isomorphism(self) -> bool:
        return self.is_injective() and self.is_surjective() and self.validate().ok


def find_cubic_isomorphism(C: CubicAlg, D: CubicAlg) -> CubicMorphism | None:
    """Search for an isomorphism between two cubic algebras.

    Matches elements with the same order profile, pruning candidate
    assignments against the join and difference tables of everything
    already matched.  Returns a validated morphism or None.
    """
    if C.size != D.size:
        return None

    def prof(A, i):
        return (bin(A._up[i]).count("1"), bin(A._down[i]).count("1"))

    pc = [prof(C, i) for i in range(C.size)]
    pd = [prof(D, i) for i in range(D.size)]
    if sorted(pc) != sorted(pd):
        return None
    order = sorted(range(C.size), key=lambda i: (pc[i], i))
    assign: dict[int, int] = {}
    used: set[int] = set()

    def consistent(i: int, j: int) -> bool:
        items = list(assign.items()) + [(i, j)]
        for a, b in items:
            for c, d in items:
                e = C._join[a][c]
                f = assign.get(e, j if e == i else None)
                if f is not None and f != D._join[b][d]:
                    return False
                e = C._delta[a][c]
                g = D._delta[b][d]
                if (e == -1) != (g == -1):
                    return False
                if e != -1:
                    f = assign.get(e, j if e == i else None)
                    if f is not None and f != g:
                        return False
        return True

    def extend(k: int) -> bool:
        if k == C.size:
            return True
        i = order[k]
        for j in range(D.size):
            if j in used or pd[j] != pc[i] or not consistent(i, j):
                continue
            assign[i] = j
            used.add(j)
            if extend(k + 1):
                return True
            del assign[i]
            used.discard(j)
        return False

    if not extend(0):
        return None
    iso = CubicMorphism(C, D, tuple(assign[i] for i in range(C.size)))
    return iso if iso.is_isomorphism() else None


def is_subalgebra(C: CubicAlg, indices: Iterable[int]) -> bool:
    """Closed under join and difference, and containing the top."""
    S = set(indices)
    if C.one_i not in S:
        return False
    for i in S:
        for j in S:
            if C._join[i][j] not in S:
                return False
            if C._delta[j][i] != -1 and C._delta[j][i] not in S:
                return False
    return True


def restrict(C: CubicAlg, members: Iterable[CElem]) -> CubicAlg:
    """Subalgebra on the given elements, with payloads carried over."""
    idx = sorted({C._own(x) for x in members})
    if not is_subalgebra(C, idx):
        raise LawViolationError("subset is not closed under join and difference",
                               witness=[C._fmt(C.payloads[i]) for i in idx])
    pos = {i: p for p, i in enumerate(idx)}
    jt = [[pos[C._join[i][j]] for j in idx] for i in idx]
    dt = [[pos[C._delta[yi][xi]] if C._delta[yi][xi] != -1 else -1 for xi in idx]
          for yi in idx]
    return CubicAlg.from_tables([C.payloads[i] for i in idx], pos[C.one_i],
                                jt, dt, name=f"{C.name}|{len(idx)}", fmt=C._fmt)


def inclusion(sub: CubicAlg, C: CubicAlg) -> CubicMorphism:
    return CubicMorphism.from_function(sub, C, lambda x: C.element(x.payload))


def is_upclosed(C: CubicAlg, indices: Iterable[int]) -> bool:
    S = set(indices)
    mask = 0
    for i in S:
        mask |= 1 << i
    return all(C._up[i] & ~mask == 0 for i in S)


def enumerate_upclosed_subalgebras(C: CubicAlg,
                                   max_size: int = MAX_SUBALG_ELEMENTS) -> list[frozenset[int]]:
    """All nonempty up-closed subsets closed under the difference.

    Up-closure makes join-closure automatic.  Elements are decided from the
    top of the order downward, so up-closure can be enforced on the fly;
    difference closure is filtered afterwards.
    """
    if C.size > max_size:
        raise SizeCapError(f"{C.size} elements exceed the enumeration cap {max_size}")
    order = sorted(range(C.size), key=lambda i: (bin(C._up[i]).count("1"), i))
    upsets: list[int] = []

    def walk(pos: int, mask: int):
        if pos == len(order):
            if mask:
                upsets.append(mask)
            return
        i = order[pos]
        walk(pos + 1, mask)
        if C._up[i] & ~mask == 1 << i:
            walk(pos + 1, mask | (1 << i))

    walk(0, 0)
    out = []
    for mask in upsets:
        members = [i for i in range(C.size) if mask >> i & 1]
        closed = True
        for yi in members:
            for xi in members:
                d = C._delta[yi][xi]
                if d != -1 and not mask >> d & 1:
                    closed = False
                    break
            if not closed:
                break
        if closed:
            out.append(frozenset(members))
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def corrupt_delta(C: CubicAlg, seed: int = 0) -> CubicAlg:
    """Copy of C with one difference entry against the top redirected.

    Redirecting delta(1, x) to any other element breaks restoration or
    involution, so the axiom checker must reject the result.
    """
    if C.size < 2:
        raise ValueError("nothing to corrupt in a one-element algebra")
    rng = random.Random(seed)
    xs = [i for i in range(C.size) if i != C.one_i]
    xi = rng.choice(xs)
    old = C._delta[C.one_i][xi]
    zi = rng.choice([k for k in range(C.size) if k != old])
    dt = [list(row) for row in C._delta]
    dt[C.one_i][xi] = zi
    return CubicAlg.from_tables(C.payloads, C.one_i, C._join, dt,
                                name=f"{C.name}~corrupt{seed}", fmt=C._fmt)
