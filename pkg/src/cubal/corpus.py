"""Shared zoo of small instances for tests and law checking.

Everything here is memoized so that element handles stay comparable
across call sites: two requests for the same algebra return the same
object, and elements carry their algebra by identity.
"""

from __future__ import annotations

from functools import lru_cache

from .boolean import BoolAlg
from .constructions import (interval_algebra, iso_pair_interval,
                            iso_signed_interval, pair_algebra,
                            signed_set_algebra)
from .cubic import (CubicAlg, CubicMorphism, corrupt_delta,
                    enumerate_upclosed_subalgebras, inclusion, restrict)
from .implication import ImpAlg, ImpMorphism


@lru_cache(maxsize=None)
def boolean(n: int) -> BoolAlg:
    return BoolAlg(n)


@lru_cache(maxsize=None)
def signed(n: int) -> CubicAlg:
    return signed_set_algebra(n)


@lru_cache(maxsize=None)
def intervals(n: int) -> CubicAlg:
    return interval_algebra(boolean(n))


# -- up-sets of the four-element Boolean algebra ----------------------------

@lru_cache(maxsize=None)
def upset_imps() -> tuple[tuple[str, ImpAlg], ...]:
    """The five up-closed subsets of 2^2 that contain the top.

    Every one of them is an implication algebra; only "vee" lacks a
    bottom, which makes its pair algebra the smallest host where the
    caret is not total.
    """
    B = boolean(2)
    p, q = B.atom("a").bits, B.atom("b").bits
    one = B.full_mask
    table = (
        ("point", frozenset({one})),
        ("ray-a", frozenset({p, one})),
        ("ray-b", frozenset({q, one})),
        ("vee", frozenset({p, q, one})),
        ("square", frozenset({0, p, q, one})),
    )
    return tuple((name, ImpAlg(B, bits)) for name, bits in table)


@lru_cache(maxsize=None)
def upset_pairs() -> tuple[tuple[str, CubicAlg], ...]:
    return tuple((f"pairs-{name}", pair_algebra(I)) for name, I in upset_imps())


@lru_cache(maxsize=None)
def vee_imp() -> ImpAlg:
    """Three incomparable-free points: both atoms of 2^2 and the top."""
    return dict(upset_imps())["vee"]


@lru_cache(maxsize=None)
def five_pairs() -> CubicAlg:
    """Pair algebra of the vee, five elements, the smallest non-MR host."""
    return dict(upset_pairs())["pairs-vee"]


# -- the standard corpus ----------------------------------------------------

@lru_cache(maxsize=None)
def standard() -> tuple[tuple[str, CubicAlg], ...]:
    """Every algebra the broad quantifier tests sweep over."""
    out = [(f"signed-{n}", signed(n)) for n in range(3)]
    out += [(f"intervals-{n}", intervals(n)) for n in range(3)]
    out += list(upset_pairs())
    return tuple(out)


@lru_cache(maxsize=None)
def mutants() -> tuple[tuple[str, CubicAlg], ...]:
    """Seeded single-entry corruptions of the difference table.

    These are not cubic algebras; they exist so the negative paths of
    the checkers stay honest.
    """
    return (
        ("corrupt-intervals-2", corrupt_delta(intervals(2), seed=0)),
        ("corrupt-signed-2", corrupt_delta(signed(2), seed=1)),
        ("corrupt-pairs-vee", corrupt_delta(five_pairs(), seed=2)),
    )


# -- morphisms --------------------------------------------------------------

@lru_cache(maxsize=None)
def cubic_morphisms() -> tuple[tuple[str, CubicMorphism], ...]:
    V2 = intervals(2)
    out = [
        ("identity-intervals-2", CubicMorphism.identity(V2)),
        ("signed-to-intervals", iso_signed_interval(2, S=signed(2))),
        ("pairs-to-intervals", iso_pair_interval(boolean(2))),
    ]
    proper = [s for s in enumerate_upclosed_subalgebras(V2)
              if 1 < len(s) < V2.size]
    for k, s in enumerate([proper[0], proper[-1]]):
        sub = restrict(V2, sorted(s))
        out.append((f"inclusion-{k}-size-{len(s)}", inclusion(sub, V2)))
    return tuple(out)


@lru_cache(maxsize=None)
def imp_morphisms() -> tuple[tuple[str, ImpMorphism], ...]:
    named = dict(upset_imps())
    square, ray = named["square"], named["ray-a"]
    B1 = boolean(1)
    line = ImpAlg(B1, {0, B1.full_mask})

    def drop_b(x):
        return B1.element(x.bits & 1)

    return (
        ("identity-square", ImpMorphism.identity(square)),
        ("ray-into-square", ImpMorphism.inclusion(ray, square)),
        ("square-onto-line", ImpMorphism.from_function(square, line, drop_b)),
    )
