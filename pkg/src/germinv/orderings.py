"""Monomial and module term orders, realized as integer sort keys.

Every supported order is translated into a key function mapping an exponent
tuple to a tuple of ints, so that order comparison is plain tuple comparison
and leading terms come from max(). Local (anti-degree) orders make 1 the
largest monomial; basis algorithms pick Mora reduction for those.

Module terms are pairs (component, exponent). The extension is either
position-over-term (component decides first, lower index wins) or
term-over-position.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Tuple

from .errors import GermInputError

LEX = "lex"
DEGREVLEX = "degrevlex"
WEIGHTED = "weighted-degrevlex"
LOCAL = "local-anti-degree"
BLOCK = "block"

POSITION_OVER_TERM = "position-over-term"
TERM_OVER_POSITION = "term-over-position"

LT, EQ, GT = -1, 0, 1


@dataclass(frozen=True)
class OrderingSpec:
    """Declarative order description; see the factory constructors."""

    kind: str
    weights: Optional[Tuple[int, ...]] = None
    # for block orders: ((sub_spec, variable_indices), ...) partitioning 0..n-1
    blocks: Optional[Tuple[Tuple["OrderingSpec", Tuple[int, ...]], ...]] = None
    module: Optional[str] = None

    @staticmethod
    def lex() -> "OrderingSpec":
        return OrderingSpec(LEX)

    @staticmethod
    def degrevlex() -> "OrderingSpec":
        return OrderingSpec(DEGREVLEX)

    @staticmethod
    def weighted(weights) -> "OrderingSpec":
        w = tuple(int(x) for x in weights)
        if not w or any(x <= 0 for x in w):
            raise GermInputError("weighted orders need positive integer weights")
        return OrderingSpec(WEIGHTED, weights=w)

    @staticmethod
    def local() -> "OrderingSpec":
        return OrderingSpec(LOCAL)

    @staticmethod
    def block(blocks) -> "OrderingSpec":
        bs = tuple((spec, tuple(idx)) for spec, idx in blocks)
        return OrderingSpec(BLOCK, blocks=bs)

    @staticmethod
    def elimination(front: Tuple[int, ...], n: int,
                    inner: Optional["OrderingSpec"] = None) -> "OrderingSpec":
        """Block order eliminating the `front` variables of an n-variable ring."""
        front = tuple(front)
        rest = tuple(i for i in range(n) if i not in set(front))
        if not front or not rest:
            raise GermInputError("elimination order needs a proper variable split")
        return OrderingSpec.block([(OrderingSpec.degrevlex(), front),
                                   (inner or OrderingSpec.degrevlex(), rest)])

    def with_module(self, layout: str) -> "OrderingSpec":
        if layout not in (POSITION_OVER_TERM, TERM_OVER_POSITION):
            raise GermInputError(f"unknown module layout {layout!r}")
        return OrderingSpec(self.kind, self.weights, self.blocks, layout)

    @property
    def is_global(self) -> bool:
        """True when 1 is the smallest monomial (well-ordering, plain division)."""
        if self.kind == BLOCK:
            return all(spec.is_global for spec, _ in self.blocks)
        return self.kind != LOCAL


def key_function(spec: OrderingSpec, nvars: int) -> Callable[[Tuple[int, ...]], tuple]:
    """Key function on exponent tuples; larger key = larger monomial."""
    if spec.kind == LEX:
        return lambda e: e
    if spec.kind == DEGREVLEX:
        return lambda e: (sum(e),) + tuple(-x for x in reversed(e))
    if spec.kind == WEIGHTED:
        w = spec.weights
        if w is None or len(w) != nvars:
            raise GermInputError("weight vector length does not match context")
        return lambda e: (sum(a * b for a, b in zip(w, e)),) + tuple(-x for x in reversed(e))
    if spec.kind == LOCAL:
        return lambda e: (-sum(e),) + tuple(-x for x in reversed(e))
    if spec.kind == BLOCK:
        if spec.blocks is None:
            raise GermInputError("block order without blocks")
        seen = sorted(i for _, idx in spec.blocks for i in idx)
        if seen != list(range(nvars)):
            raise GermInputError("block order must partition the variables")
        subs = [(key_function(sub, len(idx)), idx) for sub, idx in spec.blocks]

        def key(e, _subs=tuple(subs)):
            out = ()
            for kf, idx in _subs:
                out += kf(tuple(e[i] for i in idx))
            return out

        return key
    raise GermInputError(f"unknown ordering kind {spec.kind!r}")


def module_key_function(spec: OrderingSpec, nvars: int) -> Callable[[Tuple[int, tuple]], tuple]:
    """Key on (component, exponent) pairs. Lower component index = higher priority."""
    ring_key = key_function(spec, nvars)
    layout = spec.module or POSITION_OVER_TERM
    if layout == POSITION_OVER_TERM:
        return lambda t: (-t[0],) + ring_key(t[1])
    return lambda t: ring_key(t[1]) + (-t[0],)


def compare(m1: Tuple[int, ...], m2: Tuple[int, ...], spec: OrderingSpec) -> int:
    """-1, 0, or 1 as m1 <, =, > m2 under the given order."""
    if len(m1) != len(m2):
        raise GermInputError("exponent tuples of different lengths")
    k = key_function(spec, len(m1))
    a, b = k(tuple(m1)), k(tuple(m2))
    return LT if a < b else GT if a > b else EQ
