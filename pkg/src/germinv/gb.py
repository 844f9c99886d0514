"""Groebner and standard bases for ideals over Q, with the derived ideal calculus.

Global orders run plain Buchberger with sugar-degree pair selection and the
two classical pair criteria; the result is the unique reduced basis. Local
orders run Mora's tangent-cone algorithm: reduction picks an ecart-minimal
reducer and may enlist intermediate remainders as new reducers, which is what
makes the loop terminate without a well-order. Local bases are minimalized
and lead-normalized but their tails are left alone (full tail reduction need
not terminate in a local ring).

Everything downstream (elimination, intersection, colon ideals, saturation,
the two dimension counts) reduces to basis computations here. Dimension
counting never inspects coefficients: it reads the staircase of the leading
ideal, which is the correct recipe for both the polynomial ring and the
local ring at the origin. Local quotient dimensions have a second, much
faster route through truncated standard bases (jets), which certifies its
own exactness and is the default for quotient_dimension on local handles.
"""

from __future__ import annotations

import heapq
import itertools
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .config import ComputeConfig, DEFAULT_CONFIG
from .errors import GermInputError, ResourceLimitError
from .orderings import OrderingSpec, key_function
from .poly import Exponent, Polynomial, VariableContext


class _Sentinel:
    __slots__ = ("_name",)

    def __init__(self, name: str):
        self._name = name

    def __repr__(self) -> str:
        return self._name


INFINITE = _Sentinel("INFINITE")   # quotient has no finite vector-space dimension
EMPTY = _Sentinel("EMPTY")         # Krull dimension of the empty variety (unit ideal)

_ZERO = Fraction(0)


def _intify(terms) -> Dict[Exponent, int]:
    """Clear denominators and strip content: primitive integer coefficients."""
    if not terms:
        return {}
    den = 1
    for c in terms.values():
        if isinstance(c, Fraction):
            den = den * c.denominator // gcd(den, c.denominator)
    out: Dict[Exponent, int] = {}
    g = 0
    for e, c in terms.items():
        n = int(c * den)
        out[e] = n
        g = gcd(g, n)
    if g > 1:
        return {e: n // g for e, n in out.items()}
    return out


def _content_strip(h: Dict[Exponent, int]) -> Dict[Exponent, int]:
    g = 0
    for v in h.values():
        g = gcd(g, v)
        if g == 1:
            return h
    if g > 1:
        return {e: v // g for e, v in h.items()}
    return h


def _divides(a: Exponent, b: Exponent) -> bool:
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


class _Elt:
    """Basis element with the data the reducers need on every step.

    Engine-internal elements always carry primitive integer coefficients;
    operating over Z with explicit content handling keeps the hot loops free
    of per-operation gcd normalization.
    """

    __slots__ = ("terms", "lm", "lc", "lmkey", "maxdeg", "ecart", "sugar")

    def __init__(self, terms: Dict[Exponent, int], key, sugar: Optional[int] = None):
        self.terms = terms
        self.lm = max(terms, key=key)
        self.lc = terms[self.lm]
        self.lmkey = key(self.lm)
        self.maxdeg = max(sum(e) for e in terms)
        self.ecart = self.maxdeg - sum(self.lm)
        self.sugar = self.maxdeg if sugar is None else sugar


def _reduce_global(f, elts: Sequence[_Elt], key, cfg: ComputeConfig,
                   stop_early: bool = False) -> Dict[Exponent, int]:
    """Full pseudo-reduction under a global order.

    Returns an integer-coefficient dict equal to a positive rational multiple
    of the reduced normal form (zero iff the true normal form is zero); the
    caller rescales when the exact normal form matters. With stop_early the
    loop bails at the first irreducible term, enough for membership tests.
    """
    h = _intify(f)
    if not h:
        return h
    heap = [(tuple(-v for v in key(e)), e) for e in h]
    heapq.heapify(heap)
    steps = 0
    while heap:
        _, e = heapq.heappop(heap)
        c = h.get(e)
        if c is None:
            continue
        red = None
        for g in elts:
            if _divides(g.lm, e):
                red = g
                break
        if red is None:
            if stop_early:
                return h
            continue  # settled: coefficient may still change, monomial won't return
        steps += 1
        if steps > cfg.max_pairs:
            raise ResourceLimitError("reduction exceeded the configured step budget")
        m = tuple(a - b for a, b in zip(e, red.lm))
        if sum(m) + red.maxdeg > cfg.max_degree:
            raise ResourceLimitError("reduction exceeded the configured degree bound")
        g0 = gcd(c, red.lc)
        scale = red.lc // g0
        if scale < 0:
            scale, g0 = -scale, -g0
        if scale != 1:
            for k in h:
                h[k] *= scale
        factor = c // g0
        del h[e]
        for ge, gc in red.terms.items():
            if ge == red.lm:
                continue
            te = tuple(a + b for a, b in zip(ge, m))
            prev = h.get(te)
            if prev is None:
                h[te] = -factor * gc
                heapq.heappush(heap, (tuple(-v for v in key(te)), te))
            else:
                s = prev - factor * gc
                if s:
                    h[te] = s
                else:
                    del h[te]
        if steps % 64 == 0 and h:
            h = _content_strip(h)
    return _content_strip(h) if h else h


def _reduce_exact(f, elts: Sequence[_Elt], key, cfg: ComputeConfig) -> Dict[Exponent, Fraction]:
    """Reduced normal form with exact rational coefficients (global orders).

    The pseudo-reduction above only preserves the remainder up to scale,
    which is fine for bases and membership but not for normal_form, whose
    answer is the canonical linear representative. This variant keeps
    rational arithmetic; it is never on a hot path.
    """
    h: Dict[Exponent, Fraction] = {e: Fraction(c) for e, c in f.items()}
    if not h:
        return h
    heap = [(tuple(-v for v in key(e)), e) for e in h]
    heapq.heapify(heap)
    steps = 0
    while heap:
        _, e = heapq.heappop(heap)
        c = h.get(e)
        if c is None:
            continue
        red = None
        for g in elts:
            if _divides(g.lm, e):
                red = g
                break
        if red is None:
            continue
        steps += 1
        if steps > cfg.max_pairs:
            raise ResourceLimitError("reduction exceeded the configured step budget")
        m = tuple(a - b for a, b in zip(e, red.lm))
        if sum(m) + red.maxdeg > cfg.max_degree:
            raise ResourceLimitError("reduction exceeded the configured degree bound")
        factor = c / red.lc
        del h[e]
        for ge, gc in red.terms.items():
            if ge == red.lm:
                continue
            te = tuple(a + b for a, b in zip(ge, m))
            prev = h.get(te)
            if prev is None:
                h[te] = -factor * gc
                heapq.heappush(heap, (tuple(-v for v in key(te)), te))
            else:
                s = prev - factor * gc
                if s:
                    h[te] = s
                else:
                    del h[te]
    return h


def _reduce_mora(f, elts: Sequence[_Elt], key, cfg: ComputeConfig) -> Dict[Exponent, int]:
    """Mora weak normal form: valid for local (and any) orders.

    Returns h with u*f = (combination of elts) + h for some unit u of the
    local ring and a nonzero rational scale; h is zero exactly when f lies in
    the ideal locally. The tail of h is not reduced, and h is determined only
    up to units anyway, so a primitive-integer representative is returned.
    """
    pool: List[_Elt] = list(elts)
    h = _intify(f)
    steps = 0
    while h:
        lm_h = max(h, key=key)
        cands = [g for g in pool if _divides(g.lm, lm_h)]
        if not cands:
            return _content_strip(h)
        maxdeg_h = max(sum(e) for e in h)
        ecart_h = maxdeg_h - sum(lm_h)
        g = min(cands, key=lambda x: x.ecart)
        if g.ecart > ecart_h:
            pool.append(_Elt(_content_strip(dict(h)), key))
        steps += 1
        if steps > cfg.max_pairs:
            raise ResourceLimitError("local reduction exceeded the configured step budget")
        m = tuple(a - b for a, b in zip(lm_h, g.lm))
        if sum(m) + g.maxdeg > cfg.max_degree:
            raise ResourceLimitError("local reduction exceeded the configured degree bound")
        c = h[lm_h]
        g0 = gcd(c, g.lc)
        scale = g.lc // g0
        if scale < 0:
            scale, g0 = -scale, -g0
        if scale != 1:
            for k in h:
                h[k] *= scale
        factor = c // g0
        for ge, gc in g.terms.items():
            te = tuple(a + b for a, b in zip(ge, m))
            s = h.get(te, 0) - factor * gc
            if s:
                h[te] = s
            else:
                h.pop(te, None)
        if len(h) > 4 and steps % 32 == 0:
            h = _content_strip(h)
    return h


def _spoly(f: _Elt, g: _Elt, key, cfg: ComputeConfig) -> Dict[Exponent, int]:
    lcm = tuple(max(a, b) for a, b in zip(f.lm, g.lm))
    if sum(lcm) > cfg.max_degree:
        raise ResourceLimitError("s-polynomial exceeded the configured degree bound")
    mf = tuple(a - b for a, b in zip(lcm, f.lm))
    mg = tuple(a - b for a, b in zip(lcm, g.lm))
    g0 = gcd(f.lc, g.lc)
    cf = g.lc // g0
    cg = f.lc // g0
    out: Dict[Exponent, int] = {}
    for e, c in f.terms.items():
        te = tuple(a + b for a, b in zip(e, mf))
        out[te] = c * cf
    for e, c in g.terms.items():
        te = tuple(a + b for a, b in zip(e, mg))
        s = out.get(te, 0) - c * cg
        if s:
            out[te] = s
        else:
            out.pop(te, None)
    return out


def _pair_sugar(f: _Elt, g: _Elt, key) -> Tuple[int, tuple]:
    lcm = tuple(max(a, b) for a, b in zip(f.lm, g.lm))
    d = sum(lcm)
    sugar = max(f.sugar + d - sum(f.lm), g.sugar + d - sum(g.lm))
    return sugar, key(lcm)


def _basis(gens: Sequence[Dict[Exponent, Fraction]], key, is_global: bool,
           cfg: ComputeConfig, lead_stop=None) -> Optional[List[Dict[Exponent, Fraction]]]:
    """Shared Buchberger/Mora loop; returns a minimal, monic basis.

    With `lead_stop` set, the predicate sees the accumulated lead exponents
    after every new element; once it returns true the loop aborts and None
    comes back — no partial basis escapes, the caller already saw the leads.
    """
    elts: List[_Elt] = []
    for g in gens:
        if g:
            elts.append(_Elt(_intify(g), key))
    reduce_one = _reduce_global if is_global else _reduce_mora

    heap: List[Tuple[int, tuple, int, int]] = []
    done: set = set()

    def add_pairs(j: int):
        for i in range(j):
            sugar, lk = _pair_sugar(elts[i], elts[j], key)
            heapq.heappush(heap, (sugar, lk, i, j))

    for j in range(len(elts)):
        add_pairs(j)

    handled = 0
    while heap:
        sugar, _, i, j = heapq.heappop(heap)
        done.add((i, j))
        handled += 1
        if handled > cfg.max_pairs:
            raise ResourceLimitError("basis computation exceeded the configured pair budget")
        f, g = elts[i], elts[j]
        lcm = tuple(max(a, b) for a, b in zip(f.lm, g.lm))
        # product criterion: coprime leads never yield new information
        if all(a + b == c for a, b, c in zip(f.lm, g.lm, lcm)):
            continue
        # chain criterion: a third lead dividing the lcm, both its pairs settled
        skip = False
        for k in range(len(elts)):
            if k == i or k == j:
                continue
            if _divides(elts[k].lm, lcm):
                a = (min(i, k), max(i, k))
                b = (min(j, k), max(j, k))
                if a in done and b in done:
                    skip = True
                    break
        if skip:
            continue
        h = reduce_one(_spoly(f, g, key, cfg), elts, key, cfg)
        if not h:
            continue
        elts.append(_Elt(_content_strip(h), key, sugar=max(sugar, max(sum(e) for e in h))))
        add_pairs(len(elts) - 1)
        if lead_stop is not None and lead_stop([e.lm for e in elts]):
            return None

    # minimalize: drop elements whose lead is divisible by another lead
    keep: List[int] = []
    for i, e in enumerate(elts):
        drop = False
        for j, f in enumerate(elts):
            if i == j:
                continue
            if _divides(f.lm, e.lm) and (f.lm != e.lm or j < i):
                drop = True
                break
        if not drop:
            keep.append(i)
    minimal = [elts[i] for i in keep]
    minimal.sort(key=lambda e: e.lmkey, reverse=True)

    if is_global:
        # tail interreduction gives the unique reduced basis
        current = list(minimal)
        for idx in range(len(current)):
            others = [current[k] for k in range(len(current)) if k != idx]
            red = _reduce_global(current[idx].terms, others, key, cfg)
            current[idx] = _Elt(red, key)
        minimal = current
    result = []
    for e in minimal:
        lc = e.terms[e.lm]
        result.append({m: Fraction(c, lc) for m, c in e.terms.items()})
    return result


def _exact_divide(p: Dict[Exponent, Fraction], f: Dict[Exponent, Fraction], key,
                  cfg: ComputeConfig) -> Dict[Exponent, Fraction]:
    """Quotient p/f when f divides p exactly (used by colon ideals).

    Stays in rational arithmetic: the quotient's coefficients are honest
    values, not scale-free intermediates, and this path is never hot.
    """
    felt = _Elt(dict(f), key)
    h = dict(p)
    q: Dict[Exponent, Fraction] = {}
    while h:
        lm = max(h, key=key)
        if not _divides(felt.lm, lm):
            raise GermInputError("exact division failed; quotient generator not divisible")
        m = tuple(a - b for a, b in zip(lm, felt.lm))
        c = h[lm] / felt.lc
        q[m] = c
        for ge, gc in felt.terms.items():
            te = tuple(a + b for a, b in zip(ge, m))
            s = h.get(te, _ZERO) - c * gc
            if s:
                h[te] = s
            else:
                h.pop(te, None)
    return q


def _staircase_profile(leads: Sequence[Exponent], nvars: int):
    """(count, largest total degree) over the staircase, or INFINITE.

    Finite exactly when every variable shows a pure power among the leads;
    the count then runs over the bounding box of those powers.
    """
    if any(sum(e) == 0 for e in leads):
        return 0, -1
    bounds: List[int] = []
    for i in range(nvars):
        pure = [e[i] for e in leads if sum(e) == e[i]]
        if not pure:
            return INFINITE
        bounds.append(min(pure))
    size = 1
    for b in bounds:
        size *= max(b, 1)
    if size > 2_000_000:
        raise ResourceLimitError("staircase enumeration too large")
    leads = [e for e in leads if all(x < b for x, b in zip(e, bounds))]
    count = 0
    maxdeg = -1
    for mono in itertools.product(*(range(b) for b in bounds)):
        if not any(_divides(e, mono) for e in leads):
            count += 1
            d = sum(mono)
            if d > maxdeg:
                maxdeg = d
    return count, maxdeg


def staircase_count(leads: Sequence[Exponent], nvars: int):
    """Number of monomials outside the monomial ideal, or INFINITE."""
    profile = _staircase_profile(leads, nvars)
    if profile is INFINITE:
        return INFINITE
    return profile[0]


def _jet_leads(gens: Sequence[Dict[Exponent, Fraction]], nvars: int,
               bound: int, cfg: ComputeConfig) -> List[Exponent]:
    """Lead exponents of a standard basis of I + m^bound (anti-degree order).

    Dropping every term of total degree >= bound is reduction by the implicit
    m^bound generators, and any s-pair against one of those generators only
    carries terms of degree >= bound, so the pair loop runs over the explicit
    elements alone. Within the truncated monomial set each rewrite strictly
    lowers the lead, so plain lead reduction terminates without the ecart
    bookkeeping a full local computation needs.
    """
    key = key_function(OrderingSpec.local(), nvars)
    elts: List[_Elt] = []

    def lead_reduce(h: Dict[Exponent, int]) -> Dict[Exponent, int]:
        steps = 0
        while h:
            lm = max(h, key=key)
            red = None
            for e in elts:
                if _divides(e.lm, lm):
                    red = e
                    break
            if red is None:
                return h
            m = tuple(a - b for a, b in zip(lm, red.lm))
            c = h[lm]
            g0 = gcd(c, red.lc)
            scale = red.lc // g0
            if scale < 0:
                scale, g0 = -scale, -g0
            if scale != 1:
                for k in h:
                    h[k] *= scale
            factor = c // g0
            for ge, gc in red.terms.items():
                te = tuple(a + b for a, b in zip(ge, m))
                if sum(te) >= bound:
                    continue
                s = h.get(te, 0) - factor * gc
                if s:
                    h[te] = s
                else:
                    h.pop(te, None)
            steps += 1
            if steps % 32 == 0 and h:
                h = _content_strip(h)
        return h

    for t in gens:
        cut = {e: c for e, c in t.items() if sum(e) < bound}
        if cut:
            elts.append(_Elt(_intify(cut), key))

    pairs: Dict[Tuple[int, int], tuple] = {}

    def push_pairs(idx: int) -> None:
        e = elts[idx]
        for k in range(idx):
            lcm = tuple(max(a, b) for a, b in zip(elts[k].lm, e.lm))
            if sum(lcm) < bound:
                pairs[(k, idx)] = key(lcm)

    for i in range(len(elts)):
        push_pairs(i)

    done = set()
    handled = 0
    while pairs:
        # normal strategy: largest key first, i.e. lowest lcm degree
        p = max(pairs, key=lambda q: (pairs[q], (-q[1], -q[0])))
        del pairs[p]
        done.add(p)
        i, j = p
        a, b = elts[i], elts[j]
        lcm = tuple(max(u, v) for u, v in zip(a.lm, b.lm))
        chained = False
        for k in range(len(elts)):
            if k == i or k == j:
                continue
            if _divides(elts[k].lm, lcm):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik in done and pjk in done:
                    chained = True
                    break
        if chained:
            continue
        handled += 1
        if handled > cfg.max_pairs:
            raise ResourceLimitError("jet basis exceeded the configured pair budget")
        sp = _spoly(a, b, key, cfg)
        sp = {e: c for e, c in sp.items() if sum(e) < bound}
        rem = lead_reduce(sp)
        if rem:
            elts.append(_Elt(_content_strip(rem), key))
            push_pairs(len(elts) - 1)

    leads = [e.lm for e in elts]
    out: List[Exponent] = []
    for i, m in enumerate(leads):
        covered = any(k != i and _divides(leads[k], m) and (leads[k] != m or k < i)
                      for k in range(len(leads)))
        if not covered:
            out.append(m)
    return out


def _local_quotient_dimension(gens: Sequence[Dict[Exponent, Fraction]], nvars: int,
                              cfg: ComputeConfig, start: Optional[int] = None):
    """dim of the local quotient at the origin by truncation-order growth.

    A truncated basis at order N determines the true local lead ideal below
    degree N, so once the truncated staircase is finite and tops out strictly
    below N the count is exact — no further growth can change it. Failure to
    certify below the configured jet bound is reported as a resource limit:
    it means the quotient has positive local dimension or a staircase taller
    than the bound, and the two cannot be told apart by truncation.
    """
    if not gens:
        return INFINITE
    bound = start if start is not None else 8
    bound = max(2, min(bound, cfg.jet_bound))
    while True:
        leads = _jet_leads(gens, nvars, bound, cfg)
        profile = _staircase_profile(leads, nvars)
        if profile is not INFINITE and profile[1] < bound:
            return profile[0]
        if bound >= cfg.jet_bound:
            raise ResourceLimitError(
                "local quotient dimension did not stabilize below the jet bound; "
                "the quotient may have positive local dimension")
        if profile is INFINITE:
            bound = min(bound * 2, cfg.jet_bound)
        else:
            bound = min(max(bound * 2, profile[1] + 2), cfg.jet_bound)


def monomial_dimension(leads: Sequence[Exponent], nvars: int):
    """Krull dimension of R/(monomial ideal): the largest set of variables
    meeting no lead's support. EMPTY for the unit ideal."""
    if any(sum(e) == 0 for e in leads):
        return EMPTY
    supports = [frozenset(i for i, x in enumerate(e) if x) for e in leads]
    for size in range(nvars, -1, -1):
        for subset in itertools.combinations(range(nvars), size):
            sset = set(subset)
            if all(not s <= sset for s in supports):
                return size
    return 0


class Ideal:
    """An ideal handle: generators, an order, and a lazily cached basis.

    The order decides the meaning of every derived quantity: with a global
    order the handle speaks about the polynomial ring, with a local one about
    the ring of germs at the origin.
    """

    def __init__(self, ctx: VariableContext, gens: Iterable[Polynomial],
                 ordering: Optional[OrderingSpec] = None,
                 config: ComputeConfig = DEFAULT_CONFIG):
        self.ctx = ctx
        self.ordering = ordering or OrderingSpec.degrevlex()
        self.config = config
        self._key = key_function(self.ordering, len(ctx))
        gens = [g for g in gens if not g.is_zero()]
        for g in gens:
            if g.ctx != ctx:
                raise GermInputError("ideal generator over the wrong context")
        self.gens: List[Polynomial] = sorted(gens, key=self._gen_sort_key, reverse=True)
        self._basis_cache: Optional[List[Polynomial]] = None

    def _gen_sort_key(self, p: Polynomial):
        items = sorted(((self._key(e), c) for e, c in p.terms.items()), reverse=True)
        return tuple(items)

    # -- basis -----------------------------------------------------------

    @property
    def is_local(self) -> bool:
        return not self.ordering.is_global

    def basis(self) -> List[Polynomial]:
        """Reduced Groebner basis (global order) or minimal standard basis (local)."""
        if self._basis_cache is None:
            raw = _basis([g.terms for g in self.gens], self._key,
                         self.ordering.is_global, self.config)
            self._basis_cache = [Polynomial._raw(self.ctx, t) for t in raw]
        return self._basis_cache

    def leading_monomials(self) -> List[Exponent]:
        return [max(p.terms, key=self._key) for p in self.basis()]

    def is_unit(self) -> bool:
        return any(sum(e) == 0 for e in self.leading_monomials())

    def normal_form(self, p: Polynomial) -> Polynomial:
        """Reduced normal form (global) or Mora weak normal form (local).

        The global form is the canonical linear representative of p modulo
        the ideal. The local form is a weak normal form: zero exactly on
        ideal members, otherwise a primitive-integer representative that is
        only determined up to a unit of the local ring.
        """
        if p.ctx != self.ctx:
            raise GermInputError("normal form argument over the wrong context")
        elts = [_Elt(_intify(b.terms), self._key) for b in self.basis()]
        if self.ordering.is_global:
            return Polynomial._raw(self.ctx, _reduce_exact(p.terms, elts, self._key, self.config))
        red = _reduce_mora(p.terms, elts, self._key, self.config)
        return Polynomial._raw(self.ctx, {e: Fraction(c) for e, c in red.items()})

    def contains(self, p: Polynomial) -> bool:
        if p.is_zero():
            return True
        elts = [_Elt(_intify(b.terms), self._key) for b in self.basis()]
        if self.ordering.is_global:
            return not _reduce_global(p.terms, elts, self._key, self.config, stop_early=True)
        return not _reduce_mora(p.terms, elts, self._key, self.config)

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.gens)

    # -- constructions ---------------------------------------------------

    def with_ordering(self, ordering: OrderingSpec) -> "Ideal":
        return Ideal(self.ctx, self.gens, ordering, self.config)

    def add(self, extra: Iterable[Polynomial]) -> "Ideal":
        return Ideal(self.ctx, list(self.gens) + list(extra), self.ordering, self.config)

    def elimination(self, names: Iterable[str]) -> "Ideal":
        """Intersect with the subring omitting `names` (block order; global only)."""
        if not self.ordering.is_global:
            raise GermInputError("elimination requires a global order")
        names = list(names)
        front = tuple(self.ctx.index(n) for n in names)
        spec = OrderingSpec.elimination(front, len(self.ctx))
        work = Ideal(self.ctx, self.gens, spec, self.config)
        front_set = set(front)
        keep_idx = [i for i in range(len(self.ctx)) if i not in front_set]
        new_ctx = self.ctx.drop(names)
        out: List[Polynomial] = []
        for p in work.basis():
            if all(all(e[i] == 0 for i in front) for e in p.terms):
                out.append(Polynomial._raw(
                    new_ctx,
                    {tuple(e[i] for i in keep_idx): c for e, c in p.terms.items()}))
        return Ideal(new_ctx, out, OrderingSpec.degrevlex(), self.config)

    def intersect(self, other: "Ideal") -> "Ideal":
        """I cap J via the auxiliary-variable construction t*I + (1-t)*J."""
        if other.ctx != self.ctx:
            raise GermInputError("intersection needs a common context")
        tname = self.ctx.fresh_name("_t")
        ext = self.ctx.extend([tname], "source")
        t = Polynomial.variable(ext, tname)
        one_minus_t = Polynomial.constant(ext, 1) - t
        gens = [t * g.rename(ext) for g in self.gens]
        gens += [one_minus_t * g.rename(ext) for g in other.gens]
        elim = Ideal(ext, gens, OrderingSpec.degrevlex(), self.config).elimination([tname])
        polys = [p.rename(self.ctx) for p in elim.basis()]
        return Ideal(self.ctx, polys, self.ordering, self.config)

    def quotient(self, f: Polynomial) -> "Ideal":
        """Colon ideal (I : f)."""
        if f.is_zero():
            raise GermInputError("colon ideal by zero")
        if f.total_degree() == 0:
            return Ideal(self.ctx, self.gens, self.ordering, self.config)
        principal = Ideal(self.ctx, [f], OrderingSpec.degrevlex(), self.config)
        meet = self.intersect(principal)
        key = key_function(OrderingSpec.degrevlex(), len(self.ctx))
        out = [Polynomial._raw(self.ctx, _exact_divide(p.terms, f.terms, key, self.config))
               for p in meet.gens]
        return Ideal(self.ctx, out, self.ordering, self.config)

    def saturation(self, f: Polynomial) -> "Ideal":
        """Stable colon ideal (I : f^infinity); iterates until the chain stops."""
        current = self
        for _ in range(64):
            nxt = current.quotient(f)
            if current.contains_ideal(nxt):
                return current
            current = nxt
        raise ResourceLimitError("saturation chain failed to stabilize")

    # -- dimensions ------------------------------------------------------

    def quotient_dimension(self, jet_start: Optional[int] = None):
        """Vector-space dimension of the quotient over the handle's ring.

        Global order: staircase of the reduced basis, INFINITE when some
        variable has no pure power in the leading ideal. Local order: the
        dimension of the quotient of germs at the origin, computed through
        truncated standard bases (see _local_quotient_dimension) rather than
        through a full Mora basis — the two agree, but truncation keeps large
        inputs affordable. `jet_start` seeds the first truncation order when
        the caller already knows roughly how tall the staircase is.
        """
        if self.ordering.is_global:
            return staircase_count(self.leading_monomials(), len(self.ctx))
        return _local_quotient_dimension([g.terms for g in self.gens],
                                         len(self.ctx), self.config, jet_start)

    def dimension(self):
        """Krull dimension of the quotient read off the leading ideal; EMPTY
        for the unit ideal."""
        return monomial_dimension(self.leading_monomials(), len(self.ctx))

    def dimension_bound(self, stop_at: int):
        """Upper bound for dimension(), with early exit at `stop_at`.

        Runs the basis loop watching the dimension cut out by the leads
        found so far. Partial leads generate a subideal of the true leading
        ideal, so that dimension only shrinks as elements accumulate and is
        an upper bound throughout. Once it reaches `stop_at` the loop aborts
        and the bound is returned; if the loop finishes first the result is
        exact (and the basis is kept). Requires a global order — local leads
        stabilize too, but nothing certifies when.
        """
        if not self.ordering.is_global:
            raise GermInputError("dimension bound requires a global order")
        if self._basis_cache is not None:
            return self.dimension()
        n = len(self.ctx)
        seen = {"bound": n}

        def hit(leads):
            d = monomial_dimension(leads, n)
            if d is EMPTY:
                seen["bound"] = EMPTY
                return True
            seen["bound"] = min(seen["bound"], d)
            return d <= stop_at

        raw = _basis([g.terms for g in self.gens], self._key, True,
                     self.config, lead_stop=hit)
        if raw is None:
            return seen["bound"]
        self._basis_cache = [Polynomial._raw(self.ctx, t) for t in raw]
        return self.dimension()
