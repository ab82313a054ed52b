"""Taxonomy of highest graded components of Yang-Baxter solutions, and a
brute-force search oracle over bounded windows.

A nonzero skew solution r of the classical Yang-Baxter equation decomposes
into graded pieces r = sum_q r_q; its top piece r_p is severely constrained.
For integer p the admissible tops live in the spans

    V1: L_0^L_p,  M_0^L_p          V2: L_0^L_p,  L_0^M_p
    V3: M_0^L_p,  M_0^M_p          V4: L_0^M_p,  M_0^M_p
    V5: M_j^M_{p-j}  for all integers j

and for half-odd p in

    V6: L_0^Y_p,  M_0^Y_p
    V7: L_{2p/3}^Y_{p/3},  M_{2p/3}^Y_{p/3}   (only when 2p/3 is an integer)
    V8(i): M_i^Y_{p-i}                         (one class per integer i)

where u^w abbreviates u (x) w - w (x) u.  A top component lying in none of
the spans cannot head a solution, which `classify_highest` reports as
NotCandidate.  When spans overlap, the minimal ones are reported (a label
whose span strictly contains another matching label's span is dropped), so
a pure M (x) Y top is V8 rather than V7 even when both apply.

`search_cybe` enumerates skew candidates built from elementary wedges with
bounded indices and bounded term count, filters them through the exact
Yang-Baxter bracket, and returns a deduplicated, canonically sorted list
that is independent of the worker count.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .algebra import BasisVector, HalfInt, L, M, Y, basis_window
from .linalg import RationalMatrix
from .tensors import NotSkewError, Tensor2, canonical_key, is_skew, wedge, yang_baxter_c

_ZERO = Fraction(0)

NOT_CANDIDATE = "NotCandidate"
_FAMILIES = ("V1", "V2", "V3", "V4", "V5", "V6", "V7", "V8", NOT_CANDIDATE)


class ZeroInputError(ValueError):
    """The zero tensor has no highest component."""


class NotHomogeneousError(ValueError):
    """A homogeneous tensor of the stated degree was required."""


@dataclass(frozen=True)
class ClassLabel:
    """One admissible shape of a top component, e.g. V1 or V8(1)."""

    family: str
    top_degree: HalfInt
    i: int | None = None

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise ValueError(f"unknown class family {self.family!r}")
        p = self.top_degree
        if self.family in ("V1", "V2", "V3", "V4", "V5") and not p.is_integer:
            raise ValueError(f"{self.family} requires an integer top degree, got {p}")
        if self.family in ("V6", "V7", "V8") and p.is_integer:
            raise ValueError(f"{self.family} requires a half-odd top degree, got {p}")
        if self.family == "V7" and p.twice % 3:
            raise ValueError(f"V7 requires 2p/3 integral, got p = {p}")
        if self.family == "V8" and self.i is None:
            raise ValueError("V8 carries an integer branch index")

    def __str__(self) -> str:
        if self.family == "V8":
            return f"V8({self.i})"
        return self.family


def highest_component(r: Tensor2) -> tuple[HalfInt, Tensor2]:
    """The maximal degree p with a nonzero graded part, and that part."""
    if r.is_zero:
        raise ZeroInputError("the zero tensor has no highest component")
    comps = r.graded_components()
    p = max(comps)
    return p, comps[p]


def _span_rows(vectors: list[Tensor2]):
    support = sorted({key for v in vectors for key in v._terms},
                     key=Tensor2._sort_key)
    pos = {key: i for i, key in enumerate(support)}
    cols = []
    for v in vectors:
        col = [_ZERO] * len(support)
        for key, c in v._terms.items():
            col[pos[key]] = c
        cols.append(col)
    return support, pos, cols


def _in_span(t: Tensor2, vectors: list[Tensor2]) -> bool:
    vectors = [v for v in vectors if not v.is_zero]
    if t.is_zero:
        return True
    if not vectors:
        return False
    support, pos, cols = _span_rows(vectors)
    rhs = [_ZERO] * len(support)
    for key, c in t._terms.items():
        if key not in pos:
            return False
        rhs[pos[key]] = c
    return RationalMatrix.from_columns(cols, len(support)).solve(rhs) is not None


def _span_contained(inner: list[Tensor2], outer: list[Tensor2]) -> bool:
    return all(_in_span(v, outer) for v in inner)


def _labeled_spans(p: HalfInt, r_p: Tensor2) -> list[tuple[ClassLabel, list[Tensor2]]]:
    out = []
    if p.is_integer:
        ll = wedge(L(p), L(0))
        ml = wedge(M(0), L(p))
        lm = wedge(L(0), M(p))
        mm = wedge(M(0), M(p))
        out.append((ClassLabel("V1", p), [ll, ml]))
        out.append((ClassLabel("V2", p), [ll, lm]))
        out.append((ClassLabel("V3", p), [ml, mm]))
        out.append((ClassLabel("V4", p), [lm, mm]))
        js = sorted({key[0].index for key in r_p._terms
                     if key[0].kind == "M" and key[1].kind == "M"})
        v5 = [wedge(M(j), M(p - j)) for j in js]
        out.append((ClassLabel("V5", p), v5))
    else:
        out.append((ClassLabel("V6", p), [wedge(L(0), Y(p)), wedge(M(0), Y(p))]))
        if p.twice % 3 == 0:
            i7 = HalfInt(p.twice // 3 * 2)
            third = HalfInt(p.twice // 3)
            out.append((ClassLabel("V7", p), [wedge(L(i7), Y(third)), wedge(M(i7), Y(third))]))
        i_vals = sorted({key[0].index for key in r_p._terms
                         if key[0].kind == "M" and key[1].kind == "Y"})
        for i in i_vals:
            out.append((ClassLabel("V8", p, i.twice // 2), [wedge(M(i), Y(p - i))]))
    return out


def classify_highest(r_p: Tensor2, p) -> set[ClassLabel]:
    """All minimal listed spans containing a homogeneous skew top component.

    Returns {NotCandidate} when r_p lies in none of them, meaning r_p cannot
    be the top component of any Yang-Baxter solution.
    """
    p = HalfInt.of(p)
    if r_p.is_zero or r_p.homogeneous_degree() != p:
        raise NotHomogeneousError(f"expected a nonzero homogeneous tensor of degree {p}")
    if not is_skew(r_p):
        raise NotSkewError("top components of skew tensors are skew")

    matched = [(label, span) for label, span in _labeled_spans(p, r_p)
               if _in_span(r_p, span)]
    keep = []
    for la, sa in matched:
        redundant = any(
            lb != la and _span_contained(sb, sa) and not _span_contained(sa, sb)
            for lb, sb in matched
        )
        if not redundant:
            keep.append(la)
    if not keep:
        return {ClassLabel(NOT_CANDIDATE, p)}
    return set(keep)


@dataclass(frozen=True)
class SearchConfig:
    """Window bound, coefficient set, wedge-term budget and worker count."""

    bound: HalfInt
    coeffs: tuple[Fraction, ...]
    max_terms: int
    jobs: int = 1

    def __post_init__(self):
        object.__setattr__(self, "bound", HalfInt.of(self.bound))
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        if self.max_terms < 1:
            raise ValueError("max_terms must be at least 1")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")


def enumerate_skew_candidates(cfg: SearchConfig) -> list[Tensor2]:
    """All nonzero combinations of at most `max_terms` elementary wedges with
    window-bounded factors and coefficients from the configured set,
    deduplicated up to a nonzero scalar and canonically sorted.

    The representative of each scalar class has leading coefficient 1 on its
    lexicographically least term.
    """
    vs = basis_window(cfg.bound)
    pairs = [(u, w) for i, u in enumerate(vs) for w in vs[i + 1:]]
    coeffs = sorted({c for c in cfg.coeffs if c})
    if not coeffs:
        return []
    seen: dict[tuple, Tensor2] = {}
    for k in range(1, cfg.max_terms + 1):
        for combo in itertools.combinations(pairs, k):
            for cs in itertools.product(coeffs, repeat=k):
                acc: dict = {}
                for (u, w), c in zip(combo, cs):
                    acc[(u, w)] = c
                    acc[(w, u)] = -c
                t = Tensor2._make(acc)
                lead = t.terms()[0][1]
                rep = t * (1 / lead)
                seen.setdefault(canonical_key(rep), rep)
    return [seen[k] for k in sorted(seen)]


def _cybe_flags(chunk: list[Tensor2]) -> list[bool]:
    return [yang_baxter_c(r).is_zero for r in chunk]


def search_cybe(cfg: SearchConfig) -> list[Tensor2]:
    """All enumerated skew candidates satisfying the Yang-Baxter equation.

    The result is deterministic regardless of `jobs`: the candidate list is
    fixed and workers only evaluate the exact membership test.
    """
    cands = enumerate_skew_candidates(cfg)
    if cfg.jobs > 1 and len(cands) > 1:
        size = -(-len(cands) // cfg.jobs)
        chunks = [cands[i:i + size] for i in range(0, len(cands), size)]
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            parts = list(pool.map(_cybe_flags, chunks))
        flags = [f for part in parts for f in part]
    else:
        flags = _cybe_flags(cands)
    return [r for r, ok in zip(cands, flags) if ok]
