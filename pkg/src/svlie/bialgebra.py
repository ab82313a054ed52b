"""Cocommutators and Lie bialgebra structure on the algebra.

A candidate cocommutator is Delta = Delta_r + D, where Delta_r(x) = x . r is
the coboundary of a rank-2 tensor r and D comes from the six-parameter
derivation family

    D(L_n)       = (n a + g) M_0 (x) M_n  +  (n a' + g') M_n (x) M_0
    D(Y_p)       = b M_0 (x) Y_p          +  b' Y_p (x) M_0
    D(M_n)       = 2 b M_0 (x) M_n        +  2 b' M_n (x) M_0

with parameters (a, a', b, b', g, g').  The skew half of the family
(a = -a', b = -b', g = -g') produces Lie bialgebras that are not
coboundary; this is what `certify` distinguishes.

Axiom checks run over finite index windows.  Every structure constant is a
polynomial of degree at most one in each index, so an identity verified on
three or more consecutive indices per variable already certifies the
polynomial identity; the default window of 6 is comfortably past that.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    GENERATORS,
    KIND_RANK,
    BasisVector,
    Element,
    HalfInt,
    L,
    M,
    _as_frac,
    basis_window,
    bracket_basis,
)
from .linalg import _act_key, _key_degree, _solve, TensorWindowBasis
from .tensors import (
    NotSkewError,
    Tensor2,
    Tensor3,
    cyclic,
    diag_act2,
    diag_act3,
    is_skew,
    yang_baxter_c,
)

_ZERO = Fraction(0)
_M0 = M(0)


class WindowTooSmallError(ValueError):
    """A required image is missing from a derivation table."""


class ZeroDegreeError(ValueError):
    """The inner-witness formula needs a nonzero degree."""


class WitnessMismatchError(ValueError):
    """A table claimed to be inner failed the round-trip verification."""


def _as_element(x) -> Element:
    return Element.basis(x) if isinstance(x, BasisVector) else x


@dataclass(frozen=True)
class SpecialDerivation:
    """Parameters (alpha, alpha_dag, beta, beta_dag, gamma, gamma_dag)."""

    alpha: Fraction
    alpha_dag: Fraction
    beta: Fraction
    beta_dag: Fraction
    gamma: Fraction
    gamma_dag: Fraction

    def __post_init__(self):
        for name in ("alpha", "alpha_dag", "beta", "beta_dag", "gamma", "gamma_dag"):
            object.__setattr__(self, name, _as_frac(getattr(self, name)))

    @classmethod
    def zero(cls) -> "SpecialDerivation":
        return cls(0, 0, 0, 0, 0, 0)

    @classmethod
    def from_csv(cls, text: str) -> "SpecialDerivation":
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 6:
            raise ValueError("expected six comma-separated rationals")
        return cls(*(Fraction(p) for p in parts))

    @property
    def is_zero(self) -> bool:
        return not any((self.alpha, self.alpha_dag, self.beta,
                        self.beta_dag, self.gamma, self.gamma_dag))

    @property
    def is_skew_family(self) -> bool:
        """True iff every image is skew: alpha = -alpha_dag and likewise for
        beta and gamma."""
        return (self.alpha == -self.alpha_dag
                and self.beta == -self.beta_dag
                and self.gamma == -self.gamma_dag)

    def apply_basis(self, bv: BasisVector) -> Tensor2:
        n = bv.index.as_fraction
        if bv.kind == "L":
            left = n * self.alpha + self.gamma
            right = n * self.alpha_dag + self.gamma_dag
            partner = M(bv.index)
        elif bv.kind == "Y":
            left, right, partner = self.beta, self.beta_dag, bv
        else:
            left, right, partner = 2 * self.beta, 2 * self.beta_dag, bv
        return Tensor2([((_M0, partner), left), ((partner, _M0), right)])


def special_apply(d: SpecialDerivation, x) -> Tensor2:
    """Linear extension of the three defining rules of the family."""
    acc = Tensor2.zero()
    for bv, c in _as_element(x)._terms.items():
        acc = acc + d.apply_basis(bv) * c
    return acc


def delta_r(r: Tensor2, x) -> Tensor2:
    """The coboundary cocommutator of r: x . r."""
    return diag_act2(_as_element(x), r)


@dataclass(frozen=True)
class CocommutatorSpec:
    """A candidate cocommutator Delta_r + D given by (r, parameters)."""

    r: Tensor2
    d: SpecialDerivation

    def image_basis(self, bv: BasisVector) -> Tensor2:
        return diag_act2(Element.basis(bv), self.r) + self.d.apply_basis(bv)


def cocommutator_apply(spec: CocommutatorSpec, x) -> Tensor2:
    return delta_r(spec.r, x) + special_apply(spec.d, x)


def check_cybe(r: Tensor2) -> bool:
    """True iff c(r) = 0 (the classical Yang-Baxter equation)."""
    return yang_baxter_c(r).is_zero


def check_mybe(r: Tensor2) -> bool:
    """True iff x . c(r) = 0 for the whole algebra.

    A tensor killed by the diagonal action of every algebra element is a
    multiple of M_0 (x) M_0 (x) M_0, so the condition is decided by
    inspecting c(r) directly.
    """
    c = yang_baxter_c(r)
    rest = {key: v for key, v in c._terms.items() if key != (_M0, _M0, _M0)}
    return not rest


def strip_central_square(r: Tensor2) -> Tensor2:
    """Drop the M_0 (x) M_0 component (invisible to the diagonal action)."""
    c = r.coeff((_M0, _M0))
    if not c:
        return r
    return r - Tensor2([((_M0, _M0), c)])


def is_skew_mod_central_square(r: Tensor2) -> bool:
    return is_skew(strip_central_square(r))


def _one_tensor_delta(delta, t: Tensor2) -> Tensor3:
    """Apply 1 (x) Delta to a rank-2 tensor, Delta given on basis vectors."""
    acc: dict = {}
    for (a, b), c in t._terms.items():
        for (u, w), c2 in delta(b)._terms.items():
            key = (a, u, w)
            nv = acc.get(key, _ZERO) + c * c2
            if nv:
                acc[key] = nv
            else:
                acc.pop(key, None)
    return Tensor3._make(acc)


def cojacobi_defect(delta, x: BasisVector) -> Tensor3:
    """(1 + xi + xi^2)(1 (x) Delta)(Delta x); zero iff co-Jacobi holds at x."""
    w = _one_tensor_delta(delta, delta(x))
    cw = cyclic(w)
    return w + cw + cyclic(cw)


def coboundary_identity_check(r: Tensor2, x) -> bool:
    """Check (1 + xi + xi^2)(1 (x) Delta_r)(Delta_r x) = x . c(r) exactly.

    Both sides are computed independently.  Requires r skew.
    """
    if not is_skew(r):
        raise NotSkewError("coboundary identity requires a skew tensor")
    x = _as_element(x)
    lhs = Tensor3.zero()
    for bv, c in x._terms.items():
        lhs = lhs + cojacobi_defect(lambda b: diag_act2(Element.basis(b), r), bv) * c
    rhs = diag_act3(x, yang_baxter_c(r))
    return lhs == rhs


@dataclass(frozen=True)
class Counterexample:
    axiom: str
    inputs: tuple[BasisVector, ...]
    value: object

    def __str__(self) -> str:
        where = ", ".join(str(bv) for bv in self.inputs)
        return f"{self.axiom} fails at {where}: {self.value}"


@dataclass(frozen=True)
class AxiomReport:
    image_skew: bool
    co_jacobi: bool
    compatibility: bool
    counterexample: Counterexample | None

    @property
    def all_ok(self) -> bool:
        return self.image_skew and self.co_jacobi and self.compatibility


def window_scan_order(bound) -> list[BasisVector]:
    """Window basis ordered kind-major, then by |index|, positive index first.

    This is the order in which axiom counterexamples are reported.
    """
    return sorted(
        basis_window(bound),
        key=lambda bv: (KIND_RANK[bv.kind], abs(bv.index.twice),
                        0 if bv.index.twice >= 0 else 1),
    )


class DerivationTable:
    """A candidate derivation (or cocommutator) restricted to a window.

    `images` maps basis vectors to rank-2 tensors and must cover every basis
    vector with |index| <= window; entries beyond the window are kept and
    used by checks when available.
    """

    def __init__(self, window, images: dict[BasisVector, Tensor2]):
        self.window = HalfInt.of(window)
        missing = [bv for bv in basis_window(self.window) if bv not in images]
        if missing:
            raise WindowTooSmallError(f"no image for {missing[0]} inside window {self.window}")
        self.images = dict(images)

    @classmethod
    def from_callable(cls, fn, window) -> "DerivationTable":
        bound = HalfInt.of(window)
        return cls(bound, {bv: fn(bv) for bv in basis_window(bound)})

    @classmethod
    def from_entries(cls, images: dict[BasisVector, Tensor2]) -> "DerivationTable":
        """Infer the window as the largest bound fully covered by `images`."""
        t = 0
        while _covered(images, t + 1):
            t += 1
        if not _covered(images, 0):
            raise WindowTooSmallError("table must define images for L[0] and M[0]")
        return cls(HalfInt(t), images)

    def image(self, bv: BasisVector) -> Tensor2 | None:
        return self.images.get(bv)

    def items(self) -> list[tuple[BasisVector, Tensor2]]:
        return sorted(self.images.items(), key=lambda kv: kv[0].sort_key)


def _covered(images: dict, t: int) -> bool:
    if t % 2:
        need = [BasisVector("Y", HalfInt(s * t)) for s in (1, -1)]
    else:
        need = [BasisVector(k, HalfInt(s * t)) for k in ("L", "M") for s in ((1, -1) if t else (1,))]
    return all(bv in images for bv in need)


def inner_derivation_table(v: Tensor2, window) -> DerivationTable:
    """The inner derivation x -> x . v tabulated on a window."""
    return DerivationTable.from_callable(lambda bv: diag_act2(Element.basis(bv), v), window)


def special_derivation_table(d: SpecialDerivation, window) -> DerivationTable:
    return DerivationTable.from_callable(d.apply_basis, window)


def check_axioms(subject, window=6) -> AxiomReport:
    """Check image skewness, co-Jacobi and the compatibility identity
    Delta([x, y]) = x . Delta(y) - y . Delta(x) over a window.

    `subject` is a CocommutatorSpec (images computed on demand, all checks
    exact) or a DerivationTable (co-Jacobi and compatibility are checked only
    where every needed image is available).  The first failure in scan order
    is recorded as the counterexample.
    """
    bound = HalfInt.of(window)
    scan = window_scan_order(bound)
    if isinstance(subject, DerivationTable):
        for bv in scan:
            if subject.image(bv) is None:
                raise WindowTooSmallError(f"no image for {bv} inside window {bound}")
        delta = subject.image
    elif isinstance(subject, CocommutatorSpec):
        delta = subject.image_basis
    else:
        raise TypeError("expected a CocommutatorSpec or a DerivationTable")

    failures: list[Counterexample] = []

    image_skew = True
    for bv in scan:
        img = delta(bv)
        if not is_skew(img):
            image_skew = False
            failures.append(Counterexample("image_skew", (bv,), img))
            break

    co_jacobi = True
    for bv in scan:
        img = delta(bv)
        parts = {b: delta(b) for (_, b) in img._terms}
        if any(p is None for p in parts.values()):
            continue  # table window cannot express this check
        w = _one_tensor_delta(parts.__getitem__, img)
        cw = cyclic(w)
        defect = w + cw + cyclic(cw)
        if not defect.is_zero:
            co_jacobi = False
            failures.append(Counterexample("co_jacobi", (bv,), defect))
            break

    compatibility = True
    done = False
    for i, x in enumerate(scan):
        if done:
            break
        for y in scan[i + 1:]:
            hit = bracket_basis(x, y)
            if hit is None:
                lhs = Tensor2.zero()
            else:
                c, z = hit
                img = delta(z)
                if img is None:
                    continue
                lhs = img * c
            defect = lhs - diag_act2(Element.basis(x), delta(y)) \
                         + diag_act2(Element.basis(y), delta(x))
            if not defect.is_zero:
                compatibility = False
                failures.append(Counterexample("compatibility", (x, y), defect))
                done = True
                break

    return AxiomReport(image_skew, co_jacobi, compatibility,
                       failures[0] if failures else None)


def decompose_derivation(t: DerivationTable) -> dict[HalfInt, DerivationTable]:
    """Split a table into homogeneous components.

    The component of degree a maps a basis vector x of degree q to the
    (q + a)-graded part of t(x).  Components sum to t; only the finitely
    many nonzero components are returned.
    """
    shifts: set[HalfInt] = set()
    per_key: dict[BasisVector, dict[HalfInt, Tensor2]] = {}
    for bv, img in t.images.items():
        comp = {deg - bv.index: part for deg, part in img.graded_components().items()}
        per_key[bv] = comp
        shifts.update(comp)
    out = {}
    for a in sorted(shifts):
        images = {bv: per_key[bv].get(a, Tensor2.zero()) for bv in t.images}
        out[a] = DerivationTable(t.window, images)
    return out


def inner_witness_nonzero_degree(t_alpha: DerivationTable, a) -> Tensor2:
    """Recover v with t_alpha = (x -> x . v) from a homogeneous table of
    nonzero degree a, via v = (1/a) t_alpha(L_0).

    Verifies the recovery on the whole table and raises WitnessMismatchError
    if t_alpha was not inner.
    """
    a = HalfInt.of(a)
    if not a:
        raise ZeroDegreeError("degree-zero components have no canonical inner witness")
    v = t_alpha.image(L(0)) * Fraction(2, a.twice)
    for bv, img in t_alpha.items():
        if diag_act2(Element.basis(bv), v) != img:
            raise WitnessMismatchError(f"table is not inner: mismatch at {bv}")
    return v


def match_inner_on_generators(t: DerivationTable, bound, full_space: bool = False) -> Tensor2 | None:
    """Exact search for v with x . v = t(x) on the five generators.

    Candidate tensors have both factor indices bounded by `bound`.  The
    default mode solves one small system per candidate degree (the action of
    a homogeneous generator shifts degree by a fixed amount, so the joint
    system is block diagonal); `full_space=True` solves the single unblocked
    system as a cross-check.  A returned witness has no M_0 (x) M_0
    component, which the action annihilates anyway.  None means no witness
    exists on this window.
    """
    bound = HalfInt.of(bound)
    targets = {}
    for g in GENERATORS:
        img = t.image(g)
        if img is None:
            raise WindowTooSmallError(f"table does not cover the generator {g}")
        targets[g] = img

    window = TensorWindowBasis(2, bound)
    blocks: dict[HalfInt, list[tuple]] = {}
    for key in window.keys:
        blocks.setdefault(_key_degree(key), []).append(key)

    needed: set[HalfInt] = set()
    for g, img in targets.items():
        for deg in img.graded_components():
            needed.add(deg - g.index)
    if any(d not in blocks for d in needed):
        return None

    if full_space:
        groups = [window.keys] if window.keys else []
    else:
        groups = [blocks[d] for d in sorted(needed)]

    acc: dict = {}
    for block in groups:
        sol = _match_block(block, targets, restrict=not full_space)
        if sol is None:
            return None
        for key, c in sol.items():
            acc[key] = acc.get(key, _ZERO) + c
    v = Tensor2(list(acc.items()))
    for g, img in targets.items():
        if diag_act2(Element.basis(g), v) != img:
            return None
    return v


def _match_block(block: list[tuple], targets: dict, restrict: bool) -> dict | None:
    degrees = {_key_degree(key) for key in block}
    rows: dict = {}
    for j, key in enumerate(block):
        for gi, g in enumerate(GENERATORS):
            for out_key, c in _act_key(g, key):
                row = rows.setdefault((gi, out_key), {})
                row[j] = row.get(j, _ZERO) + c
    ncols = len(block)
    for gi, g in enumerate(GENERATORS):
        img = targets[g]
        for out_key, c in img._terms.items():
            deg = _key_degree(out_key) - g.index
            if restrict and deg not in degrees:
                continue  # handled by (or fatal to) another block
            row = rows.setdefault((gi, out_key), {})
            row[ncols] = row.get(ncols, _ZERO) + c
    x = _solve(rows.values(), ncols)
    if x is None:
        return None
    return {key: c for key, c in zip(block, x) if c}


TRIANGULAR_COBOUNDARY = "TriangularCoboundary"
BIALGEBRA_NOT_COBOUNDARY = "BialgebraNotCoboundary"
NOT_BIALGEBRA = "NotBialgebra"


@dataclass(frozen=True)
class CertifyResult:
    verdict: str
    reason: str | None
    report: AxiomReport

    @property
    def is_bialgebra(self) -> bool:
        return self.verdict != NOT_BIALGEBRA

    @property
    def is_triangular_coboundary(self) -> bool:
        return self.verdict == TRIANGULAR_COBOUNDARY


def certify(spec: CocommutatorSpec, window=6) -> CertifyResult:
    """Classify a candidate cocommutator.

    NotBialgebra when an axiom fails on the window, when r is not skew
    modulo M_0 (x) M_0, or when the parameter part has non-skew images.
    Otherwise TriangularCoboundary exactly when the parameter part vanishes
    and the skew representative of r satisfies the Yang-Baxter equation, and
    BialgebraNotCoboundary in the remaining cases.
    """
    report = check_axioms(spec, window)
    if not report.all_ok:
        return CertifyResult(NOT_BIALGEBRA, str(report.counterexample), report)
    r_skew = strip_central_square(spec.r)
    if not is_skew(r_skew):
        return CertifyResult(NOT_BIALGEBRA, "r is not skew modulo M[0] (x) M[0]", report)
    if not spec.d.is_skew_family:
        return CertifyResult(
            NOT_BIALGEBRA, "parameter part lies outside the skew half of the family", report)
    if spec.d.is_zero and check_cybe(r_skew):
        return CertifyResult(TRIANGULAR_COBOUNDARY, None, report)
    return CertifyResult(BIALGEBRA_NOT_COBOUNDARY, None, report)
