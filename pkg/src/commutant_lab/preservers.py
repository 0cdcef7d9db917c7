"""Maps of the classified form ``A -> c U A U* + shift(A) I`` (with an
optional entrywise conjugation for the antiunitary case), and property
machinery that tests whether they preserve the triadic relations in both
directions over sampled triples.

Shift rules are arbitrary per-input real functions; the quasi-side
"theorem-compliant" rule returns zero on every matrix that admits a
noncommuting anticommuting partner.  The necessity search demonstrates that
dropping this constraint breaks the quasi relation.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .commutant import anticommutant, noncommuting_anticommuting_partner
from .hermitian import (
    RELATION_KINDS,
    Tolerance,
    _tol,
    frobenius,
    random_hermitian,
    random_projection,
    random_unitary,
    rel_c,
    rel_j,
    triadic_relation,
)
from .spectral import build_aef

__all__ = [
    "BOTH_FAIL",
    "BOTH_HOLD",
    "PreserverMap",
    "SearchExhausted",
    "ShiftPolicy",
    "TrialReport",
    "VIOLATION_BACKWARD",
    "VIOLATION_FORWARD",
    "Violation",
    "apply_map",
    "check_triadic",
    "compose",
    "default_necessity_anchor",
    "is_violation",
    "lemma4_check",
    "make_shift_policy",
    "necessity_search",
    "property_run",
]

BOTH_HOLD = "both_hold"
BOTH_FAIL = "both_fail"
VIOLATION_FORWARD = "violation_forward"
VIOLATION_BACKWARD = "violation_backward"

SHIFT_KINDS = ("zero", "constant", "trace_based", "theorem_compliant_quasi", "pinned")


class SearchExhausted(RuntimeError):
    """A search that must produce a finding ran out of budget."""


@dataclass(eq=False)
class ShiftPolicy:
    """Deterministic rule assigning a real scalar shift to each input matrix.

    Kinds: ``zero``; ``constant`` (always ``value``); ``trace_based``
    (trace divided by dimension); ``pinned`` (``value`` on one anchor
    matrix, byte-exact after symmetrization, zero elsewhere);
    ``theorem_compliant_quasi`` (zero whenever a noncommuting anticommuting
    partner exists, otherwise the inner policy).
    """

    kind: str
    value: float = 0.0
    anchor: np.ndarray | None = None
    inner: "ShiftPolicy | None" = None
    tol: Tolerance = field(default_factory=Tolerance)

    def __post_init__(self) -> None:
        if self.kind not in SHIFT_KINDS:
            raise ValueError(f"unknown shift kind {self.kind!r}")
        if self.kind == "pinned" and self.anchor is None:
            raise ValueError("pinned shift needs an anchor matrix")
        if self.kind == "theorem_compliant_quasi" and self.inner is None:
            self.inner = ShiftPolicy("zero")

    def __call__(self, a: np.ndarray) -> float:
        if self.kind == "zero":
            return 0.0
        if self.kind == "constant":
            return self.value
        if self.kind == "trace_based":
            return float(np.trace(a).real) / a.shape[0]
        if self.kind == "pinned":
            sym = (np.asarray(a, dtype=complex) + np.asarray(a, dtype=complex).conj().T) / 2.0
            anchor = (self.anchor + self.anchor.conj().T) / 2.0
            return self.value if np.array_equal(sym, anchor) else 0.0
        # theorem_compliant_quasi
        if noncommuting_anticommuting_partner(a, self.tol) is not None:
            return 0.0
        return self.inner(a)


def make_shift_policy(kind: str, value: float = 0.0, inner: ShiftPolicy | None = None,
                      anchor: np.ndarray | None = None, tol: Tolerance | None = None) -> ShiftPolicy:
    """Build a shift rule; see :class:`ShiftPolicy` for the kinds."""
    return ShiftPolicy(kind=kind, value=value, anchor=anchor, inner=inner, tol=_tol(tol))


@dataclass(eq=False)
class PreserverMap:
    """The classified map form: scale, unitary conjugation, optional
    entrywise conjugation first (the antiunitary case), and a scalar shift.
    """

    scale: float
    conjugator: np.ndarray
    antiunitary: bool = False
    shift: ShiftPolicy = field(default_factory=lambda: ShiftPolicy("zero"))
    relation_kind: str = "commutative"

    def __post_init__(self) -> None:
        if not (np.isfinite(self.scale) and self.scale != 0.0):
            raise ValueError("scale must be nonzero and finite")
        u = np.asarray(self.conjugator, dtype=complex)
        n = u.shape[0]
        if frobenius(u.conj().T @ u - np.eye(n)) > 1e-12:
            raise ValueError("conjugator is not unitary within 1e-12")
        if self.relation_kind not in RELATION_KINDS:
            raise ValueError(f"unknown relation kind {self.relation_kind!r}")
        self.conjugator = u

    @property
    def dim(self) -> int:
        return int(self.conjugator.shape[0])


def apply_map(m: PreserverMap, a: np.ndarray) -> np.ndarray:
    """Evaluate the map on one Hermitian matrix; the output is Hermitian."""
    a = np.asarray(a, dtype=complex)
    if a.shape != m.conjugator.shape:
        raise ValueError(f"dimension mismatch: map is {m.conjugator.shape}, input {a.shape}")
    x = a.conj() if m.antiunitary else a
    out = m.scale * (m.conjugator @ x @ m.conjugator.conj().T)
    out = (out + out.conj().T) / 2.0
    return out + m.shift(a) * np.eye(a.shape[0])


def compose(outer: PreserverMap, inner: PreserverMap) -> PreserverMap:
    """Map of the same form acting like ``outer`` after ``inner``."""
    if outer.relation_kind != inner.relation_kind:
        raise ValueError("composition requires matching relation kinds")
    if outer.dim != inner.dim:
        raise ValueError("dimension mismatch between the two maps")
    u_inner = inner.conjugator.conj() if outer.antiunitary else inner.conjugator
    u = outer.conjugator @ u_inner

    def shift(a: np.ndarray) -> float:
        return outer.scale * inner.shift(a) + outer.shift(apply_map(inner, a))

    composed = PreserverMap(
        scale=outer.scale * inner.scale,
        conjugator=u,
        antiunitary=outer.antiunitary != inner.antiunitary,
        relation_kind=outer.relation_kind,
    )
    composed.shift = shift  # raw callable; composition is not serialized
    return composed


def check_triadic(
    m: PreserverMap,
    a: np.ndarray,
    b: np.ndarray,
    c: np.ndarray,
    tol: Tolerance | None = None,
) -> str:
    """Compare the triadic relation on (A, B, C) against its image triple.

    Returns ``both_hold``/``both_fail`` when the map preserves the verdict,
    ``violation_forward`` when the relation holds only at the source and
    ``violation_backward`` when it holds only at the image.
    """
    source = triadic_relation(a, b, c, m.relation_kind, tol)
    image = triadic_relation(
        apply_map(m, a), apply_map(m, b), apply_map(m, c), m.relation_kind, tol
    )
    if source and not image:
        return VIOLATION_FORWARD
    if image and not source:
        return VIOLATION_BACKWARD
    return BOTH_HOLD if source else BOTH_FAIL


def is_violation(verdict: str) -> bool:
    return verdict in (VIOLATION_FORWARD, VIOLATION_BACKWARD)


@dataclass
class Violation:
    """One counterexample triple, with full matrices for replay."""

    a: np.ndarray
    b: np.ndarray
    c: np.ndarray
    direction: str
    trial: int


@dataclass
class TrialReport:
    """Outcome of one property suite run."""

    suite: str
    seed: int
    dims: tuple[int, ...]
    trials: int
    violations: list[Violation]
    elapsed: float

    @property
    def passed(self) -> bool:
        return not self.violations


def _structured_triple(rng: np.random.Generator, dim: int, kind: str, tol: Tolerance):
    """Triple biased so the source relation is often true or a near miss.

    Random triples essentially never satisfy the relation, so generators
    draw the third matrix from structures commuting or anticommuting with
    the difference of the first two.
    """
    mode = int(rng.integers(6))
    if mode == 0:  # scalar difference: relation true for every C
        b = random_hermitian(dim, rng)
        a = b + float(rng.standard_normal()) * np.eye(dim)
        c = random_hermitian(dim, rng)
        return a, b, c
    if mode == 1:  # C a spectral function of the difference: commutes
        a = random_hermitian(dim, rng)
        b = random_hermitian(dim, rng)
        w, v = np.linalg.eigh(a - b)
        c = (v * rng.standard_normal(dim)) @ v.conj().T
        return a, b, (c + c.conj().T) / 2.0
    if mode == 2:  # difference with a sign-symmetric pair, C the partner
        lam = float(rng.uniform(0.5, 2.0))
        values = np.concatenate([[lam, -lam], rng.standard_normal(dim - 2)])
        v = random_unitary(dim, rng)
        d = (v * values) @ v.conj().T
        d = (d + d.conj().T) / 2.0
        swap = np.zeros((dim, dim), dtype=complex)
        swap[0, 1] = swap[1, 0] = 1.0 / np.sqrt(2.0)
        c = v @ swap @ v.conj().T
        b = random_hermitian(dim, rng)
        return b + d, b, (c + c.conj().T) / 2.0
    if mode == 3:  # block fixtures on a weight grid: boundary cases
        weight = float(rng.choice([0.25, 0.5, 1.0, 2.0]))
        fa, fe, ff = build_aef(weight, dim)
        grid = [-2.0, -1.0, 0.5, 1.0, 2.0]
        alpha = float(rng.choice(grid))
        eps = alpha if rng.random() < 0.5 else float(rng.choice(grid))
        return alpha * fa, eps * fe, ff
    if mode == 4:  # affine projections
        rank_a = int(rng.integers(1, dim))
        rank_b = int(rng.integers(1, dim))
        a = float(rng.standard_normal()) * random_projection(dim, rank_a, rng) + float(
            rng.standard_normal()
        ) * np.eye(dim)
        b = float(rng.standard_normal()) * random_projection(dim, rank_b, rng) + float(
            rng.standard_normal()
        ) * np.eye(dim)
        c = random_projection(dim, int(rng.integers(1, dim)), rng)
        return a, b, c
    # mode 5: C from the anticommutant of a sign-symmetric difference
    lam = float(rng.uniform(0.5, 2.0))
    fill = rng.standard_normal(dim - 2) if dim > 2 else np.zeros(0)
    values = np.concatenate([[lam, -lam], fill])
    v = random_unitary(dim, rng)
    d = (v * values) @ v.conj().T
    d = (d + d.conj().T) / 2.0
    part = anticommutant(d, tol)
    c = part.random_element(rng) if part.real_dimension else random_hermitian(dim, rng)
    b = random_hermitian(dim, rng)
    return b + d, b, c


def _random_triple(rng: np.random.Generator, dim: int):
    return (
        random_hermitian(dim, rng),
        random_hermitian(dim, rng),
        random_hermitian(dim, rng),
    )


def property_run(
    maps: PreserverMap | dict[int, PreserverMap],
    trials: int,
    seed: int = 0,
    tol: Tolerance | None = None,
    generators: tuple[str, ...] = ("random", "structured"),
    suite: str = "property",
) -> TrialReport:
    """Aggregate triadic verdicts on ``trials`` sampled triples.

    ``maps`` is one map or a dict keyed by dimension; each trial derives its
    own generator from ``(seed, trial index)``, so runs replay exactly and
    trials may be evaluated in any order.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    tol = _tol(tol)
    if isinstance(maps, PreserverMap):
        maps = {maps.dim: maps}
    dims = tuple(sorted(maps))
    start = time.perf_counter()
    violations: list[Violation] = []
    for t in range(trials):
        rng = np.random.default_rng([seed & 0xFFFFFFFF, t])
        dim = dims[int(rng.integers(len(dims)))]
        m = maps[dim]
        if "structured" in generators and ("random" not in generators or rng.random() < 0.5):
            a, b, c = _structured_triple(rng, dim, m.relation_kind, tol)
        else:
            a, b, c = _random_triple(rng, dim)
        verdict = check_triadic(m, a, b, c, tol)
        if is_violation(verdict):
            violations.append(Violation(a=a, b=b, c=c, direction=verdict, trial=t))
    return TrialReport(
        suite=suite,
        seed=int(seed),
        dims=dims,
        trials=trials,
        violations=violations,
        elapsed=time.perf_counter() - start,
    )


def default_necessity_anchor(dim: int) -> np.ndarray:
    """diag(1, -1, 0, ...): the canonical matrix with an anticommuting,
    noncommuting partner."""
    if dim < 3:
        raise ValueError("dimension must be at least 3")
    values = np.zeros(dim)
    values[0], values[1] = 1.0, -1.0
    return np.diag(values).astype(complex)


def necessity_search(
    dim: int,
    budget: int = 100,
    seed: int = 0,
    tol: Tolerance | None = None,
    preserver: PreserverMap | None = None,
) -> TrialReport:
    """Exhibit a triple broken by a quasi-side map whose shift is nonzero on
    a matrix with a noncommuting anticommuting partner.

    The default map shifts ``diag(1, -1, 0, ...)`` by one and nothing else;
    candidate triples pair that anchor with a scalar and a third matrix
    drawn from the anchor's anticommutant but not its commutant.  Raises
    :class:`SearchExhausted` when no violation shows up within ``budget``
    trials, which is the expected outcome for a compliant (all-zero) shift.
    """
    tol = _tol(tol)
    a0 = default_necessity_anchor(dim)
    if preserver is None:
        preserver = PreserverMap(
            scale=1.0,
            conjugator=np.eye(dim, dtype=complex),
            antiunitary=False,
            shift=make_shift_policy("pinned", value=1.0, anchor=a0, tol=tol),
            relation_kind="quasi",
        )
    part = anticommutant(a0, tol)
    swap = np.zeros((dim, dim), dtype=complex)
    swap[0, 1] = swap[1, 0] = 1.0 / np.sqrt(2.0)

    def candidate(trial: int, rng: np.random.Generator) -> np.ndarray:
        if trial == 0:
            return swap
        for _ in range(16):
            c = part.random_element(rng)
            if not rel_c(a0, c, tol):
                return c
        return swap

    start = time.perf_counter()
    zero = np.zeros((dim, dim), dtype=complex)
    for t in range(budget):
        rng = np.random.default_rng([seed & 0xFFFFFFFF, t])
        c = candidate(t, rng)
        verdict = check_triadic(preserver, a0, zero, c, tol)
        if is_violation(verdict):
            return TrialReport(
                suite="necessity-f",
                seed=int(seed),
                dims=(dim,),
                trials=t + 1,
                violations=[Violation(a=a0, b=zero, c=c, direction=verdict, trial=t)],
                elapsed=time.perf_counter() - start,
            )
    raise SearchExhausted(
        f"no violating triple within {budget} trials; the shift appears compliant"
    )


def lemma4_check(
    lam: float,
    projection: np.ndarray,
    candidates: int = 1000,
    seed: int = 0,
    tol: Tolerance | None = None,
) -> bool:
    """Rigidity of the mutual shifted-anticommutation premises at ``A = lam P``.

    Confirms that B = A satisfies both ``(A - lam I) o B = 0`` and
    ``(B - lam I) o A = 0``, then checks that no sampled B farther than
    1e-6 from A satisfies both.  Perturbations of A, rescalings of A and
    fresh random matrices are all tried.
    """
    if lam == 0.0:
        raise ValueError("lam must be nonzero")
    tol = _tol(tol)
    a = lam * np.asarray(projection, dtype=complex)
    n = a.shape[0]
    eye = np.eye(n, dtype=complex)

    def premises(x: np.ndarray, y: np.ndarray) -> bool:
        return rel_j(x - lam * eye, y, tol) and rel_j(y - lam * eye, x, tol)

    if not premises(a, a):
        return False
    for t in range(candidates):
        rng = np.random.default_rng([seed & 0xFFFFFFFF, t])
        mode = t % 3
        if mode == 0:
            x = random_hermitian(n, rng)
            x = x / frobenius(x)
            eps = 10.0 ** rng.uniform(-4, 1)
            b = a + eps * x
        elif mode == 1:
            b = random_hermitian(n, rng) * max(1.0, frobenius(a))
        else:
            s = float(rng.uniform(-3.0, 3.0))
            b = s * a
        if frobenius(b - a) > 1e-6 and premises(a, b):
            return False
    return True
