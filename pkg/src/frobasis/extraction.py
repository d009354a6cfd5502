"""Recovering the copied basis from a Frobenius structure.

The copyable elements (vectors with ``delta psi = psi (x) psi`` and
``eps psi = 1``) of a valid basis-type structure form the basis the
structure was built from. They are found by diagonalizing a generic
element of the right-action algebra: a random self-adjoint combination
``R + R*`` on the adjoint-compatible path (Hermitian eigensolver), or a
plain random right action on the non-adjoint path (general eigensolver).
Eigenvectors of a simple spectrum are the copyables up to scale, and the
comultiplication itself fixes the scale.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import ConvergenceError, ExtractionError, MatchingError
from .frobenius import (
    DAGGER_AXIOMS,
    CORE_AXIOMS,
    BasisSpec,
    FrobeniusStructure,
    KIND_FOR_CLASS,
    StructureClass,
    check_axioms,
    classify_report,
    from_basis,
    right_action,
)
from .linalg import CLUSTER_GAP_FACTOR, DEFAULT_TOL, Tolerance
from .rng import SplitMix64

__all__ = [
    "ExtractionResult",
    "OrthogonalityCheck",
    "BasisRoundtrip",
    "NonCopyableWitness",
    "extract_copyables",
    "check_orthogonality",
    "roundtrip_basis",
    "roundtrip_algebra",
    "non_copyable_witness",
]

MAX_RETRIES = 16

#: Matching rejection threshold, as a multiple of the tolerance bound.
#: Roundtrip distances are either near zero or order one, so anything in
#: between signals a genuine failure rather than roundoff.
REJECT_FACTOR = 1e4


@dataclass(frozen=True)
class ExtractionResult:
    """Copyable elements plus their defect norms and the retry trace."""

    copyables: tuple[np.ndarray, ...]
    copy_residuals: tuple[float, ...]
    counit_residuals: tuple[float, ...]
    attempts: int
    seed: int

    @property
    def matrix(self) -> np.ndarray:
        """Columns are the copyable elements, in extraction order."""
        return np.column_stack(self.copyables)


def _rescale_to_copyable(f: FrobeniusStructure, v: np.ndarray, tol: Tolerance):
    """Scale a unit eigenvector so the comultiplication copies it exactly.

    ``delta v`` must be proportional to ``v (x) v``; the factor is the
    sought scale. Returns ``None`` when the proportionality fails, which
    means the eigenvector does not point at a copyable direction.
    """
    dv = f.delta @ v
    vv = np.kron(v, v)
    lam = complex(np.vdot(vv, dv))  # v is unit, so |v (x) v| = 1
    rank1_res = linalg.vec_norm(dv - lam * vv)
    if abs(lam) <= tol.bound(1.0) or rank1_res > 10.0 * tol.bound(f.scale()):
        return None
    psi = lam * v
    copy_res = linalg.vec_norm(f.delta @ psi - np.kron(psi, psi))
    counit_res = abs(complex(f.eps @ psi) - 1.0)
    lam_scale = max(1.0, abs(lam) ** 2)
    if copy_res > 10.0 * tol.bound(lam_scale) or counit_res > 10.0 * tol.bound(1.0):
        return None
    return psi, copy_res, counit_res


def _simple_spectrum(values: np.ndarray, tol: Tolerance) -> bool:
    radius = float(np.max(np.abs(values)))
    if radius <= tol.bound(0.0):
        return False
    gap = CLUSTER_GAP_FACTOR * radius
    v = np.sort_complex(values) if np.iscomplexobj(values) else np.sort(values)
    return all(abs(v[i + 1] - v[i]) >= gap for i in range(len(v) - 1))


def extract_copyables(
    f: FrobeniusStructure,
    tol: Tolerance = DEFAULT_TOL,
    seed: int = 42,
    max_retries: int = MAX_RETRIES,
    check: bool = True,
) -> ExtractionResult:
    """Extract all ``dim`` copyable elements of a basis-type structure.

    Parameters
    ----------
    f : FrobeniusStructure
        Must satisfy the core axioms (checked unless ``check=False``).
    tol : Tolerance
        Residual budget; every returned vector obeys
        ``|delta psi - psi (x) psi| <= 10 * tol`` and ``|eps psi - 1| <= 10 * tol``.
    seed : int
        Seed for the generic-element draws; the result is deterministic
        in (structure, tol, seed).
    max_retries : int
        Redraw budget for degenerate spectra.
    check : bool
        Verify the core-axiom precondition before extracting.

    Raises
    ------
    ExtractionError
        On precondition failure, exhausted retries (degenerate spectra),
        or when eigenvectors refuse to rescale to copyables (the
        structure is not of basis type).
    """
    d = f.dim
    rep = check_axioms(f, tol)
    if check and not rep.all_pass(CORE_AXIOMS):
        raise ExtractionError(
            "structure fails core axioms: " + ", ".join(rep.failures(CORE_AXIOMS))
        )
    dagger_path = rep.all_pass(DAGGER_AXIOMS)

    if d == 1:
        scale = complex(f.eps @ f.u)
        if abs(scale) <= tol.bound(1.0):
            raise ExtractionError("counit annihilates the unit; no copyable exists")
        psi = f.u / scale
        got = _rescale_to_copyable(f, psi / linalg.vec_norm(psi), tol)
        if got is None:
            raise ExtractionError("one-dimensional structure is not of basis type")
        psi, cres, eres = got
        return ExtractionResult((psi,), (cres,), (eres,), attempts=0, seed=seed)

    rng = SplitMix64(seed)
    failure = "degenerate spectrum on every draw"
    for attempt in range(max_retries + 1):
        if dagger_path:
            alpha = rng.complex_vector(d)
            r = right_action(f, alpha)
            x = r + r.conj().T
            try:
                values, vectors = linalg.eig_hermitian(x, tol)
            except ConvergenceError as exc:  # pragma: no cover - defensive
                failure = str(exc)
                continue
            if not _simple_spectrum(values, tol):
                continue
            columns = [vectors[:, i] for i in range(d)]
        else:
            alpha = rng.real_vector(d).astype(np.complex128)
            x = right_action(f, alpha)
            pairs = linalg.eig_general(x, tol)
            if any(p.cluster_size > 1 or p.vector is None for p in pairs):
                continue
            if not _simple_spectrum(np.array([p.value for p in pairs]), tol):
                continue
            columns = [p.vector for p in pairs]

        copyables, copy_res, counit_res = [], [], []
        ok = True
        for v in columns:
            got = _rescale_to_copyable(f, v, tol)
            if got is None:
                ok = False
                failure = "eigenvector does not rescale to a copyable (not basis type)"
                break
            psi, cres, eres = got
            copyables.append(psi)
            copy_res.append(cres)
            counit_res.append(eres)
        if not ok:
            continue
        for i in range(d):
            for j in range(i):
                if linalg.vec_norm(copyables[i] - copyables[j]) <= tol.bound(1.0):
                    ok = False
                    failure = "duplicate copyables recovered"
                    break
            if not ok:
                break
        if ok:
            return ExtractionResult(
                tuple(copyables),
                tuple(copy_res),
                tuple(counit_res),
                attempts=attempt,
                seed=seed,
            )
    raise ExtractionError(f"extraction failed after {max_retries + 1} draws: {failure}")


@dataclass(frozen=True)
class OrthogonalityCheck:
    orthogonal: bool
    gram: np.ndarray


def check_orthogonality(r: ExtractionResult, tol: Tolerance = DEFAULT_TOL) -> OrthogonalityCheck:
    """Gram matrix of the copyables; orthogonal when each off-diagonal
    entry vanishes against the geometric mean of its diagonal partners."""
    mat = r.matrix
    gram = mat.conj().T @ mat
    d = gram.shape[0]
    ok = True
    for i in range(d):
        for j in range(i):
            lim = tol.bound(float(np.sqrt(gram[i, i].real * gram[j, j].real)))
            if abs(gram[i, j]) > lim:
                ok = False
    return OrthogonalityCheck(orthogonal=ok, gram=gram)


def _greedy_match(targets: list[np.ndarray], found: list[np.ndarray]):
    """Globally-greedy nearest-neighbor matching; returns (perm, distances)
    with ``found[perm[i]]`` assigned to ``targets[i]``."""
    n = len(targets)
    dist = np.array([[linalg.vec_norm(t - c) for c in found] for t in targets])
    perm = [-1] * n
    used_rows, used_cols = set(), set()
    for _ in range(n):
        best = None
        for i in range(n):
            if i in used_rows:
                continue
            for j in range(n):
                if j in used_cols:
                    continue
                if best is None or dist[i, j] < best[0]:
                    best = (dist[i, j], i, j)
        _, i, j = best
        perm[i] = j
        used_rows.add(i)
        used_cols.add(j)
    distances = [float(dist[i, perm[i]]) for i in range(n)]
    return perm, distances


@dataclass(frozen=True)
class BasisRoundtrip:
    permutation: tuple[int, ...]
    max_distance: float


def roundtrip_basis(
    b: BasisSpec, tol: Tolerance = DEFAULT_TOL, seed: int = 42
) -> BasisRoundtrip:
    """Build the structure from ``b``, extract its copyables, and match
    them back to the basis vectors. The matching is greedy (distances are
    either near zero or order one when extraction worked)."""
    f = from_basis(b, tol)
    result = extract_copyables(f, tol, seed)
    targets = [b.vectors[i] for i in range(b.dim)]
    perm, distances = _greedy_match(targets, list(result.copyables))
    max_distance = max(distances)
    scale = max(1.0, max(linalg.vec_norm(t) for t in targets))
    if max_distance > REJECT_FACTOR * tol.bound(scale):
        raise MatchingError(
            f"no valid matching: max vector distance {max_distance:.3e}"
        )
    return BasisRoundtrip(permutation=tuple(perm), max_distance=max_distance)


def roundtrip_algebra(
    f: FrobeniusStructure, tol: Tolerance = DEFAULT_TOL, seed: int = 42
) -> float:
    """Extract the copyables, rebuild the structure from them, and return
    the largest operator-norm difference over (m, u, delta, eps)."""
    rep = check_axioms(f, tol)
    cls = classify_report(rep)
    if cls is StructureClass.INVALID:
        raise ExtractionError("structure is not of basis type; cannot round-trip")
    result = extract_copyables(f, tol, seed)
    basis = BasisSpec(
        dim=f.dim, vectors=np.array(result.copyables), kind=KIND_FOR_CLASS[cls]
    )
    rebuilt = from_basis(basis, tol)
    residuals = (
        linalg.operator_norm(rebuilt.m - f.m, tol),
        linalg.vec_norm(rebuilt.u - f.u),
        linalg.operator_norm(rebuilt.delta - f.delta, tol),
        linalg.vec_norm(rebuilt.eps - f.eps),
    )
    return float(max(residuals))


@dataclass(frozen=True)
class NonCopyableWitness:
    vector: np.ndarray
    residual: float
    schmidt: int


def non_copyable_witness(
    f: FrobeniusStructure, tol: Tolerance = DEFAULT_TOL, seed: int = 42
) -> NonCopyableWitness:
    """A two-term superposition of copyables with its copying defect.

    The sum of two distinct copyables is never copyable: its image under
    the comultiplication is entangled (Schmidt rank two) and far from the
    tensor square of the vector.
    """
    if f.dim < 2:
        raise ExtractionError("a non-copyable witness needs dim >= 2")
    result = extract_copyables(f, tol, seed)
    rng = SplitMix64(seed ^ 0x5DEECE66D)
    a = rng.integer(f.dim)
    b = rng.integer(f.dim - 1)
    if b >= a:
        b += 1
    psi = result.copyables[a] + result.copyables[b]
    residual = linalg.vec_norm(f.delta @ psi - np.kron(psi, psi))
    schmidt = linalg.schmidt_rank(f.delta @ psi, f.dim, tol)
    if residual <= 100.0 * tol.bound(1.0):
        raise ExtractionError(
            "superposition of two copyables is itself copyable; structure degenerate"
        )
    return NonCopyableWitness(vector=psi, residual=residual, schmidt=schmidt)
