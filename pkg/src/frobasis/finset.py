"""Finite-set semantics of basis-type structures.

Maps that preserve comultiplication and counit between two basis-type
structures are exactly the linear extensions of functions between their
copyable sets; maps preserving the full structure (multiplication and
unit as well) are exactly the norm-preserving relabelings, and are
automatically unitary. This module makes both statements executable:
encode a function as a linear map, decode a comonoid homomorphism back
to a function, and decide isomorphism by comparing norm profiles.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import ContractViolation, HomomorphismError, ShapeError
from .extraction import extract_copyables
from .frobenius import (
    FrobeniusStructure,
    StructureClass,
    classify,
    norm_profile,
)
from .linalg import DEFAULT_TOL, Tolerance, as_tensor

__all__ = [
    "SetFunction",
    "identity_function",
    "compose_functions",
    "HomCheckReport",
    "check_comonoid_hom",
    "function_to_hom",
    "hom_to_function",
    "FullHomReport",
    "check_full_hom_unitary",
    "NormProfileIso",
    "iso_by_norm_profile",
]


@dataclass(frozen=True)
class SetFunction:
    """A function {0..m-1} -> {0..n-1}, stored as its value list."""

    domain_size: int
    codomain_size: int
    mapping: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mapping", tuple(int(v) for v in self.mapping))
        if self.domain_size < 0 or self.codomain_size < 0:
            raise ShapeError("set sizes must be non-negative")
        if len(self.mapping) != self.domain_size:
            raise ShapeError(
                f"mapping has {len(self.mapping)} entries for domain size {self.domain_size}"
            )
        for v in self.mapping:
            if not 0 <= v < self.codomain_size:
                raise ShapeError(f"mapping value {v} outside codomain of size {self.codomain_size}")

    def __call__(self, i: int) -> int:
        return self.mapping[i]


def identity_function(n: int) -> SetFunction:
    return SetFunction(n, n, tuple(range(n)))


def compose_functions(outer: SetFunction, inner: SetFunction) -> SetFunction:
    """``outer after inner``."""
    if inner.codomain_size != outer.domain_size:
        raise ShapeError("functions are not composable")
    return SetFunction(
        inner.domain_size,
        outer.codomain_size,
        tuple(outer(inner(i)) for i in range(inner.domain_size)),
    )


@dataclass(frozen=True)
class HomCheckReport:
    comult_residual: float
    counit_residual: float
    is_comonoid_hom: bool


def check_comonoid_hom(
    g: np.ndarray,
    a: FrobeniusStructure,
    b: FrobeniusStructure,
    tol: Tolerance = DEFAULT_TOL,
) -> HomCheckReport:
    """Does ``g : A -> B`` intertwine the comultiplications and counits?

    Residuals are ``|delta_B g - (g (x) g) delta_A|`` and
    ``|eps_B g - eps_A|`` in operator norm.
    """
    g = as_tensor(g, (b.dim, a.dim))
    comult = linalg.operator_norm(
        b.delta @ g - np.kron(g, g) @ a.delta, tol
    )
    counit = linalg.vec_norm(b.eps @ g - a.eps)
    scale = max(1.0, linalg.frobenius_norm(g)) * max(a.scale(), b.scale())
    bound = tol.bound(scale)
    return HomCheckReport(
        comult_residual=comult,
        counit_residual=counit,
        is_comonoid_hom=comult <= bound and counit <= bound,
    )


def function_to_hom(
    fn: SetFunction,
    a: FrobeniusStructure,
    b: FrobeniusStructure,
    tol: Tolerance = DEFAULT_TOL,
    seed: int = 42,
) -> np.ndarray:
    """The linear map sending the i-th copyable of A to the fn(i)-th of B."""
    if fn.domain_size != a.dim or fn.codomain_size != b.dim:
        raise ShapeError(
            f"function {fn.domain_size}->{fn.codomain_size} does not fit "
            f"structures of dims {a.dim}->{b.dim}"
        )
    phi_a = extract_copyables(a, tol, seed).matrix
    phi_b = extract_copyables(b, tol, seed).matrix
    images = phi_b[:, list(fn.mapping)]
    # g . phi_a = images, solved against the copyable basis of A
    return np.linalg.solve(phi_a.T, images.T).T


def hom_to_function(
    g: np.ndarray,
    a: FrobeniusStructure,
    b: FrobeniusStructure,
    tol: Tolerance = DEFAULT_TOL,
    seed: int = 42,
) -> SetFunction:
    """Decode a comonoid homomorphism to the function it implements.

    Each copyable of A must land on exactly one copyable of B within
    ``100 * tol``; anything else refuses to decode.
    """
    g = as_tensor(g, (b.dim, a.dim))
    rep = check_comonoid_hom(g, a, b, tol)
    if not rep.is_comonoid_hom:
        raise HomomorphismError(
            "map is not a comonoid homomorphism "
            f"(residuals {rep.comult_residual:.3e}, {rep.counit_residual:.3e})"
        )
    phi_a = extract_copyables(a, tol, seed).copyables
    phi_b = extract_copyables(b, tol, seed).copyables
    mapping = []
    for i, phi in enumerate(phi_a):
        y = g @ phi
        bound = 100.0 * tol.bound(max(1.0, linalg.vec_norm(y)))
        dists = [linalg.vec_norm(y - q) for q in phi_b]
        order = np.argsort(dists)
        if dists[order[0]] > bound:
            raise HomomorphismError(
                f"image of copyable {i} matches no codomain copyable "
                f"(best distance {dists[order[0]]:.3e})"
            )
        if len(order) > 1 and dists[order[1]] <= bound:
            raise HomomorphismError(f"image of copyable {i} matches ambiguously")
        mapping.append(int(order[0]))
    return SetFunction(a.dim, b.dim, tuple(mapping))


@dataclass(frozen=True)
class FullHomReport:
    mult_residual: float
    unit_residual: float
    comult_residual: float
    counit_residual: float
    preserves_all: bool
    unitarity_residual: float | None

    def __bool__(self) -> bool:
        return self.preserves_all


def check_full_hom_unitary(
    g: np.ndarray,
    a: FrobeniusStructure,
    b: FrobeniusStructure,
    tol: Tolerance = DEFAULT_TOL,
) -> FullHomReport:
    """Does ``g`` preserve multiplication, unit, comultiplication and counit?

    When it does, unitarity is forced; that consequence is asserted, and
    its failure raises ``ContractViolation`` since the theory excludes it.
    """
    g = as_tensor(g, (b.dim, a.dim))
    gg = np.kron(g, g)
    mult = linalg.operator_norm(g @ a.m - b.m @ gg, tol)
    unit = linalg.vec_norm(g @ a.u - b.u)
    comult = linalg.operator_norm(b.delta @ g - gg @ a.delta, tol)
    counit = linalg.vec_norm(b.eps @ g - a.eps)
    scale = max(1.0, linalg.frobenius_norm(g)) * max(a.scale(), b.scale())
    bound = tol.bound(scale)
    preserves = all(r <= bound for r in (mult, unit, comult, counit))
    unitarity = None
    if preserves:
        unitarity = linalg.max_abs(g.conj().T @ g - np.eye(a.dim))
        if unitarity > tol.bound(float(np.max(np.abs(g))) ** 2 * a.dim):
            raise ContractViolation(
                f"map preserves the full structure but is not unitary "
                f"(defect {unitarity:.3e})"
            )
    return FullHomReport(
        mult_residual=mult,
        unit_residual=unit,
        comult_residual=comult,
        counit_residual=counit,
        preserves_all=preserves,
        unitarity_residual=unitarity,
    )


@dataclass(frozen=True)
class NormProfileIso:
    isomorphic: bool
    witness: np.ndarray | None
    profile_a: list[float]
    profile_b: list[float]


def iso_by_norm_profile(
    a: FrobeniusStructure,
    b: FrobeniusStructure,
    tol: Tolerance = DEFAULT_TOL,
    seed: int = 42,
) -> NormProfileIso:
    """Structure isomorphism decided by the sorted copyable norms.

    When the profiles agree, the witness maps equal-norm copyables onto
    each other (ties resolved by index order); such a map preserves the
    whole structure and is unitary.
    """
    for f, name in ((a, "a"), (b, "b")):
        cls = classify(f, tol)
        if cls not in (StructureClass.ORTHONORMAL, StructureClass.ORTHOGONAL):
            raise ShapeError(f"structure {name} is {cls.value}; need an adjoint-compatible basis type")
    profile_a = norm_profile(a, tol, seed)
    profile_b = norm_profile(b, tol, seed)
    if a.dim != b.dim or any(
        abs(x - y) > tol.bound(max(1.0, x)) for x, y in zip(profile_a, profile_b)
    ):
        return NormProfileIso(False, None, profile_a, profile_b)

    cop_a = extract_copyables(a, tol, seed).copyables
    cop_b = extract_copyables(b, tol, seed).copyables
    order_a = sorted(range(a.dim), key=lambda i: (linalg.vec_norm(cop_a[i]), i))
    order_b = sorted(range(b.dim), key=lambda i: (linalg.vec_norm(cop_b[i]), i))
    phi_a = np.column_stack([cop_a[i] for i in order_a])
    phi_b = np.column_stack([cop_b[i] for i in order_b])
    witness = np.linalg.solve(phi_a.T, phi_b.T).T
    full = check_full_hom_unitary(witness, a, b, tol)
    if not full.preserves_all:
        raise ContractViolation("norm-profile witness failed to preserve the structure")
    return NormProfileIso(True, witness, profile_a, profile_b)
