"""Commutative Frobenius structures on finite-dimensional complex spaces.

A structure is the quintuple ``(dim, m, u, delta, eps)``: multiplication
``m : H (x) H -> H`` stored as a ``d x d^2`` matrix (column index
``(i, j) -> i*d + j``), unit ``u`` as a length-d vector, comultiplication
``delta : H -> H (x) H`` as ``d^2 x d``, and counit ``eps`` as a length-d
row functional. ``dagger`` records the *claim* ``delta = m*``,
``eps = u*``; verification always goes through residuals, never the flag.

The two constructions from a basis:

* orthogonal / orthonormal kind: ``delta`` copies the basis vectors,
  ``eps`` deletes them uniformly, and ``m``, ``u`` are the adjoints with
  respect to the standard inner product.
* arbitrary kind: ``m`` multiplies coordinates in the given basis
  pointwise and ``u`` is the sum of the basis vectors; no adjoints are
  taken and the result is special but generally not adjoint-compatible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from . import linalg
from .errors import BasisError, ShapeError
from .linalg import DEFAULT_TOL, Tolerance, as_tensor

__all__ = [
    "BasisKind",
    "BasisSpec",
    "FrobeniusStructure",
    "AxiomReport",
    "StructureClass",
    "AXIOM_NAMES",
    "CORE_AXIOMS",
    "DAGGER_AXIOMS",
    "standard_structure",
    "trivial_structure",
    "from_basis",
    "check_axioms",
    "classify",
    "claimed_axioms",
    "right_action",
    "conjugate_element",
    "conjugate_morphism",
    "conjugate_structure",
    "norm_profile",
]

#: Scale-aware threshold guarding against numerically dependent bases.
INDEPENDENCE_DET_FACTOR = 1e-12


class BasisKind(str, Enum):
    ARBITRARY = "arbitrary"
    ORTHOGONAL = "orthogonal"
    ORTHONORMAL = "orthonormal"


class StructureClass(str, Enum):
    """The three basis-type classes, plus invalid."""

    ORTHONORMAL = "orthonormal-type"
    ORTHOGONAL = "orthogonal-type"
    ARBITRARY = "arbitrary-type"
    INVALID = "invalid"

    def describe(self) -> str:
        return {
            StructureClass.ORTHONORMAL: "commutative special dagger-Frobenius algebra (orthonormal basis)",
            StructureClass.ORTHOGONAL: "commutative dagger-Frobenius algebra (orthogonal basis)",
            StructureClass.ARBITRARY: "commutative special Frobenius algebra (arbitrary basis)",
            StructureClass.INVALID: "not a commutative Frobenius algebra of basis type",
        }[self]


KIND_FOR_CLASS = {
    StructureClass.ORTHONORMAL: BasisKind.ORTHONORMAL,
    StructureClass.ORTHOGONAL: BasisKind.ORTHOGONAL,
    StructureClass.ARBITRARY: BasisKind.ARBITRARY,
}


@dataclass(frozen=True)
class BasisSpec:
    """An ordered basis: ``vectors[i]`` is the i-th basis vector (row i)."""

    dim: int
    vectors: np.ndarray
    kind: BasisKind

    def __post_init__(self):
        vecs = as_tensor(self.vectors, (self.dim, self.dim))
        object.__setattr__(self, "vectors", vecs)
        object.__setattr__(self, "kind", BasisKind(self.kind))

    @property
    def matrix(self) -> np.ndarray:
        """Column matrix P with P[:, i] the i-th basis vector."""
        return self.vectors.T.copy()

    def gram(self) -> np.ndarray:
        p = self.matrix
        return p.conj().T @ p

    def validate(self, tol: Tolerance = DEFAULT_TOL) -> None:
        """Check linear independence and the declared kind's Gram shape."""
        p = self.matrix
        col_norms = np.linalg.norm(p, axis=0)
        if np.any(col_norms == 0.0):
            raise BasisError("zero basis vector")
        det = abs(np.linalg.det(p))
        if det < INDEPENDENCE_DET_FACTOR * float(np.max(col_norms)) ** self.dim:
            raise BasisError(f"basis vectors numerically dependent (|det| = {det:.3e})")
        g = self.gram()
        if self.kind is BasisKind.ORTHONORMAL:
            defect = linalg.max_abs(g - np.eye(self.dim))
            if defect > tol.bound(1.0):
                raise BasisError(f"kind=orthonormal but Gram deviates from I by {defect:.3e}")
        elif self.kind is BasisKind.ORTHOGONAL:
            for i in range(self.dim):
                for j in range(i):
                    lim = tol.bound(float(np.sqrt(g[i, i].real * g[j, j].real)))
                    if abs(g[i, j]) > lim:
                        raise BasisError(
                            f"kind=orthogonal but <v{i}, v{j}> = {g[i, j]:.3e} is not zero"
                        )


@dataclass(frozen=True)
class FrobeniusStructure:
    """A (claimed) commutative Frobenius algebra; see the module docstring."""

    dim: int
    m: np.ndarray
    u: np.ndarray
    delta: np.ndarray
    eps: np.ndarray
    dagger: bool = True

    def __post_init__(self):
        d = self.dim
        if d < 1:
            raise ShapeError("dim must be >= 1")
        object.__setattr__(self, "m", as_tensor(self.m, (d, d * d)))
        object.__setattr__(self, "u", as_tensor(self.u, (d,)))
        object.__setattr__(self, "delta", as_tensor(self.delta, (d * d, d)))
        object.__setattr__(self, "eps", as_tensor(self.eps, (d,)))

    @property
    def m3(self) -> np.ndarray:
        """Multiplication as ``m3[k, i, j]``: coefficient of e_k in m(e_i (x) e_j)."""
        return self.m.reshape(self.dim, self.dim, self.dim)

    @property
    def delta3(self) -> np.ndarray:
        """Comultiplication as ``delta3[i, j, k]``: e_i (x) e_j weight of delta(e_k)."""
        return self.delta.reshape(self.dim, self.dim, self.dim)

    def scale(self) -> float:
        """Characteristic magnitude used for tolerance bounds."""
        return max(
            1.0,
            linalg.frobenius_norm(self.m),
            linalg.frobenius_norm(self.delta),
            linalg.vec_norm(self.u),
            linalg.vec_norm(self.eps),
        )


AXIOM_NAMES = (
    "assoc",
    "unit_left",
    "unit_right",
    "coassoc",
    "counit_left",
    "counit_right",
    "frobenius_left",
    "frobenius_right",
    "commutative",
    "cocommutative",
    "special",
    "dagger_delta",
    "dagger_eps",
)

CORE_AXIOMS = AXIOM_NAMES[:10]
DAGGER_AXIOMS = ("dagger_delta", "dagger_eps")


@dataclass(frozen=True)
class AxiomReport:
    """Residuals (operator norms of defect maps) and threshold verdicts."""

    residuals: dict[str, float]
    bounds: dict[str, float]
    passed: dict[str, bool] = field(init=False)

    def __post_init__(self):
        object.__setattr__(
            self,
            "passed",
            {k: self.residuals[k] <= self.bounds[k] for k in self.residuals},
        )

    def all_pass(self, names) -> bool:
        return all(self.passed[n] for n in names)

    def failures(self, names=AXIOM_NAMES) -> list[str]:
        return [n for n in names if not self.passed[n]]


def standard_structure(d: int) -> FrobeniusStructure:
    """The coordinatewise algebra copying the standard basis of C^d."""
    m = np.zeros((d, d * d), dtype=np.complex128)
    for k in range(d):
        m[k, k * d + k] = 1.0
    return FrobeniusStructure(
        dim=d, m=m, u=np.ones(d), delta=m.conj().T, eps=np.ones(d), dagger=True
    )


def trivial_structure() -> FrobeniusStructure:
    """The canonical structure on C itself (scalars copy themselves)."""
    return standard_structure(1)


def from_basis(b: BasisSpec, tol: Tolerance = DEFAULT_TOL) -> FrobeniusStructure:
    """Build the Frobenius structure whose comultiplication copies ``b``.

    ``delta`` extends ``v_i -> v_i (x) v_i`` linearly and ``eps`` extends
    ``v_i -> 1``. For orthogonal/orthonormal kind the monoid half is the
    adjoint pair ``m = delta*``, ``u = eps*``; for arbitrary kind it is
    the coordinatewise product in the basis with ``u = sum_i v_i``.
    """
    b.validate(tol)
    d = b.dim
    p = b.matrix
    pinv = np.linalg.inv(p)
    copies = np.empty((d * d, d), dtype=np.complex128)
    for i in range(d):
        v = p[:, i]
        copies[:, i] = np.kron(v, v)
    delta = copies @ pinv
    eps = np.ones(d) @ pinv

    if b.kind in (BasisKind.ORTHOGONAL, BasisKind.ORTHONORMAL):
        m = delta.conj().T
        u = eps.conj()
        dagger = True
    else:
        m_std = standard_structure(d).m
        m = p @ m_std @ np.kron(pinv, pinv)
        u = p @ np.ones(d)
        dagger = False
    return FrobeniusStructure(dim=d, m=m, u=u, delta=delta, eps=eps, dagger=dagger)


def _opnorm(mat: np.ndarray, tol: Tolerance) -> float:
    return linalg.operator_norm(np.atleast_2d(mat), tol)


def check_axioms(f: FrobeniusStructure, tol: Tolerance = DEFAULT_TOL) -> AxiomReport:
    """Residuals of every monoid/comonoid/Frobenius/commutativity/special/
    adjoint-compatibility law, as operator norms of the defect maps.

    Composites are contracted index-wise (no Kronecker blow-up), so the
    check stays cheap up to the supported dimensions.
    """
    d = f.dim
    m3 = f.m3
    d3 = f.delta3
    eye = np.eye(d, dtype=np.complex128)

    res: dict[str, float] = {}

    assoc_l = np.einsum("kpc,pab->kabc", m3, m3)
    assoc_r = np.einsum("kap,pbc->kabc", m3, m3)
    res["assoc"] = _opnorm((assoc_l - assoc_r).reshape(d, d**3), tol)

    res["unit_left"] = _opnorm(np.einsum("kji,j->ki", m3, f.u) - eye, tol)
    res["unit_right"] = _opnorm(np.einsum("kij,j->ki", m3, f.u) - eye, tol)

    coassoc_l = np.einsum("abp,pck->abck", d3, d3)
    coassoc_r = np.einsum("bcp,apk->abck", d3, d3)
    res["coassoc"] = _opnorm((coassoc_l - coassoc_r).reshape(d**3, d), tol)

    res["counit_left"] = _opnorm(np.einsum("p,pak->ak", f.eps, d3) - eye, tol)
    res["counit_right"] = _opnorm(np.einsum("p,apk->ak", f.eps, d3) - eye, tol)

    frob_mid = np.einsum("kbp,pij->kbij", d3, m3)
    frob_l = np.einsum("kia,abj->kbij", m3, d3)
    frob_r = np.einsum("abi,kbj->akij", d3, m3)
    res["frobenius_left"] = _opnorm((frob_l - frob_mid).reshape(d * d, d * d), tol)
    res["frobenius_right"] = _opnorm((frob_r - frob_mid).reshape(d * d, d * d), tol)

    res["commutative"] = _opnorm((m3 - m3.transpose(0, 2, 1)).reshape(d, d * d), tol)
    res["cocommutative"] = _opnorm((d3 - d3.transpose(1, 0, 2)).reshape(d * d, d), tol)

    res["special"] = _opnorm(np.einsum("kij,ijl->kl", m3, d3) - eye, tol)

    res["dagger_delta"] = _opnorm(f.delta - f.m.conj().T, tol)
    res["dagger_eps"] = linalg.vec_norm(f.eps - f.u.conj())

    scale = f.scale()
    bound = tol.bound(scale * scale)
    bounds = {k: bound for k in res}
    return AxiomReport(residuals=res, bounds=bounds)


def classify(f: FrobeniusStructure, tol: Tolerance = DEFAULT_TOL) -> StructureClass:
    """Which basis type the structure encodes; total, never raises.

    Requires the core laws (monoid, comonoid, Frobenius, commutativity);
    then the special and adjoint-compatibility verdicts pick the row.
    """
    rep = check_axioms(f, tol)
    return classify_report(rep)


def classify_report(rep: AxiomReport) -> StructureClass:
    """Classification from an existing axiom report."""
    if not rep.all_pass(CORE_AXIOMS):
        return StructureClass.INVALID
    dag = rep.all_pass(DAGGER_AXIOMS)
    special = rep.passed["special"]
    if dag and special:
        return StructureClass.ORTHONORMAL
    if dag:
        return StructureClass.ORTHOGONAL
    if special:
        return StructureClass.ARBITRARY
    return StructureClass.INVALID


def claimed_axioms(f: FrobeniusStructure) -> tuple[str, ...]:
    """The laws a structure claims by construction: the core ones, plus the
    adjoint-compatibility pair when the dagger flag is set."""
    return CORE_AXIOMS + DAGGER_AXIOMS if f.dagger else CORE_AXIOMS


def right_action(f: FrobeniusStructure, alpha: np.ndarray) -> np.ndarray:
    """The matrix of ``x -> m(x (x) alpha)``."""
    alpha = as_tensor(alpha, (f.dim,))
    return np.einsum("kij,j->ki", f.m3, alpha)


def conjugate_element(f: FrobeniusStructure, alpha: np.ndarray) -> np.ndarray:
    """The element whose right action is the adjoint of ``alpha``'s.

    Computed as ``(id (x) alpha*) . m* . u``; meaningful for structures
    whose comultiplication is the adjoint of the multiplication.
    """
    alpha = as_tensor(alpha, (f.dim,))
    eta = (f.m.conj().T @ f.u).reshape(f.dim, f.dim)
    return eta @ alpha.conj()


def conjugate_morphism(
    g: np.ndarray, a: FrobeniusStructure, b: FrobeniusStructure
) -> np.ndarray:
    """Conjugate of ``g : A -> B`` relative to the two structures.

    Bends the map around the cups/caps ``eta = m* . u`` of each algebra:
    the composite ``(id (x) eta_A*) . (id (x) g* (x) id) . (eta_B (x) id)``,
    which contracts to ``eta_B . conj(g) . conj(eta_A)`` with ``eta``
    reshaped to a matrix.
    """
    g = as_tensor(g, (b.dim, a.dim))
    eta_a = (a.m.conj().T @ a.u).reshape(a.dim, a.dim)
    eta_b = (b.m.conj().T @ b.u).reshape(b.dim, b.dim)
    return eta_b @ g.conj() @ eta_a.conj()


def conjugate_structure(f: FrobeniusStructure, g: np.ndarray) -> FrobeniusStructure:
    """Transport the structure along an invertible change of carrier ``g``.

    ``m -> g m (g^-1 (x) g^-1)`` and dually; the dagger claim survives
    only for (numerically) unitary ``g``.
    """
    g = as_tensor(g, (f.dim, f.dim))
    ginv = np.linalg.inv(g)
    m = g @ f.m @ np.kron(ginv, ginv)
    u = g @ f.u
    delta = np.kron(g, g) @ f.delta @ ginv
    eps = f.eps @ ginv
    unitary = linalg.max_abs(g.conj().T @ g - np.eye(f.dim)) <= 1e-12 * f.dim
    return FrobeniusStructure(
        dim=f.dim, m=m, u=u, delta=delta, eps=eps, dagger=f.dagger and unitary
    )


def norm_profile(f: FrobeniusStructure, tol: Tolerance = DEFAULT_TOL, seed: int = 42) -> list[float]:
    """Sorted norms of the copyable elements.

    The complete invariant of adjoint-compatible basis-type structures:
    two of them are isomorphic as structures exactly when these lists
    agree. Only defined for orthonormal/orthogonal-type structures.
    """
    from .extraction import extract_copyables  # deferred: avoids an import cycle

    cls = classify(f, tol)
    if cls not in (StructureClass.ORTHONORMAL, StructureClass.ORTHOGONAL):
        raise ShapeError(f"norm profile requires an adjoint-compatible basis type, got {cls.value}")
    result = extract_copyables(f, tol, seed)
    return sorted(linalg.vec_norm(psi) for psi in result.copyables)
