"""Dense Hermitian operator core.

Validated state and operator types, spectral decompositions, Schatten and
Ky Fan norms, composite-system operations (tensor, partial trace,
purification), pinching and generalized measurements, seeded random
sampling, and a small JSON matrix file format.

Composite indices are row-major throughout: a bipartite basis label
(i_A, i_B) maps to i_A * d_B + i_B, matching ``numpy.kron``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import (
    DimMismatch,
    DomainError,
    EntropyKitError,
    IncompleteMeasurement,
    InvalidIndex,
    NonHermitian,
    NotPositive,
)
from .tolerances import TOL


def _as_square_matrix(entries) -> np.ndarray:
    mat = np.array(entries, dtype=np.complex128)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1] or mat.shape[0] == 0:
        raise DomainError(f"expected a nonempty square matrix, got shape {mat.shape}")
    return mat


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


def _rng(seed) -> np.random.Generator:
    """Accept an int seed, a seed sequence, or an existing Generator."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


@dataclass(frozen=True, eq=False)
class HermitianOperator:
    """A square complex matrix equal to its conjugate transpose.

    The Hermiticity defect is measured relative to the largest absolute
    entry and must not exceed ``TOL.herm``.
    """

    entries: np.ndarray

    def __post_init__(self):
        mat = _as_square_matrix(self.entries)
        scale = np.abs(mat).max()
        if np.abs(mat - mat.conj().T).max() > TOL.herm * scale:
            raise NonHermitian(
                f"matrix deviates from Hermiticity by more than {TOL.herm:g} relative"
            )
        object.__setattr__(self, "entries", _frozen(mat))

    @property
    def dim(self) -> int:
        return self.entries.shape[0]


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigenvalues in descending order with matching eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def __post_init__(self):
        vals = np.array(self.eigenvalues, dtype=np.float64)
        vecs = np.array(self.eigenvectors, dtype=np.complex128)
        if vals.ndim != 1 or vecs.shape != (vals.size, vals.size):
            raise DomainError("spectrum shapes are inconsistent")
        if np.any(np.diff(vals) > 0):
            raise DomainError("eigenvalues must be sorted in descending order")
        object.__setattr__(self, "eigenvalues", _frozen(vals))
        object.__setattr__(self, "eigenvectors", _frozen(vecs))


@dataclass(frozen=True, eq=False)
class DensityOperator:
    """Unit-trace positive semidefinite operator.

    Eigenvalues in [-TOL.psd, 0) are clipped to 0 (anything lower raises
    NotPositive) and values at or below TOL.rank are snapped to exact 0,
    so fractional powers cannot amplify the O(1e-16) spectral noise of
    rank-deficient states.  The cleaned spectrum is capped at 1, cached
    in descending order with its eigenvectors, and never renormalized.
    """

    op: HermitianOperator

    def __post_init__(self):
        op = self.op
        if not isinstance(op, HermitianOperator):
            op = HermitianOperator(op)
            object.__setattr__(self, "op", op)
        tr = float(op.entries.trace().real)
        if abs(tr - 1.0) > TOL.trace:
            raise DomainError(f"trace is {tr!r}, expected 1 within {TOL.trace:g}")
        vals, vecs = np.linalg.eigh(op.entries)
        if vals[0] < -TOL.psd:
            raise NotPositive(
                f"eigenvalue {vals[0]!r} below the -{TOL.psd:g} tolerance"
            )
        vals = np.clip(vals[::-1], 0.0, 1.0).copy()
        vals[vals <= TOL.rank] = 0.0
        vecs = vecs[:, ::-1].copy()
        object.__setattr__(self, "_eigenvalues", _frozen(vals))
        object.__setattr__(self, "_eigenvectors", _frozen(vecs))

    @property
    def dim(self) -> int:
        return self.op.dim

    @property
    def mat(self) -> np.ndarray:
        return self.op.entries

    @property
    def eigenvalues(self) -> np.ndarray:
        """Clipped eigenvalues, descending."""
        return self._eigenvalues

    @property
    def eigenvectors(self) -> np.ndarray:
        return self._eigenvectors

    @classmethod
    def from_matrix(cls, entries) -> "DensityOperator":
        return cls(HermitianOperator(entries))


@dataclass(frozen=True, eq=False)
class ProbabilityDistribution:
    """Nonnegative reals summing to 1 within ``TOL.trace``.

    Slightly-off inputs are rejected rather than renormalized.
    """

    probs: np.ndarray

    def __post_init__(self):
        p = np.array(self.probs, dtype=np.float64)
        if p.ndim != 1 or p.size == 0:
            raise DomainError("expected a nonempty 1-d probability vector")
        if np.any(p < 0):
            raise DomainError("probabilities must be nonnegative")
        total = float(p.sum())
        if abs(total - 1.0) > TOL.trace:
            raise DomainError(
                f"probabilities sum to {total!r}, expected 1 within {TOL.trace:g}"
            )
        object.__setattr__(self, "probs", _frozen(p))

    @property
    def size(self) -> int:
        return self.probs.size


@dataclass(frozen=True, eq=False)
class PureStateEnsemble:
    """Weights p_i with unit vectors |psi_i>; the average state must be a
    valid DensityOperator (validated at construction)."""

    weights: ProbabilityDistribution
    states: tuple

    def __post_init__(self):
        if not isinstance(self.weights, ProbabilityDistribution):
            object.__setattr__(
                self, "weights", ProbabilityDistribution(self.weights)
            )
        states = tuple(
            _frozen(np.array(v, dtype=np.complex128)) for v in self.states
        )
        if len(states) != self.weights.size:
            raise DimMismatch("one state vector per weight required")
        d = states[0].size
        for v in states:
            if v.ndim != 1 or v.size != d:
                raise DimMismatch("ensemble state vectors must share one dimension")
            if abs(np.vdot(v, v).real - 1.0) > TOL.orthonormal:
                raise DomainError("ensemble state vectors must be normalized")
        object.__setattr__(self, "states", states)
        avg = np.zeros((d, d), dtype=np.complex128)
        for p, v in zip(self.weights.probs, states):
            avg += p * np.outer(v, v.conj())
        object.__setattr__(self, "_average", DensityOperator.from_matrix(avg))

    @property
    def size(self) -> int:
        return self.weights.size

    def average(self) -> DensityOperator:
        return self._average


@dataclass(frozen=True, eq=False)
class Isometry:
    """Matrix with orthonormal columns: U^dagger U = I within tolerance."""

    entries: np.ndarray

    def __post_init__(self):
        mat = np.array(self.entries, dtype=np.complex128)
        if mat.ndim != 2 or mat.shape[0] < mat.shape[1] or mat.shape[1] == 0:
            raise DomainError(f"isometry needs shape (m, r) with m >= r >= 1, got {mat.shape}")
        gram = mat.conj().T @ mat
        if np.abs(gram - np.eye(mat.shape[1])).max() > TOL.orthonormal:
            raise DomainError("isometry columns are not orthonormal within tolerance")
        object.__setattr__(self, "entries", _frozen(mat))

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]


@dataclass(frozen=True, eq=False)
class OrthogonalResolution:
    """Hermitian projectors N_j with N_j N_k = 0 for j != k and sum N_j = I."""

    projectors: tuple

    def __post_init__(self):
        projs = tuple(
            p if isinstance(p, HermitianOperator) else HermitianOperator(p)
            for p in self.projectors
        )
        if not projs:
            raise DomainError("resolution needs at least one projector")
        d = projs[0].dim
        for p in projs:
            if p.dim != d:
                raise DimMismatch("projectors must share one dimension")
            if np.abs(p.entries @ p.entries - p.entries).max() > TOL.orthonormal:
                raise DomainError("resolution element is not idempotent within tolerance")
        for j, p in enumerate(projs):
            for k in range(j + 1, len(projs)):
                if np.abs(p.entries @ projs[k].entries).max() > TOL.orthonormal:
                    raise DomainError("resolution elements are not mutually orthogonal")
        total = sum(p.entries for p in projs)
        if np.abs(total - np.eye(d)).max() > TOL.orthonormal:
            raise IncompleteMeasurement("projectors do not sum to the identity")
        object.__setattr__(self, "projectors", projs)

    @property
    def dim(self) -> int:
        return self.projectors[0].dim

    @property
    def size(self) -> int:
        return len(self.projectors)


@dataclass(frozen=True, eq=False)
class GeneralizedMeasurement:
    """Kraus operators M_j with sum M_j^dagger M_j = I within tolerance."""

    operators: tuple

    def __post_init__(self):
        ops = tuple(_as_square_matrix(m) for m in self.operators)
        if not ops:
            raise DomainError("measurement needs at least one operator")
        d = ops[0].shape[0]
        for m in ops:
            if m.shape[0] != d:
                raise DimMismatch("measurement operators must share one dimension")
        total = sum(m.conj().T @ m for m in ops)
        if np.abs(total - np.eye(d)).max() > TOL.orthonormal:
            raise IncompleteMeasurement(
                "operators do not satisfy the completeness relation within tolerance"
            )
        object.__setattr__(self, "operators", tuple(_frozen(m) for m in ops))

    @property
    def dim(self) -> int:
        return self.operators[0].shape[0]


@dataclass(frozen=True, eq=False)
class BipartiteState:
    """Density operator on a tensor product, with the factor dimensions."""

    rho_ab: DensityOperator
    dim_a: int
    dim_b: int

    def __post_init__(self):
        if self.dim_a < 1 or self.dim_b < 1:
            raise DomainError("factor dimensions must be positive")
        if self.dim_a * self.dim_b != self.rho_ab.dim:
            raise DimMismatch(
                f"{self.dim_a} x {self.dim_b} does not match dimension {self.rho_ab.dim}"
            )


def _matrix_of(a) -> np.ndarray:
    if isinstance(a, DensityOperator):
        return a.mat
    if isinstance(a, HermitianOperator):
        return a.entries
    raise DomainError(f"expected a Hermitian or density operator, got {type(a).__name__}")


def spectral_decompose(a) -> Spectrum:
    """Eigendecomposition with descending eigenvalues.

    The reconstruction V diag(lambda) V^dagger must match the input to
    ``TOL.reconstruction`` relative to its largest entry.
    """
    mat = _matrix_of(a)
    vals, vecs = np.linalg.eigh(mat)
    spec = Spectrum(vals[::-1].copy(), vecs[:, ::-1].copy())
    rebuilt = (spec.eigenvectors * spec.eigenvalues) @ spec.eigenvectors.conj().T
    scale = max(np.abs(mat).max(), 1.0)
    if np.abs(rebuilt - mat).max() > TOL.reconstruction * scale:
        raise EntropyKitError("spectral reconstruction failed its error bound")
    return spec


def _singular_values(a) -> np.ndarray:
    """Descending singular values; for Hermitian input these are |eigenvalues|."""
    if isinstance(a, DensityOperator):
        return a.eigenvalues
    vals = np.abs(np.linalg.eigvalsh(_matrix_of(a)))
    return np.sort(vals)[::-1]


def schatten_norm(a, q: float) -> float:
    """(sum_j sigma_j^q)^(1/q) over singular values, for q >= 1."""
    if q < 1:
        raise InvalidIndex(f"Schatten norm needs q >= 1, got {q!r}")
    sv = _singular_values(a)
    return float(np.sum(sv**q) ** (1.0 / q))


def kyfan_norm(a, k: int) -> float:
    """Sum of the k largest singular values, 1 <= k <= dim."""
    if not isinstance(k, (int, np.integer)):
        raise InvalidIndex(f"Ky Fan order must be an integer, got {k!r}")
    sv = _singular_values(a)
    if not 1 <= k <= sv.size:
        raise InvalidIndex(f"Ky Fan order {k} outside [1, {sv.size}]")
    return float(np.sum(sv[:k]))


def trace_distance(a: DensityOperator, b: DensityOperator) -> float:
    """Half the trace norm of (a - b)."""
    if a.dim != b.dim:
        raise DimMismatch(f"dimensions {a.dim} and {b.dim} differ")
    diff = np.linalg.eigvalsh(a.mat - b.mat)
    return float(0.5 * np.abs(diff).sum())


def trace_power(rho: DensityOperator, q: float) -> float:
    """tr(rho^q) = sum_j lambda_j^q over the clipped spectrum, q > 0.

    The convention 0^q = 0 applies, so zero eigenvalues never contribute.
    """
    if q <= 0:
        raise InvalidIndex(f"trace power needs q > 0, got {q!r}")
    return float(np.sum(rho.eigenvalues**q))


def tensor(a: DensityOperator, b: DensityOperator) -> DensityOperator:
    """Kronecker product state on the composite system (row-major labels)."""
    return DensityOperator.from_matrix(np.kron(a.mat, b.mat))


def partial_trace(state: BipartiteState, keep: str) -> DensityOperator:
    """Reduced state of factor "A" or "B"."""
    da, db = state.dim_a, state.dim_b
    blocks = state.rho_ab.mat.reshape(da, db, da, db)
    if keep == "A":
        reduced = np.einsum("abcb->ac", blocks)
    elif keep == "B":
        reduced = np.einsum("abac->bc", blocks)
    else:
        raise DomainError(f'keep must be "A" or "B", got {keep!r}')
    return DensityOperator.from_matrix(reduced)


def purify(rho: DensityOperator) -> np.ndarray:
    """Unit vector |Psi> = sum_j sqrt(lambda_j) |phi_j> (x) |j> in C^(d*d).

    Tracing out the second (ancilla) factor reproduces rho.
    """
    roots = np.sqrt(rho.eigenvalues)
    return (rho.eigenvectors * roots).reshape(-1)


def pinch(a, resolution: OrthogonalResolution):
    """Pinching sum_j N_j a N_j; a DensityOperator input yields one back."""
    mat = _matrix_of(a)
    if mat.shape[0] != resolution.dim:
        raise DimMismatch(
            f"operator dimension {mat.shape[0]} does not match resolution {resolution.dim}"
        )
    out = np.zeros_like(mat)
    for proj in resolution.projectors:
        out += proj.entries @ mat @ proj.entries
    if isinstance(a, DensityOperator):
        return DensityOperator.from_matrix(out)
    return HermitianOperator(out)


def apply_generalized(rho: DensityOperator, meas: GeneralizedMeasurement) -> DensityOperator:
    """Non-selective update sum_j M_j rho M_j^dagger."""
    if rho.dim != meas.dim:
        raise DimMismatch(
            f"state dimension {rho.dim} does not match measurement {meas.dim}"
        )
    out = np.zeros_like(rho.mat)
    for m in meas.operators:
        out += m @ rho.mat @ m.conj().T
    return DensityOperator.from_matrix(out)


def diagonal_density(probs) -> DensityOperator:
    """Diagonal state with the given spectrum (validated as probabilities)."""
    p = ProbabilityDistribution(probs)
    return DensityOperator.from_matrix(np.diag(p.probs.astype(np.complex128)))


def maximally_mixed(d: int) -> DensityOperator:
    if d < 1:
        raise DomainError(f"dimension must be positive, got {d!r}")
    return DensityOperator.from_matrix(np.eye(d) / d)


def random_density(d: int, rank: int, seed) -> DensityOperator:
    """Ginibre state G G^dagger / tr(G G^dagger) with G of shape (d, rank)."""
    if d < 1:
        raise DomainError(f"dimension must be positive, got {d!r}")
    if not 1 <= rank <= d:
        raise InvalidIndex(f"rank {rank!r} outside [1, {d}]")
    rng = _rng(seed)
    g = rng.standard_normal((d, rank)) + 1j * rng.standard_normal((d, rank))
    a = g @ g.conj().T
    return DensityOperator.from_matrix(a / a.trace().real)


def random_unitary(d: int, seed) -> Isometry:
    """Haar-distributed unitary via QR with phase-normalized R diagonal."""
    if d < 1:
        raise DomainError(f"dimension must be positive, got {d!r}")
    rng = _rng(seed)
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    q, r = np.linalg.qr(g)
    dia = r.diagonal()
    return Isometry(q * (dia / np.abs(dia)))


def ensemble_from_state(
    rho: DensityOperator, m: int, seed, isometry: Isometry | None = None
) -> PureStateEnsemble:
    """Random pure-state ensemble of size m averaging to rho.

    Unnormalized members sqrt(p_i)|psi_i> = sum_j u_ij sqrt(lambda_j)|phi_j>
    are built from an m x r isometry u (Haar by default, r = rank of rho),
    so p_i = sum_j |u_ij|^2 lambda_j.  Members with weight below
    ``TOL.ensemble_weight`` are discarded.
    """
    lam = rho.eigenvalues
    r = int(np.sum(lam > TOL.rank))
    if m < r:
        raise InvalidIndex(f"ensemble size {m} below the state rank {r}")
    if isometry is None:
        u = random_unitary(m, seed).entries[:, :r]
    else:
        u = isometry.entries
        if u.shape != (m, r):
            raise DimMismatch(f"isometry shape {u.shape} does not match ({m}, {r})")
    roots = np.sqrt(lam[:r])
    raw = (u * roots) @ rho.eigenvectors[:, :r].T
    weights = np.einsum("ij,ij->i", raw, raw.conj()).real
    kept = weights >= TOL.ensemble_weight
    weights = weights[kept]
    states = tuple(row / np.sqrt(w) for w, row in zip(weights, raw[kept]))
    ens = PureStateEnsemble(ProbabilityDistribution(weights), states)
    if np.abs(ens.average().mat - rho.mat).max() > TOL.reconstruction:
        raise EntropyKitError("ensemble average failed to reproduce the state")
    return ens


def random_resolution(d: int, seed, ranks=None) -> OrthogonalResolution:
    """Random orthogonal resolution from Haar-unitary column blocks.

    Block ranks default to a uniformly drawn composition of d with at
    least two parts, so rank-1 and higher-rank blocks both occur.
    """
    rng = _rng(seed)
    if ranks is None:
        if d < 2:
            raise DomainError("random block ranks need dimension >= 2")
        # bits of an integer in [1, 2^(d-1)) mark the cut positions
        cuts = int(rng.integers(1, 2 ** (d - 1)))
        ranks = []
        size = 1
        for pos in range(d - 1):
            if cuts >> pos & 1:
                ranks.append(size)
                size = 1
            else:
                size += 1
        ranks.append(size)
    ranks = [int(r) for r in ranks]
    if sum(ranks) != d or any(r < 1 for r in ranks):
        raise DomainError(f"block ranks {ranks} do not partition dimension {d}")
    u = random_unitary(d, rng).entries
    projs = []
    start = 0
    for r in ranks:
        block = u[:, start : start + r]
        projs.append(block @ block.conj().T)
        start += r
    return OrthogonalResolution(tuple(projs))


def matrix_to_dict(a) -> dict:
    mat = _matrix_of(a)
    return {
        "d": mat.shape[0],
        "re": mat.real.tolist(),
        "im": mat.imag.tolist(),
    }


def matrix_from_dict(data: dict) -> HermitianOperator:
    try:
        d = int(data["d"])
        re = np.array(data["re"], dtype=np.float64)
        im = np.array(data["im"], dtype=np.float64)
    except (KeyError, TypeError, ValueError) as exc:
        raise DomainError(f"malformed matrix record: {exc}") from exc
    if re.shape != (d, d) or im.shape != (d, d):
        raise DimMismatch(f"matrix entries do not have shape ({d}, {d})")
    return HermitianOperator(re + 1j * im)


def write_matrix(path, a) -> None:
    """Write a Hermitian or density operator as JSON {"d", "re", "im"}."""
    Path(path).write_text(json.dumps(matrix_to_dict(a)))


def read_matrix(path) -> HermitianOperator:
    """Read a JSON matrix file; Hermiticity is validated on load."""
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise DomainError(f"matrix file is not valid JSON: {exc}") from exc
    return matrix_from_dict(data)


def read_density(path) -> DensityOperator:
    return DensityOperator(read_matrix(path))
