"""Moment-matrix certificates for synchronous projection correlations.

A level-k certificate is the Gram matrix of the vectors obtained by
applying words of projections (length at most k) to a tracial cyclic
vector.  Its entries depend only on the symmetry class of
dagger(row)·column, its corner entry is 1, and every leading restriction
is positive semidefinite.  This module builds certificates from
correlations (level 1 is unique), from class-value tables, and from
explicit projection families, and validates all of those properties
numerically.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

import numpy as np

from .words import (
    CYCLIC,
    CYCLIC_REVERSAL,
    CanonicalClass,
    Word,
    canonical_class,
    collapse_powers,
    dagger,
    enumerate_words,
)

REAL = "real"
COMPLEX = "complex"
CERT_MODES = (REAL, COMPLEX)

#: Map from a canonical class to its scalar moment value.
ClassTable = dict[CanonicalClass, complex]


def symmetry_mode(mode: str) -> str:
    """The word symmetry group matching a certificate mode."""
    if mode == REAL:
        return CYCLIC_REVERSAL
    if mode == COMPLEX:
        return CYCLIC
    raise ValueError(f"unknown certificate mode {mode!r}; expected one of {CERT_MODES}")


@lru_cache(maxsize=128)
def group_positions(words: tuple[Word, ...], sym: str) -> dict[CanonicalClass, np.ndarray]:
    """Group the flat entry positions of a word index by symmetry class.

    Position row * size + col belongs to the class of dagger(row)·col.
    Cached; treat the returned arrays as read-only.
    """
    size = len(words)
    groups: dict[CanonicalClass, list[int]] = {}
    for i, a in enumerate(words):
        da = dagger(a)
        for j, b in enumerate(words):
            cls = canonical_class(da + b, sym)
            groups.setdefault(cls, []).append(i * size + j)
    return {cls: np.asarray(idx, dtype=np.intp) for cls, idx in groups.items()}


@lru_cache(maxsize=64)
def class_positions(
    n: int, k: int, sym: str
) -> tuple[tuple[Word, ...], dict[CanonicalClass, np.ndarray]]:
    """Canonical reduced level-k index together with its class grouping."""
    words = tuple(enumerate_words(n, k, reduced=True))
    return words, group_positions(words, sym)


@dataclass(frozen=True, eq=False)
class Correlation:
    """Symmetric matrix of pair moments p(x, y) with entries in [0, 1]."""

    p: np.ndarray

    def __post_init__(self) -> None:
        p = np.array(self.p, dtype=float)
        if p.ndim != 2 or p.shape[0] != p.shape[1] or p.shape[0] == 0:
            raise ValueError(f"p must be a nonempty square matrix, got shape {p.shape}")
        if np.abs(p - p.T).max() > 1e-12:
            raise ValueError("p must be symmetric")
        if p.min() < -1e-12 or p.max() > 1 + 1e-12:
            raise ValueError("entries of p must lie in [0, 1]")
        p.flags.writeable = False
        object.__setattr__(self, "p", p)

    @property
    def n(self) -> int:
        return self.p.shape[0]

    def to_jsonable(self) -> dict:
        return {"n": self.n, "p": self.p.tolist()}

    @classmethod
    def from_jsonable(cls, obj: Mapping) -> "Correlation":
        p = np.asarray(obj["p"], dtype=float)
        if "n" in obj and int(obj["n"]) != p.shape[0]:
            raise ValueError("declared n does not match the shape of p")
        return cls(p)


@dataclass(frozen=True, eq=False)
class Certificate:
    """A level-k moment matrix over the reduced word index."""

    n: int
    level: int
    mode: str
    words: tuple[Word, ...]
    matrix: np.ndarray

    def __post_init__(self) -> None:
        symmetry_mode(self.mode)
        object.__setattr__(self, "words", tuple(tuple(w) for w in self.words))
        m = np.asarray(self.matrix)
        if m.shape != (len(self.words), len(self.words)):
            raise ValueError(
                f"matrix shape {m.shape} does not match index size {len(self.words)}"
            )
        object.__setattr__(self, "matrix", m)

    @property
    def size(self) -> int:
        return len(self.words)

    def _row_index(self) -> dict[Word, int]:
        idx = self.__dict__.get("_row_cache")
        if idx is None:
            idx = {w: i for i, w in enumerate(self.words)}
            object.__setattr__(self, "_row_cache", idx)
        return idx

    def row_of(self, word: Word) -> int:
        """Row of a word, identifying words that differ by letter powers."""
        index = self._row_index()
        word = tuple(word)
        if word in index:
            return index[word]
        key = collapse_powers(word)
        try:
            return index[key]
        except KeyError:
            raise KeyError(
                f"word {word} (power-free form {key}) is not in the level-{self.level} index"
            ) from None

    def restriction(self, level: int) -> "Certificate":
        """The leading principal certificate over words of length <= level."""
        if not 0 <= level <= self.level:
            raise ValueError(f"restriction level must be in 0..{self.level}")
        count = sum(1 for w in self.words if len(w) <= level)
        if any(len(w) <= level for w in self.words[count:]):
            raise ValueError("certificate index is not sorted by word length")
        return Certificate(
            self.n, level, self.mode, self.words[:count], self.matrix[:count, :count]
        )

    def class_table(self) -> ClassTable:
        """Mean entry per class; equals the exact values when consistent."""
        positions = group_positions(self.words, symmetry_mode(self.mode))
        flat = self.matrix.ravel()
        table: ClassTable = {}
        for cls, idx in positions.items():
            mean = flat[idx].mean()
            table[cls] = float(mean.real) if self.mode == REAL else complex(mean)
        return table

    def correlation(self) -> Correlation:
        """The pair-moment matrix embedded in the single-letter block."""
        block = self.matrix[1 : self.n + 1, 1 : self.n + 1]
        sym = (block + block.conj().T) / 2
        return Correlation(sym.real)

    def to_jsonable(self) -> dict:
        obj = {
            "n": self.n,
            "level": self.level,
            "mode": self.mode,
            "words": [list(w) for w in self.words],
            "matrix": np.real(self.matrix).tolist(),
        }
        if self.mode == COMPLEX:
            obj["matrix_im"] = np.imag(self.matrix).tolist()
        return obj

    @classmethod
    def from_jsonable(cls, obj: Mapping) -> "Certificate":
        matrix = np.asarray(obj["matrix"], dtype=float)
        if obj.get("matrix_im") is not None:
            matrix = matrix + 1j * np.asarray(obj["matrix_im"], dtype=float)
        words = tuple(tuple(int(a) for a in w) for w in obj["words"])
        return cls(int(obj["n"]), int(obj["level"]), str(obj["mode"]), words, matrix)

    def dump(self, path) -> None:
        with open(path, "w") as fh:
            json.dump(self.to_jsonable(), fh)

    @classmethod
    def load(cls, path) -> "Certificate":
        with open(path) as fh:
            return cls.from_jsonable(json.load(fh))


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of checking the defining certificate properties.

    All checks are always evaluated; nothing short-circuits, so a failing
    certificate reports every violated property at once.
    """

    level_min_eigs: tuple[float, ...]
    class_spread: float
    unit_deviation: float
    hermiticity_deviation: float
    correlation_deviation: float | None
    tol_psd: float
    tol_class: float

    @property
    def psd_ok(self) -> bool:
        return all(e >= -self.tol_psd for e in self.level_min_eigs)

    @property
    def classes_ok(self) -> bool:
        return self.class_spread < self.tol_class

    @property
    def unit_ok(self) -> bool:
        return self.unit_deviation < self.tol_class

    @property
    def hermitian_ok(self) -> bool:
        return self.hermiticity_deviation < self.tol_class

    @property
    def correlation_ok(self) -> bool:
        return self.correlation_deviation is None or self.correlation_deviation < self.tol_class

    @property
    def passed(self) -> bool:
        return (
            self.psd_ok
            and self.classes_ok
            and self.unit_ok
            and self.hermitian_ok
            and self.correlation_ok
        )

    def to_jsonable(self) -> dict:
        return {
            "level_min_eigs": list(self.level_min_eigs),
            "class_spread": self.class_spread,
            "unit_deviation": self.unit_deviation,
            "hermiticity_deviation": self.hermiticity_deviation,
            "correlation_deviation": self.correlation_deviation,
            "tol_psd": self.tol_psd,
            "tol_class": self.tol_class,
            "psd_ok": self.psd_ok,
            "classes_ok": self.classes_ok,
            "unit_ok": self.unit_ok,
            "hermitian_ok": self.hermitian_ok,
            "correlation_ok": self.correlation_ok,
            "passed": self.passed,
        }


def level1_certificate(corr: Correlation, mode: str = REAL) -> Certificate:
    """The unique level-1 certificate extending a correlation.

    The border and the diagonal both repeat p(x, x), because the pairs
    (x, empty), (x, x) and (empty, x) all index the same class; the
    corner is pinned to 1.
    """
    n = corr.n
    m = np.empty((n + 1, n + 1))
    m[0, 0] = 1.0
    diag = np.diag(corr.p).copy()
    m[0, 1:] = diag
    m[1:, 0] = diag
    m[1:, 1:] = corr.p
    return Certificate(n, 1, mode, tuple(enumerate_words(n, 1)), m)


def materialize(table: Mapping[CanonicalClass, complex], n: int, k: int, mode: str) -> Certificate:
    """Dense certificate with every entry read off a class-value table.

    The table must cover every class generated by the level-k index; a
    missing class is reported by name.  In real mode values must be real;
    in complex mode the result is Hermitian exactly when values of
    mutually reversed classes are conjugate.
    """
    words, positions = class_positions(n, k, symmetry_mode(mode))
    size = len(words)
    dtype = float if mode == REAL else complex
    flat = np.zeros(size * size, dtype=dtype)
    for cls, idx in positions.items():
        try:
            value = table[cls]
        except KeyError:
            raise ValueError(f"class table is missing class {cls}") from None
        if mode == REAL:
            value = complex(value)
            if abs(value.imag) > 1e-12:
                raise ValueError(f"real-mode table has complex value for class {cls}")
            value = value.real
        flat[idx] = value
    return Certificate(n, k, mode, words, flat.reshape(size, size))


def from_projections(
    projections, k: int, state: str = "normalized-trace", reduced: bool = True
) -> Certificate:
    """Level-k certificate of an explicit projection family.

    Entries are normalized traces tr(dagger(P_row) P_col)/d, so the
    result is a feasible point exact up to rounding, and its
    single-letter block is the correlation of the family.  Inputs must be
    Hermitian idempotents to 1e-10 in max norm.

    ``reduced=False`` indexes by all words instead of power-free ones;
    the extra rows are exact duplicates (a projection absorbs its own
    repetition), useful only for cross-checking the reduced index.
    """
    if state != "normalized-trace":
        raise ValueError(f"unsupported state {state!r}; only 'normalized-trace' is available")
    mats = [np.asarray(P, dtype=complex) for P in projections]
    if not mats:
        raise ValueError("empty projection family")
    d = mats[0].shape[0]
    offenders = []
    for i, P in enumerate(mats, start=1):
        if P.ndim != 2 or P.shape != (d, d):
            raise ValueError(f"projection #{i} has shape {P.shape}, expected {(d, d)}")
        herm = float(np.abs(P - P.conj().T).max())
        idem = float(np.abs(P @ P - P).max())
        if herm >= 1e-10 or idem >= 1e-10:
            offenders.append(f"#{i} (hermiticity {herm:.2e}, idempotence {idem:.2e})")
    if offenders:
        raise ValueError("not orthogonal projections within 1e-10: " + ", ".join(offenders))
    n = len(mats)
    words = enumerate_words(n, k, reduced=reduced)
    products: dict[Word, np.ndarray] = {(): np.eye(d, dtype=complex)}
    for w in words[1:]:
        products[w] = products[w[:-1]] @ mats[w[-1] - 1]
    vec = np.array([products[w].ravel() for w in words])
    m = (vec.conj() @ vec.T) / d
    m = (m + m.conj().T) / 2
    return Certificate(n, k, COMPLEX, tuple(words), m)


def validate(
    cert: Certificate,
    corr: Correlation | None = None,
    tol_psd: float = 1e-8,
    tol_class: float = 1e-10,
) -> ValidationReport:
    """Check positivity of every level restriction, class constancy, the
    unit corner, Hermiticity, and (optionally) the embedded correlation."""
    m = cert.matrix
    herm_dev = float(np.abs(m - m.conj().T).max())
    h = (m + m.conj().T) / 2
    positions = group_positions(cert.words, symmetry_mode(cert.mode))
    lengths = [len(w) for w in cert.words]
    min_eigs = []
    for j in range(cert.level + 1):
        s = sum(1 for ln in lengths if ln <= j)
        min_eigs.append(float(np.linalg.eigvalsh(h[:s, :s])[0]))
    flat = m.ravel()
    spread = 0.0
    for idx in positions.values():
        vals = flat[idx]
        spread = max(spread, float(np.abs(vals - vals.mean()).max()))
    unit_dev = float(abs(m[0, 0] - 1))
    corr_dev = None
    if corr is not None:
        if corr.n != cert.n:
            raise ValueError(f"correlation size {corr.n} does not match certificate n={cert.n}")
        corr_dev = float(np.abs(m[1 : cert.n + 1, 1 : cert.n + 1] - corr.p).max())
    return ValidationReport(
        level_min_eigs=tuple(min_eigs),
        class_spread=spread,
        unit_deviation=unit_dev,
        hermiticity_deviation=herm_dev,
        correlation_deviation=corr_dev,
        tol_psd=tol_psd,
        tol_class=tol_class,
    )


def gram_factor(matrix: np.ndarray, tol: float = 1e-8) -> np.ndarray:
    """Factor a PSD matrix as dagger(L) L, one row per retained eigenvalue.

    Eigenvalues in (-tol, tol] are treated as zero and dropped, so L has
    as many rows as the numerical rank of the input; an eigenvalue below
    -tol is an error.  Rows are ordered by descending eigenvalue.
    """
    m = np.asarray(matrix)
    herm = float(np.abs(m - m.conj().T).max())
    if herm > 1e-10:
        raise ValueError(f"matrix is not Hermitian: max deviation {herm:.2e}")
    h = (m + m.conj().T) / 2
    vals, vecs = np.linalg.eigh(h)
    if vals[0] < -tol:
        raise ValueError(
            f"matrix is not positive semidefinite within {tol:g}: min eigenvalue {vals[0]:.3e}"
        )
    keep = vals > tol
    vals_kept = vals[keep][::-1]
    vecs_kept = vecs[:, keep][:, ::-1]
    return np.sqrt(vals_kept)[:, None] * vecs_kept.conj().T
