"""Local invariants of isolated plane-curve singularity germs.

Built-in models are the ordinary m-fold point (m concurrent smooth branches)
and the Brieskorn germ x^a + y^b.  Both are quasi-homogeneous, so the local
monodromy has finite order and every invariant is read off the singularity
spectrum {i/a + j/b}.  Germs that are not quasi-homogeneous, and germs in
ambient dimension above curves, enter through the Explicit variant carrying
user-supplied data.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .laurent import CyclotomicFactorization
from .pairs import SpectralPairTable


class ExplicitHasNoSpectrum(TypeError):
    """Spectrum enumeration is only defined for the quasi-homogeneous built-ins."""


class MissingLocalHodgeData(ValueError):
    """Hodge filtration dimensions are needed but were not supplied."""


@dataclass(frozen=True)
class Ordinary:
    """An ordinary m-fold point: m pairwise transverse smooth branches."""

    multiplicity: int

    def __post_init__(self):
        if self.multiplicity < 2:
            raise ValueError("ordinary point needs multiplicity >= 2")


@dataclass(frozen=True)
class Brieskorn:
    """The germ x^a + y^b at the origin."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 2 or self.b < 2:
            raise ValueError("Brieskorn exponents must both be >= 2")


@dataclass(frozen=True)
class Explicit:
    """User-supplied local data for a germ without a built-in model.

    grf_dims, when present, lists (p, dim Gr_F^p) pairs of the Hodge
    filtration on the middle cohomology of the local Milnor fiber; it is the
    input channel for the weight-n unipotent computation in ambient dimension
    above curves.
    """

    milnor: int
    branches: int
    alexander: CyclotomicFactorization
    pairs: SpectralPairTable
    grf_dims: tuple[tuple[int, int], ...] | None = None

    def __post_init__(self):
        if self.milnor < 1:
            raise ValueError("Milnor number must be positive")
        if self.branches < 1:
            raise ValueError("branch count must be positive")


LocalSingularity = Ordinary | Brieskorn | Explicit


def _weights(s: Ordinary | Brieskorn) -> tuple[int, int]:
    if isinstance(s, Ordinary):
        return s.multiplicity, s.multiplicity
    return s.a, s.b


def milnor_number(s: LocalSingularity) -> int:
    """Dimension of the middle cohomology of the local Milnor fiber."""
    if isinstance(s, Explicit):
        return s.milnor
    a, b = _weights(s)
    return (a - 1) * (b - 1)


def branches(s: LocalSingularity) -> int:
    """Number of irreducible local branches of the germ."""
    if isinstance(s, Explicit):
        return s.branches
    if isinstance(s, Ordinary):
        return s.multiplicity
    return gcd(s.a, s.b)


def spectrum(s: LocalSingularity) -> tuple[Fraction, ...]:
    """Singularity spectrum of a built-in germ, as a sorted multiset in (0, 2).

    For x^a + y^b this is { i/a + j/b : 1 <= i <= a-1, 1 <= j <= b-1 }; the
    ordinary m-fold point is the case a = b = m.
    """
    if isinstance(s, Explicit):
        raise ExplicitHasNoSpectrum(
            "explicit local data carries tables, not a spectrum"
        )
    a, b = _weights(s)
    return tuple(
        sorted(
            Fraction(i, a) + Fraction(j, b)
            for i in range(1, a)
            for j in range(1, b)
        )
    )


def _group_eigenvalues(alphas) -> dict[int, int]:
    """Multiplicity per cyclotomic order of the multiset exp(2*pi*i*alpha).

    Valid only when the multiset is Galois-stable (each primitive k-th root
    appears equally often), which holds for monodromy eigenvalues of germs.
    """
    counts = Counter((a.denominator, a.numerator % a.denominator) for a in alphas)
    mults: dict[int, int] = {}
    for k in sorted({k for k, _ in counts}):
        residues = [counts[(k, j)] for j in range(k) if gcd(j, k) == 1 or k == 1]
        if len(set(residues)) != 1:
            raise ValueError(
                f"eigenvalue multiset is not Galois-stable at order {k}"
            )
        mults[k] = residues[0]
    return mults


def local_alexander(s: LocalSingularity) -> CyclotomicFactorization:
    """Top local Alexander polynomial: the characteristic polynomial of the
    local monodromy, prod over spectrum of (t - exp(2*pi*i*s))."""
    if isinstance(s, Explicit):
        return s.alexander
    return CyclotomicFactorization(factors=_group_eigenvalues(spectrum(s)))


def local_pairs(s: LocalSingularity) -> SpectralPairTable:
    """Spectral pairs of the middle cohomology of the local Milnor fiber.

    For the quasi-homogeneous built-ins each spectrum element s contributes
    (0, 1, s) when s is in (0, 1), (1, 0, s - 1) when s is in (1, 2), and
    (1, 1, 0) when s = 1; the eigenvalue-1 part has dimension branches - 1
    and pure type (1, 1).
    """
    if isinstance(s, Explicit):
        return s.pairs
    entries: dict[tuple[int, int, Fraction], int] = {}
    for value in spectrum(s):
        if value == 1:
            key = (1, 1, Fraction(0))
        elif value < 1:
            key = (0, 1, value)
        else:
            key = (1, 0, value - 1)
        entries[key] = entries.get(key, 0) + 1
    return SpectralPairTable(entries)


def hodge_filtration_dims(s: LocalSingularity, n: int) -> dict[int, int]:
    """dim Gr_F^p of the middle local cohomology, keyed by p.

    Computed from the local pair table for curve germs; ambient dimensions
    above curves require Explicit data with grf_dims supplied.
    """
    if isinstance(s, Explicit) and s.grf_dims is not None:
        return {int(p): int(v) for p, v in s.grf_dims if v}
    if n == 1:
        return local_pairs(s).hodge_filtration_marginal()
    raise MissingLocalHodgeData(
        "Hodge filtration dimensions for an ambient dimension above curves "
        "must be supplied as explicit grf_dims"
    )


def alexander_alpha_marginal(f: CyclotomicFactorization) -> dict[Fraction, int]:
    """Eigenvalue multiset of a cyclotomic product, grouped by angle alpha."""
    out: dict[Fraction, int] = {}
    for k, m in f.factors.items():
        for j in range(k):
            if k == 1 or gcd(j, k) == 1:
                out[Fraction(j, k)] = out.get(Fraction(j, k), 0) + m
    return out
