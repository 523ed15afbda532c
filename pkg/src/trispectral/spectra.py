"""Exact symbolic spectra of iterated triangulations.

Each triangulation step transforms the normalized-Laplacian spectrum by a
fixed rule: every retained eigenvalue is halved (the value 2, present only
for bipartite seeds, is dropped), the value 3/2 enters with multiplicity
equal to the previous vertex count, and 1s pad the total up to the new
vertex count.  Unrolling the rule n times yields a descriptor whose size is
O(n + seed size), independent of the iterated graph's exponential vertex
count.  Multiplicities are exact big integers; the exceptional values are
dyadic rationals and carry exactly in floating point.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .graph import Graph, analyze, predicted_counts
from .numeric import DEFAULT_EIG_TOL, eigenvalues_sym, normalized_laplacian

DEFAULT_EXPANSION_CAP = 10**6

ZERO_CLAMP = 1e-9  # seed eigenvalues this close to 0 are the kernel value
TWO_CLAMP = 1e-6  # bipartite seeds: the top eigenvalue this close to 2 is the dropped 2
SEED_MATCH_TOL = 1e-9


class ExpansionCapError(RuntimeError):
    """Materializing the spectrum would exceed the configured cap."""


class ExceptionalClass(Enum):
    """Eigenvalue classes injected fresh at every triangulation generation."""

    THREE_HALVES = Fraction(3, 2)
    ONE = Fraction(1)

    @property
    def label(self) -> str:
        return str(self.value)


_CLASS_BY_LABEL = {cls.label: cls for cls in ExceptionalClass}


@dataclass(frozen=True)
class DyadicEigenvalue:
    """A base value halved ``halvings`` times.

    Seed-derived entries carry the (floating) seed eigenvalue and halvings
    equal to the descriptor depth; exceptional entries carry an exact
    Fraction base and halvings equal to depth minus generation.
    """

    base: Union[Fraction, float]
    halvings: int
    seed_index: int | None = None

    @property
    def value(self) -> float:
        # Scaling by a power of two is exact in binary floating point.
        return float(self.base) * 0.5**self.halvings

    @property
    def exact(self) -> Fraction | None:
        if isinstance(self.base, Fraction):
            return self.base / (1 << self.halvings)
        return None


@dataclass(frozen=True)
class ExceptionalBand:
    """Multiplicity of one exceptional class introduced at one generation."""

    generation: int
    eigenvalue_class: ExceptionalClass
    multiplicity: int


@dataclass(frozen=True)
class SpectrumDescriptor:
    """Symbolic spectrum of the n-fold triangulation of a seed graph.

    ``seed_eigs`` stores the full seed spectrum grouped into (value,
    multiplicity) classes; when ``bipartite_seed`` is set and n >= 1 one copy
    of the eigenvalue 2 is dropped from the seed part (see
    :meth:`effective_seed`).
    """

    n: int
    n0: int
    e0: int
    bipartite_seed: bool
    seed_eigs: tuple[tuple[float, int], ...]
    exceptional: tuple[ExceptionalBand, ...]

    def effective_seed(self) -> tuple[tuple[float, int], ...]:
        """Seed classes actually present at depth n (the 2 removed once)."""
        if self.n == 0 or not self.bipartite_seed:
            return self.seed_eigs
        classes = list(self.seed_eigs)
        top_value, top_mult = classes[-1]
        if top_value != 2.0:
            raise RuntimeError(
                "internal inconsistency: bipartite seed without a pinned eigenvalue 2"
            )
        if top_mult == 1:
            classes.pop()
        else:
            classes[-1] = (top_value, top_mult - 1)
        return tuple(classes)

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.effective_seed()) + sum(
            band.multiplicity for band in self.exceptional
        )

    def eigenvalue_classes(self) -> list[tuple[DyadicEigenvalue, int]]:
        """All distinct eigenvalue classes with their exact multiplicities."""
        out: list[tuple[DyadicEigenvalue, int]] = []
        for idx, (value, mult) in enumerate(self.effective_seed()):
            out.append((DyadicEigenvalue(value, self.n, seed_index=idx), mult))
        for band in self.exceptional:
            out.append(
                (
                    DyadicEigenvalue(band.eigenvalue_class.value, self.n - band.generation),
                    band.multiplicity,
                )
            )
        return out

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "n0": self.n0,
            "e0": self.e0,
            "bipartite_seed": self.bipartite_seed,
            "seed_eigs": [[value, mult] for value, mult in self.seed_eigs],
            "exceptional": [
                [band.generation, band.eigenvalue_class.label, str(band.multiplicity)]
                for band in self.exceptional
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "SpectrumDescriptor":
        doc = json.loads(text)
        return cls(
            n=doc["n"],
            n0=doc["n0"],
            e0=doc["e0"],
            bipartite_seed=doc["bipartite_seed"],
            seed_eigs=tuple((float(v), int(m)) for v, m in doc["seed_eigs"]),
            exceptional=tuple(
                ExceptionalBand(int(g), _CLASS_BY_LABEL[label], int(m))
                for g, label, m in doc["exceptional"]
            ),
        )


def halve_multiset(values: Iterable[float]) -> list[float]:
    """Every element divided by two, multiplicities preserved."""
    return [v / 2 for v in values]


def new_unit_multiplicity(n0: int, e0: int, g: int) -> int:
    """Count of eigenvalue-1 copies introduced at generation g >= 1 (may be
    negative only for g = 1, where the bipartite correction restores it)."""
    if g < 1:
        raise ValueError("generation must be >= 1")
    return (3 ** (g - 1) + 1) // 2 * e0 - n0


def _seed_classes(
    values: Sequence[float], bipartite: bool
) -> tuple[tuple[float, int], ...]:
    """Group a seed spectrum into (value, multiplicity) classes.

    Clamps the unique near-zero eigenvalue to exactly 0 and, for bipartite
    seeds, pins the top eigenvalue to exactly 2; floating equality to 2 is
    never trusted on its own.
    """
    vals = sorted(float(v) for v in values)
    if len(vals) < 2:
        raise ValueError("seed spectrum needs at least 2 eigenvalues")
    zeros = sum(1 for v in vals if abs(v) <= ZERO_CLAMP)
    if zeros != 1:
        raise ValueError(
            f"expected exactly one near-zero eigenvalue for a connected seed, found {zeros}"
        )
    clamped = [0.0 if abs(v) <= ZERO_CLAMP else v for v in vals]
    if bipartite:
        if abs(clamped[-1] - 2.0) > TWO_CLAMP:
            raise ValueError(
                f"bipartite seed must carry eigenvalue 2, top value is {clamped[-1]!r}"
            )
        clamped[-1] = 2.0
    groups: list[list[float]] = []
    for v in clamped:
        if groups and v - groups[-1][0] <= SEED_MATCH_TOL:
            groups[-1].append(v)
        else:
            groups.append([v])
    return tuple((math.fsum(grp) / len(grp), len(grp)) for grp in groups)


def build_descriptor(
    seed_eigenvalues: Sequence[float],
    e0: int,
    bipartite_seed: bool,
    n: int,
) -> SpectrumDescriptor:
    """Unroll the per-step spectral rule n times from a seed spectrum.

    Cost is O(n + seed size).  The total multiplicity is checked against the
    exact vertex-count recurrence.
    """
    if n < 0:
        raise ValueError("depth must be nonnegative")
    if e0 < 1:
        raise ValueError("seed needs at least one edge")
    n0 = len(seed_eigenvalues)
    seed = _seed_classes(seed_eigenvalues, bipartite_seed)
    bands: list[ExceptionalBand] = []
    prev_vertices = n0
    edges = e0
    for g in range(1, n + 1):
        unit = new_unit_multiplicity(n0, e0, g)
        if g == 1 and bipartite_seed:
            unit += 1
        if unit < 0:
            raise RuntimeError(
                f"internal inconsistency: negative eigenvalue-1 multiplicity {unit} "
                f"at generation {g} (seed not a valid connected graph?)"
            )
        bands.append(ExceptionalBand(g, ExceptionalClass.THREE_HALVES, prev_vertices))
        bands.append(ExceptionalBand(g, ExceptionalClass.ONE, unit))
        prev_vertices += edges
        edges *= 3
    descriptor = SpectrumDescriptor(
        n=n,
        n0=n0,
        e0=e0,
        bipartite_seed=bipartite_seed,
        seed_eigs=seed,
        exceptional=tuple(bands),
    )
    expected, _ = predicted_counts(n0, e0, n)
    if descriptor.total_multiplicity != expected:
        raise RuntimeError(
            f"internal inconsistency: descriptor holds {descriptor.total_multiplicity} "
            f"eigenvalues, expected {expected}"
        )
    return descriptor


def descriptor_for(g: Graph, n: int, tol: float = DEFAULT_EIG_TOL) -> SpectrumDescriptor:
    """Convenience constructor: analyze the seed, solve its spectrum, unroll."""
    info = analyze(g)
    eig = eigenvalues_sym(normalized_laplacian(g), tol=tol)
    return build_descriptor(eig.eigenvalues, g.num_edges, info.bipartite, n)


def expand_descriptor(
    d: SpectrumDescriptor, cap: int = DEFAULT_EXPANSION_CAP
) -> list[float]:
    """Materialize the full sorted eigenvalue multiset (size-capped)."""
    total = d.total_multiplicity
    if total > cap:
        raise ExpansionCapError(f"expansion needs {total} values, cap is {cap}")
    values: list[float] = []
    for eig, mult in d.eigenvalue_classes():
        values.extend([eig.value] * mult)
    values.sort()
    return values


def reciprocal_sum(d: SpectrumDescriptor) -> tuple[Fraction, float]:
    """Sum of reciprocals of all nonzero eigenvalues, split exact/floating.

    The exceptional part (classes 3/2 and 1) is an exact rational; the seed
    part is floating.  Their sum is the Kemeny constant of the depth-n graph.
    """
    exceptional = Fraction(0)
    for band in d.exceptional:
        weight = band.multiplicity * (1 << (d.n - band.generation))
        exceptional += weight / band.eigenvalue_class.value
    scale = 2.0**d.n
    seed_part = math.fsum(
        mult * scale / value for value, mult in d.effective_seed() if value != 0.0
    )
    return exceptional, seed_part


def multiplicity_of(
    d: SpectrumDescriptor, value: Union[Fraction, float, int]
) -> int:
    """Exact multiplicity of a queried dyadic value.

    Exceptional classes are matched exactly in rational arithmetic; the
    seed-derived part matches within SEED_MATCH_TOL.
    """
    q = value if isinstance(value, Fraction) else Fraction(value)
    total = 0
    for band in d.exceptional:
        if band.eigenvalue_class.value / (1 << (d.n - band.generation)) == q:
            total += band.multiplicity
    qf = float(q)
    scale = 0.5**d.n
    for seed_value, mult in d.effective_seed():
        if abs(seed_value * scale - qf) <= SEED_MATCH_TOL:
            total += mult
    return total
