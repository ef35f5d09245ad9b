"""Regularized quantum-period sequences from constant terms of powers.

The k-th coefficient attached to a Laurent potential f is the constant term
of f**k.  Sequences are exact rational lists; reference data can be ingested
from CSV or JSON files that carry coefficients as decimal strings.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Literal, Sequence

from .errors import ReferenceFormatError, SequenceRangeError
from .laurent import LaurentPoly, evec_neg


def resolve_workers(workers: int | None) -> int:
    """Worker count: explicit argument, else LGFORGE_THREADS, else 1 (0 = auto)."""
    if workers is None:
        env = os.environ.get("LGFORGE_THREADS")
        if env is None:
            return 1
        try:
            workers = int(env)
        except ValueError:
            raise ValueError(f"LGFORGE_THREADS must be an integer, got {env!r}")
    if workers < 0:
        raise ValueError("worker count must be >= 0")
    if workers == 0:
        return os.cpu_count() or 1
    return workers


@dataclass(frozen=True)
class PeriodSequence:
    """Coefficients c_0..c_K of a regularized quantum period (c_0 = 1)."""

    name: str
    coeffs: tuple[Fraction, ...]
    source: Literal["computed", "ingested"]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a period sequence stores at least c_0")
        if self.coeffs[0] != 1:
            raise ValueError(f"c_0 must be 1, got {self.coeffs[0]}")
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))

    @property
    def max_power(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        if not 0 <= k <= self.max_power:
            raise SequenceRangeError(f"k={k} outside stored range 0..{self.max_power}")
        return self.coeffs[k]


@dataclass(frozen=True)
class DescendantConstant:
    """A single regularized point-descendant value, indexed by its degree."""

    r: int
    value: Fraction

    def __post_init__(self):
        if self.r < 0:
            raise ValueError("descendant degree must be nonnegative")
        object.__setattr__(self, "value", Fraction(self.value))


def period_sequence(f: LaurentPoly, up_to: int, *, name: str = "",
                    strategy: str = "incremental",
                    workers: int | None = None) -> PeriodSequence:
    """Constant terms of f**k for k = 0..up_to.

    ``incremental`` keeps only the previous power; ``split`` computes powers
    up to ceil(up_to/2) and pairs them, halving the largest power needed, and
    may fan the pairings out over a thread pool.  Both strategies are exact,
    so they agree bit for bit.
    """
    if up_to < 0:
        raise ValueError("up_to must be nonnegative")
    if strategy == "incremental":
        coeffs = [p.constant_term() for p in f.powers(up_to)]
    elif strategy == "split":
        half = (up_to + 1) // 2
        powers = list(f.powers(half))

        def pair(k: int) -> Fraction:
            hi = powers[(k + 1) // 2]
            lo = powers[k // 2]
            total = Fraction(0)
            for e, c in hi.terms.items():
                other = lo.coefficient(evec_neg(e))
                if other:
                    total += c * other
            return total

        n_workers = resolve_workers(workers)
        ks = range(up_to + 1)
        if n_workers > 1:
            with ThreadPoolExecutor(max_workers=n_workers) as pool:
                coeffs = list(pool.map(pair, ks))
        else:
            coeffs = [pair(k) for k in ks]
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    return PeriodSequence(name or "computed", tuple(coeffs), "computed")


def descendant_constant(p: PeriodSequence, r: int) -> DescendantConstant:
    """The degree-r coefficient of a period sequence, packaged for cover input."""
    return DescendantConstant(r, p[r])


@dataclass(frozen=True)
class WeakLGRow:
    k: int
    computed: Fraction
    reference: Fraction
    match: bool


@dataclass(frozen=True)
class WeakLGReport:
    rows: tuple[WeakLGRow, ...]
    passed: bool


def is_weak_lg(f: LaurentPoly, reference: PeriodSequence, up_to: int,
               k_min: int = 2) -> WeakLGReport:
    """Compare constant terms of powers of ``f`` against a reference sequence.

    Mismatches are reported row by row, not raised; the overall flag is true
    only when every k in [k_min, up_to] matches exactly.
    """
    if reference.max_power < up_to:
        raise SequenceRangeError(
            f"reference covers k <= {reference.max_power}, need {up_to}")
    computed = period_sequence(f, up_to)
    rows = []
    for k in range(k_min, up_to + 1):
        c, ref = computed[k], reference[k]
        rows.append(WeakLGRow(k, c, ref, c == ref))
    return WeakLGReport(tuple(rows), all(r.match for r in rows))


# ---------------------------------------------------------------------------
# reference ingestion
# ---------------------------------------------------------------------------

def _parse_coeff(text: str, line: int | None) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ReferenceFormatError(f"bad coefficient {text.strip()!r}", line)


def _assemble(pairs: list[tuple[int, Fraction]], name: str) -> PeriodSequence:
    if not pairs:
        raise ReferenceFormatError("no coefficients found")
    seen: dict[int, Fraction] = {}
    for k, c in pairs:
        if k < 0:
            raise ReferenceFormatError(f"negative index k={k}")
        if k in seen:
            raise ReferenceFormatError(f"duplicate entry for k={k}")
        seen[k] = c
    if 0 in seen and seen[0] != 1:
        raise ReferenceFormatError(f"c_0 of a regularized period must be 1, got {seen[0]}")
    top = max(seen)
    coeffs = [seen.get(k, Fraction(0)) for k in range(top + 1)]
    coeffs[0] = Fraction(1)
    return PeriodSequence(name, tuple(coeffs), "ingested")


def ingest_reference(path: str | Path, fmt: str | None = None) -> PeriodSequence:
    """Load a reference period sequence from a ``csv`` or ``json`` file.

    CSV: header ``k,coeff`` then one row per nonzero coefficient.  JSON: an
    object with ``name`` and ``coeffs``, the latter a list of [k, "coeff"]
    pairs.  Missing indices are zero-filled; c_0 defaults to 1.
    """
    path = Path(path)
    if fmt is None:
        fmt = path.suffix.lstrip(".").lower()
    if fmt not in ("csv", "json"):
        raise ReferenceFormatError(f"unsupported format {fmt!r}")
    text = path.read_text()
    if not text.strip():
        raise ReferenceFormatError(f"{path} is empty")
    if fmt == "csv":
        lines = text.splitlines()
        header = lines[0].strip().replace(" ", "")
        if header != "k,coeff":
            raise ReferenceFormatError("expected header 'k,coeff'", 1)
        pairs = []
        for i, raw in enumerate(lines[1:], start=2):
            if not raw.strip():
                continue
            cells = raw.split(",")
            if len(cells) != 2:
                raise ReferenceFormatError(f"expected two cells, got {len(cells)}", i)
            try:
                k = int(cells[0])
            except ValueError:
                raise ReferenceFormatError(f"bad index {cells[0].strip()!r}", i)
            pairs.append((k, _parse_coeff(cells[1], i)))
        return _assemble(pairs, path.stem)
    data = json.loads(text)
    if not isinstance(data, dict) or "coeffs" not in data:
        raise ReferenceFormatError("JSON reference must be an object with a 'coeffs' list")
    pairs = []
    for entry in data["coeffs"]:
        if not isinstance(entry, (list, tuple)) or len(entry) != 2:
            raise ReferenceFormatError(f"bad coeffs entry {entry!r}")
        k, raw = entry
        if not isinstance(k, int):
            raise ReferenceFormatError(f"bad index {k!r}")
        pairs.append((k, _parse_coeff(str(raw), None)))
    return _assemble(pairs, str(data.get("name", path.stem)))
