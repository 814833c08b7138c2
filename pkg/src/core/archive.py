"""Nondominated archive with per-point trust-region radii."""

from __future__ import annotations
import csv
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator

import numpy as np

from .dominance import dominates
from .enums import Dominance, InsertOutcome
from .errors import DimensionError, DomainError
from .vectors import as_decision, as_objective, vector_key


@dataclass
class ArchiveEntry:
    """A nondominated decision point, its objectives and its radius delta(x)."""
    x: np.ndarray
    f: np.ndarray
    radius: float
    birth_iteration: int = 0

    def __post_init__(self) -> None:
        self.x = as_decision(self.x)
        self.f = as_objective(self.f)
        if not self.radius > 0:
            raise DomainError(f"archive radius must be positive, got {self.radius}")
        if self.birth_iteration < 0:
            raise DomainError("birth_iteration must be nonnegative")

    @property
    def key(self) -> bytes:
        return vector_key(self.x)


@dataclass
class Archive:
    """
    Mutually nondominated set of entries, kept in insertion order.

    Insertion order is what downstream tie-breaking (reference selection)
    relies on, so entries are never reordered.
    """
    entries: list[ArchiveEntry] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[ArchiveEntry]:
        return iter(self.entries)

    def __getitem__(self, index: int) -> ArchiveEntry:
        return self.entries[index]

    @property
    def n_objectives(self) -> int | None:
        return self.entries[0].f.size if self.entries else None

    def insert(self, candidate: ArchiveEntry) -> InsertOutcome:
        """
        Offer a candidate to the archive.

        The candidate is rejected when an existing entry dominates or equals
        it (or it repeats a stored decision vector); otherwise it is appended
        and every entry it dominates is removed.
        """
        if self.entries:
            if candidate.f.size != self.entries[0].f.size:
                raise DimensionError(
                    f"candidate has {candidate.f.size} objectives, archive has {self.entries[0].f.size}"
                )
            if candidate.x.size != self.entries[0].x.size:
                raise DimensionError(
                    f"candidate has {candidate.x.size} variables, archive has {self.entries[0].x.size}"
                )

        key = candidate.key
        survivors: list[ArchiveEntry] = []
        for entry in self.entries:
            if entry.key == key:
                return InsertOutcome.REJECTED
            relation = dominates(entry.f, candidate.f)
            if relation.weakly_dominates:
                return InsertOutcome.REJECTED
            if dominates(candidate.f, entry.f) is not Dominance.DOMINATES:
                survivors.append(entry)

        survivors.append(candidate)
        self.entries = survivors
        return InsertOutcome.ACCEPTED

    def index_of(self, x: np.ndarray) -> int | None:
        """Index of the entry with exactly this decision vector, if any."""
        return self.index_of_key(vector_key(x))

    def index_of_key(self, key: bytes) -> int | None:
        for i, entry in enumerate(self.entries):
            if entry.key == key:
                return i
        return None

    def contains(self, x: np.ndarray) -> bool:
        return self.index_of(x) is not None

    def objectives(self) -> np.ndarray:
        """Objective matrix of shape (N, p)."""
        if not self.entries:
            return np.empty((0, 0))
        return np.vstack([entry.f for entry in self.entries])

    def decisions(self) -> np.ndarray:
        """Decision matrix of shape (N, n)."""
        if not self.entries:
            return np.empty((0, 0))
        return np.vstack([entry.x for entry in self.entries])

    def radii(self) -> np.ndarray:
        return np.array([entry.radius for entry in self.entries], dtype=float)

    def to_csv(self, path: str | Path) -> None:
        """Write header x_1..x_n,f_1..f_p,delta and one row per entry."""
        if not self.entries:
            raise DimensionError("cannot serialise an empty archive without dimensions")
        n = self.entries[0].x.size
        p = self.entries[0].f.size
        header = [f"x_{i + 1}" for i in range(n)] + [f"f_{i + 1}" for i in range(p)] + ["delta"]
        with open(path, "w", newline="", encoding="utf-8") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(header)
            for entry in self.entries:
                # repr() round-trips float64 exactly
                row = [repr(float(v)) for v in entry.x] + [repr(float(v)) for v in entry.f]
                writer.writerow(row + [repr(float(entry.radius))])

    @classmethod
    def from_csv(cls, path: str | Path) -> Archive:
        """Read an archive written by `to_csv`; rows are re-inserted in order."""
        with open(path, newline="", encoding="utf-8") as handle:
            reader = csv.reader(handle)
            header = next(reader)
            x_cols = [i for i, name in enumerate(header) if name.startswith("x_")]
            f_cols = [i for i, name in enumerate(header) if name.startswith("f_")]
            d_col = header.index("delta")
            archive = cls()
            for row in reader:
                if not row:
                    continue
                archive.insert(ArchiveEntry(
                    x=[float(row[i]) for i in x_cols],
                    f=[float(row[i]) for i in f_cols],
                    radius=float(row[d_col]),
                ))
        return archive


def archive_insert(archive: Archive, candidate: ArchiveEntry) -> InsertOutcome:
    """Functional spelling of `Archive.insert`."""
    return archive.insert(candidate)


def read_objective_csv(path: str | Path) -> np.ndarray:
    """
    Read objective vectors from CSV.

    Uses the f_* columns when the header has them (archive files), otherwise
    every column.
    """
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.reader(handle)
        header = next(reader)
        cols = [i for i, name in enumerate(header) if name.startswith("f_")] or list(range(len(header)))
        rows = [[float(row[i]) for i in cols] for row in reader if row]
    return np.array(rows, dtype=float).reshape(len(rows), len(cols))


def write_objective_csv(path: str | Path, points: np.ndarray) -> None:
    """Write an (N, p) objective matrix with header f_1..f_p."""
    points = np.atleast_2d(np.asarray(points, dtype=float))
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow([f"f_{i + 1}" for i in range(points.shape[1])])
        for row in points:
            writer.writerow([repr(float(v)) for v in row])
