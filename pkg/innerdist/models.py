"""Domain types. Symbols are stored 0-based and surface as ``[1, n]``."""
from __future__ import annotations

import enum
from typing import Any, Dict, List, Optional, Tuple

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, model_validator

Cells = Tuple[Tuple[int, ...], ...]


class _Frozen(BaseModel):
    model_config = ConfigDict(frozen=True)


class Violation(_Frozen):
    kind: str
    row: Optional[int] = None
    column: Optional[int] = None
    detail: str = ""

    def __str__(self) -> str:
        where = ""
        if self.row is not None and self.column is not None:
            where = f" at ({self.row},{self.column})"
        elif self.row is not None:
            where = f" in row {self.row}"
        elif self.column is not None:
            where = f" in column {self.column}"
        return f"{self.kind}{where}: {self.detail}"


class Rectangle(_Frozen):
    n: int
    cells: Cells

    @model_validator(mode="after")
    def _check_latin(self) -> Rectangle:
        if self.n < 1:
            raise ValueError(f"order must be positive: {self.n}")
        if not self.cells or not self.cells[0]:
            raise ValueError("empty grid")
        width = len(self.cells[0])
        if any(len(row) != width for row in self.cells):
            raise ValueError("ragged grid")
        if max(len(self.cells), width) > self.n:
            raise ValueError(f"grid {len(self.cells)}x{width} exceeds order {self.n}")
        for row in self.cells:
            if any(not 0 <= x < self.n for x in row):
                raise ValueError(f"symbol out of range in {row}")
            if len(set(row)) != width:
                raise ValueError(f"repeated symbol in row {row}")
        for column in zip(*self.cells):
            if len(set(column)) != len(column):
                raise ValueError(f"repeated symbol in column {column}")
        return self

    @property
    def rows(self) -> int:
        return len(self.cells)

    @property
    def cols(self) -> int:
        return len(self.cells[0])

    @property
    def grid(self) -> List[List[int]]:
        """The grid with symbols in ``[1, n]``."""
        return [[x + 1 for x in row] for row in self.cells]

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.grid)


class Square(Rectangle):
    @model_validator(mode="after")
    def _check_square(self) -> Square:
        if self.rows != self.n or self.cols != self.n:
            raise ValueError(f"not a square of order {self.n}")
        return self


class Row(_Frozen):
    n: int
    cells: Tuple[int, ...]

    @model_validator(mode="after")
    def _check_permutation(self) -> Row:
        if sorted(self.cells) != list(range(self.n)):
            raise ValueError(f"not a Latin row of order {self.n}: {self.cells}")
        return self

    @property
    def symbols(self) -> List[int]:
        return [x + 1 for x in self.cells]

    @property
    def is_normal(self) -> bool:
        return self.cells[0] == 0

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.symbols)


class SymbolPermutation(_Frozen):
    n: int
    mapping: Tuple[int, ...]

    @model_validator(mode="after")
    def _check_bijection(self) -> SymbolPermutation:
        if sorted(self.mapping) != list(range(self.n)):
            raise ValueError(f"not a bijection on [1,{self.n}]: {self.images}")
        return self

    @classmethod
    def from_images(cls, images: List[int]) -> SymbolPermutation:
        return cls(n=len(images), mapping=tuple(x - 1 for x in images))

    @classmethod
    def identity(cls, n: int) -> SymbolPermutation:
        return cls(n=n, mapping=tuple(range(n)))

    @classmethod
    def shift(cls, n: int, i: int) -> SymbolPermutation:
        return cls(n=n, mapping=tuple((x + i) % n for x in range(n)))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> SymbolPermutation:
        mapping = list(range(n))
        mapping[a - 1], mapping[b - 1] = b - 1, a - 1
        return cls(n=n, mapping=tuple(mapping))

    @property
    def images(self) -> List[int]:
        return [x + 1 for x in self.mapping]

    def __call__(self, symbol: int) -> int:
        return self.mapping[symbol - 1] + 1


class DifferenceRow(_Frozen):
    n: int
    steps: Tuple[int, ...]

    @model_validator(mode="after")
    def _check_steps(self) -> DifferenceRow:
        if len(self.steps) != self.n - 1:
            raise ValueError(
                f"expected {self.n - 1} differences, got {len(self.steps)}"
            )
        if any(not 1 <= h <= self.n - 1 for h in self.steps):
            raise ValueError(f"differences must lie in [1,{self.n - 1}]: {self.steps}")
        return self

    def negated(self) -> DifferenceRow:
        return DifferenceRow(n=self.n, steps=tuple(self.n - h for h in self.steps))

    def reversed(self) -> DifferenceRow:
        return DifferenceRow(n=self.n, steps=self.steps[::-1])

    def __str__(self) -> str:
        return f"{self.n}: " + " ".join(str(h) for h in self.steps)


class ExtendedDifferenceRow(_Frozen):
    n: int
    eps: Tuple[int, ...]
    h: int

    @model_validator(mode="after")
    def _check_extended(self) -> ExtendedDifferenceRow:
        n, half = self.n, self.n // 2
        if n < 2 or n % 2:
            raise ValueError(f"extended difference rows need an even order: {n}")
        if len(self.eps) != n - 1:
            raise ValueError(f"expected {n - 1} entries before h, got {len(self.eps)}")
        if any(not 1 - half <= e <= half - 1 for e in self.entries):
            raise ValueError(f"entries must lie in [{1 - half},{half - 1}]")
        if (sum(self.eps) + self.h) % n:
            raise ValueError(f"entries must sum to 0 mod {n}: {self.entries}")
        return self

    @property
    def entries(self) -> Tuple[int, ...]:
        return self.eps + (self.h,)

    @property
    def inner_distance(self) -> int:
        return self.n // 2 - max(abs(e) for e in self.eps)

    @property
    def is_cycle(self) -> bool:
        return abs(self.h) <= self.n // 2 - self.inner_distance

    def negated(self) -> ExtendedDifferenceRow:
        return ExtendedDifferenceRow(
            n=self.n, eps=tuple(-e for e in self.eps), h=-self.h
        )

    def reversed(self) -> ExtendedDifferenceRow:
        return ExtendedDifferenceRow(n=self.n, eps=self.eps[::-1], h=self.h)

    def rotated(self, by: int = 1) -> ExtendedDifferenceRow:
        by %= self.n
        entries = self.entries
        rotated = entries[self.n - by :] + entries[: self.n - by]
        return ExtendedDifferenceRow(n=self.n, eps=rotated[:-1], h=rotated[-1])

    def __str__(self) -> str:
        return f"{self.n}: " + " ".join(str(e) for e in self.eps) + f" | {self.h}"


class DifferencePair(_Frozen):
    n: int
    H: Cells
    V: Cells

    @model_validator(mode="after")
    def _check_shapes(self) -> DifferencePair:
        rows = len(self.H)
        if rows < 1:
            raise ValueError("H needs at least one row")
        width = len(self.H[0]) + 1
        if any(len(r) != width - 1 for r in self.H):
            raise ValueError("ragged H")
        if len(self.V) != rows - 1 or any(len(r) != width for r in self.V):
            raise ValueError(f"V must be {rows - 1}x{width} to match H")
        return self

    @property
    def rows(self) -> int:
        return len(self.H)

    @property
    def cols(self) -> int:
        return len(self.H[0]) + 1

    def negated(self) -> DifferencePair:
        n = self.n
        return DifferencePair(
            n=n,
            H=tuple(tuple(-x % n or n for x in r) for r in self.H),
            V=tuple(tuple(-x % n or n for x in r) for r in self.V),
        )


class PairViolation(_Frozen):
    condition: int
    location: Tuple[int, ...]
    detail: str

    def __str__(self) -> str:
        return f"condition {self.condition} at {self.location}: {self.detail}"


class PatternViolation(_Frozen):
    rule: int
    start: int
    end: int
    detail: str = ""


class BoundViolation(_Frozen):
    check: str
    start: int
    end: int
    detail: str = ""


class Symmetry(str, enum.Enum):
    REVERSE = "reverse"
    NEGATE = "negate"
    ROTATE = "rotate"


class PathVariant(str, enum.Enum):
    CYCLE_ROTATION = "cycle_rotation"
    ALL_ONES = "all_ones"
    TYPE1 = "type1"
    TYPE2 = "type2"


class PathClass(_Frozen):
    variant: PathVariant
    sign: int
    h: int
    m: Optional[int] = None
    offset: Optional[int] = None
    alternating: bool = False

    def to_json(self) -> Dict[str, Any]:
        return {
            "variant": self.variant.value,
            "h": self.h,
            "m": self.m,
            "sign": "+" if self.sign > 0 else "-",
            "offset": self.offset,
            "alternating": self.alternating,
        }


class NamedRows(_Frozen):
    row_a: ExtendedDifferenceRow
    row_c: ExtendedDifferenceRow


class CheckResult(_Frozen):
    tag: str
    passed: bool
    detail: str = ""


class MidCounts(BaseModel):
    formula: Optional[int] = None
    constructive: Optional[int] = None
    brute: Optional[int] = None

    @property
    def consistent(self) -> bool:
        counts = (self.formula, self.constructive, self.brute)
        values = {v for v in counts if v is not None}
        return len(values) <= 1


class StructureBreakdown(BaseModel):
    total: int = 0
    circulant: int = 0
    back_circulant: int = 0
    row_product: int = 0
    overlap: int = 0
    closed_form: int = 0


class CensusReport(BaseModel):
    n: int
    per_k: Dict[int, int] = {}
    complete: bool = True
    mid: MidCounts = Field(default_factory=MidCounts)
    structure: Optional[StructureBreakdown] = None
    checks: List[CheckResult] = []
    timings: Dict[str, float] = {}

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> Dict[str, Any]:
        return {
            "schema": "1",
            "n": self.n,
            "per_k": {str(k): v for k, v in sorted(self.per_k.items())},
            "complete": self.complete,
            "mid": self.mid.model_dump(),
            "structure": self.structure.model_dump() if self.structure else None,
            "checks": [c.model_dump() for c in self.checks],
            "timings": self.timings,
        }

    def to_frame(self) -> pd.DataFrame:
        records = [
            {"n": self.n, "k": k, "count": v, "method": "brute-force"}
            for k, v in sorted(self.per_k.items())
        ]
        max_k = max(1, (self.n - 1) // 2)
        for method, value in (
            ("formula", self.mid.formula),
            ("constructive", self.mid.constructive),
            ("brute-force", self.mid.brute),
        ):
            if value is not None and not (method == "brute-force" and self.per_k):
                records.append(
                    {"n": self.n, "k": max_k, "count": value, "method": method}
                )
        return pd.DataFrame(records, columns=["n", "k", "count", "method"])


class ConjectureReport(BaseModel):
    n: int
    per_k: Dict[int, int] = {}
    monotone: Dict[str, bool] = {}
    complete: bool = True

    def to_json(self) -> Dict[str, Any]:
        return {
            "schema": "1",
            "n": self.n,
            "per_k": {str(k): v for k, v in sorted(self.per_k.items())},
            "monotone": self.monotone,
            "complete": self.complete,
        }


class VerificationReport(BaseModel):
    checks: List[CheckResult] = []

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> Dict[str, Any]:
        return {
            "schema": "1",
            "passed": self.passed,
            "checks": [c.model_dump() for c in self.checks],
        }
