"""OEIS b-file ingestion and reconciliation of computed sequences against
them.  The core is offline: b-files are local inputs, parsing and
comparison are pure, and each mismatch is reported with its index and
both values.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .kary import KSParams, avoid_count


class BFileParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class BFile:
    """Parsed b-file: (index, value) pairs with strictly increasing indices."""

    entries: tuple[tuple[int, int], ...]


def parse_bfile(text: str) -> BFile:
    """Parse OEIS b-file text: one "index value" pair per line, blank lines
    and lines starting with '#' ignored."""
    entries = []
    last_index = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise BFileParseError(lineno, f"expected 'index value', got {line!r}")
        try:
            index, value = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise BFileParseError(lineno, f"non-integer token in {line!r}") from None
        if last_index is not None and index <= last_index:
            raise BFileParseError(lineno, f"index {index} not increasing")
        last_index = index
        entries.append((index, value))
    return BFile(tuple(entries))


def render_bfile(bfile: BFile) -> str:
    return "".join(f"{i} {v}\n" for i, v in bfile.entries)


def _avoid_term(k: int, s: int):
    params = KSParams(k, s)

    def term(n: int) -> int:
        return avoid_count(params, n)[n]

    return term


def step_up_avoiders(n: int, k: int) -> int:
    """Number of k-ary words of length n with no adjacent pair (a, a+1),
    extended by the conventions w[n][0] = [n == 0] and w[0][k] = 1."""
    if k == 0:
        return 1 if n == 0 else 0
    return avoid_count(KSParams(k, 1), n)[n]


def step_up_antidiagonals(count: int) -> list[int]:
    """The square array step_up_avoiders(n, k) read by anti-diagonals
    n + k = 0, 1, 2, ... with n ascending inside each diagonal."""
    out = []
    diag = 0
    while len(out) < count:
        for n in range(diag + 1):
            out.append(step_up_avoiders(n, diag - n))
            if len(out) == count:
                break
        diag += 1
    return out


def _antidiagonal_term(n: int) -> int:
    return step_up_antidiagonals(n + 1)[n]


GENERATORS = {
    "avoid-step2-alphabet3": _avoid_term(3, 2),
    "avoid-step2-alphabet4": _avoid_term(4, 2),
    "avoid-step2-alphabet5": _avoid_term(5, 2),
    "step-up-antidiagonals": _antidiagonal_term,
}


@dataclass(frozen=True)
class CheckSpec:
    """What to compare: bfile value at index m against generator(m - shift)."""

    sequence_id: str
    generator: str
    shift: int = 0
    length: int = 20

    def __post_init__(self):
        if self.length < 1:
            raise ValueError("compare length must be >= 1")


DEFAULT_CHECKS = {
    "A007070": CheckSpec("A007070", "avoid-step2-alphabet4", shift=0),
    "A200676": CheckSpec("A200676", "avoid-step2-alphabet5", shift=3),
    "A277666": CheckSpec("A277666", "step-up-antidiagonals", shift=0),
}


@dataclass
class ReconcileReport:
    sequence_id: str
    generator: str
    shift: int
    rows: list = field(default_factory=list)
    passed: bool = False
    complete: bool = False

    def to_dict(self):
        return {
            "sequence": self.sequence_id,
            "generator": self.generator,
            "shift": self.shift,
            "checked": len(self.rows),
            "passed": self.passed,
            "complete": self.complete,
            "rows": self.rows,
        }


def reconcile(spec: CheckSpec, bfile: BFile) -> ReconcileReport:
    """Compare the first `spec.length` usable b-file entries against the
    registered generator; entries whose shifted index is negative are
    outside the generator's range and skipped."""
    gen = GENERATORS[spec.generator]
    report = ReconcileReport(spec.sequence_id, spec.generator, spec.shift)
    for index, expected in bfile.entries:
        if len(report.rows) == spec.length:
            break
        n = index - spec.shift
        if n < 0:
            continue
        computed = gen(n)
        report.rows.append(
            {
                "index": index,
                "expected": str(expected),
                "computed": str(computed),
                "equal": computed == expected,
            }
        )
    report.complete = len(report.rows) == spec.length
    report.passed = bool(report.rows) and all(r["equal"] for r in report.rows)
    return report
