"""The Yang-Baxter map of a skew brace, and exhaustive equation checking.

A candidate solution is any map R: B x B -> B x B on the carrier, stored as
an n x n table of output pairs. The braid-style equation checked here is

    (R x id)(id x R)(R x id) = (id x R)(R x id)(id x R)      on B^3,

with the rightmost factor applied first. That composition order is the one
convention in this package most likely to be implemented backwards, so two
independent evaluators are provided: :func:`check_ybe` walks each triple
stepwise, while :func:`check_ybe_materialized` builds the six factor maps on
B^3 explicitly and composes them as lookup tables. They must always agree.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from .braces import CarrierMismatchError, CheckResult, SkewBrace, sigma, tau


@dataclass(frozen=True)
class YbeMap:
    """A map B x B -> B x B as a table of output pairs r[a][b] = R(a, b)."""

    n: int
    r: tuple[tuple[tuple[int, int], ...], ...]

    def __post_init__(self) -> None:
        n = self.n
        if n < 1:
            raise ValueError(f"carrier size must be positive, got {n}")
        rows = []
        for row in self.r:
            rows.append(tuple((int(p[0]), int(p[1])) for p in row))
        rows = tuple(rows)
        if len(rows) != n or any(len(row) != n for row in rows):
            raise ValueError(f"map table must be {n}x{n}")
        for row in rows:
            for first, second in row:
                if not (0 <= first < n and 0 <= second < n):
                    raise ValueError(f"output pair ({first}, {second}) outside 0..{n - 1}")
        object.__setattr__(self, "r", rows)


def build_r(brace: SkewBrace) -> YbeMap:
    """R(a, b) = (sigma_a(b), tau_b(a)) for all pairs."""
    n = brace.n
    rows = tuple(
        tuple((sigma(brace, a, b), tau(brace, b, a)) for b in range(n))
        for a in range(n)
    )
    return YbeMap(n, rows)


def swap_map(n: int) -> YbeMap:
    """R(a, b) = (b, a), a solution on any carrier."""
    return YbeMap(n, tuple(tuple((b, a) for b in range(n)) for a in range(n)))


def _sides_at(r, a: int, b: int, c: int) -> tuple[tuple[int, int, int], tuple[int, int, int]]:
    # Left side: (R x id), then (id x R), then (R x id).
    d, e = r[a][b]
    f, g = r[e][c]
    h, k = r[d][f]
    # Right side: (id x R), then (R x id), then (id x R).
    q, rr = r[b][c]
    s, t = r[a][q]
    v, w = r[t][rr]
    return (h, k, g), (s, v, w)


def ybe_violations(rmap: YbeMap) -> Iterator[tuple[int, int, int]]:
    """Yield every triple where the two sides of the equation differ."""
    n = rmap.n
    r = rmap.r
    for a in range(n):
        for b in range(n):
            for c in range(n):
                lhs, rhs = _sides_at(r, a, b, c)
                if lhs != rhs:
                    yield (a, b, c)


def _scan_chunk(args: tuple[YbeMap, int, int]) -> tuple[int, int, int] | None:
    rmap, lo, hi = args
    n = rmap.n
    r = rmap.r
    for a in range(lo, hi):
        for b in range(n):
            for c in range(n):
                lhs, rhs = _sides_at(r, a, b, c)
                if lhs != rhs:
                    return (a, b, c)
    return None


def check_ybe(rmap: YbeMap, jobs: int = 1) -> CheckResult:
    """Exhaustively evaluate both sides over all n^3 triples, stepwise.

    With jobs > 1 the sweep is partitioned by the first coordinate; each
    worker reports its first local witness and the smallest one wins, so the
    result is identical to the serial scan.
    """
    if jobs <= 1 or rmap.n < 2:
        witness = next(ybe_violations(rmap), None)
        return CheckResult(witness is None, witness)
    n = rmap.n
    jobs = min(jobs, n)
    bounds = [(n * i) // jobs for i in range(jobs + 1)]
    chunks = [(rmap, bounds[i], bounds[i + 1]) for i in range(jobs)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        found = [w for w in pool.map(_scan_chunk, chunks) if w is not None]
    witness = min(found) if found else None
    return CheckResult(witness is None, witness)


def check_ybe_materialized(rmap: YbeMap) -> CheckResult:
    """Independent evaluator: composes explicit maps on B^3.

    Builds (R x id) and (id x R) as flat lookup tables over encoded triples
    and composes them rightmost-first, then compares the two composites
    entrywise. Triples are encoded so index order equals lexicographic order.
    """
    n = rmap.n
    r = rmap.r
    size = n * n * n
    r_x_id = [0] * size
    id_x_r = [0] * size
    idx = 0
    for a in range(n):
        for b in range(n):
            d, e = r[a][b]
            left_base = (d * n + e) * n
            for c in range(n):
                r_x_id[idx] = left_base + c
                q, rr = r[b][c]
                id_x_r[idx] = (a * n + q) * n + rr
                idx += 1

    def compose(outer: list[int], inner: list[int]) -> list[int]:
        return [outer[i] for i in inner]

    lhs = compose(r_x_id, compose(id_x_r, r_x_id))
    rhs = compose(id_x_r, compose(r_x_id, id_x_r))
    for i in range(size):
        if lhs[i] != rhs[i]:
            a, rest = divmod(i, n * n)
            b, c = divmod(rest, n)
            return CheckResult(False, (a, b, c))
    return CheckResult(True)


def check_nondegenerate(rmap: YbeMap) -> bool:
    """True iff b -> first(R(a, b)) is bijective for every a, and
    a -> second(R(a, b)) is bijective for every b."""
    n = rmap.n
    r = rmap.r
    full = set(range(n))
    for a in range(n):
        if {r[a][b][0] for b in range(n)} != full:
            return False
    for b in range(n):
        if {r[a][b][1] for a in range(n)} != full:
            return False
    return True


def check_bijective(rmap: YbeMap) -> bool:
    """True iff R is a bijection of B x B (all output pairs distinct)."""
    n = rmap.n
    outputs = {pair for row in rmap.r for pair in row}
    return len(outputs) == n * n


def check_product_preservation(brace: SkewBrace, rmap: YbeMap) -> CheckResult:
    """Exhaustive check that R(a, b) = (s, t) implies s o t = a o b."""
    if brace.n != rmap.n:
        raise CarrierMismatchError(f"carrier sizes differ: {brace.n} vs {rmap.n}")
    c = brace.circ.table
    for a in range(brace.n):
        for b in range(brace.n):
            s, t = rmap.r[a][b]
            if c[s][t] != c[a][b]:
                return CheckResult(False, (a, b))
    return CheckResult(True)


# --- export/import formats --------------------------------------------------
#
# JSON: {"n": <int>, "r": <n x n array of [first, second] pairs>}.
# CSV: n^2 lines "a,b,first,second" in lexicographic (a, b) order, no header.


def rmap_to_json(rmap: YbeMap) -> str:
    return json.dumps(
        {"n": rmap.n, "r": [[[f, s] for f, s in row] for row in rmap.r]}
    )


def parse_rmap_json(text: str) -> YbeMap:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict) or "n" not in obj or "r" not in obj:
        raise ValueError('expected an object with fields "n" and "r"')
    n = obj["n"]
    if not isinstance(n, int):
        raise ValueError(f'"n" must be an integer, got {n!r}')
    rows = obj["r"]
    if not isinstance(rows, list):
        raise ValueError('"r" must be an array of arrays of pairs')
    try:
        table = tuple(tuple((pair[0], pair[1]) for pair in row) for row in rows)
    except (TypeError, IndexError):
        raise ValueError('"r" entries must be [first, second] pairs') from None
    return YbeMap(n, table)


def rmap_to_csv(rmap: YbeMap) -> str:
    lines = []
    for a in range(rmap.n):
        for b in range(rmap.n):
            f, s = rmap.r[a][b]
            lines.append(f"{a},{b},{f},{s}")
    return "\n".join(lines) + "\n"
