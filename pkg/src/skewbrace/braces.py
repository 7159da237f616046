"""Skew left braces: two group structures on one carrier tied together.

A skew left brace is a carrier with a "dot" group and a "circ" group sharing
identity 0 and satisfying, for all x, y, z:

    x o (y . z) = (x o y) . x^-1 . (x o z)          (compatibility)

where x^-1 is the dot-inverse. From the two tables the package derives the
maps

    sigma_x(y) = x^-1 . (x o y)
    tau_y(x)   = circ_inverse(sigma_x(y)) o x o y

which feed the Yang-Baxter map R(a, b) = (sigma_a(b), tau_b(a)) in
:mod:`skewbrace.ybe`.

Every identity checked here is swept exhaustively; witnesses are the
lexicographically first failing tuple, with components ordered as the
identity's variables read.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator

import json

from .groups import GroupTable, PermMap, validate_table


class BraceError(ValueError):
    """A pair of tables cannot form a skew brace."""


class CarrierMismatchError(BraceError):
    """The two tables live on carriers of different sizes."""


class IdentityMismatchError(BraceError):
    """A table's identity element is not 0 (unreachable for validated tables)."""


class NotABraceError(BraceError):
    """Compatibility fails; carries the first witness triple."""

    def __init__(self, witness: tuple[int, int, int]):
        x, y, z = witness
        super().__init__(f"compatibility fails at (x, y, z) = ({x}, {y}, {z})")
        self.witness = witness


@dataclass(frozen=True)
class CheckResult:
    """Outcome of an exhaustive identity sweep."""

    ok: bool
    witness: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.ok


def _require_compatible_carriers(dot: GroupTable, circ: GroupTable) -> None:
    if dot.n != circ.n:
        raise CarrierMismatchError(f"carrier sizes differ: {dot.n} vs {circ.n}")
    for name, g in (("dot", dot), ("circ", circ)):
        if tuple(g.table[0]) != tuple(range(g.n)) or any(
            g.table[a][0] != a for a in range(g.n)
        ):
            raise IdentityMismatchError(f"{name} table's identity is not 0")


def compatibility_violations(dot: GroupTable, circ: GroupTable) -> Iterator[tuple[int, int, int]]:
    """Yield every (x, y, z) where x o (y.z) != (x o y) . x^-1 . (x o z)."""
    _require_compatible_carriers(dot, circ)
    n = dot.n
    d = dot.table
    dinv = dot.inv
    c = circ.table
    for x in range(n):
        cx = c[x]
        xi = dinv[x]
        for y in range(n):
            left = d[d[cx[y]][xi]]
            dy = d[y]
            for z in range(n):
                if cx[dy[z]] != left[cx[z]]:
                    yield (x, y, z)


def check_compatibility(dot: GroupTable, circ: GroupTable) -> CheckResult:
    """Exhaustively test the compatibility condition over all n^3 triples."""
    return _first(compatibility_violations(dot, circ))


def _first(violations: Iterator[tuple[int, ...]]) -> CheckResult:
    witness = next(violations, None)
    return CheckResult(witness is None, witness)


@dataclass(frozen=True)
class SkewBrace:
    """A validated skew left brace.

    Construction checks that both tables share the carrier and identity and
    that compatibility holds for all triples, so any SkewBrace in existence
    satisfies the brace axioms.
    """

    dot: GroupTable
    circ: GroupTable

    def __post_init__(self) -> None:
        witness = next(compatibility_violations(self.dot, self.circ), None)
        if witness is not None:
            raise NotABraceError(witness)

    @property
    def n(self) -> int:
        return self.dot.n


def make_brace(dot: GroupTable, circ: GroupTable) -> SkewBrace:
    """Build a SkewBrace, raising NotABraceError with the first witness
    triple if compatibility fails."""
    return SkewBrace(dot, circ)


def trivial_brace(group: GroupTable) -> SkewBrace:
    """The brace with circ = dot."""
    return SkewBrace(group, group)


def opposite_brace(group: GroupTable) -> SkewBrace:
    """The brace with x o y = y . x (the transposed table as circ)."""
    n = group.n
    transposed = tuple(tuple(group.table[b][a] for b in range(n)) for a in range(n))
    return SkewBrace(group, GroupTable(n, transposed))


def sigma(brace: SkewBrace, x: int, y: int) -> int:
    """sigma_x(y) = x^-1 . (x o y)."""
    dot = brace.dot
    dot._check_element(x)
    dot._check_element(y)
    return dot.table[dot.inv[x]][brace.circ.table[x][y]]


def tau(brace: SkewBrace, y: int, x: int) -> int:
    """tau_y(x) = circ_inverse(sigma_x(y)) o x o y, products left to right."""
    circ = brace.circ
    circ._check_element(x)
    circ._check_element(y)
    s = sigma(brace, x, y)
    return circ.table[circ.table[circ.inv[s]][x]][y]


@lru_cache(maxsize=None)
def sigma_perm(brace: SkewBrace, x: int) -> PermMap:
    """The full permutation y -> sigma_x(y); bijectivity is asserted."""
    image = tuple(sigma(brace, x, y) for y in range(brace.n))
    try:
        return PermMap(brace.n, image)
    except ValueError:
        raise AssertionError(f"sigma_{x} is not a bijection: {image!r}") from None


@lru_cache(maxsize=None)
def tau_perm(brace: SkewBrace, y: int) -> PermMap:
    """The full permutation x -> tau_y(x); bijectivity is asserted."""
    image = tuple(tau(brace, y, x) for x in range(brace.n))
    try:
        return PermMap(brace.n, image)
    except ValueError:
        raise AssertionError(f"tau_{y} is not a bijection: {image!r}") from None


# --- the identity suite -----------------------------------------------------
#
# All checks below are defined on a raw (dot, circ) pair of validated group
# tables, not on SkewBrace, so the CLI can report which identities fail on a
# pair that is not a brace at all.


def _sigma_tables(dot: GroupTable, circ: GroupTable, x: int, y: int) -> int:
    return dot.table[dot.inv[x]][circ.table[x][y]]


def _tau_tables(dot: GroupTable, circ: GroupTable, y: int, x: int) -> int:
    s = _sigma_tables(dot, circ, x, y)
    c = circ.table
    return c[c[circ.inv[s]][x]][y]


def inverse_product_violations(dot: GroupTable, circ: GroupTable) -> Iterator[tuple[int, int]]:
    """Yield every (a, b) where a^-1 . (a o b^-1) . a^-1 != (a o b)^-1."""
    _require_compatible_carriers(dot, circ)
    n = dot.n
    d, dinv, c = dot.table, dot.inv, circ.table
    for a in range(n):
        ai = dinv[a]
        for b in range(n):
            lhs = d[d[ai][c[a][dinv[b]]]][ai]
            if lhs != dinv[c[a][b]]:
                yield (a, b)


def sigma_homomorphism_violations(dot: GroupTable, circ: GroupTable) -> Iterator[tuple[int, int, int]]:
    """Yield every (x, y, z) where sigma_{x o y}(z) != sigma_x(sigma_y(z))."""
    _require_compatible_carriers(dot, circ)
    n = dot.n
    for x in range(n):
        for y in range(n):
            xy = circ.table[x][y]
            for z in range(n):
                if _sigma_tables(dot, circ, xy, z) != _sigma_tables(
                    dot, circ, x, _sigma_tables(dot, circ, y, z)
                ):
                    yield (x, y, z)


def tau_antihomomorphism_violations(dot: GroupTable, circ: GroupTable) -> Iterator[tuple[int, int, int]]:
    """Yield every (x, y, z) where tau_{y o z}(x) != tau_z(tau_y(x))."""
    _require_compatible_carriers(dot, circ)
    n = dot.n
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if _tau_tables(dot, circ, circ.table[y][z], x) != _tau_tables(
                    dot, circ, z, _tau_tables(dot, circ, y, x)
                ):
                    yield (x, y, z)


def sigma_twisted_product_violations(dot: GroupTable, circ: GroupTable) -> Iterator[tuple[int, int, int]]:
    """Yield every (x, y, z) where sigma_x(y o z) != sigma_x(y) o sigma_{tau_y(x)}(z)."""
    _require_compatible_carriers(dot, circ)
    n = dot.n
    c = circ.table
    for x in range(n):
        for y in range(n):
            sxy = _sigma_tables(dot, circ, x, y)
            tyx = _tau_tables(dot, circ, y, x)
            for z in range(n):
                if _sigma_tables(dot, circ, x, c[y][z]) != c[sxy][
                    _sigma_tables(dot, circ, tyx, z)
                ]:
                    yield (x, y, z)


def product_preservation_violations(dot: GroupTable, circ: GroupTable) -> Iterator[tuple[int, int]]:
    """Yield every (x, y) where sigma_x(y) o tau_y(x) != x o y."""
    _require_compatible_carriers(dot, circ)
    n = dot.n
    c = circ.table
    for x in range(n):
        for y in range(n):
            if c[_sigma_tables(dot, circ, x, y)][_tau_tables(dot, circ, y, x)] != c[x][y]:
                yield (x, y)


def sigma_automorphism_violations(dot: GroupTable, circ: GroupTable) -> Iterator[tuple[int, int, int]]:
    """Yield every (x, y, z) where sigma_x(y . z) != sigma_x(y) . sigma_x(z)."""
    _require_compatible_carriers(dot, circ)
    n = dot.n
    d = dot.table
    for x in range(n):
        sx = [_sigma_tables(dot, circ, x, y) for y in range(n)]
        for y in range(n):
            for z in range(n):
                if sx[d[y][z]] != d[sx[y]][sx[z]]:
                    yield (x, y, z)


def check_inverse_product(brace: SkewBrace) -> CheckResult:
    """Exhaustive a^-1 . (a o b^-1) . a^-1 = (a o b)^-1 over all pairs."""
    return _first(inverse_product_violations(brace.dot, brace.circ))


def check_sigma_homomorphism(brace: SkewBrace) -> CheckResult:
    """Exhaustive sigma_{x o y} = sigma_x sigma_y over all triples."""
    return _first(sigma_homomorphism_violations(brace.dot, brace.circ))


def check_tau_antihomomorphism(brace: SkewBrace) -> CheckResult:
    """Exhaustive tau_{y o z} = tau_z tau_y over all triples."""
    return _first(tau_antihomomorphism_violations(brace.dot, brace.circ))


def check_sigma_twisted_product(brace: SkewBrace) -> CheckResult:
    """Exhaustive sigma_x(y o z) = sigma_x(y) o sigma_{tau_y(x)}(z)."""
    return _first(sigma_twisted_product_violations(brace.dot, brace.circ))


def check_sigma_automorphism(brace: SkewBrace) -> CheckResult:
    """Exhaustive check that each sigma_x preserves the dot product."""
    return _first(sigma_automorphism_violations(brace.dot, brace.circ))


@dataclass(frozen=True)
class IdentityReport:
    name: str
    result: CheckResult


#: The identity suite, in report order. Each entry is (label, generator of
#: violation witnesses).
IDENTITY_SUITE: tuple[tuple[str, Callable[[GroupTable, GroupTable], Iterator[tuple[int, ...]]]], ...] = (
    ("compatibility", compatibility_violations),
    ("inverse product (Lemma 1)", inverse_product_violations),
    ("sigma homomorphism (Proposition 1)", sigma_homomorphism_violations),
    ("tau anti-homomorphism (Proposition 2)", tau_antihomomorphism_violations),
    ("sigma twisted product", sigma_twisted_product_violations),
    ("product preservation", product_preservation_violations),
    ("sigma automorphism", sigma_automorphism_violations),
)


def brace_identity_suite(dot: GroupTable, circ: GroupTable) -> list[IdentityReport]:
    """Run every identity check on a pair of group tables.

    The pair does not have to be a brace; failing identities report their
    first witness.
    """
    return [
        IdentityReport(name, _first(gen(dot, circ))) for name, gen in IDENTITY_SUITE
    ]


@dataclass(frozen=True)
class EquivalenceResult:
    """Joint outcome of the two brace criteria on one table pair."""

    compatibility: CheckResult
    homomorphism: CheckResult

    @property
    def consistent(self) -> bool:
        return self.compatibility.ok == self.homomorphism.ok


def check_compatibility_equivalence(dot: GroupTable, circ: GroupTable) -> EquivalenceResult:
    """Test that compatibility holds exactly when sigma is a circ-homomorphism.

    The two sweeps are independent; ``consistent`` is True when they agree
    (both pass or both fail), which is expected for every pair of group
    tables sharing identity 0.
    """
    return EquivalenceResult(
        check_compatibility(dot, circ),
        _first(sigma_homomorphism_violations(dot, circ)),
    )


# --- brace file formats -----------------------------------------------------
#
# JSON: {"n": <int>, "dot": <n x n array>, "circ": <n x n array>}.
# Text: two Cayley-table blocks (dot first), separated by one blank line;
# each block is the text format of skewbrace.groups.
#
# The *_tables variants validate the two group tables but not compatibility,
# so a caller can run the identity suite on a pair that is not a brace.


def parse_brace_tables_json(text: str) -> tuple[GroupTable, GroupTable]:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BraceError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict) or not {"n", "dot", "circ"} <= set(obj):
        raise BraceError('expected an object with fields "n", "dot" and "circ"')
    n = obj["n"]
    if not isinstance(n, int):
        raise BraceError(f'"n" must be an integer, got {n!r}')
    return validate_table(n, obj["dot"]), validate_table(n, obj["circ"])


def parse_brace_tables_text(text: str) -> tuple[GroupTable, GroupTable]:
    from .groups import parse_group_text

    blocks = [b for b in text.split("\n\n") if b.strip()]
    if len(blocks) != 2:
        raise BraceError(
            f"expected two table blocks separated by a blank line, got {len(blocks)}"
        )
    return parse_group_text(blocks[0]), parse_group_text(blocks[1])


def parse_brace_json(text: str) -> SkewBrace:
    dot, circ = parse_brace_tables_json(text)
    return SkewBrace(dot, circ)


def parse_brace_text(text: str) -> SkewBrace:
    dot, circ = parse_brace_tables_text(text)
    return SkewBrace(dot, circ)


def brace_to_json_dict(brace: SkewBrace) -> dict:
    return {
        "n": brace.n,
        "dot": [list(row) for row in brace.dot.table],
        "circ": [list(row) for row in brace.circ.table],
    }


def brace_to_json(brace: SkewBrace) -> str:
    return json.dumps(brace_to_json_dict(brace))


def brace_to_text(brace: SkewBrace) -> str:
    from .groups import group_to_text

    return group_to_text(brace.dot) + "\n" + group_to_text(brace.circ)
