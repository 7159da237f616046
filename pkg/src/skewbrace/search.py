"""Enumeration of groups and skew braces of small order, two independent ways.

The production route enumerates group tables by assigning left-translation
rows and closing under composition (row a is the permutation x -> a.x, and
row(a) . row(b) must equal row(a.b), so only generator rows are free), then
enumerates braces on each group by assigning, element by element, which dot
automorphism plays sigma_x, closing under sigma_{x o y} = sigma_x sigma_y.

The oracle route is deliberately naive: generate every Latin square with
identity row/column by cell-level backtracking, keep the associative ones,
and filter pairs of tables by the compatibility sweep. It is feasible only
for order <= 5 and exists purely to cross-validate the production route;
any disagreement between the two is a bug, never a tolerance.

Catalogs are canonically sorted (lexicographic on the concatenated
circ-then-dot tables) so that both routes, and repeated runs, produce
byte-identical output. Up-to-isomorphism entries are canonical forms: the
lexicographically smallest relabeling fixing 0.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from pathlib import Path
from typing import Iterator, Sequence

from .braces import CarrierMismatchError, SkewBrace, check_compatibility
from .groups import GroupTable, _element_orders, _table_isomorphisms, automorphisms

#: Largest order the production enumerators accept.
MAX_ORDER = 8
#: Largest order the naive oracle accepts (the double-table space above
#: this is infeasible).
ORACLE_MAX_ORDER = 5


class OrderTooLargeError(ValueError):
    """Requested order exceeds the supported bound."""


def _check_order(order: int, bound: int) -> None:
    if order < 1:
        raise ValueError(f"order must be at least 1, got {order}")
    if order > bound:
        raise OrderTooLargeError(f"order {order} exceeds the supported bound {bound}")


@dataclass(frozen=True)
class BraceCatalog:
    """A canonically ordered list of braces of one order.

    Entries are pairwise distinct; when up_to_iso is set they are pairwise
    non-isomorphic canonical forms.
    """

    order: int
    braces: tuple[SkewBrace, ...]
    up_to_iso: bool


def brace_sort_key(brace: SkewBrace) -> tuple[int, ...]:
    """Lexicographic key on the concatenated circ-then-dot tables."""
    return tuple(v for row in brace.circ.table for v in row) + tuple(
        v for row in brace.dot.table for v in row
    )


# --- group table enumeration (production route) -----------------------------


def _closure_tables(n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Yield every group table on 0..n-1 with identity 0.

    Rows are left translations; assigning row a and row b forces row a.b to
    be their composition, so the search branches only on generator rows and
    prunes on the first inconsistent or column-colliding forced row.
    """
    if n == 1:
        yield ((0,),)
        return
    rows: list[tuple[int, ...] | None] = [tuple(range(n))] + [None] * (n - 1)
    cols: list[set[int]] = [{z} for z in range(n)]

    def put(index: int, perm: tuple[int, ...], trail: list[int]) -> None:
        rows[index] = perm
        for z in range(n):
            cols[z].add(perm[z])
        trail.append(index)

    def undo(trail: list[int]) -> None:
        for index in reversed(trail):
            perm = rows[index]
            rows[index] = None
            for z in range(n):
                cols[z].remove(perm[z])  # type: ignore[index]

    def close(start: int, trail: list[int]) -> bool:
        queue = [start]
        while queue:
            u = queue.pop()
            for v in range(n):
                if rows[v] is None:
                    continue
                for x, y in ((u, v), (v, u)):
                    rx = rows[x]
                    ry = rows[y]
                    c = rx[y]
                    comp = tuple(rx[ry[z]] for z in range(n))
                    rc = rows[c]
                    if rc is not None:
                        if rc != comp:
                            return False
                    else:
                        if any(comp[z] in cols[z] for z in range(1, n)):
                            return False
                        put(c, comp, trail)
                        queue.append(c)
        return True

    def candidates(a: int) -> list[tuple[int, ...]]:
        out: list[tuple[int, ...]] = []
        prefix = [a]
        used = {a}

        def extend(z: int) -> None:
            if z == n:
                out.append(tuple(prefix))
                return
            for v in range(n):
                if v not in used and v not in cols[z]:
                    prefix.append(v)
                    used.add(v)
                    extend(z + 1)
                    prefix.pop()
                    used.remove(v)

        extend(1)
        return out

    def dfs() -> Iterator[tuple[tuple[int, ...], ...]]:
        a = next((i for i in range(n) if rows[i] is None), None)
        if a is None:
            yield tuple(rows)  # type: ignore[arg-type]
            return
        for perm in candidates(a):
            trail: list[int] = []
            put(a, perm, trail)
            if close(a, trail):
                yield from dfs()
            undo(trail)

    yield from dfs()


@lru_cache(maxsize=None)
def _all_tables(order: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    return tuple(sorted(_closure_tables(order)))


def all_group_tables(order: int) -> list[GroupTable]:
    """Every group table on 0..order-1 with identity 0, sorted."""
    _check_order(order, MAX_ORDER)
    return [GroupTable(order, rows) for rows in _all_tables(order)]


def _class_representatives(
    tables: Sequence[tuple[tuple[int, ...], ...]],
) -> list[tuple[tuple[int, ...], ...]]:
    """Partition tables into isomorphism classes; return the lexicographically
    smallest member of each class, sorted."""
    classes: list[tuple[tuple[int, ...], list]] = []
    for rows in tables:
        key = tuple(sorted(_element_orders(rows)))
        for cls_key, members in classes:
            if cls_key == key and next(
                _table_isomorphisms(members[0], rows), None
            ) is not None:
                members.append(rows)
                break
        else:
            classes.append((key, [rows]))
    return sorted(min(members) for _, members in classes)


@lru_cache(maxsize=None)
def _group_reps(order: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    return tuple(_class_representatives(_all_tables(order)))


def enumerate_groups(order: int) -> list[GroupTable]:
    """All groups of the given order up to isomorphism, one canonical table
    (lexicographically smallest relabeling fixing 0) per class, sorted."""
    _check_order(order, MAX_ORDER)
    return [GroupTable(order, rows) for rows in _group_reps(order)]


def group_isomorphic(g1: GroupTable, g2: GroupTable) -> bool:
    """Brute-force isomorphism test over bijections fixing 0."""
    if g1.n != g2.n:
        return False
    return next(_table_isomorphisms(g1.table, g2.table), None) is not None


# --- group table enumeration (naive oracle route) ----------------------------


def _naive_latin_squares(n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Cell-by-cell backtracking over Latin squares with identity row/column."""
    if n == 1:
        yield ((0,),)
        return
    rows: list[list[int | None]] = [list(range(n))]
    rows += [[a] + [None] * (n - 1) for a in range(1, n)]
    row_used = [set(range(n))] + [{a} for a in range(1, n)]
    col_used = [set(range(n))] + [{z} for z in range(1, n)]
    cells = [(a, b) for a in range(1, n) for b in range(1, n)]

    def fill(k: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if k == len(cells):
            yield tuple(tuple(row) for row in rows)  # type: ignore[arg-type]
            return
        a, b = cells[k]
        for v in range(n):
            if v in row_used[a] or v in col_used[b]:
                continue
            rows[a][b] = v
            row_used[a].add(v)
            col_used[b].add(v)
            yield from fill(k + 1)
            rows[a][b] = None
            row_used[a].remove(v)
            col_used[b].remove(v)

    yield from fill(0)


def _is_associative(rows: Sequence[Sequence[int]]) -> bool:
    n = len(rows)
    for a in range(n):
        ra = rows[a]
        for b in range(n):
            left = rows[ra[b]]
            rb = rows[b]
            for c in range(n):
                if left[c] != ra[rb[c]]:
                    return False
    return True


@lru_cache(maxsize=None)
def _naive_tables(order: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    return tuple(
        rows for rows in sorted(_naive_latin_squares(order)) if _is_associative(rows)
    )


# --- brace enumeration on a fixed dot group ----------------------------------


def enumerate_braces_on_group(group: GroupTable) -> list[SkewBrace]:
    """All circ tables making (group, circ) a skew brace, sorted.

    Searches assignments x -> sigma_x over Aut(group) with
    x o y := x . sigma_x(y); assigning sigma on two elements forces it on
    their circ product, so only generator elements are branched on. Every
    completed assignment is re-validated through the SkewBrace constructor,
    which independently sweeps the compatibility condition.
    """
    n = group.n
    dot = group.table
    auts = [perm.image for perm in automorphisms(group)]
    if auts[0] != tuple(range(n)):
        raise AssertionError("automorphism list must start with the identity")
    k = len(auts)
    aindex = {image: i for i, image in enumerate(auts)}
    compose = [
        [aindex[tuple(auts[i][auts[j][z]] for z in range(n))] for j in range(k)]
        for i in range(k)
    ]
    assign: list[int | None] = [None] * n
    assign[0] = 0
    found: list[SkewBrace] = []

    def close(start: int, trail: list[int]) -> bool:
        queue = [start]
        while queue:
            u = queue.pop()
            for v in range(n):
                if assign[v] is None:
                    continue
                for x, y in ((u, v), (v, u)):
                    ax = assign[x]
                    ay = assign[y]
                    z = dot[x][auts[ax][y]]
                    forced = compose[ax][ay]
                    az = assign[z]
                    if az is None:
                        assign[z] = forced
                        trail.append(z)
                        queue.append(z)
                    elif az != forced:
                        return False
        return True

    def dfs() -> None:
        x = next((i for i in range(n) if assign[i] is None), None)
        if x is None:
            circ_rows = tuple(
                tuple(dot[e][auts[assign[e]][y]] for y in range(n))
                for e in range(n)
            )
            found.append(SkewBrace(group, GroupTable(n, circ_rows)))
            return
        for ai in range(k):
            trail = [x]
            assign[x] = ai
            if close(x, trail):
                dfs()
            for e in trail:
                assign[e] = None

    dfs()
    found.sort(key=brace_sort_key)
    return found


# --- isomorphism, canonical forms, deduplication ------------------------------


def brace_isomorphic(b1: SkewBrace, b2: SkewBrace) -> bool:
    """True iff some bijection fixing 0 transports both tables of b1 onto b2."""
    if b1.n != b2.n:
        raise CarrierMismatchError(f"carrier sizes differ: {b1.n} vs {b2.n}")
    return (
        next(
            _table_isomorphisms(
                b1.dot.table, b2.dot.table, b1.circ.table, b2.circ.table
            ),
            None,
        )
        is not None
    )


def _relabel(rows: Sequence[Sequence[int]], p: Sequence[int], q: Sequence[int]) -> tuple:
    n = len(rows)
    return tuple(tuple(p[rows[q[a]][q[b]]] for b in range(n)) for a in range(n))


def canonical_brace(brace: SkewBrace) -> SkewBrace:
    """The lexicographically smallest (circ, dot) relabeling fixing 0."""
    n = brace.n
    dot = brace.dot.table
    circ = brace.circ.table
    best: tuple | None = None
    q = [0] * n
    for tail in permutations(range(1, n)):
        p = (0,) + tail
        for i, v in enumerate(p):
            q[v] = i
        cand_circ = _relabel(circ, p, q)
        if best is not None and cand_circ > best[0]:
            continue
        cand = (cand_circ, _relabel(dot, p, q))
        if best is None or cand < best:
            best = cand
    assert best is not None
    return SkewBrace(GroupTable(n, best[1]), GroupTable(n, best[0]))


def _dedup_by_aut_orbit(raw: Sequence[SkewBrace]) -> list[SkewBrace]:
    # Braces sharing a dot table are isomorphic exactly when their circ
    # tables lie in one Aut(dot) orbit; braces on non-isomorphic dot
    # representatives are never isomorphic.
    by_dot: dict[tuple, list[SkewBrace]] = {}
    for brace in raw:
        by_dot.setdefault(brace.dot.table, []).append(brace)
    reps: list[SkewBrace] = []
    for members in by_dot.values():
        auts = [perm.image for perm in automorphisms(members[0].dot)]
        inverses = []
        for p in auts:
            q = [0] * len(p)
            for i, v in enumerate(p):
                q[v] = i
            inverses.append(tuple(q))
        seen: dict[tuple, SkewBrace] = {}
        for brace in members:
            key = min(
                _relabel(brace.circ.table, p, q) for p, q in zip(auts, inverses)
            )
            if key not in seen:
                seen[key] = brace
        reps.extend(seen.values())
    return sorted((canonical_brace(b) for b in reps), key=brace_sort_key)


def _dedup_pairwise(raw: Sequence[SkewBrace]) -> list[SkewBrace]:
    reps: list[SkewBrace] = []
    for brace in raw:
        if not any(brace_isomorphic(brace, rep) for rep in reps):
            reps.append(brace)
    return sorted((canonical_brace(b) for b in reps), key=brace_sort_key)


def deduplicate_catalog(catalog: BraceCatalog, pairwise: bool = False) -> BraceCatalog:
    """Collapse a raw catalog to canonical forms, one per isomorphism class.

    The default route groups circ tables into Aut(dot) orbits; the pairwise
    route runs brute-force isomorphism tests instead (used by the oracle so
    the two enumerators do not share their class partitioning).
    """
    if catalog.up_to_iso:
        return catalog
    dedup = _dedup_pairwise if pairwise else _dedup_by_aut_orbit
    return BraceCatalog(catalog.order, tuple(dedup(catalog.braces)), True)


# --- the two enumerators ------------------------------------------------------


def enumerate_braces(order: int, up_to_iso: bool = False, jobs: int = 1) -> BraceCatalog:
    """All skew braces of the given order via the automorphism-assignment
    search, as a canonical catalog.

    Raw catalogs range over the canonical dot representative of each group
    class; with up_to_iso, entries are canonical forms, one per brace
    isomorphism class. jobs > 1 spreads the per-group searches over worker
    processes; output is identical for any jobs value.
    """
    _check_order(order, MAX_ORDER)
    groups = enumerate_groups(order)
    if jobs > 1 and len(groups) > 1:
        with ProcessPoolExecutor(max_workers=min(jobs, len(groups))) as pool:
            per_group = list(pool.map(enumerate_braces_on_group, groups))
    else:
        per_group = [enumerate_braces_on_group(g) for g in groups]
    raw = sorted((b for braces in per_group for b in braces), key=brace_sort_key)
    catalog = BraceCatalog(order, tuple(raw), False)
    if up_to_iso:
        catalog = deduplicate_catalog(catalog)
    return catalog


def oracle_enumerate(order: int, up_to_iso: bool = False) -> BraceCatalog:
    """Naive cross-validation enumerator (order <= 5 only).

    Generates every pair of group tables sharing identity 0 whose dot member
    is a canonical class representative, and keeps the pairs passing the
    compatibility sweep. Must agree with enumerate_braces entry for entry.
    """
    _check_order(order, ORACLE_MAX_ORDER)
    tables = _naive_tables(order)
    reps = _class_representatives(tables)
    raw: list[SkewBrace] = []
    for rep in reps:
        dot = GroupTable(order, rep)
        for rows in tables:
            circ = GroupTable(order, rows)
            if check_compatibility(dot, circ):
                raw.append(SkewBrace(dot, circ))
    raw.sort(key=brace_sort_key)
    catalog = BraceCatalog(order, tuple(raw), False)
    if up_to_iso:
        catalog = deduplicate_catalog(catalog, pairwise=True)
    return catalog


# --- catalog export and frozen expectations -----------------------------------


def catalog_to_json(
    catalog: BraceCatalog,
    count_raw: int | None = None,
    count_up_to_iso: int | None = None,
) -> str:
    """Serialize a catalog with its metadata header; byte-stable across runs."""
    import json

    from . import __version__
    from .braces import brace_to_json_dict

    meta: dict = {
        "order": catalog.order,
        "up_to_iso": catalog.up_to_iso,
        "count": len(catalog.braces),
    }
    if count_raw is not None:
        meta["count_raw"] = count_raw
    if count_up_to_iso is not None:
        meta["count_up_to_iso"] = count_up_to_iso
    meta["tool_version"] = __version__
    meta["braces"] = [brace_to_json_dict(b) for b in catalog.braces]
    return json.dumps(meta, indent=1)


def load_expected_counts(path: str | Path | None = None) -> dict[int, tuple[int, int]]:
    """Read the frozen 'order count_raw count_up_to_iso' expectations file."""
    if path is None:
        from importlib import resources

        text = resources.files("skewbrace").joinpath("data/expected_counts.txt").read_text()
    else:
        text = Path(path).read_text()
    counts: dict[int, tuple[int, int]] = {}
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        order, raw, iso = (int(tok) for tok in line.split())
        counts[order] = (raw, iso)
    return counts
