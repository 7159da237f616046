"""R-map construction, both Yang-Baxter evaluators, and export formats."""

import random
from itertools import product

import pytest

import skewbrace as sb
from skewbrace.ybe import YbeMap, ybe_violations

# Swap map on two elements with the outputs of inputs (0,0) and (0,1)
# exchanged; fails the equation, first witness (0,0,0). Frozen from the
# search over all 256 self-maps of BxB (test_n2_census_and_frozen_failure).
PERTURBED_SWAP_2 = (((1, 0), (0, 0)), ((0, 1), (1, 1)))


def _stepwise_sides(r, a, b, c):
    # independent re-evaluation of the two sides, used to confirm witnesses
    d, e = r[a][b]
    f, g = r[e][c]
    h, k = r[d][f]
    q, rr = r[b][c]
    s, t = r[a][q]
    v, w = r[t][rr]
    return (h, k, g), (s, v, w)


def test_build_r_trivial_z2_is_swap():
    brace = sb.trivial_brace(sb.cyclic_group(2))
    assert sb.build_r(brace) == sb.swap_map(2)


def test_build_r_trivial_s3_is_conjugation(s3):
    rmap = sb.build_r(sb.trivial_brace(s3))
    t = s3.table
    for a in range(6):
        for b in range(6):
            assert rmap.r[a][b] == (b, t[t[s3.inv[b]][a]][b])


def test_build_r_xor_brace(xor_brace):
    assert sb.build_r(xor_brace).r[1][1] == (3, 3)


def test_swap_solves_ybe_all_small_carriers():
    for n in range(1, 9):
        assert sb.check_ybe(sb.swap_map(n)).ok
        assert sb.check_ybe_materialized(sb.swap_map(n)).ok


def test_xor_brace_solves_ybe(xor_brace):
    rmap = sb.build_r(xor_brace)
    # spot-check the sweep really covers all 64 triples
    assert sum(1 for _ in product(range(4), repeat=3)) == 64
    assert sb.check_ybe(rmap).ok
    assert sb.check_ybe_materialized(rmap).ok


def test_n2_census_and_frozen_failure():
    # all 4^4 self-maps of BxB for n = 2: both evaluators agree everywhere,
    # solutions and non-solutions both occur
    outs = [(a, b) for a in range(2) for b in range(2)]
    n_solutions = 0
    for combo in product(range(4), repeat=4):
        rmap = YbeMap(
            2, ((outs[combo[0]], outs[combo[1]]), (outs[combo[2]], outs[combo[3]]))
        )
        step = sb.check_ybe(rmap)
        mat = sb.check_ybe_materialized(rmap)
        assert (step.ok, step.witness) == (mat.ok, mat.witness)
        if step.ok:
            n_solutions += 1
    assert n_solutions == 43

    # the frozen perturbed swap is one of the non-solutions
    swap = sb.swap_map(2)
    rows = [list(row) for row in swap.r]
    rows[0][0], rows[0][1] = rows[0][1], rows[0][0]
    assert tuple(tuple(row) for row in rows) == PERTURBED_SWAP_2


def test_perturbed_swap_fails_with_witness():
    rmap = YbeMap(2, PERTURBED_SWAP_2)
    result = sb.check_ybe(rmap)
    assert not result.ok
    assert result.witness == (0, 0, 0)
    lhs, rhs = _stepwise_sides(rmap.r, 0, 0, 0)
    assert lhs != rhs
    assert sb.check_ybe_materialized(rmap).witness == (0, 0, 0)


def test_evaluators_agree_on_random_maps():
    rng = random.Random(404)
    for n in (1, 2, 3, 4):
        for _ in range(30):
            rows = tuple(
                tuple((rng.randrange(n), rng.randrange(n)) for _ in range(n))
                for _ in range(n)
            )
            rmap = YbeMap(n, rows)
            step = sb.check_ybe(rmap)
            mat = sb.check_ybe_materialized(rmap)
            assert (step.ok, step.witness) == (mat.ok, mat.witness)


def test_check_ybe_jobs_matches_serial(xor_brace):
    good = sb.build_r(xor_brace)
    assert sb.check_ybe(good, jobs=2) == sb.check_ybe(good)
    bad = YbeMap(2, PERTURBED_SWAP_2)
    assert sb.check_ybe(bad, jobs=2) == sb.check_ybe(bad)
    # a map with failures in several first-coordinate blocks still reports
    # the lexicographically first witness
    rng = random.Random(7)
    rows = tuple(
        tuple((rng.randrange(4), rng.randrange(4)) for _ in range(4)) for _ in range(4)
    )
    noisy = YbeMap(4, rows)
    assert sb.check_ybe(noisy, jobs=3) == sb.check_ybe(noisy)


def test_nondegenerate():
    assert sb.check_nondegenerate(sb.swap_map(3))
    constant_first = YbeMap(2, (((0, 0), (0, 1)), ((0, 0), (0, 1))))
    assert not sb.check_nondegenerate(constant_first)


def test_nondegenerate_brace_maps(s3, xor_brace):
    for brace in (sb.trivial_brace(s3), sb.opposite_brace(s3), xor_brace):
        assert sb.check_nondegenerate(sb.build_r(brace))


def test_bijective(s3):
    assert sb.check_bijective(sb.swap_map(4))
    rmap = sb.build_r(sb.trivial_brace(s3))
    assert len({pair for row in rmap.r for pair in row}) == 36
    assert sb.check_bijective(rmap)
    collapse = YbeMap(2, (((0, 0), (0, 0)), ((0, 0), (0, 0))))
    assert not sb.check_bijective(collapse)


def test_product_preservation(xor_brace, s3):
    rmap = sb.build_r(xor_brace)
    # pair (1, 1): R(1,1) = (3,3) and 3 o 3 = 0 = 1 o 1
    assert rmap.r[1][1] == (3, 3)
    assert xor_brace.circ.table[3][3] == 0 == xor_brace.circ.table[1][1]
    assert sb.check_product_preservation(xor_brace, rmap).ok
    trivial = sb.trivial_brace(sb.cyclic_group(5))
    assert sb.check_product_preservation(trivial, sb.build_r(trivial)).ok
    opp = sb.opposite_brace(s3)
    assert sb.check_product_preservation(opp, sb.build_r(opp)).ok


def test_product_preservation_detects_mismatch(xor_brace, s3):
    constant = YbeMap(4, tuple(tuple((0, 0) for _ in range(4)) for _ in range(4)))
    result = sb.check_product_preservation(xor_brace, constant)
    assert not result.ok
    assert result.witness == (0, 1)
    # swap preserves products only when circ is commutative; S3 is not
    assert not sb.check_product_preservation(sb.trivial_brace(s3), sb.swap_map(6)).ok
    with pytest.raises(sb.CarrierMismatchError):
        sb.check_product_preservation(xor_brace, sb.swap_map(3))


def test_ybe_violations_stream():
    rmap = YbeMap(2, PERTURBED_SWAP_2)
    witnesses = list(ybe_violations(rmap))
    assert witnesses[0] == (0, 0, 0)
    assert witnesses == sorted(witnesses)
    assert len(witnesses) > 1


def test_ybemap_validation():
    with pytest.raises(ValueError):
        YbeMap(2, (((0, 2), (0, 0)), ((0, 0), (0, 0))))
    with pytest.raises(ValueError):
        YbeMap(2, (((0, 0),),))


def test_rmap_json_round_trip(xor_brace):
    rmap = sb.build_r(xor_brace)
    assert sb.parse_rmap_json(sb.rmap_to_json(rmap)) == rmap


def test_rmap_json_rejections():
    with pytest.raises(ValueError):
        sb.parse_rmap_json("nope")
    with pytest.raises(ValueError):
        sb.parse_rmap_json('{"n": 2}')
    with pytest.raises(ValueError):
        sb.parse_rmap_json('{"n": 2, "r": [[0, 1], [1, 0]]}')


def test_rmap_csv(s3):
    rmap = sb.build_r(sb.trivial_brace(s3))
    lines = sb.rmap_to_csv(rmap).splitlines()
    assert len(lines) == 36
    assert lines[0] == "0,0,0,0"
    a, b = 2, 5
    first, second = rmap.r[a][b]
    assert f"{a},{b},{first},{second}" in lines
