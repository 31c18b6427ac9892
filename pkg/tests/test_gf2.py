import random

from catsl11.gf2 import rref, rank, kernel_basis, solve, in_span, reduce_row


def test_rank_small():
    assert rank([0b11, 0b01, 0b10]) == 2
    assert rank([0, 0]) == 0
    assert rank([0b111]) == 1


def test_kernel_basis_matches_rank():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randint(1, 12)
        rows = [rng.getrandbits(10) for _ in range(n)]
        ker = kernel_basis(rows, n)
        assert len(ker) == n - rank(rows)
        for v in ker:
            acc = 0
            for i in range(n):
                if (v >> i) & 1:
                    acc ^= rows[i]
            assert acc == 0


def test_solve():
    rng = random.Random(11)
    for _ in range(50):
        n = rng.randint(1, 10)
        rows = [rng.getrandbits(8) for _ in range(n)]
        x = rng.getrandbits(n)
        target = 0
        for i in range(n):
            if (x >> i) & 1:
                target ^= rows[i]
        combo = solve(rows, target)
        assert combo is not None
        acc = 0
        for i in range(n):
            if (combo >> i) & 1:
                acc ^= rows[i]
        assert acc == target


def test_solve_no_solution():
    assert solve([0b01], 0b10) is None


def test_rref_fully_reduced():
    rows, pivots = rref([0b110, 0b011, 0b101])
    for i, r in enumerate(rows):
        for j, p in enumerate(pivots):
            if i != j:
                assert not (r >> p) & 1
    assert in_span(0b110 ^ 0b011, rows)
    assert reduce_row(0, rows) == 0
