"""GF(2) linear algebra on int bitsets (bit i of a row = column i)."""

from __future__ import annotations


def rref(rows):
    """Row-reduce a list of int rows over GF(2).

    Returns (reduced nonzero rows, their pivot columns), pivots ascending.
    Rows are fully reduced: no row has a bit at another row's pivot.
    """
    basis = []  # list of (pivot, row)
    for row in rows:
        for piv, r in basis:
            if (row >> piv) & 1:
                row ^= r
        if row:
            piv = row.bit_length() - 1
            basis = [(p, r ^ row if (r >> piv) & 1 else r) for p, r in basis]
            basis.append((piv, row))
            basis.sort()
    return [r for _, r in basis], [p for p, _ in basis]


def rank(rows):
    return len(rref(rows)[0])


def reduce_row(row, reduced_rows):
    """Reduce row against the output rows of :func:`rref`."""
    for r in reduced_rows:
        piv = r.bit_length() - 1
        if (row >> piv) & 1:
            row ^= r
    return row


def in_span(row, reduced_rows):
    return reduce_row(row, reduced_rows) == 0


def _reduce_aug(cur, mask, rowof):
    # rowof: pivot -> augmented row whose top mask-bit is that pivot;
    # descending pivot order keeps the reduction one-pass correct
    for piv in sorted(rowof, reverse=True):
        if (cur >> piv) & 1:
            cur ^= rowof[piv]
    return cur


def kernel_basis(rows, n_cols):
    """Basis of {x : sum_i x_i * rows[i] = 0} as int bitmasks over i."""
    assert len(rows) == n_cols
    shift = max((r.bit_length() for r in rows), default=0)
    mask = (1 << shift) - 1
    rowof = {}
    kernel = []
    for i in range(n_cols):
        cur = _reduce_aug(rows[i] | (1 << (shift + i)), mask, rowof)
        if cur & mask:
            rowof[(cur & mask).bit_length() - 1] = cur
        else:
            kernel.append(cur >> shift)
    return kernel


def solve(rows, target):
    """Solve sum_i x_i rows[i] = target over GF(2); bitmask x or None."""
    shift = max([r.bit_length() for r in rows] + [target.bit_length()], default=0)
    mask = (1 << shift) - 1
    rowof = {}
    for i, row in enumerate(rows):
        cur = _reduce_aug(row | (1 << (shift + i)), mask, rowof)
        if cur & mask:
            rowof[(cur & mask).bit_length() - 1] = cur
    cur = _reduce_aug(target, mask, rowof)
    if cur & mask:
        return None
    return cur >> shift
