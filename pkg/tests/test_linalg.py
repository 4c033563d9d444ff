import itertools
import random

import pytest

from skewlab.linalg import Subspace, normalize, nullspace, solve
from skewlab.scalars import GF2, GF3, QQ


def brute_span(field, vectors, n):
    """Every linear combination, by enumeration."""
    out = set()
    for coeffs in itertools.product(field.elements(), repeat=len(vectors)):
        v = [0] * n
        for c, w in zip(coeffs, vectors):
            v = [(a + c * b) % field.p for a, b in zip(v, w)]
        out.add(tuple(v))
    return out


@pytest.mark.parametrize("field", [GF2, GF3])
def test_subspace_matches_enumerated_span(field):
    rng = random.Random(11)
    for _ in range(30):
        n = rng.randint(1, 5)
        vecs = [tuple(rng.randrange(field.p) for _ in range(n)) for _ in range(rng.randint(0, 4))]
        S = Subspace(field, n, vecs)
        span = brute_span(field, vecs, n)
        assert set(S.elements()) == span
        assert field.p ** S.dim == len(span)
        for v in itertools.product(range(field.p), repeat=n):
            assert (v in S) == (v in span)


def test_rref_is_canonical():
    a = Subspace(GF3, 3, [(1, 2, 0), (0, 1, 1)])
    b = Subspace(GF3, 3, [(1, 0, 1), (1, 1, 2)])
    assert a == b
    for p, row in zip(a.pivots, a.basis):
        assert row[p] == 1


def test_nullspace_and_solve_rational():
    m = [[1, 2, 3], [2, 4, 6]]
    m = [[QQ.coerce(x) for x in row] for row in m]
    ns = nullspace(QQ, m, 3)
    assert len(ns) == 2
    for x in ns:
        assert all(sum(a * b for a, b in zip(row, x)) == 0 for row in m)
    sol = solve(QQ, m, [QQ.coerce(1), QQ.coerce(2)], 3)
    assert sum(a * b for a, b in zip(m[0], sol)) == 1
    assert solve(QQ, m, [QQ.coerce(1), QQ.coerce(3)], 3) is None


def test_restrict_to_columns():
    S = Subspace(GF2, 3, [(1, 1, 0), (0, 1, 1)])
    R = S.restrict_to([0, 2])
    assert R.basis == ((1, 0, 1),)


def test_normalize():
    assert normalize(GF3, (0, 2, 1)) == (0, 1, 2)
