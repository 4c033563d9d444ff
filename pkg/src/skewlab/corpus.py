"""Instance generators: shift windows and restrictions of global actions."""

from __future__ import annotations

import itertools
import random
import string
from typing import Iterator, Sequence

from .action import PartialAction, TooLarge
from .groups import GroupElement, GroupSpec, subgroups

EXHAUSTIVE_GROUPS = (
    GroupSpec.cyclic(2),
    GroupSpec.cyclic(3),
    GroupSpec.cyclic(4),
    GroupSpec(0, (2, 2)),
)

RANDOM_GROUPS = (
    GroupSpec.cyclic(2),
    GroupSpec.cyclic(3),
    GroupSpec.cyclic(4),
    GroupSpec(0, (2, 2)),
    GroupSpec.cyclic(5),
    GroupSpec.cyclic(6),
)


def make_shift_window(n: int) -> PartialAction:
    """h(k) = k + 1 on {1..n}, viewed as a partial action of Z."""
    if n < 1:
        raise ValueError("window size must be at least 1")
    Z = GroupSpec.integers()
    labels = [str(k) for k in range(1, n + 1)]
    domains, maps = {}, {}
    for t in range(-(n - 1), n):
        g = Z.element(t)
        domains[g] = [str(k) for k in range(1, n + 1) if 1 <= k - t <= n]
        maps[g] = {str(k): str(k + t) for k in range(1, n + 1) if 1 <= k + t <= n}
    return PartialAction(Z, labels, domains, maps)


def restrict(
    group: GroupSpec,
    elements: Sequence[GroupElement],
    act,
    subset: Sequence,
) -> PartialAction:
    """Restrict a global action ``act(t, y)`` to ``subset``: X_t = X & t.X."""
    X = list(subset)
    Xs = set(X)
    domains, maps = {}, {}
    for t in elements:
        h = {x: act(t, x) for x in X if act(t, x) in Xs}
        if h:
            maps[t] = h
            domains[t] = list(h.values())
    return PartialAction(group, X, domains, maps)


def window_restriction(points: Sequence[int]) -> PartialAction:
    """Restriction of the translation action of Z on the integers to ``points``."""
    Z = GroupSpec.integers()
    pts = sorted(set(points))
    span = pts[-1] - pts[0]
    elements = [Z.element(t) for t in range(-span, span + 1)]
    labels = [str(k) for k in pts]
    return restrict(Z, elements, lambda t, y: str(int(y) + t.coords[0]), labels)


def coset_action(group: GroupSpec, H: frozenset) -> tuple[list, dict]:
    """The transitive G-set G/H as (points, {(t, point): point})."""
    cosets: list[frozenset] = []
    for g in group.elements():
        c = frozenset(g + h for h in H)
        if c not in cosets:
            cosets.append(c)
    index = {g: i for i, c in enumerate(cosets) for g in c}
    table = {}
    for t in group.elements():
        for i, c in enumerate(cosets):
            rep = min(c)
            table[t, i] = index[t + rep]
    return list(range(len(cosets))), table


def canonical_form(theta: PartialAction) -> PartialAction:
    """Relabel X by letters, choosing the lexicographically least encoding."""
    labels = list(theta.labels)
    letters = list(string.ascii_lowercase[: len(labels)])
    if len(labels) > 8:
        raise TooLarge("canonical relabelling is limited to |X| <= 8")
    best, best_key = None, None
    support = theta.effective_support
    for perm in itertools.permutations(letters):
        rename = dict(zip(labels, perm))
        key = tuple(
            (t.coords, tuple(sorted((rename[x], rename[y]) for x, y in theta.maps[t].items())))
            for t in support
        )
        if best_key is None or key < best_key:
            best_key, best = key, rename
    domains = {t: [best[x] for x in d] for t, d in theta.domains.items()}
    maps = {t: {best[x]: best[y] for x, y in h.items()} for t, h in theta.maps.items()}
    return PartialAction(theta.group, letters, domains, maps)


def _commuting_homs(group: GroupSpec, n: int) -> Iterator[list[tuple[int, ...]]]:
    """Images of the standard generators under homomorphisms G -> Sym(n)."""
    perms = list(itertools.permutations(range(n)))

    def power(p, k):
        out = tuple(range(n))
        for _ in range(k):
            out = tuple(p[i] for i in out)
        return out

    ident = tuple(range(n))
    choices = [[p for p in perms if power(p, order) == ident] for order in group.torsion]
    for gens in itertools.product(*choices):
        commute = all(
            tuple(a[b[i]] for i in range(n)) == tuple(b[a[i]] for i in range(n))
            for a, b in itertools.combinations(gens, 2)
        )
        if commute:
            yield list(gens)


def _perm_action(group: GroupSpec, gens):
    def act(t: GroupElement, y: int) -> int:
        for g, k in zip(gens, t.torsion_part):
            for _ in range(k):
                y = g[y]
        return y

    return act


def exhaustive_restrictions(
    groups: Sequence[GroupSpec] = EXHAUSTIVE_GROUPS, max_points: int = 3
) -> list[PartialAction]:
    """Every restriction of a global action on |Y| <= max_points, up to relabelling."""
    out: list[PartialAction] = []
    seen = set()
    for G in groups:
        elements = G.elements()
        for n in range(1, max_points + 1):
            for gens in _commuting_homs(G, n):
                act = _perm_action(G, gens)
                for k in range(1, n + 1):
                    for X in itertools.combinations(range(n), k):
                        theta = canonical_form(restrict(G, elements, act, X))
                        key = _instance_key(theta)
                        if key not in seen:
                            seen.add(key)
                            out.append(theta)
    return out


def _instance_key(theta: PartialAction):
    return (
        theta.group,
        theta.labels,
        tuple((t.coords, tuple(sorted(theta.maps[t].items()))) for t in theta.effective_support),
    )


def generate_restriction_action(seed: int, max_dim: int = 12, max_points: int = 8) -> PartialAction:
    """A random restriction instance whose skew ring has dimension <= max_dim.

    Finite groups act on disjoint unions of coset spaces G/H; Z acts by
    translation on a window of integers.  The result depends only on ``seed``.
    """
    rng = random.Random(seed)
    for _ in range(1000):
        if rng.random() < 0.2:
            m = rng.randint(1, 6)
            pts = [k for k in range(1, m + 1) if rng.random() < 0.7] or [rng.randint(1, m)]
            theta = window_restriction(pts)
        else:
            G = rng.choice(RANDOM_GROUPS)
            subs = subgroups(G)
            points, table = [], {}
            for _ in range(rng.randint(1, 3)):
                H = rng.choice(subs)
                pts, tab = coset_action(G, H)
                offset = len(points)
                points.extend(p + offset for p in pts)
                table.update({(t, i + offset): j + offset for (t, i), j in tab.items()})
            if len(points) > max_points:
                continue
            names = {p: string.ascii_lowercase[p] for p in points}
            X = [names[p] for p in points if rng.random() < 0.6] or [names[rng.choice(points)]]
            back = {v: k for k, v in names.items()}
            theta = restrict(G, G.elements(), lambda t, y: names[table[t, back[y]]], X)
        if theta.dimension <= max_dim:
            return theta
    raise TooLarge(f"no instance with dimension <= {max_dim} after 1000 draws (seed {seed})")


def random_corpus(count: int, seed: int = 0, max_dim: int = 12) -> list[PartialAction]:
    """``count`` random instances drawn from consecutive sub-seeds of ``seed``."""
    return [generate_restriction_action(seed * 100_003 + i, max_dim=max_dim) for i in range(count)]
