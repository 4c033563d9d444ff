"""Assemble the machine-readable reports behind the CLI commands."""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass

from . import __version__
from .action import PartialAction, TooLarge
from .corpus import exhaustive_restrictions, random_corpus
from .io import instance_to_json
from .ring import DimensionGuard, SkewRing, UnsupportedField
from .scalars import FieldSpec
from .simplicity import (
    Lemma1Search,
    SearchExhausted,
    SimplicityVerdict,
    coefficient_sum,
    ideal_closure,
    is_G_simple,
    is_simple_oracle,
    is_simple_via_theorems,
    lemma2_witness,
    nonempty_subsets,
    nonfree_obstruction,
    verify_lemma1,
    verify_lemma2,
)


@dataclass(frozen=True)
class Guards:
    max_dim: int = 64
    max_subspaces: int = 1 << 16
    bfs_depth: int = 6
    max_field_elements: int = 1 << 20

    def __post_init__(self):
        for name, value in asdict(self).items():
            if value <= 0:
                raise ValueError(f"guard {name} must be positive, got {value}")


class GuardViolation(Exception):
    """Raised by report builders when a requested computation hits a guard."""


def _labels(theta: PartialAction, xs) -> list[str]:
    return [str(x) for x in theta.sorted_labels(xs)]


def check_report(theta: PartialAction, field: FieldSpec, guards: Guards) -> dict:
    """Dynamical flags of an instance plus the ring dimension."""
    out: dict = {"dim": theta.dimension, "field": field.name}
    minimal, V = theta.is_minimal()
    out["minimal"] = minimal
    free, fixed = theta.is_free()
    out["free"] = free
    out["topologically_free"] = theta.is_topologically_free()
    witnesses: dict = {}
    if V is not None:
        witnesses["invariant_subset"] = _labels(theta, V)
    if fixed is not None:
        witnesses["fixed_point"] = {"x": str(fixed[0]), "t": fixed[1].key()}
    errors = {}
    try:
        g_simple, W, _ = is_G_simple(SkewRing(theta, field, guards.max_dim))
        out["g_simple"] = g_simple
        if W is not None:
            witnesses["g_invariant_ideal_support"] = _labels(theta, W)
    except TooLarge as exc:
        out["g_simple"] = None
        errors["g_simple"] = str(exc)
    out["orbits"] = [_labels(theta, O) for O in theta.orbits()]
    out["witnesses"] = witnesses
    if errors:
        out["errors"] = errors
    return out


def _oracle_json(ring: SkewRing, v: SimplicityVerdict) -> dict:
    if v.simple:
        return {}
    return {
        "generator": v.witnesses["generator"].to_json(),
        "ideal": v.witnesses["ideal"].to_json(),
    }


def _theorem_json(ring: SkewRing, t1: SimplicityVerdict | None, t2: SimplicityVerdict) -> tuple[dict, dict | None, dict]:
    theta = ring.action
    t2_json = {"minimal": t2.witnesses["minimal"], "free": t2.witnesses["free"], "verdict": t2.verdict}
    witnesses: dict = {}
    if "invariant_subset" in t2.witnesses:
        witnesses["invariant_subset"] = _labels(theta, t2.witnesses["invariant_subset"])
    if "fixed_point" in t2.witnesses:
        x, t = t2.witnesses["fixed_point"]
        witnesses["fixed_point"] = {"x": str(x), "t": t.key()}
    t1_json = None
    if t1 is not None:
        units = []
        for A, w in t1.witnesses["non_field_units"]:
            units.append({"A": _labels(theta, A), "non_invertible": None if w is None else w.to_json()})
        t1_json = {"g_simple": t1.witnesses["g_simple"], "non_field_units": units, "verdict": t1.verdict}
    return t2_json, t1_json, witnesses


def simplicity_report(
    theta: PartialAction,
    field: FieldSpec,
    method: str,
    guards: Guards,
    timings: bool = False,
    embed_instance: bool = True,
) -> dict:
    """Verdicts for one instance.  Raises GuardViolation naming the bound hit."""
    ring = SkewRing(theta, field, guards.max_dim)
    out: dict = {"field": field.spec_json(), "dim": ring.dim}
    if embed_instance:
        out["instance"] = instance_to_json(theta)
    clock: dict = {}
    witnesses: dict = {}
    verdicts = []
    try:
        if method in ("oracle", "both"):
            start = time.perf_counter()
            oracle = is_simple_oracle(ring, guards.max_subspaces)
            clock["oracle"] = round(1000 * (time.perf_counter() - start), 3)
            out["oracle"] = oracle.verdict
            if not oracle.simple:
                witnesses["oracle"] = _oracle_json(ring, oracle)
            verdicts.append(oracle.simple)
        if method in ("theorems", "both"):
            start = time.perf_counter()
            tv = is_simple_via_theorems(ring, guards.max_field_elements)
            clock["theorems"] = round(1000 * (time.perf_counter() - start), 3)
            t2, t1, w = _theorem_json(ring, tv.theorem1, tv.theorem2)
            out["theorem2"] = t2
            out["theorem1"] = t1
            witnesses.update(w)
            verdicts.append(tv.theorem2.simple)
            if tv.theorem1 is not None:
                verdicts.append(tv.theorem1.simple)
    except (DimensionGuard, UnsupportedField, TooLarge) as exc:
        raise GuardViolation(str(exc)) from None
    out["agree"] = len(set(verdicts)) == 1
    out["verdict"] = "simple" if all(verdicts) else "not-simple"
    out["witnesses"] = witnesses
    if timings:
        out["timings_ms"] = clock
    return out


def header(guards: Guards, **extra) -> dict:
    return {"version": __version__, "guards": asdict(guards), **extra}


def obstruction_label(theta: PartialAction) -> str:
    minimal = theta.is_minimal()[0]
    free = theta.is_free()[0]
    if minimal and free:
        return "none"
    if not minimal and not free:
        return "non-minimal+non-free"
    return "non-minimal" if not minimal else "non-free"


def build_corpus(exhaustive: bool, random_count: int, seed: int, max_dim: int = 12) -> list[tuple[str, PartialAction]]:
    out = []
    if exhaustive:
        out += [(f"exh-{i:04d}", th) for i, th in enumerate(exhaustive_restrictions())]
    if random_count:
        out += [(f"rnd-{i:04d}", th) for i, th in enumerate(random_corpus(random_count, seed, max_dim))]
    return out


def lemma_checks(theta: PartialAction, field: FieldSpec, guards: Guards, max_unit_size: int = 2) -> dict:
    """Re-run the lemma certificates on one instance and count failures."""
    ring = SkewRing(theta, field, guards.max_dim)
    out = {"lemma1": 0, "lemma1_failed": 0, "lemma1_exhausted": 0, "lemma2": 0, "lemma2_failed": 0,
           "obstructions": 0, "obstructions_failed": 0}
    if is_G_simple(ring)[0]:
        units = [A for A in nonempty_subsets(theta.labels) if len(A) <= max_unit_size]
        for i in range(ring.dim):
            r = ring.basis_element(i)
            search = Lemma1Search(ring, r, guards.bfs_depth, check_g_simple=False)
            for A in units:
                out["lemma1"] += 1
                try:
                    w = search.witness(A)
                except SearchExhausted:
                    out["lemma1_exhausted"] += 1
                    continue
                if not all(verify_lemma1(ring, r, w, A).values()):
                    out["lemma1_failed"] += 1
    minimal, free = theta.is_minimal()[0], theta.is_free()[0]
    if minimal and free:
        X = list(theta.labels)
        for i in range(ring.dim):
            J = ideal_closure(ring, [ring.basis_element(i)])
            out["lemma2"] += 1
            w = lemma2_witness(ring, J, X, guards.bfs_depth)
            if not all(verify_lemma2(ring, J, X, w).values()):
                out["lemma2_failed"] += 1
    zero = theta.group.zero
    for t in theta.effective_support:
        if t.is_zero:
            continue
        for x in theta.sorted_labels(theta.fixed_set(t)):
            out["obstructions"] += 1
            ideal = nonfree_obstruction(ring, x, t)
            sums_vanish = all(not coefficient_sum(u) for u in ideal.elements_basis())
            if not (ideal.is_proper and sums_vanish and ring.monomial(x, zero) not in ideal):
                out["obstructions_failed"] += 1
    return out


def suite_report(
    corpus: list[tuple[str, PartialAction]],
    fields: list[FieldSpec],
    guards: Guards,
    log=None,
    lemmas: bool = False,
) -> dict:
    """Oracle against both theorems for every instance and field."""
    counts = {"instances": len(corpus), "simple": 0, "not-simple": 0, "by_obstruction": {}, "skipped": 0}
    disagreements = []
    entries = []
    lemma_totals: dict = {}
    for ident, theta in corpus:
        entry: dict = {"id": ident, "instance": instance_to_json(theta), "dim": theta.dimension, "results": {}}
        verdicts = set()
        for field in fields:
            try:
                rep = simplicity_report(theta, field, "both", guards, embed_instance=False)
            except GuardViolation as exc:
                counts["skipped"] += 1
                entry["results"][field.name] = {"skipped": str(exc)}
                if log:
                    log(f"{ident} {field.name}: skipped ({exc})")
                continue
            rep.pop("instance", None)
            entry["results"][field.name] = rep
            verdicts.add(rep["verdict"])
            if not rep["agree"]:
                disagreements.append({"id": ident, "field": field.name, "kind": "oracle-vs-theorems"})
        if lemmas and fields:
            try:
                lc = lemma_checks(theta, fields[0], guards)
            except (DimensionGuard, TooLarge) as exc:
                counts["skipped"] += 1
                lc = {"skipped": str(exc)}
            entry["lemmas"] = lc
            for k, n in lc.items():
                if k != "skipped":
                    lemma_totals[k] = lemma_totals.get(k, 0) + n
            if any(lc.get(k) for k in ("lemma1_failed", "lemma1_exhausted", "lemma2_failed", "obstructions_failed")):
                disagreements.append({"id": ident, "field": fields[0].name, "kind": "lemma-certificate"})
        if len(verdicts) > 1:
            disagreements.append({"id": ident, "field": None, "kind": "field-dependence"})
        if verdicts:
            verdict = "simple" if verdicts == {"simple"} else "not-simple"
            counts[verdict] += 1
            if verdict == "not-simple":
                label = obstruction_label(theta)
                counts["by_obstruction"][label] = counts["by_obstruction"].get(label, 0) + 1
        entries.append(entry)
    if lemmas:
        counts["lemmas"] = lemma_totals
    return {
        "counts": counts,
        "disagreements": disagreements,
        "fields": [f.name for f in fields],
        "instances": entries,
    }
