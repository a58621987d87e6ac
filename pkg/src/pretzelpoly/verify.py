"""Formula-versus-oracle sweeps shared by the ``verify`` command and the tests."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterator

import numpy as np

from .bracket import (
    bracket_closed_general,
    bracket_closed_p11n,
    bracket_statesum,
    bracket_tangle_eval,
)
from .conway import conway_closed_p11n, conway_skein_p11n
from .diagram import (
    DEFAULT_MAX_CROSSINGS,
    KauffmanState,
    PretzelSpec,
    build_diagram,
    circle_counts,
    classify_state_general,
    classify_state_p11n,
    pq_counts,
)
from .laurent import LaurentPoly

GOLDEN_P111 = LaurentPoly({7: 1, 3: -1, -5: -1}, var="A")


@dataclass
class CheckResult:
    name: str
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def status(self) -> str:
        if self.failed:
            return "FAIL"
        if self.passed == 0:
            return "SKIP"
        return "PASS"

    def record(self, ok: bool, label) -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            self.failures.append(str(label))


def random_specs(count: int, max_k: int = 4, max_abs: int = 4, seed: int = 0) -> list[PretzelSpec]:
    rng = random.Random(seed)
    values = [v for v in range(-max_abs, max_abs + 1) if v]
    return [PretzelSpec(tuple(rng.choice(values) for _ in range(rng.randint(1, max_k))))
            for _ in range(count)]


# -- individual sweeps ----------------------------------------------------------
# Each yields (ok, label) per case, or (None, label) when the case is over budget.

Case = Iterator[tuple[bool | None, object]]


def lemma44_cases(budget: int, n_range=range(2, 11)) -> Case:
    for n in n_range:
        spec = PretzelSpec.p11n(n)
        if spec.crossing_count > budget:
            yield None, spec
            continue
        d = build_diagram(spec)
        counts = circle_counts(d)
        size = d.n_crossings
        mismatches = [mask for mask in range(1 << size)
                      if classify_state_p11n(spec, KauffmanState(mask, size)) != counts[mask]]
        yield not mismatches, f"P({spec}) mismatching states {mismatches[:5]}"


def lemma47_cases(budget: int, m_range=range(1, 5), n_range=range(2, 9)) -> Case:
    for m in m_range:
        for n in n_range:
            spec = PretzelSpec.ones_then(m, n)
            if spec.crossing_count > budget:
                yield None, spec
                continue
            d = build_diagram(spec)
            masks = np.arange(1 << d.n_crossings, dtype=np.int64)
            counts = circle_counts(d, masks)
            p, q = pq_counts(m, n, masks)
            table = {(pp, qq): classify_state_general(m, n, pp, qq)
                     for pp in range(m + 1) for qq in range(n + 1)}
            predicted = np.array([table[int(a), int(b)] for a, b in zip(p, q)], dtype=np.int64)
            yield bool(np.array_equal(predicted, counts)), f"P({spec})"


def closed_p11n_cases(budget: int, n_range=range(2, 15)) -> Case:
    for n in n_range:
        if n + 2 > budget:
            yield None, n
            continue
        ok = bracket_closed_p11n(n).polynomial == bracket_statesum((1, 1, n), max_crossings=budget).polynomial
        yield ok, f"n={n}"


def closed_general_cases(budget: int, m_range=range(1, 5), n_range=range(1, 9)) -> Case:
    for m in m_range:
        for n in n_range:
            if m + n > budget:
                yield None, (m, n)
                continue
            ok = (bracket_closed_general(m, n).polynomial
                  == bracket_statesum(PretzelSpec.ones_then(m, n), max_crossings=budget).polynomial)
            yield ok, f"m={m}, n={n}"


def cross_formula_cases(budget: int, n_range=range(2, 13)) -> Case:
    for n in n_range:
        yield bracket_closed_general(2, n).polynomial == bracket_closed_p11n(n).polynomial, f"n={n}"


def tangle_cases(budget: int, count: int = 200, seed: int = 0) -> Case:
    for spec in random_specs(count, seed=seed):
        if spec.crossing_count > budget:
            yield None, spec
            continue
        ok = bracket_tangle_eval(spec).polynomial == bracket_statesum(spec, max_crossings=budget).polynomial
        yield ok, f"P({spec})"


def mirror_cases(budget: int, count: int = 100, seed: int = 1) -> Case:
    for spec in random_specs(count, seed=seed):
        if spec.crossing_count > budget:
            yield None, spec
            continue
        left = bracket_statesum(spec.mirror(), max_crossings=budget).polynomial
        right = bracket_statesum(spec, max_crossings=budget).polynomial.substitute_inverse()
        yield left == right, f"P({spec})"


def rotation_cases(budget: int, count: int = 100, seed: int = 2) -> Case:
    for spec in random_specs(count, seed=seed):
        if spec.crossing_count > budget:
            yield None, spec
            continue
        base = bracket_statesum(spec, max_crossings=budget).polynomial
        ok = all(bracket_statesum(spec.rotate(r), max_crossings=budget).polynomial == base
                 for r in range(1, spec.k))
        yield ok, f"P({spec})"


def conway_cases(budget: int, n_range=range(-15, 16)) -> Case:
    for n in n_range:
        if n:
            yield conway_closed_p11n(n) == conway_skein_p11n(n), f"n={n}"


def golden_cases(budget: int) -> Case:
    if budget < 3:
        yield None, "P(1,1,1)"
        return
    yield bracket_statesum((1, 1, 1)).polynomial == GOLDEN_P111, "P(1,1,1)"


CHECKS: dict[str, Callable[[int], Case]] = {
    "golden": golden_cases,
    "lemma44": lemma44_cases,
    "lemma47": lemma47_cases,
    "closed_p11n": closed_p11n_cases,
    "closed_general": closed_general_cases,
    "cross_formula": cross_formula_cases,
    "tangle": tangle_cases,
    "mirror": mirror_cases,
    "rotation": rotation_cases,
    "conway": conway_cases,
}


def run_check(name: str, budget: int = DEFAULT_MAX_CROSSINGS) -> CheckResult:
    result = CheckResult(name)
    for ok, label in CHECKS[name](budget):
        if ok is None:
            result.skipped += 1
        else:
            result.record(ok, label)
    return result


def run_checks(budget: int = DEFAULT_MAX_CROSSINGS, only=None) -> list[CheckResult]:
    names = list(CHECKS) if not only else list(only)
    unknown = [n for n in names if n not in CHECKS]
    if unknown:
        raise KeyError(f"unknown check(s): {', '.join(unknown)}; choose from {', '.join(CHECKS)}")
    return [run_check(n, budget) for n in names]
