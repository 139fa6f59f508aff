"""Exhaustive and sampled verification sweeps"""

import itertools
import logging
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Set, Type

import numpy as np

from applications import ChungFeller, IntegerCycle, Montagh, TreeCodec
from config import Config
from counting import CountingFormulas
from cyclelemma import CycleLemma
from seqcore import BitString, SequenceUtils
from stack_bijection import StackBijection
from stack_factory import StackFactory

logger = logging.getLogger(__name__)


class CheckCapExceeded(Exception):
    """A sweep needed more checks than its cap allows"""

    def __init__(self, suite: str, cap: int):
        super().__init__(f"Suite {suite} exceeds the cap of {cap} checked instances")
        self.suite = suite
        self.cap = cap


@dataclass(frozen=True)
class SweepLine:
    subject: str
    property: str
    observed: str
    expected: str
    passed: bool

    def format(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"{self.subject};{self.property};{self.observed};{self.expected};{verdict}"


@dataclass
class SweepReport:
    suite: str
    bounds: dict
    checked: int = 0
    failures: List[SweepLine] = field(default_factory=list)
    lines: List[SweepLine] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"{self.suite}: {self.checked} checked, {len(self.failures)} failed, {verdict}"


def _fmt(values: Iterable) -> str:
    return ",".join(str(v) for v in values)


def _nested(sets: Iterable[frozenset]) -> bool:
    """Sets ordered by size form a strictly increasing chain"""
    chain = sorted(sets, key=len)
    return all(small < large for small, large in zip(chain, chain[1:]))


class Sweep(ABC):
    """One verification suite over a bounded family of instances"""

    name = ""

    def __init__(self, bounds: dict, cap: int = Config.DEFAULT_CHECK_CAP, seed: int = Config.DEFAULT_SEED):
        self.bounds = bounds
        self.cap = cap
        self.seed = seed
        self.checked = 0

    def check(self, subject: str, prop: str, observed, expected, passed: Optional[bool] = None) -> SweepLine:
        self.checked += 1
        if self.checked > self.cap:
            raise CheckCapExceeded(self.name, self.cap)
        observed, expected = str(observed), str(expected)
        if passed is None:
            passed = observed == expected
        return SweepLine(subject, prop, observed, expected, passed)

    def qs(self) -> range:
        return range(1, self.bounds["q"] + 1)

    @abstractmethod
    def run(self) -> Iterator[SweepLine]:
        """Yields one line per checked property instance"""
        pass


class CycleSweep(Sweep):
    name = "cycle"

    def run(self) -> Iterator[SweepLine]:
        for q in self.qs():
            for length in range(1, self.bounds["max_size"] + 1):
                for k in range(length // (q + 1) + 1):
                    p = length - (q + 1) * k
                    for a in SequenceUtils.enumerate_arrangements(k, q * k + p):
                        cuts = CycleLemma.dominating_cuts(a, q)
                        yield self.check(f"{a}/q={q}", "dominating-cuts", len(cuts), p)


class StrongSweep(Sweep):
    name = "strong"

    def run(self) -> Iterator[SweepLine]:
        for q in self.qs():
            k = 0
            while (q + 1) * k + 1 <= self.bounds["max_size"]:
                expected = _fmt(range(1, q * k + 2))
                for a in SequenceUtils.enumerate_arrangements(k, q * k + 1):
                    sets = CycleLemma.good_sets(a, q)
                    subject = f"{a}/q={q}"
                    yield self.check(subject, "good-counts", _fmt(sorted(len(s) for s in sets.values())), expected)
                    yield self.check(subject, "nested", _nested(sets.values()), True)
                k += 1


class StrongerSweep(Sweep):
    name = "stronger"

    def run(self) -> Iterator[SweepLine]:
        for q in self.qs():
            k = 0
            while (q + 1) * k + 1 <= self.bounds["max_size"]:
                for a in SequenceUtils.enumerate_arrangements(k, q * k + 1):
                    zeros = a.zero_positions()
                    for size in range(1, len(zeros) + 1):
                        for S in itertools.combinations(zeros, size):
                            sets = CycleLemma.good_sets(a, q, S)
                            counts = _fmt(sorted(len(s) for s in sets.values()))
                            ok = counts == _fmt(range(1, size + 1)) and _nested(sets.values())
                            yield self.check(f"{a}/q={q}/S={_fmt(S)}", "restricted-counts-nested",
                                             counts, _fmt(range(1, size + 1)), ok)
                k += 1


class ExtendedSweep(Sweep):
    name = "extended"

    def run(self) -> Iterator[SweepLine]:
        max_size, p_max = self.bounds["max_size"], self.bounds["p"]
        for q in self.qs():
            for p in range(1, p_max + 1):
                k = 0
                while (q + 1) * k + p <= max_size:
                    for a in SequenceUtils.enumerate_arrangements(k, q * k + p):
                        broken = [c.i for c in CycleLemma.extended_bounds_check(a, q) if not c.holds]
                        yield self.check(f"{a}/q={q}", "extended-bounds", _fmt(broken) or "none", "none")

                    blocked = CycleLemma.blocked_arrangement(k, q, p)
                    loose = [c.i for c in CycleLemma.extended_bounds_check(blocked, q) if c.observed != c.bound]
                    yield self.check(f"{blocked}/q={q}", "blocked-tight", _fmt(loose) or "none", "none")
                    k += 1

        yield from self._augmentation()

    def _augmentation(self) -> Iterator[SweepLine]:
        for q in self.qs():
            for length in range(1, self.bounds["m"] + 1):
                for ones in range(length):
                    zeros = length - ones
                    if zeros <= q * ones:
                        continue
                    for b in SequenceUtils.enumerate_bitstrings(ones, zeros):
                        if b.bits[-1] != 0:
                            continue
                        stalled = [pos for pos in range(length + 1)
                                   if not self._increases(b, pos, q)]
                        yield self.check(f"{b}/q={q}", "augmentation", _fmt(stalled) or "none", "none")

    @staticmethod
    def _increases(b: BitString, position: int, q: int) -> bool:
        _, before, after = CycleLemma.augmentation_insert(b, position, q)
        return after > before


class PositionSumSweep(Sweep):
    name = "position-sum"

    def run(self) -> Iterator[SweepLine]:
        for length in range(1, self.bounds["max_size"] + 1):
            for l in range(1, length + 1):
                k = length - l
                if math.gcd(k, l) != 1:
                    continue
                for a in SequenceUtils.enumerate_arrangements(k, l):
                    residues = {total % l for _, total in CycleLemma.position_sums(a)}
                    yield self.check(str(a), "distinct-residues", len(residues), l)


class ChungFellerSweep(Sweep):
    name = "chung-feller"

    def run(self) -> Iterator[SweepLine]:
        for n in range(1, self.bounds["n"] + 1):
            share = CountingFormulas.binomial(2 * n, n) // (n + 1)
            histogram = ChungFeller.distribution(n)
            observed = _fmt(histogram.get(l, 0) for l in range(n + 1))
            yield self.check(f"n={n}", "uniform", observed, _fmt([share] * (n + 1)),
                             observed == _fmt([share] * (n + 1)) and len(histogram) == n + 1)

            mismatched = 0
            for s in SequenceUtils.enumerate_bitstrings(n, n):
                word = ChungFeller.word_from_bits(s)
                if ChungFeller.statistic(word) != ChungFeller.via_cycle_lemma(word):
                    mismatched += 1
            yield self.check(f"n={n}", "cycle-lemma-encoding", mismatched, 0)


class MontaghSweep(Sweep):
    name = "montagh"

    def run(self) -> Iterator[SweepLine]:
        reference = IntegerCycle.from_text(Config.REFERENCE_CYCLE)
        for l, rotation in sorted(Config.REFERENCE_ROTATIONS.items()):
            try:
                observed = _fmt(Montagh.linearization(reference, l))
            except RuntimeError as e:
                observed = str(e)
            yield self.check(f"{reference.to_text()}/l={l}", "rotation", observed, _fmt(rotation))

        for c in self._exhaustive_cycles():
            yield from self._check_cycle(c)

        rng = np.random.default_rng(self.seed)
        n_max = min(self.bounds["n"], Config.MONTAGH_MAX_LENGTH)
        for _ in range(Config.MONTAGH_SAMPLES):
            yield from self._check_cycle(self._random_cycle(rng, n_max))

    def _exhaustive_cycles(self) -> Iterator[IntegerCycle]:
        bound = Config.MONTAGH_EXHAUSTIVE_RANGE
        entries = range(-bound, bound + 1)
        for n in range(1, Config.MONTAGH_EXHAUSTIVE_LENGTH + 1):
            for head in itertools.product(entries, repeat=n - 1):
                last = 1 - sum(head)
                if -bound <= last <= bound:
                    yield IntegerCycle(head + (last,))

    @staticmethod
    def _random_cycle(rng: np.random.Generator, n_max: int) -> IntegerCycle:
        bound = Config.MONTAGH_ENTRY_RANGE
        n = int(rng.integers(1, n_max + 1))
        while True:
            head = rng.integers(-bound, bound + 1, size=n - 1)
            last = 1 - int(head.sum())
            if -bound <= last <= bound:
                return IntegerCycle(tuple(int(v) for v in head) + (last,))

    def _check_cycle(self, c: IntegerCycle) -> Iterator[SweepLine]:
        subject = c.to_text()
        n = c.length
        try:
            starts = [Montagh.start(c, l) for l in range(1, n + 1)]
        except RuntimeError as e:
            yield self.check(subject, "unique-rotations", str(e), "ok", False)
            return

        yield self.check(subject, "unique-rotations", len(set(starts)), n)
        yield self.check(subject, "raney-start", Montagh.raney_start(c), starts[-1])
        yield self.check(subject, "walk-steps", _fmt(Montagh.start_by_walk(c, l) for l in range(1, n + 1)),
                         _fmt(starts))

        ends = [self._positive_ends(c, start) for start in starts]
        yield self.check(subject, "nested", all(small < large for small, large in zip(ends, ends[1:])), True)

    @staticmethod
    def _positive_ends(c: IntegerCycle, start: int) -> Set[int]:
        """Indices of c that end positive partial sums from start"""
        sums = np.cumsum(np.asarray(c.rotation(start), dtype=np.int64))
        return {(start + offset) % c.length for offset in np.flatnonzero(sums > 0)}


class BijectionSweep(Sweep):
    name = "bijection"

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.factory = StackFactory()
        self.bijection = StackBijection()

    def run(self) -> Iterator[SweepLine]:
        for q in self.qs():
            for m in range(1, self.bounds["m"] + 1):
                yield from self._sweep_base(m, q)

        for n in range(self.bounds["m"] // 2 + 1):
            count = sum(1 for _ in self.factory.full_base_stacks(n, 1))
            yield self.check(f"n={n}", "coin-stacks", count, CountingFormulas.catalan(n))

    def _sweep_base(self, m: int, q: int) -> Iterator[SweepLine]:
        images: Dict[BitString, str] = {}
        per_n: Dict[int, int] = {}
        for stack in self.factory.enumerate_stacks(m, q):
            per_n[stack.n] = per_n.get(stack.n, 0) + 1
            problems = self._stack_problems(stack)
            if not problems:
                images[self.bijection.stack_to_sequence(stack)] = stack.to_text()
            yield self.check(str(stack), "bijection", _fmt(problems) or "ok", "ok")

        subject = f"m={m}/q={q}"
        satisfying = {s for ones in range(m // (q + 1) + 1)
                      for s in SequenceUtils.enumerate_bitstrings(ones, m - ones)
                      if SequenceUtils.is_q_satisfying(s, q)}
        yield self.check(subject, "injective", len(images), sum(per_n.values()))
        yield self.check(subject, "image", len(satisfying.symmetric_difference(images)), 0)
        for n, count in sorted(per_n.items()):
            yield self.check(f"{subject}/n={n}", "count", count, CountingFormulas.count_q_stacks(m, n, q))

    def _stack_problems(self, stack) -> List[str]:
        try:
            bits = self.bijection.stack_to_sequence(stack)
        except (ValueError, RuntimeError) as e:
            return [f"forward: {e}"]

        problems = []
        if self.bijection.sequence_to_stack(bits, stack.q) != stack:
            problems.append("round-trip")
        if bits.ones != stack.n:
            problems.append("ones")
        uncovered = not stack.rows or stack.rows[0][0] != 0
        if SequenceUtils.is_q_dominating(bits, stack.q) != uncovered:
            problems.append("dominance")

        analyzer = self.bijection.analyzer
        m_first = analyzer.first_return(stack)
        if m_first is not None and m_first < stack.m:
            left, right = analyzer.split(stack, m_first)
            joined = (self.bijection.stack_to_sequence(left).bits
                      + self.bijection.stack_to_sequence(right).bits)
            if joined != bits.bits:
                problems.append("concatenation")
        return problems


class RecurrenceSweep(Sweep):
    name = "recurrences"

    def run(self) -> Iterator[SweepLine]:
        m_max, n_max, k_max = self.bounds["m"], self.bounds["n"], self.bounds["k"]
        for q in self.qs():
            table = CountingFormulas.recurrence_table(m_max, q)
            wrong = [f"{m}:{n}" for (m, n), value in sorted(table.entries.items())
                     if value != CountingFormulas.count_q_stacks(m, n, q)]
            yield self.check(f"m<={m_max}/q={q}", "first-return-table", _fmt(wrong) or "none", "none")

            for n in range(n_max + 1):
                yield self.check(f"n={n}/q={q}", "hilton-pedersen",
                                 CountingFormulas.hp_recurrence(n, q), CountingFormulas.generalized_catalan(n, q))

            for k in range(1, k_max + 1):
                if (q + 1) * k - 2 > m_max:
                    break
                yield self.check(f"k={k}/q={q}", "primitive-factor",
                                 table.get((q + 1) * k - 2, k - 1), CountingFormulas.count_primitive_ballot(k, q))

            for k in range(9):
                yield self.check(f"k={k}/q={q}", "satisfying-p1",
                                 CountingFormulas.count_q_satisfying(k, 1, q),
                                 CountingFormulas.generalized_catalan(k, q))

            for m in range(1, m_max + 1):
                for n in range(m // (q + 1) + 1):
                    p = m - (q + 1) * n + 1
                    yield self.check(f"m={m}/n={n}/q={q}", "stacks-vs-satisfying",
                                     CountingFormulas.count_q_stacks(m, n, q),
                                     CountingFormulas.count_q_satisfying(n, p, q))

        for n in range(k_max + 1):
            yield self.check(f"n={n}", "catalan-recurrence",
                             CountingFormulas.catalan_recurrence(n), CountingFormulas.catalan(n))


class SatisfyingSweep(Sweep):
    name = "satisfying"

    def run(self) -> Iterator[SweepLine]:
        for m in range(self.bounds["m"] + 1):
            matrix = SequenceUtils.bit_matrix(m)
            ones = matrix.sum(axis=1, dtype=np.int64)
            for q in self.qs():
                mask = SequenceUtils.satisfying_mask(matrix, q)
                yield self.check(f"m={m}/q={q}", "total", int(mask.sum()),
                                 CountingFormulas.count_q_satisfying_length(m, q))
                per_n = np.bincount(ones[mask], minlength=m // (q + 1) + 1)
                for n in range(m // (q + 1) + 1):
                    yield self.check(f"m={m}/n={n}/q={q}", "per-ones", int(per_n[n]),
                                     CountingFormulas.count_q_stacks(m, n, q))

                strict = SequenceUtils.satisfying_mask(matrix, q, strict=True)
                per_n = np.bincount(ones[strict], minlength=m // (q + 1) + 1)
                for n in range(m // (q + 1) + 1):
                    p = m - (q + 1) * n
                    if p >= 1:
                        yield self.check(f"m={m}/n={n}/q={q}", "per-ones-dominating", int(per_n[n]),
                                         CountingFormulas.count_q_dominating(n, p, q))


class RaneySweep(Sweep):
    name = "raney"

    def run(self) -> Iterator[SweepLine]:
        for q in self.qs():
            for k in range(self.bounds["k"] + 1):
                count = 0
                misplaced = 0
                for sequence in TreeCodec.enumerate_raney(k, q):
                    count += 1
                    if Montagh.raney_start(IntegerCycle(sequence.terms)) != 0:
                        misplaced += 1
                subject = f"k={k}/q={q}"
                yield self.check(subject, "count", count, CountingFormulas.generalized_catalan(k, q))
                yield self.check(subject, "start-at-zero", misplaced, 0)


class TreeSweep(Sweep):
    name = "trees"

    def run(self) -> Iterator[SweepLine]:
        for text, q in sorted(Config.REFERENCE_TREE_SEQUENCES.items()):
            s = BitString.from_text(text)
            back = TreeCodec.tree_to_sequence(TreeCodec.sequence_to_tree(s, q)).to_text()
            yield self.check(f"{text}/q={q}", "round-trip", back, text)

        for q in self.qs():
            for n in range(self.bounds["n"] + 1):
                trees = list(TreeCodec.enumerate_plane_trees(n, q))
                subject = f"n={n}/q={q}"
                yield self.check(subject, "count", len(trees), CountingFormulas.generalized_catalan(n, q))

                codes = set()
                broken = 0
                for tree in trees:
                    code = TreeCodec.tree_to_sequence(tree)
                    codes.add(code)
                    if TreeCodec.sequence_to_tree(code, q) != tree:
                        broken += 1
                yield self.check(subject, "round-trip", broken, 0)

                expected = {s for s in SequenceUtils.enumerate_bitstrings(n, q * n + 1)
                            if self._objects_precede_markers(s, q)}
                yield self.check(subject, "codes", len(codes.symmetric_difference(expected)), 0)

    @staticmethod
    def _objects_precede_markers(s: BitString, q: int) -> bool:
        """More than q*i zeros precede the i-th 1"""
        zeros = ones = 0
        for bit in s:
            if bit:
                ones += 1
                if zeros <= q * ones:
                    return False
            else:
                zeros += 1
        return True


class PeriodicSweep(Sweep):
    name = "periodic"

    def run(self) -> Iterator[SweepLine]:
        for q in self.qs():
            for k in range(1, self.bounds["k"] + 1):
                for t in range(1, self.bounds["p"] + 1):
                    profile = CycleLemma.periodic_class_profile(k, q, t)
                    subject = f"k={k}/q={q}/t={t}"
                    yield self.check(subject, "class-formula", _fmt(profile.mismatched_classes()) or "none", "none")
                    yield self.check(subject, "all-good", profile.all_good_count, t * k)
                    if k > 1:
                        p = t * k
                        yield self.check(subject, "more-than-p-good", min(profile.good_counts), f">{p}",
                                         min(profile.good_counts) > p)


class BallotSweep(Sweep):
    name = "ballot"

    def run(self) -> Iterator[SweepLine]:
        for q in self.qs():
            for k in range(self.bounds["k"] + 1):
                ballots = {s for s in SequenceUtils.enumerate_bitstrings(k, q * k)
                           if SequenceUtils.is_q_ballot(s, q)}
                primitive = [s for s in ballots
                             if s.length and all(z != q * o for z, o in SequenceUtils.prefix_counts(s)[:-1])]
                rotations = set()
                wrong = 0
                for a in SequenceUtils.enumerate_arrangements(k, q * k + 1):
                    rotation = CycleLemma.ballot_rotation(a, q)
                    cuts = CycleLemma.dominating_cuts(a, q)
                    if len(cuts) != 1 or BitString(a.rotation(cuts[0])) != rotation:
                        wrong += 1
                    rotations.add(BitString(rotation.bits[1:]))

                subject = f"k={k}/q={q}"
                yield self.check(subject, "dominating-rotation", wrong, 0)
                yield self.check(subject, "equinumerous", len(rotations), len(ballots))
                yield self.check(subject, "ballot-image", len(rotations.symmetric_difference(ballots)), 0)
                yield self.check(subject, "primitive", len(primitive), CountingFormulas.count_primitive_ballot(k, q))


class Verifier:
    """Runs a named suite and collects its lines"""

    SWEEPS: Dict[str, Type[Sweep]] = {
        sweep.name: sweep for sweep in (
            CycleSweep, StrongSweep, StrongerSweep, ExtendedSweep, PositionSumSweep,
            ChungFellerSweep, MontaghSweep, BijectionSweep, RecurrenceSweep, SatisfyingSweep,
            RaneySweep, TreeSweep, PeriodicSweep, BallotSweep,
        )
    }

    def __init__(self):
        self.config = Config()

    def run(self, suite: str, overrides: Optional[dict] = None, cap: Optional[int] = None,
            seed: Optional[int] = None, emit_all: bool = False) -> SweepReport:
        bounds = self.config.suite_bounds(suite, overrides or {})
        sweep = self.SWEEPS[suite](
            bounds,
            cap=self.config.DEFAULT_CHECK_CAP if cap is None else cap,
            seed=self.config.DEFAULT_SEED if seed is None else seed,
        )

        report = SweepReport(suite=suite, bounds=bounds)
        for line in sweep.run():
            if not line.passed:
                report.failures.append(line)
            if emit_all:
                report.lines.append(line)
        report.checked = sweep.checked

        logger.debug("Suite %s with %s: %s", suite, bounds, report.summary())
        return report
