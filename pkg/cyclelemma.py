"""Cycle Lemma family: dominating cuts, good-interval counts and their bounds"""

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from seqcore import BitString, CyclicArrangement, SequenceUtils

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LinearizationReport:
    """A 0-linearization (cut, cut] and the ends of its q-good 0-intervals"""

    cut: int
    good_set: FrozenSet[int]
    bits: BitString

    @property
    def good_count(self) -> int:
        return len(self.good_set)

    def to_json(self) -> dict:
        return {
            "cut": self.cut,
            "linearization": self.bits.to_text(),
            "good_set": sorted(self.good_set),
            "good_count": self.good_count,
        }


@dataclass(frozen=True)
class BoundCheck:
    i: int
    observed: int
    bound: int

    @property
    def holds(self) -> bool:
        return self.observed >= self.bound


@dataclass
class PeriodicProfile:
    """Not-good counts of a periodic arrangement, grouped by leading-zero class"""

    k: int
    q: int
    t: int
    arrangement: CyclicArrangement
    predicted: Dict[int, int]
    observed: Dict[int, List[int]] = field(default_factory=dict)
    good_counts: List[int] = field(default_factory=list)

    @property
    def all_good_count(self) -> int:
        """0-linearizations in which every 0-interval is q-good"""
        return sum(1 for counts in self.observed.values() for c in counts if c == 0)

    def mismatched_classes(self) -> List[int]:
        return [j for j, counts in sorted(self.observed.items())
                if any(c != self.predicted.get(j, 0) for c in counts)]


class CycleLemma:
    """Executable forms of the Cycle Lemma and its strengthenings"""

    @staticmethod
    def excess(a: CyclicArrangement, q: int) -> int:
        """p such that a is a (k, qk+p)-arrangement"""
        return a.zeros - q * a.ones

    @staticmethod
    def _require_single_excess(a: CyclicArrangement, q: int) -> None:
        if CycleLemma.excess(a, q) != 1:
            raise ValueError(
                f"{a} is not a (k,qk+1)-arrangement for q={q} "
                f"(ones={a.ones}, zeros={a.zeros})"
            )

    @staticmethod
    def dominating_cuts(a: CyclicArrangement, q: int) -> List[int]:
        """Positions that start a q-dominating linearization"""
        p = CycleLemma.excess(a, q)
        if p < 0:
            raise ValueError(f"{a} has fewer than q*ones zeros for q={q}")

        cuts = [start for start in range(a.length)
                if SequenceUtils.is_q_dominating(BitString(a.rotation(start)), q)]
        logger.debug("%s: %d dominating cuts for q=%d (p=%d)", a, len(cuts), q, p)
        return cuts

    @staticmethod
    def good_interval_count(b: BitString, q: int) -> int:
        """Number of prefixes of b that end at a 0 and have zeros > q*ones"""
        count = 0
        zeros = ones = 0
        for bit in b:
            if bit:
                ones += 1
            else:
                zeros += 1
                if zeros > q * ones:
                    count += 1
        return count

    @staticmethod
    def good_sets(a: CyclicArrangement, q: int,
                  S: Optional[Iterable[int]] = None) -> Dict[int, FrozenSet[int]]:
        """Good set of every 0-linearization, or of every cut in S when given"""
        if S is None:
            cuts = a.zero_positions()
        else:
            S = sorted({j % a.length for j in S}) if a.length else []
            cuts = S
        return {cut: SequenceUtils.good_zero_set(a, cut, q, S) for cut in cuts}

    @staticmethod
    def good_count_profile(a: CyclicArrangement, q: int) -> Dict[int, int]:
        return {cut: len(good) for cut, good in CycleLemma.good_sets(a, q).items()}

    @staticmethod
    def _select(a: CyclicArrangement, sets: Dict[int, FrozenSet[int]], i: int) -> int:
        matches = [cut for cut, good in sets.items() if len(good) == i]
        if len(matches) != 1:
            raise RuntimeError(f"{a}: {len(matches)} linearizations with {i} good intervals, expected 1")
        return matches[0]

    @staticmethod
    def strong_linearization(a: CyclicArrangement, i: int, q: int) -> LinearizationReport:
        """The unique 0-linearization with exactly i q-good 0-intervals"""
        CycleLemma._require_single_excess(a, q)
        top = q * a.ones + 1
        if not 1 <= i <= top:
            raise ValueError(f"i must lie in 1..{top}, got {i}")

        sets = CycleLemma.good_sets(a, q)
        cut = CycleLemma._select(a, sets, i)
        return LinearizationReport(cut=cut, good_set=sets[cut], bits=SequenceUtils.linearize(a, cut))

    @staticmethod
    def stronger_linearization(a: CyclicArrangement, S: Iterable[int], i: int,
                               q: int) -> LinearizationReport:
        """The unique cut in S with exactly i q-good 0-intervals ending in S"""
        CycleLemma._require_single_excess(a, q)
        S = sorted({j % a.length for j in S})
        if not S:
            raise ValueError("S must be nonempty")
        if not 1 <= i <= len(S):
            raise ValueError(f"i must lie in 1..{len(S)}, got {i}")

        sets = CycleLemma.good_sets(a, q, S)
        cut = CycleLemma._select(a, sets, i)
        return LinearizationReport(cut=cut, good_set=sets[cut], bits=SequenceUtils.linearize(a, cut))

    @staticmethod
    def extended_bounds_check(a: CyclicArrangement, q: int) -> List[BoundCheck]:
        """For p <= i <= qk+p: 0-linearizations with at least i good intervals vs qk+2p-i"""
        p = CycleLemma.excess(a, q)
        if p < 1:
            raise ValueError(f"{a} needs more than q*ones zeros for q={q} (p={p})")

        counts = list(CycleLemma.good_count_profile(a, q).values())
        qk = q * a.ones
        return [
            BoundCheck(i=i, observed=sum(1 for c in counts if c >= i), bound=qk + 2 * p - i)
            for i in range(p, qk + p + 1)
        ]

    @staticmethod
    def augmentation_insert(b: BitString, position: int, q: int) -> Tuple[BitString, int, int]:
        """Insert a 0 before index `position`; returns (b', good before, good after)"""
        if b.length == 0 or b.bits[-1] != 0:
            raise ValueError(f"{b} must end with a 0")
        if b.zeros <= q * b.ones:
            raise ValueError(f"{b} needs more than q*ones zeros for q={q}")
        if not 0 <= position <= b.length:
            raise ValueError(f"Insertion index must lie in 0..{b.length}, got {position}")

        augmented = BitString(b.bits[:position] + (0,) + b.bits[position:])
        return (
            augmented,
            CycleLemma.good_interval_count(b, q),
            CycleLemma.good_interval_count(augmented, q),
        )

    @staticmethod
    def position_sums(a: CyclicArrangement) -> List[Tuple[int, int]]:
        """(cut, sum of 1-based indices of the 1s) for each 0-linearization"""
        k, l = a.ones, a.zeros
        if l == 0:
            raise ValueError(f"{a} has no 0-linearizations")
        if math.gcd(k, l) != 1:
            raise ValueError(f"ones={k} and zeros={l} are not relatively prime")

        sums = []
        for cut in a.zero_positions():
            bits = SequenceUtils.linearize(a, cut).bits
            sums.append((cut, sum(index for index, bit in enumerate(bits, start=1) if bit)))
        return sums

    @staticmethod
    def blocked_arrangement(k: int, q: int, p: int) -> CyclicArrangement:
        """The (k, qk+p)-arrangement with all 1s consecutive"""
        if k < 0 or p < 0:
            raise ValueError(f"k and p must be nonnegative, got k={k}, p={p}")
        return CyclicArrangement((1,) * k + (0,) * (q * k + p))

    @staticmethod
    def periodic_arrangement(k: int, q: int, t: int) -> Tuple[CyclicArrangement, Dict[int, int]]:
        """Each 1 followed by q+t zeros, with the predicted not-good count per class.

        Class j holds the 0-linearizations whose first 1 comes after j zeros.
        """
        if k < 1 or q < 1 or t < 1:
            raise ValueError(f"k, q and t must be positive, got k={k}, q={q}, t={t}")

        arrangement = CyclicArrangement(((1,) + (0,) * (q + t)) * k)
        predicted = {}
        for j in range(q + t):
            if j > q:
                predicted[j] = 0
                continue
            r = min(k - 1, (q - j) // t)
            predicted[j] = sum(q - j - i * t for i in range(r + 1))
        return arrangement, predicted

    @staticmethod
    def periodic_class_profile(k: int, q: int, t: int) -> PeriodicProfile:
        arrangement, predicted = CycleLemma.periodic_arrangement(k, q, t)
        profile = PeriodicProfile(k=k, q=q, t=t, arrangement=arrangement, predicted=predicted)

        zeros = arrangement.zeros
        for cut, good in CycleLemma.good_count_profile(arrangement, q).items():
            bits = SequenceUtils.linearize(arrangement, cut).bits
            j = bits.index(1)
            profile.observed.setdefault(j, []).append(zeros - good)
            profile.good_counts.append(good)

        if profile.all_good_count != (t + 1) * k:
            logger.debug(
                "Periodic (k=%d,q=%d,t=%d): %d all-good 0-linearizations, (t+1)k=%d",
                k, q, t, profile.all_good_count, (t + 1) * k,
            )
        return profile

    @staticmethod
    def ballot_rotation(a: CyclicArrangement, q: int) -> BitString:
        """Rotation of a (k,qk+1)-arrangement in which every prefix has zeros > q*ones.

        Read off the reversed arrangement's 0-linearization that has only the
        trivial good interval, then reverse it back.
        """
        CycleLemma._require_single_excess(a, q)
        reversed_arrangement = CyclicArrangement(tuple(reversed(a.bits)))
        report = CycleLemma.strong_linearization(reversed_arrangement, 1, q)
        rotation = BitString(tuple(reversed(report.bits.bits)))

        if not SequenceUtils.is_q_dominating(rotation, q):
            raise RuntimeError(f"Reversal of {report.bits} is not {q}-dominating")
        return rotation
