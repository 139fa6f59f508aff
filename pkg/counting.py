"""Exact counting formulas and recurrences"""

import csv
import io
import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

logger = logging.getLogger(__name__)

CountValue = int


def _exact_div(numerator: int, denominator: int) -> int:
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise ArithmeticError(f"Inexact division {numerator}/{denominator}")
    return quotient


def _convolve(a: List[int], b: List[int], limit: int) -> List[int]:
    out = [0] * limit
    for i, x in enumerate(a[:limit]):
        if not x:
            continue
        for j, y in enumerate(b[:limit - i]):
            out[i + j] += x * y
    return out


@dataclass
class CountTable:
    """c_{m,n}: q-satisfying strings of length m with n ones"""

    q: int
    entries: Dict[Tuple[int, int], CountValue] = field(default_factory=dict)

    def get(self, m: int, n: int) -> CountValue:
        return self.entries.get((m, n), 0)

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        for (m, n), count in sorted(self.entries.items()):
            writer.writerow([m, n, count])
        return buffer.getvalue()


class CountingFormulas:
    """Closed forms and recurrences, all in exact integer arithmetic"""

    @staticmethod
    def binomial(n: int, k: int) -> CountValue:
        if k < 0 or k > n:
            return 0
        return math.comb(n, k)

    @staticmethod
    def catalan(k: int) -> CountValue:
        return _exact_div(math.comb(2 * k, k), k + 1)

    @staticmethod
    def generalized_catalan(n: int, q: int) -> CountValue:
        """C_n^q = C((q+1)n, n) / (qn+1)"""
        return _exact_div(math.comb((q + 1) * n, n), q * n + 1)

    @staticmethod
    def count_q_satisfying(k: int, p: int, q: int) -> CountValue:
        """q-satisfying sequences with k ones and qk+p-1 zeros"""
        if p < 1:
            raise ValueError(f"p must be positive, got {p}")
        return _exact_div(p * math.comb((q + 1) * k + p - 1, k), q * k + p)

    @staticmethod
    def count_q_dominating(k: int, p: int, q: int) -> CountValue:
        """q-dominating (k,qk+p)-sequences; a leading 0 makes them q-satisfying ones"""
        return CountingFormulas.count_q_satisfying(k, p, q)

    @staticmethod
    def count_q_satisfying_length(m: int, q: int) -> CountValue:
        total = 0
        for k in range(m // (q + 1) + 1):
            total += _exact_div((m - (q + 1) * k + 1) * math.comb(m, k), m - k + 1)
        return total

    @staticmethod
    def count_q_stacks(m: int, n: int, q: int) -> CountValue:
        """Stacks on a base of length m with n bricks on the base"""
        if n < 0 or (q + 1) * n > m:
            return 0
        return _exact_div((m - (q + 1) * n + 1) * math.comb(m, n), m - n + 1)

    @staticmethod
    def count_q_stacks_total(m: int, q: int) -> CountValue:
        """All stacks on a base of length m, the empty stack included"""
        return sum(CountingFormulas.count_q_stacks(m, n, q) for n in range(m // (q + 1) + 1))

    @staticmethod
    def count_primitive_ballot(k: int, q: int) -> CountValue:
        """q-ballot strings with k ones and no proper q-ballot prefix"""
        if k < 1:
            return 0
        # 0 + (q-satisfying, length (q+1)k-2, k-1 ones) + 1
        m = (q + 1) * k - 2
        if m < 0:
            return 0
        if m == 0:
            return 1
        return CountingFormulas.count_q_stacks(m, k - 1, q)

    @staticmethod
    def recurrence_table(m_max: int, q: int) -> CountTable:
        """Fill c_{m,n} for m <= m_max from the first-return decomposition"""
        if m_max < 1:
            raise ValueError(f"m_max must be at least 1, got {m_max}")
        if q < 1:
            raise ValueError(f"q must be positive, got {q}")

        table = CountTable(q=q)
        table.entries[(0, 0)] = 1
        table.entries[(1, 0)] = 1

        for m in range(2, m_max + 1):
            for n in range(m // (q + 1) + 1):
                value = table.get(m - 1, n)
                if m == (q + 1) * n:
                    value += table.get(m - 2, n - 1)
                k = 1
                while (q + 1) * k < m:
                    primitive = table.get((q + 1) * k - 2, k - 1)
                    value += primitive * table.get(m - (q + 1) * k, n - k)
                    k += 1
                table.entries[(m, n)] = value

        logger.debug("Recurrence table q=%d filled to m=%d (%d entries)", q, m_max, len(table.entries))
        return table

    @staticmethod
    def hp_recurrence(n: int, q: int) -> CountValue:
        """Sum over (q+1)-tuples of nonnegative parts summing to n-1 of products of C^q"""
        values = [1]
        for j in range(1, n + 1):
            power = [1] + [0] * (j - 1)
            for _ in range(q + 1):
                power = _convolve(power, values, j)
            values.append(power[j - 1])
        return values[n]

    @staticmethod
    def catalan_recurrence(n: int) -> CountValue:
        """a_n = sum_{k=1}^{n} a_{k-1} a_{n-k}, a_0 = 1"""
        a = [1]
        for j in range(1, n + 1):
            a.append(sum(a[k - 1] * a[j - k] for k in range(1, j + 1)))
        return a[n]
