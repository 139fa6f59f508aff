import pytest

from applications import IntegerCycle
from brickstack import BrickStack
from seqcore import CyclicArrangement


@pytest.fixture
def strong_arrangement():
    """(3,7)-arrangement; with q=2 its 0-linearizations have 1..7 good intervals"""
    return CyclicArrangement.from_text("cyc:0000101001")


@pytest.fixture
def dominating_arrangement():
    """(2,7)-arrangement with three 2-dominating cuts"""
    return CyclicArrangement.from_text("100100000")


@pytest.fixture
def small_arrangement():
    return CyclicArrangement((0, 0, 1, 0, 1))


@pytest.fixture
def reference_cycle():
    return IntegerCycle.from_text("2,-1,2,-5,3,-2,1,-2,3")


@pytest.fixture
def split_stack():
    """q=2 stack whose outline first returns to the base at 6"""
    return BrickStack.from_text("q=2;m=12;rows=[0,3,7][1]")


@pytest.fixture
def mound_stack():
    return BrickStack(2, 9, [[0, 3, 6], [2, 5], [4]])
