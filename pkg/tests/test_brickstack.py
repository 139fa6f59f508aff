import pytest

from brickstack import BrickStack, StackAnalyzer, Step
from counting import CountingFormulas
from stack_factory import StackFactory
from stack_renderer import StackRenderer


@pytest.fixture
def analyzer():
    return StackAnalyzer()


def test_text_form(split_stack):
    assert split_stack.rows == ((0, 3, 7), (1,))
    assert split_stack.to_text() == "q=2;m=12;rows=[0,3,7][1]"
    assert split_stack.n == 3
    assert split_stack.brick_count == 4
    assert BrickStack(1, 3).to_text() == "q=1;m=3;rows=[]"
    assert BrickStack.from_text("q=1;m=3;rows=[]") == BrickStack(1, 3)


def test_text_form_rejects_garbage():
    with pytest.raises(ValueError):
        BrickStack.from_text("q=2;m=12;rows=0,3")
    with pytest.raises(ValueError):
        BrickStack.from_json({"q": 2})


def test_json_form(mound_stack):
    assert mound_stack.to_json() == {"q": 2, "m": 9, "rows": [[0, 3, 6], [2, 5], [4]]}
    assert BrickStack.from_json(mound_stack.to_json()) == mound_stack


def test_rows_are_normalized():
    assert BrickStack(1, 6, [[4, 0], [], []]).rows == ((0, 4),)


@pytest.mark.parametrize("text,fragment", [
    ("q=2;m=5;rows=[0,2]", "overlap"),
    ("q=1;m=4;rows=[][0]", "does not rest"),
    ("q=2;m=4;rows=[2]", "does not fit"),
    ("q=2;m=9;rows=[0,3][4]", "does not rest"),
    ("q=0;m=4;rows=[]", "q must be positive"),
])
def test_validate_reports_violations(analyzer, text, fragment):
    violations = analyzer.validate(BrickStack.from_text(text))
    assert violations
    assert any(fragment in v for v in violations)


def test_valid_stacks(analyzer, split_stack, mound_stack):
    assert analyzer.is_valid(split_stack)
    assert analyzer.is_valid(mound_stack)
    assert analyzer.is_valid(BrickStack(3, 0))


def test_junctions():
    assert StackAnalyzer.junctions((0, 3, 7), 2) == [3]
    assert StackAnalyzer.junctions((0, 3, 6), 2) == [3, 6]
    assert StackAnalyzer.junctions((), 2) == []


def test_heights_and_silhouette(analyzer, split_stack, mound_stack):
    assert analyzer.heights(split_stack).tolist() == [0, 1, 2, 2, 1, 1, 0, 0, 1, 1, 0, 0, 0]
    silhouette = analyzer.silhouette(split_stack)
    assert silhouette.steps[:3] == (Step.UP, Step.UP, Step.FLAT)
    assert "".join(map(str, silhouette.to_bits())) == "000101000100"

    assert analyzer.heights(mound_stack).tolist() == [0, 1, 1, 2, 2, 3, 3, 2, 1, 0]
    assert "".join(map(str, analyzer.silhouette(mound_stack).to_bits())) == "000000111"


def test_heights_reject_invalid_stacks(analyzer):
    with pytest.raises(ValueError):
        analyzer.heights(BrickStack.from_text("q=2;m=5;rows=[0,2]"))


def test_first_return(analyzer, split_stack, mound_stack):
    assert analyzer.first_return(split_stack) == 6
    assert analyzer.first_return(mound_stack) == 9
    assert analyzer.first_return(BrickStack(1, 3)) is None
    assert analyzer.first_return(BrickStack(1, 3, [[1]])) is None


def test_split(split_stack):
    left, right = StackAnalyzer.split(split_stack, 6)
    assert left == BrickStack(2, 6, [[0, 3], [1]])
    assert right == BrickStack(2, 6, [[1]])


def test_base_placements():
    assert list(StackFactory.base_placements(6, 2, 2)) == [(0, 3)]
    assert list(StackFactory.base_placements(7, 2, 2)) == [(0, 3), (0, 4), (1, 4)]
    assert list(StackFactory.base_placements(3, 0, 2)) == [()]


@pytest.mark.parametrize("m,q", [(0, 1), (1, 1), (4, 1), (5, 1), (8, 1), (6, 2), (9, 2), (10, 3)])
def test_enumerated_stacks_match_counts(m, q):
    factory = StackFactory()
    stacks = list(factory.enumerate_stacks(m, q))
    assert len(stacks) == CountingFormulas.count_q_stacks_total(m, q)
    assert len(set(stacks)) == len(stacks)
    assert stacks[0] == BrickStack(q, m)
    assert all(factory.analyzer.is_valid(stack) for stack in stacks)


def test_enumerate_stacks_rejects_bad_bounds():
    with pytest.raises(ValueError):
        list(StackFactory().enumerate_stacks(3, 0))


@pytest.mark.parametrize("n,count", [(0, 1), (1, 1), (2, 2), (3, 5), (4, 14)])
def test_coin_stacks_are_catalan(n, count):
    assert len(list(StackFactory().full_base_stacks(n, 1))) == count


def test_render_ascii(split_stack):
    drawing = StackRenderer().render_ascii(split_stack)
    assert drawing.split("\n") == [
        " [#]        ",
        "[#][#] [#]  ",
        "============",
    ]


def test_render_shaved(split_stack):
    drawing = StackRenderer().render_ascii(split_stack, shaved=True)
    assert drawing.split("\n")[0] == " /-\\        "


def test_render_edge_cases():
    renderer = StackRenderer()
    assert renderer.render_ascii(BrickStack(2, 5)) == "====="
    assert renderer.render_ascii(BrickStack(1, 2, [[0]])) == "[]\n=="
