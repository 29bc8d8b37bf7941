import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rainbowtrees import (
    EdgeColoring,
    FileFormatError,
    Tree,
    TreePartition,
    format_coloring,
    format_partition,
    is_partition_valid,
    merge_colors,
    monochromatic_complete,
    parse_coloring,
    parse_partition,
    rainbow_complete,
    restrict,
    validate,
)


def rainbow_k3():
    return EdgeColoring(3, 3, {(0, 1): 1, (0, 2): 2, (1, 2): 3})


# ---------------------------------------------------------------- validate


def test_validate_rainbow_triangle_is_clean():
    assert validate(rainbow_k3()) == []


def test_validate_missing_color():
    c = EdgeColoring(3, 3, {(0, 1): 1, (0, 2): 1, (1, 2): 2})
    codes = [v.code for v in validate(c)]
    assert codes == ["MissingColor"]
    assert validate(c)[0].info == (3,)


def test_validate_incomplete_flag():
    c = EdgeColoring(
        4, 5, {(0, 1): 1, (0, 2): 2, (0, 3): 3, (1, 2): 4, (1, 3): 5}, complete=True
    )
    codes = [v.code for v in validate(c)]
    assert codes == ["IncompleteGraph"]


def test_validate_bad_vertex_and_duplicate():
    c = EdgeColoring(3, 2, {(1, 0): 1, (0, 1): 2, (0, 2): 1, (1, 2): 2})
    codes = {v.code for v in validate(c)}
    assert "BadVertex" in codes      # (1, 0) is not normalized
    assert "DuplicateEdge" in codes  # (1, 0) and (0, 1) are the same pair


def test_validate_color_out_of_range():
    c = EdgeColoring(3, 2, {(0, 1): 1, (0, 2): 2, (1, 2): 7})
    assert "BadColor" in {v.code for v in validate(c)}


def test_validate_degenerate_single_vertex():
    assert validate(EdgeColoring(1, 0, {})) == []
    assert "BadColorCount" in {v.code for v in validate(EdgeColoring(1, 1, {}))}
    assert "BadColorCount" in {v.code for v in validate(EdgeColoring(2, 0, {}))}


def test_completeness_is_inferred():
    assert rainbow_k3().complete
    assert not EdgeColoring(3, 1, {(0, 1): 1}).complete


# ------------------------------------------------------- is_partition_valid


def test_partition_spanning_star_on_rainbow_triangle():
    c = rainbow_k3()
    p = TreePartition((Tree.make([0, 1, 2], [(0, 1, 1), (0, 2, 2)]),))
    ok, why = is_partition_valid(c, p)
    assert ok and why is None


def test_partition_repeated_color_rejected():
    c = monochromatic_complete(3)
    p = TreePartition((Tree.make([0, 1, 2], [(0, 1, 1), (1, 2, 1)]),))
    ok, why = is_partition_valid(c, p)
    assert not ok
    assert "repeats color" in why


def test_partition_vertex_reuse_rejected():
    c = rainbow_complete(4)
    p = TreePartition(
        (
            Tree.make([0, 1], [(0, 1, 1)]),
            Tree.make([1, 2, 3], [(1, 2, 4), (2, 3, 6)]),
        )
    )
    ok, why = is_partition_valid(c, p)
    assert not ok
    assert "more than one tree" in why


def test_partition_must_cover_everything():
    c = rainbow_k3()
    p = TreePartition((Tree.make([0, 1], [(0, 1, 1)]),))
    ok, why = is_partition_valid(c, p)
    assert not ok and "not covered" in why


def test_partition_cycle_rejected():
    c = rainbow_k3()
    p = TreePartition((Tree.make([0, 1, 2], [(0, 1, 1), (0, 2, 2), (1, 2, 3)]),))
    ok, why = is_partition_valid(c, p)
    assert not ok


def test_partition_wrong_color_rejected():
    c = rainbow_k3()
    p = TreePartition((Tree.make([0, 1, 2], [(0, 1, 2), (0, 2, 2)]),))
    ok, _ = is_partition_valid(c, p)
    assert not ok


# ------------------------------------------------------------ merge_colors


def test_merge_rainbow_triangle():
    merged = merge_colors(rainbow_k3(), 3, 2)
    assert merged.r == 2
    assert merged.colors == {(0, 1): 1, (0, 2): 2, (1, 2): 2}


def test_merge_down_to_monochromatic():
    c = EdgeColoring(3, 2, {(0, 1): 1, (0, 2): 2, (1, 2): 2})
    merged = merge_colors(c, 2, 1)
    assert merged.r == 1
    assert set(merged.colors.values()) == {1}


def test_merge_renumbers_colors_above_src():
    c = EdgeColoring(3, 3, {(0, 1): 1, (0, 2): 2, (1, 2): 3})
    merged = merge_colors(c, 1, 2)
    # color 1 became 2, then 2 -> 1 and 3 -> 2 after renumbering
    assert merged.colors == {(0, 1): 1, (0, 2): 1, (1, 2): 2}
    assert validate(merged) == []


def test_merge_rejects_bad_arguments():
    c = rainbow_k3()
    with pytest.raises(ValueError):
        merge_colors(c, 2, 2)
    with pytest.raises(ValueError):
        merge_colors(c, 0, 1)
    with pytest.raises(ValueError):
        merge_colors(c, 1, 4)


@settings(max_examples=60, derandomize=True)
@given(st.integers(3, 6), st.data())
def test_merge_always_yields_valid_coloring(n, data):
    c = rainbow_complete(n)
    src = data.draw(st.integers(1, c.r))
    dst = data.draw(st.integers(1, c.r - 1))
    if dst >= src:
        dst += 1
    merged = merge_colors(c, src, dst)
    assert merged.r == c.r - 1
    assert validate(merged) == []


# ---------------------------------------------------------------- restrict


def test_restrict_to_identity():
    c = rainbow_k3()
    sub, maps = restrict(c, range(3))
    assert sub == c
    assert maps.vertex_map == {0: 0, 1: 1, 2: 2}
    assert maps.color_map == {1: 1, 2: 2, 3: 3}


def test_restrict_rainbow_k4_to_triangle():
    sub, maps = restrict(rainbow_complete(4), {0, 1, 2})
    assert sub.n == 3 and sub.r == 3
    assert validate(sub) == []
    assert maps.color_map == {1: 1, 2: 2, 4: 3}


def test_restrict_canonical_5_3_outside_block():
    from rainbowtrees import generate_canonical

    c, _ = generate_canonical(5, 3)
    sub, maps = restrict(c, {3, 4})
    # every edge outside the core block carries the single fill color
    assert sub.n == 2 and sub.r == 1
    assert sub.colors == {(0, 1): 1}
    assert maps.vertex_map == {3: 0, 4: 1}


def test_restrict_rejects_bad_sets():
    c = rainbow_k3()
    with pytest.raises(ValueError):
        restrict(c, [])
    with pytest.raises(ValueError):
        restrict(c, [0, 5])


@settings(max_examples=40, derandomize=True)
@given(st.integers(4, 7), st.data())
def test_restrict_composes(n, data):
    c = rainbow_complete(n)
    outer = sorted(data.draw(st.sets(st.integers(0, n - 1), min_size=2, max_size=n)))
    inner_old = sorted(data.draw(st.sets(st.sampled_from(outer), min_size=1)))
    first, fmaps = restrict(c, outer)
    inner_new = [fmaps.vertex_map[v] for v in inner_old]
    twice, _ = restrict(first, inner_new)
    direct, _ = restrict(c, inner_old)
    assert twice == direct


# ------------------------------------------------------------------ file I/O


def test_coloring_round_trip():
    c = rainbow_complete(5)
    assert parse_coloring(format_coloring(c)) == c


def test_coloring_format_is_deterministic():
    a, b = rainbow_complete(6), rainbow_complete(6)
    assert format_coloring(a) == format_coloring(b)


def test_parse_coloring_comments_and_blanks():
    text = "# a comment\n\n3 2\n0 1 1\n# another\n0 2 2\n1 2 1\n"
    c = parse_coloring(text)
    assert c.n == 3 and c.r == 2 and c.complete


def test_parse_coloring_errors_carry_line_numbers():
    with pytest.raises(FileFormatError) as exc:
        parse_coloring("3 2\n0 1 1\n1 0 2\n")
    assert exc.value.line == 3
    with pytest.raises(FileFormatError) as exc:
        parse_coloring("3 2\n0 1 1\n0 1 2\n")
    assert exc.value.line == 3
    with pytest.raises(FileFormatError) as exc:
        parse_coloring("3 2\n0 1 5\n")
    assert exc.value.line == 2
    with pytest.raises(FileFormatError) as exc:
        parse_coloring("3\n")
    assert exc.value.line == 1
    with pytest.raises(FileFormatError):
        parse_coloring("# nothing\n")


def test_partition_round_trip():
    c = rainbow_complete(5)
    p = TreePartition(
        (
            Tree.make([0, 1, 2], [(0, 1, 1), (1, 2, 5)]),
            Tree.make([3, 4], [(3, 4, 10)]),
        )
    )
    text = format_partition(p)
    assert parse_partition(text, c) == p


def test_partition_format_single_vertex():
    p = TreePartition((Tree.make([4]),))
    assert format_partition(p) == "tree 4 ; edges\n"


def test_parse_partition_rejects_unknown_edge():
    c = EdgeColoring(3, 1, {(0, 1): 1})
    with pytest.raises(FileFormatError):
        parse_partition("tree 0 2 ; edges (0,2)\n", c)
