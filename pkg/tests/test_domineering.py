import pytest

from hotgames import (
    DomBoard,
    Dyadic,
    Outcome,
    ParseError,
    dom_game,
    dom_parse,
    dom_print,
    drummond_cole_board,
    fold,
    grid,
    is_snake,
    snake_enumerate,
    temperature,
)

D = Dyadic


# -- parsing / printing -------------------------------------------------------


def test_parse_examples():
    assert len(dom_parse("##\n##").cells) == 4
    assert len(dom_parse("#").cells) == 1
    assert dom_parse("#.\n##").cells == frozenset({(0, 0), (0, 1), (1, 1)})


def test_parse_errors():
    with pytest.raises(ParseError):
        dom_parse("...\n...")
    with pytest.raises(ParseError):
        dom_parse("#x#")


def test_print_round_trip():
    for text in ("##\n##", "#.\n##", "#####", "#\n#\n#"):
        board = dom_parse(text)
        assert dom_parse(dom_print(board)) == board


def test_translation_normalized():
    a = DomBoard({(5, 7), (6, 7)})
    b = DomBoard({(0, 0), (1, 0)})
    assert a == b


# -- evaluation ---------------------------------------------------------------


def test_single_cell_is_zero(store):
    assert dom_game(dom_parse("#"), store) == store.zero


def test_vertical_domino_space_is_one(store):
    assert dom_game(dom_parse("#\n#"), store) == store.number(1)


def test_2x2_grid_first_player_wins(store):
    g = dom_game(grid(2, 2), store)
    assert g.outcome() == Outcome.N
    assert g.eq(store.plus_minus(store.number(1)))


def test_l_board_right_wins(store):
    # bottom row of three cells plus one cell atop the left end
    board = dom_parse("#..\n###")
    g = dom_game(board, store)
    assert g.outcome() == Outcome.R
    assert g.eq(store.number(D(-1, 1)))


def test_tall_l_board_left_wins(store):
    # the 90-degree rotation: column of three plus a top-right cell
    g = dom_game(dom_parse("##\n#.\n#."), store)
    assert g.outcome() == Outcome.L


def test_rotation_negates(store, rng):
    boards = [grid(2, 3), dom_parse("#..\n###"), dom_parse("##.\n.##")]
    for b in boards:
        assert dom_game(b.rotate90(), store).eq(-dom_game(b, store))


def test_reflection_preserves(store):
    for b in (grid(2, 3), dom_parse("#..\n###")):
        assert dom_game(b.reflect_h(), store) == dom_game(b, store)
        assert dom_game(b.reflect_v(), store) == dom_game(b, store)


def test_component_split_soundness(store, rng):
    # value of a disconnected board equals the sum of component values,
    # checked against the outcome oracle on a joined difference
    far_apart = DomBoard(
        {(0, 0), (0, 1), (1, 0)} | {(10, 0), (11, 0), (11, 1), (12, 0)}
    )
    left = DomBoard({(0, 0), (0, 1), (1, 0)})
    right = DomBoard({(0, 0), (1, 0), (1, 1), (2, 0)})
    whole = dom_game(far_apart, store)
    parts = dom_game(left, store) + dom_game(right, store)
    assert (whole - parts).outcome() == Outcome.P


def test_2xn_temperatures_small(store):
    want = {1: D(-1), 2: D(1), 3: D(5, 2), 4: D(0), 5: D(-1, 1)}
    for n, t in want.items():
        assert temperature(dom_game(grid(2, n), store)) == t


def test_2x5_is_exactly_one_half(store):
    # the published small-n table prints 0 here, but the position is the
    # pure number 1/2, whose temperature is -1/2 by the cooling definition
    g = dom_game(grid(2, 5), store)
    assert g.canonical() == store.number(D(1, 1))
    assert (g - store.number(D(1, 1))).outcome() == Outcome.P


# -- snakes -------------------------------------------------------------------


def test_snake_enumerate_no_2x2():
    for board in snake_enumerate(6):
        assert not board.has_2x2()
        assert is_snake(board)
        assert board.height() <= 2


def test_snake_count_2x2_matches_hand_enumeration():
    # single cell, vertical domino, horizontal domino, L-tromino
    assert len(list(snake_enumerate(2))) == 4


def test_snake_enumerate_matches_inductive_oracle():
    """Brute-force oracle: grow snakes cell by cell (attach top/right/
    bottom, never forming 2x2), fold each, keep those fitting two rows."""

    def extensions(path):
        x, y = path[-1]
        for nxt in ((x, y + 1), (x + 1, y), (x, y - 1)):
            if nxt in path:
                continue
            cells = set(path) | {nxt}
            if DomBoard(cells).has_2x2():
                continue
            yield path + [nxt]

    max_cells = 7
    frontier = [[(0, 0)]]
    folded_keys = set()
    from hotgames.domineering import _reflection_key

    while frontier:
        path = frontier.pop()
        board = DomBoard(path)
        f = fold(board)
        if f is not None and f.width() <= 5:
            folded_keys.add(_reflection_key(f.cells))
        if len(path) < max_cells:
            frontier.extend(extensions(path))

    enumerated = {
        _reflection_key(b.cells)
        for b in snake_enumerate(5)
        if len(b.cells) <= max_cells
    }
    assert enumerated == folded_keys


def test_fold_figure_pair_is_same_game(store):
    # climbing staircase snake vs its two-row folding
    stair = DomBoard(
        [(-2, -2), (-2, -1), (-1, -1), (0, -1), (0, 0), (1, 0), (2, 0), (3, 0), (3, 1)]
    )
    folded = fold(stair)
    assert folded == DomBoard(
        [(0, 0), (0, 1), (1, 1), (2, 1), (2, 0), (3, 0), (4, 0), (5, 0), (5, 1)]
    )
    assert dom_game(stair, store).eq(dom_game(folded, store))


def test_fold_rejects_2x2_creating_snake():
    # folding this one would create a 2x2 block, changing the game
    snake = DomBoard([(0, 0), (0, 1), (1, 1), (1, 2), (2, 2), (3, 2), (4, 2), (4, 3)])
    assert is_snake(snake)
    assert fold(snake) is None


def test_fold_rejects_tall_vertical_runs():
    snake = DomBoard([(0, 0), (0, 1), (0, 2), (1, 2)])
    assert is_snake(snake)
    assert fold(snake) is None


def test_snake_moves_split_into_smaller_snakes(store):
    for board in snake_enumerate(6):
        for pair_dir in ("left", "right"):
            cells = board.cells
            pairs = (
                [((x, y), (x, y + 1)) for x, y in cells if (x, y + 1) in cells]
                if pair_dir == "left"
                else [((x, y), (x + 1, y)) for x, y in cells if (x + 1, y) in cells]
            )
            for a, b in pairs:
                rest = cells - {a, b}
                from hotgames.domineering import _components

                comps = _components(rest)
                assert len(comps) <= 2
                for comp in comps:
                    assert is_snake(DomBoard(comp))


def test_non_snakes_rejected():
    assert not is_snake(dom_parse("##\n##"))  # 2x2 block
    assert not is_snake(dom_parse("###\n.#."))  # branching
    assert not is_snake(DomBoard([(0, 0), (1, 0), (1, 1), (1, 2), (0, 2)]))  # turns back


# -- the Drummond-Cole position ----------------------------------------------


def test_drummond_cole_board_shape():
    board = drummond_cole_board()
    assert len(board.cells) == 14
    assert board.width() == 5 and board.height() == 5


def test_drummond_cole_temperature(store):
    g = dom_game(drummond_cole_board(), store)
    assert temperature(g) == 2
