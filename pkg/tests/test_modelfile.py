import random

import pytest

from opaqcheck import (
    ParseError,
    downgrade_entry_states,
    find_isomorphism,
    parse_model,
    render_model,
    trim,
)
from opaqcheck.generate import random_system

SAMPLE_MODEL = """
alphabet obs l
alphabet unobs h
alphabet down d
states 1 2 3 4 5 6 7
init 1
accept F: 1 2 3 4 5 6 7
accept Fphi: 3 7
trans 1 h 2
trans 2 l 3
trans 2 d 4
trans 4 l 6
trans 4 h 5
trans 5 l 7
trans 7 l 7
"""


def test_fixture_text_parses_with_expected_entries():
    model = parse_model(SAMPLE_MODEL)
    assert len(model.states) == 7
    assert downgrade_entry_states(model) == frozenset({"1", "4"})


def test_comments_and_blank_lines_are_ignored(fixtures_dir):
    model = parse_model((fixtures_dir / "downgrade_loop.lts").read_text())
    assert len(model.states) == 7


def test_duplicate_transition_source_is_rejected():
    text = SAMPLE_MODEL + "trans 1 h 3\n"
    with pytest.raises(ParseError) as err:
        parse_model(text)
    assert "determinism" in str(err.value)


def test_empty_file_reports_missing_init():
    with pytest.raises(ParseError) as err:
        parse_model("")
    assert "missing init" in str(err.value)


@pytest.mark.parametrize(
    "line,needle",
    [
        ("states 1 1", "twice"),
        ("alphabet obs l\nalphabet unobs l\ninit 1", "twice"),
        ("alphabet sideways x", "obs|unobs|down"),
        ("accept G: 1", "accepting set"),
        ("states 1\ninit 1\naccept F: 2", "undeclared"),
        ("states 1\ninit 1\naccept F: 1\ntrans 1 zz 1", "undeclared"),
        ("states 1\ninit 2\naccept F: 1", "not declared"),
        ("flip 1 2", "unknown directive"),
        ("states 1\ninit 1\ninit 1\naccept F: 1", "twice"),
    ],
)
def test_malformed_lines_are_rejected_with_cause(line, needle):
    with pytest.raises(ParseError) as err:
        parse_model(line)
    assert needle in str(err.value)


def test_error_carries_the_line_number():
    with pytest.raises(ParseError) as err:
        parse_model("states 1\ninit 1\naccept F: 1\ntrans 1 zz 1")
    assert err.value.line_no == 4


def test_round_trip_on_fixtures(fixtures_dir):
    for name in ("downgrade_loop.lts", "projection_leak.lts", "hdl_chain.lts"):
        model = parse_model((fixtures_dir / name).read_text())
        again = parse_model(render_model(model))
        assert find_isomorphism(again, trim(model)) is not None


def test_round_trip_on_random_models():
    rng = random.Random(51)
    for _ in range(100):
        model = random_system(rng)
        again = parse_model(render_model(model))
        assert find_isomorphism(again, trim(model)) is not None


def test_structured_state_names_survive_serialization(downgrade_loop):
    from opaqcheck import compile_regex, incorporate_secret

    folded = incorporate_secret(
        downgrade_loop, "F", compile_regex("h l + h d h l l*", downgrade_loop.alphabet), "F"
    )
    again = parse_model(render_model(folded))
    assert find_isomorphism(again, trim(folded)) is not None
