"""Tests for the project logger namespace."""

import logging

import pytest

from utils.logger import HANDLER_NAME, ROOT_LOGGER, get_logger, set_level


@pytest.fixture
def restore_level():
    root = logging.getLogger(ROOT_LOGGER)
    level = root.level
    yield root
    root.setLevel(level)


def test_module_names_join_the_namespace() -> None:
    assert get_logger("algebra.groebner").name == "frobenius_lab.algebra.groebner"
    assert get_logger("frobenius_lab.sweep").name == "frobenius_lab.sweep"
    assert get_logger().name == ROOT_LOGGER


def test_one_shared_handler() -> None:
    get_logger("fsing.frobenius")
    get_logger("fsing.invariants")
    root = logging.getLogger(ROOT_LOGGER)
    ours = [h for h in root.handlers if h.get_name() == HANDLER_NAME]
    assert len(ours) == 1
    assert type(ours[0]) is logging.StreamHandler
    assert root.propagate is False
    assert not any(h.get_name() == HANDLER_NAME for h in get_logger("fsing.frobenius").handlers)


def test_set_level_reaches_children(restore_level) -> None:
    set_level("debug")
    assert get_logger("cli.commands").getEffectiveLevel() == logging.DEBUG
    set_level(logging.ERROR)
    assert get_logger("cli.commands").getEffectiveLevel() == logging.ERROR
    with pytest.raises(ValueError, match="unknown log level"):
        set_level("chatty")
