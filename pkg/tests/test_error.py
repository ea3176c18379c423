import pytest

from igen.sgmc.error import EvaluationError, SgmcError, UsageError


def test_usage_error_exits_with_two():
    error = UsageError("bad flag")
    assert error.exit_code == 2
    assert isinstance(error, ValueError)


def test_evaluation_error_exits_with_one():
    error = EvaluationError("overflow", context={"op": "exp"})
    assert error.exit_code == 1
    assert isinstance(error, ArithmeticError)
    assert error.context == {"op": "exp"}


def test_message_includes_context_and_cause_chain():
    root = KeyError("missing")
    middle = ValueError("could not parse")
    middle.__cause__ = root
    error = SgmcError("run failed", exit_code=3, from_exception=middle, context={"step": 7})

    text = str(error)
    assert text.startswith("run failed\nExit Code: 3")
    assert "step: 7" in text
    assert "Caused by: could not parse" in text
    assert "Caused by: 'missing'" in text


def test_errors_can_be_caught_as_the_base_class():
    with pytest.raises(SgmcError):
        raise UsageError("bad")
