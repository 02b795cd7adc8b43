import pytest

from toruscomp.birational import TorusParams, make_params
from toruscomp.ffield import ExtFieldCtx, FieldCtx
from toruscomp.talgebra import tensor_ctx_new

F2 = FieldCtx(2)


@pytest.fixture(scope="session")
def f4():
    return ExtFieldCtx(F2, (1, 1, 1))


@pytest.fixture(scope="session")
def f8():
    return ExtFieldCtx(F2, (1, 1, 0, 1))


@pytest.fixture(scope="session")
def p223(f4, f8):
    """q=2, A = F_2[T]/(T^2+T+1), B = F_2[S]/(S^3+S+1)."""
    return TorusParams.from_ctx(tensor_ctx_new(f4, f8, b"fixture"))


@pytest.fixture(scope="session")
def p323():
    return make_params(3, 2, 3, b"fixture")


@pytest.fixture(scope="session")
def toy_params():
    return {ab: make_params(1009, *ab, b"toy") for ab in ((2, 3), (3, 4), (2, 5), (3, 5))}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
