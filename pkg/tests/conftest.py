import pytest

from hopfkernel.scalars import FieldSpec, field_make

ACCEPTANCE = {}


def record(criterion: int, ok: bool, detail: str = "") -> None:
    ACCEPTANCE[criterion] = (ok, detail)


@pytest.fixture(scope="session")
def Q2():
    return field_make(FieldSpec.cyclotomic(2))


@pytest.fixture(scope="session")
def cyc():
    cache = {}

    def get(N):
        if N not in cache:
            cache[N] = field_make(FieldSpec.cyclotomic(N))
        return cache[N]

    return get


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        line = f"acceptance criterion {k}: {'PASS' if ok else 'FAIL'}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)
