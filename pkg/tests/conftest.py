import re
from fractions import Fraction

import pytest

from ssmthom.polyring import Poly, Ring

_TERM = re.compile(r"\s*([+-])?\s*([^+-]+)")


def parse_poly(text: str, ring: Ring) -> Poly:
    """Parse the plain-text form ``-3*c_1^2*c_3 + 1/2*s_11 - s_0`` into ``ring``.

    Kept deliberately independent of the library printer.
    """
    text = text.strip()
    out = ring.zero()
    if text == "0":
        return out
    for sign, body in _TERM.findall(text):
        body = body.strip()
        if not body:
            continue
        coeff = Fraction(1)
        exps: dict[str, int] = {}
        for factor in body.split("*"):
            factor = factor.strip()
            if re.fullmatch(r"\d+(/\d+)?", factor):
                coeff *= Fraction(factor)
                continue
            name, _, power = factor.partition("^")
            exps[name] = exps.get(name, 0) + (int(power) if power else 1)
        if sign == "-":
            coeff = -coeff
        out = out + ring.monomial(exps, coeff)
    return out


@pytest.fixture
def parse():
    return parse_poly


# -- acceptance summary -----------------------------------------------------------

_criteria: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    marker = getattr(report, "criterion", None)
    if marker is None:
        return
    number, title = marker
    entry = _criteria.setdefault(number, {"title": title, "passed": True, "cases": 0})
    entry["cases"] += 1
    if not report.passed:
        entry["passed"] = False


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is not None:
        rep.criterion = tuple(m.args)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        entry = _criteria[number]
        status = "PASS" if entry["passed"] else "FAIL"
        terminalreporter.write_line(
            f"criterion {number:>2}: {status}  {entry['title']} ({entry['cases']} case(s))")
