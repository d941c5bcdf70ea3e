"""The ten acceptance criteria, each checked exactly as stated.

    pytest tests/test_acceptance.py -s     # one PASS/FAIL line per criterion
    python tests/test_acceptance.py        # same lines, without pytest

Criteria whose statement does not hold as written fail here.  Under a
failing criterion the adjusted form is printed with its own status; those
adjusted forms are also asserted in test_corrected_forms.py.
"""

import sys

import pytest

from c2charge import verify as V


def report(r):
    lines = [V.format_result(r, "literal")]
    for c in r.checks:
        if not c.passed or c.role != "both":
            lines.append(V.format_check(c))
    return "\n".join(lines)


@pytest.fixture(scope="module")
def results():
    return {n: V.run_criterion(n) for n in sorted(V.CRITERIA)}


@pytest.mark.parametrize("number", sorted(V.CRITERIA))
def test_criterion(results, number):
    r = results[number]
    print("\n" + report(r))
    failure = r.first_failure("literal")
    assert failure is None, f"criterion {number}: {failure.name}: {failure.detail}"


if __name__ == "__main__":
    rs = V.run_all()
    for r in rs:
        print(report(r))
    sys.exit(0 if all(r.passed("literal") for r in rs) else 1)
