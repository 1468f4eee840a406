import sympy

from hecketrace.laurent import LaurentPoly, TraceValue

q, a, t = sympy.symbols("q a t")

ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


def to_sympy(x):
    """Independent evaluation of a LaurentPoly / TraceValue as a sympy expression."""
    if isinstance(x, TraceValue):
        return to_sympy(x.num) / (1 - q**2) ** x.k
    return sum((c * q**eq * a**ea for (eq, ea), c in x.terms.items()), sympy.Integer(0))


def same_rational(x, y) -> bool:
    return sympy.cancel(sympy.together(x - y)) == 0


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
