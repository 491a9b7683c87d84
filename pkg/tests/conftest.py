import pytest

from highertodd import dsl, varieties


def build(source):
    return dsl.elaborate(dsl.parse(source))


def relabeled_a1_p1():
    """A(1) x P(1) with pi-classes a = x1 + x2 and b = x2."""
    V = build("A(1) x P(1)")
    return varieties.with_pi_classes(V, {"a": "x1 + x2", "b": "x2"})


SOURCES = [
    "P(0)",
    "P(1)",
    "P(2)",
    "P(3)",
    "E",
    "A(2)",
    "E x P(1)",
    "P(1) x P(1)",
    "blowup(E x P(1))",
    "blowup(P(2))",
    "blowup(blowup(E x P(1)))",
    "E x E",
]


@pytest.fixture(scope="session")
def test_varieties():
    out = {src: build(src) for src in SOURCES}
    out["A(1) x P(1) relabeled"] = relabeled_a1_p1()
    return out


def word_of(A, i):
    """Basis monomial ``i`` of ``A`` as a tuple of generator names."""
    word = []
    for g, e in zip(A.generators, A.basis[i]):
        word.extend([g.name] * e)
    return tuple(word)


def pytest_terminal_summary(terminalreporter):
    import sys
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        ok, title = results[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'} {title}")
