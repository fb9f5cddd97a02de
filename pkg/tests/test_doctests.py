import doctest

import schubertk.shapes


def test_module_doctests():
    results = doctest.testmod(schubertk.shapes)
    assert results.attempted > 0
    assert results.failed == 0
