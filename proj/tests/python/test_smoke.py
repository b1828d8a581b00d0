"""Smoke tests for the python module; run with the built extension on PYTHONPATH."""

import sprimary as sp


def test_ring_arithmetic():
    R = sp.Ring({"kind": "zmod", "n": 12})
    assert R.size == 12
    assert R.mul(5, 5) == 1
    assert R.add(7, 8) == 3
    Z = sp.Ring.integers()
    assert Z.size is None
    assert Z.pow(6, 2) == 36


def test_ideals_and_predicates():
    R = sp.Ring({"kind": "zmod", "n": 12})
    I4 = R.ideal({"gens": [4]})
    assert I4.contains(8) and not I4.contains(2)
    assert sp.is_primary(I4)
    assert not sp.is_prime(I4)
    assert sp.radical(I4) == R.ideal({"gens": [2]})
    assert len(R.ideals()) == 6
    nil = R.nilradical()
    assert nil == R.ideal({"gens": [6]})


def test_worked_integer_example():
    Z = sp.Ring.integers()
    S = Z.mset({"complement_of_prime": 3})
    I = Z.ideal({"n": 6})
    assert not sp.is_irreducible(I)
    cert = sp.is_s_irreducible(I, S)
    assert cert["verdict"] is True
    cert2 = sp.is_s_primary(I, S)
    assert cert2["verdict"] is True
    assert cert2["witness"] % 6 == 2


def test_decompose_and_minimalize():
    R = sp.Ring({"kind": "zmod", "n": 12})
    S = R.mset({"gens": []})
    zero = R.ideal({"gens": []})
    d = sp.decompose(zero, S)
    assert d is not None
    assert len(d["components"]) == 2
    m = sp.minimalize(zero, S, d)
    assert m["minimal"]["minimal"] is True
    rep = sp.verify_minimality(R, S, d)
    assert rep["minimal"] is True

    Z = sp.Ring.integers()
    S3 = Z.mset({"complement_of_prime": 3})
    dz = sp.decompose(Z.ideal({"n": 6}), S3)
    assert [c["Q"]["n"] for c in dz["components"]] == [6]


def test_quotient_and_localization():
    R = sp.Ring({"kind": "zmod", "n": 12})
    Q = R.quotient(R.ideal({"gens": [4]}))
    assert Q.size == 4
    L = R.localize(R.mset({"gens": [5]}))
    assert L.size == 12
    R6 = sp.Ring({"kind": "zmod", "n": 6})
    L2 = R6.localize(R6.mset({"gens": [3]}))
    assert L2.size == 2


def test_suites():
    small = {
        "zmod_moduli": [4, 6, 12],
        "include_products": False,
        "include_idealizations": False,
        "z_samples": 2,
    }
    rep = sp.run_suite("main-theorem", small)
    assert rep["verdict"] == "pass"
    assert rep["instances"] > 0
    assert sorted(sp.suite_names()) == sorted(
        ["intersection", "quotient-transfer", "nil-primary", "spectrum", "localization",
         "main-theorem"])
    pairs = sp.generate_corpus(small)
    assert len(pairs) > 3


def test_validation_errors_surface_as_exceptions():
    R = sp.Ring({"kind": "zmod", "n": 12})
    try:
        R.mset({"gens": [6]})
    except ValueError as e:
        assert "reached 0" in str(e)
    else:
        raise AssertionError("expected a ValueError")


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            fn()
            print(f"{name}: ok")
    print("python smoke tests passed")
