import pytest

import modlie

NA2 = "p 2\ndim 2\nbracket 1 2 : 0 1\npmap 1 : 1 0\npmap 2 : 0 0\n"


def test_corpus_listing():
    names = modlie.corpus_names()
    assert "NA2p2" in names
    assert "W15p5" in names
    text = modlie.corpus_entry("NA2p2")
    assert modlie.canonical(text) == text


def test_info():
    d = modlie.info(NA2)
    assert d["p"] == 2
    assert d["dim"] == 2
    assert d["derived_dim"] == 1
    assert d["centre_dim"] == 0
    assert d["has_pmap"] is True
    assert d["restrictable"] is True
    assert len(d["input_hash"]) == 16


def test_parse_errors_become_value_errors():
    with pytest.raises(ValueError, match="not prime"):
        modlie.info("p 4\ndim 1\n")
    with pytest.raises(ValueError, match="Jacobi"):
        modlie.info(
            "p 2\ndim 3\nbracket 1 2 : 1 0 0\nbracket 2 3 : 0 1 0\n"
        )


def test_solve_pmap():
    bare = "p 2\ndim 2\nbracket 1 2 : 0 1\n"
    solved = modlie.solve_pmap(bare)
    assert solved is not None
    assert "pmap 1 :" in solved
    # The 3-dim algebra with an irreducible derived action has no p-map.
    nr3 = modlie.corpus_entry("NR3p2")
    assert modlie.solve_pmap(nr3) is None


def test_restricted_construction():
    res = modlie.construct(NA2, kind="restricted")
    assert res["ok"] is True
    assert res["dim"] == 2
    assert res["bound"] == 2
    assert res["summand_dims"] == [2]
    check = modlie.check_module(NA2, res["module"])
    assert check["law"] is True
    assert check["faithful"] is True
    assert check["kernel_dim"] == 0


def test_general_construction_and_determinism():
    nr3 = modlie.corpus_entry("NR3p2")
    a = modlie.construct(nr3, kind="general", seed=1)
    b = modlie.construct(nr3, kind="general", seed=1)
    assert a["ok"] and b["ok"]
    assert a["dim"] == 4
    assert a["certificate"] == b["certificate"]
    assert a["module"] == b["module"]


def test_composition_dims():
    h3 = modlie.corpus_entry("H3p2")
    res = modlie.construct(h3, kind="restricted")
    assert res["dim"] == 4
    assert sorted(modlie.composition_dims(res["module"])) == [2, 2]


def test_envelope():
    nr3 = modlie.corpus_entry("NR3p2")
    env = modlie.envelope(nr3, mode="paper")
    assert env["ok"] is True
    assert env["original_dim"] == 3
    assert env["host_dim"] == 4
    assert "pmap" in env["host"]


def test_induced():
    mod = modlie.induced(NA2, [[0, 1]])
    assert "moddim 2" in mod
    check = modlie.check_module(NA2, mod)
    assert check["law"] and check["faithful"]
