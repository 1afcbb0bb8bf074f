"""Smoke tests for the python module: a thin pass over the main operations."""

import hclab


def test_group_basics():
    s4 = hclab.group("S4")
    assert s4.order == 24
    assert s4.name == "S4"
    assert s4.mul(0, 5) == 5
    assert s4.element_order(1) == 2
    assert len(s4) == 24


def test_lattice_and_characteristic_subgroups():
    s4 = hclab.group("S4")
    subs = hclab.all_subgroups(s4)
    assert len(subs) == 30
    assert hclab.fitting(s4).size == 4
    assert hclab.generalized_fitting(s4).size == 4
    assert hclab.center(s4).size == 1
    assert hclab.nilpotent_residual(s4).size == 12
    assert hclab.sylow_subgroup(s4, 2).size == 8


def test_embedding_predicates():
    s4 = hclab.group("S4")
    transposition = hclab.generated_subgroup(s4, [1])
    assert transposition.size == 2
    v = hclab.is_hc_subgroup(transposition)
    assert v["holds"]
    assert len(v["witness"]) == 12  # T = A4

    h = hclab.is_h_subgroup(transposition)
    assert not h["holds"]
    g, x = h["counterexample"]
    conj = [s4.mul(s4.mul(s4.inv(g), e), g) for e in transposition.elements]
    assert x in conj and x not in transposition.elements


def test_class_predicates():
    assert hclab.is_nilpotent(hclab.group("Q8"))
    assert not hclab.is_nilpotent(hclab.group("S3"))
    assert hclab.is_supersolvable(hclab.group("S3"))
    assert not hclab.is_supersolvable(hclab.group("A4"))
    assert not hclab.is_solvable(hclab.group("A5"))
    assert hclab.is_p_nilpotent(hclab.group("S3"), 2)


def test_quotient_and_isomorphism():
    s4 = hclab.group("S4")
    v4 = hclab.fitting(s4)
    q, pi = hclab.quotient(s4, v4.elements)
    assert q.order == 6
    assert hclab.is_isomorphic(q, hclab.group("S3"))
    assert all(pi[s4.mul(a, b)] == q.mul(pi[a], pi[b]) for a in range(24) for b in range(24))


def test_corpus_and_verify():
    names = [g.name for g in hclab.corpus()]
    assert len(names) == 34
    assert "SL(2,3)" in names and "S5" in names

    report = hclab.verify(["T3.1", "L2.8"], jobs=2)
    assert report["fails"] == 0
    assert report["skips"] == 0
    assert report["tallies"]["T3.1"]["non_vacuous"] >= 1
    assert report["tallies"]["L2.8"]["non_vacuous"] >= 1
    assert set(hclab.statement_ids()) >= {"L2.1.1", "T3.6", "C3.2"}


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for t in tests:
        t()
        print(f"ok {t.__name__}")
    print(f"{len(tests)} smoke tests passed")


if __name__ == "__main__":
    main()
