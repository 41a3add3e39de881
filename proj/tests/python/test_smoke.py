import ffsolve

E2 = "ring int\ndims 3 4\n1 1 1 6\n1 2 3 14\n1 4 9 36\n"
E1 = "ring int\ndims 2 3\n1 2 3\n4 5 9\n"


def test_solve_onepass():
    r = ffsolve.solve(E2, alg="onepass")
    assert r["delta"] == "2"
    assert r["minors"] == [["2"], ["4"], ["6"]]
    assert r["solution"]["values"] == ["1", "2", "3"]
    assert r["counts"] == {"mul": 20, "div": 2, "addsub": 11}


def test_all_algorithms_agree():
    sols = [ffsolve.solve(E1, alg=a)["solution"]["values"]
            for a in ("dodgson", "bareiss", "fb", "onepass", "modular")]
    assert all(s == ["1", "1"] for s in sols)


def test_verify():
    r = ffsolve.verify(E2)
    assert r["agree"] is True
    assert r["summary"] == "4 algorithms + oracle agree"


def test_count_formulas():
    c = ffsolve.count_formulas("onepass", 3, 4)
    assert (c["mul"], c["div"], c["addsub"]) == (20, 2, 11)


def test_predict():
    r = ffsolve.predict(3)
    assert r["counts"]["onepass"] == {"mul": 20, "div": 2, "addsub": 11}
    assert r["counts"]["dodgson"]["div_printed"] == -13
    assert r["counts"]["dodgson"]["div_corrected"] == 2


def test_hadamard_and_serialize():
    assert ffsolve.hadamard_bound(E1) == "42"
    assert ffsolve.serialize(E2) == E2
