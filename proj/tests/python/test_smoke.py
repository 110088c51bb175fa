import sierptri


def test_sierpinski_basics():
    assert sierptri.s_vertices(1) == ["0", "1", "2"]
    assert sierptri.s_partner("022") == "200"
    assert sierptri.s_distance("000", "111") == 7
    assert sierptri.s_distance("000", "111", method="closed") == 7
    assert len(sierptri.s_median(3)) == 12


def test_triangle_graph():
    g = sierptri.TriangleGraph(2)
    assert g.median() == ["0", "1", "2", "00", "11", "22"]
    assert g.distance("01", "1") == 1


def test_lift_project_round_trip():
    a, b = sierptri.lift(2, "1")
    assert {a, b} == {"022", "200"}
    assert sierptri.project("1222") == "0"
    assert sierptri.project("022") == "1"


def test_metrics():
    m = sierptri.metrics("st", 1)
    assert m["median"] == ["0", "1", "2"]
    assert m["diameter"] == 2


def test_verify():
    report = sierptri.verify(["thm2", "eq1"], 1, 2)
    assert all(r["status"] in ("pass", "skipped") for r in report)
    assert any(r["status"] == "pass" for r in report)
