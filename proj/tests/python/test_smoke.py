import m24rh


def test_euler_characteristics():
    assert m24rh.euler_char(2, [4]) == 24
    assert m24rh.euler_char(1, [1]) == 2
    assert m24rh.euler_char_hypersurface(3, 5) == -200


def test_k3_ranks():
    out = m24rh.homotopy_ranks(2, [4], order=5)
    assert out["chi"] == 24
    assert out["ell"] == 21
    assert out["ranks"] == [22, 252, 3520, 57960, 1020096]
    assert out["routes_agree"]


def test_group_data():
    assert m24rh.group_order() == 244823040
    labels = m24rh.class_labels()
    assert len(labels) == 26 and labels[0] == "1A" and labels[-1] == "23B"
    assert m24rh.centralizer_order("23A") == 23
    assert m24rh.power_class("21A", 10) == "21B"


def test_rho_and_multiplicities():
    ranks = m24rh.rho_ranks(5)
    assert ranks["1A"] == [22, 252, 3520, 57960, 1020096]
    assert ranks["2A"][1] == 28
    mults = m24rh.multiplicities(4)
    assert mults[0][0] == -1 and mults[0][1] == 1
    assert mults[1][6] == 1 and sum(abs(x) for x in mults[1]) == 1


def test_jacobi_constant_terms():
    phi = m24rh.phi_g("1A", order=1)
    assert phi[(0, -2, 0)] == "1"
    assert phi[(0, 0, 0)] == "22"
    assert phi[(0, 2, 0)] == "1"
    h = m24rh.h_threevar(order=1)
    assert h[(0, 0, 0)] == "20"
    assert h[(0, -1, -1)] == "1"
    mags = m24rh.cd_magnitudes()
    assert mags["1A"][0] == 4096**2
    assert all(entry[2] for entry in mags.values())


def test_verify_sections():
    out = m24rh.verify(only=["table", "powermap"], mmax=12, jacobi_order=2)
    assert out["pass"]
    assert any(c["section"] == "table" for c in out["checks"])
