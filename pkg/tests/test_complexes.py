import pytest

from htwist.rings import ZZ, QQ
from htwist.complexes import (
    ChainComplex,
    ChainMap,
    GradedBasis,
    HomologySummary,
    TruncationTooLow,
    cone_on_identity,
    ground_complex,
    homology,
    induced_zero_on_reduced_homology,
    is_quasi_iso_through,
    suspend,
    tensor_complex,
    verify_differential,
)


def two_step(ring=ZZ, mult=2, N=2):
    """0 -> R -(x mult)-> R -> 0 in degrees 1, 0."""
    basis = GradedBasis(N, {0: ["a"], 1: ["b"]})
    X = ChainComplex(ring, basis)
    X.set_d_entry(1, "b", "a", mult)
    return X


def test_homology_mod2():
    # H_0 = Z/2, H_1 = 0: derived from SNF of (2)
    X = two_step()
    H = homology(X, 1)
    assert H.by_degree[0] == (0, [2])
    assert H.by_degree[1] == (0, [])


def test_homology_zero_differential_over_Q():
    basis = GradedBasis(3, {0: ["a"], 1: ["b"], 2: ["c"]})
    X = ChainComplex(QQ, basis)
    H = homology(X, 2)
    assert all(H.by_degree[n] == (1, []) for n in (0, 1, 2))


def test_homology_cone_is_acyclic():
    X = two_step(ZZ, 3)
    C = cone_on_identity(X)
    ok, _ = verify_differential(C)
    assert ok
    H = homology(C, 2)
    assert all(H.by_degree[n] == (0, []) for n in (0, 1, 2))
    # contractible model (apex added): H_0 = ground ring, H_{>0} = 0
    from htwist.complexes import direct_sum

    P = direct_sum(ground_complex(ZZ, C.truncation), C)
    HP = homology(P, 2)
    assert HP.by_degree[0] == (1, [])
    assert HP.by_degree[1] == HP.by_degree[2] == (0, [])


def test_truncation_guard():
    X = two_step()
    with pytest.raises(TruncationTooLow):
        homology(X, 2)


def test_verify_differential_witness():
    basis = GradedBasis(2, {0: ["a"], 1: ["b"], 2: ["c"]})
    X = ChainComplex(ZZ, basis)
    X.set_d_entry(1, "b", "a", 1)
    X.set_d_entry(2, "c", "b", 1)  # d1 d2 = a != 0
    ok, witness = verify_differential(X)
    assert not ok
    assert witness == {"degree": 2, "element": "c", "hits": "a"}


def test_empty_complex_passes():
    X = ChainComplex(ZZ, GradedBasis(3))
    ok, _ = verify_differential(X)
    assert ok


def test_quasi_iso_identity_and_zero():
    X = two_step()
    assert is_quasi_iso_through(ChainMap.identity(X), 1)[0]
    # zero map between two non-acyclic complexes fails
    Y = two_step()
    z = ChainMap(X, Y)
    ok, report = is_quasi_iso_through(z, 0)
    assert not ok and not report[0]["surjective"]


def test_quasi_iso_needs_torsion_match():
    X = two_step(ZZ, 2)
    Y = two_step(ZZ, 4)
    f = ChainMap(X, Y)
    f.set_entry(0, "a", "a", 1)
    f.set_entry(1, "b", "b", 2)  # chain map: 2*4 = 2*... check: f d = 4? d f
    # f(d b) = f(2a) = 2a ; d(f b) = d(2b) = 8a -> not a chain map; fix
    f.components.clear()
    f.set_entry(0, "a", "a", 2)
    f.set_entry(1, "b", "b", 1)
    assert f.is_chain_map()[0]
    ok, _ = is_quasi_iso_through(f, 1)
    assert not ok  # Z/2 vs Z/4


def test_tensor_unit_and_koszul_sign():
    X = two_step(ZZ, 2)
    U = ground_complex(ZZ)
    T = tensor_complex(X, U)
    assert homology(T, 1) == homology(X, 1)

    # sign check: |x| = 1 forces coefficient -1 on x1 ⊗ dy1
    A = ChainComplex(ZZ, GradedBasis(4, {1: ["x1"]}))
    B = two_step(ZZ, 1, N=2)  # d(b) = a
    T2 = tensor_complex(A, B)
    d = T2.d_of(2, "x1⊗b")
    assert d == {"x1⊗a": -1}


def test_tensor_of_two_acyclics_is_acyclic():
    I = two_step(ZZ, 1, N=2)  # 0 -> Z -id-> Z: acyclic
    T = tensor_complex(I, I)
    ok, _ = verify_differential(T)
    assert ok
    H = homology(T, 2)
    assert all(H.by_degree[n] == (0, []) for n in (0, 1, 2))


def test_tensor_associative_on_homology():
    X = two_step(ZZ, 2, N=2)
    Y = two_step(ZZ, 3, N=2)
    Z = two_step(ZZ, 0, N=2)
    left = tensor_complex(tensor_complex(X, Y), Z)
    right = tensor_complex(X, tensor_complex(Y, Z))
    assert homology(left, 3) == homology(right, 3)


def test_suspend_marks_degree_and_sign():
    A = ChainComplex(ZZ, GradedBasis(2, {1: ["x1"]}))
    S = suspend(A, 1)
    assert S.basis.names(2) == ["s(x1)"]
    # d(s x) = -s(d x) on a complex with d != 0
    B = two_step(ZZ, 5, N=2)
    SB = suspend(B, 1)
    assert SB.d_of(2, "s(b)") == {"s(a)": -5}
    back = suspend(suspend(A, 1), -1)
    assert back.basis.names(1) == ["s-1(s(x1))"]


def test_universal_coefficients_rank_check():
    X = two_step(ZZ, 2, N=3)
    XQ = two_step(QQ, 2, N=3)
    HZ = homology(X, 2)
    HQ = homology(XQ, 2)
    for n in range(3):
        assert HQ.by_degree[n][0] == HZ.by_degree[n][0]


def test_composite_quasi_iso():
    X = two_step(ZZ, 2)
    f = ChainMap.identity(X)
    g = ChainMap.identity(X)
    ok, _ = is_quasi_iso_through(f.compose(g), 1)
    assert ok


def test_induced_zero_on_reduced_homology():
    X = two_step(ZZ, 0, N=2)  # H_1 = Z
    f = ChainMap.identity(X)
    assert not induced_zero_on_reduced_homology(f, 1)
    z = ChainMap(X, X)
    z.set_entry(0, "a", "a", 1)
    assert induced_zero_on_reduced_homology(z, 1)
