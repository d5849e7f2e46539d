import json

import pytest

from quotient_closed.errors import CycleError, DisconnectedError, NumberingError, QuiverError
from quotient_closed.quiver import (builtin, cartan_matrix, classify_dynkin, coxeter_word,
                                    double_quiver, euler_matrix, load_quiver,
                                    suggest_renumbering, validate_quiver)
from quotient_closed.weyl import enumerate_group
from quotient_closed.errors import CapExceeded


def test_linear_a3_is_dynkin():
    q = validate_quiver({"n": 3, "arrows": [[1, 2], [2, 3]]})
    assert q.dynkin_type == "A3"


def test_triangle_is_valid_non_dynkin():
    q = validate_quiver({"n": 3, "arrows": [[1, 2], [2, 3], [1, 3]]})
    assert q.dynkin_type is None
    assert not q.is_dynkin


def test_two_cycle_rejected():
    with pytest.raises(CycleError):
        validate_quiver({"n": 2, "arrows": [[1, 2], [2, 1]]})


def test_bad_numbering_rejected():
    with pytest.raises(NumberingError):
        validate_quiver({"n": 2, "arrows": [[2, 1]]})


def test_disconnected_rejected():
    with pytest.raises(DisconnectedError):
        validate_quiver({"n": 3, "arrows": [[1, 2]]})


def test_malformed_rejected():
    with pytest.raises(QuiverError):
        validate_quiver({"arrows": []})


def test_suggest_renumbering_makes_admissible():
    arrows = [(3, 1), (1, 2)]
    relabel = suggest_renumbering(3, arrows)
    fixed = [(relabel[i], relabel[j]) for i, j in arrows]
    q = validate_quiver({"n": 3, "arrows": fixed})
    assert q.dynkin_type == "A3"


@pytest.mark.parametrize("name,kind", [("A1", "A1"), ("A5", "A5"), ("D4", "D4"), ("D6", "D6"),
                                       ("E6", "E6"), ("E7", "E7"), ("E8", "E8"),
                                       ("triangle", None), ("kronecker", None)])
def test_builtin_types(name, kind):
    assert builtin(name).dynkin_type == kind


def test_affine_d_is_not_dynkin():
    # four arms of length one around a centre
    assert classify_dynkin(5, [(1, 5), (2, 5), (3, 5), (4, 5)]) is None
    # E-shape with arms 2,2,2 is affine E6
    assert classify_dynkin(7, [(1, 2), (2, 3), (3, 4), (4, 5), (3, 6), (6, 7)]) is None


def test_cartan_examples():
    assert cartan_matrix(builtin("A2")) == ((2, -1), (-1, 2))
    tri = cartan_matrix(builtin("triangle"))
    assert all(tri[i][j] == -1 for i in range(3) for j in range(3) if i != j)
    assert cartan_matrix(builtin("kronecker")) == ((2, -2), (-2, 2))


def test_euler_examples():
    assert euler_matrix(builtin("A2")) == ((1, -1), (0, 1))
    assert euler_matrix(builtin("A3")) == ((1, -1, 0), (0, 1, -1), (0, 0, 1))
    assert euler_matrix(builtin("triangle")) == ((1, -1, -1), (0, 1, -1), (0, 0, 1))


@pytest.mark.parametrize("name", ["A1", "A3", "D5", "E6", "triangle", "kronecker"])
def test_cartan_is_symmetrised_euler(name):
    q = builtin(name)
    a, e = cartan_matrix(q), euler_matrix(q)
    n = q.n
    assert all(a[i][j] == a[j][i] == e[i][j] + e[j][i] for i in range(n) for j in range(n))
    assert all(e[i][j] == 0 for i in range(n) for j in range(i))


def test_coxeter_word():
    assert coxeter_word(builtin("A3")) == (1, 2, 3)
    assert coxeter_word(builtin("A2")) == (1, 2)
    assert coxeter_word(builtin("A1")) == (1,)


def test_double_quiver():
    d = double_quiver(builtin("A2"))
    assert d.arrows == ((1, 2), (2, 1))
    assert len(double_quiver(builtin("A3")).arrows) == 4
    tri = double_quiver(builtin("triangle"))
    assert len(tri.arrows) == 6
    for m in range(3):
        assert tri.arrows[tri.partner(m)] == tuple(reversed(tri.arrows[m]))


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "A4", "D4", "triangle", "kronecker"])
def test_dynkin_detection_agrees_with_finiteness(name):
    q = builtin(name)
    try:
        enumerate_group(q, cap=500)
        finite = True
    except CapExceeded:
        finite = False
    assert finite == q.is_dynkin


def test_load_quiver_inline_and_file(tmp_path):
    raw = {"n": 3, "arrows": [[1, 2], [2, 3], [1, 3]], "name": "tri"}
    assert load_quiver(json.dumps(raw)).arrows == ((1, 2), (2, 3), (1, 3))
    path = tmp_path / "q.json"
    path.write_text(json.dumps(raw))
    assert load_quiver(str(path)).name == "tri"
    assert load_quiver("D5").n == 5
