"""Lattice models: Gram data, invariants, arithmetic, serialization."""

from fractions import Fraction

import pytest

from dpforms import (
    HIRZEBRUCH,
    PLANE,
    BasisMismatchError,
    InputFormatError,
    ParameterError,
    anticanonical_class,
    build_model,
    classes_to_document,
    document_to_classes,
    gram_determinant,
    intersect,
    is_unimodular,
    k_squared_singular,
    lattice_signature,
    load_schema,
    signature_of,
)


def test_hirzebruch_gram():
    model = build_model(2, 5)
    assert model.rank == 7
    assert model.basis_names == ("Q", "F", "E_1", "E_2", "E_3", "E_4", "E_5")
    q, f = model.basis_class(0), model.basis_class(1)
    assert model.intersect(q, q) == -2
    assert model.intersect(q, f) == 1
    assert model.intersect(f, f) == 0
    for i in range(2, 7):
        for j in range(2, 7):
            want = -1 if i == j else 0
            assert model.intersect(model.basis_class(i), model.basis_class(j)) == want
        assert model.intersect(q, model.basis_class(i)) == 0
        assert model.intersect(f, model.basis_class(i)) == 0


def test_plane_gram_and_distinguished():
    model = build_model(2, 6, PLANE)
    assert model.rank == 8
    diag = [model.gram[i][i] for i in range(8)]
    assert diag == [1, -1, -1, -1, -1, -1, -1, -1]
    assert all(model.gram[i][j] == 0 for i in range(8) for j in range(8) if i != j)
    named = model.distinguished
    assert named["Q"].coeffs == (2, -1, -1, -1, -1, -1, -1, 0)
    assert named["E_1"].coeffs == (0, 1, 0, 0, 0, 0, 0, 0)
    assert named["E_1'"].coeffs == (1, -1, 0, 0, 0, 0, 0, -1)
    q = named["Q"]
    assert model.intersect(q, q) == -2
    for i in range(1, 7):
        e, ep = named[f"E_{i}"], named[f"E_{i}'"]
        assert model.intersect(e, e) == -1
        assert model.intersect(ep, ep) == -1
        assert model.intersect(e, ep) == 1
        assert model.intersect(q, e) == 1
        assert model.intersect(q, ep) == 1


def test_anticanonical():
    assert anticanonical_class(build_model(2, 5)).coeffs == (2, 4, -1, -1, -1, -1, -1)
    assert anticanonical_class(build_model(3, 4)).coeffs == (2, 5, -1, -1, -1, -1)
    plane = build_model(2, 6, PLANE)
    mk = anticanonical_class(plane)
    assert mk.coeffs == (3, -1, -1, -1, -1, -1, -1, -1)
    assert plane.intersect(mk, mk) == 2


def test_anticanonical_square_matches_formula():
    for m in range(2, 7):
        for n in range(1, m + 6):
            model = build_model(m, n)
            mk = anticanonical_class(model)
            assert model.intersect(mk, mk) == 8 - n


def test_k_squared_singular():
    assert k_squared_singular(2, 5) == 3
    assert k_squared_singular(2, 1) == 7
    assert k_squared_singular(3, 7) == Fraction(4, 3)
    assert k_squared_singular(12, 16) == Fraction(1, 3)
    for m in range(2, 13):
        assert k_squared_singular(m, m + 4) == Fraction(4, m)


def test_unimodular_and_signature():
    for m in range(2, 6):
        for n in range(1, m + 6):
            model = build_model(m, n)
            assert is_unimodular(model)
            assert abs(gram_determinant(model)) == 1
            assert lattice_signature(model) == (1, model.rank - 1)
    plane = build_model(3, 7, PLANE)
    assert is_unimodular(plane)
    assert lattice_signature(plane) == (1, 8)


def test_signature_of_plain_matrix():
    assert signature_of(((2, 0), (0, -3))) == (1, 1)
    assert signature_of(((0, 1), (1, 0))) == (1, 1)


def test_divisor_arithmetic():
    model = build_model(2, 5)
    mk = anticanonical_class(model)
    f = model.basis_class(1)
    combo = 2 * mk - f
    assert combo.coeffs == (4, 7, -2, -2, -2, -2, -2)
    assert (combo - combo).is_zero()
    assert (-f).coeffs == (0, -1, 0, 0, 0, 0, 0)
    assert intersect(model, mk, f) == 2


def test_basis_mismatch_rejected():
    a = anticanonical_class(build_model(2, 5))
    model = build_model(2, 6)
    with pytest.raises(BasisMismatchError):
        model.intersect(a, anticanonical_class(model))


def test_divisor_length_checked():
    model = build_model(2, 5)
    with pytest.raises(ParameterError):
        model.divisor((1, 2, 3))


def test_parameter_validation():
    with pytest.raises(ParameterError):
        build_model(1, 3)
    with pytest.raises(ParameterError):
        build_model(2, 0)
    with pytest.raises(ParameterError):
        build_model(2, 8)
    with pytest.raises(ParameterError):
        build_model(2, 5, PLANE)
    with pytest.raises(ParameterError):
        build_model(2, 6, "spherical")
    with pytest.raises(ParameterError):
        k_squared_singular(2, 9)


def test_document_roundtrip():
    model = build_model(3, 4)
    classes = [anticanonical_class(model), model.basis_class(2)]
    doc = classes_to_document(model, classes)
    assert doc["format"] == 1
    assert doc["kind"] == HIRZEBRUCH
    back_model, back_classes = document_to_classes(doc)
    assert back_model.basis_tag == model.basis_tag
    assert [c.coeffs for c in back_classes] == [c.coeffs for c in classes]


def test_document_validation():
    model = build_model(3, 4)
    doc = classes_to_document(model, [anticanonical_class(model)])
    doc["surprise"] = True
    with pytest.raises(InputFormatError):
        document_to_classes(doc)
    bad_kind = classes_to_document(model, [])
    bad_kind["kind"] = "spherical"
    with pytest.raises(InputFormatError):
        document_to_classes(bad_kind)


def test_schema_files_load():
    for name in ("model.schema.json", "instance.schema.json"):
        schema = load_schema(name)
        assert schema["$id"].endswith(name)
