import pytest

sturmia = pytest.importorskip("sturmia")


def test_prefix_and_continuants():
    assert sturmia.characteristic_prefix("[0;1*]", 8) == "10110101"
    assert sturmia.continuants("[0;2*]", 5) == ["1", "2", "5", "12", "29", "70"]


def test_encode_decode():
    digits = sturmia.encode("[0;1*]", "100", 12)
    assert digits == [0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 1, 0]
    assert sturmia.decode("[0;1*]", digits) == "100"


def test_repetition_and_torsion():
    word = sturmia.characteristic_prefix("[0;1*]", 200)
    assert sturmia.repetition_table(word, 6) == [2, 3, 3, 5, 5, 5]
    assert sturmia.torsion_k("[0;1*]", 2) == 3
    assert sturmia.torsion_k("[0;1*]", 5, k_max=4) is None


def test_errors_and_run():
    with pytest.raises(sturmia.SturmiaError):
        sturmia.characteristic_prefix("[0;", 3)
    assert sturmia.run_json("torsion", "--slope", "[0;1*]", "-N", "4")["k"] == 5
    code, _, err = sturmia.run(["word"])
    assert code == 2 and err
