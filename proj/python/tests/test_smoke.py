import pytest

import braidcable as bc


def test_cable_word_doubles_a_crossing():
    assert bc.cable_word(2, 2, [1]) == [2, 1, 3, 2]
    assert bc.cable_word(3, 1, [1, -2]) == [1, -2]


def test_burau_generator_and_json_encoding():
    m = bc.eval_word("burau", 2, [1])
    assert m == [[{"1": "1", "-1": "-1"}, {"1": "1"}], [{"-1": "1"}, {}]]


def test_series_expansion():
    m = bc.eval_word("burau", 2, [1], series_order=2)
    assert m[0][0] == ["0", "1"]
    assert m[0][1] == ["1", "1/2"]


def test_bigelow_element_is_in_both_kernels():
    beta = bc.bigelow_element()
    assert len(beta) == 118
    assert bc.underlying_permutation(5, beta) == [0, 1, 2, 3, 4]
    assert not bc.artin_action_is_trivial(5, beta)
    verdict = bc.kernel_check(5, 2, beta)
    assert verdict["burau"] and verdict["cabled"] and verdict["agree"]


def test_decompositions_verify():
    assert bc.decompose(2, 2, infinitesimal=True)["verified"]
    report = bc.decompose(3, 2, emit_intertwiner=True)
    assert report["verified"]
    assert len(report["intertwiner"]) == 6
    assert [b["multiplicity"] for b in report["blocks"]] == [1, 1]


def test_invariants():
    assert bc.determinant_consistency(3, 3)
    assert bc.commutant_dimension("sym", 3) == 1
    assert bc.commutant_dimension("burau", 3) == 2
    assert bc.framing_criterion_holds(4, 2)
    assert bc.linking_numbers(3, [2, 1, 1, -2])[(1, 3)] == 1


def test_errors_surface_as_python_exceptions():
    with pytest.raises(ValueError):
        bc.eval_word("lawrence", 3, [1])
    with pytest.raises(ValueError):
        bc.cable_word(2, 2, [3])


def test_acceptance_grid_passes():
    results = bc.acceptance()
    assert [r["id"] for r in results] == list(range(1, 9))
    assert all(r["passed"] for r in results), results
