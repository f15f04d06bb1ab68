"""The acceptance gate: one test per criterion, exact arithmetic throughout.

Each test prints its own pass/fail line so the suite output doubles as the
acceptance report; the same checks back the `corpus` subcommand.
"""

import pytest

from monodromic.acceptance import CRITERIA

_BY_NAME = dict(CRITERIA)


def _run(name):
    ok, detail = _BY_NAME[name]()
    print(f"{'PASS' if ok else 'FAIL'}  {name}")
    assert ok, detail


def test_criterion_01_koszul_exactness():
    _run("koszul-exactness")


def test_criterion_02_homotopy_identity():
    _run("homotopy-identity")


def test_criterion_03_tail_exactness():
    _run("tail-exactness")


def test_criterion_04_filtered_acyclicity():
    _run("filtered-acyclicity")


def test_criterion_05_strictness_degeneration():
    _run("strictness-degeneration")


def test_criterion_06_fourier_oracle():
    _run("fourier-oracle")


def test_criterion_07_vfiltration_construction():
    _run("vfiltration-construction")


def test_criterion_08_fourier_inversion():
    _run("fourier-inversion")


def test_criterion_09_filtration_algorithms():
    _run("filtration-algorithms")


def test_criterion_10_weight_structure():
    _run("weight-structure")


def test_criterion_11_hodge_formulas():
    _run("hodge-formulas")
