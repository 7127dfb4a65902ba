"""The acceptance suite as pytest: one test per published criterion.

Each test prints its PASS/FAIL line (run with -s to see them inline)
and asserts exact success.  The two search criteria take a few minutes
each; the worker count comes from K3SIEGEL_WORKERS (default: 2 here).
"""

import os
import time

import pytest

from k3siegel import acceptance

WORKERS = int(os.environ.get("K3SIEGEL_WORKERS", "2"))


def _run(name, fn, *args):
    t0 = time.time()
    ok, detail = fn(*args)
    print(f"{'PASS' if ok else 'FAIL'} {name}: {detail} [{time.time() - t0:.1f}s]")
    assert ok, f"{name}: {detail}"


def test_criterion_1_setup2_census():
    _run("setup2-census", acceptance.criterion_setup2_census)


def test_criterion_2_setup2_id523():
    _run("setup2-id523", acceptance.criterion_setup2_id523)


def test_criterion_3_unramified_cyclotomic_set():
    _run("unramified-cyclotomic-set", acceptance.criterion_L0)


def test_criterion_4_trace_sequence():
    _run("trace-sequence", acceptance.criterion_trace_sequence)


def test_criterion_5_rho18_pipeline():
    _run("rho18-pipeline", acceptance.criterion_rho18_pipeline)


def test_criterion_6_rho18_table():
    _run("rho18-table", acceptance.criterion_rho18_table, WORKERS)


def test_criterion_7_closed_form_P():
    _run("closed-form-P", acceptance.criterion_closed_form_P)


def test_criterion_8_index_sum_identities():
    _run("index-sum-identities", acceptance.criterion_index_sum_identities)


def test_criterion_9_jet_oracle():
    _run("jet-oracle", acceptance.criterion_jet_oracle)


def test_criterion_10_picard2_certification():
    _run("picard2-certification", acceptance.criterion_picard2)


def test_criterion_11_rho2_spot_rows():
    _run("rho2-spot-rows", acceptance.criterion_rho2_spot_rows, WORKERS)


def test_criterion_12_structural_properties():
    _run("structural-properties", acceptance.criterion_structural_properties)
