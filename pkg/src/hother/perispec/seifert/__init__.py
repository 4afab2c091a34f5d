"""Exact invariants of Seifert fibered homology spheres and their mapping tori."""

from hother.perispec.seifert.data import NormalizedInvariants, SeifertData
from hother.perispec.seifert.dedekind import dedekind_sum, reciprocity_defect
from hother.perispec.seifert.invariants import (
    EtaPair,
    InvariantReport,
    LambdaSW,
    brieskorn_casson,
    canonical_square_closed_form,
    casson,
    dedekind_total,
    eta_invariants,
    euler_number,
    euler_orbifold,
    geometric_genus,
    invariant_report,
    lambda_sw_mapping_tori,
    mu_bar,
    vortex_count,
    w_correction,
)
from hother.perispec.seifert.plumbing import PlumbingGraph, negative_continued_fraction, plumbing_graph
from hother.perispec.seifert.sweep import (
    BarmuReport,
    BarmuVerdict,
    SeifertRange,
    check_barmu,
    check_instance,
    enumerate_instances,
    invariant_sweep,
    sweep_rows,
    write_sweep_csv,
)

__all__ = [
    "BarmuReport",
    "BarmuVerdict",
    "EtaPair",
    "InvariantReport",
    "LambdaSW",
    "NormalizedInvariants",
    "PlumbingGraph",
    "SeifertData",
    "SeifertRange",
    "brieskorn_casson",
    "canonical_square_closed_form",
    "casson",
    "check_barmu",
    "check_instance",
    "dedekind_sum",
    "dedekind_total",
    "enumerate_instances",
    "eta_invariants",
    "euler_number",
    "euler_orbifold",
    "geometric_genus",
    "invariant_report",
    "invariant_sweep",
    "lambda_sw_mapping_tori",
    "mu_bar",
    "negative_continued_fraction",
    "plumbing_graph",
    "reciprocity_defect",
    "sweep_rows",
    "vortex_count",
    "write_sweep_csv",
]
