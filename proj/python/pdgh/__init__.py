"""Partial-dual genus polynomials of ribbon graphs and their bigraded cohomology."""

from ._core import (
    CapError,
    ParseError,
    RibbonGraph,
    bar_amalgamation,
    disjoint_union,
    e_tilde,
    euler_characteristic,
    graded_pd_genus_polynomial,
    homology,
    pd_genus_polynomial,
    ribbon_join,
    verify_d2_zero,
    verify_frobenius,
    verify_main_theorem,
)

__all__ = [
    "CapError",
    "ParseError",
    "RibbonGraph",
    "bar_amalgamation",
    "disjoint_union",
    "e_tilde",
    "euler_characteristic",
    "graded_pd_genus_polynomial",
    "homology",
    "pd_genus_polynomial",
    "ribbon_join",
    "verify_d2_zero",
    "verify_frobenius",
    "verify_main_theorem",
]
