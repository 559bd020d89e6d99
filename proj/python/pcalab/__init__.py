"""Checkers for finite partial combinatory algebras, abstract Krivine
structures, realizability triposes and Kleene's second model."""

from ._pcalab import (
    Aks,
    InputError,
    Opca,
    Report,
    admissible_U,
    booleanization,
    build_aks,
    check_aks,
    check_filter,
    check_kr,
    check_opca,
    check_order_ca,
    check_pierce,
    is_applicative,
    k2,
    lattice_names,
    lattice_opca,
    load_aks,
    load_opca,
    localic_criterion,
    localic_triangulation,
    run_cli,
    tv_least,
    with_U,
)

__all__ = [
    "Aks",
    "InputError",
    "Opca",
    "Report",
    "admissible_U",
    "booleanization",
    "build_aks",
    "check_aks",
    "check_filter",
    "check_kr",
    "check_opca",
    "check_order_ca",
    "check_pierce",
    "is_applicative",
    "k2",
    "lattice_names",
    "lattice_opca",
    "load_aks",
    "load_opca",
    "localic_criterion",
    "localic_triangulation",
    "run_cli",
    "tv_least",
    "with_U",
]
