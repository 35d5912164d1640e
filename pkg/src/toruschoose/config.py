"""Desk-scale limits.

Exact solvers refuse instances above these sizes instead of approximating.
The CLI overrides them through ``--max-vertices`` and ``--budget-edges``.
"""
from dataclasses import dataclass


@dataclass
class Limits:
    max_vertices_exact: int = 40
    max_vertices_isomorphism: int = 20
    max_eulerian_edges: int = 30


LIMITS = Limits()
