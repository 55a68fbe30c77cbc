"""Kirillov-Reshetikhin crystals of affine types A, D_{n+1}^{(2)}, C_n^{(1)} and D_n^{(1)}.

Matrix, symmetric-matrix and tableau models with graph generation and
differential checks against independent reference constructions.
"""

from .graph import CrystalGraph, generate_graph
from .kr_a import KRTypeA, PromotionKR
from .kr_d import KRTypeD
from .kr_folded import KRFolded
from .suites import build_graph, make_instance, run_suites
from .weights import CartanType, Weight

__all__ = ["CartanType", "CrystalGraph", "KRFolded", "KRTypeA", "KRTypeD", "PromotionKR",
           "Weight", "build_graph", "generate_graph", "make_instance", "run_suites"]
