"""Model construction from (family, n, r, s) and the named verification suites."""

from __future__ import annotations

from dataclasses import dataclass

from .crystal import restrict
from .graph import DEFAULT_BUDGET, CrystalGraph, generate_graph
from .involutions import run_identities
from .kr_a import KRTypeA, PromotionKR, bitableau_op_nw, bitableau_op_se, col_letters, matrix_op, row_letters
from .kr_d import EVEN, ODD, KRTypeD, oracle_index_set, spin_image, spin_tensor
from .kr_folded import (KRFolded, fold_tableau_op_nw, fold_tableau_op_se, folded_op, is_folded_element,
                        kappa_fold, symmetric_matrices)
from .rsk import ell, kappa_nw, kappa_se, matrices
from .tableau import LOWER, RAISE, barred, conjugate, count_ssyt, partitions_in_box, rectify, tableau_op
from .verify import Report, graph_isomorphism, verify_axioms, verify_strings

FAMILIES = ("A", "Dtwisted", "C", "D1")
SUITES = ("axioms", "strings", "iso-promotion", "transport", "oracle-spin", "identities", "closure")


@dataclass(frozen=True)
class Instance:
    family: str
    n: int
    r: int
    s: int

    def label(self) -> str:
        return f"{self.family} n={self.n} r={self.r} s={self.s}"


def make_instance(family: str, n: int, r: int | None, s: int) -> Instance:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    if s < 1:
        raise ValueError("s must be positive")
    if family == "A":
        if n < 2 or r is None or not 1 <= r <= n - 1:
            raise ValueError("type A needs n >= 2 and 1 <= r <= n-1")
    elif family in ("Dtwisted", "C"):
        r = n if r is None else r
        if n < 2 or r != n:
            raise ValueError(f"{family} models exist for r = n >= 2 only")
    else:
        r = n if r is None else r
        if n < 4 or r not in (n, n - 1):
            raise ValueError("D1 models exist for n >= 4 and r in {n-1, n}")
    return Instance(family, n, r, s)


def make_model(inst: Instance):
    if inst.family == "A":
        return KRTypeA(inst.n, inst.r, inst.s)
    if inst.family in ("Dtwisted", "C"):
        return KRFolded(inst.n, inst.s, 1 if inst.family == "Dtwisted" else 2)
    return KRTypeD(inst.n, inst.s, EVEN if inst.r == inst.n else ODD)


def build_graph(inst: Instance, budget: int = DEFAULT_BUDGET):
    model = make_model(inst)
    g = generate_graph(model, model.seeds(), budget=budget, context={"r": inst.r, "s": inst.s})
    return model, g


def expected_count(inst: Instance) -> int:
    """Independent vertex count: SSYT enumeration (A, D1) or symmetric-matrix enumeration (folded)."""
    n, r, s = inst.n, inst.r, inst.s
    if inst.family == "A":
        return count_ssyt((s,) * r, n)
    if inst.family == "D1":
        total = 0
        for lam in partitions_in_box(n, s):
            cols = conjugate(lam)
            if r == n and all(c % 2 == 0 for c in cols):
                total += count_ssyt(lam, n)
            elif r == n - 1 and len(cols) == s and all(c % 2 for c in cols):
                total += count_ssyt(lam, n)
        return total
    fold = 1 if inst.family == "Dtwisted" else 2
    # every entry sum is bounded by n * (fold * s): P has at most n rows of length ell
    return sum(1 for M in symmetric_matrices(n, fold, n * fold * s) if ell(M) <= fold * s)


# ---------------------------------------------------------------- suites

def suite_axioms(inst, model, g) -> Report:
    return verify_axioms(g)


def suite_strings(inst, model, g) -> Report:
    rep = Report("strings")
    for i in g.index_set:
        sub = verify_strings(g, i)
        rep.checked += sub.checked
        for v in sub.violations:
            rep.add(f"i={i}: {v}")
    return rep


def suite_iso_promotion(inst, model, g) -> Report:
    rep = Report("iso-promotion")
    if inst.family != "A":
        rep.add("the promotion reference model exists for type A only")
        return rep
    ref = PromotionKR(inst.n, inst.r, inst.s)
    res = graph_isomorphism(g, generate_graph(ref, ref.seeds()))
    rep.checked = len(g)
    if not res.ok:
        rep.add(res.reason)
    return rep


def _compare(rep, label, got, want):
    rep.checked += 1
    if got != want:
        rep.add(f"{label}: {got} != {want}")


def transport_type_a(n: int, r: int, max_total: int = 4) -> Report:
    """kappa-SE intertwines I_0, kappa-NW intertwines I_r, on all ambient matrices of small sum."""
    rep = Report("transport")
    for M in matrices(row_letters(r), col_letters(n, r), max_total):
        se, nw = kappa_se(M), kappa_nw(M)
        for d in (RAISE, LOWER):
            for i in range(n):
                N = matrix_op(M, i, d, n, r)
                if i != 0:
                    _compare(rep, f"SE {d}_{i} {M.key()}", bitableau_op_se(se, i, d, n, r),
                             None if N is None else kappa_se(N))
                if i != r:
                    _compare(rep, f"NW {d}_{i} {M.key()}", bitableau_op_nw(nw, i, d, n, r),
                             None if N is None else kappa_nw(N))
    return rep


def transport_folded(n: int, fold: int, max_total: int = 4) -> Report:
    rep = Report("transport")
    for M in symmetric_matrices(n, fold, max_total):
        se, nw = kappa_fold(M, "se"), kappa_fold(M, "nw")
        for d in (RAISE, LOWER):
            for i in range(n + 1):
                N = folded_op(M, i, d, n, fold)
                if i != 0:
                    _compare(rep, f"SE {d}_{i} {M.key()}", fold_tableau_op_se(se, i, d, n, fold),
                             None if N is None else kappa_fold(N, "se"))
                if i != n:
                    _compare(rep, f"NW {d}_{i} {M.key()}", fold_tableau_op_nw(nw, i, d, n, fold),
                             None if N is None else kappa_fold(N, "nw"))
    return rep


def representative_independence(model: KRTypeD, g: CrystalGraph) -> Report:
    """Classical operators give the same class from the normal and the anti-normal representative."""
    rep = Report("transport")
    A = barred(model.n)
    for T in g.elements:
        R = rectify(T, "se")
        for d in (RAISE, LOWER):
            for i in range(1, model.n):
                x, y = tableau_op(T, i, d, A), tableau_op(R, i, d, A)
                _compare(rep, f"{d}_{i} {T.key()}", x, None if y is None else rectify(y, "normal"))
    return rep


def suite_transport(inst, model, g, max_total: int = 4) -> Report:
    if inst.family == "A":
        return transport_type_a(inst.n, inst.r, max_total)
    if inst.family in ("Dtwisted", "C"):
        return transport_folded(inst.n, model.fold, max_total)
    return representative_independence(model, g)


def spin_oracle(model: KRTypeD, g: CrystalGraph) -> Report:
    """Pointwise transport through iota_s and rho, and isomorphism of the restricted graphs."""
    rep = Report("oracle-spin")
    n, s, parity = model.n, model.s, model.parity
    for corner in ("se", "nw"):
        J = oracle_index_set(n, corner)
        tensor = spin_tensor(n, s, parity, J)
        for T in g.elements:
            x = spin_image(T, n, s, corner)
            for i in J:
                for d in (RAISE, LOWER):
                    y = model.e(T, i) if d == RAISE else model.f(T, i)
                    z = tensor.e(x, i) if d == RAISE else tensor.f(x, i)
                    _compare(rep, f"{corner} {d}_{i} {T.key()}",
                             None if y is None else spin_image(y, n, s, corner), z)
        mine = generate_graph(restrict(model, J), model.seeds())
        theirs = generate_graph(tensor, [spin_image(model.highest(), n, s, corner)])
        res = graph_isomorphism(mine, theirs)
        rep.checked += 1
        if not res.ok:
            rep.add(f"{corner}: restricted graph is not isomorphic to the spin component ({res.reason})")
    return rep


def suite_oracle_spin(inst, model, g) -> Report:
    if inst.family != "D1":
        rep = Report("oracle-spin")
        rep.add("the spin oracle exists for family D1 only")
        return rep
    return spin_oracle(model, g)


def suite_identities(inst, model, g) -> Report:
    rep = Report("identities")
    for sub in run_identities(g, model):
        rep.checked += sub.checked
        for v in sub.violations:
            rep.add(f"{sub.name}: {v}")
    return rep


def suite_closure(inst, model, g) -> Report:
    """Every generated vertex lies in the model's set and the count matches the enumeration."""
    rep = Report("closure")
    for b in g.elements:
        rep.checked += 1
        if inst.family == "A":
            ok = ell(b) <= inst.s
        elif inst.family in ("Dtwisted", "C"):
            ok = is_folded_element(b, model.fold) and ell(b) <= model.fold * inst.s
        else:
            ok = model.is_member(b)
        if not ok:
            rep.add(f"{model.key(b)} is outside the model")
    want = expected_count(inst)
    rep.checked += 1
    if want != len(g):
        rep.add(f"{len(g)} vertices generated, enumeration gives {want}")
    return rep


RUNNERS = {
    "axioms": suite_axioms,
    "strings": suite_strings,
    "iso-promotion": suite_iso_promotion,
    "transport": suite_transport,
    "oracle-spin": suite_oracle_spin,
    "identities": suite_identities,
    "closure": suite_closure,
}


def default_suites(inst: Instance) -> list[str]:
    out = ["axioms", "strings", "transport", "identities", "closure"]
    if inst.family == "A":
        out.insert(2, "iso-promotion")
    if inst.family == "D1":
        out.append("oracle-spin")
    return out


def run_suites(inst: Instance, names, budget: int = DEFAULT_BUDGET) -> list[Report]:
    model, g = build_graph(inst, budget)
    return [RUNNERS[name](inst, model, g) for name in names]
