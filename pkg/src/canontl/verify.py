"""Named theorem suites, shared by the command line and the test-suite.

Each suite takes ``n`` and returns a list of :class:`Case` records, one per
natural sub-check (usually one per ``k``).
"""

from dataclasses import dataclass
from math import comb

from . import hecke as hk
from . import parabolic as pb
from . import quantum as qu
from . import spin as sp
from . import symgroup as sg
from . import tldiagram as tl
from .laurent import BETA, ONE, qinv, q

__all__ = ["Case", "SUITES", "run_suite"]


@dataclass(frozen=True)
class Case:
    name: str
    ok: bool
    detail: str = ""

    def line(self):
        tag = "PASS" if self.ok else "FAIL"
        return f"{tag}  {self.name}" + (f": {self.detail}" if self.detail else "")


def suite_duality(n):
    labels = sp.all_labels(n)
    dual = {a: sp.dcb_inductive(a) for a in labels}
    canon = {b: sp.canonical_basis(b) for b in labels}
    bad = [(a, b) for a in labels for b in labels
           if sp.pairing(dual[a], canon[b]) != (ONE if b == a[::-1] else 0)]
    detail = f"{len(labels)} x {len(labels)} label pairs"
    if bad:
        detail += f", first mismatch {bad[0]}"
    return [Case(f"duality n={n}", not bad, detail)]


def fan_green_ok(w):
    img = hk.phi_q(hk.kl_basis(w))
    terms = img.items()
    return not terms or (len(terms) == 1 and terms[0][1] == ONE)


def suite_fan_green(n):
    bad = [w for w in sg.all_permutations(n) if not fan_green_ok(w)]
    detail = f"{len(sg.all_permutations(n))} elements"
    if bad:
        detail += f", first failure {list(bad[0])}"
    return [Case(f"fan-green n={n}", not bad, detail)]


def _tl_relations(n):
    e = [None] + [tl.TLElement.from_diagram(tl.generator_e(i, n)) for i in range(1, n)]
    for i in range(1, n):
        if e[i] * e[i] != e[i].scale(BETA):
            return False
        if i + 1 < n and (e[i] * e[i + 1] * e[i] != e[i] or e[i + 1] * e[i] * e[i + 1] != e[i + 1]):
            return False
        for j in range(i + 2, n):
            if e[i] * e[j] != e[j] * e[i]:
                return False
    return True


def _hecke_relations(n):
    h = [None] + [hk.generator(i, n) for i in range(1, n)]
    one = hk.H(sg.identity(n))
    for i in range(1, n):
        if h[i] * h[i] != one + h[i].scale(qinv - q):
            return False
        if i + 1 < n and h[i] * h[i + 1] * h[i] != h[i + 1] * h[i] * h[i + 1]:
            return False
        for j in range(i + 2, n):
            if h[i] * h[j] != h[j] * h[i]:
                return False
    return all(hk.bar(hk.bar_H(w)) == hk.H(w) for w in sg.all_permutations(n))


def suite_relations(n):
    return [Case(f"TL relations n={n}", _tl_relations(n), "e_i^2, braid, far commutation"),
            Case(f"Hecke relations n={n}", _hecke_relations(n), "quadratic, braid, bar o bar")]


def suite_parabolic_duality(n):
    out = []
    for k in range(n + 1):
        ctx = sg.ParabolicContext(n, k)
        reps = ctx.minimal_coset_reps()
        w0J = ctx.longest_in_WJ()
        M = {w: pb.canonical_M(w, ctx) for w in reps}
        N = {w: pb.canonical_N(w, ctx) for w in reps}
        pairing_ok = all(
            pb.pairing_MN(pb.flip_M(M[pb.flip_label(w, ctx)]), N[x])
            == ((-1) ** sg.length(x) if x == w else 0)
            for w in reps for x in reps)
        dual_ok = all(pb.canonical_Nstar(w, ctx) == pb.dual_canonical_Nstar(w, ctx)
                      and pb.canonical_Mstar(w, ctx) == pb.dual_canonical_Mstar(w, ctx)
                      for w in reps)
        sigma_ok = all(pb.sigma_star(hk.dual_basis_D(w * w0J), ctx) == pb.canonical_Nstar(w, ctx)
                       for w in reps)
        compat_ok = all(pb.project_M(hk.kl_basis(w), ctx) == M[w]
                        and pb.iota(N[w]) == hk.kl_basis(w * w0J) for w in reps)
        out.append(Case(f"parabolic-duality n={n} k={k}",
                        pairing_ok and dual_ok and sigma_ok and compat_ok,
                        f"{len(reps)} cosets; pairing={pairing_ok} dual={dual_ok} "
                        f"sigma={sigma_ok} project/iota={compat_ok}"))
    return out


def suite_quantum(n):
    out = []
    if n >= 2:
        homs = all(qu.check_module_hom(op, i, n) for op in ("epsilon", "delta")
                   for i in range(1, n))
        out.append(Case(f"quantum module maps n={n}", homs, "epsilon and delta commute with E, F, K"))
    images = [qu.embed_TL(d) for d in tl.enumerate_diagrams(n)]
    inv = all(qu.is_invariant(v) for v in images)
    rank = qu.generic_rank(images)
    out.append(Case(f"quantum embedding n={n}", inv and rank == tl.catalan(n),
                    f"{len(images)} images, invariant={inv}, rank={rank}"))
    dims = [qu.invariant_dimension(2 * n, x) for x in qu.DEFAULT_POINTS]
    out.append(Case(f"quantum invariants 2n={2 * n}", all(d == tl.catalan(n) for d in dims),
                    f"dimensions {dims} at q={[str(x) for x in qu.DEFAULT_POINTS]}"))
    return out


def suite_axiom(n):
    labels = sp.all_labels(n)
    bad = [lbl for lbl in labels if not sp.verify_canonical_axiom(lbl)]
    detail = f"{len(labels)} labels"
    if bad:
        detail += f", first failure {bad[0]}"
    return [Case(f"axiom n={n}", not bad, detail)]


def suite_bijection(n):
    out = []
    for k in range(n + 1):
        labels = sp.all_labels(n, k)
        basis = set(tl.enumerate_induced_basis(n, k)) if n <= tl.DEFAULT_CAP else None
        ok = True
        seen = set()
        for lbl in labels:
            d = sp.label_to_diagram(lbl)
            seen.add(d)
            if not tl.is_induced_basis(d, k) or sp.diagram_to_label(d, k) != lbl:
                ok = False
        if basis is not None and seen != basis:
            ok = False
        out.append(Case(f"bijection n={n} k={k}", ok and len(labels) == comb(n, k),
                        f"{len(labels)} labels"))
    return out


SUITES = {
    "duality": suite_duality,
    "fan-green": suite_fan_green,
    "relations": suite_relations,
    "parabolic-duality": suite_parabolic_duality,
    "quantum": suite_quantum,
    "axiom": suite_axiom,
    "bijection": suite_bijection,
}


def run_suite(name, n):
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    return SUITES[name](n)

