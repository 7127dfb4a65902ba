"""Search drivers, the per-pair analysis pipeline, and the command line.

A pair (phi, psi) runs through: lattice build -> unimodularity gate ->
trace-cluster classification -> Picard/Weyl analysis -> fixed-point
verdicts.  Failures at any stage become structured rejection rows, so
bulk searches can tally causes.  Verdict routing: a rank-2 Picard
lattice with a single A1 curve and f*|Pic of order two goes through the
dedicated number-field elimination; otherwise the Lefschetz budget must
leave exactly one transverse fixed point off the exceptional set
(D/E-type components only), and the closed-form P decides the verdict.

Subcommands:
  setup2-enum   enumerate the 1019 auxiliary polynomials (CSV/JSON)
  search        run the principal search for a given Salem degree
  analyze       analyze one explicit (phi, psi) pair
  picard2       print the rank-2 certification and verdict grid
  verify-tables run the whole acceptance suite

Worker count for searches comes from --workers or K3SIEGEL_WORKERS;
results are canonically sorted, so output is identical for any count.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, field

from .intpoly import IntPoly, cyclotomic, euler_phi, resultant
from . import picard2 as p2
from .fpfsiegel import (
    NeedsManualAnalysis,
    component_contribution,
    derive_P,
    saito_budget,
    siegel_verdict_P,
)
from .hodgeclass import dissect_and_classify
from .hyplattice import LatticeBuildError, build, signature_and_renormalize, unimodularity_gate
from .picardweyl import PipelineError, analyze_root_system
from .salemlib import SalemStore, load_store
from .setup2 import Setup2Candidate, enumerate_setup2

Z2 = IntPoly([-1, 0, 1])

CSV_COLUMNS = ["S", "C", "s", "c_or_psi", "ST", "Dynkin", "phi1", "TrA", "SD"]


@dataclass
class AnalysisRow:
    """One output record, mirroring the table columns of the searches."""

    s_label: str = ""
    c_label: str = ""
    aux_s_label: str = ""
    aux_c_label: str = ""
    st_index: int | None = None
    dynkin: str = ""
    phi1_tilde: str = ""
    trace_a_tilde: int | None = None
    sd: str = ""
    verdicts: list = field(default_factory=list)
    note: str = ""
    rejection: str | None = None

    def accepted(self) -> bool:
        return self.rejection is None

    def to_csv(self) -> list[str]:
        return [
            self.s_label,
            self.c_label,
            self.aux_s_label,
            self.aux_c_label,
            "" if self.st_index is None else f"tau{self.st_index}",
            self.dynkin,
            self.phi1_tilde,
            "" if self.trace_a_tilde is None else str(self.trace_a_tilde),
            self.sd if self.rejection is None else f"rejected: {self.rejection}",
        ]

    def to_json(self) -> dict:
        return {
            "S": self.s_label, "C": self.c_label, "s": self.aux_s_label,
            "c_or_psi": self.aux_c_label, "ST": self.st_index,
            "Dynkin": self.dynkin, "phi1": self.phi1_tilde,
            "TrA": self.trace_a_tilde, "SD": self.sd,
            "note": self.note, "rejection": self.rejection,
        }


def cyclo_label(indices: dict[int, int] | list[int]) -> str:
    if isinstance(indices, dict):
        items = sorted(indices.items())
    else:
        items = [(n, 1) for n in sorted(indices)]
    if not items:
        return "1"
    return " ".join(f"C{n}" if m == 1 else f"C{n}^{m}" for n, m in items)


def salem_label(degree: int, index: int) -> str:
    return f"S{index}^({degree})"


# ---------------------------------------------------------------------------
# the per-pair pipeline
# ---------------------------------------------------------------------------

def analyze_pair(phi: IntPoly, psi: IntPoly,
                 s_label: str = "", c_label: str = "",
                 aux_s_label: str = "", aux_c_label: str = "") -> AnalysisRow:
    """Full pipeline for one explicit pair; never raises on bad pairs."""
    row = AnalysisRow(s_label=s_label, c_label=c_label,
                      aux_s_label=aux_s_label, aux_c_label=aux_c_label)
    try:
        model = build(phi, psi)
    except LatticeBuildError as exc:
        row.rejection = str(exc)
        return row
    if not unimodularity_gate(model):
        row.rejection = "resultant is not a unit"
        return row
    model = signature_and_renormalize(model)
    if model.signature != (3, 19):
        row.rejection = f"signature {model.signature} after renormalization"
        return row
    verdict = dissect_and_classify(phi, psi)
    if not verdict.accepted:
        row.rejection = verdict.rejection_reason
        return row
    if not row.s_label:
        row.s_label = verdict.salem_factor.text()
    if not row.c_label:
        row.c_label = cyclo_label(verdict.cyclo_indices)
    row.st_index = verdict.special_trace_index
    try:
        pic, report = analyze_root_system(model, verdict)
    except PipelineError as exc:
        row.rejection = f"internal: {exc}"
        return row
    row.dynkin = report.dynkin_name()
    row.phi1_tilde = report.phi1_tilde_name()
    row.trace_a_tilde = report.trace_a_tilde

    # verdict routing
    j = verdict.special_trace_index
    if (pic.rho == 2 and row.dynkin == "A1"
            and report.phi1_tilde_factors == {1: 1, 2: 1}):
        if not p2.trace_check(verdict.salem_factor):
            row.note = "needs manual analysis: rank-2 trace pattern"
            return row
        rep2 = p2.full_analysis(verdict.salem_trace, verdict.salem_factor)
        v_pm = rep2.grid[("p_pm", j)]
        v_p = rep2.grid[("p", j)]
        row.verdicts = [v_pm, v_p]
        row.sd = f"{v_pm}{v_p}"
        return row
    try:
        contribs = [component_contribution(a.component.label, a.component.rank,
                                           "moved" if a.kind == "moved" else a.kind)
                    for a in report.component_actions]
        budget = saito_budget(report.trace_a_tilde, contribs)
    except NeedsManualAnalysis as exc:
        row.note = f"needs manual analysis: {exc}"
        return row
    except Exception as exc:  # budget inconsistency: report, never crash a search
        row.rejection = f"internal: {exc}"
        return row
    if budget.free_multiplicity != 1:
        row.note = (f"needs manual analysis: free multiplicity "
                    f"{budget.free_multiplicity}")
        return row
    try:
        p_func = derive_P(contribs, budget.n_f_total)
        v = siegel_verdict_P(p_func, verdict.salem_trace, j)
    except Exception as exc:
        row.rejection = f"internal: {exc}"
        return row
    row.verdicts = [v]
    row.sd = str(v)
    return row


# ---------------------------------------------------------------------------
# searches
# ---------------------------------------------------------------------------

def cyclotomic_sets(total_degree: int, min_index: int = 3,
                    allowed: list[int] | None = None) -> list[tuple[int, ...]]:
    """All sets of distinct cyclotomic indices >= min_index whose degrees
    sum to total_degree, sorted."""
    if allowed is None:
        allowed = [j for j in range(min_index, 2 * total_degree * total_degree + 2)
                   if euler_phi(j) <= total_degree]
    allowed = sorted(set(allowed))
    out: list[tuple[int, ...]] = []

    def rec(pos: int, left: int, acc: list[int]):
        if left == 0:
            out.append(tuple(acc))
            return
        for q in range(pos, len(allowed)):
            d = euler_phi(allowed[q])
            if d <= left:
                acc.append(allowed[q])
                rec(q + 1, left - d, acc)
                acc.pop()

    if total_degree == 0:
        return [()]
    rec(0, total_degree, [])
    return sorted(out)


def psi_candidates_setup1(store: SalemStore) -> list[tuple[IntPoly, str, str]]:
    """(psi, s label, c label) for every unramified Salem entry times an
    admissible unramified cyclotomic tail from L0."""
    from .salemlib import compute_L0

    l0 = sorted(compute_L0(16))
    out = []
    for entry in store.unramified_entries():
        need = 22 - entry.degree
        for ls in cyclotomic_sets(need, allowed=l0) if need else [()]:
            psi = entry.salem_poly
            for l in ls:
                psi = psi * cyclotomic(l)
            out.append((psi, salem_label(*entry.key), cyclo_label(list(ls))))
    return out


def search_setup1(store: SalemStore, degree: int,
                  index_range: tuple[int, int] | None = None,
                  include_rejections: bool = False,
                  workers: int = 1) -> list[AnalysisRow]:
    """The principal search: S of the given degree from the store, C over
    cyclotomic sets of degree 20 - degree (indices >= 3), psi from the
    unramified Salem entries with unramified cyclotomic tails."""
    rows = []
    psis = psi_candidates_setup1(store)
    entries = [e for e in store.of_degree(degree)
               if not index_range or index_range[0] <= e.index <= index_range[1]]
    if not entries:
        return [AnalysisRow(s_label=f"S?^({degree})",
                            rejection="data unavailable: no Salem entries of "
                                      f"degree {degree} in the store")]
    if not psis:
        return [AnalysisRow(rejection="data unavailable: no unramified Salem "
                                      "entries in the store")]
    tasks = []
    for entry in entries:
        s_poly = entry.salem_poly
        s_lab = salem_label(*entry.key)
        for cset in cyclotomic_sets(20 - degree):
            phi = Z2 * s_poly
            for j in cset:
                phi = phi * cyclotomic(j)
            c_lab = cyclo_label(list(cset))
            for psi, s_aux, c_aux in psis:
                tasks.append((phi, psi, s_lab, c_lab, s_aux, c_aux))
    results = _map_tasks(_run_analysis_task, tasks, workers)
    for row in results:
        if row.accepted() or include_rejections:
            rows.append(row)
    rows.sort(key=lambda r: (r.s_label, r.c_label, r.aux_s_label, r.aux_c_label))
    return rows


def _run_analysis_task(task):
    phi, psi, s_lab, c_lab, s_aux, c_aux = task
    return analyze_pair(phi, psi, s_lab, c_lab, s_aux, c_aux)


def _map_tasks(fn, tasks, workers: int):
    if workers <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    import multiprocessing as mp

    with mp.Pool(workers) as pool:
        return pool.map(fn, tasks, chunksize=1)


S4 = IntPoly([1, -1, -1, -1, 1])


def _resultant_unit_table(candidates: list[Setup2Candidate],
                          pool: list[int]) -> dict[int, list[bool]]:
    """|Res(C_j, psi_i)| == 1 for every cyclotomic index j in the pool;
    flags are positional, parallel to the candidate list.  Computed via
    reduction modulo the monic C_j, so each resultant is tiny."""
    table: dict[int, list[bool]] = {}
    for j in pool:
        cj = cyclotomic(j)
        flags = []
        for cand in candidates:
            psi = cand.psi()
            _, r = psi.divmod(cj)
            if r.is_zero():
                flags.append(False)
                continue
            flags.append(abs(resultant(cj, r)) == 1)
        table[j] = flags
    return table


def search_setup2(workers: int = 1, include_rejections: bool = False,
                  candidates: list[Setup2Candidate] | None = None) -> list[AnalysisRow]:
    """The Picard-number-18 search: phi = (z^2-1) S4 C with deg C = 16,
    psi over the enumerated auxiliary polynomials."""
    if candidates is None:
        candidates = enumerate_setup2()
    csets = cyclotomic_sets(16)
    pool = sorted({j for cs in csets for j in cs})
    units = _resultant_unit_table(candidates, pool)

    tasks = []
    rejected = []
    for cset in csets:
        phi = Z2 * S4
        for j in cset:
            phi = phi * cyclotomic(j)
        c_lab = cyclo_label(list(cset))
        for pos, cand in enumerate(candidates):
            if all(units[j][pos] for j in cset):
                tasks.append((phi, cand.psi(), salem_label(4, 1), c_lab,
                              "", str(cand.id)))
            elif include_rejections:
                rejected.append(AnalysisRow(
                    s_label=salem_label(4, 1), c_label=c_lab,
                    aux_c_label=str(cand.id),
                    rejection="resultant is not a unit"))
    results = _map_tasks(_run_analysis_task, tasks, workers)
    rows = [r for r in results if r.accepted() or include_rejections]
    rows.extend(rejected)
    rows.sort(key=lambda r: (r.s_label, r.c_label,
                             int(r.aux_c_label) if r.aux_c_label.isdigit() else 0))
    return rows


# ---------------------------------------------------------------------------
# emission
# ---------------------------------------------------------------------------

def emit(rows: list[AnalysisRow], fmt: str = "csv", path: str | None = None) -> str:
    """Serialize rows; deterministic order is the caller's order."""
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for r in rows:
            writer.writerow(r.to_csv())
        text = buf.getvalue()
    elif fmt == "json":
        text = json.dumps([r.to_json() for r in rows], indent=1) + "\n"
    else:
        raise ValueError(f"unknown format {fmt!r}")
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text


def parse_rows_json(text: str) -> list[AnalysisRow]:
    out = []
    for d in json.loads(text):
        out.append(AnalysisRow(
            s_label=d["S"], c_label=d["C"], aux_s_label=d["s"],
            aux_c_label=d["c_or_psi"], st_index=d["ST"], dynkin=d["Dynkin"],
            phi1_tilde=d["phi1"], trace_a_tilde=d["TrA"], sd=d["SD"],
            note=d["note"], rejection=d["rejection"]))
    return out


# ---------------------------------------------------------------------------
# command line
# ---------------------------------------------------------------------------

def _workers_arg(args) -> int:
    if args.workers is not None:
        return args.workers
    return int(os.environ.get("K3SIEGEL_WORKERS", "1"))


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(prog="k3siegel", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True)

    p_enum = sub.add_parser("setup2-enum", help="enumerate the 1019 auxiliary polynomials")
    p_enum.add_argument("--format", choices=["csv", "json"], default="csv")
    p_enum.add_argument("--out", default=None)

    p_search = sub.add_parser("search", help="principal search for one Salem degree")
    p_search.add_argument("--setup1", action="store_true",
                          help="use the Salem-times-cyclotomic auxiliary family")
    p_search.add_argument("--setup2", action="store_true",
                          help="use the enumerated degree-22 auxiliary family (degree 4)")
    p_search.add_argument("--degree", type=int, default=20)
    p_search.add_argument("--index-min", type=int, default=None)
    p_search.add_argument("--index-max", type=int, default=None)
    p_search.add_argument("--salem-data", default=None,
                          help="extra Salem entries file (d i : coefficients)")
    p_search.add_argument("--include-rejections", action="store_true")
    p_search.add_argument("--format", choices=["csv", "json"], default="csv")
    p_search.add_argument("--out", default=None)
    p_search.add_argument("--workers", type=int, default=None)

    p_an = sub.add_parser("analyze", help="analyze one explicit pair")
    p_an.add_argument("--phi", required=True,
                      help='ascending coefficients, e.g. "[1,0,...,1]"')
    p_an.add_argument("--psi", required=True)
    p_an.add_argument("--format", choices=["csv", "json"], default="csv")
    p_an.add_argument("--out", default=None)

    p_p2 = sub.add_parser("picard2", help="rank-2 certification and verdict grid")
    p_p2.add_argument("--st", default="builtin",
                      help='"builtin" or ascending trace-polynomial coefficients')
    p_p2.add_argument("--salem", default="builtin",
                      help='"builtin" or ascending Salem-polynomial coefficients')
    p_p2.add_argument("--format", choices=["text", "json"], default="text")
    p_p2.add_argument("--out", default=None)

    p_v = sub.add_parser("verify-tables", help="run the full acceptance suite")
    p_v.add_argument("--fast", action="store_true",
                     help="skip the two long-running search criteria")
    p_v.add_argument("--workers", type=int, default=None)

    args = ap.parse_args(argv)

    if args.command == "setup2-enum":
        cands = enumerate_setup2()
        if args.format == "json":
            text = json.dumps([{"id": c.id, "coeffs": list(c.coeffs),
                                "psi": c.psi().text()} for c in cands], indent=1) + "\n"
        else:
            buf = io.StringIO()
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(["id"] + [f"c{i}" for i in range(1, 12)] + ["psi"])
            for c in cands:
                writer.writerow([c.id, *c.coeffs, c.psi().text()])
            text = buf.getvalue()
        _write_out(text, args.out)
        print(f"enumerated {len(cands)} candidates", file=sys.stderr)
        return 0

    if args.command == "search":
        store = load_store(args.salem_data)
        workers = _workers_arg(args)
        if args.setup2 or args.degree == 4 and not args.setup1:
            rows = search_setup2(workers=workers,
                                 include_rejections=args.include_rejections)
        else:
            rng = None
            if args.index_min is not None or args.index_max is not None:
                rng = (args.index_min or 0, args.index_max or 10 ** 9)
            rows = search_setup1(store, args.degree, rng,
                                 include_rejections=args.include_rejections,
                                 workers=workers)
        _write_out(emit(rows, args.format), args.out)
        bad = [r for r in rows if r.rejection and r.rejection.startswith("internal")]
        return 1 if bad else 0

    if args.command == "analyze":
        row = analyze_pair(IntPoly.from_text(args.phi), IntPoly.from_text(args.psi))
        _write_out(emit([row], args.format), args.out)
        return 1 if (row.rejection or "").startswith("internal") else 0

    if args.command == "picard2":
        st = p2.ST20_1 if args.st == "builtin" else _poly_arg(args.st)
        sp = p2.S20_1 if args.salem == "builtin" else _poly_arg(args.salem)
        report = p2.full_analysis(st, sp)
        if args.format == "json":
            text = json.dumps(report.to_json(), indent=1) + "\n"
        else:
            lines = [f"Q(w) num = {report.q_func.num.clear_denominators().text()}",
                     f"P(w) num = {report.p_func.num.clear_denominators().text()}",
                     f"P(w) den = {report.p_func.den.clear_denominators().text()}",
                     f"E3 degree = {report.e3_degree}, E7 degree = {report.e7_degree}"]
            m = st.degree
            pm = " ".join(str(report.grid[("p_pm", j)]) for j in range(1, m))
            pp = " ".join(str(report.grid[("p", j)]) for j in range(1, m))
            lines.append(f"p+- : {pm}")
            lines.append(f"p   : {pp}")
            text = "\n".join(lines) + "\n"
        _write_out(text, args.out)
        return 0

    if args.command == "verify-tables":
        from .acceptance import run_all

        ok = run_all(fast=args.fast, workers=_workers_arg(args))
        return 0 if ok else 1

    return 2


def _poly_arg(value: str) -> IntPoly:
    """A polynomial argument: bracketed coefficient text, or the path of
    a file containing it."""
    if os.path.exists(value):
        with open(value, "r", encoding="utf-8") as fh:
            value = fh.read().strip()
    return IntPoly.from_text(value)


def _write_out(text: str, path: str | None):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    sys.exit(main())
