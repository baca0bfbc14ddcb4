"""Assembling and running verification suites.

A suite is an ordered list of tasks; each task is a thunk returning a
``Report``.  Tasks are independent, so they may run in a thread pool, but
the assembled report always follows declaration order.  An exception
raised inside a task becomes a failing record rather than aborting the run.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

from .catcore import BraidedContext, Morphism
from .central import (CentralBialgebra, check_central_axioms, check_derived_sigma_identities,
                      check_half_braiding, check_opposite_antipodes, check_schauenburg)
from .cqt import (check_antipode_formulas, check_cqt, check_lemma_rrs, check_lemma_uu,
                  check_r_sigma_commute, check_rsm, check_u_definitions, check_u_inverse,
                  check_unit_pairings, check_yang_baxter)
from .hopf import (Bialgebra, check_algebra, check_antipode, check_antipode_anti_morphism,
                   check_bialgebra, check_coalgebra, solve_antipode)
from .report import Report, compare
from .tensoralg import (BicharacterError, CentralCoalgebra, check_bicharacter,
                        check_central_coalgebra, check_diagram_R,
                        check_truncated_tensor_bialgebra, extend_bicharacter,
                        truncated_tensor_bialgebra)

__all__ = ["SuiteOptions", "Task", "run_tasks", "bialgebra_tasks", "central_coalgebra_tasks",
           "session_tasks", "example_tasks", "run_suite", "thread_count"]

Task = tuple[str, Callable[[], Report]]

DEFAULT_BICHARACTER_DEGREE = 3


@dataclass(frozen=True)
class SuiteOptions:
    skip_hopf: bool = False
    degree: int | None = None       # truncation degree for tensor-algebra checks
    threads: int | None = None      # None: INNERTWIST_THREADS or the CPU count


def thread_count(options: SuiteOptions | None = None) -> int:
    if options is not None and options.threads:
        return max(1, options.threads)
    env = os.environ.get("INNERTWIST_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return min(8, os.cpu_count() or 1)


def _guarded(label: str, thunk: Callable[[], Report]) -> Report:
    try:
        return thunk()
    except Exception as exc:  # failures are report content, never crashes
        rep = Report()
        rep.add(Report.boolean(label, False, "",
                               {"reason": f"{type(exc).__name__}: {exc}"}))
        return rep


def run_tasks(tasks: list[Task], threads: int = 1) -> Report:
    """Run the tasks, possibly in parallel; records keep task order."""
    out = Report()
    if threads <= 1 or len(tasks) <= 1:
        results = [_guarded(label, fn) for label, fn in tasks]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda t: _guarded(*t), tasks))
    for rep in results:
        out.extend(rep)
    return out


# --- task lists


def _antipode_tasks(ctx: BraidedContext, B: Bialgebra, closed_form: Morphism | None,
                    inst: str) -> list[Task]:
    def solved():
        rep = Report()
        S = solve_antipode(ctx, B)
        if S is None:
            rep.add(Report.boolean("antipode = convolution inverse of id", False, inst,
                                   {"reason": "id is not *-invertible"}))
            return rep
        rep.add(compare("antipode = convolution inverse of id", B.antipode, S, inst))
        if closed_form is not None:
            rep.add(compare("antipode = closed form", S, closed_form, inst))
        return rep

    return [
        ("antipode", lambda: check_antipode(ctx, B, instance=inst)),
        ("antipode anti-morphism", lambda: check_antipode_anti_morphism(ctx, B, inst)),
        ("antipode solve", solved),
    ]


def _cqt_tasks(ctx: BraidedContext, CB: CentralBialgebra, r: Morphism, skip_hopf: bool,
               inst: str) -> list[Task]:
    hopf = CB.antipode is not None and not skip_hopf

    def run():
        rep, Q = check_cqt(ctx, CB, r, inst)
        if Q is None:
            rep.add(Report.skipped("CQT consequences", inst, "r is not a CQT structure"))
            return rep
        rep.extend(check_rsm(ctx, Q, inst))
        rep.extend(check_unit_pairings(ctx, Q, inst))
        if not skip_hopf:
            if check_r_sigma_commute(ctx, Q):
                rep.add(Report.boolean("r commutes with sigma", True, inst))
            else:
                rep.add(Report.skipped("r commutes with sigma", inst,
                                       "diagnostic: r and sigma do not commute"))
        if hopf:
            rep.extend(check_lemma_rrs(ctx, Q, inst))
            rep.extend(check_u_definitions(ctx, Q, inst))
            rep.extend(check_lemma_uu(ctx, Q, inst))
            rep.extend(check_u_inverse(ctx, Q, inst))
            rep.extend(check_antipode_formulas(ctx, Q, inst))
        rep.extend(check_yang_baxter(ctx, Q, instance=inst))
        return rep

    return [("CQT", run)]


def bialgebra_tasks(ctx: BraidedContext, B: Bialgebra | CentralBialgebra,
                    r: Morphism | None = None, closed_form: Morphism | None = None,
                    options: SuiteOptions = SuiteOptions()) -> list[Task]:
    """Bialgebra, antipode, central and CQT checks for one structure."""
    CB = B if isinstance(B, CentralBialgebra) else None
    H = CB.bialgebra if CB is not None else B
    inst = H.name or H.carrier.name
    hopf = H.antipode is not None and not options.skip_hopf
    tasks: list[Task] = [("bialgebra", lambda: check_bialgebra(ctx, H, inst))]
    if hopf:
        tasks += _antipode_tasks(ctx, H, closed_form, inst)
    if CB is None:
        return tasks
    tasks += [
        ("half-braiding", lambda: check_half_braiding(CB.sigma, inst)),
        ("Z1-Z5", lambda: check_central_axioms(ctx, CB, instance=inst)),
        ("eq7/eq8", lambda: check_derived_sigma_identities(
            ctx, CB, CB.bialgebra if hopf else CB.bialgebra.coalgebra, inst)),
    ]
    if hopf:
        tasks += [
            ("Schauenburg", lambda: check_schauenburg(ctx, CB, instance=inst)),
            ("opposite antipodes", lambda: check_opposite_antipodes(ctx, CB, inst)),
        ]
    if r is not None:
        tasks += _cqt_tasks(ctx, CB, r, options.skip_hopf, inst)
    return tasks


def central_coalgebra_tasks(ctx: BraidedContext, CC: CentralCoalgebra,
                            seed: Morphism | None = None,
                            options: SuiteOptions = SuiteOptions()) -> list[Task]:
    """Center axioms, the truncated tensor algebra and the diagram bicharacter."""
    inst = CC.name
    tasks: list[Task] = [("central coalgebra", lambda: check_central_coalgebra(ctx, CC, instance=inst))]
    if options.degree is not None:
        def truncated():
            TT = truncated_tensor_bialgebra(ctx, CC, options.degree)
            return check_truncated_tensor_bialgebra(ctx, TT, instance=inst)
        tasks.append(("truncated tensor algebra", truncated))
    if seed is not None:
        N = max(2, options.degree or DEFAULT_BICHARACTER_DEGREE)

        def bichar():
            rep = Report()
            try:
                bc = extend_bicharacter(ctx, CC, seed, N)
            except BicharacterError as exc:
                rep.add(Report.boolean("bicharacter extension", False, inst,
                                       {"reason": str(exc)}))
                return rep
            rep.extend(check_bicharacter(ctx, bc, inst))
            rep.extend(check_diagram_R(ctx, bc, inst))
            return rep
        tasks.append(("bicharacter", bichar))
    return tasks


def session_tasks(session, options: SuiteOptions = SuiteOptions()) -> list[Task]:
    ctx = session.ctx
    tasks: list[Task] = []
    structured = set(session.bialgebras)
    for name, C in session.coalgebras.items():
        if name not in session.central_coalgebras and name not in structured:
            tasks.append((f"coalgebra {name}", lambda C=C, name=name: check_coalgebra(ctx, C, name)))
    for name, A in session.algebras.items():
        if name not in structured:
            tasks.append((f"algebra {name}", lambda A=A, name=name: check_algebra(ctx, A, name)))
    for name, B in session.bialgebras.items():
        target = session.centrals.get(name, B)
        tasks += bialgebra_tasks(ctx, target, session.cqts.get(name), None, options)
    for name, CC in session.central_coalgebras.items():
        if name in structured:
            continue
        tasks += central_coalgebra_tasks(ctx, CC, session.bicharacters.get(name), options)
    return tasks


def example_tasks(example, options: SuiteOptions = SuiteOptions()) -> list[Task]:
    r = example.cqt.r if example.cqt is not None else None
    return bialgebra_tasks(example.ctx, example.central, r,
                           example.closed_form_antipode, options)


def run_suite(target, options: SuiteOptions = SuiteOptions()) -> Report:
    """Run every applicable check on a parsed session or a built example."""
    if hasattr(target, "central") and hasattr(target, "ctx"):
        tasks = example_tasks(target, options)
    else:
        tasks = session_tasks(target, options)
    return run_tasks(tasks, thread_count(options))
