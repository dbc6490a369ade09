"""Scenario files and the deterministic suite runner.

A scenario is a JSON document with a versioned schema field.  It declares one
model (a finite-dimensional Hopf algebra acting on a presented base, or an
FRT bialgebra with its quantum-plane calculus) and the list of verification
suites to run.  The runner always executes the gates (Hopf axioms or the
Yang-Baxter identity, then confluence) before anything else, runs the
remaining requested suites in dependency order, and assembles the report
sorted by suite name.  Reports hash identically across runs: the only
run-dependent field is elapsed_ms, which the content hash excludes.
"""

import json
import time

from . import frt
from .action import ModuleAlgebraAction, TrivialAction, check_module_algebra
from .calculus import (check_exact_sequences, check_standard_calculus,
                       standard_calculus)
from .connections import (ConnectionContext, check_affine_structure,
                          check_connection_bijection, check_vertical_geometry)
from .errors import (GateFailure, PreconditionFailed, RelationIncompatible,
                     SchemaError, UnknownGenerator, UnverifiedFormula)
from .fixtures import c2_hopf, h4_hopf
from .hopf import FdHopf, check_presented_bialgebra, verify_fd_hopf
from .linear import LinMap
from .ncalg import Presentation, check_local_confluence, _acc
from .parser import AlgebraContext, FreeWordContext, parse_expression, parse_scalar
from .reports import Report, content_hash
from .scalars import ONE, ZERO
from .smash import SmashAlgebra, check_smash

SCENARIO_SCHEMA = "smashcalc-scenario/1"
REPORT_SCHEMA = "smashcalc-report/1"

_FD_HOPF = {"kc2": c2_hopf, "h4": h4_hopf}
_FRT_R = {"standard-sl2": frt.standard_sl2_r, "identity": frt.identity_r}
_FRT_CALC = {"wz-plane": frt.quantum_plane_forms,
             "classical-plane": frt.classical_plane_forms}

_SUITE_ORDER = {
    "fd": ("hopf-axioms", "confluence", "module-algebra", "smash-product",
           "calculus", "exactness", "connections"),
    "frt": ("yang-baxter", "confluence", "bialgebra-axioms", "r-form",
            "comodule", "induced-action", "smash-product", "smash-relations"),
}
_GATES = {"fd": ("hopf-axioms", "confluence"),
          "frt": ("yang-baxter", "confluence")}


def _expect(cond, message):
    if not cond:
        raise SchemaError(message)


def _check_keys(obj, where, required, optional=()):
    _expect(isinstance(obj, dict), "%s must be an object" % where)
    for k in required:
        _expect(k in obj, "%s is missing required field %r" % (where, k))
    allowed = set(required) | set(optional)
    for k in obj:
        _expect(k in allowed, "%s has unknown field %r" % (where, k))


def _jsonable(x):
    """Force report payloads into plain JSON values."""
    if isinstance(x, dict):
        return {k if isinstance(k, str) else str(k): _jsonable(v)
                for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    return str(x)


def presentation_from_json(spec, where="presentation"):
    _check_keys(spec, where, ("label", "gens", "relations"),
                ("precedence", "degree_cap"))
    gens = []
    for g in spec["gens"]:
        _expect(isinstance(g, list) and len(g) == 2 and
                isinstance(g[0], str) and isinstance(g[1], int),
                "%s.gens entries must be [name, form_degree]" % where)
        gens.append((g[0], g[1]))
    ctx = FreeWordContext({name: i for i, (name, _) in enumerate(gens)},
                          label=spec["label"])
    relations = []
    _expect(isinstance(spec["relations"], list),
            "%s.relations must be a list" % where)
    for rel in spec["relations"]:
        _expect(isinstance(rel, dict) and rel,
                "%s.relations entries must be nonempty objects" % where)
        out = {}
        for ws, cs in rel.items():
            terms = parse_expression(ws, ctx)
            _expect(len(terms) == 1,
                    "%s relation key %r must be a single word" % (where, ws))
            ((w, wc),) = terms.items()
            _acc(out, w, wc * parse_scalar(cs))
        relations.append(out)
    precedence = spec.get("precedence")
    if precedence is not None:
        _expect(isinstance(precedence, list) and
                sorted(precedence) == sorted(n for n, _ in gens),
                "%s.precedence must permute the generator names" % where)
        precedence = tuple(precedence)
    return Presentation(gens, relations=relations, precedence=precedence,
                        degree_cap=spec.get("degree_cap", 6),
                        label=spec["label"])


class _FdKeyContext:
    """Expression context over the basis of a finite-dimensional Hopf
    algebra; used to read scenario mutations."""

    def __init__(self, h):
        self.h = h
        self.label = h.label
        self._names = {h.key_str(k): k for k in range(h.dim)
                       if h.key_str(k).isidentifier()}

    def unit_terms(self, c):
        return {} if c.is_zero else {self.h.one_key: c}

    def gen_terms(self, name):
        if name not in self._names:
            raise UnknownGenerator("%r is not a basis name of %s"
                                   % (name, self.h.label))
        return {self._names[name]: ONE}

    def mul(self, t1, t2):
        out = {}
        for k1, c1 in t1.items():
            for k2, c2 in t2.items():
                for k, c3 in self.h.mul_kk(k1, k2).items():
                    _acc(out, k, c1 * c2 * c3)
        return out

    def scalar_of(self, terms):
        if not terms:
            return ZERO
        if set(terms) == {self.h.one_key}:
            return terms[self.h.one_key]
        return None


def _mutate_fd_hopf(h, spec):
    _check_keys(spec, "model.mutate", (), ("antipode",))
    table = spec.get("antipode", {})
    _expect(isinstance(table, dict) and table,
            "model.mutate.antipode must be a nonempty object")
    names = {h.key_str(k): k for k in range(h.dim)}
    cols = [list(h.antipode.column(j)) for j in range(h.dim)]
    ctx = _FdKeyContext(h)
    for name, expr in table.items():
        _expect(name in names,
                "model.mutate.antipode names unknown basis element %r" % name)
        col = [ZERO] * h.dim
        for k, c in parse_expression(expr, ctx).items():
            col[k] = c
        cols[names[name]] = col
    anti = LinMap.from_columns(h.space, h.space, cols)
    return FdHopf(h.space, h.mult, h.unit_vec, h.comult, h.counit, anti,
                  h.basis_words, h.word_index, check=False,
                  label=h.label + "-mutated")


def _hopf_convolution_counterexample(h):
    """First basis element where m(S (x) id)D deviates from u e."""
    for k in range(h.dim):
        acc = {}
        for (a, b), c in h.comult_k(k).items():
            for t, cs in h.antipode_k(a).items():
                for u, cm in h.mul_kk(t, b).items():
                    _acc(acc, u, c * cs * cm)
        eps = h.counit_k(k)
        want = {} if eps.is_zero else {h.one_key: eps}
        if acc != want:
            return (h.key_str(k), h.elem_str(acc), h.elem_str(want))
    return None


class FdModel:
    """A finite-dimensional Hopf algebra acting on a presented base."""

    kind = "fd"

    def __init__(self, spec, degree=2):
        _check_keys(spec, "model", ("kind", "hopf", "base", "action"),
                    ("mutate",))
        _expect(spec["hopf"] in _FD_HOPF,
                "model.hopf must be one of %s" % sorted(_FD_HOPF))
        self.degree = degree
        self.hopf = _FD_HOPF[spec["hopf"]]()
        if "mutate" in spec:
            self.hopf = _mutate_fd_hopf(self.hopf, spec["mutate"])
        self.base = presentation_from_json(spec["base"], "model.base")
        act = spec["action"]
        if act == "trivial":
            self.action = TrivialAction(self.hopf, self.base)
        else:
            _expect(isinstance(act, dict) and act,
                    "model.action must be 'trivial' or a nonempty table")
            actx = AlgebraContext(self.base)
            table = {}
            for key, expr in act.items():
                parts = key.split("|")
                _expect(len(parts) == 2,
                        "action table keys look like 'hgen|agen', got %r" % key)
                table[(parts[0], parts[1])] = parse_expression(expr, actx)
            self.action = ModuleAlgebraAction(self.hopf, self.base, table)
        self._smash = None
        self._calc = None

    def smash(self):
        if self._smash is None:
            self._smash = SmashAlgebra(self.action)
        return self._smash

    def calculus(self):
        if self._calc is None:
            self._calc = standard_calculus(self.action, max_degree=3,
                                           check=False)
        return self._calc

    def expression_context(self):
        from .parser import SmashContext
        return SmashContext(self.smash())

    def suites(self, options):
        deg = self.degree

        def gate_hopf():
            rep = verify_fd_hopf(self.hopf)
            if not rep.ok:
                ce = _hopf_convolution_counterexample(self.hopf)
                if ce is not None:
                    rep.add("antipode-counterexample", "m(S (x) 1)D = u e",
                            False, element=ce[0], got=ce[1], expected=ce[2])
                raise GateFailure(
                    "verify_fd_hopf rejected %s: %s" %
                    (self.hopf.label,
                     ", ".join(c["name"] for c in rep.failures())), rep)
            return rep

        def gate_confluence():
            rep = Report("confluence")
            overlaps = check_local_confluence(self.base, max_len=3)
            rep.add("base/%s" % self.base.label, "all overlaps resolve",
                    not overlaps, unresolved=len(overlaps))
            if not rep.ok:
                raise GateFailure("check_local_confluence found unresolved "
                                  "overlaps in %s" % self.base.label, rep)
            return rep

        def connections():
            ctx = ConnectionContext(self.calculus())
            rep = Report("connections")
            rep.extend(check_vertical_geometry(ctx))
            rep.extend(check_connection_bijection(ctx))
            rep.extend(check_affine_structure(ctx))
            if options.get("enable_right_bijection"):
                phi = ctx.phi_from_c(ctx.canonical_connection())
                try:
                    ctx.right_c_from_phi(phi, enabled=True)
                    rep.add("right-connection-reconstruction",
                            "flagged mirror formula verifies", True)
                except UnverifiedFormula as err:
                    rep.add("right-connection-reconstruction",
                            "flagged mirror formula verifies", False,
                            error=str(err))
            return rep

        return {
            "hopf-axioms": gate_hopf,
            "confluence": gate_confluence,
            "module-algebra":
                lambda: check_module_algebra(self.action, degree=deg),
            "smash-product":
                lambda: check_smash(self.smash(), degree=3),
            "calculus":
                lambda: check_standard_calculus(self.calculus(), degree=deg),
            "exactness":
                lambda: check_exact_sequences(self.calculus(),
                                              degrees=(1, 2)),
            "connections": connections,
        }


class FrtModel:
    """An FRT bialgebra with its induced quantum-plane calculus."""

    kind = "frt"

    def __init__(self, spec, degree=2, gamma=None):
        _check_keys(spec, "model", ("kind", "r"),
                    ("gamma", "calculus", "plane"))
        self.degree = degree
        self._plane_spec = spec.get("plane")
        if gamma is None:
            gamma = parse_scalar(spec.get("gamma", "1"))
        r = spec["r"]
        if isinstance(r, str):
            _expect(r in _FRT_R, "model.r must be one of %s or an inline "
                    "table" % sorted(_FRT_R))
            self.R = _FRT_R[r](gamma=gamma)
        else:
            _check_keys(r, "model.r", ("n", "entries"))
            _expect(isinstance(r["n"], int) and r["n"] >= 1,
                    "model.r.n must be a positive integer")
            entries = {}
            for key, cs in r["entries"].items():
                parts = key.split(",")
                _expect(len(parts) == 4 and all(p.strip().isdigit()
                                                for p in parts),
                        "model.r.entries keys look like 'i,j,k,l', got %r"
                        % key)
                entries[tuple(int(p) for p in parts)] = parse_scalar(cs)
            self.R = frt.RMatrix(r["n"], entries, gamma=gamma)
        calc = spec.get("calculus", "wz-plane")
        _expect(calc in _FRT_CALC,
                "model.calculus must be one of %s" % sorted(_FRT_CALC))
        self._calc_name = calc
        self._b = None
        self._rform = None
        self._plane = None
        self._com = None
        self._act = None
        self._aforms = None
        self._model = None

    def bialgebra(self):
        if self._b is None:
            self._b = frt.frt_bialgebra(self.R)
        return self._b

    def r_form(self):
        if self._rform is None:
            self._rform = frt.r_form(self.bialgebra(), degree=self.degree)
        return self._rform

    def plane(self):
        if self._plane is None:
            if self._plane_spec is not None:
                self._plane = presentation_from_json(self._plane_spec,
                                                     "model.plane")
            else:
                self._plane = frt.quantum_plane_presentation()
        return self._plane

    def comodule(self):
        if self._com is None:
            self._com = frt.quantum_plane(self.bialgebra(), self.plane())
        return self._com

    def induced_action(self):
        if self._act is None:
            self._act = frt.induced_action(self.comodule(), self.r_form()[0])
        return self._act

    def aforms(self):
        if self._aforms is None:
            self._aforms = _FRT_CALC[self._calc_name]()
        return self._aforms

    def forms_model(self):
        if self._model is None:
            self._model = frt.smash_forms_model(
                self.bialgebra(), self.r_form()[0], aforms=self.aforms())
        return self._model

    def expression_context(self):
        from .parser import SmashContext
        return SmashContext(SmashAlgebra(self.induced_action()))

    def suites(self, options):
        deg = self.degree

        def gate_ybe():
            rep = frt.check_ybe(self.R)
            if not rep.ok:
                raise GateFailure(
                    "check_ybe rejected %s: %s" %
                    (self.R.label,
                     ", ".join(c["name"] for c in rep.failures())), rep)
            return rep

        def gate_confluence():
            rep = Report("confluence")
            audited = [self.bialgebra().pres, self.plane(),
                       self.aforms().pres,
                       frt.frt_forms(self.bialgebra()).pres]
            for pres in audited:
                overlaps = check_local_confluence(pres, max_len=3)
                rep.add("rewriting/%s" % pres.label, "all overlaps resolve",
                        not overlaps, unresolved=len(overlaps))
            if not rep.ok:
                raise GateFailure(
                    "check_local_confluence found unresolved overlaps in %s"
                    % ", ".join(c["name"] for c in rep.failures()), rep)
            return rep

        def smash_relations():
            rep = frt.wz_smash_relations(self.forms_model(), self.r_form()[0])
            rep.extend(frt.check_forms_bicovariant(self.bialgebra(),
                                                   frt.frt_forms(self.bialgebra())))
            return rep

        return {
            "yang-baxter": gate_ybe,
            "confluence": gate_confluence,
            "bialgebra-axioms":
                lambda: check_presented_bialgebra(self.bialgebra(),
                                                  degree=deg),
            "r-form": lambda: self.r_form()[1],
            "comodule": lambda: self.comodule().check(degree=deg),
            "induced-action":
                lambda: frt.check_induced_action(
                    self.induced_action(), self.comodule(),
                    self.r_form()[0], degree=deg, h_degree=deg),
            "smash-product":
                lambda: check_smash(SmashAlgebra(self.induced_action()),
                                    degree=3),
            "smash-relations": smash_relations,
        }


def load_scenario(path):
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, ValueError) as err:
        raise SchemaError("cannot read scenario %s: %s" % (path, err))
    _check_keys(doc, "scenario", ("schema", "label", "model", "suites"))
    _expect(doc["schema"] == SCENARIO_SCHEMA,
            "unsupported scenario schema %r (this build reads %r)"
            % (doc.get("schema"), SCENARIO_SCHEMA))
    _expect(isinstance(doc["label"], str) and doc["label"],
            "scenario.label must be a nonempty string")
    _expect(isinstance(doc["model"], dict), "scenario.model must be an object")
    kind = doc["model"].get("kind")
    _expect(kind in _SUITE_ORDER,
            "model.kind must be one of %s" % sorted(_SUITE_ORDER))
    order = _SUITE_ORDER[kind]
    _expect(isinstance(doc["suites"], list) and doc["suites"],
            "scenario.suites must be a nonempty list")
    for s in doc["suites"]:
        _expect(s in order, "unknown suite %r for kind %r (choose from %s)"
                % (s, kind, list(order)))
    return doc


def build_model(doc, degree=None, gamma=None):
    spec = doc["model"]
    deg = degree if degree is not None else 2
    if isinstance(gamma, str):
        gamma = parse_scalar(gamma)
    if spec["kind"] == "fd":
        _expect(gamma is None, "gamma only applies to frt scenarios")
        return FdModel(spec, degree=deg)
    return FrtModel(spec, degree=deg, gamma=gamma)


def run_scenario(path, degree=None, gamma=None, suites=None, options=None):
    """Execute a scenario file.  Returns (report_doc, exit_code)."""
    doc = load_scenario(path)
    model = build_model(doc, degree=degree, gamma=gamma)
    options = dict(options or {})
    order = _SUITE_ORDER[model.kind]
    gates = _GATES[model.kind]
    requested = suites if suites is not None else doc["suites"]
    for s in requested:
        _expect(s in order, "unknown suite %r" % s)
    selected = [s for s in order if s in gates or s in requested]
    table = model.suites(options)

    entries = []
    gate_down = None
    for name in selected:
        if gate_down is not None:
            entries.append({"suite": name, "ok": False,
                            "skipped": "blocked by failed gate %r" % gate_down,
                            "checks": []})
            continue
        start = time.perf_counter()
        try:
            rep = table[name]()
            entry = _jsonable(rep.to_dict())
            entry["suite"] = name
        except GateFailure as err:
            entry = {"suite": name, "ok": False, "gate_failure": str(err)}
            entry["checks"] = (_jsonable(err.report.to_dict()["checks"])
                               if err.report is not None else [])
            if name in gates:
                gate_down = name
        except (PreconditionFailed, RelationIncompatible) as err:
            entry = {"suite": name, "ok": False, "gate_failure": str(err),
                     "checks": _jsonable(getattr(err, "report", None).to_dict()
                                         ["checks"])
                     if getattr(err, "report", None) is not None else []}
            if name in gates:
                gate_down = name
        entry["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 3)
        entries.append(entry)

    entries.sort(key=lambda e: e["suite"])
    ok = bool(entries) and all(e.get("ok") for e in entries)
    report = {"schema": REPORT_SCHEMA,
              "scenario": doc["label"],
              "kind": model.kind,
              "ok": ok,
              "suites": entries}
    report["hash"] = content_hash(report)
    return report, (0 if ok else 1)


def shipped_scenarios():
    """Names of the scenario files distributed with the package."""
    from importlib import resources
    root = resources.files("smashcalc") / "scenarios"
    return sorted(p.name[:-5] for p in root.iterdir()
                  if p.name.endswith(".json"))


def scenario_path(name):
    """Filesystem path of a shipped scenario, by bare name."""
    from importlib import resources
    p = resources.files("smashcalc") / "scenarios" / ("%s.json" % name)
    if not p.is_file():
        raise SchemaError("no shipped scenario named %r (have: %s)"
                          % (name, ", ".join(shipped_scenarios())))
    return str(p)


def report_text(report):
    """Human-readable rendering of a report document."""
    lines = ["scenario %s (%s): %s" % (report["scenario"], report["kind"],
                                       "PASS" if report["ok"] else "FAIL")]
    for entry in report["suites"]:
        if "skipped" in entry:
            lines.append("  [skip] %-18s %s" % (entry["suite"],
                                                entry["skipped"]))
            continue
        status = "ok" if entry["ok"] else "FAIL"
        checks = entry.get("checks", [])
        counts = entry.get("counts",
                           {"total": len(checks),
                            "failed": sum(1 for c in checks
                                          if not c.get("ok"))})
        lines.append("  [%s] %-18s %d checks, %d failed" %
                     (status, entry["suite"], counts.get("total", 0),
                      counts.get("failed", 0)))
        if "gate_failure" in entry:
            lines.append("         gate: %s" % entry["gate_failure"])
        for c in entry.get("checks", []):
            if not c.get("ok"):
                detail = c.get("details", {})
                lines.append("         fail %s (%s)%s" %
                             (c["name"], c.get("anchor", ""),
                              " %s" % detail if detail else ""))
    lines.append("hash %s" % report["hash"])
    return "\n".join(lines)
