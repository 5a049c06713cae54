"""Instantiation and batch verification of the bundled catalog.

Entry ids follow the printed tables (``Hd2.1`` .. ``Hd4.20`` for the
dialgebra families, ``dend*``/``zin*``/``dip*`` for the sibling-structure
examples).  ``get`` builds an exact algebra object from the stored data;
``verify_all`` re-derives every checkable claim and returns a report in
which printed dimensions are treated as data to compare against, never as
ground truth: mismatches become discrepancy records, not errors.
"""

import re
import time

from . import catalog_data, scalars
from .axioms import (check_dendriform, check_dialgebra, check_dipterous,
                     check_multiplicativity, check_table_multiplicativity,
                     check_zinbiel)
from .centroids import FULL, centroid
from .core import LEFT, RIGHT, HomDialgebra, LinearMap, MultTable, Vector
from .derivations import derivation_space, inner_map, is_derivation
from .invariants import fingerprint
from .solver import in_span

SWEEP_VALUES = (0, 1, 2)


class PatternError(ValueError):
    """A printed matrix cell that is not linear in a single symbol."""


class CatalogEntry:
    """Metadata for one catalog id (the algebra itself comes from `get`)."""

    __slots__ = ("id", "kind", "dim", "backend", "params", "unused_params",
                 "side", "notes", "derivation_claim", "centroid_claim")

    def __init__(self, id, kind, dim, backend, params, unused_params, side,
                 notes, derivation_claim, centroid_claim):
        self.id = id
        self.kind = kind
        self.dim = dim
        self.backend = backend
        self.params = params
        self.unused_params = unused_params
        self.side = side
        self.notes = notes
        self.derivation_claim = derivation_claim
        self.centroid_claim = centroid_claim

    def __repr__(self):
        return "CatalogEntry(%r, %s, n=%d, %s)" % (
            self.id, self.kind, self.dim, self.backend)


class Satellite:
    """A worked example of one of the sibling structures.

    `ops` maps operation names to tables: "prec"/"succ" (dendriform),
    "circ" (zinbiel), "star"+"prec" or "star"+"succ" (dipterous, by side).
    """

    __slots__ = ("name", "kind", "n", "ops", "alpha", "side", "backend")

    def __init__(self, name, kind, n, ops, alpha, side=None):
        self.name = name
        self.kind = kind
        self.n = n
        self.ops = ops
        self.alpha = alpha
        self.side = side
        self.backend = alpha.backend

    def __repr__(self):
        return "Satellite(%r, %s, n=%d)" % (self.name, self.kind, self.n)


def ids():
    """All catalog ids, in table order."""
    return list(catalog_data.DIALGEBRAS) + list(catalog_data.SATELLITES)


def _data_for(entry_id):
    data = catalog_data.DIALGEBRAS.get(entry_id)
    if data is not None:
        return data, "dialgebra"
    data = catalog_data.SATELLITES.get(entry_id)
    if data is not None:
        return data, data["kind"]
    raise KeyError("unknown catalog id: %r (known: %s ...)"
                   % (entry_id, ", ".join(ids()[:4])))


def entry(entry_id):
    data, kind = _data_for(entry_id)
    return CatalogEntry(
        id=entry_id,
        kind=kind,
        dim=data["dim"],
        backend=data["scalars"],
        params=data.get("params", ()),
        unused_params=data.get("unused_params", ()),
        side=data.get("side"),
        notes=data.get("notes"),
        derivation_claim=catalog_data.DERIVATION_CLAIMS.get(entry_id),
        centroid_claim=catalog_data.CENTROID_CLAIMS.get(entry_id),
    )


def entries():
    return [entry(i) for i in ids()]


def _resolve_params(entry_id, data, params):
    declared = data.get("params", ())
    if params is None:
        return {p: 1 for p in declared}
    given = dict(params)
    unknown = sorted(set(given) - set(declared))
    if unknown:
        raise ValueError("unknown parameter(s) for %s: %s"
                         % (entry_id, ", ".join(unknown)))
    missing = [p for p in declared if p not in given]
    if missing:
        raise ValueError("missing parameter(s) for %s: %s"
                         % (entry_id, ", ".join(missing)))
    return given


def _coeff(raw, values, backend):
    if not isinstance(raw, str):
        return scalars.coerce(raw, backend)
    if "*" in raw:
        pname, cname = raw.split("*")
        return (scalars.coerce(values[pname], backend)
                * scalars.coerce(catalog_data.COMPLEX_CONSTANTS[cname], backend))
    if raw in catalog_data.COMPLEX_CONSTANTS:
        return scalars.coerce(catalog_data.COMPLEX_CONSTANTS[raw], backend)
    if raw in values:
        return scalars.coerce(values[raw], backend)
    return scalars.parse_scalar(raw, backend)


def _table(spec, n, values, backend):
    ent = {}
    for (i, j), image in spec.items():
        ent[(i, j)] = {k: _coeff(v, values, backend) for k, v in image.items()}
    return MultTable.from_entries(n, ent, backend)


def _alpha(spec, n, values, backend):
    ent = {}
    for j, image in spec.items():
        ent[j] = {i: _coeff(v, values, backend) for i, v in image.items()}
    return LinearMap.from_entries(n, ent, backend)


def get(entry_id, params=None):
    """Instantiate a catalog entry.

    Parametric families default every parameter to 1; an explicit `params`
    dict must assign every declared parameter.  Dialgebra ids return a
    HomDialgebra, sibling-structure ids a Satellite.
    """
    data, kind = _data_for(entry_id)
    n = data["dim"]
    backend = data["scalars"]
    values = _resolve_params(entry_id, data, params)
    if kind == "dialgebra":
        return HomDialgebra(entry_id,
                            _table(data["left"], n, values, backend),
                            _table(data["right"], n, values, backend),
                            _alpha(data["alpha"], n, values, backend))
    ops = {}
    for role in ("prec", "succ", "circ", "star"):
        if role in data:
            ops[role] = _table(data[role], n, values, backend)
    return Satellite(entry_id, kind, n, ops,
                     _alpha(data["alpha"], n, values, backend),
                     side=data.get("side"))


def check_satellite(sat, eps=scalars.EPS):
    """Dispatch to the defining identities of the satellite's kind."""
    if sat.kind == "dendriform":
        return check_dendriform(sat.ops["prec"], sat.ops["succ"], sat.alpha,
                                eps=eps)
    if sat.kind == "zinbiel":
        return check_zinbiel(sat.ops["circ"], sat.alpha, eps=eps)
    if sat.kind == "dipterous":
        other = sat.ops["succ" if sat.side == LEFT else "prec"]
        return check_dipterous(sat.ops["star"], other, sat.alpha, sat.side,
                               eps=eps)
    raise ValueError("no identity checker for kind %r" % sat.kind)


# ----------------------------------------------------------------------
# printed-pattern handling
# ----------------------------------------------------------------------

_CELL = re.compile(r"^(-)?(\d+(?:/\d+)?)?\*?([a-z]\d+)$")


def pattern_generators(pattern, backend):
    """Spanning maps of a printed matrix pattern.

    The pattern is row-per-input; the returned LinearMaps are column-per-
    input (transposed).  One generator per distinct symbol: that symbol set
    to 1, all others 0.  Cells that are not (signed, optionally rationally
    scaled) multiples of a single symbol raise PatternError.
    """
    n = len(pattern)
    cells = {}
    symbols = []
    for i, row in enumerate(pattern):
        for j, cell in enumerate(row):
            if cell == 0:
                continue
            m = _CELL.match(str(cell).replace(" ", ""))
            if m is None:
                raise PatternError("cell %r is not linear in one symbol" % (cell,))
            sign, coeff, sym = m.groups()
            c = scalars.parse_scalar(coeff, backend) if coeff else scalars.one(backend)
            if sign:
                c = -c
            cells[(i, j)] = (c, sym)
            if sym not in symbols:
                symbols.append(sym)
    gens = []
    for sym in symbols:
        mat = [[scalars.zero(backend)] * n for _ in range(n)]
        for (i, j), (c, s) in cells.items():
            if s == sym:
                mat[j][i] = c
        gens.append((sym, LinearMap(n, mat, backend)))
    return gens


def _claim_result(claim, space, backend, eps):
    """Compare a printed claim against a computed solution space."""
    out = {"printed_dim": claim["dim"], "computed_dim": space.dim,
           "dim_match": claim["dim"] == space.dim,
           "generators_in_space": None, "outside_symbols": []}
    if claim.get("nonlinear"):
        out["nonlinear"] = True
        return out
    try:
        gens = pattern_generators(claim["pattern"], backend)
    except PatternError as exc:
        out["nonlinear"] = True
        out["pattern_error"] = str(exc)
        return out
    outside = [sym for sym, g in gens
               if not in_span(space, [g.m[i][j] for i in range(g.n)
                                      for j in range(g.n)], backend, eps)]
    out["generators_in_space"] = not outside
    out["outside_symbols"] = outside
    return out


# ----------------------------------------------------------------------
# verification report
# ----------------------------------------------------------------------

def _violations_json(record, cap=10):
    out = []
    for idx, res in record.violations[:cap]:
        out.append({"at": list(idx),
                    "residual": [scalars.format_scalar(c) for c in res.coords]})
    return out


def _axioms_json(report, cap=10):
    return [{"id": rec.id, "pass": rec.passed,
             "violations": _violations_json(rec, cap),
             "violation_count": len(rec.violations)}
            for rec in report.records]


def _fixed_basis_indices(A, eps):
    out = []
    for j in range(1, A.n + 1):
        col = A.alpha.column(j)
        want = Vector.basis(j, A.n, A.backend)
        if (col - want).is_zero(eps):
            out.append(j)
    return out


def _inner_audit(A, eps):
    """For every alpha-fixed basis vector, check that the side
    multiplication maps are derivations one exponent up."""
    out = []
    for j in _fixed_basis_indices(A, eps):
        f = Vector.basis(j, A.n, A.backend)
        for side in (LEFT, RIGHT):
            rep = is_derivation(A, inner_map(A, f, 1, side), 2, eps)
            out.append({"fixed_basis": j, "side": side, "pass": rep.ok})
    return out


def verify_dialgebra_entry(entry_id, params=None, eps=scalars.EPS, sweep=True):
    meta = entry(entry_id)
    A = get(entry_id, params)
    ax = check_dialgebra(A, eps)
    mult = check_multiplicativity(A, eps)
    der = derivation_space(A, 1, eps)
    cent = centroid(A, FULL, eps)
    fp = fingerprint(A, eps)
    result = {
        "id": entry_id,
        "kind": "dialgebra",
        "dim": meta.dim,
        "scalars": meta.backend,
        "axioms": _axioms_json(ax),
        "multiplicative": mult.ok,
        "der_dim": der.dim,
        "der_dim_paper": None,
        "cent_dim_linear": cent.dim_linear,
        "cent_dim_full_closed": cent.dim_full_closed,
        "cent_dim_paper": None,
        "discrepancies": [],
        "fingerprint": fp.as_dict(),
        "inner_audit": _inner_audit(A, eps),
    }
    disc = result["discrepancies"]
    if not ax.ok:
        disc.append({"kind": "axiom_failure",
                     "identities": [r.id for r in ax.records if not r.passed]})
    if not mult.ok:
        disc.append({"kind": "multiplicativity_failure"})
    if meta.derivation_claim is not None:
        cr = _claim_result(meta.derivation_claim, der, A.backend, eps)
        result["der_dim_paper"] = cr["printed_dim"]
        result["der_claim"] = cr
        if not cr["dim_match"]:
            disc.append({"kind": "der_dim_mismatch",
                         "computed": cr["computed_dim"],
                         "printed": cr["printed_dim"]})
        if cr["outside_symbols"]:
            disc.append({"kind": "der_generator_outside_space",
                         "symbols": cr["outside_symbols"]})
    if meta.centroid_claim is not None:
        cr = _claim_result(meta.centroid_claim, cent.linear_space, A.backend, eps)
        result["cent_dim_paper"] = cr["printed_dim"]
        result["cent_claim"] = cr
        if not cr["dim_match"]:
            disc.append({"kind": "cent_dim_mismatch",
                         "computed": cr["computed_dim"],
                         "printed": cr["printed_dim"]})
        if cr.get("nonlinear"):
            disc.append({"kind": "cent_pattern_nonlinear"})
        if cr["outside_symbols"]:
            disc.append({"kind": "cent_generator_outside_space",
                         "symbols": cr["outside_symbols"]})
    if not cent.closed:
        disc.append({"kind": "centroid_not_closed",
                     "constraints": len(cent.constraints)})
    if meta.params and sweep:
        result["sweep"] = param_sweep(entry_id, eps=eps)
    return result


def verify_satellite_entry(entry_id, eps=scalars.EPS):
    meta = entry(entry_id)
    sat = get(entry_id)
    ax = check_satellite(sat, eps)
    mult = check_table_multiplicativity(sorted(sat.ops.items()), sat.alpha, eps)
    result = {
        "id": entry_id,
        "kind": meta.kind,
        "dim": meta.dim,
        "scalars": meta.backend,
        "axioms": _axioms_json(ax),
        "multiplicative": mult.ok,
        "der_dim": None,
        "der_dim_paper": None,
        "cent_dim_linear": None,
        "cent_dim_full_closed": None,
        "cent_dim_paper": None,
        "discrepancies": [],
        "fingerprint": None,
    }
    if not ax.ok:
        result["discrepancies"].append(
            {"kind": "identity_failure",
             "identities": [r.id for r in ax.records if not r.passed]})
    return result


def verify_entry(entry_id, params=None, eps=scalars.EPS, sweep=True):
    _, kind = _data_for(entry_id)
    if kind == "dialgebra":
        return verify_dialgebra_entry(entry_id, params, eps, sweep)
    return verify_satellite_entry(entry_id, eps)


def param_sweep(entry_id, values=SWEEP_VALUES, eps=scalars.EPS):
    """Axiom/multiplicativity status of a parametric family with every
    parameter set to each of the given constants in turn."""
    data, kind = _data_for(entry_id)
    declared = data.get("params", ())
    out = {}
    for v in values:
        inst = get(entry_id, {p: v for p in declared})
        if kind == "dialgebra":
            ok = check_dialgebra(inst, eps).ok
            mult = check_multiplicativity(inst, eps).ok
        else:
            ok = check_satellite(inst, eps).ok
            mult = check_table_multiplicativity(sorted(inst.ops.items()),
                                                inst.alpha, eps).ok
        out[str(v)] = {"axioms_pass": ok, "multiplicative": mult}
    return out


def _range_audit(results):
    """Computed min/max dimensions per dimension class, against the printed
    ranges.  Recorded, never asserted."""
    audit = []
    for dim_class in sorted(catalog_data.DERIVATION_RANGE_CLAIMS):
        ders = [r["der_dim"] for r in results
                if r["kind"] == "dialgebra" and r["dim"] == dim_class]
        cents = [r["cent_dim_linear"] for r in results
                 if r["kind"] == "dialgebra" and r["dim"] == dim_class]
        drange = catalog_data.DERIVATION_RANGE_CLAIMS[dim_class]
        crange = catalog_data.CENTROID_RANGE_CLAIMS[dim_class]
        audit.append({
            "dim": dim_class,
            "der": {"computed_min": min(ders), "computed_max": max(ders),
                    "printed_low": drange[0], "printed_high": drange[1],
                    "within": drange[0] <= min(ders) and max(ders) <= drange[1]},
            "cent": {"computed_min": min(cents), "computed_max": max(cents),
                     "printed_low": crange[0], "printed_high": crange[1],
                     "within": crange[0] <= min(cents) and max(cents) <= crange[1]},
        })
    return audit


class VerificationReport:

    __slots__ = ("results", "ranges", "elapsed")

    def __init__(self, results, ranges, elapsed):
        self.results = results
        self.ranges = ranges
        self.elapsed = elapsed

    def result(self, entry_id):
        for r in self.results:
            if r["id"] == entry_id:
                return r
        raise KeyError(entry_id)

    @property
    def discrepancy_count(self):
        return sum(len(r["discrepancies"]) for r in self.results)

    def as_dict(self):
        return {"entries": self.results, "ranges": self.ranges,
                "entry_count": len(self.results),
                "discrepancy_count": self.discrepancy_count}

    def __repr__(self):
        return ("VerificationReport(%d entries, %d discrepancies, %.2fs)"
                % (len(self.results), self.discrepancy_count, self.elapsed))


def verify_all(eps=scalars.EPS, sweep=True, param_overrides=None):
    """Verify the whole catalog.  `param_overrides` maps parameter names to
    scalar strings; each override applies to every entry declaring that
    parameter (others keep the default value 1)."""
    t0 = time.monotonic()
    results = []
    for i in ids():
        params = None
        if param_overrides:
            meta = entry(i)
            if meta.kind == "dialgebra" and meta.params:
                params = {p: (scalars.parse_scalar(param_overrides[p],
                                                   meta.backend)
                              if p in param_overrides else 1)
                          for p in meta.params}
        results.append(verify_entry(i, params=params, eps=eps, sweep=sweep))
    ranges = _range_audit(results)
    return VerificationReport(results, ranges, time.monotonic() - t0)
