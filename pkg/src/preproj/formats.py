"""JSON encoding of quivers, weights and modules (schemas in docs/formats.md)."""

from __future__ import annotations

import json
from typing import Any, Mapping

from .linalg import Mat
from .quiver import Arrow, Quiver, _vkey, build_quiver
from .reps import Rep, WreathRep
from .roots import Weight
from .scalars import scalar_from_json, scalar_to_json, to_scalar


class ValidationError(ValueError):
    """Malformed or schema-violating input."""


def _vertex(v):
    if isinstance(v, str):
        try:
            return int(v)
        except ValueError:
            return v
    return v


# -- quivers -----------------------------------------------------------------


def quiver_to_json(q: Quiver) -> dict:
    if q.family != "explicit":
        return {"family": q.family}
    arrows = []
    for a in q.all_arrows():
        entry = {"tail": a.tail, "head": a.head}
        if a.name:
            entry["name"] = a.name
        arrows.append(entry)
    return {"family": "explicit", "vertices": q.vertices(), "arrows": arrows}


def quiver_from_json(data) -> Quiver:
    if isinstance(data, str):
        data = {"family": data}
    if not isinstance(data, Mapping) or "family" not in data:
        raise ValidationError("quiver JSON needs a 'family' field")
    arrows = data.get("arrows", [])
    if not isinstance(arrows, list) or any(not isinstance(a, Mapping) or "tail" not in a or "head" not in a for a in arrows):
        raise ValidationError("quiver arrows must be objects with 'tail' and 'head'")
    try:
        return build_quiver(dict(data))
    except (ValueError, TypeError) as exc:
        raise ValidationError(str(exc)) from exc


def arrow_from_label(q: Quiver, label: str) -> Arrow:
    """Resolve ``a_t_h``, ``astar_t_h`` or an explicit arrow name (``name*`` for duals)."""
    if q.family == "explicit":
        for a in q.all_arrows():
            for x in (a, a.dual()):
                if x.label == label:
                    return x
        raise ValidationError(f"unknown arrow {label!r}")
    parts = label.split("_")
    if len(parts) != 3 or parts[0] not in ("a", "astar"):
        raise ValidationError(f"bad arrow label {label!r}")
    try:
        t, h = int(parts[1]), int(parts[2])
    except ValueError as exc:
        raise ValidationError(f"bad arrow label {label!r}") from exc
    base = Arrow(t, h)
    if not q.has_vertex(t) or base not in q.arrows_at(t):
        raise ValidationError(f"{label!r} is not an arrow of {q!r}")
    return base.dual() if parts[0] == "astar" else base


# -- matrices and weights ----------------------------------------------------------


def matrix_to_json(m: Mat) -> list:
    return [[scalar_to_json(v) for v in row] for row in m.rows]


def matrix_from_json(data, nrows: int, ncols: int) -> Mat:
    if not isinstance(data, list) or len(data) != nrows:
        raise ValidationError(f"expected a matrix with {nrows} rows")
    try:
        rows = [[_scalar(v) for v in row] for row in data]
    except TypeError as exc:
        raise ValidationError(str(exc)) from exc
    if any(len(r) != ncols for r in rows):
        raise ValidationError(f"expected {ncols} columns")
    return Mat(rows, ncols)


def _scalar(v):
    try:
        return scalar_from_json(v) if isinstance(v, list) and len(v) == 4 else to_scalar(v)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise ValidationError(f"bad scalar {v!r}: {exc}") from exc


def weight_to_json(lam: Weight) -> dict:
    return lam.to_json()


def weight_from_json(data) -> Weight:
    try:
        return Weight.from_json(data)
    except (ValueError, TypeError, KeyError, AttributeError, ZeroDivisionError) as exc:
        raise ValidationError(f"bad weight: {exc}") from exc


def parse_weight(text: str) -> Weight:
    """Command-line weights: ``zero``, ``explicit:[-1,1]``, ``explicit:{"0":"1/2"}``,
    ``khare:-4,0`` (coefficients of ``Delta, Delta^2, ...`` in f, so this is
    ``f = -4 Delta``) or a JSON object."""
    text = text.strip()
    try:
        if text == "zero":
            return Weight.zero()
        if text.startswith("explicit:"):
            vals = json.loads(text[len("explicit:") :])
            if isinstance(vals, list):
                return Weight.explicit([_scalar(v) for v in vals])
            if isinstance(vals, dict):
                return Weight.explicit({_vertex(k): _scalar(v) for k, v in vals.items()})
            raise ValidationError("explicit weight must be a list or an object")
        if text.startswith("khare:"):
            from .khare import CasimirPolynomial

            return Weight.khare(CasimirPolynomial.parse(text[len("khare:") :]).coeffs)
        if text.startswith("{"):
            return weight_from_json(json.loads(text))
    except json.JSONDecodeError as exc:
        raise ValidationError(f"bad weight JSON: {exc}") from exc
    except ValidationError:
        raise
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise ValidationError(f"bad weight {text!r}: {exc}") from exc
    raise ValidationError(f"unrecognized weight {text!r}")


# -- modules ---------------------------------------------------------------------


def rep_to_json(M: Rep) -> dict:
    return {
        "quiver": quiver_to_json(M.quiver),
        "dims": {str(k): v for k, v in sorted(M.dims.items(), key=lambda kv: _vkey(kv[0]))},
        "arrows": {x.label: matrix_to_json(m) for x, m in sorted(M.maps.items(), key=lambda kv: kv[0].label)},
    }


def rep_from_json(data: Mapping, quiver: Quiver | None = None) -> Rep:
    if not isinstance(data, Mapping) or "dims" not in data:
        raise ValidationError("Rep JSON needs 'dims'")
    q = quiver or quiver_from_json(data.get("quiver", "A_plus_inf"))
    try:
        dims = {_vertex(k): int(v) for k, v in data["dims"].items()}
    except (AttributeError, TypeError, ValueError) as exc:
        raise ValidationError("dims must map vertices to integers") from exc
    maps = {}
    for label, mat in data.get("arrows", {}).items():
        x = arrow_from_label(q, label)
        maps[x] = matrix_from_json(mat, dims.get(x.target, 0), dims.get(x.source, 0))
    try:
        return Rep(q, dims, maps)
    except ValueError as exc:
        raise ValidationError(str(exc)) from exc


def wreath_to_json(V: WreathRep, lam: Weight | None = None, nu=None) -> dict:
    out: dict[str, Any] = {
        "quiver": quiver_to_json(V.quiver),
        "n": V.n,
        "components": [{"tuple": list(t), "dim": V.dims[t]} for t in V.tuples()],
        "arrows": [
            {"position": l, "arrow": x.label, "tuple": list(t), "matrix": matrix_to_json(m)}
            for (l, x, t), m in sorted(V.arrows.items(), key=lambda kv: (kv[0][0], kv[0][1].label, [_vkey(v) for v in kv[0][2]]))
        ],
        "sigma": [
            {"k": k, "tuple": list(t), "matrix": matrix_to_json(m)}
            for (k, t), m in sorted(V.sigma.items(), key=lambda kv: (kv[0][0], [_vkey(v) for v in kv[0][1]]))
        ],
    }
    if lam is not None:
        out["weight"] = lam.to_json()
    if nu is not None:
        out["nu"] = scalar_to_json(to_scalar(nu))
    return out


def wreath_from_json(data: Mapping) -> tuple[WreathRep, Weight | None, Any]:
    """Parse a module file; also returns its optional ``weight`` and ``nu``.

    Files with ``dims`` instead of ``components`` are read as rank-1 modules.
    """
    if not isinstance(data, Mapping):
        raise ValidationError("module JSON must be an object")
    lam = weight_from_json(data["weight"]) if "weight" in data else None
    nu = _scalar(data["nu"]) if "nu" in data else None
    if "components" not in data:
        return rep_from_json(data).as_wreath(), lam, nu
    q = quiver_from_json(data.get("quiver", "A_plus_inf"))
    try:
        n = int(data["n"])
        comps = {tuple(_vertex(v) for v in c["tuple"]): int(c["dim"]) for c in data["components"]}
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"bad components: {exc}") from exc

    def dim(t):
        return comps.get(t, 0)

    arrows = {}
    for entry in data.get("arrows", []):
        try:
            l = int(entry["position"])
            x = arrow_from_label(q, entry["arrow"])
            t = tuple(_vertex(v) for v in entry["tuple"])
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"bad arrow entry: {exc}") from exc
        if not 0 <= l < n or len(t) != n or t[l] != x.source:
            raise ValidationError(f"arrow entry {entry.get('arrow')} does not fit its tuple")
        tgt = list(t)
        tgt[l] = x.target
        arrows[(l, x, t)] = matrix_from_json(entry["matrix"], dim(tuple(tgt)), dim(t))
    sigma = {}
    for entry in data.get("sigma", []):
        try:
            k = int(entry["k"])
            t = tuple(_vertex(v) for v in entry["tuple"])
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"bad sigma entry: {exc}") from exc
        if not 0 <= k < n - 1 or len(t) != n:
            raise ValidationError(f"sigma entry s_{k} does not fit rank {n}")
        t2 = list(t)
        t2[k], t2[k + 1] = t2[k + 1], t2[k]
        sigma[(k, t)] = matrix_from_json(entry["matrix"], dim(tuple(t2)), dim(t))
    try:
        return WreathRep(q, n, comps, arrows, sigma), lam, nu
    except (ValueError, KeyError) as exc:
        raise ValidationError(str(exc)) from exc
