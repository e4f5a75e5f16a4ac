"""JSON problem and solution files. Complex numbers are ``[re, im]`` pairs."""
from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Any, Optional

from .beamforming import BeamProblem, Method, PhaseSet, Solution


class ProblemFormatError(ValueError):
    """Malformed problem file; the message names the offending line or field."""


def _pair(value: Any, where: str) -> complex:
    if (
        not isinstance(value, (list, tuple))
        or len(value) != 2
        or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in value)
    ):
        raise ProblemFormatError(f"{where}: expected [re, im] pair, got {value!r}")
    re, im = float(value[0]), float(value[1])
    if not (math.isfinite(re) and math.isfinite(im)):
        raise ProblemFormatError(f"{where}: non-finite number")
    return complex(re, im)


def _unpair(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


def problem_from_dict(doc: Any) -> BeamProblem:
    if not isinstance(doc, dict):
        raise ProblemFormatError("top level: expected a JSON object")
    if "channels" not in doc:
        raise ProblemFormatError("channels: missing")
    raw_channels = doc["channels"]
    if not isinstance(raw_channels, list) or not raw_channels:
        raise ProblemFormatError("channels: expected a nonempty list")
    channels = [_pair(c, f"channels[{i}]") for i, c in enumerate(raw_channels)]
    h0 = _pair(doc["h0"], "h0") if doc.get("h0") is not None else 0j

    raw_sets = doc.get("phase_sets")
    if isinstance(raw_sets, dict) and "psk" in raw_sets:
        m = raw_sets["psk"].get("M") if isinstance(raw_sets["psk"], dict) else None
        if not isinstance(m, int) or isinstance(m, bool) or m < 1:
            raise ProblemFormatError("phase_sets.psk.M: expected a positive integer")
        phase_sets = [PhaseSet.psk(m)] * len(channels)
    elif isinstance(raw_sets, list):
        phase_sets = []
        for i, entry in enumerate(raw_sets):
            where = f"phase_sets[{i}]"
            if not isinstance(entry, dict) or "elements" not in entry:
                raise ProblemFormatError(f"{where}: expected an object with 'elements'")
            elems = entry["elements"]
            if not isinstance(elems, list) or not elems:
                raise ProblemFormatError(f"{where}.elements: expected a nonempty list")
            label = entry.get("label")
            if label is not None and not isinstance(label, str):
                raise ProblemFormatError(f"{where}.label: expected a string")
            phase_sets.append(
                PhaseSet(tuple(_pair(e, f"{where}.elements[{j}]") for j, e in enumerate(elems)), label)
            )
        if len(phase_sets) != len(channels):
            raise ProblemFormatError(
                f"phase_sets: {len(phase_sets)} entries for {len(channels)} channels"
            )
    else:
        raise ProblemFormatError("phase_sets: expected a list or {\"psk\": {\"M\": int}}")

    ris = doc.get("ris_mode", False)
    if not isinstance(ris, bool):
        raise ProblemFormatError("ris_mode: expected true or false")
    return BeamProblem(tuple(channels), tuple(phase_sets), h0, ris)


def problem_to_dict(problem: BeamProblem) -> dict:
    sets = []
    for ps in problem.phase_sets:
        entry: dict = {"elements": [_unpair(e) for e in ps.elements]}
        if ps.label is not None:
            entry = {"label": ps.label, **entry}
        sets.append(entry)
    doc: dict = {}
    if problem.direct_gain != 0:
        doc["h0"] = _unpair(problem.direct_gain)
    doc["channels"] = [_unpair(h) for h in problem.channels]
    doc["phase_sets"] = sets
    doc["ris_mode"] = problem.ris_mode
    return doc


def loads_problem(text: str) -> BeamProblem:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemFormatError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    try:
        return problem_from_dict(doc)
    except ProblemFormatError:
        raise
    except ValueError as exc:
        raise ProblemFormatError(str(exc)) from None


def load_problem(path) -> BeamProblem:
    return loads_problem(Path(path).read_text(encoding="utf-8"))


def dumps_json(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def solution_to_dict(sol: Solution, elapsed_ms: float = 0.0) -> dict:
    return {
        "gain": sol.gain,
        "z_star": _unpair(sol.z_star),
        "weight_indices": list(sol.weight_indices),
        "weights": [_unpair(w) for w in sol.weights],
        "vertex_count": sol.vertex_count,
        "method": Method(sol.method).value,
        "elapsed_ms": elapsed_ms,
    }


def solution_from_dict(doc: dict) -> tuple[Solution, Optional[float]]:
    sol = Solution(
        gain=float(doc["gain"]),
        z_star=_pair(doc["z_star"], "z_star"),
        weight_indices=tuple(int(i) for i in doc["weight_indices"]),
        weights=tuple(_pair(w, f"weights[{i}]") for i, w in enumerate(doc["weights"])),
        vertex_count=int(doc["vertex_count"]),
        method=Method(doc["method"]),
    )
    return sol, doc.get("elapsed_ms")
