"""JSON formats for arrangements, flat tables and multinets."""

from __future__ import annotations

import json
from fractions import Fraction
from math import lcm
from pathlib import Path

from .arrangement import Arrangement, ArrangementError, Hyperplane, require_valid
from .cyclotomic import CycElem, totient
from .multinet import Multinet


def arrangement_to_json(arr: Arrangement) -> dict:
    hyps = []
    for h in arr.hyperplanes:
        coeffs = [c for x in h.normal for c in x.coeffs]
        # normals are only defined up to scaling; clear denominators
        den = lcm(*(Fraction(c).denominator for c in coeffs)) if coeffs else 1
        hyps.append({"label": h.label,
                     "normal": [[int(Fraction(c) * den) for c in x.coeffs] for x in h.normal]})
    out = {"cyclotomic_order": arr.cyclotomic_order, "ambient_dim": arr.ambient_dim,
           "hyperplanes": hyps}
    if arr.family:
        out["family"] = arr.family
    return out


def arrangement_from_json(data: dict, validate: bool = True) -> Arrangement:
    try:
        m = int(data["cyclotomic_order"])
        l = int(data["ambient_dim"])
        raw = data["hyperplanes"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ArrangementError(f"malformed arrangement JSON: {exc}") from None
    if m < 1 or l < 1:
        raise ArrangementError("cyclotomic_order and ambient_dim must be >= 1")
    phi = totient(m)
    hyps = []
    for k, entry in enumerate(raw):
        label = entry.get("label", f"H{k + 1}")
        normal = entry.get("normal")
        if not isinstance(normal, list) or len(normal) != l:
            raise ArrangementError(f"{label}: normal must be a list of length {l}")
        vec = []
        for x in normal:
            if isinstance(x, int):
                x = [x]
            if not isinstance(x, list) or len(x) != phi or not all(isinstance(c, int) for c in x):
                raise ArrangementError(
                    f"{label}: each entry must be a list of {phi} integers (power basis mod Phi_{m})")
            vec.append(CycElem(m, x))
        hyps.append(Hyperplane(label, tuple(vec)))
    # reflection metadata is honoured only for catalog-built arrangements
    arr = Arrangement(l, m, tuple(hyps), family=data.get("family"), is_reflection=False)
    if validate:
        require_valid(arr)
    return arr


def load_arrangement(path: str | Path) -> Arrangement:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ArrangementError(f"{path}: not valid JSON ({exc})") from None
    return arrangement_from_json(data)


def save_arrangement(arr: Arrangement, path: str | Path) -> None:
    with open(path, "w") as fh:
        json.dump(arrangement_to_json(arr), fh, indent=1)
        fh.write("\n")


def load_multinet(path: str | Path) -> Multinet:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: not valid JSON ({exc})") from None
    if not isinstance(data, dict) or not isinstance(data.get("blocks"), list):
        raise ValueError(f"{path}: multinet JSON needs a 'blocks' list")
    return Multinet.from_json(data)


def save_multinet(net: Multinet, path: str | Path) -> None:
    with open(path, "w") as fh:
        json.dump(net.to_json(), fh, indent=1)
        fh.write("\n")
