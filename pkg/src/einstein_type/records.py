"""Flat key-value text records for profiles, potentials and run configs.

One ``key = value`` pair per line; ``#`` starts a comment; list values are
comma-separated.  Floats are written with ``repr`` so they round-trip.
"""
from __future__ import annotations

import numpy as np
from scipy.interpolate import BSpline

from .warped import CLOSED_FORM, SAMPLED, SAMPLED_SPLINE, RadialField, WarpingProfile


def _format(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple, np.ndarray)):
        return ", ".join(_format(v) for v in np.ravel(value).tolist())
    if isinstance(value, float):
        return repr(value)
    return str(value)


def dump_record(fields: dict, header: str = "einstein-type record") -> str:
    lines = [f"# {header}"]
    for key, value in fields.items():
        if "\n" in str(key) or "=" in str(key):
            raise ValueError(f"invalid record key {key!r}")
        lines.append(f"{key} = {_format(value)}")
    return "\n".join(lines) + "\n"


def parse_record(text: str) -> dict:
    fields = {}
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"line {number}: expected 'key = value', got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if not key:
            raise ValueError(f"line {number}: empty key")
        fields[key] = value
    return fields


def floats(value: str) -> list:
    return [float(v) for v in value.split(",") if v.strip()]


def profile_to_record(profile: WarpingProfile) -> dict:
    rec = {"kind": "warping-profile", "representation": profile.representation,
           "interval": list(profile.interval)}
    p = profile.parameters
    if profile.representation == SAMPLED_SPLINE:
        rec.update(knots=p["knots"], values=p["values"])
        return rec
    rec["tag"] = profile.tag
    if profile.tag == "trigonometric":
        rec.update(base=p["base"], terms=[v for t in p["terms"] for v in t])
    elif profile.tag in ("constant", "linear", "sine", "polynomial"):
        rec.update(p)
    else:
        raise ValueError(f"profile tag {profile.tag!r} is not serializable")
    return rec


def profile_from_record(rec: dict) -> WarpingProfile:
    rep = rec.get("representation")
    if rep == SAMPLED_SPLINE:
        return WarpingProfile.from_samples(floats(rec["knots"]), floats(rec["values"]))
    if rep != CLOSED_FORM:
        raise ValueError(f"unknown profile representation {rep!r}")
    interval = tuple(floats(rec["interval"]))
    tag = rec.get("tag")
    if tag == "constant":
        return WarpingProfile.constant(float(rec["a"]), interval)
    if tag == "linear":
        return WarpingProfile.linear(float(rec["slope"]), float(rec["offset"]), interval)
    if tag == "sine":
        return WarpingProfile.sine(float(rec["amplitude"]), float(rec["frequency"]), interval)
    if tag == "polynomial":
        return WarpingProfile.polynomial(floats(rec["coefficients"]), interval)
    if tag == "trigonometric":
        flat = floats(rec["terms"])
        terms = [tuple(flat[i:i + 3]) for i in range(0, len(flat), 3)]
        return WarpingProfile.trigonometric(float(rec["base"]), terms, interval)
    raise ValueError(f"unknown closed-form profile tag {tag!r}")


def potential_to_record(F: RadialField) -> dict:
    rec = {"kind": "potential", "representation": F.representation, "interval": list(F.interval)}
    if F.representation == SAMPLED and "degree" in F.parameters:
        rec.update(degree=F.parameters["degree"], knots=F.parameters["knots"],
                   coefficients=F.parameters["coefficients"])
        return rec
    if F.representation == CLOSED_FORM and F.tag == "polynomial":
        rec.update(tag="polynomial", coefficients=F.parameters["coefficients"])
        return rec
    raise ValueError(f"potential {F.tag!r} is not serializable")


def potential_from_record(rec: dict) -> RadialField:
    interval = tuple(floats(rec["interval"]))
    rep = rec.get("representation")
    if rep == SAMPLED:
        degree = int(rec["degree"])
        spline = BSpline(np.array(floats(rec["knots"])), np.array(floats(rec["coefficients"])), degree)
        return RadialField.from_bspline(spline, interval)
    if rep == CLOSED_FORM and rec.get("tag") == "polynomial":
        return RadialField.polynomial(floats(rec["coefficients"]), interval)
    raise ValueError(f"unsupported potential record (representation={rep!r})")


def read_record(path) -> dict:
    with open(path, encoding="utf-8") as fh:
        return parse_record(fh.read())
