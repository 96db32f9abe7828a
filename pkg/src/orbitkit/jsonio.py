"""Loading and saving the JSON file formats.

Formats (all keys are strings in files, identifiers are integers):

* group:          {"order": n, "mult": [[...]]}
                  or {"degree": d, "generators": [[...], ...]}
* G-set:          {"size": n, "action": {"g": [perm], ...}}
* G-sset:         {"dims": N, "simplices": {"n": [ids]},
                   "faces": {"id": [[base, word], ...]},
                   "action": {"g": {"id": id'}}}
* simplicial map: {"source": <sset|builtin name>, "target": <...>,
                   "values": {"id": [base, word]}}
* chain complex:  {"ring": "Z"|"Q"|"Fp:p", "ranks": [...],
                   "d": {"n": [[..]]}, "rep": {"g": {"n": [[..]]}}}
* family file:    [[members], ...]

Errors carry the first offending field so the CLI can report it.
"""

from __future__ import annotations

import json
from pathlib import Path

from .chains import ChainComplex
from .exactla import Mat
from .groups import Group, Subgroup, all_subgroups, make_group, subgroup, \
    trivial_subgroup
from .gsets import GSet, make_gset
from .rings import ring_from_tag
from .simplicial import GSSet, SMap, build_sset, make_smap


class InputError(ValueError):
    """Invalid input file; the message names the first invalid field."""


def _load_json(path) -> object:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}")


def load_group(source) -> Group:
    data = _load_json(source) if isinstance(source, (str, Path)) else source
    if not isinstance(data, dict):
        raise InputError("group: expected an object with 'mult' or 'generators'")
    try:
        return make_group(data)
    except ValueError as exc:
        raise InputError(f"group: {exc}")


def load_family(selector, group: Group) -> list[Subgroup]:
    """Family selector: "all", "trivial", or a JSON file of member lists."""
    if selector in (None, "trivial"):
        return [trivial_subgroup(group)]
    if selector == "all":
        return all_subgroups(group)
    data = _load_json(selector) if isinstance(selector, (str, Path)) else selector
    if not isinstance(data, list):
        raise InputError("family: expected a list of member lists")
    out = []
    for i, members in enumerate(data):
        try:
            out.append(subgroup(group, members))
        except ValueError as exc:
            raise InputError(f"family[{i}]: {exc}")
    return out


def load_gset(source, group: Group) -> GSet:
    data = _load_json(source) if isinstance(source, (str, Path)) else source
    if "action" not in data or "size" not in data:
        raise InputError("gset: needs 'size' and 'action'")
    size = data["size"]
    perms = {}
    for g_str, perm in data["action"].items():
        perms[int(g_str)] = perm
    for g in group.elements():
        if g not in perms:
            if g == 0:
                perms[0] = list(range(size))
            else:
                raise InputError(f"gset: action missing element {g}")
        if len(perms[g]) != size:
            raise InputError(f"gset: action of {g} has wrong length")
    try:
        return make_gset(group, perms)
    except ValueError as exc:
        raise InputError(f"gset: {exc}")


def gset_to_json(x: GSet) -> dict:
    return {"size": x.size,
            "action": {str(g): list(x.act[g]) for g in x.group.elements()}}


def is_gset_data(data) -> bool:
    return isinstance(data, dict) and "size" in data and "simplices" not in data


_BUILTIN_SSET = ("point", "empty", "delta:", "boundary:")


def load_sset(source, group: Group | None = None) -> GSSet:
    if isinstance(source, str) and (source in _BUILTIN_SSET
                                    or source.startswith(_BUILTIN_SSET)):
        return build_sset(source, group)
    data = _load_json(source) if isinstance(source, (str, Path)) else source
    try:
        return build_sset(data, group)
    except ValueError as exc:
        raise InputError(f"sset: {exc}")


def load_smap(source, group: Group | None = None) -> SMap:
    data = _load_json(source) if isinstance(source, (str, Path)) else source
    if not isinstance(data, dict) or "values" not in data:
        raise InputError("map: needs 'values'")
    if "source" not in data or "target" not in data:
        raise InputError("map: needs inline 'source' and 'target' simplicial sets")
    src = load_sset(data["source"], group)
    tgt = load_sset(data["target"], group)
    values = {}
    for id_str, ref in data["values"].items():
        if isinstance(ref, int):
            values[int(id_str)] = ref
        else:
            values[int(id_str)] = (ref[0], tuple(ref[1]))
    try:
        return make_smap(src, tgt, values)
    except ValueError as exc:
        raise InputError(f"map: {exc}")


def load_chain_complex(source, group: Group | None = None) -> ChainComplex:
    data = _load_json(source) if isinstance(source, (str, Path)) else source
    if "ring" not in data or "ranks" not in data:
        raise InputError("chain complex: needs 'ring' and 'ranks'")
    try:
        ring = ring_from_tag(data["ring"])
    except ValueError as exc:
        raise InputError(f"chain complex: {exc}")
    ranks = [int(r) for r in data["ranks"]]
    diffs = {}
    for n_str, rows in data.get("d", {}).items():
        n = int(n_str)
        if not 1 <= n <= len(ranks) - 1:
            raise InputError(f"chain complex: differential in illegal degree {n}")
        diffs[n] = Mat(ring, ranks[n - 1], ranks[n], rows)
    rep = None
    if "rep" in data:
        if group is None:
            raise InputError("chain complex: a representation needs a group")
        rep = {}
        for g_str, mats in data["rep"].items():
            rep[int(g_str)] = {int(n): Mat(ring, ranks[int(n)], ranks[int(n)], rows)
                               for n, rows in mats.items()}
        for g in group.elements():
            if g not in rep:
                rep[g] = {n: Mat.identity(ring, ranks[n]) for n in range(len(ranks))}
    try:
        return ChainComplex(ring, ranks, diffs,
                            group=group if rep is not None else None, rep=rep)
    except ValueError as exc:
        raise InputError(f"chain complex: {exc}")


def format_homology(groups, ring_name: str = "Z") -> str:
    return ", ".join(f"H{h.degree}={h.text(ring_name)}" for h in groups)
