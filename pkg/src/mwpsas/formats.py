"""Line-oriented text formats.

Instance (``MWPSAS 1``)::

    MWPSAS 1
    N 2
    M 1
    m 1
    NP 1 1
    MP 1
    A 1 1 1
    A 2 1 1

``A <i> <k> <j1> .. <jk>`` appears exactly once per N-id, ids ascending.
Partition (``PARTITION 1``), graph (``GRAPH 1``), 3-partition input
(``PART3 1``) and decision sidecar (``DECISION 1``) files follow the same
pattern.  ``#`` starts a comment.  Writers are deterministic, so output is
byte-identical for equal inputs.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import DigestMismatchError, FormatSyntaxError
from .model import Instance, Partition, validate_instance
from .reductions import DecisionInstance, Graph, Part3Instance


def _lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, line in enumerate(text.splitlines(), 1):
        tokens = line.split("#", 1)[0].split()
        if tokens:
            yield lineno, tokens


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatSyntaxError(f"expected an integer, got {tok!r}", lineno) from None


def _header(lines: list[tuple[int, list[str]]], magic: str) -> None:
    if not lines:
        raise FormatSyntaxError(f"empty file, expected '{magic} 1' header")
    lineno, tokens = lines[0]
    if tokens != [magic, "1"]:
        raise FormatSyntaxError(f"expected '{magic} 1' header", lineno)


def _scalar(seen: dict, key: str, lineno: int, tokens: list[str]) -> None:
    if key in seen:
        raise FormatSyntaxError(f"duplicate '{key}' line", lineno)
    if len(tokens) != 2:
        raise FormatSyntaxError(f"'{key}' takes exactly one value", lineno)
    seen[key] = _int(tokens[1], lineno)


def _need(seen: dict, keys: tuple[str, ...]) -> None:
    for key in keys:
        if key not in seen:
            raise FormatSyntaxError(f"missing '{key}' line")


# -- instances ---------------------------------------------------------------

def instance_digest(inst: Instance) -> str:
    """sha256 of the canonical text form."""
    return hashlib.sha256(write_instance(inst).encode()).hexdigest()


def write_instance(inst: Instance) -> str:
    out = [
        "MWPSAS 1",
        f"N {inst.n_count}",
        f"M {inst.m_count}",
        f"m {inst.machines}",
        "NP " + " ".join(map(str, inst.n_weights)),
        "MP " + " ".join(map(str, inst.m_weights)),
    ]
    for i in inst.n_ids:
        js = sorted(inst.assoc_of(i))
        out.append(" ".join(map(str, ["A", i, len(js), *js])))
    return "\n".join(out) + "\n"


def parse_instance(text: str) -> Instance:
    """Parse and validate an ``MWPSAS 1`` file.

    Structural problems raise FormatSyntaxError with the line number;
    semantic ones come from :func:`validate_instance`.
    """
    lines = list(_lines(text))
    _header(lines, "MWPSAS")
    seen: dict = {}
    assoc: dict[int, frozenset[int]] = {}
    for lineno, tokens in lines[1:]:
        key = tokens[0]
        if key in ("N", "M", "m"):
            _scalar(seen, key, lineno, tokens)
        elif key in ("NP", "MP"):
            if key in seen:
                raise FormatSyntaxError(f"duplicate '{key}' line", lineno)
            seen[key] = (lineno, [_int(t, lineno) for t in tokens[1:]])
        elif key == "A":
            if len(tokens) < 3:
                raise FormatSyntaxError("'A' needs an id and a count", lineno)
            i, k = _int(tokens[1], lineno), _int(tokens[2], lineno)
            if i in assoc:
                raise FormatSyntaxError(f"duplicate 'A' line for N-id {i}", lineno)
            if assoc and i < max(assoc):
                raise FormatSyntaxError(f"'A' lines must have ascending ids, got {i}", lineno)
            js = [_int(t, lineno) for t in tokens[3:]]
            if len(js) != k:
                raise FormatSyntaxError(f"'A {i}' declares {k} ids but lists {len(js)}", lineno)
            if len(set(js)) != len(js):
                raise FormatSyntaxError(f"'A {i}' repeats an M-id", lineno)
            assoc[i] = frozenset(js)
        else:
            raise FormatSyntaxError(f"unknown key {key!r}", lineno)
    _need(seen, ("N", "M", "m", "NP", "MP"))
    n, m_count = seen["N"], seen["M"]
    for key, size in (("NP", n), ("MP", m_count)):
        lineno, values = seen[key]
        if len(values) != size:
            raise FormatSyntaxError(f"'{key}' lists {len(values)} weights, expected {size}", lineno)
    if sorted(assoc) != list(range(1, n + 1)):
        raise FormatSyntaxError(f"need exactly one 'A' line for each N-id 1..{n}")
    inst = Instance(
        n_count=n,
        m_count=m_count,
        machines=seen["m"],
        n_weights=tuple(seen["NP"][1]),
        m_weights=tuple(seen["MP"][1]),
        assoc=tuple(assoc[i] for i in range(1, n + 1)),
    )
    return validate_instance(inst)


# -- partitions --------------------------------------------------------------

def write_partition(part: Partition, digest: Optional[str] = None) -> str:
    out = ["PARTITION 1"]
    if digest is not None:
        out.append(f"DIGEST {digest}")
    for e, block in enumerate(part.blocks, 1):
        out.append(" ".join(map(str, ["S", e, *sorted(block)])))
    return "\n".join(out) + "\n"


def parse_partition_with_digest(text: str) -> tuple[Partition, Optional[str]]:
    lines = list(_lines(text))
    _header(lines, "PARTITION")
    digest = None
    blocks = []
    for lineno, tokens in lines[1:]:
        key = tokens[0]
        if key == "DIGEST":
            if digest is not None or blocks:
                raise FormatSyntaxError("'DIGEST' must appear once, before the blocks", lineno)
            if len(tokens) != 2:
                raise FormatSyntaxError("'DIGEST' takes one hex value", lineno)
            digest = tokens[1].lower()
        elif key == "S":
            if len(tokens) < 2:
                raise FormatSyntaxError("'S' needs a block index", lineno)
            e = _int(tokens[1], lineno)
            if e != len(blocks) + 1:
                raise FormatSyntaxError(f"expected block {len(blocks) + 1}, got {e}", lineno)
            ids = [_int(t, lineno) for t in tokens[2:]]
            if len(set(ids)) != len(ids):
                raise FormatSyntaxError(f"block {e} repeats an id", lineno)
            blocks.append(frozenset(ids))
        else:
            raise FormatSyntaxError(f"unknown key {key!r}", lineno)
    return Partition(tuple(blocks)), digest


def parse_partition(text: str, instance: Optional[Instance] = None) -> Partition:
    """Parse a partition; when ``instance`` is given, a DIGEST line must match it."""
    part, digest = parse_partition_with_digest(text)
    if instance is not None and digest is not None:
        actual = instance_digest(instance)
        if digest != actual:
            raise DigestMismatchError(f"partition names instance {digest}, got {actual}")
    return part


# -- graphs ------------------------------------------------------------------

def write_graph(g: Graph) -> str:
    out = ["GRAPH 1", f"V {g.node_count}"]
    out += [f"E {u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(out) + "\n"


def parse_graph(text: str) -> Graph:
    lines = list(_lines(text))
    _header(lines, "GRAPH")
    seen: dict = {}
    edges = []
    for lineno, tokens in lines[1:]:
        key = tokens[0]
        if key == "V":
            _scalar(seen, "V", lineno, tokens)
        elif key == "E":
            if len(tokens) != 3:
                raise FormatSyntaxError("'E' takes two node ids", lineno)
            u, v = _int(tokens[1], lineno), _int(tokens[2], lineno)
            if not u < v:
                raise FormatSyntaxError(f"edge ({u}, {v}) must have u < v", lineno)
            if (u, v) in edges:
                raise FormatSyntaxError(f"duplicate edge ({u}, {v})", lineno)
            edges.append((u, v))
        else:
            raise FormatSyntaxError(f"unknown key {key!r}", lineno)
    _need(seen, ("V",))
    n = seen["V"]
    for u, v in edges:
        if u < 1 or v > n:
            raise FormatSyntaxError(f"edge ({u}, {v}) outside nodes 1..{n}")
    return Graph(n, frozenset(edges))


# -- 3-partition inputs ------------------------------------------------------

def write_part3(p3: Part3Instance) -> str:
    return "\n".join(["PART3 1", f"r {p3.r}", f"B {p3.b}", "a " + " ".join(map(str, p3.a))]) + "\n"


def parse_part3(text: str) -> Part3Instance:
    """Structural parse only; value constraints are checked by the reductions."""
    lines = list(_lines(text))
    _header(lines, "PART3")
    seen: dict = {}
    for lineno, tokens in lines[1:]:
        key = tokens[0]
        if key in ("r", "B"):
            _scalar(seen, key, lineno, tokens)
        elif key == "a":
            if "a" in seen:
                raise FormatSyntaxError("duplicate 'a' line", lineno)
            seen["a"] = tuple(_int(t, lineno) for t in tokens[1:])
        else:
            raise FormatSyntaxError(f"unknown key {key!r}", lineno)
    _need(seen, ("r", "B", "a"))
    return Part3Instance(seen["r"], seen["B"], seen["a"])


# -- decision sidecar --------------------------------------------------------

@dataclass(frozen=True)
class DecisionSidecar:
    digest: str
    target: int
    n_roles: tuple[str, ...]
    m_roles: tuple[str, ...]


def write_decision(dec: DecisionInstance) -> str:
    """Target C and role labels, tied to the instance by digest."""
    out = ["DECISION 1", f"DIGEST {instance_digest(dec.instance)}", f"C {dec.target}"]
    out += [f"NROLE {i} {label}" for i, label in enumerate(dec.n_roles, 1)]
    out += [f"MROLE {j} {label}" for j, label in enumerate(dec.m_roles, 1)]
    return "\n".join(out) + "\n"


def parse_decision(text: str) -> DecisionSidecar:
    lines = list(_lines(text))
    _header(lines, "DECISION")
    seen: dict = {}
    roles: dict[str, list[str]] = {"NROLE": [], "MROLE": []}
    for lineno, tokens in lines[1:]:
        key = tokens[0]
        if key == "C":
            _scalar(seen, "C", lineno, tokens)
        elif key == "DIGEST":
            if "DIGEST" in seen or len(tokens) != 2:
                raise FormatSyntaxError("'DIGEST' must appear once with one value", lineno)
            seen["DIGEST"] = tokens[1].lower()
        elif key in roles:
            if len(tokens) != 3:
                raise FormatSyntaxError(f"'{key}' takes an id and a label", lineno)
            idx = _int(tokens[1], lineno)
            if idx != len(roles[key]) + 1:
                raise FormatSyntaxError(f"expected {key} {len(roles[key]) + 1}, got {idx}", lineno)
            roles[key].append(tokens[2])
        else:
            raise FormatSyntaxError(f"unknown key {key!r}", lineno)
    _need(seen, ("DIGEST", "C"))
    return DecisionSidecar(seen["DIGEST"], seen["C"], tuple(roles["NROLE"]), tuple(roles["MROLE"]))


def read_decision_instance(instance_text: str, decision_text: str) -> DecisionInstance:
    inst = parse_instance(instance_text)
    side = parse_decision(decision_text)
    if side.digest != instance_digest(inst):
        raise DigestMismatchError("decision file does not belong to this instance")
    return DecisionInstance(inst, side.target, side.n_roles, side.m_roles)
